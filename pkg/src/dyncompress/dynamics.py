"""Orbits, preperiodic point searches, and exact preimage counting.

Once a window f([m]) in [n] with m > n is verified, every integer in [1, m]
is preperiodic, and the full preimage f^(-1)([n]) lands in the intersection
of the preperiodic sets of the shifted maps f, f+1, ..., f+(m-n).  Counting
that preimage exactly (distinct roots per fiber, ramification found through
gcd with the derivative) therefore gives certified lower bounds on common
preperiodic points.  A complementary numerical depth search collects points
with small forward orbits under two maps at once.

Rational orbits are decided exactly: cycle detection by hashing exact values,
escape certified either by a radius beyond which |f(x)| > |x| or by a
denominator leaving the finite set a preperiodic point can have (valuations
below a per-prime threshold strictly decrease under f, so such orbits never
return).  Complex points from the depth search instead use tolerance-ball
revisit detection; the two mechanisms never mix.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import mpmath as mp
from mpmath.libmp.libhyper import NoConvergence

from .compression import CompressionWitness, check_window
from .polynomials import (
    BinomialPoly,
    RationalPoly,
    poly_gcd,
    squarefree_part,
)

Rat = Union[int, Fraction]


class OrbitUndecided(Exception):
    """An orbit exhausted its step budget without cycling or escaping."""


class RootFindingError(Exception):
    """Numerical root finding failed to converge; retry with more precision."""


@dataclass(frozen=True)
class OrbitRecord:
    """Outcome of iterating from one rational start point."""

    start: Fraction
    status: str  # "periodic", "escaped", or "undecided"
    preperiod: Optional[int] = None
    period: Optional[int] = None
    escaped_at: Optional[int] = None
    witness_value: Optional[Fraction] = None


@dataclass(frozen=True)
class PreimageCount:
    """Distinct-root census of f^(-1)([n])."""

    n: int
    per_fiber: tuple[int, ...]
    ramification_deficit: int
    total: int


@dataclass(frozen=True)
class CommonBound:
    """Certified lower bound for common preperiodic points of f, ..., f+(m-n)."""

    count: int
    floor: int


@dataclass(frozen=True)
class DepthSearchReport:
    """Heuristic census of points with small forward orbit under two maps.

    Points are numerical approximations retained by tolerance tests, so the
    count is a well-supported estimate, not a certificate; the heuristic
    flag in the JSON form says so.
    """

    count: int
    points: tuple[tuple[float, float], ...]
    per_level: tuple[int, ...]
    max_pre: int
    max_per: int
    precision_bits: int
    tol: float

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "points": [[re, im] for re, im in self.points],
            "per_level": list(self.per_level),
            "max_pre": self.max_pre,
            "max_per": self.max_per,
            "precision_bits": self.precision_bits,
            "tol": self.tol,
            "heuristic": True,
        }


def escape_radius(f: RationalPoly) -> Fraction:
    """Rational R with |f(x)| > |x| whenever |x| >= R.

    R = max(1, (1 + sum |c_i|, i < d) / |c_d|) + 1.  Beyond R the modulus
    grows by a factor of at least 1 + |lead|, so escape is certified.
    """
    if f.degree < 2:
        raise ValueError("escape radius needs degree >= 2")
    lead = abs(f.leading)
    rest = sum(abs(c) for c in f.coeffs[:-1])
    return max(Fraction(1), (1 + rest) / lead) + 1


def preper_denominator_bound(f: BinomialPoly) -> int:
    """Q such that every rational preperiodic point of f has denominator | Q.

    Write f = G(x)/D with G integral of degree d and leading coefficient a.
    For a prime p and v = v_p(x) < -v_p(a), the leading term dominates
    p-adically, so v_p(f(x)) = v_p(a) - v_p(D) + d*v; that is below v as soon
    as (d-1)*v < v_p(D) - v_p(a).  Once both hold the valuation decreases
    strictly forever and the orbit cannot repeat, so preperiodic points
    satisfy v_p(x) >= min(-v_p(a), ceil((v_p(D) - v_p(a))/(d-1))) at every
    prime, a bound whose product over p | a*D is returned here.
    """
    fm = f.to_monomial()
    d = fm.degree
    if d < 2:
        raise ValueError("denominator bound needs degree >= 2")
    den_lcm = 1
    for c in fm.coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    lead = abs(int(fm.leading * den_lcm))
    bound = 1
    # primes of D are at most d (D divides d! for integer-valued f)
    leftover = lead
    for p in range(2, den_lcm + 1):
        if den_lcm % p:
            continue
        b = 0
        while den_lcm % p == 0:
            den_lcm //= p
            b += 1
        a = 0
        while leftover % p == 0:
            leftover //= p
            a += 1
        e = max(0, a, math.floor(Fraction(a - b, d - 1)))
        bound *= p**e
    # primes dividing only the leading coefficient keep their full depth
    return bound * leftover


def orbit(f: BinomialPoly, x0: Rat, max_steps: int = 1000) -> OrbitRecord:
    """Iterate exactly until a repeat, certified escape, or step exhaustion.

    Escape is certified two ways: |x| beyond the escape radius, or a
    denominator outside preper_denominator_bound(f) (either means the point
    is not preperiodic).  The denominator test keeps exact orbits of
    non-preperiodic rationals from growing without bound.
    """
    if f.degree < 2:
        raise ValueError("orbit needs degree >= 2")
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    radius = escape_radius(f.to_monomial())
    den_bound = preper_denominator_bound(f)
    start = Fraction(x0)
    if den_bound % start.denominator:
        return OrbitRecord(
            start=start, status="escaped", escaped_at=0, witness_value=start
        )
    seen = {start: 0}
    x = start
    for step in range(1, max_steps + 1):
        x = Fraction(f(x))
        if abs(x) > radius or den_bound % x.denominator:
            return OrbitRecord(
                start=start, status="escaped", escaped_at=step, witness_value=x
            )
        prev = seen.get(x)
        if prev is not None:
            return OrbitRecord(
                start=start, status="periodic", preperiod=prev, period=step - prev
            )
        seen[x] = step
    return OrbitRecord(start=start, status="undecided")


def preper_search(f: BinomialPoly, bound: int) -> list[int]:
    """All integers in [-bound, bound] with finite forward orbit.

    Integer candidates only (the windows of interest are integer intervals);
    see preper_search_rational for bounded-denominator rationals.  Raises
    OrbitUndecided if any orbit outlives the step cap 4*bound + 100.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    cap = 4 * bound + 100
    out = []
    for z in range(-bound, bound + 1):
        rec = orbit(f, z, max_steps=cap)
        if rec.status == "undecided":
            raise OrbitUndecided(f"orbit of {z} undecided after {cap} steps")
        if rec.status == "periodic":
            out.append(z)
    return out


def preper_search_rational(
    f: BinomialPoly, bound: int, max_denominator: int
) -> list[Fraction]:
    """Preperiodic rationals p/q with |p/q| <= bound and q <= max_denominator.

    Only denominators dividing preper_denominator_bound(f) can occur, so the
    scan skips every other q; with the escape radius capping numerators this
    makes the search a complete census of PrePer(f, Q) once bound exceeds the
    radius and max_denominator exceeds the denominator bound.
    """
    if bound < 0 or max_denominator < 1:
        raise ValueError("bound must be >= 0 and max_denominator >= 1")
    den_bound = preper_denominator_bound(f)
    cap = 4 * bound * max_denominator + 100
    out = []
    seen = set()
    for q in range(1, max_denominator + 1):
        if den_bound % q:
            continue
        for p in range(-bound * q, bound * q + 1):
            z = Fraction(p, q)
            if z in seen:
                continue
            seen.add(z)
            rec = orbit(f, z, max_steps=cap)
            if rec.status == "undecided":
                raise OrbitUndecided(f"orbit of {z} undecided after {cap} steps")
            if rec.status == "periodic":
                out.append(z)
    return sorted(out)


def preimage_count_exact(f: BinomialPoly, n: int) -> PreimageCount:
    """Distinct complex preimages of each fiber q in [1, n], counted exactly.

    Per fiber the count is deg f - deg gcd(f - q, f'); the gcd degree is the
    number of lost (ramified) preimages, so totals obey
    d*n - d + 1 <= total <= d*n.
    """
    if f.degree < 2:
        raise ValueError("preimage counting needs degree >= 2")
    if n < 1:
        raise ValueError("n must be positive")
    fm = f.to_monomial()
    fprime = fm.derivative()
    d = fm.degree
    per = []
    for q in range(1, n + 1):
        g = poly_gcd(fm - q, fprime)
        per.append(d - g.degree if g.coeffs else d)
    deficit = sum(d - c for c in per)
    return PreimageCount(
        n=n, per_fiber=tuple(per), ramification_deficit=deficit, total=sum(per)
    )


def common_preper_bound(f: BinomialPoly, m: int, n: int) -> CommonBound:
    """Certified lower bound on common preperiodic points of f, f+1, ..., f+(m-n).

    Requires a verified strict window f([m]) in [n] with m > n; then every
    point of f^(-1)([n]) is preperiodic for all the shifted maps at once, so
    the exact preimage count is a lower bound, and d*n - d + 1 is the floor
    it can never drop below.
    """
    if m <= n:
        raise ValueError("need a strict window with m > n")
    res = check_window(f, m, n)
    if not isinstance(res, CompressionWitness):
        raise ValueError(f"window ({m}, {n}) failed verification: {res.reason}")
    pc = preimage_count_exact(f, n)
    d = f.degree
    return CommonBound(count=pc.total, floor=d * n - d + 1)


def _compose(outer: RationalPoly, inner: RationalPoly) -> RationalPoly:
    acc = RationalPoly.zero()
    for c in reversed(outer.coeffs):
        acc = acc * inner + c
    return acc


def _poly_roots(coeffs_mpc, label: str):
    """mp.polyroots wrapper with escalating precision and a clear error."""
    last_exc = None
    for extra in (10, 60, 200):
        try:
            return mp.polyroots(coeffs_mpc, maxsteps=200, extraprec=extra)
        except NoConvergence as exc:  # pragma: no cover
            last_exc = exc
    raise RootFindingError(
        f"root finding failed to converge for {label}; raise precision_bits"
    ) from last_exc


def common_preper_depth_search(
    f: BinomialPoly,
    g: BinomialPoly,
    max_pre: int,
    max_per: int,
    precision_bits: int = 128,
    tol: float = 1e-20,
    degree_cap: int = 1 << 14,
) -> DepthSearchReport:
    """Census of solutions of f^(a+c)(x) = f^a(x) that g also keeps tame.

    Enumerates, for 0 <= a <= max_pre and 1 <= c <= max_per, all complex
    roots of f^(a+c) - f^a.  Nesting makes that set equal to the a-fold
    preimages of the short cycles, so roots are found by exact squarefree
    root isolation of f^c - x followed by numerical preimage pulls, level by
    level.  A point is retained when its g-orbit stays inside g's escape
    radius and revisits an earlier orbit point within tol inside
    4*(max_pre + max_per) + 20 steps.
    """
    if f.degree < 2 or g.degree < 2:
        raise ValueError("depth search needs degree >= 2 on both maps")
    if max_pre < 0 or max_per < 1:
        raise ValueError("need max_pre >= 0 and max_per >= 1")
    if f.degree ** (max_pre + max_per) > degree_cap:
        raise ValueError(
            f"iterate degree {f.degree ** (max_pre + max_per)} exceeds the "
            f"cap {degree_cap}; lower max_pre/max_per or raise degree_cap"
        )
    fm = f.to_monomial()
    gm = g.to_monomial()
    g_radius = escape_radius(gm)

    with mp.workprec(precision_bits):
        tol_mp = mp.mpf(tol)
        f_coeffs = [mp.mpf(c.numerator) / c.denominator for c in reversed(fm.coeffs)]
        g_coeffs = [mp.mpf(c.numerator) / c.denominator for c in reversed(gm.coeffs)]
        g_rad = mp.mpf(g_radius.numerator) / g_radius.denominator

        def f_eval(z):
            acc = mp.mpc(0)
            for c in f_coeffs:
                acc = acc * z + c
            return acc

        def g_eval(z):
            acc = mp.mpc(0)
            for c in g_coeffs:
                acc = acc * z + c
            return acc

        def dedup_add(pool, z):
            for w in pool:
                if abs(z - w) <= tol_mp:
                    return False
            pool.append(z)
            return True

        # level 0: exact squarefree isolation of the short cycles of f
        points: list = []
        comp = fm
        for c in range(1, max_per + 1):
            target = comp - RationalPoly.x()
            sf = squarefree_part(target)
            coeffs = [
                mp.mpf(co.numerator) / co.denominator for co in reversed(sf.coeffs)
            ]
            for z in _poly_roots(coeffs, f"cycle length {c}"):
                dedup_add(points, mp.mpc(z))
            if c < max_per:
                comp = _compose(fm, comp)
        per_level = [len(points)]

        # levels 1..max_pre: numerical preimages of the previous level
        frontier = list(points)
        for _a in range(1, max_pre + 1):
            new_frontier = []
            for w in frontier:
                shifted = list(f_coeffs)
                shifted[-1] = shifted[-1] - w
                for z in _poly_roots(shifted, f"preimage level {_a}"):
                    z = mp.mpc(z)
                    if dedup_add(points, z):
                        new_frontier.append(z)
            per_level.append(len(new_frontier))
            frontier = new_frontier

        # retention: g-orbit must stay bounded and revisit within tol
        steps = 4 * (max_pre + max_per) + 20
        retained = []
        for z in points:
            trail = [z]
            cur = z
            keep = False
            for _ in range(steps):
                cur = g_eval(cur)
                if abs(cur) > g_rad:
                    break
                if any(abs(cur - p) <= tol_mp for p in trail):
                    keep = True
                    break
                trail.append(cur)
            if keep:
                retained.append(z)

        retained.sort(key=lambda z: (mp.re(z), mp.im(z)))
        out_points = tuple((float(mp.re(z)), float(mp.im(z))) for z in retained)

    return DepthSearchReport(
        count=len(retained),
        points=out_points,
        per_level=tuple(per_level),
        max_pre=max_pre,
        max_per=max_per,
        precision_bits=precision_bits,
        tol=tol,
    )
