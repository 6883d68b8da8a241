"""Extrapolation matrix, its norms, and ellipsoid volume bounds.

For polynomials of degree at most d, the values g(d+1), ..., g(d+k-1) are
determined linearly by g(0), ..., g(d); the integer matrix of that map is
built here in closed form.  Its singular values shape an ellipsoid of value
vectors guaranteed (by a volume threshold, Minkowski style) to contain
nonzero lattice points, which is the existence side of the compression
search.  Volumes and singular values are computed in extended-precision
floating point on top of exact integer matrices.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional, Sequence

import mpmath as mp

from .polynomials import binomial

PRECISION_ENV = "DYNCOMPRESS_PRECISION_BITS"


@dataclass(frozen=True)
class InterpolationMatrix:
    """(k-1) x (d+1) integer matrix; row r maps (g(0..d)) to g(d+r+1)."""

    d: int
    k: int
    entries: tuple[tuple[int, ...], ...]

    def apply(self, values: Sequence[int]) -> list[int]:
        if len(values) != self.d + 1:
            raise ValueError("need d+1 values")
        return [sum(e * v for e, v in zip(row, values)) for row in self.entries]


@dataclass(frozen=True)
class MatrixNorms:
    max: int
    frobenius: float
    spectral: float


@dataclass(frozen=True)
class Ellipsoid:
    """Axis-aligned-in-spectral-coordinates ellipsoid of bounded value vectors.

    Radii are (d+ell-1)/(2*max(sigma_i, 1)) where sigma_i are the singular
    values of the extrapolation matrix, taken as 0 once exhausted (i >= k-1),
    so the trailing radii are all (d+ell-1)/2.
    """

    d: int
    k: int
    ell: int
    sigmas: tuple[float, ...]
    log_radii: tuple[float, ...]
    log_volume: float


@dataclass(frozen=True)
class MinkowskiReport:
    d: int
    k: int
    ell: int
    log_volume: float
    log_threshold: float
    holds: bool
    pairs: int
    sigmas: tuple[float, ...]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "ell": self.ell,
            "log_volume": self.log_volume,
            "log_threshold": self.log_threshold,
            "holds": self.holds,
            "pairs": str(self.pairs),
            "sigmas": list(self.sigmas),
        }


def build_interpolation_matrix(d: int, k: int) -> InterpolationMatrix:
    """Closed-form extrapolation coefficients, O(d*k) big-integer work.

    Row r (1-based), column j holds (-1)^(d-j) C(d+r, j) C(d+r-j-1, r-1),
    the Lagrange coefficient of g(j) in g(d+r); equal to the product of the
    evaluation matrix (C(d+r, i)) with the inverse-difference matrix
    ((-1)^(i-j) C(i, j)), but cheaper to build at large d.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if k < 2:
        raise ValueError("k must be at least 2")
    rows = []
    for r in range(1, k):
        row = []
        for j in range(d + 1):
            c = binomial(d + r, j) * binomial(d + r - j - 1, r - 1)
            row.append(-c if (d - j) % 2 else c)
        rows.append(tuple(row))
    return InterpolationMatrix(d=d, k=k, entries=tuple(rows))


def resolve_precision(precision_bits: Optional[int], d: int, k: int) -> int:
    """Explicit argument, else environment override, else max(64, 2*(d+k))."""
    if precision_bits is None:
        env = os.environ.get(PRECISION_ENV)
        if env:
            precision_bits = int(env)
    if precision_bits is None:
        return max(64, 2 * (d + k))
    if precision_bits < 64:
        raise ValueError("precision_bits must be at least 64")
    return precision_bits


def _gram_eigenvalues(rows: Sequence[Sequence[int]], prec_bits: int) -> list:
    """Eigenvalues of M*M^T (exact integer Gram) as mpf, descending."""
    m = len(rows)
    gram = [
        [sum(a * b for a, b in zip(rows[i], rows[j])) for j in range(m)]
        for i in range(m)
    ]
    with mp.workprec(prec_bits):
        a = mp.matrix(m, m)
        for i in range(m):
            for j in range(m):
                a[i, j] = mp.mpf(gram[i][j])
        evals, _ = mp.eigsy(a)
        out = [evals[i] if evals[i] > 0 else mp.mpf(0) for i in range(m)]
    return sorted(out, reverse=True)


def singular_values(rows: Sequence[Sequence[int]], prec_bits: int = 128) -> list:
    """Singular values of an integer matrix, descending, as mpf.

    Works on the smaller Gram side; the count returned equals min(shape).
    """
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    work = rows if len(rows) <= len(rows[0]) else _transpose(rows)
    eigs = _gram_eigenvalues(work, prec_bits)
    with mp.workprec(prec_bits):
        return [mp.sqrt(e) for e in eigs]


def _transpose(rows):
    return [list(col) for col in zip(*rows)]


def matrix_norms(rows: Sequence[Sequence[int]]) -> MatrixNorms:
    """Max, Frobenius, and spectral norms; exact integers under the roots.

    The chain spectral <= frobenius <= sqrt(m*n)*max is asserted (with float
    slack) on every call.
    """
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    mx = max(abs(e) for row in rows for e in row)
    sq = sum(e * e for row in rows for e in row)
    prec = max(64, sq.bit_length() + 16)
    with mp.workprec(prec):
        frob = float(mp.sqrt(sq))
    spec = float(singular_values(rows, prec)[0]) if sq else 0.0
    m, n = len(rows), len(rows[0])
    assert spec <= frob * (1 + 1e-12) + 1e-300
    assert frob <= math.sqrt(m * n) * mx * (1 + 1e-12) + 1e-300
    return MatrixNorms(max=mx, frobenius=frob, spectral=spec)


def build_ellipsoid(
    d: int, k: int, ell: int, precision_bits: Optional[int] = None
) -> Ellipsoid:
    """Ellipsoid radii and exact-formula log-volume at working precision."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if ell > k:
        raise ValueError("ell must not exceed k")
    prec = resolve_precision(precision_bits, d, k)
    matrix = build_interpolation_matrix(d, k)
    sig = singular_values(matrix.entries, prec)
    # the matrix has k-1 rows; rank caps the computed values at d+1
    sig = sig + [mp.mpf(0)] * (k - 1 - len(sig))
    with mp.workprec(prec):
        half_span = mp.mpf(d + ell - 1) / 2
        log_radii = []
        for i in range(d + 1):
            s = sig[i] if i < len(sig) else mp.mpf(0)
            denom = s if s > 1 else mp.mpf(1)
            log_radii.append(mp.log(half_span / denom))
        half_dim = mp.mpf(d + 1) / 2
        log_vol = half_dim * mp.log(mp.pi) - mp.loggamma(half_dim + 1)
        for lr in log_radii:
            log_vol += lr
        return Ellipsoid(
            d=d,
            k=k,
            ell=ell,
            sigmas=tuple(float(s) for s in sig),
            log_radii=tuple(float(x) for x in log_radii),
            log_volume=float(log_vol),
        )


def ellipsoid_log_volume(
    d: int, k: int, ell: int, precision_bits: Optional[int] = None
) -> float:
    """Natural-log volume of the bounded-value ellipsoid."""
    return build_ellipsoid(d, k, ell, precision_bits).log_volume


def default_extension(d: int) -> int:
    """The slow-growing extension length floor(log_16 d) used by the check."""
    if d < 1:
        raise ValueError("d must be positive")
    k = 0
    power = 1
    while power * 16 <= d:
        power *= 16
        k += 1
    return k


def minkowski_check(
    d: int,
    ell: int,
    precision_bits: Optional[int] = None,
    k: Optional[int] = None,
) -> MinkowskiReport:
    """Volume-vs-threshold test guaranteeing lattice points in the ellipsoid.

    With k omitted it uses floor(log_16 d) and insists that k >= ell (the
    regime where the threshold argument applies; d >= 256 for ell = 2).
    Passing k explicitly skips that domain check, for small-d diagnostics
    where the expected answer is holds = False.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if k is None:
        k = default_extension(d)
        if k < ell:
            raise ValueError(
                f"d = {d} is too small for ell = {ell}: floor(log_16 d) = {k}; "
                "pass k explicitly to evaluate the diagnostic anyway"
            )
    if k < 2:
        raise ValueError("k must be at least 2")
    if ell > k:
        # the unchecked variant still needs a well-formed ellipsoid
        raise ValueError("ell must not exceed k")
    prec = resolve_precision(precision_bits, d, k)
    spec = build_ellipsoid(d, k, ell, prec)
    with mp.workprec(prec):
        log_vol = mp.mpf(spec.log_volume)
        log_thr = mp.log(d + ell + 4) + d * mp.log(2)
        holds = bool(log_vol >= log_thr)
        pairs_log = log_vol - (d + 1) * mp.log(2)
        pairs = int(mp.floor(mp.e**pairs_log)) if pairs_log > 0 else 0
    return MinkowskiReport(
        d=d,
        k=k,
        ell=ell,
        log_volume=float(log_vol),
        log_threshold=float(log_thr),
        holds=holds,
        pairs=pairs,
        sigmas=spec.sigmas,
    )


def find_holding_threshold(
    ell: int = 2, hi_cap: int = 1 << 20, precision_bits: Optional[int] = None
) -> dict:
    """Smallest degree (within the checked domain) where the check holds.

    Returns the threshold degree and a sample of checked degrees up to four
    times the threshold, all of which must hold; raises if none holds below
    hi_cap.
    """
    lo = 16**ell  # smallest d in the checked domain
    if minkowski_check(lo, ell, precision_bits).holds:
        dstar = lo
    else:
        prev, cur = lo, lo * 2
        while not minkowski_check(cur, ell, precision_bits).holds:
            prev, cur = cur, cur * 2
            if cur > hi_cap:
                raise ValueError(f"no holding degree found up to {hi_cap}")
        # bisect (prev, cur]: prev fails, cur holds
        while cur - prev > 1:
            mid = (prev + cur) // 2
            if minkowski_check(mid, ell, precision_bits).holds:
                cur = mid
            else:
                prev = mid
        dstar = cur
    samples = sorted({dstar, 2 * dstar, 3 * dstar, 4 * dstar})
    results = [
        {"d": s, "holds": minkowski_check(s, ell, precision_bits).holds}
        for s in samples
    ]
    return {"ell": ell, "dstar": dstar, "samples": results}
