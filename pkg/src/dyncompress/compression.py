"""Verification and construction of compression windows f([m]) in [n].

A polynomial of degree >= 2 whose values on the integer window [1, m] all
land inside [1, n] with m > n forces every point of [1, m] to be preperiodic
under iteration, which is the engine behind every record in this package.
check_window verifies a claimed window exactly; best_window discovers the
largest one; reflect applies the two symmetries that preserve windows; and
poly_from_vector realizes the centering construction that turns a small
lattice vector into an integer-valued polynomial with small values.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .polynomials import BinomialPoly, interpolate, poly_to_json, to_binomial


@dataclass(frozen=True)
class CompressionWitness:
    """A verified window: every value of poly on [1, m] lies in [1, n].

    Windows with m > n (the strict ones) are what downstream consumers need;
    m = n still certifies preperiodicity of [1, m] and is kept, flagged via
    the strict property.
    """

    poly: BinomialPoly
    m: int
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("window bounds must be positive")
        if self.m < self.n:
            raise ValueError("m >= n required for a meaningful window")
        if len(self.values) != self.m:
            raise ValueError("values must list f(1..m)")

    @property
    def strict(self) -> bool:
        return self.m > self.n

    def to_json(self) -> dict:
        return {
            "poly": poly_to_json(self.poly),
            "m": self.m,
            "n": self.n,
            "strict": self.strict,
            "values": [str(v) for v in self.values],
        }


@dataclass(frozen=True)
class WindowRefutation:
    """Why a claimed window (m, n) fails: low degree or an out-of-range value."""

    poly: BinomialPoly
    m: int
    n: int
    reason: str  # "degree" or "range"
    failed_at: Optional[int] = None
    value: Optional[int] = None

    def to_json(self) -> dict:
        out = {
            "poly": poly_to_json(self.poly),
            "m": self.m,
            "n": self.n,
            "verified": False,
            "reason": self.reason,
        }
        if self.failed_at is not None:
            out["failed_at"] = self.failed_at
            out["value"] = str(self.value)
        return out


WindowResult = Union[CompressionWitness, WindowRefutation]


def check_window(f: BinomialPoly, m: int, n: int) -> WindowResult:
    """Exactly verify f([1, m]) inside [1, n] and deg f >= 2."""
    if m < 1 or n < 1:
        raise ValueError("window bounds must be positive")
    if f.degree < 2:
        return WindowRefutation(f, m, n, reason="degree")
    vals = []
    for i in range(1, m + 1):
        v = f(i)
        if not 1 <= v <= n:
            return WindowRefutation(f, m, n, reason="range", failed_at=i, value=v)
        vals.append(v)
    return CompressionWitness(f, m, n, tuple(vals))


def best_window(f: BinomialPoly, m_cap: int) -> Optional[CompressionWitness]:
    """Largest strict window of f with m <= m_cap, or None.

    Among m <= m_cap with min f([m]) >= 1, takes n(m) = max f([m]) and
    returns the witness for the largest m with m > n(m).
    """
    if m_cap < 2:
        raise ValueError("m_cap must be at least 2")
    if f.degree < 2:
        return None
    vals = []
    run_min = None
    run_max = None
    best_m = None
    best_n = None
    for i in range(1, m_cap + 1):
        v = f(i)
        vals.append(v)
        run_min = v if run_min is None else min(run_min, v)
        run_max = v if run_max is None else max(run_max, v)
        if run_min >= 1 and i > run_max:
            best_m, best_n = i, run_max
    if best_m is None:
        return None
    return CompressionWitness(f, best_m, best_n, tuple(vals[:best_m]))


def reflect(w: CompressionWitness, mode: str = "domain") -> CompressionWitness:
    """Apply a window-preserving symmetry: x -> m+1-x or f -> (n+1)-f.

    Both modes keep (m, n) and are involutions; the value vector reverses
    (domain) or flips inside [1, n] (range).
    """
    if mode == "domain":
        mono = w.poly.to_monomial().compose_affine(-1, w.m + 1)
        g = to_binomial(mono)
        new_vals = tuple(reversed(w.values))
    elif mode == "range":
        g = (-w.poly) + (w.n + 1)
        new_vals = tuple(w.n + 1 - v for v in w.values)
    else:
        raise ValueError(f"unknown reflection mode {mode!r}")
    out = check_window(g, w.m, w.n)
    assert isinstance(out, CompressionWitness), "reflection must preserve the window"
    assert out.values == new_vals
    return out


def poly_from_vector(v: Sequence[int], ell: int) -> BinomialPoly:
    """Center a length-(d+1) integer vector into an integer-valued polynomial.

    Interpolates v at 0..d, shifts the argument so the samples sit at 1..d+1,
    and adds floor((d+ell-1)/2) + 1, so a vector with entries in
    [-(d+ell-1)/2, (d+ell-1)/2] yields values inside [1, d+ell].
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    vec = [int(x) for x in v]
    if not vec:
        raise ValueError("vector must be nonempty")
    d = len(vec) - 1
    g = interpolate(vec, 0)
    assert isinstance(g, BinomialPoly)
    return g.shift_argument(-1) + ((d + ell - 1) // 2 + 1)
