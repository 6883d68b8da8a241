"""Lattice of binomial value vectors, exact LLL reduction, witness harvest.

The rank-(d+1) lattice in Z^(d+k) spanned by the value vectors of C(x, i) on
[1, d+k] contains exactly the value vectors of integer-valued polynomials of
degree <= d.  Short vectors in it have a small spread of values, so after an
additive shift they become compression-window candidates.  Reduction is the
classical LLL algorithm run entirely over integers: instead of rational
Gram-Schmidt data it maintains the Gram determinants d_i and the scaled
coefficients lambda[i][j] = d_j * mu[i][j], which stay integral throughout,
so every size-reduction and swap decision is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .compression import CompressionWitness, check_window
from .polynomials import BinomialPoly, binomial, interpolate


@dataclass(frozen=True)
class LatticeBasis:
    """Ordered integer basis; for the binomial lattice, d+1 vectors of length d+k."""

    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.vectors:
            raise ValueError("basis must be nonempty")
        width = len(self.vectors[0])
        if any(len(v) != width for v in self.vectors):
            raise ValueError("basis vectors must share one length")
        object.__setattr__(
            self, "vectors", tuple(tuple(int(x) for x in v) for v in self.vectors)
        )


@dataclass(frozen=True)
class ReducedBasis:
    """LLL output: reduced vectors, the delta used, and the unimodular transform.

    transform[i] gives the integer coordinates of vectors[i] in the original
    basis; |det(transform)| = 1.
    """

    vectors: tuple[tuple[int, ...], ...]
    delta: Fraction
    transform: tuple[tuple[int, ...], ...]


def build_lattice(d: int, k: int) -> LatticeBasis:
    """Generators u_i = (C(1, i), ..., C(d+k, i)) for 0 <= i <= d."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if k < 1:
        raise ValueError("k must be at least 1")
    rows = []
    for i in range(d + 1):
        rows.append(tuple(binomial(j, i) for j in range(1, d + k + 1)))
    return LatticeBasis(tuple(rows))


def _round_quotient(num: int, den: int) -> int:
    """round(num/den) with ties to even, den > 0, exact integer arithmetic."""
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q % 2 == 1):
        q += 1
    return q


def lll_reduce(basis: LatticeBasis, delta: Fraction = Fraction(3, 4)) -> ReducedBasis:
    """Exact LLL reduction with unimodular transform tracking.

    Runs the integer-scaled variant: all state (Gram determinants, scaled
    Gram-Schmidt coefficients) is integral, and the Lovász test
    q*(d_i*d_{i-2} + lambda^2) >= p*d_{i-1}^2 for delta = p/q is exact.
    Output is size-reduced (|mu| <= 1/2) and satisfies the Lovász condition
    at the given delta; both are re-checkable by rational Gram-Schmidt.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must lie in (1/4, 1)")
    p, q = delta.numerator, delta.denominator

    b = [list(v) for v in basis.vectors]
    n = len(b)
    h = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # transform
    # dd[i+1] = det Gram(b_0..b_i); dd[0] = 1 sentinel
    dd = [0] * (n + 1)
    dd[0] = 1
    lam = [[0] * n for _ in range(n)]

    def red(i, j):
        # size-reduce b_i against b_j  (j < i)
        if 2 * abs(lam[i][j]) <= dd[j + 1]:
            return
        r = _round_quotient(lam[i][j], dd[j + 1])
        b[i] = [x - r * y for x, y in zip(b[i], b[j])]
        h[i] = [x - r * y for x, y in zip(h[i], h[j])]
        lam[i][j] -= r * dd[j + 1]
        for t in range(j):
            lam[i][t] -= r * lam[j][t]

    def swap(i, kmax):
        b[i], b[i - 1] = b[i - 1], b[i]
        h[i], h[i - 1] = h[i - 1], h[i]
        for t in range(i - 1):
            lam[i][t], lam[i - 1][t] = lam[i - 1][t], lam[i][t]
        lam_val = lam[i][i - 1]
        new_d, rem = divmod(dd[i - 1] * dd[i + 1] + lam_val * lam_val, dd[i])
        assert rem == 0, "integer LLL invariant broken"
        for t in range(i + 1, kmax + 1):
            old = lam[t][i]
            num = dd[i + 1] * lam[t][i - 1] - lam_val * old
            lam[t][i], rem = divmod(num, dd[i])
            assert rem == 0
            num = new_d * old + lam_val * lam[t][i]
            lam[t][i - 1], rem = divmod(num, dd[i + 1])
            assert rem == 0
        dd[i] = new_d

    def init_row(i):
        # fill lam[i][0..i-1] and dd[i+1] from exact inner products
        for j in range(i + 1):
            u = sum(x * y for x, y in zip(b[i], b[j]))
            for t in range(j):
                u, rem = divmod(dd[t + 1] * u - lam[i][t] * lam[j][t], dd[t])
                assert rem == 0
            if j < i:
                lam[i][j] = u
            else:
                if u == 0:
                    raise ValueError("basis vectors are linearly dependent")
                dd[i + 1] = u

    init_row(0)
    kmax = 0
    i = 1
    while i < n:
        if i > kmax:
            kmax = i
            init_row(i)
        red(i, i - 1)
        lhs = q * (dd[i + 1] * dd[i - 1] + lam[i][i - 1] ** 2)
        if lhs < p * dd[i] * dd[i]:
            swap(i, kmax)
            i = max(1, i - 1)
        else:
            for j in range(i - 2, -1, -1):
                red(i, j)
            i += 1

    return ReducedBasis(
        vectors=tuple(tuple(v) for v in b),
        delta=delta,
        transform=tuple(tuple(row) for row in h),
    )


def harvest(reduced: ReducedBasis) -> list[CompressionWitness]:
    """Compression witnesses among short combinations of a reduced basis.

    Candidates are the basis vectors, their negations, and all pairwise sums
    and differences.  Each candidate of length d+k is read as the value
    vector (f(1), ..., f(d+k)), shifted by a constant so its minimum is 1;
    it is kept when the resulting maximum n stays within d+k and the
    interpolating polynomial has degree >= 2.  The degree comes from finite
    differences of the first d+1 values and is cross-checked against the
    remaining k-1 values.  Output is deduplicated, each entry re-verified.
    """
    vecs = [list(v) for v in reduced.vectors]
    d = len(vecs) - 1
    width = len(vecs[0])
    k = width - d
    if k < 1:
        raise ValueError("reduced basis is not a binomial value lattice")

    candidates = []
    for v in vecs:
        candidates.append(v)
        candidates.append([-x for x in v])
    for a in range(len(vecs)):
        for bidx in range(a + 1, len(vecs)):
            va, vb = vecs[a], vecs[bidx]
            candidates.append([x + y for x, y in zip(va, vb)])
            candidates.append([x - y for x, y in zip(va, vb)])
            candidates.append([y - x for x, y in zip(va, vb)])
            candidates.append([-x - y for x, y in zip(va, vb)])

    seen = set()
    out = []
    for w in candidates:
        if not any(w):
            continue
        shift = 1 - min(w)
        vals = [x + shift for x in w]
        n = max(vals)
        if n > width:
            continue
        f = interpolate(vals[: d + 1], 1)
        assert isinstance(f, BinomialPoly)
        if f.degree < 2:
            continue
        # lattice membership means the tail must be consistent with degree <= d
        if any(f(d + 1 + t) != vals[d + t] for t in range(1, k)):
            continue
        if f.coeffs in seen:
            continue
        seen.add(f.coeffs)
        verified = check_window(f, width, n)
        assert isinstance(verified, CompressionWitness)
        out.append(verified)
    out.sort(key=lambda w: (w.n, w.poly.coeffs))
    return out


def lattice_coordinates(basis: LatticeBasis, vector) -> Optional[list[int]]:
    """Integer coordinates of vector in the given basis, or None if outside.

    Exact rational elimination; used to certify lattice membership of
    reduced vectors in tests and of harvested value vectors.
    """
    rows = [list(map(Fraction, v)) for v in basis.vectors]
    target = list(map(Fraction, vector))
    if rows and len(target) != len(rows[0]):
        raise ValueError("dimension mismatch")
    n = len(rows)
    m = len(target)
    # solve x * rows = target by elimination on the transposed system
    # build augmented matrix of size m x (n+1): rows^T | target
    aug = [[rows[j][i] for j in range(n)] + [target[i]] for i in range(m)]
    pivot_row = 0
    pivot_cols = []
    for col in range(n):
        sel = None
        for r in range(pivot_row, m):
            if aug[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        aug[pivot_row], aug[sel] = aug[sel], aug[pivot_row]
        pv = aug[pivot_row][col]
        aug[pivot_row] = [x / pv for x in aug[pivot_row]]
        for r in range(m):
            if r != pivot_row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[pivot_row])]
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == m:
            break
    # consistency: rows without pivots must have zero RHS
    for r in range(pivot_row, m):
        if aug[r][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for idx, col in enumerate(pivot_cols):
        sol[col] = aug[idx][n]
    for s in sol:
        if s.denominator != 1:
            return None
    return [int(s) for s in sol]
