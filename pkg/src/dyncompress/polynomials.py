"""Exact polynomial arithmetic in the binomial and monomial bases.

Integer-valued polynomials (f with f(Z) subset of Z) are exactly the integer
combinations of the binomial coefficients C(x, i), so the package represents
them as integer coefficient vectors in that basis (BinomialPoly).  Ordinary
monomial-basis polynomials over exact rationals (RationalPoly) exist for
constructions that need half-integer shifts and calculus-style manipulation.
Everything in this module is exact; no floating point.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Rat = Union[int, Fraction]


def binomial(x: Rat, i: int) -> Rat:
    """Generalized binomial coefficient x(x-1)...(x-i+1)/i!, exact."""
    if i < 0:
        raise ValueError("lower index must be nonnegative")
    if isinstance(x, Fraction) and x.denominator == 1:
        x = int(x)
    if isinstance(x, int):
        if x >= 0:
            return math.comb(x, i)
        # C(-a, i) = (-1)^i C(a+i-1, i)
        return (-1) ** i * math.comb(-x + i - 1, i)
    prod = Fraction(1)
    for t in range(i):
        prod *= x - t
    return prod / math.factorial(i)


def _as_fraction(x: Rat) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class BinomialPoly:
    """Integer combination sum(coeffs[i] * C(x, i)); trailing coefficient nonzero.

    The zero polynomial is the empty tuple.  Instances are immutable and
    hashable, so they can key caches and dedup sets.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cleaned = list(self.coeffs)
        for c in cleaned:
            if not isinstance(c, int):
                raise TypeError("binomial basis coefficients must be integers")
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        object.__setattr__(self, "coeffs", tuple(cleaned))

    @property
    def degree(self) -> int:
        # zero polynomial reports -1 so "degree >= 2" checks read naturally
        return len(self.coeffs) - 1

    def __call__(self, x: Rat) -> Rat:
        if isinstance(x, Fraction) and x.denominator == 1:
            x = int(x)
        if isinstance(x, int):
            acc = 0
            c = 1  # C(x, i), updated incrementally; stays integral for integer x
            for i, a in enumerate(self.coeffs):
                acc += a * c
                c = c * (x - i) // (i + 1)
            return acc
        acc = Fraction(0)
        cf = Fraction(1)
        for i, a in enumerate(self.coeffs):
            acc += a * cf
            cf = cf * (x - i) / (i + 1)
        return acc

    def values(self, lo: int, hi: int) -> list[int]:
        """Exact values f(lo), f(lo+1), ..., f(hi)."""
        return [self(x) for x in range(lo, hi + 1)]

    def shift_argument(self, t: int) -> "BinomialPoly":
        """The polynomial x -> f(x + t), re-based at 0.

        Uses C(x+t, i) = sum_j C(t, i-j) C(x, j), which keeps coefficients
        integral for integer t.
        """
        if not self.coeffs:
            return self
        n = len(self.coeffs)
        out = [0] * n
        for j in range(n):
            s = 0
            for i in range(j, n):
                s += self.coeffs[i] * binomial(t, i - j)
            out[j] = s
        return BinomialPoly(tuple(out))

    def to_monomial(self) -> "RationalPoly":
        """Exact change of basis to monomial coefficients over Q."""
        acc = RationalPoly.zero()
        basis = RationalPoly.one()  # C(x, i) built up by multiplying (x - i)/(i + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                acc = acc + basis.scale(a)
            basis = basis.mul_linear(Fraction(1, i + 1), Fraction(-i, i + 1))
        return acc

    def __add__(self, other):
        if isinstance(other, int):
            other = BinomialPoly((other,))
        if not isinstance(other, BinomialPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return BinomialPoly(tuple(x + y for x, y in zip(a, b)))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return BinomialPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = BinomialPoly((other,))
        if not isinstance(other, BinomialPoly):
            return NotImplemented
        return self + (-other)


@dataclass(frozen=True)
class RationalPoly:
    """Monomial-basis polynomial sum(coeffs[i] * x**i) with Fraction coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cleaned = [_as_fraction(c) for c in self.coeffs]
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        object.__setattr__(self, "coeffs", tuple(cleaned))

    @staticmethod
    def zero() -> "RationalPoly":
        return RationalPoly(())

    @staticmethod
    def one() -> "RationalPoly":
        return RationalPoly((Fraction(1),))

    @staticmethod
    def x() -> "RationalPoly":
        return RationalPoly((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: Rat) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly((_as_fraction(other),))
        if not isinstance(other, RationalPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return RationalPoly(tuple(x + y for x, y in zip(a, b)))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return RationalPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly((_as_fraction(other),))
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RationalPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPoly(tuple(out))

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c: Rat) -> "RationalPoly":
        c = _as_fraction(c)
        return RationalPoly(tuple(a * c for a in self.coeffs))

    def mul_linear(self, a: Fraction, b: Fraction) -> "RationalPoly":
        """Multiply by (a*x + b) in one pass."""
        return self * RationalPoly((b, a))

    def compose_affine(self, a: Rat, b: Rat) -> "RationalPoly":
        """The polynomial x -> f(a*x + b), computed exactly by Horner."""
        a = _as_fraction(a)
        b = _as_fraction(b)
        acc = RationalPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc.mul_linear(a, b) + c
        return acc

    def derivative(self) -> "RationalPoly":
        return RationalPoly(tuple(c * i for i, c in enumerate(self.coeffs))[1:])

    def is_integer_valued(self) -> bool:
        if not self.coeffs:
            return True
        vals = [self(i) for i in range(len(self.coeffs))]
        return all(v.denominator == 1 for v in vals)


def centered_difference(f: RationalPoly) -> RationalPoly:
    """The half-step difference f(x + 1/2) - f(x - 1/2); drops degree by one."""
    half = Fraction(1, 2)
    return f.compose_affine(1, half) - f.compose_affine(1, -half)


def interpolate(values: Sequence[Rat], start: int = 0):
    """Unique polynomial of degree < len(values) through (start+i, values[i]).

    Returns a BinomialPoly (re-based at 0) when start and all values are
    integers, since consecutive integer samples of an integer-valued
    polynomial have integer forward differences; otherwise a RationalPoly.
    """
    if not values:
        raise ValueError("need at least one value")
    vals = list(values)
    ints = []
    all_int = True
    for v in vals:
        if isinstance(v, int):
            ints.append(v)
        elif isinstance(v, Fraction) and v.denominator == 1:
            ints.append(int(v))
        else:
            all_int = False
            break
    if all_int:
        # forward differences give coefficients in the basis C(x - start, i)
        diffs = list(ints)
        deltas = [diffs[0]]
        for _ in range(1, len(diffs)):
            diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
            deltas.append(diffs[0])
        return BinomialPoly(tuple(deltas)).shift_argument(-start)
    # rational data: Newton form expanded in the monomial basis
    diffs = [_as_fraction(v) for v in vals]
    deltas = [diffs[0]]
    for _ in range(1, len(diffs)):
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
        deltas.append(diffs[0])
    acc = RationalPoly.zero()
    basis = RationalPoly.one()
    for i, delta in enumerate(deltas):
        if delta:
            acc = acc + basis.scale(delta / math.factorial(i))
        acc_shift = Fraction(-(start + i))
        basis = basis.mul_linear(Fraction(1), acc_shift)
    return acc


def to_binomial(f: RationalPoly) -> BinomialPoly:
    """Convert an integer-valued RationalPoly to the binomial basis.

    Raises ValueError when f is not integer-valued.
    """
    if not f.coeffs:
        return BinomialPoly(())
    vals = [f(i) for i in range(f.degree + 1)]
    for i, v in enumerate(vals):
        if v.denominator != 1:
            raise ValueError(f"not integer-valued: f({i}) = {v}")
    result = interpolate([int(v) for v in vals], 0)
    assert isinstance(result, BinomialPoly)
    return result


def _int_poly_content(coeffs: list[int]) -> int:
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g or 1


def _primitive(coeffs: list[int]) -> list[int]:
    g = _int_poly_content(coeffs)
    sign = -1 if coeffs[-1] < 0 else 1
    g *= sign
    return [c // g for c in coeffs]


def _int_poly_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # pseudo-remainder of a by b (deg a >= deg b), integer arithmetic only
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        la = a[-1]
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[shift + i] -= la * c
        while a and a[-1] == 0:
            a.pop()
    return a


def poly_gcd(f: RationalPoly, g: RationalPoly) -> RationalPoly:
    """Monic gcd over Q via a primitive pseudo-remainder sequence.

    Clearing denominators and re-normalizing content after every step keeps
    intermediate integers small enough for the iterated-polynomial sizes the
    dynamics module feeds in.
    """
    if not f.coeffs:
        return _monic(g)
    if not g.coeffs:
        return _monic(f)

    def to_int(p: RationalPoly) -> list[int]:
        den = math.lcm(*[c.denominator for c in p.coeffs])
        return _primitive([int(c * den) for c in p.coeffs])

    a, b = to_int(f), to_int(g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_poly_pseudo_rem(a, b)
        if not r or not any(r):
            a = b
            break
        a, b = b, _primitive(r)
    return _monic(RationalPoly(tuple(Fraction(c) for c in a)))


def _monic(p: RationalPoly) -> RationalPoly:
    if not p.coeffs:
        return p
    return p.scale(1 / p.leading)


def squarefree_part(f: RationalPoly) -> RationalPoly:
    """Monic polynomial with the same roots as f, each simple."""
    if f.degree <= 0:
        return _monic(f)
    g = poly_gcd(f, f.derivative())
    if g.degree <= 0:
        return _monic(f)
    q, r = poly_divmod(f, g)
    assert not r.coeffs, "gcd must divide"
    return _monic(q)


def poly_divmod(f: RationalPoly, g: RationalPoly) -> tuple[RationalPoly, RationalPoly]:
    """Exact quotient and remainder over Q."""
    if not g.coeffs:
        raise ZeroDivisionError("division by zero polynomial")
    rem = list(f.coeffs)
    quot = [Fraction(0)] * max(0, len(f.coeffs) - len(g.coeffs) + 1)
    lg = g.leading
    while len(rem) >= len(g.coeffs) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(g.coeffs):
            break
        shift = len(rem) - len(g.coeffs)
        factor = rem[-1] / lg
        quot[shift] = factor
        for i, c in enumerate(g.coeffs):
            rem[shift + i] -= factor * c
        rem.pop()
    return RationalPoly(tuple(quot)), RationalPoly(tuple(rem))


# --- JSON wire format -------------------------------------------------------
#
# {"basis": "binomial", "coeffs": ["11", "-4", "1"]}
# {"basis": "monomial", "coeffs": [["11","1"], ["-9","2"], ["1","2"]]}
#
# Coefficients are decimal strings (pairs of numerator/denominator strings in
# the monomial case) so arbitrarily large integers survive any JSON parser.


def poly_to_json(f: Union[BinomialPoly, RationalPoly]) -> dict:
    if isinstance(f, BinomialPoly):
        return {"basis": "binomial", "coeffs": [str(c) for c in f.coeffs]}
    if isinstance(f, RationalPoly):
        return {
            "basis": "monomial",
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in f.coeffs],
        }
    raise TypeError(f"not a polynomial: {type(f).__name__}")


def poly_from_json(obj) -> Union[BinomialPoly, RationalPoly]:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "basis" not in obj or "coeffs" not in obj:
        raise ValueError("polynomial JSON needs 'basis' and 'coeffs' fields")
    basis = obj["basis"]
    coeffs = obj["coeffs"]
    if basis == "binomial":
        return BinomialPoly(tuple(int(c) for c in coeffs))
    if basis == "monomial":
        out = []
        for pair in coeffs:
            num, den = pair
            out.append(Fraction(int(num), int(den)))
        return RationalPoly(tuple(out))
    raise ValueError(f"unknown basis {basis!r}")
