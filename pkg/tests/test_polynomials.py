"""Exact polynomial arithmetic: binomial basis, interpolation, gcd, wire format."""
import random
from fractions import Fraction

import pytest

from dyncompress.polynomials import (
    BinomialPoly,
    RationalPoly,
    binomial,
    centered_difference,
    interpolate,
    poly_divmod,
    poly_from_json,
    poly_gcd,
    poly_to_json,
    squarefree_part,
    to_binomial,
)


def random_binomial_poly(rng, max_deg, coeff_bound=50):
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(deg + 1)]
    return BinomialPoly(tuple(coeffs))


def test_binomial_integer_values():
    assert binomial(5, 2) == 10
    assert binomial(0, 0) == 1
    assert binomial(4, 5) == 0
    assert binomial(7, 0) == 1


def test_binomial_negative_and_fractional():
    # C(-a, i) = (-1)^i C(a+i-1, i)
    assert binomial(-3, 2) == 6
    assert binomial(-1, 3) == -1
    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binomial(Fraction(3, 2), 2) == Fraction(3, 8)


def test_eval_example_quadratic():
    f = BinomialPoly((11, -4, 1))
    assert f(0) == 11
    assert f.values(1, 8) == [7, 4, 2, 1, 1, 2, 4, 7]
    assert f(9) == 11


def test_eval_integer_and_fraction_paths_agree():
    rng = random.Random(20260819)
    for _ in range(40):
        f = random_binomial_poly(rng, 8)
        x = rng.randint(-30, 30)
        assert f(x) == f(Fraction(x))


def test_interpolate_round_trip():
    rng = random.Random(411)
    for _ in range(60):
        f = random_binomial_poly(rng, 30)
        start = rng.randint(-10, 10)
        vals = [f(start + i) for i in range(f.degree + 1)]
        g = interpolate(vals, start)
        assert isinstance(g, BinomialPoly)
        assert g.coeffs == f.coeffs


def test_interpolate_example():
    g = interpolate([11, 7, 4], 0)
    assert g.coeffs == (11, -4, 1)


def test_interpolate_rational_values():
    g = interpolate([Fraction(1, 2), Fraction(3, 2), Fraction(9, 2)], 0)
    assert isinstance(g, RationalPoly)
    assert g(0) == Fraction(1, 2)
    assert g(1) == Fraction(3, 2)
    assert g(2) == Fraction(9, 2)


def test_integrality_on_window():
    rng = random.Random(77)
    for _ in range(20):
        f = random_binomial_poly(rng, 12)
        for x in range(-50, 51):
            assert isinstance(f(x), int)


def test_shift_argument():
    rng = random.Random(909)
    for _ in range(30):
        f = random_binomial_poly(rng, 10)
        t = rng.randint(-15, 15)
        g = f.shift_argument(t)
        for x in range(-5, 6):
            assert g(x) == f(x + t)


def test_to_monomial_agrees_at_rational_points():
    rng = random.Random(5150)
    for _ in range(20):
        f = random_binomial_poly(rng, 10)
        mono = f.to_monomial()
        for _ in range(20):
            x = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
            assert mono(x) == f(x)


def test_rational_ring_operations():
    rng = random.Random(31337)
    for _ in range(20):
        f = random_binomial_poly(rng, 6).to_monomial()
        g = random_binomial_poly(rng, 6).to_monomial()
        h_sum = f + g
        h_prod = f * g
        for _ in range(20):
            x = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            assert h_sum(x) == f(x) + g(x)
            assert h_prod(x) == f(x) * g(x)


def test_degree_law_under_product():
    rng = random.Random(24601)
    for _ in range(30):
        f = random_binomial_poly(rng, 15).to_monomial()
        g = random_binomial_poly(rng, 15).to_monomial()
        if f.degree < 0 or g.degree < 0:
            continue
        assert (f * g).degree == f.degree + g.degree


def test_binomial_poly_add_sub_int():
    f = BinomialPoly((11, -4, 1))
    assert (f + 1).coeffs == (12, -4, 1)
    assert (f - 2).coeffs == (9, -4, 1)
    assert (-f).coeffs == (-11, 4, -1)
    assert (1 + f).coeffs == (12, -4, 1)


def test_centered_difference_on_monomials():
    # delta f(x) = f(x + 1/2) - f(x - 1/2); on x^2 this is 2x
    x2 = RationalPoly((Fraction(0), Fraction(0), Fraction(1)))
    d = centered_difference(x2)
    assert d.coeffs == (Fraction(0), Fraction(2))


def test_to_binomial_requires_integer_values():
    half_x = RationalPoly((Fraction(0), Fraction(1, 2)))
    with pytest.raises(ValueError):
        to_binomial(half_x)
    f = RationalPoly((Fraction(11), Fraction(-9, 2), Fraction(1, 2)))
    assert to_binomial(f).coeffs == (11, -4, 1)


def test_poly_gcd_monic():
    x = RationalPoly.x()
    one = RationalPoly.one()
    f = (x - 1) * (x - 1) * (x + 2)
    g = (x - 1) * (x + 3)
    got = poly_gcd(f, g)
    assert got.coeffs == (Fraction(-1), Fraction(1))
    assert poly_gcd(f, one).degree == 0


def test_squarefree_part():
    x = RationalPoly.x()
    f = (x - 1) * (x - 1) * (x + 2)
    sq = squarefree_part(f)
    # roots preserved, multiplicity dropped
    assert sq(1) == 0 and sq(-2) == 0
    assert sq.degree == 2


def test_poly_divmod():
    x = RationalPoly.x()
    f = x * x * x - x + 2
    g = x * x + 1
    q, r = poly_divmod(f, g)
    recomposed = q * g + r
    assert recomposed.coeffs == f.coeffs
    assert r.degree < g.degree


def test_json_wire_binomial():
    f = BinomialPoly((11, -4, 1))
    obj = poly_to_json(f)
    assert obj == {"basis": "binomial", "coeffs": ["11", "-4", "1"]}
    assert poly_from_json(obj).coeffs == f.coeffs


def test_json_wire_monomial():
    f = RationalPoly((Fraction(11), Fraction(-9, 2), Fraction(1, 2)))
    obj = poly_to_json(f)
    assert obj == {
        "basis": "monomial",
        "coeffs": [["11", "1"], ["-9", "2"], ["1", "2"]],
    }
    back = poly_from_json(obj)
    assert back.coeffs == f.coeffs


def test_json_wire_rejects_garbage():
    with pytest.raises((KeyError, ValueError, TypeError)):
        poly_from_json({"basis": "fourier", "coeffs": []})


def test_zero_polynomial_degree():
    assert BinomialPoly((0,)).degree == -1
    assert RationalPoly((Fraction(0),)).degree == -1
