"""Scalar layer: rationals, polynomials, Q(t), Sturm root counting."""

import random

import pytest
import sympy

from axia.errors import PoleAtPoint
from axia.scalars import (POLY_ONE, POLY_T, QQ, QT, Polynomial,
                          RationalFunction, count_roots_open, format_rational,
                          parse_rational, poly_gcd, rat, rational_sign,
                          sturm_root_count)

from conftest import poly, rf


# ---------------------------------------------------------------------------
# rationals
# ---------------------------------------------------------------------------

def test_parse_rational_accepts_exact_forms():
    assert parse_rational("3/4") == rat(3) / 4
    assert parse_rational("-7") == rat(-7)
    assert parse_rational("+2/6") == rat(1) / 3
    assert format_rational(parse_rational("2/6")) == "1/3"


@pytest.mark.parametrize("bad", ["0.1", "1e-3", "1/2/3", "", "a", "1 / 2"])
def test_parse_rational_rejects_inexact_forms(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rational_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_rational_sign():
    assert rational_sign(rat("3/5")) == 1
    assert rational_sign(rat("-1/7")) == -1
    assert rational_sign(rat(0)) == 0


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def test_polynomial_arithmetic_trivial():
    # (t + 1)^2 = t^2 + 2t + 1  [TRIVIAL]
    p = poly(1, 1)
    assert p * p == poly(1, 2, 1)
    assert p + poly(-1, -1) == Polynomial()
    assert poly(1, 2, 1).degree == 2
    assert Polynomial().degree == float("-inf")


def test_polynomial_trailing_zeros_stripped():
    assert poly(1, 2, 0, 0) == poly(1, 2)
    assert poly(0, 0).is_zero()


def test_polynomial_divmod_and_exact_div():
    a = poly(-1, 0, 1)          # t^2 - 1
    b = poly(1, 1)              # t + 1
    q, r = divmod(a, b)
    assert q == poly(-1, 1) and r.is_zero()
    assert a.exact_div(b) == poly(-1, 1)
    with pytest.raises(Exception):
        poly(1, 1, 1).exact_div(b)


def test_polynomial_evaluation_horner():
    p = poly("1/2", -3, 1)      # t^2 - 3t + 1/2
    assert p(rat(2)) == rat("-3/2")  # 4 - 6 + 1/2  [TRIVIAL]
    assert p(rat(0)) == rat("1/2")


def test_poly_gcd():
    # gcd(t^2 - 1, t^2 - 2t + 1) = t - 1 (monic)  [TRIVIAL]
    g = poly_gcd(poly(-1, 0, 1), poly(1, -2, 1))
    assert g == poly(-1, 1)


def test_derivative():
    assert poly(5, -3, 0, 2).derivative() == poly(-3, 0, 6)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

def test_rational_function_normalization():
    # (t^2 - 1)/(2t + 2) = (t - 1)/2 with monic denominator convention
    f = rf((-1, 0, 1), (2, 2))
    assert f == rf(("-1/2", "1/2"))
    assert f.den == POLY_ONE


def test_rational_function_equality_is_structural():
    assert rf((0, 2), (0, 0, 2)) == rf((1,), (0, 1))  # 2t/2t^2 = 1/t
    assert rf((1,), (0, 1)) != rf((1,), (0, 0, 1))


def test_rational_function_arithmetic_identities():
    f = rf((1, 2), (3, 0, 1))
    g = rf((0, 1), (1, 1))
    assert (f + g) - g == f
    assert (f * g) / g == f
    assert f * 0 == RationalFunction(0)
    assert (f ** 2) == f * f


def test_rational_function_evaluate_and_pole():
    f = rf((1,), (-1, 1))       # 1/(t - 1)
    assert f.evaluate(rat(3)) == rat("1/2")
    with pytest.raises(PoleAtPoint):
        f.evaluate(rat(1))


def test_constant_detection():
    assert rf((3,), (6,)).as_rational() == rat("1/2")
    assert not rf((0, 1)).is_constant()


# ---------------------------------------------------------------------------
# field protocol objects
# ---------------------------------------------------------------------------

def test_field_protocol_roundtrip():
    x = QQ.of("5/3")
    assert QQ.from_json(QQ.to_json(x)) == x
    f = QT.of("5/3") * QT.t
    assert QT.from_json(QT.to_json(f)) == f
    assert QQ.sign(QQ.of("-2")) == -1


def test_function_field_has_no_sign():
    with pytest.raises(TypeError):
        QT.sign(QT.t)


# ---------------------------------------------------------------------------
# Sturm root counting, checked against sympy and against construction
# ---------------------------------------------------------------------------

def _to_sympy(p):
    t = sympy.Symbol("t")
    return sum(sympy.Rational(str(c)) * t ** i for i, c in enumerate(p.coeffs))


def test_sturm_known_roots():
    # p = (t - 1/2)(t - 2)(t + 3)  [TRIVIAL roots]
    p = poly("-1/2", 1) * poly(-2, 1) * poly(3, 1)
    assert sturm_root_count(p, rat(0), rat(1)) == 1
    assert sturm_root_count(p, rat(-4), rat(3)) == 3
    assert sturm_root_count(p, rat("5/2"), rat(10)) == 0


def test_count_roots_open_divides_out_endpoint_roots():
    # roots at 0 (double), 1/6 and 5
    p = poly(0, 0, 1) * poly("-1/6", 1) * poly(-5, 1)
    interior, at_a, at_b = count_roots_open(p, rat(0), rat("1/6"))
    assert (interior, at_a, at_b) == (0, True, True)
    interior, at_a, at_b = count_roots_open(p, rat(-1), rat(1))
    assert (interior, at_a, at_b) == (2, False, False)


def test_sturm_against_sympy_oracle():
    # [DERIVED] randomized comparison against sympy.polys real root counting
    rng = random.Random(20260823)
    t = sympy.Symbol("t")
    for _ in range(15):
        nroots = rng.randint(1, 4)
        p = POLY_ONE
        roots = []
        for _ in range(nroots):
            r = rat(rng.randint(-8, 8)) / rng.randint(1, 5)
            roots.append(r)
            p = p * poly(-r, 1)
        # random interval avoiding the roots as endpoints
        a = rat(rng.randint(-12, 0)) + rat("1/7")
        b = a + rng.randint(1, 15) + rat("1/11")
        expected = sympy.Poly(_to_sympy(p), t).count_roots(
            sympy.Rational(str(a)), sympy.Rational(str(b)))
        assert sturm_root_count(p, a, b) == expected
        # distinct roots only: cross-check against the constructed list
        assert sturm_root_count(p, a, b) == len(
            {r for r in roots if a < r < b})


def test_sturm_handles_repeated_roots():
    p = poly(-1, 1) ** 3 * poly(-2, 1)  # (t-1)^3 (t-2)
    assert sturm_root_count(p, rat(0), rat(3)) == 2


# ---------------------------------------------------------------------------
# property-based: field axioms of Q(t) elements
# ---------------------------------------------------------------------------

from hypothesis import given, settings  # noqa: E402
from hypothesis import strategies as st  # noqa: E402

coeff = st.integers(-9, 9)
rfs = st.builds(
    lambda nc, dc: RationalFunction(Polynomial([rat(c) for c in nc]),
                                    Polynomial([rat(c) for c in dc])),
    st.lists(coeff, min_size=1, max_size=4),
    st.lists(coeff, min_size=1, max_size=3).filter(lambda cs: any(cs)))


@settings(max_examples=50, deadline=None)
@given(rfs, rfs, rfs)
def test_rational_function_field_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f - f == RationalFunction(0)
    if not g.is_zero():
        assert (f / g) * g == f
