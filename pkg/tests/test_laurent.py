from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ribbonpoly import InputError, LaurentPoly, ParseError, QuadValue, eval_quad, format_poly, parse_poly, substitute
from ribbonpoly.errors import EvaluationError

XYZ = ("x", "y", "z")
YZ = ("y", "z")


def P(text, variables=XYZ):
    return parse_poly(text, variables)


def test_ring_examples():
    assert P("1 + y") + P("-1") == P("y")
    assert P("1 + y") * P("1 + y") == P("1 + 2*y + y^2")
    half = P("x^(1/2)")
    assert half * half == P("x")
    assert (half * half).terms == {(2, 0, 0): 1}


def test_variable_mismatch():
    with pytest.raises(InputError):
        P("x") + P("y", YZ)


def test_substitute_examples():
    to_surface = {"x": "y^-1*z^-2", "y": "y", "z": "z"}
    assert substitute(P("x^(1/2)*y^(3/2)*z^2"), to_surface, YZ) == P("y*z", YZ)
    assert substitute(P("x^(-1/2)*y^(1/2)"), to_surface, YZ) == P("y*z", YZ)


def test_substitute_rejects_quarter_exponents():
    with pytest.raises(InputError):
        substitute(P("x^(1/2)"), {"x": "y^(1/2)", "y": "y", "z": "z"}, YZ)


def test_eval_quad_examples():
    assert eval_quad(P("X^2", ("X",)), {"X": QuadValue.sqrt(3)}, 3) == 3
    for rho in (Fraction(2), Fraction(3), Fraction(7, 5)):
        value = eval_quad(P("X - X^-1", ("X",)), {"X": QuadValue.sqrt(rho)}, rho)
        assert value == QuadValue(0, (rho - 1) / rho, rho)
    assert eval_quad(P("1"), {"x": 5, "y": 7, "z": 1}, 2) == 1


def test_eval_quad_division_by_zero():
    with pytest.raises(EvaluationError):
        eval_quad(P("x^-1", ("x",)), {"x": 0}, 2)


def test_quad_value_folds_square_radicands():
    assert QuadValue.sqrt(4) == 2
    assert QuadValue.sqrt(Fraction(9, 4)) * 2 == 3


def test_parse_format():
    p = P("x^(1/2)*y^(3/2)*z^2 + 3*x^(1/2)*y^(1/2)")
    assert len(p) == 2
    text = "y^2*z + 2*y*z + y*z^-1 + 3*z^-1 + y^-1*z^-1"
    assert format_poly(P(text, YZ)) == text
    assert format_poly(P("2 - x + x^(-1/2) - x", ("x",))) == "-2*x + 2 + x^(-1/2)"
    assert format_poly(LaurentPoly.zero(XYZ)) == "0"


@pytest.mark.parametrize("bad", ["x^(1/3)", "x^", "2*", "x + + y", "w", "x^(1/2", "3 x"])
def test_parse_errors(bad):
    with pytest.raises(ParseError) as info:
        P(bad)
    assert info.value.position is not None


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        P("x + x^(1/3)")
    assert info.value.position == 9


def test_parse_infers_variables():
    assert parse_poly("b*a^2").variables == ("a", "b")


# -- properties ----------------------------------------------------------------

exponent = st.integers(-4, 4)
terms = st.dictionaries(st.tuples(exponent, exponent, exponent), st.integers(-5, 5), max_size=4)
polys = terms.map(lambda t: LaurentPoly(XYZ, t))


@given(polys, polys, polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly.zero(XYZ)


@given(polys)
@settings(max_examples=60, deadline=None)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p), XYZ) == p


@given(polys, polys)
@settings(max_examples=60, deadline=None)
def test_substitute_is_homomorphism(p, q):
    # images with even doubled exponents keep every result half-integral
    images = {"x": "a*c*b^-1", "y": "b*c", "z": "c^-1"}
    abc = ("a", "b", "c")
    assert substitute(p * q, images, abc) == substitute(p, images, abc) * substitute(q, images, abc)
    assert substitute(p + q, images, abc) == substitute(p, images, abc) + substitute(q, images, abc)


even = st.integers(-3, 3).map(lambda n: 2 * n)
int_polys = st.dictionaries(st.tuples(even, even, even), st.integers(-5, 5), max_size=4).map(
    lambda t: LaurentPoly(XYZ, t)
)
nonzero = st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(lambda f: f != 0)


@given(int_polys, int_polys, nonzero, nonzero, st.sampled_from([2, 3, 5, Fraction(7, 3)]))
@settings(max_examples=60, deadline=None)
def test_eval_quad_is_multiplicative(p, q, a, b, rho):
    point = {"x": QuadValue.sqrt(rho), "y": QuadValue(a, b, rho), "z": QuadValue(b, 0, rho)}
    assert eval_quad(p * q, point, rho) == eval_quad(p, point, rho) * eval_quad(q, point, rho)
