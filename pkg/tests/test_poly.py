from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finiteseries import MultiPoly, parse_poly
from finiteseries.errors import NotDivisible, ParseError


def P(text, d=1):
    return parse_poly(text, nvars=d)


def test_product_of_conjugates():
    assert P("x+1") * P("x-1") == P("x^2-1")


def test_divexact_exact():
    assert P("x^2-1").divexact(P("x-1")) == P("x+1")


def test_divexact_remainder_raises():
    with pytest.raises(NotDivisible):
        P("x^2+1").divexact(P("x-1"))


def test_zero_coefficients_never_stored():
    p = P("x + y - x", 2)
    assert p == P("y", 2)
    assert all(c != 0 for c in p.terms.values())


def test_rational_coefficients_and_aliases():
    p = P("1/2*x1^2*x2 - 3/4", 2)
    assert p.coeff((2, 1)) == Fraction(1, 2)
    assert p.constant_term() == Fraction(-3, 4)
    assert p == P("x^2*y/2 - 3/4", 2)


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse_poly("x +\n  * y", nvars=2)
    assert err.value.line == 2
    assert err.value.column == 3


def test_parse_rejects_polynomial_division():
    with pytest.raises(ParseError):
        parse_poly("1/(1-x)")


def test_to_string_round_trip():
    p = P("3 - 2*x*y + 1/5*y^3 + x^2", 2)
    assert P(p.to_string(), 2) == p


def test_evaluation():
    assert P("x^2 - 3*x*y + 1", 2)(2, 1) == -1


polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)),
    max_size=5,
).map(lambda t: MultiPoly(t, 2))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_multiplication_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_divexact_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).divexact(b) == a
