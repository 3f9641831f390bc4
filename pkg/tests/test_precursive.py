from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finiteseries import (
    MultiCoeffRecurrence,
    OdeOperator,
    RationalGF,
    UniPRecurrence,
    normalize_q,
    ode_to_recurrence,
    series_expand,
    unroll_uni,
    validate_multirec,
)
from finiteseries.errors import BoxTooSmall, LeadingZero
from finiteseries.poly import MultiPoly, parse_poly

from conftest import diag_prefix, ones_prefix


def rec(terms, start=0):
    return UniPRecurrence.from_terms(terms, start)


def test_constant_sequence():
    assert unroll_uni(rec({0: "-1", 1: "1"}), [1], 5) == [1] * 5


def test_reciprocal_factorials():
    assert unroll_uni(rec({0: "-1", 1: "n+1"}), [1], 4) == [1, 1, Fraction(1, 2), Fraction(1, 6)]


def test_fibonacci():
    assert unroll_uni(rec({0: "-1", 1: "-1", 2: "1"}), [0, 1], 6) == [0, 1, 1, 2, 3, 5]


def test_leading_zero_reports_index():
    # (n-2) g(n+1) = g(n): index 3 cannot be solved for
    with pytest.raises(LeadingZero) as err:
        unroll_uni(rec({0: "-1", 1: "n-2"}), [1], 6)
    assert err.value.index == 3
    # an extra initial value covering index 3 makes it solvable
    seq = unroll_uni(rec({0: "-1", 1: "n-2"}), [1, -1, 1, 7], 6)
    assert len(seq) == 6


def test_unrolled_terms_satisfy_recurrence():
    r = rec({0: "n^2+1", 1: "-3*n", 3: "n+2"})
    seq = unroll_uni(r, [1, 2, 3], 30)
    assert all(r.residual(seq, n) == 0 for n in range(27))


def test_ode_exponential():
    assert ode_to_recurrence(OdeOperator.parse(["-1", "1"])) == rec({0: "-1", 1: "n+1"})


def test_ode_geometric():
    r = ode_to_recurrence(OdeOperator.parse(["-1", "1-x"]))
    assert r == rec({0: "-n-1", 1: "n+1"})
    # the coefficients of 1/(1-x) satisfy it
    seq = series_expand(RationalGF.parse("1/(1-x)"), (20,)).tolist()
    assert all(r.residual(seq, n) == 0 for n in range(19))


def test_ode_derivative_only():
    # F' = 0 gives (n+1) g(n+1) = 0, re-indexed so the lowest shift is 0
    assert ode_to_recurrence(OdeOperator.parse(["0", "1"])) == rec({0: "n"})


def test_ode_geometric_unrolls_to_expansion():
    r = ode_to_recurrence(OdeOperator.parse(["-2", "1-2*x"]))
    seq = unroll_uni(r, [1], 15)
    assert seq == series_expand(RationalGF.parse("1/(1-2*x)"), (15,)).tolist()


def multirec(table, window=1):
    return MultiCoeffRecurrence(window, {k: parse_poly(v, names=("t",)) for k, v in table.items()}, 2)


def test_validate_examples():
    assert validate_multirec(multirec({(0, 0): "1", (1, 0): "-1"}), ones_prefix(6))
    assert validate_multirec(multirec({(0, 0): "1", (1, 1): "-1"}), diag_prefix(6))
    assert not validate_multirec(multirec({(0, 0): "1", (1, 0): "-1"}), diag_prefix(6))


def test_validate_box_too_small():
    with pytest.raises(BoxTooSmall):
        validate_multirec(multirec({(0, 0): "1", (3, 0): "-1"}, 3), ones_prefix(3))


def test_normalize_examples():
    a, b = (0, 0), (1, 0)
    r, q = normalize_q(multirec({a: "t^2+t", b: "t"}))
    assert q == {a: 1, b: 1}
    assert r.table[a] == parse_poly("t+1", names=("t",))
    _, q = normalize_q(multirec({a: "3"}))
    assert q == {a: 3}
    _, q = normalize_q(multirec({a: "t*(t-1)", b: "t^3"}))
    assert q == {a: -1, b: 0}


def test_json_round_trips():
    r = rec({0: "n^2-1/2", 2: "3"}, start=2)
    assert UniPRecurrence.from_json(r.to_json()) == r
    m = multirec({(0, 0): "t+1", (-1, 1): "2"})
    back = MultiCoeffRecurrence.from_json(m.to_json())
    assert back.table == m.table and back.window == m.window


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=4).filter(lambda c: c[0] and c[-1]),
       st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_constant_coefficient_recurrence_matches_rational_expansion(coeffs, init):
    # sum_j c_j g(n+j) = 0 for all n >= 0 means Q G = P with Q = sum_j c_j x^(m-j), deg P < m
    m = len(coeffs) - 1
    r = rec({j: str(c) for j, c in enumerate(coeffs) if c})
    seq = unroll_uni(r, init[:m], 25)
    assert all(r.residual(seq, n) == 0 for n in range(25 - m))
    q = MultiPoly({(m - j,): c for j, c in enumerate(coeffs) if c}, 1)
    p = MultiPoly({(k,): sum(q.coeff((i,)) * seq[k - i] for i in range(k + 1)) for k in range(m)}, 1)
    assert series_expand(RationalGF(p, q), (25,)).tolist() == seq
