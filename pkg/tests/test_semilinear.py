import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finiteseries import (
    LinearSet,
    RationalGF,
    SemilinearSet,
    contains,
    gf_linear,
    gf_semilinear,
    indicator_prefix,
    is_free,
    multiplicity_prefix,
    rf_equal,
    series_expand,
)
from finiteseries.errors import NotFree, ParseError

from conftest import diag_prefix

DIAG = LinearSet((0, 0), ((1, 1),))
GRID = LinearSet((1, 2), ((2, 0), (0, 3)))


def test_contains_examples():
    assert contains(SemilinearSet.of(DIAG), (3, 3))
    assert contains(SemilinearSet.of(GRID), (5, 8))
    assert not contains(SemilinearSet.of(GRID), (2, 2))


def test_indicator_examples():
    assert indicator_prefix(SemilinearSet.of(DIAG), (3, 3)) == diag_prefix(3)
    assert not any(indicator_prefix(SemilinearSet((), (), 2), (4, 4)).data.flat)
    evens_odds = SemilinearSet.of(LinearSet((0, 0), ((2, 0),)), LinearSet((1, 0), ((2, 0),)))
    assert indicator_prefix(evens_odds, (5, 1)).tolist() == [[1]] * 5


def test_freeness():
    assert is_free(DIAG, (6, 6))
    assert is_free(LinearSet((0, 0), ((1, 0), (0, 1))), (6, 6))
    assert not is_free(LinearSet((0, 0), ((1, 0), (2, 0))), (6, 6))


def test_zero_period_rejected():
    with pytest.raises(ValueError):
        LinearSet((0, 0), ((0, 0),))


def test_gf_linear_examples():
    for d in (1, 2, 3):
        units = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
        expected = "1/(" + "*".join(f"(1-{v})" for v in "xyz"[:d]) + ")"
        assert rf_equal(gf_linear(LinearSet((0,) * d, units)), RationalGF.parse(expected, d))
    assert rf_equal(gf_linear(DIAG), RationalGF.parse("1/(1-x*y)", 2))
    assert rf_equal(gf_linear(GRID), RationalGF.parse("x*y^2/((1-x^2)*(1-y^3))", 2))
    with pytest.raises(NotFree):
        gf_linear(LinearSet((0, 0), ((1, 0), (2, 0))))


def test_gf_semilinear_examples():
    gf, ok = gf_semilinear(SemilinearSet.of(DIAG), (8, 8))
    assert ok and rf_equal(gf, RationalGF.parse("1/(1-x*y)", 2))
    gf, ok = gf_semilinear(SemilinearSet.of(DIAG, DIAG), (8, 8))
    assert not ok and rf_equal(gf, RationalGF.parse("2/(1-x*y)", 2))
    gf, ok = gf_semilinear(SemilinearSet((( 0, 0),), (), 2), (8, 8))
    assert ok and rf_equal(gf, RationalGF.parse("1", 2))


def test_json_round_trip_and_errors():
    s = SemilinearSet.of(GRID, DIAG, finite=[(7, 0)])
    assert SemilinearSet.from_json(json.dumps(s.to_json())) == s
    with pytest.raises(ParseError):
        SemilinearSet.from_json({"parts": [{"periods": [[1, 1]]}]})


vec = st.tuples(st.integers(0, 3), st.integers(0, 3))
period = vec.filter(any)
linear = st.builds(lambda b, ps: LinearSet(b, tuple(ps)), vec, st.lists(period, max_size=2))


def brute_membership(s, p, box):
    """Oracle: enumerate every combination with coefficients bounded by the box."""
    if p in s.finite:
        return True
    for part in s.parts:
        ranges = [range(max(box) + 1)] * len(part.periods)
        for cs in np.ndindex(*[len(r) for r in ranges]) if part.periods else [()]:
            q = list(part.base)
            for c, v in zip(cs, part.periods):
                q = [a + c * b for a, b in zip(q, v)]
            if tuple(q) == tuple(p):
                return True
    return False


@settings(max_examples=25, deadline=None)
@given(st.lists(linear, max_size=2), st.lists(vec, max_size=2))
def test_contains_matches_indicator_and_bruteforce(parts, finite):
    s = SemilinearSet(tuple(finite), tuple(parts), 2)
    ind = indicator_prefix(s, (7, 7))
    for p in np.ndindex(7, 7):
        assert contains(s, p) == bool(ind[p]) == brute_membership(s, p, (7, 7))


@settings(max_examples=25, deadline=None)
@given(st.lists(linear, max_size=3), st.lists(vec, max_size=2))
def test_expansion_counts_multiplicities(parts, finite):
    box = (10, 10)
    if not all(is_free(p, box) for p in parts):
        return
    s = SemilinearSet(tuple(finite), tuple(parts), 2)
    gf, ok = gf_semilinear(s, box, box)
    mult = multiplicity_prefix(s, box)
    assert series_expand(gf, box) == mult
    assert ok == all(v in (0, 1) for v in mult.data.flat)
