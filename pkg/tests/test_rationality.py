
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finiteseries import (
    DensePrefix,
    MultiPoly,
    RationalGF,
    SzegoForm,
    UniPRecurrence,
    certify_periodic,
    detect_szego,
    guess_rational,
    rational_fit,
    rf_equal,
    series_expand,
)
from finiteseries.errors import BoxTooSmall, NoFit, NoPeriodFound

from conftest import diag_prefix, ones_prefix


def R(text, d=1):
    return RationalGF.parse(text, d)


def test_detect_constant():
    form = detect_szego([1] * 20, 5, 5)
    assert (form.s, form.m) == (0, 1)
    assert rf_equal(form.to_rational(), R("1/(1-x)"))


def test_detect_alternating():
    form = detect_szego([1, 0] * 10, 5, 5)
    assert (form.s, form.m) == (0, 2)
    assert rf_equal(form.to_rational(), R("1/(1-x^2)"))


def test_detect_with_preperiod():
    form = detect_szego([5] + [1, 0] * 10, 5, 5)
    assert (form.s, form.m) == (1, 2)
    assert form.preperiod == (5,)


def test_detect_failures():
    with pytest.raises(ValueError):
        detect_szego([1, 2, 3], 2, 2)
    with pytest.raises(NoPeriodFound):
        detect_szego([1, 2, 3, 4, 5, 6, 7, 8, 9, 10], 1, 3)


def test_certify_examples():
    ones = SzegoForm((), (1,))
    assert certify_periodic(UniPRecurrence.from_terms({0: -1, 1: 1}), ones)
    assert certify_periodic(UniPRecurrence.from_terms({0: -1, 2: 1}), SzegoForm((), (1, 0)))
    assert not certify_periodic(UniPRecurrence.from_terms({0: -1, 1: "n+1"}), ones)


def test_certify_checks_preperiod_window():
    form = SzegoForm((5,), (1, 0))
    rec = UniPRecurrence.from_terms({0: -1, 2: 1})
    assert not certify_periodic(rec, form, validity_start=0)
    assert certify_periodic(rec, form, validity_start=1)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=6), st.lists(st.integers(0, 3), min_size=1, max_size=6))
def test_szego_form_expands_to_its_sequence(pre, per):
    form = SzegoForm(pre, per)
    seq = series_expand(form.to_rational(), (30,)).tolist()
    assert seq == form.terms(30)


def test_fit_all_ones():
    gf = rational_fit(ones_prefix(10), (0, 0), (1, 1))
    assert rf_equal(gf, R("1/((1-x)*(1-y))", 2))
    assert gf.denominator.constant_term() == 1


def test_fit_diagonal():
    assert rf_equal(rational_fit(diag_prefix(10), (0, 0), (1, 1)), R("1/(1-x*y)", 2))


def test_fit_prefers_smallest_denominator():
    # 1/(1-xy) also fits with den box (2, 2), but the smallest support wins
    gf = rational_fit(diag_prefix(12), (2, 2), (2, 2))
    assert gf.denominator == MultiPoly.parse("1-x*y", 2)


def test_square_exponents_do_not_fit():
    f = DensePrefix.from_function((20, 20), lambda i, j: int(j == i * i))
    for k in range(5):
        for j in range(5):
            with pytest.raises(NoFit):
                rational_fit(f, (k, j), (k, j))


def test_fit_box_too_small():
    with pytest.raises(BoxTooSmall):
        rational_fit(ones_prefix(4), (1, 1), (1, 1))


def test_guess_rational_examples():
    assert rf_equal(guess_rational(diag_prefix(16)), R("1/(1-x*y)", 2))
    fib = series_expand(R("x/(1-x-x^2)"), (30,))
    assert rf_equal(guess_rational(fib), R("x/(1-x-x^2)"))
    f = series_expand(R("(1+2*x*y)/((1-x^2)*(1-y))", 2), (16, 16))
    assert rf_equal(guess_rational(f), R("(1+2*x*y)/((1-x^2)*(1-y))", 2))


small = st.dictionaries(st.tuples(st.integers(0, 1), st.integers(0, 1)), st.integers(-3, 3).filter(bool), max_size=4)


@settings(max_examples=30, deadline=None)
@given(small, small)
def test_fit_round_trip(num, den):
    den = dict(den)
    den[(0, 0)] = 1
    rf = RationalGF(MultiPoly(num, 2), MultiPoly(den, 2))
    gf = rational_fit(series_expand(rf, (10, 10)), (1, 1), (1, 1))
    assert rf_equal(gf, rf)
