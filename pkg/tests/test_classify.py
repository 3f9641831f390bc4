import pytest

from finiteseries import (
    EmpiricalFinite,
    FiniteCertified,
    SyndeticCertified,
    UniPRecurrence,
    integer_root_bound,
    max_gap,
    support_classify,
    syndetic_witness,
    unroll_uni,
)
from finiteseries.errors import ZeroPolynomial
from finiteseries.poly import MultiPoly, parse_poly


def n_poly(text):
    return parse_poly(text, names=("n",))


def test_root_bounds():
    assert integer_root_bound(n_poly("n-3")) == 3
    assert integer_root_bound(n_poly("(n-2)*(n-5)")) == 5
    assert integer_root_bound(n_poly("n^2+1")) == 0
    assert integer_root_bound(n_poly("n^3*(2*n-14)")) == 7
    with pytest.raises(ZeroPolynomial):
        integer_root_bound(MultiPoly.zero(1))


def test_single_term_is_finite():
    r = UniPRecurrence.from_terms({0: "n-3"})
    assert support_classify(r, [4, 5, 6, 7], 20) == FiniteCertified(3)


def test_constant_sequence_is_syndetic():
    r = UniPRecurrence.from_terms({0: "-1", 1: "1"})
    assert support_classify(r, [1], 20) == SyndeticCertified(1, 1)


def test_alternating_support_is_syndetic():
    r = UniPRecurrence.from_terms({0: "-1", 2: "1"})
    res = support_classify(r, [1, 0], 20)
    assert isinstance(res, SyndeticCertified) and res.constant == 2
    seq = unroll_uni(r, [1, 0], 200)
    assert syndetic_witness(seq[res.start:], res.constant)


def test_zero_sequence_is_only_empirically_finite():
    r = UniPRecurrence.from_terms({0: "-1", 1: "1"})
    assert support_classify(r, [0], 20) == EmpiricalFinite(20)


def test_horizon_must_clear_bound():
    r = UniPRecurrence.from_terms({0: "n-10", 1: "1"})
    with pytest.raises(ValueError):
        support_classify(r, [1], 5)


def test_max_gap_examples():
    assert max_gap([1, 1, 1, 1]) == 1
    assert max_gap([1, 0, 0, 1, 0, 1]) == 3
    squares = [int(round(n**0.5)) ** 2 == n for n in range(101)]
    assert max_gap(squares) == 19


def test_syndetic_witness_examples():
    assert syndetic_witness([1] * 30, 1)
    squares = [int(round(n**0.5)) ** 2 == n for n in range(401)]
    assert not syndetic_witness(squares, 10)
    assert syndetic_witness([int(n % 3 == 0) for n in range(40)], 3)
