from fractions import Fraction

import numpy as np
import pytest

from finiteseries import DensePrefix, MultiPoly


def naive_product(series, poly, box):
    """Coefficients of ``poly * series`` on ``box`` by direct convolution (oracle)."""
    out = {}
    for n in np.ndindex(*box):
        acc = Fraction(0)
        for e, c in poly.terms.items():
            j = tuple(a - b for a, b in zip(n, e))
            if min(j) >= 0:
                acc += c * series[j]
        out[n] = acc
    return out


def diag_prefix(n):
    return DensePrefix.from_function((n, n), lambda i, j: int(i == j))


def ones_prefix(n, d=2):
    return DensePrefix.ones((n,) * d)


def even_column_prefix(n):
    return DensePrefix.from_function((n, n), lambda i, j: int(i % 2 == 0))


@pytest.fixture
def x():
    return MultiPoly.var(0, 1)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
