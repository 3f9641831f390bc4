from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from finiteseries.linalg import RowReducer, solve


def test_inconsistency_detected_on_arrival():
    red = RowReducer(2)
    assert red.add({0: 1, 1: 1}, 2)
    assert red.add({0: 1, 1: -1}, 0)
    assert not red.add({0: 2, 1: 2}, 5)


def test_solution_and_nullspace():
    red = RowReducer(3)
    red.add({0: 1, 1: 2}, 3)
    sol = red.solution()
    null = red.nullspace()
    assert sol[0] + 2 * sol[1] == 3
    assert len(null) == 2
    for v in null:
        assert v[0] + 2 * v[1] == 0


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_consistent_systems_are_solved(rows, x):
    rhs = [sum(a * b for a, b in zip(r, x)) for r in rows]
    red = RowReducer(3)
    for r, b in zip(rows, rhs):
        assert red.add({i: v for i, v in enumerate(r) if v}, b)
    sol = red.solution()
    for r, b in zip(rows, rhs):
        assert sum(Fraction(a) * s for a, s in zip(r, sol)) == b
    # rank agrees with an independent floating-point computation on small integers
    assert red.rank == np.linalg.matrix_rank(np.array(rows, dtype=float))


def test_dense_solve_against_sympy():
    import sympy

    rows = [[1, 2, 3], [2, 4, 7], [Fraction(1, 2), 1, 2]]
    rhs = [1, 3, 1]
    particular, null = solve(rows, rhs, 3)
    M = sympy.Matrix(rows)
    assert list(M * sympy.Matrix(particular)) == rhs
    assert len(null) == 3 - M.rank()
    assert solve([[1, 1], [1, 1]], [0, 1], 2) is None
