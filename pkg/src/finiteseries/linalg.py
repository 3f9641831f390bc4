"""Exact sparse row reduction over the rationals.

Rows are fed one at a time and reduced fraction-free (integer rows divided by
their content), so an inconsistent system is detected as soon as the offending
equation arrives. Pivoting is by lowest column index, which makes every result
independent of anything but the order rows are added in.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

__all__ = ["RowReducer", "solve"]


def _integer_row(row, rhs):
    den = 1
    for v in row.values():
        den = lcm(den, Fraction(v).denominator)
    den = lcm(den, Fraction(rhs).denominator)
    out = {c: int(Fraction(v) * den) for c, v in row.items() if v}
    r = int(Fraction(rhs) * den)
    return out, r


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


class RowReducer:
    """Row echelon form of ``A x = b`` grown incrementally.

    The right-hand side is stored under the key ``ncols`` of each row dict.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}
        self.consistent = True

    @property
    def rank(self):
        return len(self.pivots)

    def add(self, row, rhs=0):
        """Add the equation ``sum(row[c] * x_c) = rhs``; return ``False`` once inconsistent."""
        if not self.consistent:
            return False
        ints, r = _integer_row(row, rhs)
        if r:
            ints[self.ncols] = r
        rhs_key = self.ncols
        while ints:
            lead = min(ints)
            if lead == rhs_key:
                self.consistent = False
                return False
            prow = self.pivots.get(lead)
            if prow is None:
                if ints[lead] < 0:
                    ints = {c: -v for c, v in ints.items()}
                self.pivots[lead] = _primitive(ints)
                return True
            a, b = ints[lead], prow[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: v * b for c, v in ints.items()}
            for c, v in prow.items():
                w = new.get(c, 0) - a * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            ints = _primitive(new)
        return True

    def free_columns(self):
        return [c for c in range(self.ncols) if c not in self.pivots]

    def _back_substitute(self, fixed, homogeneous):
        x = [Fraction(0)] * self.ncols
        for c, v in fixed.items():
            x[c] = Fraction(v)
        for c in sorted(self.pivots, reverse=True):
            row = self.pivots[c]
            acc = Fraction(0) if homogeneous else Fraction(row.get(self.ncols, 0))
            for j, v in row.items():
                if j != c and j != self.ncols:
                    acc -= v * x[j]
            x[c] = acc / row[c]
        return x

    def solution(self):
        """A particular solution with every free variable set to zero."""
        if not self.consistent:
            raise ValueError("system is inconsistent")
        return self._back_substitute({}, homogeneous=False)

    def nullspace(self):
        """Basis of the homogeneous solutions, one vector per free column."""
        return [self._back_substitute({f: 1}, homogeneous=True) for f in self.free_columns()]


def solve(rows, rhs, ncols):
    """Solve a dense system; returns ``(particular, nullspace)`` or ``None`` if inconsistent."""
    red = RowReducer(ncols)
    for row, b in zip(rows, rhs):
        if not red.add({c: v for c, v in enumerate(row) if v}, b):
            return None
    return red.solution(), red.nullspace()
