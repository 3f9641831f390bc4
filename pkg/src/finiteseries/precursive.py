"""P-recursive sequences and multivariate coefficient recurrences.

A univariate recurrence is stored as ``sum_j P_j(n) g(n + a_j) = 0`` with shifts
``0 = a_1 < a_2 < ... < a_m``, valid for ``n >= start``.

A multivariate recurrence is a table ``a -> Q_a(t)`` over offsets
``a in {-N..N}^k`` standing for ``sum_a Q_a(n_k) f(n - a) = 0``; coefficients with
a negative index are zero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BoxTooSmall, LeadingZero, ParseError
from .poly import MultiPoly, parse_poly

__all__ = [
    "UniPRecurrence",
    "MultiCoeffRecurrence",
    "OdeOperator",
    "unroll_uni",
    "ode_to_recurrence",
    "validate_multirec",
    "normalize_q",
]

_N_NAMES = ("n",)
_T_NAMES = ("t",)


def _uni(p, names):
    if isinstance(p, MultiPoly):
        if p.nvars != 1:
            raise ValueError("recurrence coefficients must be univariate")
        return p
    if isinstance(p, str):
        return parse_poly(p, names=names)
    return MultiPoly.constant(p, 1)


def _horner(coeffs, n):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


@dataclass(frozen=True)
class UniPRecurrence:
    shifts: tuple
    coeffs: tuple
    start: int = 0

    def __post_init__(self):
        shifts = tuple(int(a) for a in self.shifts)
        coeffs = tuple(_uni(c, _N_NAMES) for c in self.coeffs)
        if len(shifts) != len(coeffs) or not shifts:
            raise ValueError("need one coefficient per shift and at least one term")
        if shifts[0] != 0 or any(b <= a for a, b in zip(shifts, shifts[1:])):
            raise ValueError(f"shifts must start at 0 and increase strictly, got {shifts}")
        if all(c.is_zero() for c in coeffs):
            raise ValueError("all recurrence coefficients are zero")
        if self.start < 0:
            raise ValueError("validity start must be nonnegative")
        object.__setattr__(self, "shifts", shifts)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_terms(cls, terms, start=0):
        """Build from ``{shift: coefficient}``, dropping zero coefficients."""
        items = sorted((a, _uni(c, _N_NAMES)) for a, c in terms.items())
        items = [(a, c) for a, c in items if not c.is_zero()]
        return cls(tuple(a for a, _ in items), tuple(c for _, c in items), start)

    @property
    def order(self):
        return self.shifts[-1]

    @property
    def leading(self):
        return self.coeffs[-1]

    def residual(self, seq, n):
        """Value of ``sum_j P_j(n) g(n + a_j)`` on a concrete sequence."""
        return sum(c(n) * seq[n + a] for a, c in zip(self.shifts, self.coeffs))

    def to_json(self):
        out = {"shifts": list(self.shifts), "coeffs": [c.to_string(_N_NAMES) for c in self.coeffs]}
        if self.start:
            out["start"] = self.start
        return out

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            shifts, coeffs = obj["shifts"], obj["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"recurrence JSON needs 'shifts' and 'coeffs': {exc}") from exc
        polys = [parse_poly(str(c), names=_N_NAMES) for c in coeffs]
        try:
            return cls(tuple(shifts), tuple(polys), int(obj.get("start", 0)))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def __str__(self):
        parts = []
        for a, c in zip(self.shifts, self.coeffs):
            arg = "n" if a == 0 else f"n+{a}"
            parts.append(f"({c.to_string(_N_NAMES)})*g({arg})")
        return " + ".join(parts) + " = 0"


def unroll_uni(rec, init, count):
    """First ``count`` terms of the sequence defined by ``rec`` and initial values.

    For each ``n >= rec.start`` the term ``g(n + a_m)`` is solved from the
    recurrence unless an initial value already covers that index.
    """
    seq = [Fraction(v) for v in init[:count]]
    top = rec.order
    coeffs = [c.univariate_coeffs() for c in rec.coeffs]
    lead = coeffs[-1]
    lower = list(zip(rec.shifts[:-1], coeffs[:-1]))
    n = len(seq) - top
    while len(seq) < count:
        target = n + top
        if n < rec.start:
            raise ValueError(
                f"need at least {rec.start + top} initial values, got {len(init)}"
            )
        p = _horner(lead, n)
        if not p:
            raise LeadingZero(target)
        acc = Fraction(0)
        for a, c in lower:
            v = seq[n + a]
            if v:
                acc += _horner(c, n) * v
        seq.append(-acc / p)
        n += 1
    return seq


@dataclass(frozen=True)
class OdeOperator:
    """``sum_j P_j(x) D^j`` acting on univariate power series."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(_uni(c, ("x",)) for c in self.coeffs)
        if not coeffs or coeffs[-1].is_zero():
            raise ValueError("leading coefficient of the operator must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def parse(cls, coeffs):
        return cls(tuple(parse_poly(c, names=("x",)) for c in coeffs))


def _rising(lo, j):
    """``(n + lo)(n + lo + 1)...(n + lo + j - 1)`` as a polynomial in ``n``."""
    out = MultiPoly.one(1)
    n = MultiPoly.var(0, 1)
    for k in range(j):
        out = out * (n + (lo + k))
    return out


def ode_to_recurrence(ode):
    """Recurrence satisfied by the coefficients of every power-series solution.

    ``c x^i D^j`` contributes ``c (n-i+1)...(n-i+j) g(n-i+j)`` to the coefficient of
    ``x^n``; the result is re-indexed so the smallest shift is 0. The re-indexed
    relation holds for every ``n >= 0``: at the indices that were negative before
    re-indexing each coefficient contains a zero factor.
    """
    by_shift = {}
    for j, p in enumerate(ode.coeffs):
        for (i,), c in p.terms.items():
            k = j - i
            by_shift[k] = by_shift.get(k, MultiPoly.zero(1)) + _rising(1 - i, j) * c
    by_shift = {k: v for k, v in by_shift.items() if not v.is_zero()}
    k0 = min(by_shift)
    n = MultiPoly.var(0, 1)
    terms = {}
    for k, poly in by_shift.items():
        # substitute n -> n - k0
        sub = MultiPoly.zero(1)
        for (e,), c in poly.terms.items():
            sub = sub + (n - k0) ** e * c
        terms[k - k0] = sub
    return UniPRecurrence.from_terms(terms)


@dataclass(frozen=True)
class MultiCoeffRecurrence:
    window: int
    table: dict = field(hash=False)
    nvars: int

    def __post_init__(self):
        table = {}
        for off, q in self.table.items():
            off = tuple(int(a) for a in off)
            if len(off) != self.nvars:
                raise ValueError(f"offset {off} does not have {self.nvars} entries")
            if any(abs(a) > self.window for a in off):
                raise ValueError(f"offset {off} outside the window {self.window}")
            table[off] = _uni(q, _T_NAMES)
        if all(q.is_zero() for q in table.values()):
            raise ValueError("recurrence table is identically zero")
        object.__setattr__(self, "table", table)

    def support(self):
        return {a: q for a, q in self.table.items() if not q.is_zero()}

    def to_json(self):
        return {
            "window": self.window,
            "entries": [
                {"offset": list(a), "q": q.to_string(_T_NAMES)} for a, q in sorted(self.table.items())
            ],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            window = int(obj["window"])
            entries = obj["entries"]
            table = {tuple(e["offset"]): parse_poly(str(e["q"]), names=_T_NAMES) for e in entries}
        except (KeyError, TypeError) as exc:
            raise ParseError(f"recurrence JSON needs 'window' and 'entries': {exc}") from exc
        if not table:
            raise ParseError("recurrence has no entries")
        nvars = len(next(iter(table)))
        try:
            return cls(window, table, nvars)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


def _window_sum(rec_terms, data, idx, axis):
    """``sum_a Q_a(n_axis) f(n - a)`` with negative indices read as zero."""
    total = Fraction(0)
    for off, coeffs in rec_terms:
        j = tuple(n - a for n, a in zip(idx, off))
        if min(j) < 0:
            continue
        v = data[j]
        if v:
            total += _horner(coeffs, idx[axis]) * v
    return total


def validate_multirec(rec, f, include_boundary=False):
    """Check the recurrence on every checkable index of the prefix.

    By default an index is checkable when every window entry ``n - a`` lies
    inside the valid region, i.e. the relation is read as holding away from the
    coordinate boundary. ``include_boundary=True`` also checks indices whose
    window reaches negative coordinates (those entries count as zero).
    """
    if f.ndim != rec.nvars:
        raise ValueError(f"prefix has {f.ndim} axes, recurrence has {rec.nvars}")
    terms = [(a, q.univariate_coeffs()) for a, q in rec.support().items()]
    offs = [a for a, _ in terms]
    axis = rec.nvars - 1
    checked = 0
    for idx in np.ndindex(*f.valid):
        ok = True
        for off in offs:
            for n, a, v in zip(idx, off, f.valid):
                j = n - a
                if j >= v or (j < 0 and not include_boundary):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        checked += 1
        if _window_sum(terms, f.data, idx, axis):
            return False
    if not checked:
        raise BoxTooSmall("no index of the prefix has its whole window in the box")
    return True


def normalize_q(rec):
    """Divide the whole table by the largest power of ``t`` dividing every entry.

    Returns the divided recurrence and the table of constant terms ``q(a)``.
    """
    vals = [q.valuation() for q in rec.table.values() if not q.is_zero()]
    v = min(vals)
    divided = {}
    for off, q in rec.table.items():
        divided[off] = MultiPoly({(e - v,): c for (e,), c in q.terms.items()}, 1)
    qtable = {off: q.constant_term() for off, q in divided.items()}
    return MultiCoeffRecurrence(rec.window, divided, rec.nvars), qtable


def qtable_sum(qtable, data, idx):
    """``sum_a q(a) f(n - a)`` for constant coefficients (negative indices are zero)."""
    return _window_sum([(a, [q]) for a, q in qtable.items() if q], data, idx, 0)
