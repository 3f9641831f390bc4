"""Recovering rational generating functions from coefficient data.

Two routes are provided: eventually periodic sequences (``F = P(x)/(1 - x^m)``)
with an exact check against a recurrence, and general multivariate fitting of
``Q F = P`` by exact linear algebra followed by verification on a margin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BoxTooSmall, NoFit, NoPeriodFound
from .linalg import RowReducer
from .poly import MultiPoly
from .series import RationalGF, series_expand

__all__ = [
    "SzegoForm",
    "detect_szego",
    "certify_periodic",
    "rational_fit",
    "guess_rational",
]


@dataclass(frozen=True)
class SzegoForm:
    """``A(x) + x^s W(x) / (1 - x^m)`` with preperiod ``A`` and period ``W``."""

    preperiod: tuple
    period: tuple

    def __post_init__(self):
        if not self.period:
            raise ValueError("period must be nonempty")
        object.__setattr__(self, "preperiod", tuple(Fraction(v) for v in self.preperiod))
        object.__setattr__(self, "period", tuple(Fraction(v) for v in self.period))

    @property
    def s(self):
        return len(self.preperiod)

    @property
    def m(self):
        return len(self.period)

    def __getitem__(self, n):
        if n < self.s:
            return self.preperiod[n]
        return self.period[(n - self.s) % self.m]

    def terms(self, count):
        return [self[n] for n in range(count)]

    def to_rational(self):
        x = MultiPoly.var(0, 1)
        a = MultiPoly.from_coeffs(self.preperiod)
        w = MultiPoly.from_coeffs(self.period)
        den = 1 - x**self.m
        return RationalGF(a * den + w.shift((self.s,)), den)


def detect_szego(seq, max_preperiod, max_period):
    """Smallest period ``m`` (then smallest preperiod ``s``) consistent with ``seq``."""
    seq = [Fraction(v) for v in seq]
    L = len(seq)
    if L < max_preperiod + 3 * max_period:
        raise ValueError(
            f"need at least {max_preperiod + 3 * max_period} terms, got {L}"
        )
    for m in range(1, max_period + 1):
        # last index where seq[n] != seq[n + m]; every s past it works
        bad = -1
        for n in range(L - m - 1, -1, -1):
            if seq[n] != seq[n + m]:
                bad = n
                break
        s = bad + 1
        if s <= max_preperiod:
            return SzegoForm(seq[:s], seq[s:s + m])
    raise NoPeriodFound(f"no preperiod <= {max_preperiod} with period <= {max_period}")


def certify_periodic(rec, form, validity_start=None):
    """Prove that the periodic extension of ``form`` satisfies ``rec`` for all large ``n``.

    For ``n >= max(start, s)`` in a fixed residue class modulo ``m`` every
    ``h(n + a_j)`` is a constant ``c_j``, so the recurrence reduces to the
    polynomial identity ``sum_j c_j P_j = 0``. Indices between the validity
    start and ``s`` are checked directly.
    """
    start = rec.start if validity_start is None else validity_start
    n0 = max(start, form.s)
    for n in range(start, n0):
        if sum(p(n) * form[n + a] for a, p in zip(rec.shifts, rec.coeffs)):
            return False
    for r in range(form.m):
        combo = MultiPoly.zero(1)
        for a, p in zip(rec.shifts, rec.coeffs):
            c = form[n0 + r + a]
            if c:
                combo = combo + p * c
        if not combo.is_zero():
            return False
    return True


def _sub_boxes(den_box):
    boxes = list(np.ndindex(*(b + 1 for b in den_box)))
    return sorted(boxes, key=lambda b: (sum(b), b))


def _fit_candidates(particular, null, monos, den_box):
    """Solutions of the fitting system supported in the smallest possible sub-box.

    With a unique solution there is nothing to choose. Otherwise every sub-box,
    by increasing total degree then lexicographically, is tested by asking for a
    combination of null vectors that kills the coordinates outside it.
    """
    if not null:
        yield particular
        return
    for box in _sub_boxes(den_box):
        outside = [i for i, m in enumerate(monos) if any(a > b for a, b in zip(m, box))]
        red = RowReducer(len(null))
        ok = True
        for i in outside:
            row = {j: v[i] for j, v in enumerate(null) if v[i]}
            if not red.add(row, -particular[i]):
                ok = False
                break
        if not ok:
            continue
        coef = red.solution()
        vec = list(particular)
        for c, v in zip(coef, null):
            if c:
                vec = [a + c * b for a, b in zip(vec, v)]
        yield vec


def rational_fit(prefix, num_box, den_box, verify_margin=2):
    """Fit ``P/Q`` to the prefix with ``deg P <= num_box``, ``deg Q <= den_box``, ``Q(0) = 1``.

    The coefficients of ``Q`` solve ``[x^n](Q F) = 0`` for every ``n`` of the
    fitting region outside the numerator box; the fitting region is the valid
    region minus ``verify_margin`` on every axis. A candidate is accepted only if
    its expansion reproduces the whole valid region.
    """
    d = prefix.ndim
    num_box, den_box = tuple(num_box), tuple(den_box)
    if len(num_box) != d or len(den_box) != d:
        raise ValueError(f"degree bounds must have {d} entries")
    valid = prefix.valid
    if any(v <= a + b + verify_margin for v, a, b in zip(valid, num_box, den_box)):
        raise BoxTooSmall(
            f"valid region {valid} must exceed num {num_box} + den {den_box} + margin {verify_margin}"
        )
    data = prefix.data
    fit = tuple(v - verify_margin for v in valid)
    monos = [m for m in _sub_boxes(den_box) if any(m)]
    red = RowReducer(len(monos))
    for n in np.ndindex(*fit):
        if all(a <= b for a, b in zip(n, num_box)):
            continue
        row = {}
        for col, m in enumerate(monos):
            j = tuple(a - b for a, b in zip(n, m))
            if min(j) >= 0:
                v = data[j]
                if v:
                    row[col] = v
        rhs = -data[n]
        if not row and not rhs:
            continue
        if not red.add(row, rhs):
            raise NoFit(f"no denominator within {den_box} fits the prefix")
    particular = red.solution()
    null = red.nullspace()
    target = prefix.restrict()
    for vec in _fit_candidates(particular, null, monos, den_box):
        q_terms = {(0,) * d: 1}
        q_terms.update({m: c for m, c in zip(monos, vec) if c})
        q = MultiPoly(q_terms, d)
        p_terms = {}
        for n in np.ndindex(*(b + 1 for b in num_box)):
            acc = Fraction(0)
            for m, c in q.terms.items():
                j = tuple(a - b for a, b in zip(n, m))
                if min(j) >= 0 and data[j]:
                    acc += c * data[j]
            if acc:
                p_terms[n] = acc
        gf = RationalGF(MultiPoly(p_terms, d), q)
        if series_expand(gf, valid) == target:
            return gf
    raise NoFit(f"no candidate within num {num_box}, den {den_box} survives verification")


def guess_rational(prefix, verify_margin=2, max_den=None):
    """Fit with growing denominator boxes ``(k, ..., k)`` until one verifies.

    The numerator box takes whatever room the valid region leaves, so only the
    denominator coefficients are unknowns.
    """
    d = prefix.ndim
    room = min(prefix.valid) - 1 - verify_margin
    kmax = room // 2
    if max_den is not None:
        kmax = min(kmax, max_den)
    if kmax < 0:
        raise BoxTooSmall(f"valid region {prefix.valid} too small for margin {verify_margin}")
    ks = [kmax] if d == 1 else range(kmax + 1)
    for k in ks:
        den_box = (k,) * d
        num_box = tuple(v - 1 - verify_margin - k for v in prefix.valid)
        try:
            return rational_fit(prefix, num_box, den_box, verify_margin)
        except NoFit:
            continue
    raise NoFit(f"no rational fit with denominator degree <= {kmax} per axis")
