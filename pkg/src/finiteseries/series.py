"""Truncated power series on boxes of exponents and rational generating functions."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod

import numpy as np

from .errors import DimMismatch, IndexOutOfBox, ParseError, ZeroConstantTerm
from .poly import MultiPoly, default_names, parse_rational_parts

__all__ = [
    "DensePrefix",
    "RationalGF",
    "series_expand",
    "rf_equal",
    "prefix_mul_poly",
    "hadamard",
    "slice_extract",
]

_to_fraction = np.frompyfunc(Fraction, 1, 1)


def _object_array(values, dims=None):
    arr = np.asarray(values, dtype=object)
    if dims is not None:
        arr = arr.reshape(dims)
    if arr.size:
        arr = _to_fraction(arr).astype(object)
    return arr


class DensePrefix:
    """Coefficients ``f(n)`` for every exponent ``n`` in the box ``0 <= n < dims``.

    ``valid`` is the per-axis exclusive bound of the region where the stored
    coefficients are known to be exact; it defaults to the whole box.
    """

    __slots__ = ("data", "valid")

    def __init__(self, data, valid=None):
        arr = _object_array(data)
        if arr.ndim == 0:
            raise ValueError("a prefix needs at least one axis")
        arr.flags.writeable = False
        self.data = arr
        valid = tuple(arr.shape) if valid is None else tuple(int(v) for v in valid)
        if len(valid) != arr.ndim or any(v < 0 or v > d for v, d in zip(valid, arr.shape)):
            raise ValueError(f"valid region {valid} does not fit in box {arr.shape}")
        self.valid = valid

    @classmethod
    def zeros(cls, dims):
        return cls(np.full(tuple(dims), Fraction(0), dtype=object))

    @classmethod
    def ones(cls, dims):
        return cls(np.full(tuple(dims), Fraction(1), dtype=object))

    @classmethod
    def from_function(cls, dims, fn):
        dims = tuple(dims)
        arr = np.empty(dims, dtype=object)
        for idx in np.ndindex(*dims):
            arr[idx] = fn(*idx)
        return cls(arr)

    @property
    def dims(self):
        return tuple(self.data.shape)

    @property
    def ndim(self):
        return self.data.ndim

    def __getitem__(self, idx):
        return self.data[idx]

    def restrict(self, box=None):
        """Sub-prefix on ``0 <= n < box`` (default: the valid region)."""
        box = self.valid if box is None else tuple(box)
        if any(b > v for b, v in zip(box, self.valid)):
            raise IndexOutOfBox(f"box {box} exceeds valid region {self.valid}")
        return DensePrefix(self.data[tuple(slice(0, b) for b in box)])

    def values(self):
        """Distinct coefficient values in the valid region."""
        return set(self.restrict().data.flat)

    def nonzero_indices(self):
        return [idx for idx in np.ndindex(*self.dims) if self.data[idx]]

    def __eq__(self, other):
        if not isinstance(other, DensePrefix):
            return NotImplemented
        return self.dims == other.dims and bool(np.all(self.data == other.data))

    def __repr__(self):
        return f"DensePrefix(dims={self.dims}, valid={self.valid})"

    def tolist(self):
        return self.data.tolist()

    def to_json(self):
        out = {"dims": list(self.dims), "data": [_fmt(v) for v in self.data.flat]}
        if self.valid != self.dims:
            out["valid"] = list(self.valid)
        return out

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            dims = tuple(int(d) for d in obj["dims"])
            data = obj["data"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"prefix JSON needs 'dims' and 'data': {exc}") from exc
        if len(data) != prod(dims):
            raise ParseError(f"prefix has {len(data)} entries, expected {prod(dims)}")
        try:
            values = [Fraction(str(v)) for v in data]
        except ValueError as exc:
            raise ParseError(f"bad coefficient: {exc}") from exc
        return cls(np.array(values, dtype=object).reshape(dims), obj.get("valid"))


def _fmt(v):
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True, eq=False)
class RationalGF:
    """``numerator / denominator`` with a nonzero constant term in the denominator."""

    numerator: MultiPoly
    denominator: MultiPoly

    def __post_init__(self):
        if self.numerator.nvars != self.denominator.nvars:
            raise ValueError("numerator and denominator use different variable counts")
        if self.denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not self.denominator.constant_term():
            raise ZeroConstantTerm(
                f"denominator {self.denominator} vanishes at the origin; no power series expansion"
            )

    @classmethod
    def polynomial(cls, p):
        return cls(p, MultiPoly.one(p.nvars))

    @classmethod
    def parse(cls, text, nvars=None, names=None):
        num, den = parse_rational_parts(text, nvars, names)
        return cls(num, den)

    @property
    def nvars(self):
        return self.numerator.nvars

    def normalized(self):
        """Same function with denominator constant term scaled to 1."""
        c = self.denominator.constant_term()
        if c == 1:
            return self
        return RationalGF(self.numerator * (1 / c), self.denominator * (1 / c))

    def series(self, box):
        return series_expand(self, box)

    def __add__(self, other):
        if self.denominator == other.denominator:
            return RationalGF(self.numerator + other.numerator, self.denominator)
        return RationalGF(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def to_string(self, names=None):
        names = names or default_names(self.nvars)
        num = self.numerator.to_string(names)
        den = self.denominator.to_string(names)
        if len(self.numerator) > 1:
            num = f"({num})"
        if len(self.denominator) > 1:
            den = f"({den})"
        return f"{num} / {den}"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"RationalGF({self.to_string()!r})"


def rf_equal(a, b):
    """True iff ``a`` and ``b`` are the same rational function (cross-multiplication)."""
    if a.nvars != b.nvars:
        raise ValueError("variable count mismatch")
    return a.numerator * b.denominator == b.numerator * a.denominator


def _integer_view(poly, scale):
    return {e: int(c * scale) for e, c in poly.terms.items()}


def series_expand(rf, box):
    """Coefficients of the power series of ``rf`` on ``0 <= n < box``.

    Each coefficient comes from the recurrence ``Q(0) f(n) = P(n) - sum_{m != 0} Q(m) f(n - m)``;
    visiting indices in row-major order guarantees every ``f(n - m)`` is already known.
    """
    box = tuple(int(b) for b in box)
    if len(box) != rf.nvars:
        raise DimMismatch(f"box has {len(box)} axes, function has {rf.nvars} variables")
    num, den = rf.numerator, rf.denominator
    q0 = den.constant_term()
    if not q0:
        raise ZeroConstantTerm("denominator vanishes at the origin")
    scale = 1
    for c in list(num.terms.values()) + list(den.terms.values()):
        scale = lcm(scale, c.denominator)
    q0_int = int(q0 * scale)
    integral = abs(q0_int) == 1
    if integral:
        p_terms = _integer_view(num, scale)
        q_terms = [(e, int(c * scale)) for e, c in den.terms.items() if any(e)]
    else:
        p_terms = dict(num.terms)
        q_terms = [(e, c) for e, c in den.terms.items() if any(e)]
    out = np.empty(box, dtype=object)
    if 0 in box:
        return DensePrefix(out)
    zero = 0 if integral else Fraction(0)
    for idx in np.ndindex(*box):
        acc = p_terms.get(idx, zero)
        for e, c in q_terms:
            j = tuple(a - b for a, b in zip(idx, e))
            if min(j) >= 0:
                acc -= c * out[j]
        out[idx] = acc * q0_int if integral else acc / q0
    return DensePrefix(out)


def prefix_mul_poly(p, q):
    """Truncated product of a prefix with a polynomial, on the same box.

    Coefficient ``n`` of the product only reads ``p`` at indices ``<= n``, so the
    result is exact wherever ``p`` was; the valid region is carried over.
    """
    if p.ndim != q.nvars:
        raise DimMismatch(f"prefix has {p.ndim} axes, polynomial has {q.nvars} variables")
    dims = p.dims
    out = np.full(dims, Fraction(0), dtype=object)
    for exp, c in q.terms.items():
        if any(e >= d for e, d in zip(exp, dims)):
            continue
        dst = tuple(slice(e, d) for e, d in zip(exp, dims))
        src = tuple(slice(0, d - e) for e, d in zip(exp, dims))
        out[dst] = out[dst] + c * p.data[src]
    return DensePrefix(out, p.valid)


def hadamard(a, b):
    """Coefficientwise product."""
    if a.dims != b.dims:
        raise DimMismatch(f"dims differ: {a.dims} vs {b.dims}")
    valid = tuple(min(u, v) for u, v in zip(a.valid, b.valid))
    return DensePrefix(a.data * b.data, valid)


def slice_extract(g, axis, i):
    """Coefficients with exponent ``i`` on ``axis`` as a prefix in the remaining axes.

    Axes are numbered from 0.
    """
    if g.ndim < 2:
        raise DimMismatch("slicing needs at least two axes")
    if not 0 <= axis < g.ndim:
        raise IndexOutOfBox(f"axis {axis} out of range for {g.ndim} axes")
    if not 0 <= i < g.valid[axis]:
        raise IndexOutOfBox(f"index {i} outside valid range {g.valid[axis]} on axis {axis}")
    valid = g.valid[:axis] + g.valid[axis + 1:]
    return DensePrefix(np.take(g.data, i, axis=axis), valid)
