"""Semilinear subsets of N^d: a finite set plus linear sets ``b + sum_v v*N``."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import NotFree, ParseError
from .poly import MultiPoly
from .series import DensePrefix, RationalGF, series_expand

__all__ = [
    "LinearSet",
    "SemilinearSet",
    "contains",
    "indicator_prefix",
    "multiplicity_prefix",
    "is_free",
    "gf_linear",
    "gf_semilinear",
]

DEFAULT_VERIFY_BOX = 32


def _vec(v, d=None):
    v = tuple(int(a) for a in v)
    if any(a < 0 for a in v):
        raise ValueError(f"vector {v} has a negative entry")
    if d is not None and len(v) != d:
        raise ValueError(f"vector {v} does not have length {d}")
    return v


@dataclass(frozen=True)
class LinearSet:
    base: tuple
    periods: tuple

    def __post_init__(self):
        base = _vec(self.base)
        periods = tuple(_vec(p, len(base)) for p in self.periods)
        if any(not any(p) for p in periods):
            raise ValueError("zero period vectors are not allowed")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "periods", periods)

    @property
    def dim(self):
        return len(self.base)


@dataclass(frozen=True)
class SemilinearSet:
    finite: tuple
    parts: tuple
    dim: int

    def __post_init__(self):
        finite = tuple(sorted({_vec(p, self.dim) for p in self.finite}))
        parts = tuple(self.parts)
        if any(p.dim != self.dim for p in parts):
            raise ValueError("all linear parts must share the dimension")
        object.__setattr__(self, "finite", finite)
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts, finite=()):
        dim = parts[0].dim if parts else len(next(iter(finite)))
        return cls(tuple(finite), tuple(parts), dim)

    def to_json(self):
        return {
            "finite": [list(p) for p in self.finite],
            "parts": [{"base": list(p.base), "periods": [list(v) for v in p.periods]} for p in self.parts],
        }

    @classmethod
    def from_json(cls, obj, dim=None):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            finite = [tuple(p) for p in obj.get("finite", [])]
            parts = [LinearSet(tuple(p["base"]), tuple(tuple(v) for v in p.get("periods", [])))
                     for p in obj.get("parts", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad semilinear set JSON: {exc}") from exc
        if dim is None:
            if parts:
                dim = parts[0].dim
            elif finite:
                dim = len(finite[0])
            elif "dim" in obj:
                dim = int(obj["dim"])
            else:
                raise ParseError("cannot infer the dimension of an empty set; add 'dim'")
        try:
            return cls(tuple(finite), tuple(parts), dim)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc


def _member_of(part, p):
    target = [a - b for a, b in zip(p, part.base)]
    if min(target) < 0:
        return False

    def search(i, rest):
        if i == len(part.periods):
            return not any(rest)
        v = part.periods[i]
        cap = min(r // a for r, a in zip(rest, v) if a)
        for c in range(cap + 1):
            if search(i + 1, [r - c * a for r, a in zip(rest, v)]):
                return True
        return False

    return search(0, target)


def contains(s, p):
    p = tuple(p)
    if len(p) != s.dim:
        raise ValueError(f"point {p} does not have dimension {s.dim}")
    if p in s.finite:
        return True
    return any(_member_of(part, p) for part in s.parts)


def _count_part(part, box, counts):
    """Add the number of representations of each point of ``part`` inside ``box``."""
    if any(b >= n for b, n in zip(part.base, box)):
        return

    def walk(i, point):
        if i == len(part.periods):
            counts[point] += 1
            return
        v = part.periods[i]
        while all(a < n for a, n in zip(point, box)):
            walk(i + 1, point)
            point = tuple(a + b for a, b in zip(point, v))

    walk(0, part.base)


def multiplicity_prefix(s, box):
    """Number of ways each point of the box arises (finite points count once each)."""
    box = tuple(box)
    counts = np.zeros(box, dtype=np.int64)
    for p in s.finite:
        if all(a < n for a, n in zip(p, box)):
            counts[p] += 1
    for part in s.parts:
        _count_part(part, box, counts)
    return DensePrefix(counts.astype(object))


def indicator_prefix(s, box):
    box = tuple(box)
    counts = np.zeros(box, dtype=np.int64)
    for p in s.finite:
        if all(a < n for a, n in zip(p, box)):
            counts[p] = 1
    for part in s.parts:
        _count_part(part, box, counts)
    return DensePrefix((counts > 0).astype(np.int64).astype(object))


def is_free(l, box):
    """Every member of ``l`` inside ``box`` has exactly one representation."""
    box = tuple(box)
    counts = np.zeros(box, dtype=np.int64)
    _count_part(l, box, counts)
    return bool(counts.max(initial=0) <= 1)


def _one_minus(v):
    d = len(v)
    return MultiPoly.one(d) - MultiPoly.monomial(v)


def gf_linear(l, verify_box=None):
    """``x^b / prod_v (1 - x^v)`` for a linear set whose representations are unique."""
    verify_box = verify_box or (DEFAULT_VERIFY_BOX,) * l.dim
    if not is_free(l, verify_box):
        raise NotFree(f"linear set {l} has points with several representations")
    den = MultiPoly.one(l.dim)
    for v in l.periods:
        den = den * _one_minus(v)
    return RationalGF(MultiPoly.monomial(l.base), den)


def gf_semilinear(s, box, verify_box=None):
    """Generating function counting multiplicities, and whether it is 0/1 on ``box``.

    Parts share the least common multiple of their ``(1 - x^v)`` factors as
    denominator, so identical parts add up over one denominator.
    """
    verify_box = verify_box or (DEFAULT_VERIFY_BOX,) * s.dim
    d = s.dim
    for part in s.parts:
        if not is_free(part, verify_box):
            raise NotFree(f"linear set {part} has points with several representations")
    common = Counter()
    for part in s.parts:
        for v, k in Counter(part.periods).items():
            common[v] = max(common[v], k)
    den = MultiPoly.one(d)
    for v in sorted(common):
        den = den * _one_minus(v) ** common[v]
    num = MultiPoly.zero(d)
    for p in s.finite:
        num = num + MultiPoly.monomial(p) * den
    for part in s.parts:
        rest = common - Counter(part.periods)
        term = MultiPoly.monomial(part.base)
        for v in sorted(rest):
            term = term * _one_minus(v) ** rest[v]
        num = num + term
    gf = RationalGF(num, den)
    expansion = series_expand(gf, box)
    unambiguous = all(v in (0, 1) for v in expansion.data.flat)
    return gf, unambiguous
