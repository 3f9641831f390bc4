"""Finite-or-syndetic classification of the support of P-recursive sequences."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from sympy import divisors

from .errors import ZeroPolynomial
from .precursive import unroll_uni

__all__ = [
    "FiniteCertified",
    "SyndeticCertified",
    "EmpiricalFinite",
    "integer_root_bound",
    "support_classify",
    "max_gap",
    "syndetic_witness",
]


@dataclass(frozen=True)
class FiniteCertified:
    """The support lies in ``[0, bound]``."""

    bound: int


@dataclass(frozen=True)
class SyndeticCertified:
    """Every nonzero index ``n >= start`` has a nonzero index in ``(n, n + constant]``."""

    start: int
    constant: int


@dataclass(frozen=True)
class EmpiricalFinite:
    """No nonzero term past the root bound was seen up to ``horizon``; nothing is proved."""

    horizon: int


def integer_root_bound(p):
    """Least ``M >= 0`` such that ``p(n) != 0`` for every integer ``n > M``."""
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    coeffs = p.univariate_coeffs()
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    low = next(i for i, c in enumerate(ints) if c)
    ints = ints[low:]
    best = 0
    for d in divisors(abs(ints[0])):
        acc = 0
        for c in reversed(ints):
            acc = acc * d + c
        if acc == 0 and d > best:
            best = d
    return best


def support_classify(rec, init, horizon):
    """Classify the support of the sequence given by ``rec`` and ``init``.

    A single-term recurrence forces ``g(n) = 0`` past the last root of its
    coefficient. With several terms, once every coefficient is nonzero a nonzero
    ``g(n)`` forces a nonzero term within the next ``order`` steps, so one nonzero
    term past that point certifies syndeticity.
    """
    validity = rec.start - 1
    if len(rec.shifts) == 1:
        return FiniteCertified(max(integer_root_bound(rec.coeffs[0]), validity, 0))
    bound = max([integer_root_bound(c) for c in rec.coeffs if not c.is_zero()] + [validity, 0])
    if horizon <= bound + rec.order:
        raise ValueError(f"horizon must exceed {bound + rec.order}")
    seq = unroll_uni(rec, init, horizon + 1)
    for n in range(bound + 1, horizon + 1):
        if seq[n]:
            return SyndeticCertified(n, rec.order)
    return EmpiricalFinite(horizon)


def _positions(prefix):
    return [i for i, v in enumerate(prefix) if v]


def max_gap(prefix):
    pos = _positions(prefix)
    return max((b - a for a, b in zip(pos, pos[1:])), default=0)


def syndetic_witness(prefix, C):
    """Whether every nonzero position (outside the final ``C``-window) has a successor within ``C``."""
    pos = _positions(prefix)
    last = len(prefix) - 1 - C
    for a, b in zip(pos, pos[1:] + [None]):
        if a > last:
            break
        if b is None or b - a > C:
            return False
    return True

