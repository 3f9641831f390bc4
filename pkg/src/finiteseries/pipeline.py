"""Constructive rationality argument for two-variable series with finitely many values.

Starting from a prefix ``f`` and a coefficient recurrence
``sum_a Q_a(n_k) f(n - a) = 0``, the steps are: take constant terms ``q(a)`` of
the (jointly ``t``-reduced) table, form the finite value set ``Gamma``, bound the
primes that can divide its elements in ``R = Z[generators]``, build
``G = F * sum_a q(a) x^(a + N)``, cut ``G`` into finitely many slices, fit every
slice as a univariate rational function, and divide back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from sympy import factorint

from .errors import BoxTooSmall, NoFit, NotDivisible, PipelineUnsound, ZeroElement
from .poly import MultiPoly
from .precursive import normalize_q, qtable_sum, validate_multirec
from .rationality import guess_rational
from .series import RationalGF, prefix_mul_poly, series_expand, slice_extract

__all__ = [
    "GammaSet",
    "PrimeSupportCertificate",
    "PipelineReport",
    "gamma_set",
    "allowed_primes",
    "in_semigroup",
    "q_polynomial",
    "build_G",
    "vanishing_test",
    "run_pipeline_d2",
    "main_theorem_d2",
]


@dataclass(frozen=True)
class GammaSet:
    values: frozenset

    def __contains__(self, v):
        return Fraction(v) in self.values

    def __len__(self):
        return len(self.values)

    def sorted(self):
        return sorted(self.values)


@dataclass(frozen=True)
class PrimeSupportCertificate:
    primes: frozenset


def gamma_set(qtable, delta):
    """All sums ``sum_a q(a) s(a)`` with ``s(a)`` drawn from ``delta`` and 0.

    Built as an iterated sumset, so the cost is driven by the number of
    distinct partial sums rather than ``(|delta| + 1) ** len(qtable)``.
    """
    choices = {Fraction(0)} | {Fraction(v) for v in delta}
    sums = {Fraction(0)}
    for q in qtable.values():
        if not q:
            continue
        step = {q * s for s in choices}
        sums = {a + b for a in sums for b in step}
    return GammaSet(frozenset(sums))


def _primes(n):
    return set(factorint(abs(int(n)))) if n else set()


def allowed_primes(generators, x):
    """Primes that may divide ``n`` whenever ``x`` lies in ``n R``.

    ``R`` is the subring of the rationals generated by ``generators`` (and ``x``
    itself), i.e. ``Z[1/p : p in D]`` where ``D`` collects the primes of all
    denominators. In that ring ``x in n R`` exactly when the part of ``n`` coprime
    to ``D`` divides the numerator of ``x``.
    """
    x = Fraction(x)
    if not x:
        raise ZeroElement("x must be nonzero")
    inverted = set()
    for g in list(generators) + [x]:
        inverted |= _primes(Fraction(g).denominator)
    return PrimeSupportCertificate(frozenset(inverted | _primes(x.numerator)))


def in_semigroup(n, primes):
    """Whether ``n >= 1`` is a product of the given primes (1 is the empty product)."""
    if n < 1:
        return False
    for p in primes:
        while n % p == 0:
            n //= p
    return n == 1


def q_polynomial(qtable, N, nvars):
    """``sum_a q(a) x^(a + N)``: the constant recurrence as a polynomial with exponents in ``[0, 2N]``."""
    terms = {tuple(a + N for a in off): c for off, c in qtable.items() if c}
    return MultiPoly(terms, nvars)


def build_G(f, qtable, N):
    """Truncated ``G = F * sum_a q(a) x^(a + N)``.

    Coefficient ``n`` of ``G`` equals ``sum_a q(a) f(n - N - a)``, the recurrence
    with constant coefficients read at ``n - N``.
    """
    if any(abs(a) > N for off in qtable for a in off):
        raise ValueError(f"offsets must lie in [-{N}, {N}]")
    if any(v <= 2 * N for v in f.valid):
        raise BoxTooSmall(f"valid region {f.valid} must exceed 2N = {2 * N} on every axis")
    return prefix_mul_poly(f, q_polynomial(qtable, N, f.ndim))


def vanishing_test(f, qtable, cert, axis=None):
    """Check ``sum_a q(a) f(n - a) = 0`` at every index whose ``axis`` coordinate
    is a positive integer outside the semigroup generated by ``cert.primes``.

    Indices whose window leaves the valid region are skipped; negative indices
    read as zero.
    """
    axis = f.ndim - 1 if axis is None else axis
    primes = sorted(cert.primes)
    offs = [a for a, q in qtable.items() if q]
    for idx in np.ndindex(*f.valid):
        k = idx[axis]
        if k < 1 or in_semigroup(k, primes):
            continue
        if any(n - a >= v for off in offs for n, a, v in zip(idx, off, f.valid)):
            continue
        if qtable_sum(qtable, f.data, idx):
            return False
    return True


@dataclass
class PipelineReport:
    gf: RationalGF
    window: int
    qtable: dict
    gamma: GammaSet
    primes: frozenset
    vanishing: bool
    axis: int
    bound: int
    slices: list = field(default_factory=list)
    verified: bool = False


def _slice_support(g, axis):
    other = 1 - axis
    nonzero = [
        i for i in range(g.valid[axis])
        if any(np.take(g.data, i, axis=axis)[: g.valid[other]])
    ]
    return max(nonzero, default=-1)


def run_pipeline_d2(f, rec, alphabet=None, verify_margin=2):
    """Run every step for a two-variable prefix and return the full report."""
    if f.ndim != 2 or rec.nvars != 2:
        raise ValueError("the structured pipeline handles two variables")
    if not validate_multirec(rec, f):
        raise ValueError("the recurrence does not hold on the prefix")
    N = rec.window
    reduced, qtable = normalize_q(rec)
    delta = set(alphabet) if alphabet is not None else f.values()
    gamma = gamma_set(qtable, delta)
    generators = set(delta)
    for q in reduced.table.values():
        generators |= set(q.terms.values())
    primes = set()
    for g in gamma.values:
        if g:
            primes |= allowed_primes(generators, g).primes
    cert = PrimeSupportCertificate(frozenset(primes))
    vanishing = vanishing_test(f, qtable, cert)

    G = build_G(f, qtable, N)
    # The slicing axis must be one along which G visibly stops; the last axis is tried first.
    axis, bound = None, None
    for ax in (1, 0):
        top = _slice_support(G, ax)
        if top + 2 * N + 2 <= G.valid[ax]:
            axis, bound = ax, top
            break
    if axis is None:
        raise NoFit("G has nonzero slices up to the edge of the box on both axes")

    other = 1 - axis
    slices = []
    for i in range(bound + 1):
        s = slice_extract(G, axis, i)
        if not any(s.data.flat):
            slices.append(None)
            continue
        slices.append(guess_rational(s, verify_margin))

    dens = []
    for r in slices:
        if r is not None and all(r.denominator != d for d in dens):
            dens.append(r.denominator)
    common = MultiPoly.one(1)
    for d in dens:
        common = common * d
    num = MultiPoly.zero(2)
    for i, r in enumerate(slices):
        if r is None:
            continue
        cofactor = common.divexact(r.denominator)
        part = (r.numerator * cofactor).embed(2, (other,))
        exp = [0, 0]
        exp[axis] = i
        num = num + part.shift(tuple(exp))
    den_g = common.embed(2, (other,))

    s_poly = q_polynomial(qtable, N, 2)
    lowest = s_poly.min_exponents()
    s_rest = s_poly.divexact(MultiPoly.monomial(lowest))
    try:
        num = num.divexact(MultiPoly.monomial(lowest))
    except NotDivisible as exc:
        raise PipelineUnsound(f"reassembled G is not divisible by x^{lowest}") from exc
    if not s_rest.constant_term():
        try:
            num = num.divexact(s_rest)
            s_rest = MultiPoly.one(2)
        except NotDivisible as exc:
            raise NoFit(f"cannot cancel {s_rest} against the reassembled numerator") from exc
    gf = RationalGF(num, den_g * s_rest).normalized()
    if series_expand(gf, f.valid) != f.restrict():
        raise PipelineUnsound("reassembled generating function disagrees with the prefix")
    return PipelineReport(
        gf=gf,
        window=N,
        qtable=qtable,
        gamma=gamma,
        primes=cert.primes,
        vanishing=vanishing,
        axis=axis,
        bound=bound,
        slices=slices,
        verified=True,
    )


def main_theorem_d2(f, rec, alphabet=None):
    """Rational generating function of ``f`` obtained through the slicing construction."""
    return run_pipeline_d2(f, rec, alphabet).gf
