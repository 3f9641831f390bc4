"""Generating functions of nonnegative integer points on varieties.

Covers solution sets of integer linear systems, plane curves given by a list of
factors, and the worked examples around them (a three-variable surface whose
points lie on one line, and the growth comparison behind ``sum x^m y^(m^2)``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, factorial

import numpy as np

from .errors import BoxTooSmall, NoFit, ParseError
from .poly import MultiPoly, parse_poly
from .rationality import guess_rational, rational_fit
from .semilinear import LinearSet, SemilinearSet, contains, gf_linear, gf_semilinear, is_free
from .series import DensePrefix, RationalGF, series_expand

__all__ = [
    "LinearSystem",
    "CurveFactor",
    "CurveReport",
    "minimal_solutions",
    "solution_prefix",
    "linear_system_gf",
    "classify_factor",
    "line_points",
    "curve_gf",
    "np3_demo",
    "mahler_growth_witness",
    "square_exponent_values",
]


@dataclass(frozen=True)
class LinearSystem:
    """Rows ``sum_i a_i n_i + b`` that must be ``= 0`` (``"eq"``) or ``>= 0`` (``"ge"``)."""

    rows: tuple
    nvars: int
    relations: tuple = ()
    offsets: tuple = ()

    def __post_init__(self):
        rows = tuple(tuple(int(a) for a in r) for r in self.rows)
        if any(len(r) != self.nvars for r in rows):
            raise ValueError(f"every row needs {self.nvars} entries")
        relations = tuple(self.relations) or ("eq",) * len(rows)
        offsets = tuple(int(b) for b in self.offsets) or (0,) * len(rows)
        if len(relations) != len(rows) or len(offsets) != len(rows):
            raise ValueError("relations and offsets need one entry per row")
        if any(r not in ("eq", "ge") for r in relations):
            raise ValueError("relations must be 'eq' or 'ge'")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "relations", relations)
        object.__setattr__(self, "offsets", offsets)

    @classmethod
    def equalities(cls, rows, nvars=None):
        rows = [tuple(r) for r in rows]
        return cls(tuple(rows), nvars if nvars is not None else len(rows[0]))

    @property
    def homogeneous_equalities(self):
        return all(r == "eq" for r in self.relations) and not any(self.offsets)

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        if isinstance(obj, list):
            obj = {"rows": obj}
        try:
            rows = obj["rows"]
            nvars = int(obj["nvars"]) if "nvars" in obj else len(rows[0])
            return cls(tuple(tuple(r) for r in rows), nvars,
                       tuple(obj.get("relations", ())), tuple(obj.get("offsets", ())))
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise ParseError(f"bad linear system JSON: {exc}") from exc


def _solution_mask(sys, box):
    box = tuple(box)
    grid = np.indices(box).reshape(len(box), -1).astype(np.int64)
    mask = np.ones(grid.shape[1], dtype=bool)
    for row, rel, b in zip(sys.rows, sys.relations, sys.offsets):
        vals = np.asarray(row, dtype=np.int64) @ grid + b
        mask &= (vals == 0) if rel == "eq" else (vals >= 0)
    return grid, mask


def solution_prefix(sys, box):
    """0/1 indicator of the solution set on the box."""
    _, mask = _solution_mask(sys, box)
    return DensePrefix(mask.reshape(tuple(box)).astype(np.int64).astype(object))


def minimal_solutions(sys, bound):
    """Componentwise-minimal nonzero solutions with every coordinate ``<= bound``."""
    if not sys.homogeneous_equalities:
        raise ValueError("minimal solutions are defined for homogeneous equality systems")
    grid, mask = _solution_mask(sys, (bound + 1,) * sys.nvars)
    sols = [tuple(int(a) for a in grid[:, i]) for i in np.flatnonzero(mask)]
    sols = sorted((s for s in sols if any(s)), key=lambda s: (sum(s), s))
    minimal = []
    for s in sols:
        if not any(all(a <= b for a, b in zip(m, s)) for m in minimal):
            minimal.append(s)
    return minimal


def linear_system_gf(sys, fit_box, verify_margin=2):
    """Rational generating function of the solution set.

    When the solutions of a homogeneous equality system form a free monoid on its
    minimal solutions, ``1 / prod_h (1 - x^h)`` is returned after checking its
    expansion against the enumeration; otherwise the enumerated indicator is fitted.
    """
    fit_box = tuple(fit_box)
    prefix = solution_prefix(sys, fit_box)
    if sys.homogeneous_equalities:
        gens = minimal_solutions(sys, max(fit_box) - 1)
        lin = LinearSet((0,) * sys.nvars, tuple(gens))
        if is_free(lin, fit_box):
            gf = gf_linear(lin, fit_box)
            if series_expand(gf, fit_box) == prefix:
                return gf
    return guess_rational(prefix, verify_margin)


# -- plane curves -----------------------------------------------------------


@dataclass(frozen=True)
class CurveFactor:
    """A factor of a plane curve with what is known about its points in N^2.

    ``kind`` is ``"integer_linear"`` (then ``poly`` is a multiple of
    ``a*y - b*x - c``), ``"finite_roots"`` (all roots are in ``points``) or
    ``"unresolved"`` (roots kept appearing up to ``bound``).
    """

    poly: MultiPoly
    kind: str
    line: tuple = None
    points: tuple = ()
    bound: int = None
    certified: bool = False

    def to_json(self):
        out = {"poly": self.poly.to_string(), "kind": self.kind}
        if self.line is not None:
            out["line"] = dict(zip("abc", self.line))
        if self.kind == "finite_roots":
            out["points"] = [list(p) for p in self.points]
            out["certified"] = self.certified
        if self.bound is not None:
            out["bound"] = self.bound
        return out


def _integer_coeffs(q):
    _, prim = q.integer_content()
    return {e: int(c) for e, c in prim.terms.items()}


def _roots_in_box(q, R):
    ints = _integer_coeffs(q)
    X, Y = np.indices((R + 1, R + 1)).astype(object)
    vals = np.zeros((R + 1, R + 1), dtype=object)
    for (i, j), c in ints.items():
        vals = vals + c * X**i * Y**j
    return [(int(a), int(b)) for a, b in zip(*np.nonzero(vals == 0))]


def classify_factor(q, coeff_bound=100, root_bound=40):
    if q.nvars != 2 or q.is_zero():
        raise ValueError("expected a nonzero polynomial in two variables")
    if q.degree() == 1:
        ints = _integer_coeffs(q)
        u = ints.get((1, 0), 0)
        v = ints.get((0, 1), 0)
        w = ints.get((0, 0), 0)
        a, b, c = v, -u, -w
        lead = next(t for t in (a, b, c) if t)
        if lead < 0:
            a, b, c = -a, -b, -c
        if max(abs(a), abs(b), abs(c)) <= coeff_bound:
            return CurveFactor(q, "integer_linear", line=(a, b, c))
    signs = {c > 0 for c in q.terms.values()}
    if len(signs) == 1 and q.constant_term():
        # every term has the same sign and the constant term is nonzero: no roots in N^2
        return CurveFactor(q, "finite_roots", points=(), certified=True)
    inner = _roots_in_box(q, max(root_bound // 2, 1))
    outer = _roots_in_box(q, root_bound)
    if len(inner) == len(outer):
        return CurveFactor(q, "finite_roots", points=tuple(outer), bound=root_bound)
    return CurveFactor(q, "unresolved", bound=root_bound)


def _egcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def line_points(a, b, c):
    """Points of ``a*y - b*x = c`` in N^2: ``("line", LinearSet)``, ``("finite", points)``.

    A line with a direction vector in the open first quadrant meets N^2 in one
    arithmetic progression; other lines meet it in finitely many points or in a
    horizontal or vertical ray.
    """
    u, v, w = -b, a, -c  # u*x + v*y + w = 0
    if v == 0:
        if w % u or -w // u < 0:
            return "finite", ()
        return "line", LinearSet((-w // u, 0), ((0, 1),))
    if u == 0:
        if w % v or -w // v < 0:
            return "finite", ()
        return "line", LinearSet((0, -w // v), ((1, 0),))
    if (u > 0) == (v > 0):
        pts = []
        for x in range(0, abs(w) // abs(u) + 1):
            rest = -w - u * x
            if rest % v == 0 and rest // v >= 0:
                pts.append((x, rest // v))
        return "finite", tuple(pts)
    g, s, t = _egcd(abs(u), abs(v))
    if w % g:
        return "finite", ()
    # particular solution of u*x + v*y = -w
    k = -w // g
    x0 = s * k * (1 if u > 0 else -1)
    y0 = t * k * (1 if v > 0 else -1)
    dx, dy = abs(v) // g, abs(u) // g
    step = max(ceil(Fraction(-x0, dx)), ceil(Fraction(-y0, dy)))
    return "line", LinearSet((x0 + step * dx, y0 + step * dy), ((dx, dy),))


def _intersection(l1, l2):
    (a1, b1, c1), (a2, b2, c2) = l1, l2
    # a*y - b*x = c  <=>  -b*x + a*y = c
    det = (-b1) * a2 - a1 * (-b2)
    if det == 0:
        return None
    x = Fraction(c1 * a2 - a1 * c2, det)
    y = Fraction((-b1) * c2 - c1 * (-b2), det)
    if x.denominator != 1 or y.denominator != 1 or x < 0 or y < 0:
        return None
    return (int(x), int(y))


def _zero_set_prefix(factors, box):
    R = box - 1
    mask = np.zeros((box, box), dtype=bool)
    for q in factors:
        for p in _roots_in_box(q, R):
            mask[p] = True
    return DensePrefix(mask.astype(np.int64).astype(object))


@dataclass
class CurveReport:
    status: str
    gf: RationalGF = None
    verified: bool = False
    verify_box: int = 0
    factors: list = field(default_factory=list)
    witness: str = None
    fit_failed_up_to: tuple = None

    def to_json(self):
        out = {
            "status": self.status,
            "verified": self.verified,
            "verify_box": [self.verify_box, self.verify_box],
            "factors": [f.to_json() for f in self.factors],
        }
        if self.gf is not None:
            out["gf"] = self.gf.to_string()
        if self.witness is not None:
            out["witness"] = self.witness
        if self.fit_failed_up_to is not None:
            out["fit_failed_up_to"] = list(self.fit_failed_up_to)
        return out


def curve_gf(factors, verify_box=32, coeff_bound=100, root_bound=None, fit_check_den=6):
    """Generating function of the N^2 points of ``prod(factors) = 0``.

    Lines with integer coefficients contribute linear sets, factors with finitely
    many roots contribute their points; points on several lines are counted once.
    A factor with an unbounded, non-linear root set yields a
    ``"not-rational-suspected"`` report naming it.
    """
    factors = [f if isinstance(f, MultiPoly) else parse_poly(f, nvars=2) for f in factors]
    root_bound = verify_box - 1 if root_bound is None else root_bound
    classes = [classify_factor(q, coeff_bound, root_bound) for q in factors]
    report = CurveReport(status="rational", verify_box=verify_box, factors=classes)
    unresolved = [c for c in classes if c.kind == "unresolved"]
    if unresolved:
        report.status = "not-rational-suspected"
        report.witness = unresolved[0].poly.to_string()
        prefix = _zero_set_prefix(factors, min(verify_box, 20))
        for k in range(fit_check_den + 1):
            for j in range(fit_check_den + 1):
                try:
                    rational_fit(prefix, (k, j), (k, j))
                    return None, report
                except (NoFit, BoxTooSmall):
                    continue
        report.fit_failed_up_to = (fit_check_den, fit_check_den)
        return None, report

    lines = []
    points = set()
    for c in classes:
        if c.kind == "integer_linear":
            kind, val = line_points(*c.line)
            if kind == "line":
                if c.line not in [l for l, _ in lines]:
                    lines.append((c.line, val))
            else:
                points.update(val)
        else:
            points.update(c.points)
    parts = tuple(part for _, part in lines)
    if parts:
        on_lines = SemilinearSet((), parts, 2)
        points = {p for p in points if not contains(on_lines, p)}
    gf, _ = gf_semilinear(SemilinearSet(tuple(points), parts, 2), (verify_box, verify_box))
    crossings = {}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            p = _intersection(lines[i][0], lines[j][0])
            if p is not None:
                crossings[p] = sum(contains(SemilinearSet((), (part,), 2), p) for _, part in lines)
    num = gf.numerator
    for p, k in sorted(crossings.items()):
        num = num - MultiPoly.monomial(p) * gf.denominator * (k - 1)
    gf = RationalGF(num, gf.denominator).normalized()
    truth = _zero_set_prefix(factors, verify_box)
    report.gf = gf
    report.verified = series_expand(gf, (verify_box, verify_box)) == truth
    return gf, report


# -- worked examples --------------------------------------------------------

NP3_POLY = "x - y + 2*z^2 + z*y^2"
NP3_REFERENCE_GF = "1/((1-x)*(1-y))"


def np3_demo(bound, fit_box=16):
    """Zeros of ``x - y + 2z^2 + zy^2`` in ``[0, bound]^3`` and a fitted generating function.

    For ``z >= 1`` the value is at least ``x + 2 + y^2 - y > 0``, so every zero has
    ``z = 0`` and hence ``x = y``. The report compares the enumeration with that
    prediction and fits the generating function of the enumerated set.
    """
    box = (bound + 1,) * 3
    grid = np.indices(box).reshape(3, -1).astype(np.int64)
    x, y, z = grid
    vals = x - y + 2 * z**2 + z * y**2
    zeros = sorted(tuple(int(a) for a in grid[:, i]) for i in np.flatnonzero(vals == 0))
    expected = [(n, n, 0) for n in range(bound + 1)]
    report = {
        "polynomial": NP3_POLY,
        "bound": bound,
        "zero_count": len(zeros),
        "zeros_are_diagonal": zeros == expected,
        "zeros": [list(p) for p in zeros],
        "verify_box": list(box),
        "reference_gf": NP3_REFERENCE_GF,
        "gf": None,
        "gf_verified": None,
        "reference_gf_matches": None,
        "verified": zeros == expected,
    }
    if bound < 5:
        # too few coefficients for a meaningful fit
        return report
    mask = (vals == 0).reshape(box).astype(np.int64).astype(object)
    indicator = DensePrefix(mask)
    side = min(bound + 1, fit_box)
    gf = guess_rational(indicator.restrict((side,) * 3))
    verified = series_expand(gf, box) == indicator
    reference = RationalGF.parse(NP3_REFERENCE_GF, 3)
    report.update(
        {
            "gf": gf.to_string(),
            "gf_verified": verified,
            "reference_gf_matches": bool(series_expand(reference, box) == indicator),
            "verified": verified and zeros == expected,
        }
    )
    return report


def mahler_growth_witness(values, c, horizon):
    """Least ``m <= horizon`` with ``values[k] > (k!)^c`` for every sampled ``k >= m``.

    ``c = p/q`` is handled exactly by comparing ``values[k]^q`` with ``(k!)^p``.
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    p, q = c.numerator, c.denominator
    top = min(horizon, len(values) - 1)
    witness = None
    for k in range(top, -1, -1):
        v = Fraction(values[k])
        if v < 0:
            raise ValueError("values must be nonnegative")
        if v.numerator**q > factorial(k) ** p * v.denominator**q:
            witness = k
        else:
            break
    return witness


def square_exponent_values(base, count):
    """``base^(m^2)`` for ``m < count``: coefficients of ``sum x^m y^(m^2)`` at ``y = base``."""
    return [Fraction(base) ** (m * m) for m in range(count)]
