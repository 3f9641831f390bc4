"""Command-line front end: ``finiteseries VERB [options]``.

Every verb reads its input from ``--input`` (a file, or ``-`` for stdin) or from a
positional argument where that is natural, and prints one report. JSON reports
are sorted and render every number as an exact integer or ``p/q`` string.

Exit status is 0 on success, 1 when a fit or verification fails, 2 on malformed
input (parse errors name the line and column).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .classify import EmpiricalFinite, FiniteCertified, support_classify
from .errors import (
    BoxTooSmall,
    DimMismatch,
    FiniteSeriesError,
    LeadingZero,
    NoFit,
    NoPeriodFound,
    NotFree,
    ParseError,
    PipelineUnsound,
    ZeroConstantTerm,
)
from .pipeline import run_pipeline_d2
from .poly import parse_poly
from .precursive import MultiCoeffRecurrence, UniPRecurrence
from .rationality import certify_periodic, detect_szego, guess_rational, rational_fit
from .semilinear import SemilinearSet, gf_semilinear, multiplicity_prefix
from .series import DensePrefix, RationalGF, series_expand
from .varieties import (
    LinearSystem,
    curve_gf,
    linear_system_gf,
    mahler_growth_witness,
    minimal_solutions,
    np3_demo,
    solution_prefix,
)

VERBS = (
    "expand",
    "fit",
    "szego",
    "classify-support",
    "semilinear-gf",
    "linsys",
    "curve2",
    "pipeline-d2",
    "demo-np3",
    "mahler",
)

# exceptions that mean "the input was bad" rather than "the mathematics did not work out"
_MALFORMED = (ParseError, ZeroConstantTerm, BoxTooSmall, DimMismatch, ValueError, KeyError, TypeError)
_FAILED = (NoFit, NoPeriodFound, NotFree, PipelineUnsound, LeadingZero)


class VerificationFailed(Exception):
    def __init__(self, report):
        super().__init__("verification failed")
        self.report = report


def fmt(v):
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def default_verify_box(d):
    return 32 if d <= 2 else 16 if d == 3 else 8


def _read_text(args):
    if args.input in (None, "-"):
        return sys.stdin.read()
    with open(args.input, encoding="utf-8") as fh:
        return fh.read()


def _read_json(args):
    text = _read_text(args)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc


def _parse_box(text):
    try:
        return tuple(int(a) for a in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad box {text!r}; expected comma-separated integers") from exc


def infer_nvars(text):
    """Number of variables named in ``text`` (``x, y, z`` or ``x1 .. xd``)."""
    indexed = [int(m) for m in re.findall(r"\bx(\d+)\b", text)]
    if indexed:
        return max(indexed)
    if re.search(r"\bz\b", text):
        return 3
    if re.search(r"\by\b", text):
        return 2
    return 1


def _verify_box(args, d):
    return args.verify_box if args.verify_box is not None else default_verify_box(d)


def _restrict(prefix, args):
    if args.verify_box is None:
        return prefix
    return prefix.restrict(tuple(min(v, args.verify_box) for v in prefix.valid))


# -- verbs ------------------------------------------------------------------


def cmd_expand(args):
    text = args.expr if args.expr is not None else _read_text(args)
    box = _parse_box(args.box) if args.box else None
    nvars = args.nvars or (len(box) if box else infer_nvars(text))
    rf = RationalGF.parse(text.strip(), nvars)
    if box is None:
        box = (_verify_box(args, nvars),) * nvars
    elif len(box) == 1 and nvars > 1:
        box = box * nvars
    prefix = series_expand(rf, box)
    return {
        "gf": rf.to_string(),
        "dims": list(box),
        "data": [fmt(v) for v in prefix.data.flat],
    }


def _render_expand(report):
    dims = report["dims"]
    if len(dims) == 1:
        return "[" + ", ".join(report["data"]) + "]"
    width = dims[-1]
    rows = [report["data"][i:i + width] for i in range(0, len(report["data"]), width)]
    return "\n".join(" ".join(r) for r in rows)


def _fit_report(gf, prefix):
    return {
        "gf": gf.to_string(),
        "verified": series_expand(gf, prefix.valid) == prefix.restrict(),
        "verify_box": list(prefix.valid),
    }


def cmd_fit(args):
    prefix = _restrict(DensePrefix.from_json(_read_json(args)), args)
    if args.den_box:
        den_box = _parse_box(args.den_box)
        num_box = _parse_box(args.num_box) if args.num_box else den_box
        gf = rational_fit(prefix, num_box, den_box, args.margin)
    else:
        gf = guess_rational(prefix, args.margin, args.max_den)
    return _fit_report(gf, prefix)


def cmd_szego(args):
    obj = _read_json(args)
    if isinstance(obj, list):
        obj = {"sequence": obj}
    seq = [Fraction(str(v)) for v in obj["sequence"]]
    max_pre = args.max_preperiod if args.max_preperiod is not None else obj.get("max_preperiod")
    max_per = args.max_period if args.max_period is not None else obj.get("max_period")
    if max_per is None:
        max_per = max(1, len(seq) // 4)
    if max_pre is None:
        max_pre = len(seq) - 3 * max_per
    form = detect_szego(seq, int(max_pre), int(max_per))
    report = {
        "preperiod": [fmt(v) for v in form.preperiod],
        "period": [fmt(v) for v in form.period],
        "s": form.s,
        "m": form.m,
        "gf": form.to_rational().normalized().to_string(),
    }
    if "recurrence" in obj:
        rec = UniPRecurrence.from_json(obj["recurrence"])
        report["certified"] = certify_periodic(rec, form)
        if not report["certified"]:
            raise VerificationFailed(report)
    return report


def cmd_classify_support(args):
    obj = _read_json(args)
    rec_obj = obj.get("recurrence", obj)
    rec = UniPRecurrence.from_json(rec_obj)
    init = [Fraction(str(v)) for v in obj.get("init", [])]
    horizon = args.horizon if args.horizon is not None else int(obj.get("horizon", 200))
    result = support_classify(rec, init, horizon)
    if isinstance(result, FiniteCertified):
        return {"kind": "finite", "certified": True, "bound": result.bound}
    if isinstance(result, EmpiricalFinite):
        return {"kind": "empirical-finite", "certified": False, "horizon": result.horizon}
    return {"kind": "syndetic", "certified": True, "start": result.start, "constant": result.constant}


def cmd_semilinear_gf(args):
    s = SemilinearSet.from_json(_read_json(args))
    box = (_verify_box(args, s.dim),) * s.dim
    gf, unambiguous = gf_semilinear(s, box, box)
    verified = series_expand(gf, box) == multiplicity_prefix(s, box)
    report = {"gf": gf.to_string(), "unambiguous": unambiguous, "verified": verified, "verify_box": list(box)}
    if not verified:
        raise VerificationFailed(report)
    return report


def cmd_linsys(args):
    sys_ = LinearSystem.from_json(_read_json(args))
    box = (_verify_box(args, sys_.nvars),) * sys_.nvars
    gf = linear_system_gf(sys_, box)
    verified = series_expand(gf, box) == solution_prefix(sys_, box)
    report = {"gf": gf.to_string(), "verified": verified, "verify_box": list(box)}
    if sys_.homogeneous_equalities:
        report["minimal_solutions"] = [list(h) for h in minimal_solutions(sys_, box[0] - 1)]
    if not verified:
        raise VerificationFailed(report)
    return report


def _factor_lines(text):
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            items = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
        return [(i + 1, str(f)) for i, f in enumerate(items)]
    return [(i + 1, line) for i, line in enumerate(text.splitlines()) if line.strip() and not line.lstrip().startswith("#")]


def cmd_curve2(args):
    text = args.factors if args.factors is not None else _read_text(args)
    factors = []
    for lineno, line in _factor_lines(text):
        try:
            factors.append(parse_poly(line, nvars=2))
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" (line", 1)[0], lineno, exc.column) from exc
    if not factors:
        raise ParseError("no factors given")
    box = _verify_box(args, 2)
    _, report = curve_gf(factors, box)
    out = report.to_json()
    if report.status == "rational" and not report.verified:
        raise VerificationFailed(out)
    return out


def cmd_pipeline_d2(args):
    obj = _read_json(args)
    prefix = _restrict(DensePrefix.from_json(obj["prefix"]), args)
    rec = MultiCoeffRecurrence.from_json(obj["recurrence"])
    alphabet = [Fraction(str(v)) for v in obj["alphabet"]] if "alphabet" in obj else None
    rep = run_pipeline_d2(prefix, rec, alphabet)
    return {
        "gf": rep.gf.to_string(),
        "window": rep.window,
        "qtable": [{"offset": list(a), "q": fmt(q)} for a, q in sorted(rep.qtable.items())],
        "gamma": [fmt(g) for g in rep.gamma.sorted()],
        "primes": sorted(rep.primes),
        "vanishing": rep.vanishing,
        "axis": rep.axis,
        "bound": rep.bound,
        "slices": [None if s is None else s.to_string() for s in rep.slices],
        "verified": rep.verified,
        "verify_box": list(prefix.valid),
    }


def cmd_demo_np3(args):
    report = np3_demo(args.bound)
    if not report["verified"]:
        raise VerificationFailed(report)
    return report


def cmd_mahler(args):
    c = Fraction(args.c)
    if args.input is not None:
        values = [Fraction(str(v)) for v in _read_json(args)]
        source = "input"
    else:
        base = Fraction(args.base)
        values = [base ** (m * m) for m in range(args.horizon + 1)]
        source = f"{fmt(base)}^(m^2)"
    witness = mahler_growth_witness(values, c, args.horizon)
    return {"values": source, "c": fmt(c), "horizon": args.horizon, "witness": witness}


COMMANDS = {
    "expand": cmd_expand,
    "fit": cmd_fit,
    "szego": cmd_szego,
    "classify-support": cmd_classify_support,
    "semilinear-gf": cmd_semilinear_gf,
    "linsys": cmd_linsys,
    "curve2": cmd_curve2,
    "pipeline-d2": cmd_pipeline_d2,
    "demo-np3": cmd_demo_np3,
    "mahler": cmd_mahler,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--verify-box", type=int, default=None,
                        help="side of the verification box (default 32 for d <= 2, 16 for d = 3)")
    common.add_argument("--input", default=None, help="input file, '-' for stdin")

    parser = argparse.ArgumentParser(prog="finiteseries", description="Exact tools for rational generating functions.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("expand", parents=[common], help="coefficients of a rational function")
    p.add_argument("expr", nargs="?", help="rational function such as '1/(1-x*y)'")
    p.add_argument("--box", help="exponent box, e.g. '5' or '5,5'")
    p.add_argument("--nvars", type=int)

    p = sub.add_parser("fit", parents=[common], help="fit P/Q to a prefix (JSON)")
    p.add_argument("--num-box")
    p.add_argument("--den-box")
    p.add_argument("--max-den", type=int)
    p.add_argument("--margin", type=int, default=2)

    p = sub.add_parser("szego", parents=[common], help="eventually periodic form of a sequence")
    p.add_argument("--max-preperiod", type=int)
    p.add_argument("--max-period", type=int)

    p = sub.add_parser("classify-support", parents=[common], help="finite or syndetic support")
    p.add_argument("--horizon", type=int)

    sub.add_parser("semilinear-gf", parents=[common], help="generating function of a semilinear set")
    sub.add_parser("linsys", parents=[common], help="generating function of a linear system's solutions")

    p = sub.add_parser("curve2", parents=[common], help="generating function of N^2 points on a plane curve")
    p.add_argument("factors", nargs="?", help="factors, one per line")

    sub.add_parser("pipeline-d2", parents=[common], help="slicing construction for a two-variable prefix")

    p = sub.add_parser("demo-np3", parents=[common], help="zeros of x - y + 2z^2 + zy^2")
    p.add_argument("--bound", type=int, default=10)

    p = sub.add_parser("mahler", parents=[common], help="index past which values exceed (m!)^c")
    p.add_argument("--base", default="2")
    p.add_argument("--c", default="1")
    p.add_argument("--horizon", type=int, default=30)
    return parser


def render(verb, report, style):
    if style == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    if verb == "expand":
        return _render_expand(report)
    lines = []
    for key in sorted(report):
        v = report[key]
        lines.append(f"{key}: {v if isinstance(v, str) else json.dumps(v, sort_keys=True)}")
    return "\n".join(lines)


def run(argv=None, stdout=None, stderr=None):
    """Run one command; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        report = COMMANDS[args.verb](args)
    except VerificationFailed as exc:
        print(render(args.verb, exc.report, args.format), file=stdout)
        return 1
    except ParseError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except _FAILED as exc:
        print(f"failed: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    except (_MALFORMED + (OSError,)) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    except FiniteSeriesError as exc:
        print(f"failed: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    print(render(args.verb, report, args.format), file=stdout)
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
