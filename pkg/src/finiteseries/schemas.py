"""JSON Schemas of the reports printed by each command-line verb."""

EXACT = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
BOX = {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1}
POINT = {"type": "array", "items": {"type": "integer", "minimum": 0}}
GF = {"type": "string", "minLength": 1}


def _obj(required, **props):
    return {
        "type": "object",
        "required": list(required),
        "properties": props,
        "additionalProperties": False,
    }


_FACTOR = _obj(
    ["poly", "kind"],
    poly=GF,
    kind={"enum": ["integer_linear", "finite_roots", "unresolved"]},
    line=_obj(["a", "b", "c"], a={"type": "integer"}, b={"type": "integer"}, c={"type": "integer"}),
    points={"type": "array", "items": POINT},
    certified={"type": "boolean"},
    bound={"type": "integer"},
)

REPORT_SCHEMAS = {
    "expand": _obj(["gf", "dims", "data"], gf=GF, dims=BOX, data={"type": "array", "items": EXACT}),
    "fit": _obj(["gf", "verified", "verify_box"], gf=GF, verified={"type": "boolean"}, verify_box=BOX),
    "szego": _obj(
        ["preperiod", "period", "s", "m", "gf"],
        preperiod={"type": "array", "items": EXACT},
        period={"type": "array", "items": EXACT, "minItems": 1},
        s={"type": "integer", "minimum": 0},
        m={"type": "integer", "minimum": 1},
        gf=GF,
        certified={"type": "boolean"},
    ),
    "classify-support": _obj(
        ["kind", "certified"],
        kind={"enum": ["finite", "syndetic", "empirical-finite"]},
        certified={"type": "boolean"},
        bound={"type": "integer"},
        start={"type": "integer"},
        constant={"type": "integer"},
        horizon={"type": "integer"},
    ),
    "semilinear-gf": _obj(
        ["gf", "unambiguous", "verified", "verify_box"],
        gf=GF,
        unambiguous={"type": "boolean"},
        verified={"type": "boolean"},
        verify_box=BOX,
    ),
    "linsys": _obj(
        ["gf", "verified", "verify_box"],
        gf=GF,
        verified={"type": "boolean"},
        verify_box=BOX,
        minimal_solutions={"type": "array", "items": POINT},
    ),
    "curve2": _obj(
        ["status", "verified", "verify_box", "factors"],
        status={"enum": ["rational", "not-rational-suspected"]},
        verified={"type": "boolean"},
        verify_box=BOX,
        factors={"type": "array", "items": _FACTOR},
        gf=GF,
        witness=GF,
        fit_failed_up_to=BOX,
    ),
    "pipeline-d2": _obj(
        ["gf", "window", "qtable", "gamma", "primes", "vanishing", "axis", "bound", "slices", "verified", "verify_box"],
        gf=GF,
        window={"type": "integer", "minimum": 0},
        qtable={"type": "array", "items": _obj(["offset", "q"], offset={"type": "array", "items": {"type": "integer"}}, q=EXACT)},
        gamma={"type": "array", "items": EXACT},
        primes={"type": "array", "items": {"type": "integer", "minimum": 2}},
        vanishing={"type": "boolean"},
        axis={"enum": [0, 1]},
        bound={"type": "integer"},
        slices={"type": "array", "items": {"type": ["string", "null"]}},
        verified={"type": "boolean"},
        verify_box=BOX,
    ),
    "demo-np3": _obj(
        ["polynomial", "bound", "zero_count", "zeros_are_diagonal", "zeros", "verify_box",
         "reference_gf", "gf", "gf_verified", "reference_gf_matches", "verified"],
        polynomial=GF,
        bound={"type": "integer", "minimum": 0},
        zero_count={"type": "integer", "minimum": 0},
        zeros_are_diagonal={"type": "boolean"},
        zeros={"type": "array", "items": POINT},
        verify_box=BOX,
        reference_gf=GF,
        gf={"type": ["string", "null"]},
        gf_verified={"type": ["boolean", "null"]},
        reference_gf_matches={"type": ["boolean", "null"]},
        verified={"type": "boolean"},
    ),
    "mahler": _obj(
        ["values", "c", "horizon", "witness"],
        values={"type": "string"},
        c=EXACT,
        horizon={"type": "integer", "minimum": 0},
        witness={"type": ["integer", "null"]},
    ),
}
