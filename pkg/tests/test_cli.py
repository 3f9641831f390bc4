import io
import json
import subprocess
import sys

import jsonschema
import pytest

from finiteseries.cli import run
from finiteseries.schemas import REPORT_SCHEMAS

from conftest import diag_prefix


def invoke(argv, stdin="", monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = run(argv, out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


DIAG_JSON = json.dumps(diag_prefix(12).to_json())
PIPE_JSON = json.dumps({
    "prefix": diag_prefix(20).to_json(),
    "recurrence": {"window": 1, "entries": [{"offset": [0, 0], "q": "1"}, {"offset": [1, 1], "q": "-1"}]},
})

CASES = {
    "expand": (["expand", "1/(1-x*y)", "--box", "4,4"], ""),
    "fit": (["fit"], DIAG_JSON),
    "szego": (["szego"], json.dumps({"sequence": [5] + [1, 0] * 10,
                                     "recurrence": {"shifts": [0, 2], "coeffs": ["-1", "1"], "start": 1}})),
    "classify-support": (["classify-support"], json.dumps({"recurrence": {"shifts": [0, 2], "coeffs": ["-1", "1"]},
                                                           "init": [1, 0]})),
    "semilinear-gf": (["semilinear-gf"], json.dumps({"finite": [[3, 0]], "parts": [{"base": [0, 0], "periods": [[1, 1]]}]})),
    "linsys": (["linsys"], "[[1, 1, -1]]"),
    "curve2": (["curve2"], "x - y\nx + y - 3\n"),
    "pipeline-d2": (["pipeline-d2"], PIPE_JSON),
    "demo-np3": (["demo-np3", "--bound", "10"], ""),
    "mahler": (["mahler", "--c", "5", "--horizon", "60"], ""),
}


@pytest.mark.parametrize("verb", sorted(CASES))
def test_reports_validate_against_schema(verb):
    argv, stdin = CASES[verb]
    code, out, err = invoke(argv, stdin)
    assert code == 0, err
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMAS[verb])


def test_every_verb_has_a_schema():
    from finiteseries.cli import VERBS

    assert set(VERBS) == set(REPORT_SCHEMAS) == set(CASES)


def test_expand_text():
    code, out, _ = invoke(["expand", "1/(1-x)", "--box", "5", "--format", "text"])
    assert code == 0 and out.strip() == "[1, 1, 1, 1, 1]"


def test_fit_diagonal_text():
    code, out, _ = invoke(["fit", "--format", "text"], DIAG_JSON)
    assert code == 0 and "gf: 1 / (1 - x*y)" in out


def test_demo_np3_report():
    code, out, _ = invoke(["demo-np3", "--bound", "10"])
    rep = json.loads(out)
    assert code == 0 and rep["verified"]
    assert rep["zeros"] == [[n, n, 0] for n in range(11)]


def test_numbers_are_exact_strings():
    code, out, _ = invoke(["expand", "1/(1-x/2)", "--box", "4"])
    assert json.loads(out)["data"] == ["1", "1/2", "1/4", "1/8"]


def test_parse_error_exit_code_and_position():
    code, _, err = invoke(["expand", "1/(1-x"])
    assert code == 2 and "line 1, column 7" in err
    code, _, err = invoke(["fit"], '{"dims": [2],\n "data": [1,}')
    assert code == 2 and "line 2" in err
    code, _, err = invoke(["curve2"], "x - y\nx + * y\n")
    assert code == 2 and "line 2" in err


def test_malformed_inputs_exit_2():
    assert invoke(["expand", "1/x"])[0] == 2
    assert invoke(["semilinear-gf"], '{"parts": [{"periods": [[1]]}]}')[0] == 2
    assert invoke(["linsys"], '[[1, 2], [1]]')[0] == 2


def test_failures_exit_1():
    squares = json.dumps({"dims": [40], "data": [str(int(int(n**0.5) ** 2 == n)) for n in range(40)]})
    assert invoke(["fit", "--den-box", "3"], squares)[0] == 1
    bad = json.dumps({"sequence": [5] + [1, 0] * 10,
                      "recurrence": {"shifts": [0, 2], "coeffs": ["-1", "1"]}})
    code, out, _ = invoke(["szego"], bad)
    assert code == 1 and json.loads(out)["certified"] is False


def test_verify_box_controls_region():
    code, out, _ = invoke(["linsys", "--verify-box", "6"], "[[1, -1]]")
    assert json.loads(out)["verify_box"] == [6, 6]


def test_byte_identical_across_processes(tmp_path):
    path = tmp_path / "pipe.json"
    path.write_text(PIPE_JSON)
    cmd = [sys.executable, "-m", "finiteseries", "pipeline-d2", "--input", str(path)]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True, env={"PYTHONHASHSEED": "123", "PATH": ""}).stdout
    assert a == b and a
