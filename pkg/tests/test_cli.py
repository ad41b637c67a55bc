import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from biquad.cli import run

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "cli-schema.json").read_text())


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def call_json(capsys, *argv):
    code, out, _ = call(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def test_pythagorean(capsys):
    code, out, _ = call(capsys, "pythagorean", "2", "1")
    assert code == 0 and out == '{"triple":[3,4,5]}\n'


def test_qform(capsys):
    code, out, _ = call(capsys, "qform-decompose", "--a", "2", "--b", "3", "--x", "1+2*rb", "--y", "1+rb")
    assert code == 0 and out == '{"x1":1,"y1":1,"x2":1,"y2":1,"value":5}\n'


def test_qform_rational_output(capsys):
    code, doc = call_json(capsys, "qform-decompose", "--a", "4", "--b", "3", "--x", "2", "--y", "1/2")
    assert code == 0
    assert doc == {"x1": 2, "y1": "1/2", "x2": 1, "y2": 0, "value": 3}


def test_kernel(capsys):
    code, doc = call_json(capsys, "kernel", "--a1", "2", "--a2", "3", "5 + 5*r1 + r2 + r12")
    assert code == 0
    assert all(doc[f"in_K{i}"] for i in range(1, 6))
    assert doc["decomposition"] == {"k1": {"f0": 1, "f1": 1, "f2": 0, "f3": 0}, "k2": {"f0": 5, "f1": 0, "f2": 1, "f3": 0}}


def test_kernel_negative(capsys):
    code, doc = call_json(capsys, "kernel", "--a1", "2", "--a2", "3", "1 + r12")
    assert code == 0 and doc["decomposition"] is None and not doc["in_K1"]


def test_h90_witness(capsys):
    code, doc = call_json(capsys, "h90-witness", "--a1", "2", "--a2", "3", "--i", "1", "-2 - r2")
    assert code == 0 and doc["l"] == {"f0": -1, "f1": 0, "f2": -1, "f3": 0}


def test_coboundary(capsys):
    code, doc = call_json(capsys, "coboundary", "--a1", "2", "--a2", "3", "--", "-1", "1")
    assert code == 0 and doc["beta"] == {"f0": 0, "f1": 0, "f2": 1, "f3": 0}


def test_eval(capsys):
    code, doc = call_json(capsys, "eval", "--a1", "2", "--a2", "3", "1/2 + r1")
    assert code == 0
    assert doc["element"] == {"f0": "1/2", "f1": 1, "f2": 0, "f3": 0}
    assert doc["conjugates"]["s2"] == {"f0": "1/2", "f1": -1, "f2": 0, "f3": 0}
    assert doc["norm_to_Q"] == "49/16"
    assert doc["subfields"] == {"in_F": False, "in_E1": True, "in_E2": False, "in_E3": False}


def test_eval_with_group_ring(capsys):
    code, doc = call_json(capsys, "eval", "--a1", "2", "--a2", "3", "r2", "--act", "1 - s1")
    assert code == 0 and doc["element"] == {"f0": -1, "f1": 0, "f2": 0, "f3": 0}


def test_module_check(capsys):
    code, out, err = call(capsys, "module-check", "--max-order", "4")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    for doc in lines:
        jsonschema.validate(doc, SCHEMA)
    assert len(lines) == 14
    assert lines[0]["group"] == [] and lines[0]["verdict"] == "PASS"
    assert "FAIL=0" in err and "modules=14" in err


def test_module_check_no_dedup(capsys):
    code, out, _ = call(capsys, "module-check", "--max-order", "4", "--no-dedup")
    assert code == 0 and len(out.splitlines()) == 20


def test_text_output(capsys):
    code, out, _ = call(capsys, "--output", "text", "pythagorean", "3", "2")
    assert code == 0 and out.strip() == "5 12 13"
    code, out, _ = call(capsys, "kernel", "--a1", "2", "--a2", "3", "--output", "text", "r1")
    assert code == 0 and "k1 = r1" in out
    code, out, _ = call(capsys, "--output", "text", "qform-decompose", "--a", "2", "--b", "3", "--x", "1+2*rb", "--y", "1+rb")
    assert "[generic]" in out


@pytest.mark.parametrize(
    "argv, code, kind",
    [
        (["kernel", "--a1", "2", "--a2", "3", "1 + + r1"], 2, "ParseError"),
        (["kernel", "--a1", "2/0", "--a2", "3", "1"], 2, "ParseError"),
        (["kernel", "--a1", "2", "--a2", "3", "1/0*r1"], 2, "DivisionByZero"),
        (["kernel", "--a1", "4", "--a2", "3", "1"], 1, "NotBiquadratic"),
        (["kernel", "--a1", "2", "--a2", "3", "0"], 1, "ZeroElement"),
        (["h90-witness", "--a1", "2", "--a2", "3", "--i", "1", "r1"], 1, "NotNormOne"),
        (["coboundary", "--a1", "2", "--a2", "3", "r1", "1"], 1, "NormNotOne"),
        (["coboundary", "--a1", "2", "--a2", "3", "(1+r12)", "1"], 2, "ParseError"),
        (["qform-decompose", "--a", "2", "--b", "3", "--x", "1+rb", "--y", "0"], 1, "ValueNotInF"),
        (["qform-decompose", "--a", "4", "--b", "3", "--x", "2", "--y", "1"], 1, "ZeroValue"),
        (["pythagorean", "0", "0"], 1, "ZeroInput"),
        (["module-check", "--max-order", "0"], 2, "UsageError"),
    ],
)
def test_error_contract(capsys, argv, code, kind):
    got, doc = call_json(capsys, *argv)
    assert got == code
    assert doc["error"] == kind and doc["message"]


def test_compatibility_error(capsys):
    # alpha1 = (1 + r12) / s1(1 + r12) has norm one but is incompatible with alpha2 = 1
    code, doc = call_json(capsys, "coboundary", "--a1", "2", "--a2", "3", "-7/5 - 2/5*r12", "1")
    assert code == 1 and doc["error"] == "CompatibilityFailed"


def test_not_in_kernel_is_not_an_error_for_kernel_command(capsys):
    code, doc = call_json(capsys, "kernel", "--a1", "2", "--a2", "3", "1 + r1 + r2")
    assert code == 0 and doc["norm_witness"] is None


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["kernel", "--a1", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["frobnicate"])
    assert exc.value.code == 2


def test_deterministic_bytes():
    cmd = [sys.executable, "-m", "biquad", "kernel", "--a1", "3/2", "--a2", "-5", "1/3 + r1 - 2/7*r12"]
    outs = {subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1
    doc = json.loads(outs.pop())
    jsonschema.validate(doc, SCHEMA)
    assert doc["a1"] == "3/2"


def test_pure_python_switch():
    env = dict(os.environ, BIQUAD_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from biquad.modlab import kernels; print(kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "python"


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "biquad", "pythagorean", "2", "1"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == '{"triple":[3,4,5]}\n'
