import json
import subprocess
import sys

import pytest

from symdefect import __version__
from symdefect.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_defect(capsys):
    code, out, err = run(capsys, "defect", "bartensor(V(1))")
    assert code == 0 and err == ""
    assert out == "decomposition: V(0,-) + V(2,-)\ndefect: -3\n"


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "tensor(V(1,+),V(1,+))")
    assert code == 0 and out == "V(0,-) + V(2,+)\n"


def test_expression_error(capsys):
    code, out, err = run(capsys, "defect", "barsum(V(2,+))")
    assert code == 1 and out == ""
    assert "graded atom inside barsum" in err and "byte 7" in err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--family", "gl-o", "--max-dim", "12")
    assert code == 0
    assert "cases: 270" in out and out.rstrip().endswith("result: PASS")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--family", "gl-vv", "--max-dim", "8", "--format", "json")
    record = json.loads(out)
    assert code == 0 and record["ok"] and record["range"] == {"min_half": 1, "max_half": 4}


def test_verify_closed_forms(capsys):
    code, out, _ = run(capsys, "verify", "--family", "closed-forms", "--max-lambda", "5")
    assert code == 0 and "max_lambda=5" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from symdefect import verify

    def failing(*a, **k):
        return verify.VerifyReport("gl-o", {}, 1, [("V(1)", 0, -1)], -1)

    monkeypatch.setattr(verify, "verify_gl_o", failing)
    code, out, _ = run(capsys, "verify", "--family", "gl-o")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--family", "nope"],
        ["verify", "--family", "gl-o", "--max-dim", "0"],
        ["genealogy", "--root", "SO_SO"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert capsys.readouterr().out == ""


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == f"symdefect {__version__}"


def test_genealogy_dot(capsys):
    code, out, _ = run(capsys, "genealogy", "--root", "O_eps", "--format", "dot")
    assert code == 0
    assert out.count("->") == 3 and out.startswith('digraph "O_eps"')


def test_descend(capsys, tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps({
        "family": "O_OxO",
        "base": {"kind": "Q"},
        "factors": [{"coeffs": ["1", "1", "1"], "kdim": 2}, {"coeffs": ["1", "1"], "kdim": 3}],
        "ambient_dim": 7,
    }))
    code, out, err = run(capsys, "descend", "--input", str(path))
    assert code == 0 and err == ""
    data = json.loads(out)
    assert [n["kind"] for n in data["nodes"]] == ["O_eps", "U_O"]
    code, out, _ = run(capsys, "descend", "--input", str(path), "--format", "text")
    assert out.splitlines() == [
        "O_eps over Q, dim 3",
        "U_O over Q[xi]/(xi^2 + xi + 1) with mu, fixed field of mu, dim 2",
    ]


def test_descend_warning_goes_to_stderr(capsys, tmp_path):
    path = tmp_path / "spec.json"
    path.write_text('{"family": "GL_O", "base": {"kind": "Q"}, "factors": [{"coeffs": ["1","0","0","0","1"], "kdim": 1}]}')
    code, out, err = run(capsys, "descend", "--input", str(path))
    assert code == 0
    assert "warning: assuming xi^4 + 1 is irreducible" in err
    assert json.loads(out)["warnings"]


@pytest.mark.parametrize(
    "spec, message",
    [
        ({"family": "GL_O", "base": {"kind": "Q"}, "factors": [{"coeffs": ["-1", "1"], "kdim": 1}, {"coeffs": ["-2", "2"], "kdim": 1}]}, "not semisimple"),
        ({"family": "O_OxO", "base": {"kind": "Q"}, "factors": [{"coeffs": ["-2", "1"], "kdim": 1}]}, "σ-compatible"),
        ({"family": "GL_O", "base": {"kind": "Q"}, "factors": [{"coeffs": ["0", "1"], "kdim": 1}]}, "x not invertible"),
    ],
)
def test_descend_validation_errors(capsys, tmp_path, spec, message):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec))
    code, out, err = run(capsys, "descend", "--input", str(path))
    assert code == 1 and out == ""
    assert message in err


def test_descend_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "descend", "--input", str(tmp_path / "missing.json"))
    assert code == 1 and err.startswith("error:")


def test_output_is_stable(capsys):
    first = run(capsys, "genealogy", "--root", "U_eps", "--format", "json")
    second = run(capsys, "genealogy", "--root", "U_eps", "--format", "json")
    assert first == second


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "symdefect.cli", "defect", "V(3,-)"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "defect: -2"
