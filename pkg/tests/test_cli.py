import json
from pathlib import Path

import jsonschema
import pytest

from chromllt import cli
from chromllt.report import RelationReport

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "schema.json").read_text())

JSON_COMMANDS = [
    ["compute", "chromatic", "path:3"],
    ["compute", "chromatic", "lollipop:3,1", "--route", "brute", "--basis", "s"],
    ["compute", "llt", "complete:3", "--route", "wt"],
    ["compute", "llt", "path:3", "--route", "words", "--basis", "m"],
    ["coeff", "hook", "mseq:4,5,5,5", "--k", "2"],
    ["verify", "lee", "--area", "2,3,3,2,1,1,0", "--i", "2"],
    ["verify", "kdel", "--area", "2,3,3,2,1,1,0", "--i", "2", "--ell", "2", "--k", "1"],
    ["verify", "equiv", "--graphs", "path:3", "complete:3", "--coeffs=1;-1"],
    ["verify", "triple", "complete:3"],
    ["verify", "triple", "--n", "4", "--edges", "1-2,2-3,3-4,1-4,1-3"],
    ["verify", "plethysm", "lollipop:3,1"],
    ["verify", "conjecture", "lollipop:3,1"],
    ["verify", "chromatic", "lollipop:3,1"],
    ["verify", "scan", "--n", "3"],
    ["render", "latex", "path:3"],
]


def run(capsys, argv):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", JSON_COMMANDS, ids=lambda a: " ".join(a[:3]))
def test_json_output_matches_schema_and_is_stable(capsys, argv):
    code, first, _ = run(capsys, argv + ["--json"])
    assert code == 0
    data = json.loads(first)
    jsonschema.validate(data, SCHEMA)
    assert data["manifest"]["command"] == argv[:2]
    _, second, _ = run(capsys, argv + ["--json"])
    assert first == second


def test_hook_coefficient_text(capsys):
    code, out, _ = run(capsys, ["coeff", "hook", "mseq:4,5,5,5", "--k", "2"])
    assert code == 0 and out.strip() == "2q^6 + q^7 + q^8"


def test_text_outputs(capsys):
    assert run(capsys, ["compute", "chromatic", "path:3"])[1].strip() == "(1 + q + q^2)*e3 + (q)*e21"
    out = run(capsys, ["compute", "llt", "complete:3", "--route", "wt", "--basis", "s"])[1]
    assert out.strip() == "s3 + (q + q^2)*s21 + (q^3)*s111"
    assert run(capsys, ["render", "latex", "path:3"])[1].strip() == "[3]_q e_3 + q e_{21}"
    code, out, _ = run(capsys, ["verify", "lee", "--area", "2,1,1,0", "--i", "1"])
    assert code == 0 and out.strip().endswith("hypothesis-failed")


def test_scan_exit_zero(capsys):
    code, out, _ = run(capsys, ["verify", "scan", "--n", "5"])
    assert code == 0
    assert out.strip().endswith("failures: 0")


@pytest.mark.parametrize("argv, code", [
    (["compute", "chromatic", "lollipop:1,2"], 5),
    (["compute", "chromatic", "cycle:3"], 3),
    (["compute", "chromatic", "mseq:3,2"], 4),
    (["compute", "chromatic", "path:9", "--route", "brute"], 6),
    (["verify", "triple", "path:3"], 0),
])
def test_error_exit_codes(capsys, argv, code):
    assert run(capsys, argv)[0] == code


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["bogus"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        cli.main(["verify", "triple"])
    assert err.value.code == 2


def test_failed_verification_exits_one(capsys, monkeypatch):
    bad = RelationReport("lee", {"area": [1, 0], "i": 1}, True, False, {"form": "llt"})
    monkeypatch.setattr(cli, "verify_lee", lambda a, i: bad)
    code, out, _ = run(capsys, ["verify", "lee", "--area", "2,1,1,0", "--i", "1"])
    assert code == 1 and "failed" in out


def test_environment_overrides(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("CHROMLLT_FORMAT", "json")
    out = run(capsys, ["compute", "chromatic", "path:2"])[1]
    assert json.loads(out)["expansion"]["basis"] == "e"
    assert run(capsys, ["compute", "chromatic", "path:2", "--format", "text"])[1].strip() == "(1 + q)*e2"
    monkeypatch.setenv("CHROMLLT_MAX_BRUTE", "2")
    assert run(capsys, ["compute", "chromatic", "path:3", "--route", "brute"])[0] == 6
    assert run(capsys, ["compute", "chromatic", "path:3", "--route", "brute", "--max-brute", "3"])[0] == 0
    target = tmp_path / "x.json"
    monkeypatch.setenv("CHROMLLT_OUT", str(target))
    assert run(capsys, ["compute", "chromatic", "path:2"])[0] == 0
    assert json.loads(target.read_text())["manifest"]["graph"]["dsl"] == "path:2"


def test_version(capsys):
    with pytest.raises(SystemExit):
        cli.main(["--version"])
    assert "0.1.0" in capsys.readouterr().out
