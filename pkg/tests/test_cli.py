import json

import pytest

from conftest import AB2
from munn.cli import run
from munn.elements import element_from_json, multiply, parse_element


def _capture(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr().out


def test_element_mul_golden(capsys):
    code, out = _capture(capsys, ["element", "mul", "({e,x},x)", "({e,x},x)"])
    assert code == 0
    assert out == "({e,x,xx},xx)\n"


def test_element_dot(capsys):
    code, out = _capture(capsys, ["element", "dot", "({e,y,yx},e)"])
    assert code == 0
    assert out.startswith("digraph munn {")
    assert out.count('";') + out.count('"];') >= 3
    assert '"e" [peripheries=2];' in out
    assert '"y" -> "yx" [label="x"];' in out


def test_element_inverse_plus_star_weight(capsys):
    assert _capture(capsys, ["element", "inverse", "({e,x},x)"])[1] == \
        "({e,x^-1},x^-1)\n"
    assert _capture(capsys, ["element", "plus", "({e,x},x)"])[1] == "({e,x},e)\n"
    assert _capture(capsys, ["element", "star", "({e,x},x)"])[1] == \
        "({e,x^-1},e)\n"
    assert _capture(capsys, ["element", "weight", "({e,y,yx},yx)"])[1] == "4\n"


def test_json_round_trip(capsys):
    code, out = _capture(
        capsys, ["element", "parse", "({e,x,xy},xy)", "--format", "json"]
    )
    assert code == 0
    obj = json.loads(out)
    m = element_from_json(obj, AB2)
    assert m == parse_element("({e,x,xy},xy)", AB2, "FI")


def test_finitary_json(capsys):
    code, out = _capture(capsys, [
        "finitary", "--condition", "R", "--a", "({e,x},x)", "--b", "({e,y},y)",
        "--format", "json",
    ])
    assert code == 0
    obj = json.loads(out)
    assert obj["condition"] == "R" and obj["count"] == len(obj["pairs"])


def test_congruence_relate(tmp_path, capsys):
    pairs = tmp_path / "pairs.json"
    pairs.write_text(json.dumps([["({e,x},x)", "({e},e)"]]))
    code, out = _capture(capsys, [
        "congruence", "relate", "--pairs", str(pairs), "--flavor", "fla",
        "--u", "({e},e)", "--v", "({e,x},x)", "--max-weight", "5",
    ])
    assert code == 0
    assert out.startswith("side: right\nstart: ({e},e)\n")
    assert out.rstrip().endswith("end: ({e,x},x)")


def test_counterexample_smoke(capsys):
    code, out = _capture(capsys, [
        "counterexample", "--k", "5", "--max-h-weight", "3", "--format", "json",
    ])
    assert code == 0
    obj = json.loads(out)
    assert obj["refuted"] is True and obj["class_is_singleton"] is True


def test_exit_codes(tmp_path, capsys):
    # domain error: unparseable element literal
    assert run(["element", "parse", "bogus"]) == 1
    # usage error: unknown subcommand / missing arguments
    assert run(["bogus"]) == 2
    assert run([]) == 2
    # resource cap: node-capped relate
    pairs = tmp_path / "pairs.json"
    pairs.write_text(json.dumps([["({e,x},x)", "({e},e)"]]))
    assert run([
        "congruence", "relate", "--pairs", str(pairs), "--flavor", "fla",
        "--u", "({e},e)", "--v", "({e,x,xx,xy},xx)", "--max-weight", "8",
        "--max-nodes", "2",
    ]) == 3
    capsys.readouterr()


def test_determinism(capsys):
    argv = ["finitary", "--condition", "R", "--a", "({e,x},x)",
            "--b", "({e,y},y)", "--format", "json"]
    runs = []
    for _ in range(3):
        run(argv)
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1] == runs[2]


def test_retract_check_and_apply(capsys):
    code, out = _capture(capsys, ["retract", "check", "--samples", "100"])
    assert code == 0 and out == "ok\n"
    code, out = _capture(capsys, [
        "retract", "apply", "({e,x,y},x)", "--flavor", "fla",
    ])
    assert code == 0 and out == "({e,x},x)\n"
