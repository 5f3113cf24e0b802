import json
import subprocess
import sys
from pathlib import Path

import pytest

from reesfiber.cli import run

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def call_json(capsys, *argv):
    code, out, err = call(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, err


def test_zariski_fix_a(capsys):
    code, out, _ = call_json(capsys, "zariski", "--graph", FIX / "fixA.json", "--divisor", FIX / "dE1.json")
    assert code == 0
    assert out["b"] == {"exc": {}, "ext": {}}
    assert out["delta"] == {"exc": {"0": "1"}, "ext": {}}


def test_zariski_fix_c(capsys):
    code, out, _ = call_json(capsys, "zariski", "--graph", FIX / "fixC.json", "--divisor", FIX / "dF.json")
    assert code == 0
    assert out["b"]["exc"] == {"0": "2/3", "1": "1/3"}
    assert out["trace"] == [[0], [0, 1]]


def test_validate(capsys, tmp_path):
    code, out, _ = call_json(capsys, "validate", "--graph", FIX / "fixC.json")
    assert code == 0 and out["valid"] and out["minors"] == ["-2", "3"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"curves": [{"id": 0, "self_int": -1}, {"id": 1, "self_int": -1}], "edges": [{"i": 0, "j": 1}]}))
    code, out, _ = call_json(capsys, "validate", "--graph", bad)
    assert code == 1
    assert not out["valid"] and out["first_failing_minor"] == 2


def test_invalid_graph_elsewhere_exits_one(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"curves": [{"id": 0, "self_int": -1}, {"id": 1, "self_int": -1}], "edges": [{"i": 0, "j": 1}]}))
    code, _, err = call(capsys, "zariski", "--graph", bad, "--divisor", FIX / "dE1.json")
    assert code == 1 and "invalid dual graph" in err


def test_classify_partial_component_names_lemma(capsys):
    code, out, err = call(
        capsys, "classify", "--graph", FIX / "fixC.json", "--divisor", FIX / "dF.json",
        "--sbl", f"explicit:{FIX / 'sbl_fixC_partial.json'}",
    )
    assert code == 1 and out == ""
    assert "Lemma 2" in err


def test_classify_and_proj_fix_b(capsys):
    args = ["--graph", FIX / "fixB.json", "--divisor", FIX / "dF.json"]
    code, out, _ = call_json(capsys, "classify", *args, "--sbl", "rational")
    assert code == 0
    assert out["spread"] == 1 and out["finitely_generated"]
    code, out, _ = call_json(capsys, "proj", *args, "--sbl", f"explicit:{FIX / 'sbl_fixB.json'}")
    assert code == 0
    assert out["fiber_shape"] == "empty" and not out["noetherian"] and out["spread"] == 0


def test_gamma(capsys):
    args = ["--graph", FIX / "fixB.json", "--divisor", FIX / "dF.json", "--curve", 0]
    code, out, _ = call_json(capsys, "gamma", *args, "--sbl", "rational")
    assert code == 0 and out == {"attained": True, "curve": 0, "value": "1"}
    code, out, _ = call_json(capsys, "gamma", *args, "--sbl", f"explicit:{FIX / 'sbl_fixB.json'}")
    assert out["attained"] is False


def test_rr(capsys):
    code, out, _ = call_json(capsys, "rr", "--deg", 3, "--pa", 1)
    assert code == 0 and out["euler_char"] == 3 and out["h1_vanishes"]
    code, out, _ = call_json(capsys, "rr", "--deg", 0, "--pa", 1)
    assert out["h1_verdict"] == "inconclusive"
    code, out, _ = call_json(capsys, "rr", "--graph", FIX / "fixA.json", "--divisor", FIX / "dE1.json", "--curve", 0)
    assert code == 0 and out["degree"] == "-1" and out["euler_char"] == 0
    code, _, _ = call(capsys, "rr", "--deg", 1)
    assert code == 2


def test_oracle_commands(capsys):
    code, out, _ = call_json(capsys, "oracle", "gamma", "--spec", FIX / "spec_two_valuations.json", "--w", "1,1", "--n", 12)
    assert code == 0 and out["value"] == "2/3" and out["attained_at"] == [3, 6, 9, 12]
    code, out, _ = call_json(capsys, "oracle", "ideal", "--spec", FIX / "spec_maximal_ideal.json", "--n", 2)
    assert out["gens"] == [[0, 2], [1, 1], [2, 0]]
    code, out, _ = call_json(capsys, "oracle", "witness", "--family", "intro", "--n", 10)
    assert code == 0 and out["fresh_at_every_degree"]
    assert all([1, 0] in gens or n == "1" and gens for n, gens in out["fresh"].items())
    code, out, _ = call_json(capsys, "oracle", "witness", "--family", "spec", "--spec", FIX / "spec_maximal_ideal.json", "--n", 4)
    assert out["degrees_without_fresh_generators"] == [2, 3, 4]


@pytest.mark.parametrize("argv", [
    ["zariski", "--graph", "missing.json", "--divisor", "x.json"],
    ["oracle", "gamma", "--spec", str(FIX / "spec_maximal_ideal.json"), "--w", "2,4"],
    ["oracle", "gamma", "--spec", str(FIX / "spec_maximal_ideal.json"), "--w", "oops"],
    ["classify", "--graph", str(FIX / "fixB.json"), "--divisor", str(FIX / "dF.json"), "--sbl", "maybe"],
    ["gamma", "--graph", str(FIX / "fixB.json"), "--divisor", str(FIX / "dF.json"), "--sbl", "rational", "--curve", "7"],
    ["nonsense"],
])
def test_malformed_input_exits_two(capsys, argv):
    assert run(argv) == 2


def test_malformed_json_exits_two(capsys, tmp_path):
    bad = tmp_path / "d.json"
    bad.write_text('{"exc": {"0": "2/4"}}')
    code, _, err = call(capsys, "zariski", "--graph", FIX / "fixA.json", "--divisor", bad)
    assert code == 2 and "lowest terms" in err


def test_text_format(capsys):
    code, out, _ = call(capsys, "proj", "--graph", FIX / "fixA.json", "--divisor", FIX / "dE1.json", "--sbl", "rational", "--format", "text")
    assert code == 0
    assert "fiber_shape: pure_dim_one_open" in out and "proper: yes" in out


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "reesfiber.cli", "classify", "--graph", str(FIX / "fixC.json"),
           "--divisor", str(FIX / "dF.json"), "--sbl", f"explicit:{FIX / 'sbl_fixC.json'}"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["spread"] == 0
