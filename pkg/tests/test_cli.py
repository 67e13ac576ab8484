import json

import pytest

from conifold_flop.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_relations_text(capsys):
    code, out = run(capsys, "relations")
    assert code == 0
    assert "yzw" in out and "d_x" in out


def test_mc_json_matches_relations(capsys):
    code, out = run(capsys, "mc", "--json")
    assert code == 0
    data = json.loads(out)
    assert set(data["components"]) == {"Xbar", "Ybar", "Zbar", "Wbar"}
    zbar = {item["word"]: item["coeff"] for item in data["components"]["Zbar"]}
    assert zbar == {"yxw": "1", "wxy": "-1"}


def test_json_output_is_deterministic(capsys):
    _, first = run(capsys, "scan", "--bound", "3", "--z0", "-1,2", "--z1", "1,1", "--json")
    _, second = run(capsys, "scan", "--bound", "3", "--z0", "-1,2", "--z1", "1,1", "--json")
    assert first == second


def test_truncate(capsys):
    code, out = run(capsys, "truncate", "--n", "4", "--json")
    data = json.loads(out)
    four = [row for row in data["dims"] if row["length"] == 4 and row["source"] == 0]
    assert four[0]["dim"] == 9


def test_rep_roundtrip_via_files(tmp_path, capsys):
    path = tmp_path / "rep.json"
    code, _ = run(capsys, "rep", "make", "--kind", "vplus:2", "--out", str(path))
    assert code == 0
    code, out = run(capsys, "rep", "check", "--rep", str(path))
    assert code == 0 and "relations_ok True" in out


def test_rep_check_fails_on_bad_rep(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "dims": [1, 1], "x": [["1"]], "z": [["1"]], "y": [["1"]], "w": [["1"]]}))
    code, out = run(capsys, "rep", "check", "--rep", str(path))
    assert code == 1
    assert "nilpotent False" in out


def test_stable_verdicts(capsys):
    code, out = run(capsys, "stable", "--kind", "vplus:2", "--z0", "-1,2", "--z1", "1,1", "--json")
    assert code == 0 and json.loads(out)["verdict"] == "stable"
    code, out = run(capsys, "stable", "--kind", "vplus:2", "--z0", "1,1", "--z1", "-1,2", "--json")
    data = json.loads(out)
    assert data["verdict"] == "unstable" and data["witness_dims"] == [0, 1]


def test_psi_sphere(capsys):
    code, out = run(capsys, "psi", "--object", "sphere:3", "--json")
    assert code == 0 and json.loads(out)["dims"] == [2, 3]


def test_psi_table(capsys):
    code, out = run(capsys, "psi", "--object", "table:torus:2", "--json")
    data = json.loads(out)
    assert data["0"]["dims"] == [1, 1]
    assert data["0"]["x"] == [["1"]] and data["0"]["z"] == [["2"]]


def test_ext_commands(capsys):
    code, out = run(capsys, "ext", "--from", "simple:0", "--to", "simple:1", "--json")
    assert json.loads(out) == {"hom": 0, "ext1": 2}
    code, out = run(capsys, "ext", "--from", "simple:0", "--to", "simple:1", "--higher", "--json")
    data = json.loads(out)
    assert data["ext_dims"] == [0, 2, 2, 0] and data["total"] == 4 and data["euler"] == 0


def test_flop_commands(capsys):
    code, out = run(capsys, "flop", "--dimvec", "1,2", "--json")
    assert json.loads(out)["image"] == [3, 2]
    code, out = run(capsys, "flop", "--point", "1,1", "--z0", "1,1", "--z1", "-1,2", "--json")
    data = json.loads(out)
    assert data["k_image"] == [1, 1]
    assert data["verdict"]["verdict"] == "unstable"


def test_arc_commands(tmp_path, capsys):
    code, out = run(capsys, "arc", "--op", "invariants", "--catalog", "S:2", "--json")
    data = json.loads(out)
    assert (data["ray_crossings"], data["seg_crossings"]) == (1, 1)
    code, out = run(capsys, "arc", "--op", "flop", "--catalog", "S:1", "--json")
    data = json.loads(out)
    assert data["invariants"]["ray_crossings"] == 1
    assert data["invariants"]["start"] == "b"
    # write an arc file and read it back
    path = tmp_path / "arc.json"
    path.write_text(json.dumps(data["arc"]))
    code, out = run(capsys, "arc", "--op", "invariants", "--arc", str(path), "--json")
    assert json.loads(out)["seg_crossings"] == 0


def test_config_supplies_defaults(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"z0": ["-1", "2"], "z1": ["1", "1"]}))
    code, out = run(capsys, "stable", "--kind", "point:1:1", "--config", str(cfg), "--json")
    assert code == 0 and json.loads(out)["verdict"] == "stable"


def test_bad_inputs_exit_two(capsys):
    assert main(["scan", "--bound", "9", "--z0", "-1,2", "--z1", "1,1"]) == 2
    assert main(["stable", "--kind", "vplus:2", "--z0", "1,1", "--z1", "2,2"]) == 2
    assert main(["rep", "make", "--kind", "mystery:1"]) == 2
    assert main(["psi", "--object", "sphere:9"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["definitely-not-a-command"])
    assert exc.value.code == 2


def test_ainfty_check(capsys):
    code, out = run(capsys, "ainfty-check", "--json")
    assert code == 0 and json.loads(out)["ok"]
