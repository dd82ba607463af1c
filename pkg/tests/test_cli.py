import json
import subprocess
import sys

import pytest

from yangian_braid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cartan(capsys):
    code, out, _ = run(capsys, "cartan", "G2")
    assert code == 0
    assert json.loads(out) == {"family": "G2", "rank": 2, "cartan": [[2, -1], [-3, 2]],
                               "d": [3, 1], "numbering": "bourbaki"}
    code, out, _ = run(capsys, "cartan", "C", "3")
    assert json.loads(out)["d"] == [1, 1, 2]


def test_w0(capsys):
    code, out, _ = run(capsys, "w0", "--family", "G2")
    assert (code, json.loads(out)) == (0, [2, 1, 2, 1, 2, 1])


def test_tables_json(capsys):
    code, out, _ = run(capsys, "tables", "--family", "G2", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["numbering"] == "bourbaki" and obj["word"] == [2, 1, 2, 1, 2, 1]
    cells = {(e["b1"], e["b2"]): e["values"] for e in obj["sets"]}
    assert len(cells) == 4 and cells[1, 1] == ["3", "4", "5", "6"]


def test_tables_markdown_and_compare(capsys):
    code, out, _ = run(capsys, "tables", "--family", "G2", "--format", "markdown")
    assert code == 0 and "| 2 | {9/2, 13/2} | {1, 3, 4, 6} |" in out
    code, out, err = run(capsys, "tables", "--family", "E6", "--compare")
    assert all(e["matches"] for e in json.loads(out)["sets"])
    assert "36/36" in err


def test_tables_deterministic(capsys):
    outs = {run(capsys, "tables", "--family", "F4")[1] for _ in range(2)}
    outs.add(run(capsys, "tables", "--family", "F4", "--jobs", "2")[1])
    assert len(outs) == 1


def test_check_exit_codes(capsys):
    code, out, err = run(capsys, "check", "tensor", "--family", "A", "--rank", "1",
                         "--factors", "1:0/1:1,1:5/1:1")
    assert code == 0 and json.loads(out)["verdict"] == "Cyclic" and "Cyclic" in err
    code, out, _ = run(capsys, "check", "tensor", "--family", "A1", "--factors", "1:0:1,1:1:1")
    assert code == 2 and json.loads(out)["verdict"] == "Unknown"


def test_sets(capsys, tmp_path):
    code, out, _ = run(capsys, "sets", "fundamental", "--family", "E6", "--b1", "1", "--b2", "1")
    assert json.loads(out)["values"] == ["1", "4"]
    wf = tmp_path / "w.txt"
    wf.write_text("1 2 1 2 1 2\n")
    code, out, _ = run(capsys, "sets", "kr", "--family", "G2", "--word", str(wf),
                       "--b1", "2", "--m1", "1", "--b2", "1", "--m2", "2")
    assert code == 0 and json.loads(out)["word"] == [1, 2, 1, 2, 1, 2]
    assert json.loads(out)["values"] == ["7/2", "9/2", "11/2", "13/2"]


def test_braid_apply(capsys):
    t = json.dumps({"family": "G2", "components": [
        {"node": 2, "factors": [{"param": "a", "param_coeff": "1", "re": "0", "im": "0", "mult": 1}]}]})
    code, out, _ = run(capsys, "braid", "apply", "--family", "G2", "--word", "2", "--tuple", t)
    comps = {c["node"]: c["factors"] for c in json.loads(out)["components"]}
    assert code == 0
    assert [(f["re"], f["mult"]) for f in comps[1]] == [("3/2", 1)]
    assert [(f["re"], f["mult"]) for f in comps[2]] == [("1/1", -1)]


@pytest.mark.parametrize("what", ["braid", "automorphism", "well-defined"])
def test_verify(capsys, what):
    code, out, _ = run(capsys, "verify", what, "--family", "B3", "--iters", "5", "--seed", "4")
    assert code == 0 and json.loads(out)["passed"]


def test_errors(capsys):
    assert run(capsys, "sets", "fundamental", "--family", "G2", "--b1", "3", "--b2", "1")[0] == 1
    assert run(capsys, "w0", "--family", "G2", "--word", "1 2 1")[0] == 1
    assert run(capsys, "cartan")[0] == 1
    assert run(capsys, "cartan", "H3")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "yangian_braid", "w0", "A", "3"],
                       capture_output=True, text=True, check=True)
    assert json.loads(r.stdout) == [1, 2, 1, 3, 2, 1]
