import csv
import io
import json
import subprocess
import sys

import pytest

from zdiam.cli import format_sweep, main, run_polydist, run_sweep, run_witness


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_zn12(capsys):
    code, out, _ = run(capsys, "classify", "zn:12")
    assert code == 0
    assert "predicted diam Gamma: 3" in out and "computed diam Gamma: 3" in out


def test_classify_json_product(capsys):
    spec = json.dumps({"kind": "product", "factors": ["zn:2", "zn:2"]})
    code, out, _ = run(capsys, "classify", spec, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["predicted_gamma"] == 1 and data["predicted_gamma_rx"] == 2
    assert data["predicates"]["boolean_ring"] is True


def test_classify_field_not_applicable(capsys):
    code, _, err = run(capsys, "classify", "zn:7")
    assert code == 4 and "NotApplicableError" in err


def test_exit_codes(capsys):
    assert run(capsys, "classify", "zz:7")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "classify", "zn:12", "--bogus")[0] == 1
    assert run(capsys, "classify", "quot:4:0,0,1")[0] == 2
    assert run(capsys, "classify", "zn:1")[0] == 2
    bad = json.dumps({"kind": "table", "add": [[0, 1], [1, 0]], "mul": [[0, 1], [0, 1]]})
    assert run(capsys, "classify", bad)[0] == 2
    assert run(capsys, "sweep", "--max-n", "3")[0] == 1


def test_graph_formats(capsys):
    code, out, _ = run(capsys, "graph", "zn:6")
    assert code == 0 and "n2 -- n3;" in out and out.startswith('graph "Gamma(Z_6)"')
    code, out, _ = run(capsys, "graph", "zn:12", "--variant", "tilde", "--format", "json")
    data = json.loads(out)
    assert data["graph"] == "GammaTilde(Z_12)" and data["complete"] is False and data["diameter"] == 2
    code, out, _ = run(capsys, "graph", "zn:9", "--format", "text")
    assert "diameter: 1" in out


def test_graph_out_file(capsys, tmp_path):
    target = tmp_path / "g.dot"
    code, out, _ = run(capsys, "graph", "zn:6", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().endswith("}\n")


def test_sweep_rows():
    rows = {r.n: r for r in run_sweep(16).rows}
    got = {n: (n, rows[n].predicted, rows[n].computed, rows[n].predicted_rx) for n in (4, 6, 8, 9, 12)}
    assert list(got.values()) == [(4, 0, 0, 1), (6, 2, 2, 2), (8, 2, 2, 2), (9, 1, 1, 1), (12, 3, 3, 3)]
    assert [r.n for r in run_sweep(4).rows] == [4]
    assert run_sweep(60).mismatches == 0


def test_sweep_formats_and_truncation():
    result = run_sweep(40, budget=5)
    assert len(result.rows) == 5 and result.truncated_at == 12
    text = format_sweep(result)
    assert "# truncated: row budget reached before n=12" in text
    rows = list(csv.reader(io.StringIO(format_sweep(result, "csv"))))
    assert rows[0][:4] == ["n", "predicted", "computed", "predicted_rx"] and rows[-1][0].startswith("# truncated")
    data = json.loads(format_sweep(result, "json"))
    assert data["summary"]["truncated_at"] == 12 and len(data["rows"]) == 5


def test_sweep_parallel_matches_serial():
    assert format_sweep(run_sweep(50, jobs=2)) == format_sweep(run_sweep(50))


def test_verify_default_corpus(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0 and "failures: 0" in out


def test_verify_corrupted_table(capsys, tmp_path):
    add = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    mul = [[(a * b) % 4 for b in range(4)] for a in range(4)]
    mul[2][3] = 1
    p = tmp_path / "bad.json"
    p.write_text(json.dumps([{"name": "corrupt", "spec": {"kind": "table", "add": add, "mul": mul}}, "zn:6"]))
    code, out, _ = run(capsys, "verify", "--corpus", str(p))
    assert code == 2
    assert "FAIL  corrupt: validation failure" in out and "commutativity" in out
    code, out, _ = run(capsys, "verify", "--corpus", str(p), "--format", "json")
    data = json.loads(out)
    assert data["passed"] is False and data["results"][0]["error"] == "validation"


def test_verify_empty_corpus(capsys, tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("[]")
    code, out, err = run(capsys, "verify", "--corpus", str(p))
    assert code == 0 and "warning" in err and "rings: 0" in out


def test_verify_unreadable_corpus(capsys, tmp_path):
    assert run(capsys, "verify", "--corpus", str(tmp_path / "nope.json"))[0] == 1


def test_witness():
    assert "zero-annihilator pair: (2, 3)" in run_witness("zn:12")
    assert "zero-annihilator pair: none" in run_witness("zn:9")
    assert "((1,1,0), (1,0,1))" in run_witness("bool:3")


def test_polydist():
    assert "distance: 3" in run_polydist("zn:12", "[2]", "[3]")
    assert "distance: 1" in run_polydist("zn:9", "[3]", "[6,3]")
    out = run_polydist("zn:12", "2", "4")
    assert "distance: 2" in out and "f -- 6 -- g" in out
    data = json.loads(run_polydist("bool:3", '["(1,1,0)"]', '["(1,0,1)"]', "json"))
    assert data["distance"] == 3


def test_polydist_not_a_vertex(capsys):
    code, _, err = run(capsys, "polydist", "zn:6", "[2,3]", "[3]")
    assert code == 4 and "NotAVertexError" in err
    assert run(capsys, "polydist", "zn:6", "[9]", "[3]")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zdiam", "witness", "zn:12"], capture_output=True, text=True)
    assert proc.returncode == 0 and "(2, 3)" in proc.stdout
