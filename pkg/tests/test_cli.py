import csv
import io
import json
import subprocess
import sys

import jsonschema
import pytest

from strongres.boundary import strong_resolving_graph
from strongres.cli import ANALYSIS_JSON_SCHEMA, AnalysisRecord, main
from strongres.families import generate
from strongres.graph import all_pairs_distances, graph_from_edge_list
from strongres.resolving import VertexPartition, is_strong_resolving_partition, is_strong_resolving_set


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def analyze_json(capsys, *argv):
    code, out, _ = run(capsys, "analyze", *argv, "--json", "--no-timings")
    data = json.loads(out)
    jsonschema.validate(data, ANALYSIS_JSON_SCHEMA)
    return code, data


# ---------------------------------------------------------------- gen


def test_gen_path(capsys):
    code, out, _ = run(capsys, "gen", "path:n=5")
    assert code == 0
    assert out == "5 4\n0 1\n1 2\n2 3\n3 4\n"


def test_gen_triangle(capsys):
    _, out, _ = run(capsys, "gen", "cycle:n=3")
    assert out == "3 3\n0 1\n0 2\n1 2\n"


def test_gen_to_file(tmp_path, capsys):
    target = tmp_path / "c1.txt"
    assert run(capsys, "gen", "c1:r=2,t=4", "-o", str(target))[0] == 0
    assert graph_from_edge_list(target.read_text()) == generate("c1:r=2,t=4")


def test_gen_bad_spec(capsys):
    code, _, err = run(capsys, "gen", "cycle:n=2")
    assert code == 1 and "n >= 3" in err


# ---------------------------------------------------------------- analyze


def test_analyze_path_pds(capsys):
    code, data = analyze_json(capsys, "path:n=9", "--pds")
    assert code == 0
    assert data["pds"]["value"] == 2 and len(data["pds"]["partition"]) == 2
    assert "dims" not in data and "srg" not in data and "bounds" not in data


def test_analyze_complete_dims(capsys):
    _, data = analyze_json(capsys, "complete:n=4", "--dims")
    assert data["dims"]["value"] == 3
    assert "pds" not in data


def test_analyze_small_grid(capsys):
    _, data = analyze_json(capsys, "grid:m=2,n=2", "--pds")
    assert data["pds"]["value"] == 3


def test_analyze_everything_by_default_and_certificates_verify(capsys, tmp_path):
    path = tmp_path / "g.txt"
    run(capsys, "gen", "c1:r=3,t=5", "-o", str(path))
    _, data = analyze_json(capsys, str(path))
    assert {"srg", "dims", "pds", "bounds"} <= data.keys()
    g = graph_from_edge_list(path.read_text())
    d = all_pairs_distances(g)
    assert is_strong_resolving_set(g, d, data["dims"]["basis"])
    assert is_strong_resolving_partition(g, d, VertexPartition(data["pds"]["partition"]))
    sr = strong_resolving_graph(g, d)
    assert data["srg"]["back_map"] == list(sr.back_map)
    assert data["srg"]["vertex_cover_number"] == data["dims"]["value"] == 5
    assert data["bounds"]["best_lower"] <= data["pds"]["value"] <= data["bounds"]["best_upper"]


def test_analyze_json_is_byte_identical(capsys):
    first = run(capsys, "analyze", "wheel:r=7", "--json", "--no-timings")[1]
    second = run(capsys, "analyze", "wheel:r=7", "--json", "--no-timings")[1]
    assert first == second


def test_analysis_record_round_trip(capsys):
    _, out, _ = run(capsys, "analyze", "comet:n=6,r=3", "--json")
    rec = AnalysisRecord.from_json(out)
    assert rec.to_json() == out.strip()
    assert "timings" in json.loads(out)


def test_analyze_text_output(capsys):
    code, out, _ = run(capsys, "analyze", "cycle:n=6", "--no-timings")
    assert code == 0
    lines = out.splitlines()
    assert len({line.index(" : ") for line in lines}) == 1
    assert any(line.startswith("pd_s ") and line.endswith(": 3") for line in lines)


def test_analyze_budget_exceeded(capsys):
    code, data = analyze_json(capsys, "wheel:r=8", "--pds", "--budget", "1")
    assert code == 2
    assert data["pds"]["status"] == "budget_exceeded"
    assert data["pds"]["lower"] <= 4 <= data["pds"]["upper"]
    assert "bounds" in data


def test_analyze_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("STRONGRES_BUDGET", "1")
    code, out, _ = run(capsys, "analyze", "wheel:r=8", "--pds", "--no-timings")
    assert code == 2 and "budget exceeded" in out
    assert run(capsys, "analyze", "wheel:r=8", "--pds", "--budget", "100000")[0] == 0


def test_analyze_disconnected(tmp_path, capsys):
    path = tmp_path / "two.txt"
    path.write_text("4 2\n0 1\n2 3\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 3 and "not connected" in err


def test_analyze_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 2\n0 1\n1 7\n")
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 4 and "line 3" in err


def test_analyze_single_vertex(capsys):
    code, _, err = run(capsys, "analyze", "complete:n=1", "--pds")
    assert code == 1 and "n >= 2" in err


# ---------------------------------------------------------------- verify


def test_verify_prints_counts_and_succeeds(capsys):
    code, out, _ = run(capsys, "verify", "oracle", "--max-n", "4")
    assert code == 0
    assert out.startswith("[PASS] oracle:")
    assert "failed" in out


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "nonsense"])


# ---------------------------------------------------------------- sweep


def sweep(capsys, *argv):
    code, out, _ = run(capsys, "sweep", *argv)
    assert code == 0
    return list(csv.DictReader(io.StringIO(out)))


def test_sweep_c1(capsys):
    rows = sweep(capsys, "c1", "r=2..3", "t=4..7")
    assert len(rows) == 8
    assert [(r["r"], r["t"]) for r in rows][:2] == [("2", "4"), ("2", "5")]
    for row in rows:
        r, t = int(row["r"]), int(row["t"])
        assert int(row["pd_s"]) == r + 1
        assert int(row["dim_s"]) == r + (t - 1) // 2
        assert row["status"] == "ok"


def test_sweep_cycles(capsys):
    rows = sweep(capsys, "cycle", "n=3..12")
    assert [int(r["pd_s"]) for r in rows] == [3] * 10


def test_sweep_wheels(capsys):
    rows = sweep(capsys, "wheel", "r=4..9")
    assert [int(r["pd_s"]) for r in rows] == [3, 3, 3, 4, 4, 5]


def test_sweep_open_question_columns(capsys):
    rows = sweep(capsys, "comet", "n=6", "r=2..5", "--explore-open-question")
    assert all({"oq_rhs", "oq_holds"} <= r.keys() for r in rows)
    for r in rows:
        rhs = (int(r["pd_s"]) + int(r["order"]) - 2) / 2
        assert float(r["oq_rhs"]) == rhs
        assert r["oq_holds"] == str(int(int(r["dim_s"]) <= rhs))


def test_sweep_marks_budget_rows(capsys):
    rows = sweep(capsys, "wheel", "r=7..8", "--budget", "1")
    assert [r["status"] for r in rows] == ["budget_exceeded"] * 2
    assert all(r["pd_s"] == "" for r in rows)


def test_sweep_bad_range(capsys):
    assert run(capsys, "sweep", "cycle", "n")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "strongres", "gen", "path:n=3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "3 2\n0 1\n1 2\n"
