import json

import pytest

from balanceable import cycle, format_edge_list
from balanceable.cli import Report, report_from_json, report_to_json, run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_balanceable(capsys):
    code, out, _ = run(capsys, "classify", "cycle:12")
    assert code == 0
    assert "Balanceable" in out
    assert "cut side X" in out


def test_classify_not_balanceable_exits_zero(capsys):
    code, out, _ = run(capsys, "classify", "cycle:10")
    assert code == 0
    assert "NotBalanceable" in out
    assert "ParityEulerian" in out


def test_classify_json_fields(capsys):
    code, out, _ = run(capsys, "classify", "cycle:12", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "Balanceable"
    assert data["cut_side"] == [0, 2, 4]
    assert data["cut_edges"] == 6
    assert data["budget_status"] == "ok"


def test_classify_budget_exit(capsys):
    code, out, _ = run(capsys, "classify", "chorded:30,7", "--budget", "3")
    assert code == 2
    assert "Undecided" in out


def test_classify_reads_edge_list_file(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text(format_edge_list(cycle(4)))
    code, out, _ = run(capsys, "classify", str(f))
    assert code == 0
    assert "Balanceable" in out


def test_bad_family_spec_exits_one(capsys):
    code, _, err = run(capsys, "classify", "mystery:9")
    assert code == 1
    assert "error" in err


def test_bad_flag_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(["classify", "cycle:12", "--budget", "noise"])
    assert exc.value.code == 1
    capsys.readouterr()


def test_budget_out_of_range_exits_one(capsys):
    code, _, err = run(capsys, "classify", "cycle:12", "--budget", "99")
    assert code == 1
    assert "0..60" in err


def test_conditions_output(capsys):
    code, out, _ = run(capsys, "conditions", "cycle:8")
    assert code == 0
    assert "DegreeHalfEdges: implies-balanceable" in out
    assert "BigVertex" in out


def test_conditions_json(capsys):
    code, out, _ = run(capsys, "conditions", "wheel:6", "--json")
    assert code == 0
    data = json.loads(out)
    rows = {r["condition"]: r for r in data["conditions"]}
    assert rows["BigVertex"]["outcome"] == "implies-balanceable"
    assert rows["BigVertex"]["witness"] == [6]


def test_witness_balanceable(capsys):
    code, out, _ = run(capsys, "witness", "chorded:38,8")
    assert code == 0
    assert "2mod4-even-chord" in out


def test_witness_not_balanceable_exits_zero(capsys):
    code, out, _ = run(capsys, "witness", "chorded:6,2")
    assert code == 0
    assert "NotBalanceable" in out


def test_witness_rejects_unsupported_family(capsys):
    code, _, err = run(capsys, "witness", "cycle:8")
    assert code == 1
    assert "error" in err


def test_family_table_text(capsys):
    code, out, _ = run(capsys, "family-table", "--kmax", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["k", "ell", "status", "case", "cut_edges", "induced_edges"]
    assert any("exception-6-2" in line for line in lines)
    # one row per (k, ell) pair with 2 <= ell <= k/2
    assert len(lines) == 1 + sum(k // 2 - 1 for k in range(4, 9))


def test_family_table_json(capsys):
    code, out, _ = run(capsys, "family-table", "--kmax", "6", "--json")
    assert code == 0
    rows = json.loads(out)
    assert {(r["k"], r["ell"]) for r in rows} == {(4, 2), (5, 2), (6, 2), (6, 3)}


def test_grid_tables(capsys):
    code, out, _ = run(capsys, "grid-table", "--rect", "5")
    assert code == 0
    assert "rect-even" in out
    code, out, _ = run(capsys, "grid-table", "--tri", "10", "--json")
    assert code == 0
    rows = json.loads(out)
    by_h = {r["h"]: r for r in rows}
    assert by_h[2]["status"] == "OddEdges"
    assert by_h[8]["half_edges"] == 42


def test_verify_agrees(capsys):
    code, out, _ = run(capsys, "verify", "--kmax", "10")
    assert code == 0
    assert "0 mismatches" in out


def test_bal_text_and_json(capsys):
    code, out, _ = run(capsys, "bal", "--n", "4", "--graph", "path:2")
    assert code == 0
    assert out.strip() == "bal(4, path:2) = 0"
    code, out, _ = run(capsys, "bal", "--n", "3", "--graph", "path:1")
    assert code == 0
    assert "always present" in out
    code, out, _ = run(capsys, "bal", "--n", "3", "--graph", "path:1", "--json")
    assert json.loads(out)["bal"] is None


def test_bal_large_host_exits_two(capsys):
    code, _, err = run(capsys, "bal", "--n", "9", "--graph", "path:2")
    assert code == 2
    assert "budget" in err


def test_reduce_text_and_json(tmp_path, capsys):
    f = tmp_path / "c5.txt"
    f.write_text(format_edge_list(cycle(5)))
    code, out, _ = run(capsys, "reduce", str(f), "--k", "4")
    assert code == 0
    assert out.startswith("# target 9")
    assert "11 10" in out
    code, out, _ = run(capsys, "reduce", str(f), "--k", "4", "--json")
    data = json.loads(out)
    assert data["target"] == 9
    assert data["n"] == 11


def test_reduce_target_out_of_range(tmp_path, capsys):
    f = tmp_path / "c5.txt"
    f.write_text(format_edge_list(cycle(5)))
    code, _, err = run(capsys, "reduce", str(f), "--k", "9")
    assert code == 1
    assert "error" in err


def test_reduce_missing_file(capsys):
    code, _, err = run(capsys, "reduce", "/nonexistent/x.txt", "--k", "1")
    assert code == 1


def test_report_json_round_trip():
    r = Report(
        input="cycle:12",
        status="Balanceable",
        cut_side=[0, 2, 4],
        induced_set=[0, 1, 2, 3, 4, 5, 6],
        cut_edges=6,
        induced_edges=6,
        timing_ms=1.25,
    )
    assert report_from_json(report_to_json(r)) == r
