import json

import pytest

from ringrange.cli import main


def test_analyze_z36(capsys):
    assert main(["analyze", "Z36"]) == 0
    out = capsys.readouterr().out
    assert "SH_LOCAL" in out and "false" in out
    assert '"a": "2"' in out and '"b": "3"' in out


def test_analyze_json(capsys):
    assert main(["analyze", "Z12", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["spec"] == "Z12" and data["order"] == 12
    assert data["properties"]["SH_LOCAL"]["holds"] is True


def test_decide_bezout_poly(capsys):
    assert main(["decide", "bezout", "Z4[x]/(x^2)"]) == 0
    out = capsys.readouterr().out
    assert "false" in out
    assert '"a": "2"' in out and '"b": "x"' in out


def test_decide_accepts_dashed_names(capsys):
    assert main(["decide", "sh-local", "Z36"]) == 0
    assert "false" in capsys.readouterr().out


def test_decide_sr2_above_cap_reports_undecided(capsys):
    assert main(["decide", "sr2", "Z72"]) == 0
    assert "undecided-by-search" in capsys.readouterr().out


def test_unknown_property_exits_2(capsys):
    assert main(["decide", "frobnitz", "Z6"]) == 2
    err = capsys.readouterr().err
    assert "unknown property" in err and "usage" in err


def test_bad_ring_spec_exits_2(capsys):
    assert main(["analyze", "Z4[y]/(y^2)"]) == 2
    assert "usage" in capsys.readouterr().err


def test_corpus_json(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    code = main(["corpus", "--max-order", "10", "--out", str(out_file)])
    assert code == 0
    report = json.loads(out_file.read_text())
    assert report["summary"]["violation_count"] == 0
    assert any(r["spec"] == "Z10" for r in report["rings"])
    err = capsys.readouterr().err
    assert "implication violations: 0" in err


def test_corpus_csv(tmp_path):
    out_file = tmp_path / "report.csv"
    assert main(["corpus", "--max-order", "8", "--format", "csv", "--out", str(out_file)]) == 0
    lines = out_file.read_text().strip().split("\n")
    assert lines[0].startswith("spec,order,units")
    assert len(lines) > 5


def test_mine_open_question(capsys):
    assert main(["mine-open-question", "--max-order", "9"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["counterexamples"] == []
    assert "almost clean" in data["question"]


def test_q_check(capsys):
    assert main(["q-check", "Z36"]) == 0
    data = json.loads(capsys.readouterr().out)
    ids = {c["id"] for c in data["checks"]}
    assert "idempotent-descent" in ids and "embedding-bijective" in ids


def test_missing_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
