import csv
import json

import pytest

from capitula.cli import main
from capitula.pipeline import TripleReport, analyze_triple
from capitula.triple import PrimeTriple


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_json(capsys):
    code, out, _ = _run(capsys, "analyze", "--p1", "5", "--p2", "13", "--q", "3")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["capitulation"]["sizes"] == {"1": 4, "2": 4, "3": 4}
    assert data["type"]["label"] == "II(b)"
    assert data["units"]["p1p2q"] == {"d": 195, "x": "14", "y": "1", "denom": 1, "norm": 1}


def test_analyze_is_deterministic(capsys):
    outs = {_run(capsys, "analyze", "--p1", "5", "--p2", "13", "--q", "7")[1] for _ in range(2)}
    assert len(outs) == 1
    data = json.loads(outs.pop())
    assert data["capitulation"]["sizes"]["3"] == 2 and data["type"]["family"] == "III"


def test_analyze_text(capsys):
    code, out, _ = _run(capsys, "analyze", "--p1", "13", "--p2", "5", "--q", "3", "--format", "text")
    assert code == 0 and "type: I(b)" in out and "main theorem: ok" in out


@pytest.mark.parametrize("argv", [("4", "13", "3"), ("5", "5", "3"), ("5", "13", "5")])
def test_analyze_invalid(capsys, argv):
    code, _, err = _run(capsys, "analyze", "--p1", argv[0], "--p2", argv[1], "--q", argv[2])
    assert code == 2 and "error" in err


def test_report_round_trip():
    r = analyze_triple(PrimeTriple(5, 13, 7))
    again = TripleReport.from_json(r.to_json())
    assert again == r and again.to_json() == r.to_json()
    with pytest.raises(ValueError):
        TripleReport.from_dict({**r.to_dict(), "schema": 2})


def test_scan(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    code, summary, _ = _run(capsys, "scan", "--pmax", "13", "--qmax", "7", "--out", str(out))
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    keys = [(int(r["p1"]), int(r["p2"]), int(r["q"])) for r in rows]
    assert (5, 13, 3) in keys and (5, 13, 7) in keys and keys == sorted(keys)
    assert json.loads(summary)["triples"] == len(rows)
    row = rows[keys.index((5, 13, 3))]
    assert row["kernel2"] == "H3,H1+H2" and row["type"] == "II(b)" and row["main_ok"] == "true"


def test_scan_only_222(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert _run(capsys, "scan", "--pmax", "50", "--qmax", "50", "--only-222", "--out", str(out))[0] == 0
    rows = list(csv.DictReader(out.open()))
    assert rows and all(r["full_cap"] == "true" and r["cl222"] == "true" for r in rows)


def test_scan_parallel_same_bytes(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    _run(capsys, "scan", "--pmax", "40", "--qmax", "20", "--out", str(a))
    _run(capsys, "scan", "--pmax", "40", "--qmax", "20", "--out", str(b), "--jobs", "2")
    assert a.read_bytes() == b.read_bytes()


def test_scan_empty_and_io_error(tmp_path, capsys):
    out = tmp_path / "e.csv"
    assert _run(capsys, "scan", "--pmax", "3", "--qmax", "3", "--out", str(out))[0] == 0
    assert len(out.read_text().splitlines()) == 1
    assert _run(capsys, "scan", "--pmax", "13", "--qmax", "7", "--out", str(tmp_path / "no" / "x.csv"))[0] == 2


def test_verify(capsys):
    code, out, _ = _run(capsys, "verify", "--property", "lemma2.3", "--bound", "2000")
    assert code == 0 and json.loads(out)["violations"] == []
    assert _run(capsys, "verify", "main-theorem", "--bound", "60")[0] == 0
    assert _run(capsys, "verify", "bogus", "--bound", "10")[0] == 2
    assert _run(capsys, "verify", "--property", "classifier", "--bound", "1")[0] == 2


def test_usage_error(capsys):
    assert _run(capsys, "frobnicate")[0] == 2
