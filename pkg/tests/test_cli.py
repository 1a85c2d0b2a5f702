from pathlib import Path

import pytest

from genblock import appendix
from genblock.cli import run

GOLDEN = Path(__file__).parent / "golden"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cert75(tmp_path):
    p = tmp_path / "b75.txt"
    p.write_text(appendix.text("b2_n75_m3"))
    return str(p)


@pytest.mark.parametrize("kind", ["b", "n"])
def test_table_golden(capsys, kind):
    code, out, _ = call(capsys, "table", kind, "--q", "2")
    assert code == 0
    assert out == (GOLDEN / f"table_{kind}_q2.txt").read_text()


def test_table_progressions(capsys):
    code, out, _ = call(capsys, "table", "b", "--q", "2", "--max-s", "28")
    assert code == 0
    rows = [l.split("\t") for l in out.splitlines()[1:]]
    base = [27, 52, 75, 92, 119, 138, 155]
    assert [int(r[1]) for r in rows] == [base[(s - 1) % 7] + 155 * ((s - 1) // 7) for s in range(1, 29)]
    # stable across runs
    assert call(capsys, "table", "b", "--q", "2", "--max-s", "28")[1] == out


def test_verify_ok_and_fail(capsys, cert75):
    code, out, _ = call(capsys, "verify", "--mode", "blocking", "--f", "2", "--s", "3", cert75)
    assert code == 0 and "n=75 min_count=3" in out
    code, out, _ = call(capsys, "verify", "--mode", "blocking", "--f", "2", "--s", "4", cert75)
    assert code == 1 and "witness:" in out
    code, out, _ = call(capsys, "verify", "--mode", "blocking", "--f", "2", "--s", "3", "--max-mult", "2", cert75)
    assert code == 1 and "exceeds" in out


def test_usage_errors(capsys, tmp_path):
    assert call(capsys, "verify")[0] == 2
    assert call(capsys)[0] == 2
    assert call(capsys, "verify", "--mode", "blocking", "--f", "2", "--s", "1", str(tmp_path / "nope"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("q=2 r=5 h=2\n10000/10000\n")
    code, _, err = call(capsys, "verify", "--mode", "blocking", "--f", "2", "--s", "1", str(bad))
    assert code == 2 and "line 2" in err
    assert call(capsys, "bound", "counting", "--q", "2")[0] == 2
    assert call(capsys, "enum", "--q", "6", "--r", "3", "--h", "1")[0] == 2


def test_capability_exit(capsys, monkeypatch):
    assert call(capsys, "enum", "--q", "11", "--r", "3", "--h", "1")[0] == 3
    monkeypatch.setenv("GB_LIMIT_CELLS", "100")
    assert call(capsys, "enum", "--q", "2", "--r", "8", "--h", "4")[0] == 3


def test_construct_round_trip(capsys, tmp_path):
    out_file = tmp_path / "e.txt"
    code, out, _ = call(capsys, "construct", "eisfeld", "--q", "2", "-o", str(out_file))
    assert code == 0 and "OK" in out
    code, out, _ = call(capsys, "verify", "--mode", "blocking", "--f", "2", "--s", "1", "--n", "27", str(out_file))
    assert code == 0
    code, out, _ = call(capsys, "code", "ghw", str(out_file), "--f", "2", "--check-identity")
    assert code == 0 and "OK" in out


def test_bound_commands(capsys):
    code, out, _ = call(capsys, "bound", "double-count", "--q", "3", "--r", "5", "--f", "2", "--s", "9", "--verbose")
    assert code == 0 and ">= 846" in out and "beta32" in out
    assert "= 16" in call(capsys, "bound", "griesmer", "--q", "2", "--k", "5", "--d", "8")[1]
    assert "n = 80" in call(capsys, "bound", "duality", "--q", "2", "--b", "75")[1]
    assert "<= 10" in call(capsys, "bound", "anticode", "--q", "2", "--v", "5", "--k", "2", "--delta", "2")[1]


def test_ilp_commands(capsys, tmp_path):
    lp = tmp_path / "m.lp"
    code, out, _ = call(capsys, "ilp", "emit", "--q", "2", "--r", "5", "--h", "2", "--f", "2", "--s", "1", "-o", str(lp))
    assert code == 0 and "155 variables, 155 constraints" in out
    sol = tmp_path / "sol.txt"
    code, out, _ = call(capsys, "ilp", "solve", "--q", "2", "--r", "3", "--h", "1", "--f", "1", "--s", "1", "-o", str(sol))
    assert code == 0 and "optimum 3" in out
    code, out, _ = call(capsys, "ilp", "check", "--q", "2", "--r", "3", "--h", "1", "--f", "1", "--s", "1", str(sol))
    assert code == 0 and "objective 3" in out
    code, *_ = call(capsys, "ilp", "solve", "--q", "2", "--r", "3", "--h", "1", "--f", "1", "--s", "4", "--max-mult", "1")
    assert code == 1
    code, *_ = call(capsys, "ilp", "solve", "--q", "2", "--r", "5", "--h", "2", "--f", "2", "--s", "2", "--node-limit", "10")
    assert code == 3


def test_flag_classes_reports_discrepancy(capsys):
    code, out, _ = call(capsys, "flag-classes", "--q", "2", "--s", "4")
    assert code == 0
    assert "discrepancy: line class 4 has 4 members, tabulated 8" in out
    assert "cardinality=92" in out
