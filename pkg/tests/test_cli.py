import json

import pytest

from nilreg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_cycle5(capsys):
    code, out, _ = run(capsys, "invariants", "cycle:5", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert (d["a"], d["pd"], d["n"], d["m"]) == (2, 3, 5, 5)
    assert d["reg"] >= 2
    assert d["chi_complement"] == 3


def test_invariants_complete4(capsys):
    code, out, _ = run(capsys, "invariants", "complete:4", "--format", "json", "--no-cache")
    d = json.loads(out)
    assert d["NI_gens"] == "<x1*x2*x3*x4>"
    assert (d["reg"], d["pd"]) == (3, 1)


def test_invariants_pretty_and_csv(capsys):
    code, out, _ = run(capsys, "invariants", "whiskered(path:3)")
    assert code == 0 and "reg = 3" in out and "pd = 3" in out
    code, out, _ = run(capsys, "invariants", "star:4", "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("input,")


def test_malformed_edge_list(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("4 3\n1 2\n2 x\n3 4\n")
    code, _, err = run(capsys, "invariants", str(f))
    assert code == 2 and "line 3" in err


def test_edge_list_file_input(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("5 5\n1 2\n2 3\n3 4\n4 5\n5 1\n")
    code, out, _ = run(capsys, "invariants", str(f), "--format", "json")
    assert code == 0 and json.loads(out)["pd"] == 3


def test_guard_violation_names_guard(capsys):
    code, _, err = run(capsys, "invariants", "cycle:30", "--no-cache")
    assert code == 2 and "guard" in err and "limit" in err


def test_betti_cycle7_with_oracle(capsys):
    code, out, _ = run(capsys, "betti", "--ideal", "ni", "cycle:7", "--oracle", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["oracle_agrees"] and d["reg"] == 4


def _entries(capsys, *argv):
    code, out, _ = run(capsys, "betti", *argv, "--format", "json")
    assert code == 0
    return json.loads(out)["entries"]


def test_betti_ideal_kind_equalities(capsys):
    assert _entries(capsys, "--ideal", "edge", "star:5") == _entries(capsys, "--ideal", "ni", "star:5")
    assert _entries(capsys, "--ideal", "path:3", "cycle:6") == _entries(capsys, "--ideal", "ni", "cycle:6")


def test_betti_ideal_file(capsys, tmp_path):
    f = tmp_path / "i.txt"
    f.write_text("x1*x2\nx2*x3\n")
    code, out, _ = run(capsys, "betti", "--ideal-file", str(f), "--format", "json", "--oracle")
    assert code == 0 and json.loads(out)["entries"] == [[0, 0, 1], [1, 2, 2], [2, 3, 1]]


def test_betti_oracle_disagreement_exits_nonzero(capsys, monkeypatch):
    from nilreg import cli
    from nilreg.betti import BettiTable
    monkeypatch.setattr(cli, "betti_table_taylor_oracle", lambda ideal, p: BettiTable(ideal.n_vars, p, {(0, 0): 1}))
    code, out, err = run(capsys, "betti", "cycle:5", "--oracle", "--no-cache")
    assert code == 1 and "DISAGREES" in out and "differ" in err
    assert out.count("total") == 2


def test_verify_pass_and_report(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "forest-equality", "--n", "6", "--seed", "4", "--out", str(out_file))
    assert code == 0 and "PASS" in out and "seed=4" in out
    d = json.loads(out_file.read_text())
    assert d["pass"] and d["failures"] == [] and d["seed"] == 4 and "elapsed_ms" in d


def test_verify_no_timing_is_byte_stable(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "verify", "structural-identities", "--n", "4", "--no-timing", "--out", str(a))
    run(capsys, "verify", "structural-identities", "--n", "4", "--no-timing", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_verify_lower_bound_p32003(capsys):
    code, _, _ = run(capsys, "verify", "lower-bound", "--n", "5", "--p", "32003", "--no-timing")
    assert code == 0


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nope"])
    assert exc.value.code == 2
    assert "forest-equality" in capsys.readouterr().err


def test_bad_prime(capsys):
    code, _, err = run(capsys, "invariants", "path:3", "--p", "4")
    assert code == 2 and "prime" in err


def test_gen(capsys):
    code, out, err = run(capsys, "gen", "trees", "4", "--labeled")
    assert code == 0 and len(out.splitlines()) == 16 and "16 graphs" in err
    code, out, _ = run(capsys, "gen", "graphs", "4")
    assert len(out.splitlines()) == 11
    code, out, _ = run(capsys, "gen", "family", "path:3")
    assert out.splitlines()[0] == "3 2"


def test_census(capsys):
    code, out, err = run(capsys, "census", "--n", "4", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 18 and "reg = a" in err


def test_cache_commands(capsys, tmp_path):
    run(capsys, "invariants", "cycle:6")
    code, out, _ = run(capsys, "cache", "path")
    assert str(tmp_path) in out
    code, out, _ = run(capsys, "cache", "audit", "--fraction", "1")
    assert code == 0 and "0 mismatches" in out
    code, out, _ = run(capsys, "cache", "clear")
    assert code == 0 and "cleared" in out


def test_max_n_warns(capsys):
    from nilreg.config import GUARDS
    saved = GUARDS.as_dict()
    try:
        code, _, err = run(capsys, "--max-n", "30", "invariants", "path:3", "--no-cache")
        assert code == 0 and "may be slow" in err
    finally:
        GUARDS.override(**saved)
