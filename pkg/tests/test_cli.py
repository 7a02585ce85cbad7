import json

from sepdim.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_cycle_human(capsys):
    code, out, _ = run_cli(capsys, "solve", "C:5")
    assert code == 0
    assert "pi_f = 5/3" in out


def test_solve_circular_label(capsys):
    code, out, _ = run_cli(capsys, "solve", "K:3,3", "--mode", "circular")
    assert code == 0
    assert "pi_f_circ = 6/5" in out


def test_solve_json_schema_and_reproducibility(capsys):
    code, out1, _ = run_cli(capsys, "solve", "K:2,2,2", "--json")
    assert code == 0
    code, out2, _ = run_cli(capsys, "solve", "K:2,2,2", "--json")
    assert code == 0
    r1, r2 = json.loads(out1), json.loads(out2)
    assert r1["schema"] == 1
    assert r1["result"]["pi_f"] == "12/5"
    assert r1["result"]["certificate"] == "exact"
    r1.pop("timing_s", None)
    r2.pop("timing_s", None)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)


def test_solve_csv(capsys):
    code, out, _ = run_cli(capsys, "solve", "C:6", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "metric,value"
    assert "pi_f,3/2" in lines


def test_solve_file_input(tmp_path, capsys):
    path = tmp_path / "square.edges"
    path.write_text("# C4\n0 1\n1 2\n2 3\n0 3\n")
    code, out, _ = run_cli(capsys, "solve", str(path))
    assert code == 0
    assert "pi_f = 2" in out
    code, out, _ = run_cli(capsys, "solve", "@" + str(path))
    assert code == 0
    assert "pi_f = 2" in out


def test_solve_cap_refusal(capsys):
    code, _, err = run_cli(capsys, "solve", "heawood")
    assert code == 1
    assert "capped" in err
    assert "--i-have-time" in err


def test_solve_bad_family(capsys):
    code, _, err = run_cli(capsys, "solve", "U:9")
    assert code == 1
    assert "error" in err


def test_solve_threads_agree(capsys):
    code, out1, _ = run_cli(capsys, "solve", "C:6", "--reduction", "none", "--json")
    code, out2, _ = run_cli(capsys, "solve", "C:6", "--reduction", "none",
                            "--threads", "2", "--json")
    r1, r2 = json.loads(out1), json.loads(out2)
    assert r1["result"]["pi_f"] == r2["result"]["pi_f"] == "3/2"
    assert r1["result"]["primal"] == r2["result"]["primal"]


def test_verify_identities(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "identities")
    assert code == 0
    assert "FAIL" not in out


def test_verify_swaps(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "swaps")
    assert code == 0
    assert "strictly improving" in out


def test_verify_strategies_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "strategies", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "suite,check,status,detail"
    assert all("FAIL" not in line for line in lines[1:])


def test_scan_bipartite(capsys):
    code, out, _ = run_cli(capsys, "scan", "--family", "bipartite", "--n", "6")
    assert code == 0
    assert "K_{3,3}: 9/4  <-- max" in out


def test_scan_tripartite_json(capsys):
    code, out, _ = run_cli(capsys, "scan", "--family", "tripartite", "--n", "9",
                           "--json")
    assert code == 0
    rows = json.loads(out)["result"]["rows"]
    assert rows[0]["shape"] == [3, 3, 3]
    assert rows[0]["is_max"]


def test_tree_exact_spider(capsys):
    code, out, _ = run_cli(capsys, "tree", "star-subdiv:4", "--beta", "3/4",
                           "--exact")
    assert code == 0
    assert "min separation probability: 3/4" in out
    assert "pi_f <= 4/3" in out


def test_tree_exact_path(capsys):
    code, out, _ = run_cli(capsys, "tree", "path:8", "--beta", "3/4", "--exact")
    assert code == 0
    assert "min separation probability: 3/4" in out


def test_scan_tripartite_n10_reports(capsys):
    # Larger shapes are reported with exact values; the conjectured argmax is
    # not an assertion target, only the exactness and completeness are.
    code, out, _ = run_cli(capsys, "scan", "--family", "tripartite", "--n", "10",
                           "--json")
    assert code == 0
    rows = json.loads(out)["result"]["rows"]
    assert all(r["pi_f"] is not None for r in rows)
    assert sum(1 for r in rows if r["is_max"]) >= 1
    shapes = {tuple(r["shape"]) for r in rows}
    assert (1, 4, 5) in shapes and (2, 4, 4) in shapes and (3, 3, 4) in shapes


def test_tree_sampling_reproducible(capsys):
    args = ["tree", "random-tree:8", "--beta", "0.7071", "--samples", "400",
            "--seed", "7", "--json"]
    code, out1, _ = run_cli(capsys, *args)
    assert code == 0
    code, out2, _ = run_cli(capsys, *args)
    r1, r2 = json.loads(out1), json.loads(out2)
    r1.pop("timing_s", None)
    r2.pop("timing_s", None)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)
    assert r1["seed"] == 7


def test_tree_rejects_non_tree(capsys):
    code, _, err = run_cli(capsys, "tree", "C:6")
    assert code == 1
    assert "tree" in err


def test_tree_explicit_root(capsys):
    code, out, _ = run_cli(capsys, "tree", "path:6", "--root", "0", "--exact")
    assert code == 0
    assert "root 0" in out


def test_tree_root_out_of_range(capsys):
    code, _, err = run_cli(capsys, "tree", "path:6", "--root", "9")
    assert code == 1
    assert "out of range" in err


def test_long_run_search_flagged(capsys):
    code, out, _ = run_cli(capsys, "solve", "heawood", "--i-have-time",
                           "--budget", "1.0", "--json")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["search"] == "branch-and-bound"
    assert result["lower_bound_only"] is True
    assert all(row["best_separated"] >= 0 for row in result["per_class"])
