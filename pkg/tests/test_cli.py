import json

from ulamgames.cli import main

COUNTEREXAMPLE_JSON = """
{
  "start": 1,
  "vertices": [1, 2, 3],
  "arcs": [
    {"from": 1, "label": 0, "to": 2},
    {"from": 1, "label": 1, "to": 3},
    {"from": 2, "label": 0, "to": 1},
    {"from": 3, "label": 1, "to": 1}
  ]
}
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_prints_verdict(capsys):
    code, out, _ = run(capsys, "solve", "--forbidden", "00,010")
    assert code == 0
    assert out.strip() == "seeker"
    code, out, _ = run(capsys, "solve", "--forbidden", "00,0110")
    assert code == 0
    assert out.strip() == "obscurer"


def test_solve_graph_pairs(capsys, tmp_path):
    path = tmp_path / "counterexample.g"
    path.write_text(COUNTEREXAMPLE_JSON)
    code, out, _ = run(capsys, "solve", "--graph", str(path), "--pairs")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "seeker"
    table = dict(
        line.rsplit(": ", 1) for line in lines[1:] if line.startswith("pair")
    )
    assert table["pair 0 0"] == "seeker"
    assert table["pair 1 1"] == "seeker"
    assert table["pair 2 2"] == "seeker"
    assert table["pair 0 1"] == "obscurer"
    assert table["pair 0 2"] == "obscurer"
    assert table["pair 1 2"] == "seeker"


def test_solve_winners_and_strategy(capsys):
    code, out, _ = run(capsys, "solve", "--forbidden", "0", "--winners", "--strategy")
    assert code == 0
    assert "0 0 obscurer-move: seeker" in out
    assert "seeker at 0 0 seeker-extends-1: write 0" in out


def test_solve_tree(capsys):
    code, out, _ = run(capsys, "solve", "--forbidden", "01", "--tree", "2")
    assert code == 0
    tree = json.loads(out[out.index("{") :])
    assert tree["position"] == [2, 0]
    assert {"q0", "on_yes", "on_no"} <= tree.keys()


def test_classify_csv_and_plot(capsys, tmp_path):
    table = tmp_path / "verdicts.csv"
    figure = tmp_path / "verdicts.png"
    code, out, _ = run(
        capsys,
        "classify",
        "--max-len",
        "3",
        "--set-size",
        "2",
        "--out",
        str(table),
        "--plot",
        str(figure),
    )
    assert code == 0
    lines = table.read_text().splitlines()
    assert lines[0] == "s1,s2,theory,solver,agree"
    assert all(line.endswith(",true") for line in lines[1:])
    assert figure.stat().st_size > 0


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "gcd", "--max", "4")
    assert code == 0
    assert out.startswith("PASS gcd")


def test_verify_failure_exit_code(capsys, monkeypatch):
    from ulamgames import suites

    def broken():
        return suites.SuiteResult(
            "gcd", False, ["FAIL gcd: forced"], "forced"
        )

    monkeypatch.setitem(suites.SUITES, "gcd", broken)
    code, out, _ = run(capsys, "verify", "gcd")
    assert code == 1
    assert out.startswith("FAIL gcd")


def test_play_writes_transcript(capsys, tmp_path):
    out_path = tmp_path / "match.json"
    code, _, _ = run(
        capsys,
        "play",
        "--forbidden",
        "01",
        "--n",
        "4",
        "--policy",
        "random",
        "--seed",
        "5",
        "--out",
        str(out_path),
    )
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["n"] == 4
    assert payload["outcome"] in (1, 2, 3, 4)


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "--forbidden", "0")
    assert code == 0
    assert out.startswith("digraph restriction {")
    code, out, _ = run(capsys, "export", "--forbidden", "0", "--augmented")
    assert 'label="err"' in out


def test_usage_errors_exit_two(capsys):
    assert main(["solve"]) == 2
    assert main(["unknown-command"]) == 2
    code, _, err = run(capsys, "solve", "--forbidden", "0,1")
    assert code == 2
    assert "error" in err.lower()
    code, _, err = run(capsys, "solve", "--graph", "/nonexistent/path.g")
    assert code == 2
