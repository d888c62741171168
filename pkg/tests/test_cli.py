import json

from glcrystals.cli import run
from glcrystals.core import Report


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


M_JSON = {"n": 3, "m": 5, "rows": [[1, 1, 1, 0, 0], [0, 0, 1, 1, 0], [1, 1, 1, 0, 1]]}
X_JSON = {"rank": 4, "rows": [[5, 3, 3, 1], [4, 3, 1], [4, 2], [3]]}


def test_graph_golden(capsys):
    assert run(["graph", "--model", "tableau", "--rank", "3",
                "--shape", "2,1,0", "--format", "dot"]) == 0
    out = capsys.readouterr().out
    assert out.count("wt=") == 8
    assert out.count("->") == 8


def test_graph_deterministic(capsys):
    args = ["graph", "--model", "matrix", "--n", "2", "--m", "2", "--N", "2",
            "--structure", "row"]
    assert run(args) == 0
    first = capsys.readouterr().out
    assert run(args) == 0
    assert capsys.readouterr().out == first


def test_act_matrix_golden(tmp_path, capsys):
    path = write(tmp_path, "M.json", M_JSON)
    assert run(["act", "--model", "matrix", "--word", "s[1,2]",
                "--mode", "inner", "--structure", "column",
                "--in", path, "--format", "text"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["10100", "01110", "11101"]


def test_act_outer_matches_inner(tmp_path, capsys):
    path = write(tmp_path, "M.json", M_JSON)
    assert run(["act", "--model", "matrix", "--word", "s[1,2]",
                "--mode", "outer", "--structure", "row",
                "--in", path, "--format", "text"]) == 0
    outer = capsys.readouterr().out
    assert run(["act", "--model", "matrix", "--word", "s[1,2]",
                "--mode", "inner", "--structure", "column",
                "--in", path, "--format", "text"]) == 0
    assert capsys.readouterr().out == outer


def test_act_gt(tmp_path, capsys):
    path = write(tmp_path, "x.json", X_JSON)
    assert run(["act", "--model", "gt", "--word", "s[1,3]",
                "--in", path, "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert rows == [[5, 3, 3, 1], [4, 3, 1], [3, 2], [2]]


def test_gt_moves_match_inner(tmp_path, capsys):
    path = write(tmp_path, "x.json", X_JSON)
    assert run(["gt", "--in", path, "--moves", "t1 t2 t1"]) == 0
    via_moves = json.loads(capsys.readouterr().out)
    assert run(["gt", "--in", path, "--moves", "q2"]) == 0
    assert json.loads(capsys.readouterr().out) == via_moves
    assert via_moves["rows"][-2:] == [[3, 2], [2]]


def test_gt_beta(tmp_path, capsys):
    path = write(tmp_path, "x.json", X_JSON)
    assert run(["gt", "--in", path, "--beta"]) == 0
    assert json.loads(capsys.readouterr().out) == [3, 3, 2, 4]


def test_skew_howe_json(tmp_path, capsys):
    path = write(tmp_path, "M.json", M_JSON)
    assert run(["skew-howe", "--in", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lambda"] == "5,3,1"
    assert payload["T_P"]["rows"] == [[1, 1, 1, 2, 3], [2, 3, 3], [3]]
    assert payload["T_Q"]["rows"] == [[1, 1, 3], [2, 2], [3, 3], [4], [5]]


def test_verify_agree_and_goldens(capsys):
    assert run(["verify", "agree", "--n", "3", "--m", "3"]) == 0
    out = capsys.readouterr().out
    assert "10/10 passed" in out
    assert run(["verify", "goldens"]) == 0


def test_verify_budget_zero_runs_goldens_only(capsys):
    assert run(["verify", "all", "--budget", "0"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS golden") == 7
    assert "SKIP" in out


def test_verify_jobs_output_is_deterministic(capsys):
    assert run(["verify", "all", "--budget", "20"]) == 0
    sequential = capsys.readouterr().out
    assert run(["verify", "all", "--budget", "20", "--jobs", "4"]) == 0
    assert capsys.readouterr().out == sequential


def test_verify_failure_exit_code(capsys, monkeypatch):
    import glcrystals.cli as cli

    def failing():
        return Report("golden", {}, 1, "fail", "synthetic witness")

    monkeypatch.setattr(cli, "GOLDENS", [("synthetic", failing)])
    assert run(["verify", "goldens"]) == 1
    assert "synthetic witness" in capsys.readouterr().out


def test_usage_errors(tmp_path, capsys):
    assert run(["nosuchcommand"]) == 2
    assert run(["act", "--model", "matrix", "--word", "oops",
                "--in", write(tmp_path, "M.json", M_JSON)]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["gt", "--in", str(bad)]) == 2
    assert run(["verify", "agree"]) == 2  # missing --n/--m
    capsys.readouterr()


def test_explicit_instance_over_budget_is_an_error(capsys):
    assert run(["verify", "agree", "--n", "3", "--m", "3",
                "--budget", "50"]) == 2
    assert "--force" in capsys.readouterr().err
    assert run(["verify", "agree", "--n", "3", "--m", "3",
                "--budget", "50", "--force"]) == 0
    capsys.readouterr()


def test_character_output(capsys):
    assert run(["character", "--model", "tableau", "--rank", "2",
                "--shape", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["character"] == {"[2,0]": 1, "[1,1]": 1, "[0,2]": 1}


def test_tensor_components(capsys):
    assert run(["tensor", "--rank", "2", "--shapes", "1;1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["size"] == 4
    assert sorted(c["size"] for c in payload["components"]) == [1, 3]


def test_out_file(tmp_path):
    target = tmp_path / "graph.dot"
    assert run(["graph", "--model", "tableau", "--rank", "2", "--shape", "1",
                "--out", str(target)]) == 0
    assert target.read_text().count("->") == 1
