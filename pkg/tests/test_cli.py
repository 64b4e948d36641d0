import json
import shlex

import pytest

from jordanorder import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_axioms_example(capsys, tmp_path):
    code, out, _ = run(capsys, "check-axioms", "--instance", "sym2q", "--seed", "7", "--cases", "1000",
                       "--out", str(tmp_path))
    assert code == 0
    report = tmp_path / "check-axioms-sym2q-seed7.txt"
    assert report.read_text() == out
    assert "FAIL" not in out.replace("FAIL  totality", "")
    data = json.loads((tmp_path / "check-axioms-sym2q-seed7.json").read_text())
    assert {d["title"] for d in data} >= {"Jordan algebra identities", "partial cyclic order axioms"}


def test_query_examples(capsys):
    assert run(capsys, "query-cyclic", "--instance", "q", "--triple", "1,2,-1")[:2] == (0, "true\n")
    assert run(capsys, "query-cyclic", "--instance", "q", "--triple", "1,0,-1")[1] == "false\n"
    assert run(capsys, "query-cyclic", "--instance", "q", "--triple", "0;inf;-1")[1] == "true\n"
    assert run(capsys, "query-cyclic", "--instance", "sym2q", "--triple", "0;e;inf")[1] == "true\n"
    assert run(capsys, "query-cyclic", "--instance", "sym2q", "--full", "--triple",
               '0;[1,0,1];{"hom": [["0","0"],["0","0"],["1","0"],["0","1"]]}')[1] == "true\n"
    assert run(capsys, "query-transversal", "--instance", "q", "--pair", "1,1")[1] == "false\n"
    assert run(capsys, "query-transversal", "--instance", "sym2q", "--pair",
               '{"matrix": [["1","0"],["0","1"]]};[1,0,2]')[1] == "false\n"


def test_torus_boxes_example(capsys, tmp_path):
    svg = tmp_path / "out.svg"
    code, out, _ = run(capsys, "torus-boxes", "--n", "2", "--a", "1/2,1/2", "--b", "-1/2,-1/2", "--svg", str(svg))
    assert code == 0
    assert "boxes: 4" in out and "grid agreement: PASS" in out
    assert svg.read_text().startswith("<svg")


def test_failure_writes_replayable_witness(capsys, tmp_path):
    code, out, _ = run(capsys, "check-axioms", "--instance", "zint", "--cases", "100", "--out", str(tmp_path))
    assert code == 1
    w = json.loads((tmp_path / "witness-zint-partially-ordered-ring-axioms-inverse-por.json").read_text())
    assert w["witness"] == {"a": "2"}
    replay = shlex.split(w["replay"])[1:]
    assert replay[replay.index("--out") + 1] == str(tmp_path)
    assert cli.main(replay) == 1


def test_triple_witness_replays_through_query(capsys, tmp_path, monkeypatch):
    # treat the (generally false) totality property as asserted to obtain a failing triple
    monkeypatch.setattr(cli, "INFORMATIONAL", set())
    code, _, _ = run(capsys, "check-axioms", "--instance", "sym2q", "--suites", "totality", "--cases", "200",
                     "--out", str(tmp_path))
    assert code == 1
    w = json.loads((tmp_path / "witness-sym2q-totality-of-the-cyclic-order-totality.json").read_text())
    argv = shlex.split(w["replay"])[1:]
    assert argv[0] == "query-cyclic"
    assert run(capsys, *argv)[1] == "false\n"
    a, x, b = w["witness"]["triple"]
    flipped = json.dumps([a, b, x])
    assert run(capsys, "query-cyclic", "--instance", "sym2q", "--triple", flipped)[1] == "false\n"


def test_usage_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "query-cyclic", "--instance", "nope", "--triple", "1,2,3")[0] == 2
    assert run(capsys, "query-cyclic", "--instance", "sym2q", "--triple", "1;2")[0] == 2
    assert run(capsys, "check-axioms", "--instance", "q", "--cases", "0")[0] == 2
    assert run(capsys, "check-axioms", "--instance", "q", "--suites", "bogus")[0] == 2
    assert run(capsys, "torus-boxes", "--a", "1/2", "--b", "1/2")[0] == 2
    cfg = tmp_path / "c.json"
    cfg.write_text('{\n  "defaults": {"cases": -3}\n}')
    code, _, err = run(capsys, "--config", str(cfg), "list-instances")
    assert code == 2 and "line 2" in err and "defaults.cases" in err
    with pytest.raises(SystemExit) as e:
        cli.main(["no-such-command"])
    assert e.value.code == 2


def test_output_directory_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cli.OUT_ENV, str(tmp_path / "env"))
    code, _, _ = run(capsys, "tube-experiment", "--instance", "spin3q", "--cases", "50")
    assert code == 0
    assert (tmp_path / "env" / "tube-spin3q-seed0.txt").exists()


def test_other_subcommands(capsys, tmp_path):
    code, out, _ = run(capsys, "interval-image", "--instance", "q", "--pair", "0,inf", "--grid", "-3:3:6",
                       "--csv", str(tmp_path / "q.csv"))
    assert code == 0 and "class: parabolic" in out and "members: 3" in out
    assert (tmp_path / "q.csv").read_text().splitlines()[-1] == "5/2,1,P"
    assert run(capsys, "topology-probe", "--instance", "dual-q", "--cases", "100", "--out", str(tmp_path))[0] == 0
    assert run(capsys, "topology-probe", "--instance", "sym2q", "--cases", "100", "--out", str(tmp_path))[0] == 0
    code, out, _ = run(capsys, "topology-probe", "--instance", "q", "--probe", "separate", "--pair", "0,5",
                       "--catalog", "-1;1;4;6")
    assert code == 0 and "separating pairs: " in out and not out.endswith("separating pairs: 0\n")
    code, out, _ = run(capsys, "list-instances")
    assert "sym2q" in out and "torus3" in out


def _artifacts(capsys, d):
    run(capsys, "check-axioms", "--instance", "qq", "--seed", "3", "--cases", "200", "--out", str(d))
    run(capsys, "interval-image", "--instance", "sym2q", "--pair", "-1e;1e", "--grid", "-2:2:12,-2:2:12",
        "--coords", "0,2", "--svg", str(d / "i.svg"), "--csv", str(d / "i.csv"))
    run(capsys, "torus-boxes", "--n", "2", "--a", "1/2,-1/2", "--b", "-1/2,1/2", "--svg", str(d / "t.svg"),
        "--csv", str(d / "t.csv"))
    return {p.name: p.read_bytes() for p in sorted(d.iterdir())}


def test_determinism(capsys, tmp_path):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    first, second = _artifacts(capsys, tmp_path / "a"), _artifacts(capsys, tmp_path / "b")
    assert first == second and len(first) == 6
