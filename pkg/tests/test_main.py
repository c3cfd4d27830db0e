import json
import sys

import pytest

from vlimits import generic, main, verify


def run_cli(monkeypatch, *args):
    monkeypatch.setattr(sys, "argv", ["vlimits"] + list(args))
    with pytest.raises(SystemExit) as info:
        main.run()
    return info.value.code


def read(path):
    return json.loads(path.read_text())


def test_graph_info(datafile, capsys):
    main.main(["graph", "info", datafile("b2.json")])
    document = json.loads(capsys.readouterr().out)
    assert document["vertices"] == ["u", "v"]
    assert document["genus"] == 1
    assert document["spanning_trees"] == 2
    assert document["lattice_index"] == 2
    assert document["jacobian"] == [2]


def test_graph_info_k4(datafile, tmp_path):
    out = tmp_path / "info.json"
    main.main(["-o", str(out), "graph", "info", datafile("k4.json")])
    document = read(out)
    assert document["genus"] == 3
    assert document["spanning_trees"] == 16
    assert document["jacobian"] == [4, 4]


def test_limits(datafile, tmp_path):
    out = tmp_path / "limits.json"
    dot = tmp_path / "limits.dot"
    main.main(["-o", str(out), "--dot", str(dot), "limits", datafile("b2.json")])
    document = read(out)
    assert [record["cell"] for record in document["limits"]][4] == "(0,0)"
    assert len(document["limits"]) == 9
    assert document["complete"] is True
    assert document["connected"] is True
    node = [record for record in document["limits"] if record["cell"] == "(1/2,1/2)"][0]
    assert node["n"] == 2
    assert node["degrees"] == [1, -1]
    assert dot.read_text().startswith("digraph limits {")


def test_limits_is_deterministic(datafile, tmp_path):
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    for out in (first, second):
        main.main(["-o", str(out), "--nmax", "3", "--window", "1", "limits", datafile("theta.json")])
    assert first.read_text() == second.read_text()


def test_limits_with_overrides(datafile, tmp_path):
    out = tmp_path / "limits.json"
    main.main(["-o", str(out), "--a", "e1=2", "--bdeg", "0, 0", "limits", datafile("b2.json")])
    records = {record["cell"]: record for record in read(out)["limits"]}
    assert records["(1,1)"]["gluing"]["e1"] == [2, 1]
    assert records["(1/2,1/2)"]["degrees"] == [0, -2]


def test_tiling_svg(datafile, tmp_path):
    out = tmp_path / "tiling.svg"
    main.main(["-o", str(out), "--samples", "6", "tiling", "svg", datafile("b2.json")])
    assert out.read_text().startswith("<svg ")
    sidecar = read(tmp_path / "tiling.json")
    assert sidecar["dim"] == 1
    assert len(sidecar["tiles"]) > 0


def test_tiling_svg_k4_writes_census(datafile, tmp_path, capsys):
    out = tmp_path / "k4.svg"
    argv = ["-o", str(out), "--nmax", "1", "--fbox", "1", "--window", "1", "tiling", "svg", datafile("k4.json")]
    main.main(argv)
    assert "vlimits limits" in capsys.readouterr().err
    assert not out.exists()
    summary = read(tmp_path / "k4.json")
    assert summary["dimension"] == 3
    assert summary["drawn"] is False
    assert summary["cells"] == len(summary["limits"]) > 0
    assert sum(summary["by_dimension"].values()) == summary["cells"]


def test_twisted_input(datafile, tmp_path):
    out = tmp_path / "limits.json"
    main.main(["-o", str(out), "--nmax", "1", "--window", "1", "limits", datafile("twisted.json")])
    document = read(out)
    assert document["rescaled"] == 2
    assert len(document["limits"]) > 0
    svg = tmp_path / "twisted.svg"
    main.main(["-o", str(svg), "--samples", "4", "tiling", "svg", datafile("twisted.json")])
    assert svg.read_text().startswith("<svg ")
    assert len(read(tmp_path / "twisted.json")["tiles"]) > 0


def test_chipfire(datafile, tmp_path):
    out = tmp_path / "fire.json"
    argv = ["-o", str(out), "--divisor", datafile("divisor.json"), "--fire", "v", "chipfire", datafile("b2_22.json")]
    main.main(argv)
    document = read(out)
    assert document["fired"] == ["v"]
    assert document["divisor"] == {"u": 1, "v": -1, "z:e2:1": 1}
    assert document["degree"] == 1
    assert document["admissible"] is True
    assert document["t"] == {"e1": 0, "~e1": 0, "e2": 1, "~e2": 1}


def test_chipfire_zero_divisor(datafile, tmp_path):
    out = tmp_path / "fire.json"
    main.main(["-o", str(out), "--n", "2", "--fire", "u, v", "chipfire", datafile("k2.json")])
    document = read(out)
    assert document["n"] == 2
    assert document["divisor"] == {}
    assert document["degree"] == 0


def test_verify(datafile, tmp_path):
    out = tmp_path / "verify.json"
    argv = ["-o", str(out), "--suite", "graph", "--suite", "chipfire", "--count", "3", "verify", datafile("b2.json")]
    main.main(argv)
    document = read(out)
    assert list(document["suites"]) == ["graph", "chipfire"]
    assert all(suite["passed"] for suite in document["suites"].values())


@pytest.mark.parametrize("suite", list(verify.SUITES))
@pytest.mark.parametrize("name", ["b2.json", "theta.json", "triangle.json", "twisted.json"])
def test_verify_suite(datafile, tmp_path, suite, name):
    out = tmp_path / "verify.json"
    main.main(["-o", str(out), "--suite", suite, "--count", "4", "verify", datafile(name)])
    document = read(out)
    assert document["suites"] == {suite: {"passed": True, "failures": []}}


def test_unknown_suite(datafile, monkeypatch):
    assert run_cli(monkeypatch, "--suite", "nothing", "verify", datafile("b2.json")) == generic.EXIT_DOMAIN


def test_parse_errors(datafile, monkeypatch, capsys):
    assert run_cli(monkeypatch, "graph", "info", datafile("bad_a.json")) == generic.EXIT_PARSE
    assert "edges[0].a" in capsys.readouterr().err
    assert run_cli(monkeypatch, "--lengths", "1/2, 1", "limits", datafile("b2.json")) == generic.EXIT_PARSE
    assert run_cli(monkeypatch, "graph", "info", datafile("missing.json")) == generic.EXIT_PARSE


def test_usage_errors(datafile, monkeypatch):
    assert run_cli(monkeypatch) == generic.EXIT_DOMAIN
    assert run_cli(monkeypatch, "graph", "draw", datafile("b2.json")) == 2
    assert run_cli(monkeypatch, "--nmax", "0", "limits", datafile("b2.json")) == generic.EXIT_DOMAIN
    assert run_cli(monkeypatch, "--b", "1", "--b-edges", "1, 1", "limits", datafile("b2.json")) == generic.EXIT_DOMAIN


def test_success_exit(datafile, monkeypatch, tmp_path):
    out = tmp_path / "info.json"
    assert run_cli(monkeypatch, "-o", str(out), "graph", "info", datafile("k2.json")) == generic.EXIT_OK
    assert read(out)["genus"] == 0
