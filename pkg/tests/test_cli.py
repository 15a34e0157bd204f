from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from edgesplit import cli
from edgesplit.mgf import serialize_mgf
from edgesplit.oracle import ProbeOutcome, ProbeReport
from edgesplit.structures import complete_graph, make_shannon, petersen


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), stdout=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text)


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in [("k3", complete_graph(3)), ("pet", petersen()), ("s4", make_shannon(4)),
                    ("path", None)]:
        p = tmp_path / f"{name}.mgf"
        p.write_text(serialize_mgf(g) if g else "mgf 3 2\n0 1\n1 2\n")
        paths[name] = str(p)
    (tmp_path / "loop.mgf").write_text("mgf 2 1\n0 0\n")
    paths["loop"] = str(tmp_path / "loop.mgf")
    paths["dir"] = tmp_path
    return paths


def save(files, name, report):
    p = files["dir"] / name
    p.write_text(json.dumps(report))
    return str(p)


def test_chi_petersen(files):
    code, rep = run_json("chi", files["pet"])
    assert code == 0
    assert rep["oracle"] == {"Delta": 3, "mu": 1, "chi": 4, "k": 1, "class": "CLASS_II"}
    assert rep["payload"]["kind"] == "chi" and rep["verification"]["ok"]
    assert rep["input"]["digest"].startswith("sha256:")


def test_decompose_triangle(files):
    code, rep = run_json("decompose", files["k3"], "--mode", "pair")
    assert code == 0
    assert (len(rep["payload"]["part1"]), len(rep["payload"]["part2"])) == (2, 1)
    assert rep["verification"]["part1"]["class_I"] and rep["verification"]["part2"]["class_I"]


@pytest.mark.parametrize("mode", ["pair", "split", "maxsub"])
def test_decompose_verifies_in_process(files, mode):
    code, text = run("decompose", files["s4"], "--mode", mode)
    assert code == 0
    path = save(files, f"{mode}.json", json.loads(text))
    code, out = run_json("verify", files["s4"], path)
    assert code == 0 and out["ok"], out


def test_decompose_verifies_in_fresh_process(files):
    code, text = run("decompose", files["pet"], "--mode", "pair")
    path = files["dir"] / "pet.json"
    path.write_text(text)
    proc = subprocess.run([sys.executable, "-m", "edgesplit", "verify", files["pet"], str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout
    assert json.loads(proc.stdout)["ok"]


def test_output_is_byte_identical(files):
    first = run("decompose", files["pet"], "--mode", "maxsub")
    second = run("decompose", files["pet"], "--mode", "maxsub")
    assert first == second
    proc = subprocess.run([sys.executable, "-m", "edgesplit", "decompose", files["pet"], "--mode", "maxsub"],
                          capture_output=True, text=True)
    assert proc.stdout == first[1]


def test_tampered_report_moved_edge(files):
    _, rep = run_json("decompose", files["pet"], "--mode", "pair")
    payload = rep["payload"]
    payload["part2"].append(payload["part1"].pop())
    code, out = run_json("verify", files["pet"], save(files, "bad.json", rep))
    assert code == 1 and not out["ok"]
    assert any("inconsistently with part" in p for p in out["problems"])


def test_tampered_oracle_fact(files):
    _, rep = run_json("chi", files["pet"])
    rep["oracle"]["chi"] = 3
    code, out = run_json("verify", files["pet"], save(files, "bad.json", rep))
    assert code == 1 and any(p.startswith("oracle fact chi") for p in out["problems"])


def test_tampered_verification_block(files):
    _, rep = run_json("decompose", files["k3"])
    rep["verification"]["part2"]["chi"] = 7
    code, out = run_json("verify", files["k3"], save(files, "bad.json", rep))
    assert code == 1 and out["problems"] == ["stored verification block differs from recomputation"]


def test_verify_wrong_graph(files):
    _, rep = run_json("decompose", files["k3"])
    code, out = run_json("verify", files["pet"], save(files, "k3.json", rep))
    assert code == 1 and "digest mismatch" in out["problems"][0]


def test_verify_bad_report_file(files):
    p = files["dir"] / "junk.json"
    p.write_text("not json")
    code, out = run_json("verify", files["k3"], str(p))
    assert code == 1 and out["error"]["type"] == "input"


def test_probe_reports_replay(files):
    code, rep = run_json("probe", files["s4"], "--conjecture", "pq", "--p", "3", "--q", "3")
    assert code == 0 and rep["payload"]["probe"]["outcome"] == "verified"
    code, out = run_json("verify", files["s4"], save(files, "probe.json", rep))
    assert code == 0, out
    rep["payload"]["probe"]["outcome"] = "counterexample"
    code, out = run_json("verify", files["s4"], save(files, "probe_bad.json", rep))
    assert code == 1 and any("replay" in p for p in out["problems"])


def test_matching_probe_petersen(files):
    code, rep = run_json("probe", files["pet"], "--conjecture", "matching")
    assert code == 0
    assert rep["payload"]["probe"]["params"]["matchings"] == 6


def test_probe_counterexample_exit_code(files, monkeypatch):
    def fake(g, p, q, budget):
        return ProbeReport("pq", {"mgf": serialize_mgf(g)}, {"p": p, "q": q}, ProbeOutcome.COUNTEREXAMPLE)

    monkeypatch.setattr(cli, "probe_conjecture_pq", fake)
    code, rep = run_json("probe", files["k3"], "--conjecture", "pq", "--p", "2", "--q", "1")
    assert code == 3 and rep["payload"]["probe"]["outcome"] == "counterexample"


def test_probe_input_errors(files):
    assert run_json("probe", files["s4"], "--conjecture", "pq", "--p", "3")[0] == 1
    code, out = run_json("probe", files["s4"], "--conjecture", "pq", "--p", "5", "--q", "1")
    assert code == 1 and "illegal split" in out["error"]["message"]


def test_color_modes(files):
    code, rep = run_json("color", files["pet"], "--k", "4")
    assert code == 0 and rep["payload"]["outcome"] == "found" and rep["verification"]["colors_used"] == 4
    code, rep = run_json("color", files["pet"], "--k", "3")
    assert code == 0 and rep["payload"]["outcome"] == "infeasible"
    code, rep = run_json("color", files["s4"])
    assert code == 0 and rep["payload"]["method"] == "vizing" and rep["verification"]["ok"]


def test_budget_exhausted(files):
    code, out = run_json("chi", files["pet"], "--budget", "3")
    assert code == 2 and out["error"]["type"] == "budget_exhausted"
    code, out = run_json("--budget", "3", "color", files["pet"], "--k", "3")
    assert code == 2


def test_input_errors(files):
    code, out = run_json("chi", files["loop"])
    assert code == 1 and out["error"]["line"] == 2 and "loop" in out["error"]["message"]
    code, out = run_json("chi", str(files["dir"] / "absent.mgf"))
    assert code == 1 and out["error"]["type"] == "input"
    code, out = run_json("decompose", files["path"])
    assert code == 1 and "class I" in out["error"]["message"]
    assert run("chi")[0] == 1
    assert run_json("chi", files["k3"], "--budget", "0")[0] == 1


def test_gen(files):
    assert run("gen", "shannon", "--d", "3") == (0, "mgf 3 4\n0 1\n1 2\n0 2\n0 2\n")
    assert run("gen", "t", "--r", "1", "--s", "1", "--t", "1")[1] == "mgf 3 3\n0 1\n1 2\n0 2\n"
    assert run("gen", "petersen")[1].startswith("mgf 10 15\n")
    a = run("gen", "random", "--n", "5", "--m", "7", "--mu", "2", "--seed", "4")
    b = run("--seed", "4", "gen", "random", "--n", "5", "--m", "7", "--mu", "2")
    assert a == b and a[1].startswith("mgf 5 7\n")
    assert run("gen", "shannon", "--d", "1")[0] == 1


def test_human_summary(files):
    code, text = run("chi", files["pet"], "--no-json")
    assert code == 0 and text == "chi: Delta=3 mu=1 chi'=4 CLASS_II k=1\n"
