import json
import subprocess
import sys

import pytest

from pknuth import verify
from pknuth.cli import run
from pknuth.poset import avoids_climbing_patterns, enumerate_orders, from_partition


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_orders(capsys):
    code, out, _ = call(capsys, "orders", "--n", "3")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and [x["lambda"] for x in lines] == [[], [1], [1, 1], [2], [2, 1]]
    code, out, _ = call(capsys, "orders", "--n", "6", "--avoid-climbing")
    want = sum(1 for P in enumerate_orders(6) if avoids_climbing_patterns(P))
    assert len(out.splitlines()) == want < 132


def test_stats_example(capsys):
    code, out, _ = call(capsys, "stats", "--lambda", "7,5,4,3,2,2,1", "--n", "9",
                        "--word", "9,5,1,8,4,7,3,6,2")
    obj = json.loads(out)
    assert code == 0 and obj["schema_version"] == 1
    assert obj["des"] == [1, 2, 4, 6, 8] and obj["ght"] == 3 and obj["finv_count"] == 8
    assert len(obj["ginv"]) == 12


def test_order_sources(capsys, tmp_path):
    f = tmp_path / "order.json"
    f.write_text(json.dumps({"n": 4, "lambda": [2, 1]}))
    a = call(capsys, "stats", "--order-file", str(f), "--word", "3241")
    b = call(capsys, "stats", "--order", '{"n": 4, "lambda": [2, 1]}', "--word", "3241")
    c = call(capsys, "stats", "--lambda", "2,1", "--n", "4", "--word", "3241")
    assert a == b == c and a[0] == 0


@pytest.mark.parametrize("argv", [
    ["stats", "--word", "123"],                                           # no order
    ["stats", "--lambda", "1", "--n", "3", "--order", '{"n":3,"lambda":[]}', "--word", "123"],
    ["stats", "--order", "{not json", "--word", "123"],
    ["stats", "--lambda", "5", "--n", "3", "--word", "123"],              # not inside the staircase
    ["stats", "--lambda", "1", "--n", "3", "--word", "124"],              # not a permutation
    ["tableaux", "--lambda", "1", "--n", "3", "--shape", "2,2"],          # shape mismatch
    ["graph", "--lambda", "1", "--n", "3", "--bogus"],                    # unknown flag
    ["phi", "--lambda", "2,1", "--n", "4", "--word", "1,1"],
    ["prs", "--lambda", "2,1", "--n", "4", "--pt", '{"columns": [[4,2],[3,1]]}'],
    ["verify", "--suite", "theorem", "--jobs", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2 and err


def test_tableaux(capsys):
    code, out, _ = call(capsys, "tableaux", "--lambda", "2,1", "--n", "4", "--shape", "2,2", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["count"] == len(obj["tableaux"])
    assert [[4, 2], [3, 1]] in [t["columns"] for t in obj["tableaux"]]
    code, out, _ = call(capsys, "tableaux", "--lambda", "2,1", "--n", "4")
    assert out.strip().endswith("P-tableaux")


def test_graph_dot_full_s4(capsys):
    code, out, _ = call(capsys, "graph", "--lambda", "2,1", "--n", "4", "--format", "dot")
    assert code == 0 and out.startswith("graph knuth {")
    assert out.count("des={") == 24 and out.count(" -- ") == 12


def test_graph_component_text_and_json(capsys):
    code, out, _ = call(capsys, "graph", "--lambda", "2,1", "--n", "4", "--component-of", "3241", "--axioms")
    assert code == 0 and "(5 vertices)" in out and "not a dual equivalence graph" in out
    code, out, _ = call(capsys, "graph", "--lambda", "2,1", "--n", "4", "--component-of", "3241",
                        "--format", "json", "--axioms")
    obj = json.loads(out)
    assert len(obj["vertices"]) == 5 and obj["axioms"][0]["passed"]


def test_gamma(capsys):
    code, out, _ = call(capsys, "gamma", "--lambda", "2,2,1", "--n", "5", "--component-of", "42315")
    assert code == 0 and out.strip().endswith("t^2*(s[3,2] + s[4,1])")
    code, out, _ = call(capsys, "gamma", "--lambda", "2,1", "--n", "4", "--format", "json")
    obj = json.loads(out)
    assert len(obj["components"]) == 13 and all(c["schur_positive"] for c in obj["components"])


def test_phi_and_psi(capsys):
    code, out, _ = call(capsys, "phi", "--lambda", "5,3,2,1", "--n", "6", "--word", "4,3,2",
                        "--chain", "6,5,1", "--trace")
    assert code == 0 and "d    = (6,5,1)" in out and "case 2(a)" in out and "(h,q)=(1,2)" in out
    code, out, _ = call(capsys, "psi", "--lambda", "7,6,5,4,3,2,1", "--n", "9", "--X", "5,8,9",
                        "--word", "inf,inf,8,7,inf,6,4,3,2", "--chain", "9,5,1", "--format", "json")
    obj = json.loads(out)
    assert obj["d"] == [] and obj["beta"] == [9, 6, 8, 7, 4, 5, 3, 2, 1]


def test_prs_and_inverse(capsys):
    code, out, _ = call(capsys, "prs", "--lambda", "2,1", "--n", "4", "--word", "3,2,4,1")
    assert code == 0
    assert "PT:\n  1 3 2\n  4\nQT:\n  1 3 4\n  2\n" in out
    code, out, _ = call(capsys, "prs", "--lambda", "3,1,1", "--n", "5", "--word", "34521", "--format", "json")
    obj = json.loads(out)
    assert obj["pt_valid"] is False and obj["qt_valid"] is True
    code, out, _ = call(capsys, "prs", "--lambda", "2,1", "--n", "4",
                        "--pt", '{"columns": [[4, 2], [3, 1]]}', "--qt", '{"columns": [[2, 1], [4, 3]]}')
    assert code == 0 and out.strip() == "4231"


def test_verify_figures_exit_0(capsys):
    code, out, _ = call(capsys, "verify", "--suite", "figures")
    assert code == 0 and out.strip().endswith("figures: PASS")


def test_verify_json_is_deterministic(capsys):
    a = call(capsys, "verify", "--suite", "theorem", "--n", "4", "--format", "json")
    b = call(capsys, "verify", "--suite", "theorem", "--n", "4", "--format", "json", "--jobs", "2")
    assert a == b and json.loads(a[1])["status"] == "pass"


def test_output_is_byte_deterministic(capsys):
    for argv in (["graph", "--lambda", "3,1,1", "--n", "5", "--format", "json"],
                 ["gamma", "--lambda", "3,2,1", "--n", "5"],
                 ["prs", "--lambda", "7,6,5,4,3,2,1", "--n", "9", "--word", "987563241", "--trace"]):
        assert call(capsys, *argv) == call(capsys, *argv)


def test_witness_replays_through_cli(capsys):
    # a failing report on a ladder-climbing order; its witness is reproduced from the command line
    rep = verify.check_ght_constancy(from_partition((3, 1, 1), 5))
    w = rep.witnesses[0]["component_min"]
    word = "".join(map(str, w))
    _, out, _ = call(capsys, "graph", "--lambda", "3,1,1", "--n", "5", "--component-of", word, "--format", "json")
    verts = ["".join(map(str, v)) for v in json.loads(out)["vertices"]]
    values = set()
    for v in verts:
        _, out, _ = call(capsys, "stats", "--lambda", "3,1,1", "--n", "5", "--word", v)
        values.add(json.loads(out)["ght"])
    assert values == rep.witnesses[0]["ght_values"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "pknuth", "orders", "--n", "2"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.splitlines() == ['{"schema_version": 1, "n": 2, "lambda": []}',
                                       '{"schema_version": 1, "n": 2, "lambda": [1]}']
