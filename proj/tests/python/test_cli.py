import json
import os
import subprocess
import tempfile

import pytest

CLI = os.environ.get("WONDERK_CLI", "wonderk")


def run(*args):
    p = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout


def run_json(*args):
    code, out = run(*args)
    return code, json.loads(out)


def test_roots_a2():
    code, j = run_json("roots", "--type", "A2")
    assert code == 0
    assert j["cartan_matrix"] == [[2, -1], [-1, 2]]
    assert len(j["positive_roots"]) == 3


def test_weyl_orders():
    for t, n in [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24)]:
        code, j = run_json("weyl", "--type", t)
        assert code == 0 and j["order"] == n == len(j["elements"])


def test_csets_partition():
    code, j = run_json("csets", "--type", "B2")
    assert code == 0
    names = [v for part in j["csets"] for v in part["elements"]]
    assert len(names) == len(set(names)) == 8


def test_ktable_pgl2():
    code, j = run_json("ktable", "--type", "A1")
    assert code == 0
    assert j["kgb_rank"] == 2 and j["kx_rank"] == 4
    assert j["products"]["s|s"] == [{"w": "s", "coef": {"1": 4, "s": -4}}]
    assert j["checks"]["failures"] == 0


def test_output_is_deterministic():
    a = run("ctable", "--type", "A2")
    b = run("ctable", "--type", "A2")
    assert a[0] == 0 and a == b


def test_out_file():
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "s.json")
        code, out = run("steinberg", "--type", "A1", "--out", path)
        assert code == 0 and out == ""
        with open(path) as f:
            j = json.load(f)
        assert len(j["basis"]) == 2 and j["determinant"] is not None


def test_verify_steinberg_suites():
    code, j = run_json("verify", "--type", "A2", "--suite", "prop1.8", "--suite", "lemma1.9")
    assert code == 0 and j["pass"]
    assert [r["suite"] for r in j["reports"]] == ["prop1.8", "lemma1.9"]


def test_toric_check_user_fan():
    fan = {"rays": [[1, 0], [1, 1], [0, 1]], "cones": [[0, 1], [1, 2], [0], [1], [2]]}
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "fan.json")
        with open(path, "w") as f:
            json.dump(fan, f)
        code, j = run_json("toric-check", "--type", "B2", "--fan", path, "--samples", "10")
        assert code == 0 and j["report"]["pass"]
        bad = dict(fan, cones=[[0, 1], [0], [1]])
        with open(path, "w") as f:
            json.dump(bad, f)
        code, j = run_json("toric-check", "--type", "B2", "--fan", path)
        assert code == 1 and j["error"] == "SupportMismatch"


@pytest.mark.parametrize(
    "args,error",
    [
        (["ctable", "--type", "F4"], "RankBoundExceeded"),
        (["roots", "--type", "E9"], "InvalidCartanLabel"),
        (["verify", "--type", "A1", "--suite", "nope"], "UnknownSuite"),
        (["roots"], "InvalidArguments"),
        (["ctable", "--type", "A3"], None),
    ],
)
def test_validation_errors(args, error):
    code, j = run_json(*args)
    assert code == 1
    assert "message" in j
    if error:
        assert j["error"] == error


def test_timeout_exit_code():
    code, j = run_json("verify", "--type", "B2", "--timeout", "0.05")
    assert code == 3
    assert j["error"] == "Timeout" and j["progress"]


def test_a3_spot_checks():
    code, j = run_json("verify", "--type", "A3")
    assert code == 0 and j["pass"]
    suites = [r["suite"] for r in j["reports"]]
    assert "structure-constants" not in suites
    assert {"two-path-product", "pushdown", "rank"} <= set(suites)
    code, j = run_json("steinberg", "--type", "A3")
    assert code == 0 and len(j["basis"]) == 24 and j["determinant"] is None
