import io
import json
import subprocess
import sys

import pytest

from schurweyl.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


DIAG_3_1_M2 = json.dumps({"n": 3, "re": [[3, 0, 0], [0, 1, 0], [0, 0, -2]]})


class TestExamples:
    def test_norm_hull(self):
        code, out, _ = call("hull", "--mode", "norm", "--lambda", '{"0":3,"1":1}',
                            "--mu", '{"0":2,"1":2}')
        assert code == 0 and out == '{"member":true}\n'

    def test_separate(self):
        res = ok("separate", "--lambda", '{"0":2}', "--mu", '{"0":1,"1":1}')
        assert res["gap"] == "1"

    def test_decompose(self):
        code, out, _ = call("decompose", "--n", "2", "--k", "2")
        assert out == ('[{"partition":[2],"dimS":3,"dimM":1},'
                       '{"partition":[1,1],"dimS":1,"dimM":1}]\n')


class TestSubcommands:
    def test_orbit_eq(self):
        res = ok("orbit-eq", "--lambda", "[1,0,-1]", "--mu", '{"5":-1,"2":1}')
        assert res["equal"] is True

    def test_hull_weakstar_and_oracle(self):
        res = ok("hull", "--lambda", "[2,-1]", "--mu", '["1/2","-1/2"]', "--oracle")
        assert res == {"member": True, "oracle_agrees": True}
        res = ok("hull", "--mode", "norm", "--lambda", "[2,-1]", "--mu", '["1/2","-1/2"]',
                 "--oracle", "--ambient", "3")
        assert res == {"member": False, "oracle_agrees": True}

    def test_extremes(self):
        res = ok("extremes", "--lambda", "[1,-1]", "--oracle", "--ambient", "3")
        assert res["oracle_agrees"] and len(res["extremes"]) == 3
        res = ok("extremes", "--mode", "norm", "--lambda", "[2,1]", "--oracle")
        assert res["extremes"] == [{"0": 2, "1": 1}]

    def test_support(self):
        res = ok("support", "--lambda", "[2,-1]", "--x", '["1/2",0,-3]', "--oracle")
        assert res == {"value": "4", "oracle_agrees": True}

    def test_weights_of(self):
        res = ok("weights-of", "--lambda", "[2,1]", "--n", "3", "--oracle")
        assert sum(r["multiplicity"] for r in res) == 8
        assert {"weight": {"0": 1, "1": 1, "2": 1}, "multiplicity": 2} in res

    def test_momentum_check(self):
        half = json.dumps({"n": 2, "re": [["1/2", 0], [0, "1/2"]]})
        res = ok("momentum-check", "--lambda", "[1]", "--matrix", half, "--oracle")
        assert res == {"member": True, "coadjoint_orbit": False, "oracle_agrees": True}
        res = ok("momentum-check", "--mode", "norm", "--lambda", "[3,1,-2]",
                 "--matrix", DIAG_3_1_M2, "--oracle")
        assert res["member"] and res["coadjoint_orbit"]

    def test_triple(self):
        m = json.dumps({"n": 2, "re": [[1, 2], [3, 4]]})
        res = ok("triple", "--lambda", "[1,0]", "--matrix", m, "--oracle")
        assert res["lower"]["re"] == [["0", "0"], ["3", "0"]]
        assert res["upper"]["re"] == [["0", "2"], ["0", "0"]]

    def test_kaehler(self):
        z = json.dumps({"n": 2, "re": [[0, 1], [0, 0]], "im": [[0, 2], [0, 0]]})
        assert ok("kaehler", "--lambda", "[1,0]", "--matrix", z) == {"value": "10"}

    def test_sk(self):
        assert ok("sk", "--matrix", DIAG_3_1_M2, "--k", "3", "--oracle")["s_k"] == "4"
        assert ok("sk", "--matrix", DIAG_3_1_M2, "--k", "3", "--finite", "--oracle")["s_k"] == "2"
        golden = json.dumps({"n": 2, "re": [[1, 1], [1, 0]]})
        res = ok("sk", "--matrix", golden, "--k", "1", "--oracle")
        assert res["oracle_agrees"] and res["s_k"] == "CRootOf(x**2 - x - 1, 1)"


class TestExitCodes:
    @pytest.mark.parametrize("argv", [
        ["hull", "--lambda", "[1", "--mu", "[1]"],
        ["hull", "--lambda", "[1.5]", "--mu", "[1]"],
        ["hull", "--lambda", '["1/2"]', "--mu", "[1]"],
        ["nope"],
        ["sk", "--matrix", json.dumps({"n": 2, "re": [[0, 1], [2, 0]]}), "--k", "1"],
        ["separate", "--lambda", "[1,0]", "--mu", '{"3":1}'],
        ["hull", "--lambda", "[1,1,1]", "--mu", "[1]", "--oracle", "--ambient", "2"],
        ["weights-of", "--lambda", "[1,1,1]", "--n", "2"],
    ])
    def test_parse_errors(self, argv):
        code, out, err = call(*argv)
        assert code == 2 and out == "" and "error" in json.loads(err)

    def test_resource_limits(self, monkeypatch):
        assert call("decompose", "--n", "3", "--k", "7")[0] == 3
        assert call("hull", "--lambda", "[1]", "--mu", "[1]", "--oracle", "--ambient", "8")[0] == 3
        monkeypatch.setenv("SCHURWEYL_MAX_TENSOR_DIM", "8")
        assert call("decompose", "--n", "2", "--k", "4")[0] == 3
        assert call("decompose", "--n", "2", "--k", "3")[0] == 0

    def test_oracle_disagreement(self, monkeypatch):
        import schurweyl.majorization as maj
        monkeypatch.setattr(maj, "in_weakstar_hull", lambda mu, lam: False)
        code, out, err = call("hull", "--lambda", "[1]", "--mu", "[0]", "--oracle")
        assert code == 4
        assert json.loads(out) == {"member": False, "oracle": True}


def test_output_file(tmp_path):
    path = tmp_path / "res.json"
    code, out, _ = call("decompose", "--n", "2", "--k", "2", "--output", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())[0]["dimS"] == 3


def test_byte_identical_subprocess_runs():
    argv = [sys.executable, "-m", "schurweyl.cli", "extremes", "--lambda", "[2,1,-1]",
            "--seed", "7"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")


def test_oracle_never_changes_primary_answer():
    for mode in ("weakstar", "norm"):
        plain = ok("hull", "--mode", mode, "--lambda", "[2,-1]", "--mu", '["1","-1/3"]')
        checked = ok("hull", "--mode", mode, "--lambda", "[2,-1]", "--mu", '["1","-1/3"]', "--oracle")
        assert checked.pop("oracle_agrees") and checked == plain
