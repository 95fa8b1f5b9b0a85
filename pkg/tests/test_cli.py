import json

import pytest

from excalg import cli


def run_cli(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr().out
    return code, out


class TestClassifyForm:
    def test_w1_example(self, capsys):
        code, out = run_cli(
            capsys, "classify-form", "--n", "7", "--form", "e[1,2,5]+e[1,3,6]+e[1,4,7]"
        )
        assert code == 0
        data = json.loads(out)
        assert data["label"] == "W1"
        assert data["support_rank"] == 7 and data["q_rank"] == 1
        assert data["stab_dim"] == 28

    def test_parse_error_exit_two(self, capsys):
        code, _ = run_cli(capsys, "classify-form", "--form", "nonsense")
        assert code == 2

    def test_deterministic_output(self, capsys):
        args = ("classify-form", "--n", "7", "--form", "e[1,2,3]+e[4,5,6]")
        _, first = run_cli(capsys, *args)
        _, second = run_cli(capsys, *args)
        assert first == second


class TestTables:
    def test_mul_table_octonions(self, capsys):
        code, out = run_cli(capsys, "mul-table", "--algebra", "O")
        data = json.loads(out)
        assert code == 0 and data["dim"] == 8
        # e1 * e2 = e3
        assert data["table"][1][2][3] == "1/1"

    def test_mul_table_sextonion(self, capsys):
        code, out = run_cli(capsys, "mul-table", "--algebra", "sextonion")
        assert code == 0 and json.loads(out)["dim"] == 6

    def test_magic_square_table(self, capsys):
        code, out = run_cli(capsys, "--format", "text", "magic-square", "--table")
        assert code == 0
        assert out.strip().endswith("e8(248)")


class TestDerive:
    def test_octonions(self, capsys):
        code, out = run_cli(capsys, "derive", "--algebra", "O")
        assert code == 0 and json.loads(out)["derivation_dim"] == 14


class TestVerifyFile:
    def test_roundtrip(self, capsys, tmp_path):
        code, out = run_cli(capsys, "derive", "--algebra", "H", "--constants")
        constants = json.loads(out)["structure_constants"]
        path = tmp_path / "derH.json"
        path.write_text(json.dumps(constants))
        code, out = run_cli(capsys, "verify", str(path), "--mode", "full")
        assert code == 0 and json.loads(out)["passed"]

    def test_corrupted_fails(self, capsys, tmp_path):
        code, out = run_cli(capsys, "derive", "--algebra", "O", "--constants")
        constants = json.loads(out)["structure_constants"]
        entry = constants["entries"][5]
        i, j, coeffs = entry
        k = next(k for k, c in enumerate(coeffs) if c != "0/1")
        coeffs[k] = "17/1"
        for other in constants["entries"]:
            if other[0] == j and other[1] == i:
                other[2][k] = "-17/1"
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(constants))
        code, out = run_cli(capsys, "verify", str(path), "--mode", "full")
        assert code == 1
        assert not json.loads(out)["passed"]


class TestGradingAndDims:
    def test_grading(self, capsys):
        code, out = run_cli(capsys, "grading", "--type", "E8", "--node", "1", "--affine")
        data = json.loads(out)
        assert code == 0 and data["dims"] == {"0": 120, "1": 128}

    def test_dims(self, capsys):
        code, out = run_cli(capsys, "dims", "--a", "8")
        assert code == 0 and json.loads(out)["dim_V4"] == 248


class TestJordanAndSpinor:
    def test_jordan_det(self, capsys):
        payload = json.dumps({"a": 0, "diag": ["2/1", "3/1", "5/1"], "off": []})
        code, out = run_cli(capsys, "jordan", "--a", "0", "det", "--input", payload)
        assert code == 0 and json.loads(out)["det"] == "30/1"

    def test_jordan_ch(self, capsys):
        payload = json.dumps(
            {
                "a": 1,
                "diag": ["1/1", "2/1", "3/1"],
                "off": [["1/1"], ["1/2"], ["-1/1"]],
            }
        )
        code, out = run_cli(capsys, "jordan", "--a", "1", "ch-check", "--input", payload)
        assert code == 0 and json.loads(out)["cayley_hamilton"]

    def test_spinor(self, capsys):
        code, out = run_cli(
            capsys, "spinor", "--omega-chi", "--chi", "1,0,0,0,0,0,0,1"
        )
        data = json.loads(out)
        assert code == 0 and data["label"]["label"] == "W5"
