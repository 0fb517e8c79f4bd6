import json

import pytest

from btlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInvariantsCommand:
    def test_json_document(self, capsys):
        code, out, _ = run(
            capsys,
            "invariants", "--c", "2", "--d", "2",
            "--perm", "(1 2 3 4)", "--max-level", "4", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert list(doc) == [
            "h", "c", "d", "perm", "orbits", "gamma", "c_exponent",
            "isomorphism_number", "specializing_height",
        ]
        assert doc["gamma"] == [3, 4, 4, 4]
        assert doc["c_exponent"] == [4, 16, 32, 48]
        assert doc["isomorphism_number"] == 2
        assert doc["specializing_height"] == 4
        assert doc["orbits"][0]["rep"] == [1, 1]
        assert doc["orbits"][1]["segments"] == [{"start": 4, "length": 3, "level": 1}]

    def test_byte_identical_runs(self, capsys):
        args = ("invariants", "--c", "2", "--d", "3", "--perm", "4,5,1,2,3",
                "--format", "json")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_table_format(self, capsys):
        code, out, _ = run(
            capsys, "invariants", "--c", "2", "--d", "2", "--perm", "(1 2 3 4)",
            "--max-level", "2",
        )
        assert code == 0
        assert "gamma" in out and "isomorphism_number   2" in out

    def test_p_annotation(self, capsys):
        code, out, _ = run(
            capsys, "invariants", "--c", "2", "--d", "2", "--perm", "(1 2 3 4)",
            "--max-level", "2", "--p", "5", "--format", "json",
        )
        doc = json.loads(out)
        assert doc["p"] == 5
        assert doc["components"] == ["5^4", "5^16"]

    def test_degree_mismatch_is_input_error(self, capsys):
        code, out, err = run(
            capsys, "invariants", "--c", "2", "--d", "2", "--perm", "1,2,3",
        )
        assert code == 2
        assert out == ""
        assert "error" in err

    def test_bad_permutation_is_input_error(self, capsys):
        code, _, err = run(
            capsys, "invariants", "--c", "1", "--d", "1", "--perm", "2,2",
        )
        assert code == 2
        assert "2" in err

    def test_out_file_matches_stdout(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "invariants", "--c", "1", "--d", "1", "--perm", "(1 2)",
            "--format", "json", "--out", str(path),
        )
        assert code == 0
        assert path.read_text(encoding="utf-8") == out


class TestOracleCommand:
    def test_pass_verdict(self, capsys):
        code, out, _ = run(
            capsys, "oracle", "--c", "2", "--d", "2", "--perm", "(1 2 3 4)",
            "--level", "3", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "pass"
        assert doc["oracle"]["dimension"] == 4
        assert doc["oracle"]["exponent"] == 32
        assert len(doc["oracle"]["per_orbit"]) == 4


class TestVerifyCommand:
    def test_sweep_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--samples", "50", "--max-h", "6",
            "--max-level", "3", "--seed", "7", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "pass"
        assert doc["failures"] == []

    def test_reproducible(self, capsys):
        args = ("verify", "--samples", "30", "--max-h", "5", "--seed", "3")
        _, a, _ = run(capsys, *args)
        _, b, _ = run(capsys, *args)
        assert a == b


class TestBt1Commands:
    def test_enumerate_lines_and_count(self, capsys):
        code, out, _ = run(capsys, "enumerate-bt1", "--c", "2", "--d", "2")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 7
        assert lines[-1] == "6"
        assert set(lines[:-1]) == {
            "FFVV", "FV+FV", "FFV+V", "FVV+F", "FV+F+V", "F+F+V+V"
        }

    def test_enumerate_json(self, capsys):
        code, out, _ = run(
            capsys, "enumerate-bt1", "--c", "1", "--d", "1", "--format", "json"
        )
        doc = json.loads(out)
        assert doc["count"] == 2
        assert set(doc["classes"]) == {"FV", "F+V"}

    def test_kraft_type(self, capsys):
        code, out, _ = run(
            capsys, "kraft-type", "--c", "2", "--d", "2", "--perm", "(1 2 3 4)",
        )
        assert code == 0
        assert out.strip() == "FFVV"


class TestWittCommands:
    def test_witt_polys_table_lines(self, capsys):
        code, out, _ = run(capsys, "witt-polys", "--p", "2", "--len", "2")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "S_0 = x_0 + y_0"
        assert lines[1] == "S_1 = x_1 + y_1 - x_0*y_0"
        assert "P_1 = 2*x_1*y_1 + x_0^2*y_1 + x_1*y_0^2" in lines

    def test_witt_polys_rejects_composite(self, capsys):
        code, _, err = run(capsys, "witt-polys", "--p", "6", "--len", "2")
        assert code == 2
        assert "prime" in err

    def test_witt_eval(self, capsys):
        code, out, _ = run(
            capsys, "witt-eval", "--p", "2", "--len", "3",
            "--lhs", "1,0,0", "--rhs", "1,0,0", "--format", "json",
        )
        doc = json.loads(out)
        assert doc["sum"] == [0, 1, 0]
        assert doc["product"] == [1, 0, 0]
        assert doc["neg_lhs"] == [1, 1, 1]

    def test_witt_eval_length_error(self, capsys):
        code, _, err = run(
            capsys, "witt-eval", "--p", "2", "--len", "3",
            "--lhs", "1,0", "--rhs", "1,0,0",
        )
        assert code == 2
        assert "--lhs" in err

    def test_witt_check_passes(self, capsys):
        code, out, _ = run(
            capsys, "witt-check", "--p", "3", "--len", "2",
            "--samples", "25", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "pass"
        assert doc["ring_table"] == "pass"


class TestArgumentErrors:
    def test_unknown_command_exits_two(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == 2

    def test_missing_required_flag_exits_two(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["invariants", "--c", "2"])
        assert err.value.code == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["invariants", "--c", "1", "--d", "1", "--perm", "(1 2)", "--max-level", "0"],
            ["oracle", "--c", "1", "--d", "1", "--perm", "(1 2)", "--level", "0"],
            ["verify", "--max-h", "1"],
            ["witt-polys", "--p", "2", "--len", "0"],
        ],
    )
    def test_bad_numeric_flags_exit_two(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2
        assert out == ""
        assert "must be" in err
