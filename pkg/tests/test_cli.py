import contextlib
import io
import json
import logging
import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from bloch_lab.cli import EXIT_ERROR, EXIT_OK, EXIT_VIOLATION, main
from bloch_lab.exceptions import DiskDomainError

logger = logging.getLogger(__name__)

FAST_GRID = ["--grid-radial", "16", "--grid-angular", "32"]


def invoke(*argv: str) -> tuple[int, str, str]:
    stdout, stderr = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(
        stderr
    ):
        code = main(list(argv))
    logger.info(f"bloch-lab {' '.join(argv)} -> {code}")
    return code, stdout.getvalue(), stderr.getvalue()


class ConstantsCommandTestCase(unittest.TestCase):
    def test_constants(self) -> None:
        code, out, _ = invoke("constants")
        assert code == EXIT_OK
        data = json.loads(out)
        assert 2.6915 <= data["c1"] <= 2.6925
        assert abs(data["c2"] - 5.7174) < 2e-3
        assert abs(data["c3"] - 3.6920) < 2e-3
        assert data["theorem_a_constant"] == 3.31
        assert out.endswith("}\n")
        assert not out.endswith("\n\n")

    def test_csv_is_rejected(self) -> None:
        code, out, err = invoke("constants", "--format", "csv")
        assert code == EXIT_ERROR
        assert out == ""
        assert "csv" in err

    def test_unknown_subcommand(self) -> None:
        code, _, _ = invoke("prove")
        assert code == EXIT_ERROR

    def test_help(self) -> None:
        code, out, _ = invoke("--help")
        assert code == EXIT_OK
        assert "bloch-lab" in out


class SeminormCommandTestCase(unittest.TestCase):
    def test_log_fixture(self) -> None:
        code, out, _ = invoke("seminorm", "--map", "log_fixture")
        assert code == EXIT_OK
        data = json.loads(out)
        assert 1.999 <= data["value"] <= 2.0 + 1e-6
        assert data["map"]["h"] == "log_fixture"
        assert data["quasiregularity_constant"] is None
        assert len(data["argmax"]) == 2

    def test_map_file(self) -> None:
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "affine.json"
            path.write_text(json.dumps({"h": [[0, 0], [1, 0]], "g": [0, 0.5]}))
            code, out, _ = invoke("seminorm", "--map", str(path))
        assert code == EXIT_OK
        data = json.loads(out)
        assert abs(data["value"] - 1.5) < 1e-9
        assert abs(data["bloch_type"]["value"] - 0.75**0.5) < 1e-9
        assert abs(data["quasiregularity_constant"] - 3.0) < 1e-9
        assert abs(data["dilatation_sup"] - 0.5) < 1e-12

    def test_malformed_map(self) -> None:
        """Test that a malformed map file exits with status 1."""
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "bad.json"
            path.write_text("{bad")
            code, out, err = invoke("seminorm", "--map", str(path))
        assert code == EXIT_ERROR
        assert out == ""
        assert "not valid JSON" in err

    def test_missing_map(self) -> None:
        code, _, err = invoke("seminorm", "--map", "/nonexistent/map.json")
        assert code == EXIT_ERROR
        assert "cannot read" in err


class VerifyCommandTestCase(unittest.TestCase):
    def test_theorem1(self) -> None:
        code, out, _ = invoke(
            "verify", "--kind", "theorem1", "--trials", "10", "--seed", "7"
        )
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["campaign_name"] == "theorem1"
        assert data["n_trials"] == 10
        assert data["max_quotient"] <= 1.0
        assert data["violations"] == []
        assert "runtime_ms" not in data

    def test_deterministic_output(self) -> None:
        """Test that stdout is byte-identical across thread counts."""
        args = ["verify", "--trials", "8", "--seed", "3", *FAST_GRID]
        _, single, _ = invoke(*args, "--threads", "1")
        _, pooled, _ = invoke(*args, "--threads", "4")
        assert single == pooled

    def test_timing(self) -> None:
        code, out, _ = invoke(
            "verify", "--trials", "2", "--timing", *FAST_GRID
        )
        assert code == EXIT_OK
        assert json.loads(out)["runtime_ms"] >= 0.0

    def test_violation_exit_code(self) -> None:
        code, out, _ = invoke(
            "verify", "--trials", "3", "--bound-scale", "1e-9", *FAST_GRID
        )
        assert code == EXIT_VIOLATION
        assert len(json.loads(out)["violations"]) == 3

    def test_csv(self) -> None:
        code, out, _ = invoke(
            "verify", "--trials", "4", "--format", "csv", *FAST_GRID
        )
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "trial_id,rho,quotient,bound,violated"
        assert len(lines) == 5

    def test_output_file(self) -> None:
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "report.json"
            code, out, _ = invoke(
                "verify", "--trials", "2", "--output", str(path), *FAST_GRID
            )
            assert code == EXIT_OK
            assert out == ""
            assert json.loads(path.read_text())["n_trials"] == 2

    def test_unwritable_output(self) -> None:
        code, _, _ = invoke(
            "constants", "--output", "/nonexistent/dir/constants.json"
        )
        assert code == EXIT_ERROR

    def test_bad_values(self) -> None:
        for argv in (
            ("verify", "--trials", "0"),
            ("verify", "--kind", "lemma99"),
            ("verify", "--k", "1.5"),
            ("verify", "--threads", "-2"),
            ("verify", "--trials", "ten"),
        ):
            code, _, _ = invoke(*argv)
            assert code == EXIT_ERROR, argv

    def test_threads_from_environment(self) -> None:
        with mock.patch.dict(os.environ, {"BLOCH_LAB_THREADS": "many"}):
            code, _, err = invoke("verify", "--trials", "1", *FAST_GRID)
        assert code == EXIT_ERROR
        assert "BLOCH_LAB_THREADS" in err
        with mock.patch.dict(os.environ, {"BLOCH_LAB_THREADS": "2"}):
            code, _, _ = invoke("verify", "--trials", "2", *FAST_GRID)
        assert code == EXIT_OK

    def test_quasiregular_kind(self) -> None:
        code, out, _ = invoke(
            "verify", "--kind", "theorem2", "--trials", "3", "--k", "0.5"
        )
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["violations"] == []
        assert data["argmax_trial"]["violated"] is False

    def test_every_trial_failing(self) -> None:
        """Test that a campaign without a single record is an error."""
        failure = DiskDomainError("z and w coincide")
        with mock.patch("bloch_lab.verify.run_trial", side_effect=failure):
            code, out, err = invoke(
                "verify", "--trials", "3", "--threads", "1", *FAST_GRID
            )
        assert code == EXIT_ERROR
        assert "all 3 trials failed" in err
        data = json.loads(out)
        assert data["argmax_trial"] is None
        assert len(data["errors"]) == 3


class SharpnessCommandTestCase(unittest.TestCase):
    def test_sharpness(self) -> None:
        code, out, _ = invoke("sharpness", "--trials", "100", "--seed", "1")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["campaign_name"] == "sharpness_theorem1"
        assert data["max_quotient"] <= 1.0

    def test_analytic_kind(self) -> None:
        code, out, _ = invoke(
            "sharpness", "--kind", "theorem_a", "--trials", "100"
        )
        assert code == EXIT_OK
        assert json.loads(out)["campaign_name"].endswith("_analytic")

    def test_quasiregular_kind(self) -> None:
        code, out, _ = invoke(
            "sharpness", "--kind", "theorem2", "--trials", "100"
        )
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["campaign_name"] == "sharpness_theorem2"
        assert data["argmax_trial"]["violated"] is False

    def test_unsupported_kind(self) -> None:
        code, _, err = invoke("sharpness", "--kind", "lemma22")
        assert code == EXIT_ERROR
        assert "sharpness supports" in err


class WitnessCommandTestCase(unittest.TestCase):
    def test_witness(self) -> None:
        code, out, _ = invoke("witness")
        assert code == EXIT_OK
        rows = json.loads(out)
        assert [row["x"] for row in rows] == [0.9, 0.99, 0.999]
        for row in rows:
            assert row["quotient"] >= 0.9 * row["reference"]
