"""Tests for the command-line interface."""

from __future__ import annotations

import io
import json
import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

import pytest

from radar_ambiguity import matrix_kron
from radar_ambiguity.cli import main
from radar_ambiguity.const import CSV_HEADER, EXIT_FALSE, EXIT_TRUE, EXIT_USAGE
from radar_ambiguity.lambda_sets import is_B3
from radar_ambiguity.models import Signal, SupportSet

from .conftest import fixture_path

WORKED_A_JSON = fixture_path("worked_a.json")
WORKED_B_JSON = fixture_path("worked_b.json")

WriteDoc = Callable[[str, Any], str]


def run_json(
    capsys: pytest.CaptureFixture[str], argv: list[str]
) -> tuple[int, Any]:
    """Run the CLI and parse its JSON output."""
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


class TestPartnerCommands:
    """Tests for the partner decision commands."""

    def test_partner_check(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the worked pair are partners."""
        code, out = run_json(capsys, ["partner-check", WORKED_A_JSON, WORKED_B_JSON])
        assert code == EXIT_TRUE
        assert out == {"partner": True, "first_difference": None}

    def test_partner_check_difference(
        self, capsys: pytest.CaptureFixture[str], write_doc: WriteDoc
    ) -> None:
        """Test the first differing shift and lag are reported."""
        a = write_doc("a.json", {"coeffs": [1, 2]})
        b = write_doc("b.json", {"coeffs": [1, 3]})
        code, out = run_json(capsys, ["partner-check", a, b])
        assert code == EXIT_FALSE
        assert out == {"partner": False, "first_difference": [0, -1]}

    def test_trivial_check(
        self, capsys: pytest.CaptureFixture[str], write_doc: WriteDoc
    ) -> None:
        """Test a reversal has a reflected witness and the worked pair has none."""
        code, out = run_json(capsys, ["trivial-check", WORKED_A_JSON, WORKED_B_JSON])
        assert code == EXIT_FALSE
        assert out == {"witness": "none"}
        reversed_a = write_doc("rev.json", {"coeffs": [4, 2, 0, 2, 1]})
        code, out = run_json(capsys, ["trivial-check", WORKED_A_JSON, reversed_a])
        assert code == EXIT_TRUE
        assert out["witness"]["reflected"] is True
        assert out["witness"]["l"] == -4

    def test_restricted_check(
        self, capsys: pytest.CaptureFixture[str], write_doc: WriteDoc
    ) -> None:
        """Test the unit factors of a Sidon multiplier image."""
        b = write_doc("b.json", {"coeffs": [1, 1, 0, ["3/5", "4/5"]]})
        code, out = run_json(
            capsys, ["restricted-check", fixture_path("sidon_signal.json"), b]
        )
        assert code == EXIT_TRUE
        assert out["etas"][2] == ["3/5", "-4/5"]

    def test_float_literal_switches_mode(
        self, capsys: pytest.CaptureFixture[str], caplog: pytest.LogCaptureFixture
    ) -> None:
        """Test a float literal moves the run to float mode."""
        argv = ["partner-check", fixture_path("worked_a_float.json"), WORKED_B_JSON]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert out["partner"] is True
        assert "switching to float mode" in caplog.text

    def test_stdin(
        self, capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Test "-" reads the first signal from stdin."""
        monkeypatch.setattr("sys.stdin", io.StringIO('{"coeffs": [2, 4, 0, 1, 2]}'))
        code, _ = run_json(capsys, ["partner-check", "-", WORKED_A_JSON])
        assert code == EXIT_TRUE

    def test_output_file(self, tmp_path: Path) -> None:
        """Test -o writes the JSON payload to a file."""
        target = tmp_path / "out.json"
        argv = ["partner-check", WORKED_A_JSON, WORKED_B_JSON, "-o", str(target)]
        assert main(argv) == EXIT_TRUE
        assert json.loads(target.read_text())["partner"] is True


class TestMultiplierCommands:
    """Tests for the multiplier commands."""

    def test_check(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the Sidon multiplier satisfies the condition."""
        argv = ["multiplier", "check", fixture_path("sidon_multiplier.json")]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert out == {"condition": True}

    def test_apply(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the image is a partner but not a trivial one."""
        argv = [
            "multiplier",
            "apply",
            fixture_path("sidon_multiplier.json"),
            fixture_path("sidon_signal.json"),
        ]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert out["partner"] is True
        assert out["trivial"] is False
        assert out["condition"] is True

    def test_apply_support_mismatch(
        self, caplog: pytest.LogCaptureFixture, write_doc: WriteDoc
    ) -> None:
        """Test a signal outside the support is an input error."""
        a = write_doc("a.json", {"coeffs": [1, 1, 1]})
        argv = ["multiplier", "apply", fixture_path("sidon_multiplier.json"), a]
        assert main(argv) == EXIT_USAGE
        assert "SupportMismatch" in caplog.text

    def test_dense(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the dense family for two units."""
        argv = ["multiplier", "dense", "--n", "2", "--inner", "tan:1/2"]
        argv += ["--outer", "@0.3"]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert out["condition"] is True
        assert out["multiplier"]["support"] == [-2, -1, 0, 1, 2, 7]


class TestBSetCommands:
    """Tests for the B_k set commands."""

    def test_test(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test B3 holds for {0,1,5} and B2 fails for {0,1,2}."""
        code, out = run_json(capsys, ["bset", "test", "--order", "3", "0,1,5"])
        assert code == EXIT_TRUE
        assert out == {"order": 3, "holds": True}
        code, out = run_json(capsys, ["bset", "test", "0,1,2"])
        assert code == EXIT_FALSE
        assert out == {"order": 2, "holds": False}

    @pytest.mark.parametrize(
        ("other", "witness"),
        [
            ("{-3,-2,2}", {"orientation": "direct", "m": 3}),
            ("2,6,7", {"orientation": "reflected", "m": 7}),
        ],
    )
    def test_recover(
        self, capsys: pytest.CaptureFixture[str], other: str, witness: dict
    ) -> None:
        """Test direct and reflected witnesses."""
        code, out = run_json(capsys, ["bset", "recover", "0,1,5", other])
        assert code == EXIT_TRUE
        assert out == {"witness": witness}

    def test_recover_hypothesis(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test a non-B3 base is an input error."""
        assert main(["bset", "recover", "0,1,2", "0,1,2"]) == EXIT_USAGE
        assert "HypothesisViolated" in caplog.text

    def test_random(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the seed gives a repeatable B3 set from either position."""
        argv = ["bset", "random", "--size", "4", "--bound", "50"]
        code, first = run_json(capsys, [*argv, "--seed", "3"])
        assert code == EXIT_TRUE
        _, second = run_json(capsys, ["--seed", "3", *argv])
        assert first == second
        assert len(first["set"]) == 4
        assert is_B3(SupportSet.of(first["set"]))


class TestMatrixAndStrangeCommands:
    """Tests for matrices and strange-partner constructions."""

    def test_matrix_build(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test K_a of the first worked signal."""
        code, out = run_json(capsys, ["matrix", "build", WORKED_A_JSON])
        assert code == EXIT_TRUE
        assert out["degree"] == 4
        assert len(out["entries"]) == 16

    def test_gram_check(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the worked pair has equal Gram matrices."""
        argv = ["matrix", "gram-check", WORKED_A_JSON, WORKED_B_JSON]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert out == {"gram_equal": True}

    def test_kron(
        self, capsys: pytest.CaptureFixture[str], write_doc: WriteDoc
    ) -> None:
        """Test both strides."""
        a = write_doc("a.json", {"coeffs": [1, 2]})
        code, out = run_json(capsys, ["strange", "kron", a, a])
        assert code == EXIT_TRUE
        assert Signal.from_dict(out) == Signal.of(1, 2, 0, 2, 4)
        _, out = run_json(capsys, ["strange", "kron", a, a, "--tight"])
        assert Signal.from_dict(out) == Signal.of(1, 2, 2, 4)

    def test_interleave(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test interleaving gives strange partners."""
        argv = ["strange", "interleave", "--alpha", "1,2", "--lambda", "2"]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert (out["partner"], out["trivial"]) == (True, False)

    def test_iterate(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test a swap flip of (1+2z)(1+2z^3)."""
        argv = ["strange", "iterate", "--factors", "1:2,1:2", "--flips", "1:swap"]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert Signal.from_dict(out["b"]) == Signal.of(2, 4, 0, 1, 2)

    @pytest.mark.parametrize("mode", ["exact", "float"])
    def test_epsilon(self, capsys: pytest.CaptureFixture[str], mode: str) -> None:
        """Test the epsilon pair in both modes."""
        argv = ["--mode", mode, "strange", "epsilon", "--eps", "1/2"]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert (out["partner"], out["trivial"]) == (True, False)

    def test_padded(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the padded pair and the N >= 1 requirement."""
        code, out = run_json(capsys, ["strange", "padded", "--n", "2"])
        assert code == EXIT_TRUE
        assert len(out["a"]["coeffs"]) == 7
        assert main(["strange", "padded", "--n", "0"]) == EXIT_USAGE

    def test_search(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test a seeded search near the partner certifies it."""
        argv = [
            "strange",
            "search",
            WORKED_A_JSON,
            "--restarts",
            "4",
            "--start",
            WORKED_B_JSON,
            "--tol",
            "1e-8",
            "--seed",
            "3",
            "--workers",
            "2",
        ]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert out["restarts"] == 4
        assert out["certified"] >= 1


class TestHermiteCommands:
    """Tests for the Hermite commands."""

    def test_ambpoly(
        self, capsys: pytest.CaptureFixture[str], write_doc: WriteDoc
    ) -> None:
        """Test A_Z = zw + 1."""
        p = write_doc("p.json", {"coeffs": [0, 1]})
        code, out = run_json(capsys, ["hermite", "ambpoly", p])
        assert code == EXIT_TRUE
        assert out == {"grid": [[["1", "0"], ["0", "0"]], [["0", "0"], ["1", "0"]]]}

    def test_partner_scan(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the cubic scan returns P and P^v."""
        argv = ["hermite", "partner-scan", fixture_path("poly_generic.json")]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert [p["coeffs"][0] for p in out["partners"]] == [["-8", "0"], ["8", "0"]]

    def test_partner_scan_needs_generic(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test a double root is refused."""
        argv = ["hermite", "partner-scan", fixture_path("poly_double_root.json")]
        assert main(argv) == EXIT_USAGE
        assert "GenericityRequired" in caplog.text

    def test_generic_check(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test genericity exit codes."""
        argv = ["hermite", "generic-check", fixture_path("poly_generic.json")]
        assert run_json(capsys, argv) == (EXIT_TRUE, {"generic": True})
        argv = ["hermite", "generic-check", fixture_path("poly_double_root.json")]
        assert run_json(capsys, argv) == (EXIT_FALSE, {"generic": False})

    def test_laguerre_verify(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the closed form on a small grid."""
        argv = ["hermite", "laguerre-verify", "--jmax", "2", "--grid", "2x2"]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert out["grid"] == [2, 2]
        assert out["max_error"] <= out["tol"]

    def test_signal_check(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test H_0 + 2H_1 + H_2 and H_0 - 2H_1 + H_2 are partners."""
        argv = [
            "hermite",
            "signal-check",
            fixture_path("hermite_p.json"),
            fixture_path("hermite_q.json"),
        ]
        assert run_json(capsys, argv) == (EXIT_TRUE, {"partner": True})


class TestPulseCommands:
    """Tests for the pulse commands."""

    def test_grid_stdout(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the CSV table on stdout."""
        argv = [
            "pulse",
            "grid",
            fixture_path("pulse_worked.json"),
            "--xrange",
            "0",
            "--yrange=-1:1:1",
        ]
        assert main(argv) == EXIT_TRUE
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 4
        assert float(lines[2].split(",")[2]) == pytest.approx(25 / 3)

    def test_grid_file(self, tmp_path: Path) -> None:
        """Test -o writes the CSV table to a file."""
        target = tmp_path / "grid.csv"
        argv = [
            "pulse",
            "grid",
            WORKED_A_JSON,
            "--eta",
            "1/4",
            "--xrange",
            "0:1:0.5",
            "--yrange",
            "0",
            "-o",
            str(target),
        ]
        assert main(argv) == EXIT_TRUE
        assert len(target.read_text().splitlines()) == 4

    def test_verify(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the closed form agrees with quadrature."""
        argv = ["pulse", "verify", WORKED_A_JSON, "--eta", "1/3", "--samples", "5"]
        code, out = run_json(capsys, argv)
        assert code == EXIT_TRUE
        assert out["passed"] is True
        assert out["flags"] == []

    @pytest.mark.parametrize("extra", [[], ["--eta", "0.6"]])
    def test_verify_width_errors(
        self, caplog: pytest.LogCaptureFixture, extra: list[str]
    ) -> None:
        """Test a missing or too wide pulse width is an input error."""
        assert main(["pulse", "verify", WORKED_A_JSON, *extra]) == EXIT_USAGE
        assert "ERROR" in caplog.text


class TestSelfTest:
    """Tests for the selftest command."""

    def test_table(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test every check passes."""
        assert main(["selftest"]) == EXIT_TRUE
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert "PASS  worked_pair_partners" in out

    def test_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test the JSON report."""
        code, out = run_json(capsys, ["selftest", "--json"])
        assert code == EXIT_TRUE
        assert all(r["passed"] for r in out["results"])

    def test_broken_construction_is_named(
        self,
        capsys: pytest.CaptureFixture[str],
        caplog: pytest.LogCaptureFixture,
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        """Test a broken Kronecker product fails its named rows."""
        monkeypatch.setattr(
            matrix_kron, "kron_signal", lambda *args, **kw: Signal.of(1)
        )
        assert main(["selftest"]) == EXIT_FALSE
        out = capsys.readouterr().out
        assert "FAIL  kron_worked_example" in out
        assert "PASS  worked_pair_partners" in out
        assert "Self test kron_worked_example failed" in caplog.text


class TestUsage:
    """Tests for usage errors and exit codes."""

    def test_help(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test --help exits with success."""
        assert main(["--help"]) == EXIT_TRUE
        assert "partner-check" in capsys.readouterr().out

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["bset", "test"],
            ["--mode", "fuzzy", "selftest"],
            ["strange", "padded", "--n", "x"],
        ],
    )
    def test_usage_errors(self, argv: list[str]) -> None:
        """Test argparse errors map to the usage code."""
        assert main(argv) == EXIT_USAGE

    def test_invalid_tolerance(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test a zero tolerance is refused."""
        assert main(["--tol", "0", "bset", "test", "0,1"]) == EXIT_USAGE
        assert "Invalid input" in caplog.text

    def test_malformed_document(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test JSON syntax errors are input errors with a position."""
        argv = ["partner-check", fixture_path("malformed.json"), WORKED_B_JSON]
        assert main(argv) == EXIT_USAGE
        assert "malformed.json:2:" in caplog.text

    def test_verbose_logs_debug(
        self, capsys: pytest.CaptureFixture[str], caplog: pytest.LogCaptureFixture
    ) -> None:
        """Test -v after the command is accepted."""
        caplog.set_level(logging.DEBUG)
        a, b = fixture_path("poly_generic.json"), fixture_path("worked_a.json")
        assert main(["partner-check", a, b, "-v"]) == EXIT_FALSE
        assert "Degrees differ" in caplog.text
