"""End-to-end tests of the command line through main()."""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path

import pytest

from paw_entanglement import pawclock
from paw_entanglement.entanglement import ProbPair

RunCli = Callable[..., tuple[int, str, str]]


class TestDatasets:
    def test_speed_to_stdout(self, run_cli: RunCli) -> None:
        code, out, _ = run_cli("speed", "--distance", "1", "--grid-points", "3")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "distance,alpha_sq,S_A,S2_A,tau"
        assert len(lines) == 4
        assert "\r" not in out

    def test_out_file(self, run_cli: RunCli, tmp_path: Path) -> None:
        target = tmp_path / "fig3.csv"
        code, out, _ = run_cli(
            "continuous", "--time", "pi/2", "--grid-points", "3", "--out", str(target)
        )
        assert code == 0
        assert out == ""
        text = target.read_bytes().decode("utf-8")
        assert text.startswith("time,alpha_sq,S_A,E_TS,S2_A,E2_TS\n")
        assert text.count("\n") == 4

    def test_converge_noninteracting(self, run_cli: RunCli) -> None:
        code, out, _ = run_cli(
            "converge", "--scenario", "noninteracting", "--theta", "pi",
            "--alpha-sq", "0.5", "--n-grid", "2,8,64",
        )
        assert code == 0
        first_column = [line.split(",")[0] for line in out.splitlines()]
        assert first_column == ["N", "2", "8", "64"]

    def test_config_file_overridden_by_flag(
        self, run_cli: RunCli, tmp_path: Path
    ) -> None:
        config = tmp_path / "run.toml"
        config.write_text('grid_points = 3\ntime = ["pi/2"]\n')
        code, out, _ = run_cli("qubit-clock", "--config", str(config))
        assert code == 0
        assert len(out.splitlines()) == 4
        code, out, _ = run_cli(
            "qubit-clock", "--config", str(config), "--grid-points", "5"
        )
        assert len(out.splitlines()) == 6

    def test_speed_omission_warning_on_stderr(self, run_cli: RunCli) -> None:
        code, out, err = run_cli("speed", "--distance", "0", "--grid-points", "5")
        assert code == 0
        assert "omitted 4 unreachable" in err
        assert "omitted" not in out

    def test_quiet_suppresses_warnings(self, run_cli: RunCli) -> None:
        _, _, err = run_cli("speed", "--distance", "0", "--grid-points", "5", "--quiet")
        assert err == ""


class TestValidationErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ("speed", "--distance", "1.5"),
            ("speed", "--grid-points", "1"),
            ("continuous", "--time", "-1"),
            ("converge", "--n-grid", "8,4"),
            ("fidelity-sweep", "--alpha-sq", "two"),
            ("plot",),
            ("converge", "--scenario", "sideways"),
            ("verify", "--seed", "-1"),
            ("continuous", "--time", "1e308", "--grid-points", "3"),
            ("compare", "--time", "1e300", "--coupling", "1e10"),
        ],
    )
    def test_exit_code_1(self, run_cli: RunCli, argv: tuple[str, ...]) -> None:
        code, out, err = run_cli(*argv)
        assert code == 1
        assert out == ""
        assert "error:" in err

    def test_unknown_config_key(self, run_cli: RunCli, tmp_path: Path) -> None:
        config = tmp_path / "run.toml"
        config.write_text("colour = 1\n")
        code, _, err = run_cli("speed", "--config", str(config))
        assert code == 1
        assert "unknown config key" in err

    def test_string_boolean_in_config(self, run_cli: RunCli, tmp_path: Path) -> None:
        config = tmp_path / "run.toml"
        config.write_text('interacting = "false"\n')
        code, out, err = run_cli("fidelity-sweep", "--config", str(config))
        assert code == 1
        assert out == ""
        assert "bad value for 'interacting'" in err


class TestVerify:
    def test_default_seed_passes(self, run_cli: RunCli) -> None:
        code, out, _ = run_cli("verify")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "verify seed=1729"
        assert lines[-1].startswith("RESULT PASS")
        assert all("max_error=" in line for line in lines[1:-1] if "inputs" not in line)

    def test_same_seed_identical_report(self, run_cli: RunCli) -> None:
        _, first, _ = run_cli("verify", "--seed", "5")
        _, second, _ = run_cli("verify", "--seed", "5")
        assert first == second

    def test_corrupted_formula_exit_2(
        self, run_cli: RunCli, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setattr(
            pawclock,
            "interacting_probs_discrete",
            lambda phi, n: ProbPair.from_values(1.0, 0.0),
        )
        code, out, err = run_cli("verify")
        assert code == 2
        assert "FAIL pawclock" in out
        assert "inputs: phi=" in out
        assert "RESULT FAIL" in out
        assert "oracle checks failed" in err
