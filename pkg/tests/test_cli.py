"""CLI smoke tests for CayleyColor."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from cayleycolor.cli import app
from cayleycolor.config import settings

runner = CliRunner()


class TestCLIBasics:
    """Test basic CLI functionality."""

    def test_app_shows_help(self) -> None:
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        assert "Colorings of Cayley graphs" in result.output

    def test_version_flag(self) -> None:
        """Test --version flag shows version."""
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert "CayleyColor" in result.output

    def test_debug_option_in_help(self) -> None:
        result = runner.invoke(app, ["--help"])
        assert "--debug" in result.output
        assert "--log-file" in result.output


class TestBuild:
    """Test the build command."""

    def test_json_output(self) -> None:
        result = runner.invoke(
            app, ["build", "--family", "power-cycle", "--n", "8", "--k", "2", "--json"]
        )
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["graph"]["n"] == 8
        assert len(data["graph"]["edges"]) == 16
        assert data["manifest"]["command"] == "build"
        assert data["manifest"]["parameters"] == {"family": "power-cycle", "n": 8, "k": 2}

    def test_writes_graph_file(self, tmp_path: Path) -> None:
        out = tmp_path / "g.json"
        result = runner.invoke(
            app, ["build", "-f", "circulant", "--n", "6", "--connection", "1,5", "--out", str(out)]
        )
        assert result.exit_code == 0
        assert json.loads(out.read_text())["n"] == 6

    def test_missing_parameter_exits_1(self) -> None:
        result = runner.invoke(app, ["build", "--family", "power-cycle", "--n", "8"])
        assert result.exit_code == 1

    def test_bad_connection_exits_1(self) -> None:
        result = runner.invoke(app, ["build", "-f", "circulant", "--n", "6", "--connection", "1,a"])
        assert result.exit_code == 1

    def test_group_over_budget_exits_3(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setattr(settings, "max_group_degree", 4)
        result = runner.invoke(app, ["build", "-f", "sym", "--n", "5"])
        assert result.exit_code == 3

    def test_color_over_budget_exits_3(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setattr(settings, "max_group_degree", 5)
        result = runner.invoke(app, ["color", "thm1", "--n", "6"])
        assert result.exit_code == 3


class TestColorAndVerify:
    """Test color followed by verify on the written artifact."""

    def test_thm5_total_round_trip(self, out_dir: Path) -> None:
        result = runner.invoke(
            app,
            ["color", "thm5-total", "--n", "13", "--k", "5", "--out-dir", str(out_dir), "--json"],
        )
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["report"]["colors_used"] == 12
        assert data["notes"] == {"blocks": 2}

        artifact = out_dir / "thm5-total-k5-n13.csv"
        assert artifact.exists()
        assert (out_dir / "thm5-total-k5-n13.manifest.json").exists()

        result = runner.invoke(
            app,
            ["verify", "total", str(artifact), "-f", "power-cycle", "--n", "13", "--k", "5"],
        )
        assert result.exit_code == 0
        assert json.loads(result.stdout)["proper"] is True

    def test_improper_artifact_exits_2(self, tmp_path: Path) -> None:
        artifact = tmp_path / "v.json"
        artifact.write_text(json.dumps({"kind": "vertex", "colors": [1] * 8}))
        result = runner.invoke(
            app, ["verify", "vertex", str(artifact), "-f", "power-cycle", "--n", "8", "--k", "2"]
        )
        assert result.exit_code == 2
        assert json.loads(result.stdout)["proper"] is False

    def test_invalid_construction_parameters_exit_1(self, out_dir: Path) -> None:
        result = runner.invoke(
            app, ["color", "thm5-total", "--n", "14", "--k", "5", "--out-dir", str(out_dir)]
        )
        assert result.exit_code == 1

    def test_unknown_verify_kind(self, tmp_path: Path) -> None:
        result = runner.invoke(app, ["verify", "face", str(tmp_path / "x.json")])
        assert result.exit_code == 1


class TestOracle:
    """Test the oracle command."""

    def test_chi_of_power_of_cycle(self) -> None:
        result = runner.invoke(app, ["oracle", "chi", "-f", "power-cycle", "--n", "8", "--k", "2"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["value"] == 4
        assert data["status"] == "exact"

    def test_budget_exhaustion_exits_3(self) -> None:
        result = runner.invoke(
            app,
            ["oracle", "chi", "-f", "power-cycle", "--n", "13", "--k", "5", "--node-budget", "3"],
        )
        assert result.exit_code == 3
        assert json.loads(result.stdout)["value"] is None

    def test_unknown_parameter(self) -> None:
        result = runner.invoke(
            app, ["oracle", "omega", "-f", "power-cycle", "--n", "8", "--k", "2"]
        )
        assert result.exit_code == 1


class TestChecks:
    """Test iso, golden and gyro-table."""

    def test_iso(self) -> None:
        result = runner.invoke(app, ["iso", "--n", "8", "--s1", "1,7", "--s2", "3,5"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["multiplier"] == 3

    def test_iso_rejects_asymmetric_set(self) -> None:
        result = runner.invoke(app, ["iso", "--n", "8", "--s1", "1", "--s2", "3,5"])
        assert result.exit_code == 1

    def test_golden(self) -> None:
        result = runner.invoke(app, ["golden", "--json"])
        assert result.exit_code == 0
        assert all(entry["identical"] for entry in json.loads(result.stdout))

    def test_gyro_table_to_stdout(self) -> None:
        result = runner.invoke(app, ["gyro-table", "--m", "8"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0].startswith("# variant 198 m=8")

    def test_gyro_table_to_file(self, tmp_path: Path) -> None:
        out = tmp_path / "gyro.csv"
        result = runner.invoke(app, ["gyro-table", "--m", "8", "--out", str(out)])
        assert result.exit_code == 0
        assert out.read_text().startswith("# variant 198")

    def test_gyro_table_bad_order(self) -> None:
        result = runner.invoke(app, ["gyro-table", "--m", "6"])
        assert result.exit_code == 1
