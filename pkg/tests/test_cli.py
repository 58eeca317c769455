"""Tests for the command-line interface."""

import json

import pytest
from click.testing import CliRunner

from helixlab import __version__
from helixlab.cli import build_config, cli, parse_direction
from helixlab.utils.exceptions import ConfigurationError


@pytest.fixture
def runner() -> CliRunner:
    """Click test runner."""
    return CliRunner()


class TestHelpers:
    """Test option parsing helpers."""

    def test_parse_direction(self):
        """Test comma-separated vectors."""
        assert parse_direction("0, 0,1") == [0.0, 0.0, 1.0]
        assert parse_direction(None) is None
        with pytest.raises(ConfigurationError):
            parse_direction("up")

    def test_build_config_seed_override(self, test_settings):
        """Test that a configured seed wins over --seed."""
        settings = test_settings.model_copy(update={"seed": 42})
        config = build_config("sol", settings, seed=7, samples=None)
        assert config.seed == 42
        assert config.samples == 100

    def test_build_config_errors(self, test_settings):
        """Test that invalid options become configuration errors."""
        with pytest.raises(ConfigurationError):
            build_config("offsets", test_settings, t_grid="0:1:3")
        with pytest.raises(ConfigurationError):
            build_config("analyze", test_settings, direction="0,0,0")


class TestCommands:
    """Test the commands end to end."""

    def test_version(self, runner):
        """Test --version."""
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_help_lists_commands(self, runner):
        """Test the top-level help."""
        result = runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for command in ("analyze", "offsets", "lemma-la", "sol", "project", "suite"):
            assert command in result.output

    def test_sol_json(self, runner):
        """Test a passing command with JSON output."""
        result = runner.invoke(cli, ["sol", "--samples", "5", "--json"])
        assert result.exit_code == 0, result.output
        data = json.loads(result.stdout)
        assert data["passed"] is True
        assert data["command"] == "sol"
        assert all(record["pass"] for record in data["records"])
        ricci_zz = next(record for record in data["records"] if record["name"] == "ricci_zz")
        assert ricci_zz["rhs"] == -2.0

    def test_sol_table(self, runner):
        """Test the table output."""
        result = runner.invoke(cli, ["sol", "--samples", "5"])
        assert result.exit_code == 0
        assert "PASSED" in result.output

    def test_out_file(self, runner, tmp_path):
        """Test that the report is written to --out."""
        out = tmp_path / "reports" / "sol.json"
        result = runner.invoke(cli, ["sol", "--samples", "5", "--out", str(out)])
        assert result.exit_code == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["config"]["out"] == str(out)
        assert data["summary"]["failed"] == 0

    def test_unknown_chart(self, runner):
        """Test exit status 2 for an unknown chart."""
        result = runner.invoke(cli, ["analyze", "--chart", "klein_bottle"])
        assert result.exit_code == 2

    def test_bad_t_grid(self, runner):
        """Test exit status 2 for a grid with too few values."""
        result = runner.invoke(cli, ["offsets", "--t-grid", "0:1:3"])
        assert result.exit_code == 2

    def test_env_seed_overrides_option(self, runner, monkeypatch):
        """Test HELIXLAB_SEED."""
        monkeypatch.setenv("HELIXLAB_SEED", "9")
        result = runner.invoke(cli, ["sol", "--samples", "3", "--seed", "1", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["config"]["seed"] == 9

    def test_bad_environment(self, runner, monkeypatch):
        """Test exit status 2 for invalid settings."""
        monkeypatch.setenv("HELIXLAB_ERROR_HANDLING", "sometimes")
        result = runner.invoke(cli, ["sol"])
        assert result.exit_code == 2

    def test_lemma_options(self, runner):
        """Test the trace identity command options."""
        result = runner.invoke(cli, ["lemma-la", "--trials", "10", "--max-k", "2", "--json"])
        assert result.exit_code in (0, 1)
        config = json.loads(result.stdout)["config"]
        assert config["trials"] == 10
        assert config["max_k"] == 2
        assert runner.invoke(cli, ["lemma-la", "--max-k", "13"]).exit_code == 2
