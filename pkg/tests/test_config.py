"""Tests for configuration settings and run statistics."""

import logging

import pytest
from pydantic import ValidationError

from helixlab.config.logging import OperationTimer, RunSummary, SuiteStats, configure_logging
from helixlab.config.settings import Settings, get_settings


class TestSettings:
    """Test Settings class."""

    def test_settings_default_values(self, test_settings):
        """Test default values are set correctly."""
        assert test_settings.seed is None
        assert test_settings.samples == 100
        assert test_settings.fd_step == 1e-5
        assert test_settings.eq_tol == 1e-7
        assert test_settings.residual_tol == 1e-6
        assert test_settings.minimality_tol == 1e-6
        assert test_settings.error_handling == "lenient"
        assert test_settings.report_version == "1"
        assert test_settings.log_level == "WARNING"
        assert test_settings.log_file is None

    def test_settings_custom_values(self):
        """Test custom values override defaults."""
        settings = Settings(_env_file=None, seed=7, samples=20, error_handling="strict", log_level="DEBUG")  # type: ignore[call-arg]

        assert settings.seed == 7
        assert settings.samples == 20
        assert settings.error_handling == "strict"
        assert settings.log_level == "DEBUG"

    def test_settings_rejects_bad_values(self):
        """Test validation of numeric and literal fields."""
        with pytest.raises(ValidationError):
            Settings(_env_file=None, samples=0)  # type: ignore[call-arg]
        with pytest.raises(ValidationError):
            Settings(_env_file=None, fd_step=-1.0)  # type: ignore[call-arg]
        with pytest.raises(ValidationError):
            Settings(_env_file=None, error_handling="ignore")  # type: ignore[call-arg]


class TestSettingsFromEnv:
    """Test Settings loading from environment variables."""

    def test_settings_from_env_with_prefix(self, monkeypatch):
        """Test settings load from HELIXLAB_ prefixed env vars."""
        monkeypatch.setenv("HELIXLAB_SEED", "42")
        monkeypatch.setenv("HELIXLAB_ERROR_HANDLING", "strict")
        monkeypatch.setenv("HELIXLAB_LOG_LEVEL", "DEBUG")

        settings = Settings(_env_file=None)  # type: ignore[call-arg]
        assert settings.seed == 42
        assert settings.error_handling == "strict"
        assert settings.log_level == "DEBUG"

    def test_settings_ignores_extra_env_vars(self, monkeypatch):
        """Test that extra env vars don't cause errors."""
        monkeypatch.setenv("HELIXLAB_UNKNOWN_OPTION", "value")
        monkeypatch.setenv("SOME_OTHER_VAR", "value")

        settings = Settings(_env_file=None)  # type: ignore[call-arg]
        assert settings.samples == 100

    def test_get_settings_is_cached(self, monkeypatch):
        """Test that get_settings returns the cached instance until cleared."""
        first = get_settings()
        assert get_settings() is first

        monkeypatch.setenv("HELIXLAB_SEED", "3")
        get_settings.cache_clear()
        assert get_settings().seed == 3


class TestRunStatistics:
    """Test SuiteStats and RunSummary."""

    def test_suite_stats_success(self):
        """Test that a suite succeeds only without failures and errors."""
        stats = SuiteStats(suite="sol", checks_run=4, checks_passed=4)
        stats.finish()
        assert stats.success
        assert stats.checks_failed == 0
        assert stats.duration_seconds >= 0.0

        stats.add_error("boom")
        assert not stats.success
        assert stats.to_dict()["error_count"] == 1

    def test_run_summary_totals(self):
        """Test that the run summary aggregates its suites."""
        summary = RunSummary(command="suite")
        summary.add_stats(SuiteStats(suite="sol", checks_run=3, checks_passed=3))
        summary.add_stats(SuiteStats(suite="project", checks_run=5, checks_passed=4))
        summary.finish()

        assert summary.total_checks == 8
        assert summary.total_failed == 1
        assert summary.total_errors == 0
        assert not summary.success

        text = summary.format_text_summary()
        assert "RUN SUMMARY (suite)" in text
        assert "project: 4/5 passed [FAILED]" in text
        assert "sol: 3/3 passed [OK]" in text

    def test_operation_timer_measures_duration(self):
        """Test that the timer records a duration."""
        with OperationTimer("unit") as timer:
            pass
        assert timer.duration >= 0.0


class TestConfigureLogging:
    """Test logging setup."""

    def test_configure_logging_sets_level(self):
        """Test that the root logger follows the configured level."""
        configure_logging(Settings(_env_file=None, log_level="ERROR"))  # type: ignore[call-arg]
        assert logging.getLogger().level == logging.ERROR

    def test_configure_logging_with_file(self, tmp_path):
        """Test that a log file handler is added when configured."""
        log_file = tmp_path / "logs" / "helixlab.log"
        configure_logging(Settings(_env_file=None, log_file=str(log_file)))  # type: ignore[call-arg]

        assert log_file.parent.exists()
        assert any(type(h).__name__ == "RotatingFileHandler" for h in logging.getLogger().handlers)
        configure_logging(Settings(_env_file=None))  # type: ignore[call-arg]
