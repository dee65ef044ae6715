"""Tests for configuration management."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from cayleycolor.config import Settings, get_user_env_path


def make_settings(**overrides) -> Settings:
    """Create a Settings instance isolated from .env files."""
    # _env_file=None prevents reading from .env
    return Settings(_env_file=None, **overrides)  # type: ignore[arg-type]


class TestSettings:
    """Test Settings class."""

    def test_default_values(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv("CAYLEYCOLOR_SEED", raising=False)
        monkeypatch.delenv("CAYLEYCOLOR_MAX_GROUP_DEGREE", raising=False)
        s = make_settings()
        assert s.max_group_degree == 8
        assert s.oracle_max_elements == 2500
        assert s.seed == 0
        assert s.output_dir == Path("artifacts")
        assert s.log_file is None

    def test_env_prefix(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """CAYLEYCOLOR_* variables override the defaults."""
        monkeypatch.setenv("CAYLEYCOLOR_SEED", "7")
        monkeypatch.setenv("CAYLEYCOLOR_ORACLE_TIME_BUDGET", "2.5")
        monkeypatch.setenv("CAYLEYCOLOR_LOG_LEVEL", "DEBUG")
        s = make_settings()
        assert s.seed == 7
        assert s.oracle_time_budget == 2.5
        assert s.log_level == "DEBUG"

    def test_unprefixed_variables_ignored(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv("CAYLEYCOLOR_SEED", raising=False)
        monkeypatch.setenv("SEED", "9")
        assert make_settings().seed == 0

    @pytest.mark.parametrize(
        "field",
        [
            "max_group_degree",
            "oracle_node_budget",
            "oracle_max_elements",
            "search_node_budget",
            "repair_iterations",
        ],
    )
    def test_budgets_must_be_positive(self, field: str) -> None:
        with pytest.raises(ValidationError, match="positive"):
            make_settings(**{field: 0})

    def test_time_budget_must_be_positive(self) -> None:
        with pytest.raises(ValidationError):
            make_settings(oracle_time_budget=-1.0)

    def test_log_level_is_checked(self) -> None:
        with pytest.raises(ValidationError):
            make_settings(log_level="LOUD")

    def test_ensure_output_dir_default(self, tmp_path: Path) -> None:
        s = make_settings(output_dir=tmp_path / "out" / "nested")
        path = s.ensure_output_dir()
        assert path == tmp_path / "out" / "nested"
        assert path.is_dir()

    def test_ensure_output_dir_override(self, tmp_path: Path) -> None:
        s = make_settings(output_dir=tmp_path / "unused")
        path = s.ensure_output_dir(tmp_path / "other")
        assert path.is_dir()
        assert not (tmp_path / "unused").exists()

    def test_user_env_path(self) -> None:
        path = get_user_env_path()
        assert path.name == ".env"
        assert path.parent.name == ".cayleycolor"
