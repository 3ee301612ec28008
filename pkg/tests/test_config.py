"""Tests for the config system: settings."""

import pytest
from pydantic import ValidationError

from metric_lines.config.settings import Settings


class TestSettings:
    def test_defaults(self, config_dir):
        s = Settings()
        assert s.log_level == "WARNING"
        assert s.random_count == 10_000
        assert (s.random_n_min, s.random_n_max) == (2, 30)
        assert s.step_weights == (1.0, 1.0, 1.0)
        assert s.exhaustive_max_n == 7
        assert s.jobs >= 1

    def test_env_prefix(self, monkeypatch, config_dir):
        monkeypatch.setenv("METRIC_LINES_LOG", "debug")
        monkeypatch.setenv("METRIC_LINES_RANDOM_SEED", "17")
        s = Settings()
        assert s.log_level == "DEBUG"
        assert s.random_seed == 17

    def test_unknown_log_level(self, monkeypatch, config_dir):
        monkeypatch.setenv("METRIC_LINES_LOG", "LOUD")
        with pytest.raises(ValidationError):
            Settings()

    def test_weights_validated(self):
        with pytest.raises(ValidationError):
            Settings(step_weights=(0, 0, 0))

    def test_save_and_load_yaml(self, tmp_path):
        s = Settings(log_level="INFO", random_count=500, step_weights=(2, 1, 1), config_dir=tmp_path)
        saved_path = s.save_yaml()
        assert saved_path.exists()

        loaded = Settings.load_yaml(config_dir=tmp_path)
        assert loaded.log_level == "INFO"
        assert loaded.random_count == 500
        assert loaded.step_weights == (2.0, 1.0, 1.0)

    def test_yaml_overrides_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("METRIC_LINES_RANDOM_COUNT", "50")
        (tmp_path / "config.yaml").write_text("random_count: 70\n", encoding="utf-8")
        assert Settings.load_yaml(config_dir=tmp_path).random_count == 70

    def test_load_yaml_missing_file(self, tmp_path):
        s = Settings.load_yaml(config_dir=tmp_path)
        assert s.random_seed == 0  # falls back to defaults

    def test_load_yaml_empty_file(self, tmp_path):
        yaml_path = tmp_path / "config.yaml"
        yaml_path.write_text("", encoding="utf-8")
        s = Settings.load_yaml(config_dir=tmp_path)
        assert s.random_count == 10_000

    def test_load_yaml_invalid_file(self, tmp_path):
        yaml_path = tmp_path / "config.yaml"
        yaml_path.write_text("{{{{invalid yaml", encoding="utf-8")
        s = Settings.load_yaml(config_dir=tmp_path)
        assert s.random_count == 10_000  # falls back gracefully

    def test_load_yaml_list_ignored(self, tmp_path):
        (tmp_path / "config.yaml").write_text("- 1\n- 2\n", encoding="utf-8")
        assert Settings.load_yaml(config_dir=tmp_path).random_count == 10_000
