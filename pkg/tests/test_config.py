"""
Tests for runtime settings
"""

import pytest

from semitop.config import ENV_OPENS_CAP, Settings, configure, get_settings, load_settings
from semitop.errors import BadParams


class TestSettings:
    """Test cases for settings resolution."""

    def test_defaults(self):
        settings = load_settings(use_env=False)
        assert settings.opens_cap == 1_048_576
        assert settings.dot_palette['regular'] == '#8FD19E'

    def test_yaml_file(self, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("opens_cap: 64\ndot_palette:\n  regular: '#123456'\n", encoding='utf-8')
        settings = load_settings(str(path), use_env=False)
        assert settings.opens_cap == 64
        assert settings.dot_palette['regular'] == '#123456'
        assert settings.dot_palette['irregular'] == '#F2B8B5'

    def test_env_overrides_file(self, tmp_path, monkeypatch):
        path = tmp_path / "settings.yaml"
        path.write_text("opens_cap: 64\n", encoding='utf-8')
        monkeypatch.setenv(ENV_OPENS_CAP, "128")
        assert load_settings(str(path)).opens_cap == 128

    def test_env_not_integer(self, monkeypatch):
        monkeypatch.setenv(ENV_OPENS_CAP, "lots")
        with pytest.raises(BadParams, match="must be an integer"):
            load_settings()

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("colour: blue\n", encoding='utf-8')
        with pytest.raises(BadParams, match="Unknown setting"):
            load_settings(str(path), use_env=False)

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "settings.yaml"
        path.write_text("- 1\n- 2\n", encoding='utf-8')
        with pytest.raises(BadParams, match="must contain a mapping"):
            load_settings(str(path), use_env=False)

    def test_missing_file(self, tmp_path):
        with pytest.raises(BadParams, match="Could not read"):
            load_settings(str(tmp_path / "absent.yaml"))

    @pytest.mark.parametrize("kwargs", [
        {'opens_cap': 0},
        {'random_max_points': 0},
        {'default_oracle_iters': -1},
    ])
    def test_invalid_values(self, kwargs):
        with pytest.raises(BadParams):
            Settings(**kwargs)

    def test_configure(self):
        configure(Settings(opens_cap=5))
        assert get_settings().opens_cap == 5

    def test_cap_limits_enumeration(self, build):
        configure(Settings(opens_cap=5))
        family = build('discrete', [4]).enumerate_opens()
        assert family.truncated
        assert len(family) == 5
