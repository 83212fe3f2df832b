"""
Runtime settings
Defaults, optionally overridden by a YAML file and then by environment variables
"""

import logging
import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from semitop.errors import BadParams

logger = logging.getLogger(__name__)

ENV_OPENS_CAP = "SEMITOP_OPENS_CAP"

# Node colours for DOT export, keyed by flag profile
DEFAULT_DOT_PALETTE = {
    'regular': '#8FD19E',
    'weakly_regular': '#F4E5AD',
    'quasiregular': '#DCE9ED',
    'irregular': '#F2B8B5',
}


@dataclass(frozen=True)
class Settings:
    """Engine settings shared by the library and the CLI."""
    opens_cap: int = 1_048_576
    random_max_points: int = 16
    default_oracle_iters: int = 200
    dot_palette: Dict[str, str] = field(default_factory=lambda: dict(DEFAULT_DOT_PALETTE))

    def __post_init__(self) -> None:
        if self.opens_cap < 1:
            raise BadParams(f"opens_cap must be positive, got {self.opens_cap}")
        if not 1 <= self.random_max_points <= 64:
            raise BadParams(f"random_max_points must be in 1..64, got {self.random_max_points}")
        if self.default_oracle_iters < 0:
            raise BadParams(f"default_oracle_iters must be nonnegative, got {self.default_oracle_iters}")


def _from_mapping(base: Settings, data: Dict[str, Any], source: str) -> Settings:
    known = {f.name for f in fields(Settings)}
    unknown = set(data) - known
    if unknown:
        raise BadParams(f"Unknown setting(s) in {source}: {', '.join(sorted(unknown))}")
    if 'dot_palette' in data:
        palette = dict(base.dot_palette)
        palette.update(data['dot_palette'] or {})
        data = {**data, 'dot_palette': palette}
    try:
        return replace(base, **data)
    except TypeError as e:
        raise BadParams(f"Invalid settings in {source}: {e}") from e


def load_settings(config_path: Optional[str] = None, use_env: bool = True) -> Settings:
    """
    Resolve settings: defaults < YAML file < environment.

    Args:
        config_path: Optional YAML file with any of the Settings keys
        use_env: Whether to honour SEMITOP_OPENS_CAP (after loading .env)

    Returns:
        Settings instance
    """
    settings = Settings()

    if config_path:
        path = Path(config_path)
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise BadParams(f"Could not read config file {path}: {e}") from e
        if not isinstance(data, dict):
            raise BadParams(f"Config file {path} must contain a mapping")
        settings = _from_mapping(settings, data, str(path))
        logger.info(f"Loaded settings from {path}")

    if use_env:
        load_dotenv()
        raw = os.environ.get(ENV_OPENS_CAP)
        if raw:
            try:
                cap = int(raw)
            except ValueError:
                raise BadParams(f"{ENV_OPENS_CAP} must be an integer, got '{raw}'") from None
            settings = replace(settings, opens_cap=cap)
            logger.debug(f"Open enumeration cap from environment: {cap}")

    return settings


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or create the process-wide settings singleton."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def configure(settings: Settings) -> None:
    """Install settings for the process (used by the CLI after parsing --config)."""
    global _settings
    _settings = settings
