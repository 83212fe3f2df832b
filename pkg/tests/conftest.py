"""
Shared pytest fixtures
"""

import pytest

from semitop.config import Settings, configure
from semitop.gallery.fixture_library import FixtureLibrary


@pytest.fixture
def library():
    """Fixture library instance."""
    return FixtureLibrary()


@pytest.fixture
def build(library):
    """Shortcut: build a gallery space by name."""
    return library.build


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    """Every test starts from default settings with no environment overrides."""
    monkeypatch.delenv("SEMITOP_OPENS_CAP", raising=False)
    configure(Settings())
    yield
    configure(Settings())
