"""
Tests for engine settings
"""
from src.config import EngineSettings, settings


def test_defaults():
    fresh = EngineSettings()
    assert fresh.degree_bound >= 1
    assert fresh.rewrite_budget > 0
    assert fresh.catalog_dir.name == "catalog"
    assert fresh.catalog_dir.parent == fresh.data_dir


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("HDGA_DEGREE_BOUND", "6")
    monkeypatch.setenv("HDGA_DEBUG_REWRITING", "true")
    configured = EngineSettings()
    assert configured.degree_bound == 6
    assert configured.debug_rewriting is True


def test_shipped_catalog_exists():
    assert (settings.catalog_dir / "gl1.hdga").exists()
