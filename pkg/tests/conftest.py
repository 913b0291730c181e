import pytest

from app.config.settings import settings


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """검색 캐시를 테스트별 임시 디렉터리로"""
    monkeypatch.setattr(settings.cache, "dir", tmp_path / "cache")
    monkeypatch.setattr(settings.cache, "enabled", True)
    return tmp_path / "cache"
