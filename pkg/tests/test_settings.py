from infrastructure.config.settings import Settings


def test_defaults(monkeypatch):
    for name in ("HZ_CACHE_PATH", "HZ_CACHE_ENABLED", "HZ_WORKERS", "HZ_TOLERANCE", "HZ_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    config = Settings()
    assert config.cache_path == "classnum.tsv"
    assert config.cache_enabled
    assert config.workers == 1
    assert config.tolerance == 1e-10
    assert not config.cache_is_database


def test_environment(monkeypatch):
    monkeypatch.setenv("HZ_CACHE_PATH", "cache.db")
    monkeypatch.setenv("HZ_CACHE_ENABLED", "False")
    monkeypatch.setenv("HZ_WORKERS", "4")
    monkeypatch.setenv("HZ_LOG_LEVEL", "info")
    config = Settings()
    assert not config.cache_enabled
    assert config.workers == 4
    assert config.log_level == "INFO"
    assert config.cache_is_database
    assert config.database_url() == "sqlite:///cache.db"


def test_database_url_passthrough(monkeypatch):
    monkeypatch.setenv("HZ_CACHE_PATH", "sqlite:///var/classnum.sqlite")
    assert Settings().database_url() == "sqlite:///var/classnum.sqlite"
