import pytest
from pydantic import ValidationError

from app.core.config import ConfigProvider
from app.models.request_models import CongruenceRequest


def test_defaults(monkeypatch):
    for name in ("CONGRUENCE_ENGINE", "CACHE_ENABLED", "REDISUSER", "REDISPASSWORD", "REDISHOST", "REDISPORT"):
        monkeypatch.delenv(name, raising=False)
    config = ConfigProvider()
    assert config.get_engine() == "fast"
    assert not config.is_cache_enabled()
    assert config.get_redis_url() == "redis://redis:6379/0"


def test_unknown_engine(monkeypatch):
    monkeypatch.setenv("CONGRUENCE_ENGINE", "quantum")
    with pytest.raises(ValueError):
        ConfigProvider().get_engine()


def test_redis_credentials(monkeypatch):
    monkeypatch.setenv("REDISUSER", "u")
    monkeypatch.setenv("REDISPASSWORD", "p")
    monkeypatch.setenv("REDISHOST", "localhost")
    assert ConfigProvider().get_redis_url().startswith("redis://u:p@localhost:")


def test_request_model():
    request = CongruenceRequest(degree=2, generators=["(1 2)"], pairs=[["(1 2)", "(1)(2)"]])
    assert request.engine == "fast"
    assert request.pairs == [("(1 2)", "(1)(2)")]
    with pytest.raises(ValidationError):
        CongruenceRequest(degree=2, generators=[])
    with pytest.raises(ValidationError):
        CongruenceRequest(degree=2, generators=["(1 2)"], engine="quantum")
