import pytest

from app.celery.tasks.congruence_jobs import compute_congruence
from app.core.config import config_provider
from app.core.exceptions import NotationError
from app.services.reports import run_congruence_job
from app.services.samples import I4_GENERATORS, I4_PAIR


@pytest.fixture(autouse=True)
def no_cache(mocker):
    mocker.patch.object(config_provider, "is_cache_enabled", return_value=False)


@pytest.mark.parametrize("engine", ["fast", "naive"])
def test_run_congruence_job(engine):
    result = run_congruence_job(4, list(I4_GENERATORS), [list(I4_PAIR)], engine)
    assert result["nr_classes"] == 57
    assert result["semigroup_size"] == 209
    assert result["engine"] == engine


def test_fast_job_reports_components():
    result = run_congruence_job(4, list(I4_GENERATORS), [list(I4_PAIR)], "fast")
    assert len(result["components"]) == 3
    assert result["trace_classes"] == 6


def test_compute_congruence_task():
    result = compute_congruence(4, list(I4_GENERATORS), [], "fast")
    assert result["nr_classes"] == 209


def test_compute_congruence_task_raises_on_bad_input():
    with pytest.raises(NotationError):
        compute_congruence(4, ["(1 9)"], [], "fast")
