from celery import Celery
from app.core.config import config_provider

# Celery application configuration
celery = Celery(
    "congruences",
    broker=config_provider.get_redis_url(),  # Redis as the message broker
    backend=config_provider.get_redis_url(),  # Redis as the result backend
    include=["app.celery.tasks.congruence_jobs"]
)

# Reports are plain JSON; results live as long as cached reports
celery.conf.update(
    task_serializer="json",
    result_serializer="json",
    accept_content=["json"],
    result_expires=config_provider.get_cache_ttl(),
    worker_prefetch_multiplier=1,
)
