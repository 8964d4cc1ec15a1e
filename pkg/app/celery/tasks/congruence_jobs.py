from typing import List

from app.celery.celery_app import celery
from app.core.logging_config import logger
from app.services.reports import run_congruence_job


@celery.task
def compute_congruence(degree: int, generators: List[str], pairs: List[List[str]], engine: str = "fast"):
    logger.info(f"Started congruence job on {len(generators)} generators of degree {degree}")
    try:
        result = run_congruence_job(degree, generators, pairs, engine)
        logger.info(f"Completed congruence job with {result['nr_classes']} classes")
        return result
    except Exception as e:
        logger.error(f"Error computing congruence: {str(e)}")
        raise e
