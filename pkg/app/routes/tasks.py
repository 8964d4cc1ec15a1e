from fastapi import APIRouter, HTTPException
from celery.result import AsyncResult
from app.core.exceptions import NotationError
from app.models.request_models import CongruenceRequest
from app.celery.tasks.congruence_jobs import compute_congruence
from app.celery.celery_app import celery
from app.services.notation import parse_element

# Initialize logger
from app.core.logging_config import logger

router = APIRouter()


def validate_elements(payload: CongruenceRequest) -> None:
    """Parse every element of the payload so malformed input is rejected before queueing."""
    texts = list(payload.generators) + [text for pair in payload.pairs for text in pair]
    for text in texts:
        try:
            parse_element(text, payload.degree)
        except NotationError as e:
            logger.error(f"Rejected element {text!r}: {str(e)}")
            raise HTTPException(status_code=422, detail=f"Invalid element {text!r}: {str(e)}")


@router.post("/congruences", summary="Compute a congruence of an inverse semigroup in background")
def create_task(payload: CongruenceRequest):
    logger.info(
        f"Received congruence request: degree {payload.degree}, "
        f"{len(payload.generators)} generators, {len(payload.pairs)} pairs"
    )
    validate_elements(payload)
    try:
        task = compute_congruence.delay(
            payload.degree, payload.generators, [list(pair) for pair in payload.pairs], payload.engine
        )
        logger.info(f"Task {task.id} started for congruence request")
        return {"task_id": task.id}
    except Exception as e:
        logger.error(f"Error starting congruence task: {str(e)}")
        raise HTTPException(status_code=500, detail="Error starting task")

@router.get("/status/{task_id}", summary="Get task status")
def get_task_status(task_id: str):
    logger.info(f"Fetching status for task {task_id}")
    task = AsyncResult(task_id, app=celery)

    state_messages = {
        "PENDING": {"status": "pending", "message": "Task is waiting to be processed"},
        "PROCESSING": {"status": "processing", "message": "Task is processed"},
        "SUCCESS": {"status": "success"},
        "FAILURE": {"status": "failure", "message": str(task.result)},
    }

    # Get the state details or fall back to a default state
    response = state_messages.get(
        task.state,
        {"status": task.state}  # Default case if state is unrecognized
    )

    # Add the task_id to the response
    response["task_id"] = task_id
    logger.info(f"Task {task_id} status: {response['status']}")
    return response

@router.get("/results/{task_id}", summary="Get congruence report")
def get_task_result(task_id: str):
    logger.info(f"Fetching result for task {task_id}")
    task = AsyncResult(task_id, app=celery)

    if not task.ready():
        logger.warning(f"Task {task_id} result not ready yet")
        raise HTTPException(status_code=404, detail="Task result not ready yet")

    logger.info(f"Task {task_id} completed")
    return {"task_id": task_id, "status": "completed", "result": task.result}
