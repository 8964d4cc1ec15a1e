import logging

from app.core.config import config_provider

handlers = [logging.StreamHandler()]  # Output logs to console (stderr)
if config_provider.get_log_file():
    handlers.append(logging.FileHandler(config_provider.get_log_file()))

# Set up logging configuration
logging.basicConfig(
    level=config_provider.get_log_level(),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    handlers=handlers,
)

logger = logging.getLogger("congruences")


def set_level(level: str) -> None:
    """Override the configured level, e.g. from a CLI flag."""
    logger.setLevel(level.upper())
