import logging
import sys

from app.core.config import settings


def setup_logger(name=__name__, level=None):
    """Module logger on stderr; stdout carries the JSON and CSV output."""
    if level is None:
        level_str = getattr(settings, 'LOG_LEVEL', 'INFO').upper()
        level = getattr(logging, level_str, logging.INFO)

    logging.basicConfig(
        format=settings.LOG_FORMAT,
        level=level,
        datefmt='%H:%M:%S',
        stream=sys.stderr,
    )
    logger = logging.getLogger(name)
    return logger
