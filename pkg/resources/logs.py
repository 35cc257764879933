# logs.py
"""Contains the logger. Library code logs, it never prints."""

import logging
import logging.handlers
import os

from resources import settings


FORMAT = '%(asctime)s:%(levelname)s:%(name)s: %(message)s'

os.makedirs(os.path.dirname(settings.LOG_FILE), exist_ok=True)

logger = logging.getLogger('gof')
logger.setLevel(logging.DEBUG if settings.DEBUG_MODE else logging.INFO)
logger.propagate = False

if not logger.handlers:
    file_handler = logging.handlers.TimedRotatingFileHandler(filename=settings.LOG_FILE, when='D', interval=1,
                                                             encoding='utf-8', utc=True, delay=True)
    file_handler.setFormatter(logging.Formatter(FORMAT))
    logger.addHandler(file_handler)
    # Debug runs also echo to stderr, report output stays on stdout
    if settings.DEBUG_MODE:
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(logging.Formatter(FORMAT))
        logger.addHandler(stream_handler)
