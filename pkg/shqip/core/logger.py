import logging
import os

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def get_logger(name):
    logger = logging.getLogger(name)
    logger.setLevel(os.getenv("SHQIP_LOG_LEVEL", "INFO").upper())
    # Modules call this at import time; attach the handler only once.
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
        logger.propagate = False
    return logger
