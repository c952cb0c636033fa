from __future__ import annotations

import logging
import logging.config

DEFAULT_LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"
DEBUG_LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s:%(lineno)d] %(message)s"


def configure_logging(level: str) -> None:
    """Send orbitkit logs and captured numpy/scipy warnings to stderr.

    stdout carries the JSON reports and stays free of log output.
    """
    log_level = level.upper()
    formatter = "debug" if log_level == "DEBUG" else "standard"

    logging_config = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {"format": DEFAULT_LOG_FORMAT},
            "debug": {"format": DEBUG_LOG_FORMAT},
        },
        "handlers": {
            "default": {
                "class": "logging.StreamHandler",
                "formatter": formatter,
                "stream": "ext://sys.stderr",
            }
        },
        "root": {"handlers": ["default"], "level": "WARNING"},
        "loggers": {
            "orbitkit": {"handlers": ["default"], "level": log_level, "propagate": False},
            # RuntimeWarning / LinAlgWarning from the float paths
            "py.warnings": {"handlers": ["default"], "level": "WARNING", "propagate": False},
        },
    }

    logging.config.dictConfig(logging_config)
    logging.captureWarnings(True)
