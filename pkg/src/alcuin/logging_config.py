"""
Logging configuration for Alcuin.

Log records go to stderr so command output on stdout stays byte-identical
between runs.
"""

import logging
import sys

from alcuin.config.settings import settings

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

# Get logger for Alcuin
logger = logging.getLogger("alcuin")


def configure_logging(level: str | None = None) -> logging.Logger:
    """
    Configure the root handler and the package logger.

    Args:
        level: Level name; defaults to settings.log_level

    Returns:
        The "alcuin" logger
    """
    level_name = (level or settings.log_level).upper()
    logging.basicConfig(
        level=level_name,
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )
    logger.setLevel(level_name)
    return logger
