
"""Logging utility module."""
import logging
import os
from datetime import datetime
from typing import Optional

LOGGER_NAME = 'ddvv'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(log_dir: Optional[str] = 'logs',
                  log_level: int = logging.INFO,
                  log_file: Optional[str] = None) -> logging.Logger:
    """Set up logging configuration for the toolkit.

    Args:
        log_dir: Directory to store log files; ``None`` disables the file handler
        log_level: Logging level
        log_file: Optional specific log file name

    Returns:
        Configured package logger (parent of every ``src.*`` module logger)
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(log_level)

    # Re-running the CLI in one process must not stack handlers
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(LOG_FORMAT)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_dir is not None:
        os.makedirs(log_dir, exist_ok=True)
        if log_file is None:
            log_file = f'ddvv_{datetime.now().strftime("%Y%m%d_%H%M%S")}.log'
        file_handler = logging.FileHandler(os.path.join(log_dir, log_file))
        file_handler.setLevel(log_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    # Module loggers live under ``src.*``; route them through the same handlers
    src_logger = logging.getLogger('src')
    src_logger.setLevel(log_level)
    src_logger.handlers = logger.handlers
    src_logger.propagate = False

    return logger
