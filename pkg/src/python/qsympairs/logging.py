import logging
import os

from qsympairs import constants


def get_logger(name, level=logging.INFO):
    """ Returns a logger initialised to generate output to the console.
        Calling this twice for the same name reuses the existing handler.

    Args:
        name (str): The logger name
        level (int): The default logger level. Defaults to logging.INFO.
    Returns:
        logging.Logger: The logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)
    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    for handler in logger.handlers:
        handler.setLevel(level)
    return logger


def environment_level():
    """ Returns the logging level requested through the environment.

    Returns:
        int: The level named by QSYMPAIRS_LOG_LEVEL, or the default level.
    """
    name = os.getenv(constants.LOG_LEVEL_VARIABLE, constants.DEFAULT_LOG_LEVEL)
    level = logging.getLevelName(name.strip().upper())
    return level if isinstance(level, int) else logging.WARNING


def set_level(level):
    """ Changes the level of the application logger and its handlers. """
    get_logger(constants.APPLICATION_NAME, level=level)


LOGGER = get_logger(constants.APPLICATION_NAME, level=environment_level())
