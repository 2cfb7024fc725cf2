###schubCalc

from typing import Union
from . import logging as sc_logging

__version__ = "0.1.0"
"schubCalc version"


def getLogger(name: Union[str,None] = None) -> sc_logging.BaseLogger:
    """Convenience method to get a logger with type hinting for additional levels like verbose.

    logging docstr:
    Return a logger with the specified name, creating it if necessary.
    If no name is specified, return the root logger.
    """
    return sc_logging.logging.getLogger(name)


class DomainError(ValueError):
    "The supplied entity is not of a valid domain."
    pass
