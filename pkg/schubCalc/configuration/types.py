"Holds the typehints for the schubCalc config, mainly typedicts and dataclasses"

from types import MappingProxyType
from typing import Union, Literal, Optional, TypedDict, Any
from dataclasses import dataclass

from schubCalc.logging import LOG_LEVELS

from .const import DEFAULT_MAX_N

LogLevels = Union[int, Literal[LOG_LEVELS]]


class _BaseConfigEntry:

    def __getitem__(self, item):
        if isinstance(item,str) and hasattr(self,item):
            return getattr(self,item)
        else:
            raise KeyError(f"{self.__class__} has no entry {item}")

@dataclass(frozen=True)
class EngineEntry(_BaseConfigEntry):
    """Settings for the computations, under the ``engine`` entry.
    """

    max_n: int = DEFAULT_MAX_N
    """Largest permutation size, and largest Grassmannian ambient dimension, the engine accepts from the command line.

    Enumerations grow factorially, so anything above it is refused. Overwritten by the ``SCHUBERT_MAX_N`` environment variable.
    """

    cross_check: bool = True
    "Run the independent second algorithm for results that have one (second reduced word, Pieri oracle, peeling oracle)."

@dataclass(frozen=True)
class OutputEntry(_BaseConfigEntry):
    "How results are written to stdout, under the ``output`` entry."

    mode: Literal["text", "json"] = "text"
    "Default output mode when ``--output`` is not given"

    indent: Optional[int] = None
    "Indentation for json output. None writes a single line."

@dataclass(frozen=True)
class LoggerEntry(_BaseConfigEntry):
    """This entry sets up the logging facilities of schubCalc, under the ``logger`` entry.
    """

    level: LogLevels = "WARNING"
    "The base level for logging"

    logs: MappingProxyType[str, LogLevels] = MappingProxyType({})
    "Allows setting log levels for individual loggers"

    log_to_file: Union[MappingProxyType[str,Any],bool,None] = False
    "Settings for logging to a file, passed to a RotatingFileHandler. True or a mapping enables it."


class MainEntry(TypedDict):
    "Typehint for the full configuration dict as read out."

    substitutions: dict[str, Any]
    "Values substituted for ``${name}`` in the other entries"

    engine: EngineEntry
    "Computation settings"

    output: OutputEntry
    "Output settings"

    logger: LoggerEntry
    "Settings to apply for making logs"

__all__ = [
    "EngineEntry",
    "OutputEntry",
    "LoggerEntry",
    "MainEntry",
]
