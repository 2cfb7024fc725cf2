"Logging setup for schubCalc: the VERBOSE level, colored stderr output and the queued handlers used by the command line."

import logging
import logging.handlers
from pathlib import Path
from typing import Any, Optional, TYPE_CHECKING
from functools import partial, partialmethod
from contextlib import suppress
from types import MappingProxyType
from queue import SimpleQueue

if TYPE_CHECKING:
    from schubCalc.configuration.types import LoggerEntry


VERBOSE = int(logging.DEBUG/2)
DEBUG = logging.DEBUG
WARNING = logging.WARNING
CRITICAL = logging.CRITICAL

LOG_LEVELS = ("NOTSET", "VERBOSE", "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

LOG_FILENAME = "schubcalc.log"
LOG_FOLDER = "logs"

log_format = '%(asctime)s [%(levelname)s %(name)s %(funcName)s, line %(lineno)s]: %(message)s'
log_dateformat = '%d-%m-%Y %H:%M:%S'


class ANSICOLORS:
    GRAY = "\x1b[38;5;247m"
    GREEN = "\x1b[32;20m"
    BLUE =  "\x1b[34;20m"
    YELLOW = "\x1b[33;20m"
    RED = "\x1b[31;20m"
    BOLD_RED = "\x1b[31;1m"
    RESET =  "\x1b[0m"

##Levels are matched from the top down; anything below DEBUG (i.e. VERBOSE) is gray
LEVEL_COLORS = (
    (logging.CRITICAL, ANSICOLORS.BOLD_RED),
    (logging.ERROR, ANSICOLORS.RED),
    (logging.WARNING, ANSICOLORS.YELLOW),
    (logging.INFO, ANSICOLORS.BLUE),
    (logging.DEBUG, ANSICOLORS.GREEN),
)


_LOGGER = logging.getLogger(__name__)


class BaseLogger(logging.Logger):
    "Logger class with the verbose function defined for type hinting purposes"

    def verbose(self, msg, *args, **kwargs):
        "Logs a message at VERBOSE level, used for the intermediate steps of cross checks"
        if self.isEnabledFor(VERBOSE):
            self._log(VERBOSE, msg, args, **kwargs)


##Registered on import, so library users get the verbose level without calling init_logging
logging.addLevelName(VERBOSE, "VERBOSE")
logging.setLoggerClass(BaseLogger)
logging.Logger.verbose = partialmethod(logging.Logger.log, VERBOSE)
logging.verbose = partial(logging.log, VERBOSE)


class ColorFormatter(logging.Formatter):
    "Prefixes each formatted record with the ANSI color of its level"

    def format(self, record):
        formatted = super().format(record)
        prefix = next((color for level, color in LEVEL_COLORS if record.levelno >= level), ANSICOLORS.GRAY)
        return f"{prefix}{formatted}{ANSICOLORS.RESET}"


class SchubCalcQueueHandler(logging.handlers.QueueHandler):
    """Puts records on a queue that a listener thread hands to the real handlers.

    Long products log a lot at VERBOSE, so formatting and writing happen off the computing thread.
    """

    listener: Optional[logging.handlers.QueueListener] = None

    def handle(self, record: logging.LogRecord) -> Any:
        ##SimpleQueue is thread safe, so the handler lock is skipped
        passed = self.filter(record)
        if passed:
            self.emit(record)
        return passed

    def close(self) -> None:
        super().close()
        if self.listener:
            self.listener.stop()
            self.listener = None


streamhandler = logging.StreamHandler()
streamhandler.setFormatter(ColorFormatter(log_format, log_dateformat))

def init_logging(log_level: str = None, quiet: bool = False, verbose: bool = False) -> None:
    """Initialises the logger, such that the messages printed to stderr are color coded.

    Done before reading the configuration, such that messages about the config are also logged.
    An explicit ``log_level`` wins over ``verbose``, which wins over ``quiet``.
    """

    logging.basicConfig(format=log_format,
                    datefmt=log_dateformat,
                    handlers=[streamhandler])
    if log_level:
        level = log_level
    elif verbose:
        level = VERBOSE
    elif quiet:
        level = CRITICAL
    else:
        level = WARNING
    logging.getLogger().setLevel(level)


def setup_filehandler(config: "LoggerEntry", base_folder: Path) -> logging.handlers.RotatingFileHandler:
    """Adds a rotating file handler to the root logger.

    ``log_to_file`` may be a mapping of RotatingFileHandler arguments. A bare filename is placed in the ``logs`` folder under ``base_folder``.
    An existing log file is rolled over, so every run starts a fresh file.
    """

    fileconf = dict(config.log_to_file) if isinstance(config.log_to_file, (dict, MappingProxyType)) else {}
    fileconf.setdefault("backupCount", 5)
    name = Path(fileconf.get("filename", LOG_FILENAME))
    if name.parent == Path("."):
        filename = base_folder / LOG_FOLDER / name
        with suppress(FileExistsError):
            filename.resolve().parent.mkdir(parents=True)
            _LOGGER.debug(f"Made folder for logs at {filename.parent}")
    else:
        filename = name

    do_rollover = filename.exists()
    fileconf["filename"] = filename
    file_handler = logging.handlers.RotatingFileHandler(**fileconf)
    file_handler.setFormatter(logging.Formatter(log_format, log_dateformat))
    if do_rollover:
        file_handler.doRollover()

    logging.root.addHandler(file_handler)
    return file_handler

def setup_logging(config: "LoggerEntry", base_folder: Path = None, level_locked: bool = False):
    """Sets up logging via the config definitions

    Parameters
    ----------
    config : LoggerEntry
        The ``logger`` entry of the configuration
    base_folder : Path, optional
        Folder relative log files are placed in (under ``logs``), by default the working directory
    level_locked : bool
        If True, the root level set from the command line is kept and only per-logger levels are applied

    Returns
    -------
    SchubCalcQueueHandler
        The only handler left on the root logger; every other handler is moved behind its listener
    """

    if config.log_to_file:
        setup_filehandler(config, base_folder or Path.cwd())

    if not level_locked:
        logging.root.setLevel(config.level)
    for log_name, level in config.logs.items():
        logging.getLogger(log_name).setLevel(level)

    queue_handler = SchubCalcQueueHandler(SimpleQueue())
    migrated_handlers = list(logging.root.handlers)
    for handler in migrated_handlers:
        logging.root.removeHandler(handler)
    logging.root.addHandler(queue_handler)

    listener = logging.handlers.QueueListener(
        queue_handler.queue, *migrated_handlers, respect_handler_level=True)
    queue_handler.listener = listener
    listener.start()
    return queue_handler

def shutdown_logging():
    "Stops any queue listener and hands the migrated handlers back to the root logger, closing log files"
    for handler in logging.root.handlers[:]:
        if not isinstance(handler, SchubCalcQueueHandler):
            continue
        migrated = handler.listener.handlers if handler.listener else ()
        logging.root.removeHandler(handler)
        handler.close()
        for h in migrated:
            if isinstance(h, logging.handlers.RotatingFileHandler):
                h.close()
            else:
                logging.root.addHandler(h)
