
import os
import logging
import dataclasses
from types import MappingProxyType
from typing import Union, Optional, overload
from pathlib import Path

import yaml

from ..helpers import ConfigError

from . import const
from .types import *
from .loaders import MainConfigLoader, BaseSafeLoader

_LOGGER = logging.getLogger(__name__)

def read_config(filepath: Path) -> MainEntry:
    with open(filepath) as f:
        _config = yaml.load(f, Loader=MainConfigLoader)
    if _config is None:
        _LOGGER.warning(f"Configuration file {filepath} is empty, using defaults")
        _config = {}
    if not isinstance(_config, dict):
        raise ConfigError(f"Configuration file {filepath} must hold a mapping at the top level")
    return MappingProxyType(_config)

def _build_entry(entry_cls, name: str, values, errors: list):
    if values is None:
        values = {}
    if not isinstance(values, dict):
        _LOGGER.error(f"Entry {name} must be a mapping, got {type(values).__name__}")
        errors.append(name)
        return entry_cls()
    try:
        return entry_cls(**values)
    except TypeError as exce:
        _LOGGER.error(f"Error in entry {name}: {exce}")
        errors.append(name)
        return entry_cls()

def _coerce_engine(engine: EngineEntry, errors: list) -> EngineEntry:
    "Applies the environment override and makes sure max_n is a positive integer"
    max_n = engine.max_n
    env_value = os.environ.get(const.ENV_MAX_N)
    if env_value is not None and env_value.strip():
        try:
            max_n = int(env_value)
        except ValueError:
            raise ConfigError(f"{const.ENV_MAX_N} must be an integer, got {env_value!r}")
        _LOGGER.debug(f"max_n set to {max_n} from {const.ENV_MAX_N}")
    else:
        try:
            max_n = int(max_n)
        except (TypeError, ValueError):
            _LOGGER.error(f"engine max_n must be an integer, got {max_n!r}")
            errors.append("engine")
            return engine
    if max_n < 1:
        raise ConfigError(f"max_n must be at least 1, got {max_n}")
    return dataclasses.replace(engine, max_n=max_n)


class config:
    """
    The schubCalc configuration. Build from an optional yaml file; every entry has defaults, so ``config()`` without a file is valid.
    """

    def __init__(self, file: Union[str,Path,None] = None):

        if file is None:
            self.__filePath = None
            self.__baseFolder = Path.cwd()
            full_config = MappingProxyType({})
        else:
            file_path = Path(file).resolve()
            if not file_path.exists(): raise ConfigError(f"Cannot find file {file}")
            if not file_path.suffix.endswith(const.CONFIG_FILE_TYPES): raise ConfigError(f"Config file must be of type {const.CONFIG_FILE_TYPES}")

            self.__filePath = file_path
            self.__baseFolder = file_path.parent
            BaseSafeLoader._base_folder = self.__baseFolder
            try:
                full_config = read_config(file_path)
            except yaml.YAMLError as exce:
                raise ConfigError(f"Could not parse {file}: {exce}") from exce

        unknown = [key for key in full_config if key not in const.CONFIG_KEYS]
        if unknown:
            raise ConfigError(f"Unknown configuration entries {unknown}")

        self.__full_config = full_config

        errors = []
        engine = _build_entry(EngineEntry, "engine", full_config.get("engine"), errors)
        self.__engine = _coerce_engine(engine, errors)
        self.__output = _build_entry(OutputEntry, "output", full_config.get("output"), errors)

        logger_conf = full_config.get("logger")
        if isinstance(logger_conf, dict) and "logs" in logger_conf:
            logger_conf = {**logger_conf, "logs": MappingProxyType(dict(logger_conf["logs"] or {}))}
        self.__logger = _build_entry(LoggerEntry, "logger", logger_conf, errors)

        if self.__output.mode not in ("text", "json"):
            _LOGGER.error(f"output mode must be text or json, got {self.__output.mode!r}")
            errors.append("output")

        if errors:
            raise ConfigError(f"Errors under entries {errors}")

    def __getitem__(self, item: str):
        return self.configuration[item]

    @overload
    def get(self, key, /):
        ...

    @overload
    def get(self, key, default, /):
        ...

    def get(self, *args):
        "Gets a key from the full config, similar to calling `.get` on a dict"
        if len(args) == 1:
            return self.__full_config[args[0]]
        else:
            return self.__full_config.get(*args)

    @property
    def filePath(self) -> Optional[Path]:
        "Path to the config file, resolved to be absolute. None if running on defaults."
        return self.__filePath

    @property
    def baseFolder(self) -> Path:
        "The folder the configuration file is in, or the working directory"
        return self.__baseFolder

    @property
    def configuration(self) -> MainEntry:
        "The mappingproxy dict that was build by reading out the configuration file."
        return self.__full_config

    @property
    def engine(self) -> EngineEntry:
        "Settings for the computations"
        return self.__engine

    @property
    def output(self) -> OutputEntry:
        "Settings for writing results"
        return self.__output

    @property
    def logger(self) -> LoggerEntry:
        "Settings for the logger"
        return self.__logger


_active_config: Optional[config] = None

def get_config() -> config:
    "Returns the active configuration, building one from defaults (and the environment) if none was set"
    global _active_config
    if _active_config is None:
        _active_config = config()
    return _active_config

def set_config(conf: Optional[config]) -> None:
    "Sets the active configuration. Passing None resets it, so the next ``get_config`` rebuilds from defaults."
    global _active_config
    _active_config = conf

def find_config_file(file: Union[str, Path, None] = None) -> Optional[Path]:
    "Returns the file to read: the given one, or the default file in the working directory if that exists"
    if file is not None:
        return Path(file)
    default = Path.cwd() / const.DEFAULT_CONFIG_FILE
    if default.exists():
        _LOGGER.debug(f"Using configuration file {default}")
        return default
    return None
