"""
yaml safeloader classes for the schubCalc config
"""

import os
import logging
from types import MappingProxyType
from typing import TYPE_CHECKING
from string import Template
from pathlib import Path

import yaml

from yaml import SafeLoader as FastestAvailableSafeLoader
try:
    from yaml import CSafeLoader as FastestAvailableSafeLoader
except ImportError:
    pass

if TYPE_CHECKING:
    from yaml import SafeLoader as FastestAvailableSafeLoader

_LOGGER = logging.getLogger(__name__)

def env_constructor(loader: "BaseSafeLoader", node: yaml.nodes.ScalarNode):
    """Reads a value from the environment: ``!env NAME`` or ``!env NAME default``.

    The value is parsed as yaml, so numbers and booleans keep their type.
    """
    value = loader.construct_scalar(node)
    name, _, default = value.partition(" ")
    if name in os.environ:
        return yaml.safe_load(os.environ[name])
    if default:
        return yaml.safe_load(default)
    _LOGGER.error(f"Environment variable {name} is not set and no default is given")
    return None

def include_constructor(loader: "BaseSafeLoader", node: yaml.nodes.ScalarNode):
    "Reads in the yaml file given, relative to the folder of the configuration file"
    file = loader.construct_scalar(node)
    file_path = Path(file)
    if not file_path.is_absolute():
        file_path = loader._base_folder / file_path

    if not file_path.exists():
        _LOGGER.error(f"Included file {file} cannot be found in {str(loader._base_folder)}")
        return {}

    with open(file_path) as f:
        c = yaml.load(f, Loader=BaseSafeLoader)

    return c

class BaseSafeLoader(FastestAvailableSafeLoader):
    "Base config loader for schubCalc. Used to register tags and the like."

    _base_folder: Path = Path.cwd()
    _substitutions: MappingProxyType = MappingProxyType({})
    _opened_files = set()

    def __init__(self, stream):
        if hasattr(stream, "name"):
            self.__class__._opened_files.add(stream.name)
        super().__init__(stream)

    def construct_scalar(self, node):
        val = super().construct_scalar(node)
        if isinstance(val, str) and "$" in val:
            val = Template(val).safe_substitute(**BaseSafeLoader._substitutions)
        return val

BaseSafeLoader.add_constructor("!env", env_constructor)
BaseSafeLoader.add_constructor("!include", include_constructor)

class MainConfigLoader(BaseSafeLoader):
    "Loader for the main file. Reads the ``substitutions`` node first, so other nodes can use them."

    def __init__(self, stream):
        self._top_node = True
        super().__init__(stream)

    def construct_mapping(self, node, deep=False):

        if not self._top_node:
            return super().construct_mapping(node, deep)

        self._top_node = False
        d = {}
        parse_later = {}
        for (key_node, value_node) in node.value:
            if key_node.value == "substitutions":
                val = super().construct_mapping(value_node, deep=True)
                d[key_node.value] = val
                BaseSafeLoader._substitutions = MappingProxyType(val)
            else:
                parse_later[key_node.value] = value_node

        for node_name, value_node in parse_later.items():
            d[node_name] = self.construct_object(value_node, deep=True)
        return d
