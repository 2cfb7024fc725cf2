"Constants"

from ..constants import DEFAULT_CONFIG, CONFIG_FILE_TYPES, ENV_MAX_N, DEFAULT_MAX_N

DEFAULT_CONFIG_FILE = DEFAULT_CONFIG

CONFIG_KEYS = (
    "substitutions",
    "engine",
    "output",
    "logger",
)
"Top level keys allowed in the configuration file"
