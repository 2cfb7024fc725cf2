
from . import __version__

# ---------------------------------------------------------------------------- #
#                               General constants                              #
# ---------------------------------------------------------------------------- #

DEFAULT_CONFIG = "schubcalc.yaml"
"The default name of the config file, looked for in the working directory"

CONFIG_FILE_TYPES = (
                "yaml",
                "yml"
                    )

ENV_MAX_N = "SCHUBERT_MAX_N"
"Environment variable capping the size of permutations and boxes the engine accepts"

DEFAULT_MAX_N = 7

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

OUTPUT_MODES = ("text", "json")

COMMAND_VERSION = "version"
COMMAND_GR = "gr"
COMMAND_FLAG = "flag"
COMMAND_SYM = "sym"
COMMAND_COMB = "comb"
COMMAND_PIPEDREAMS = "pipedreams"
COMMAND_GZ = "gz"
COMMAND_SCHUBPOLY = "schubpoly"
"Top level shorthand for ``flag schubpoly``"

VERSION_STRING = f"schubCalc Version: {__version__}"
