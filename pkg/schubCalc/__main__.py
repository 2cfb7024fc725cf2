
import sys
from typing import Optional, Sequence

import schubCalc
import schubCalc.logging
from schubCalc import constants as const
from schubCalc.helpers import ConfigError, UsageError, VerificationError
from schubCalc.arguments import parse_args, command_version
from schubCalc.configuration import config, find_config_file, set_config
from schubCalc.commands import dispatch
from schubCalc.output import format_output

_LOGGER = schubCalc.getLogger(__name__)

PRE_CONFIG_ACTIONS = {
    const.COMMAND_VERSION: command_version,
}
"Commands that run before any configuration is read"

def run(args) -> int:
    "Loads the configuration, runs the parsed command and writes its result to stdout"

    conf = config(find_config_file(args.config))
    set_config(conf)
    schubCalc.logging.setup_logging(conf.logger, conf.baseFolder,
                                    level_locked=bool(args.logs or args.quiet or args.verbose))

    result = dispatch(args)
    mode = args.output or conf.output.mode
    sys.stdout.write(format_output(result, mode, conf.output.indent).decode("utf-8"))
    sys.stdout.flush()
    return result.status

def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exce:
        ##argparse exits with 2 on bad arguments, and 0 after --help or --version
        return exce.code if isinstance(exce.code, int) else const.EXIT_USAGE_ERROR

    schubCalc.logging.init_logging(args.logs, args.quiet, args.verbose)

    if args.command in PRE_CONFIG_ACTIONS:
        return PRE_CONFIG_ACTIONS[args.command](args)

    try:
        return run(args)
    except (UsageError, ConfigError) as exce:
        _LOGGER.debug("Usage error", exc_info=exce)
        print(f"schubCalc: error: {exce}", file=sys.stderr)
        return const.EXIT_USAGE_ERROR
    except (schubCalc.DomainError, VerificationError) as exce:
        _LOGGER.debug("Computation refused", exc_info=exce)
        print(f"schubCalc: {type(exce).__name__}: {exce}", file=sys.stderr)
        return const.EXIT_DOMAIN_ERROR
    finally:
        schubCalc.logging.shutdown_logging()

if __name__ == "__main__":
    sys.exit(main())
