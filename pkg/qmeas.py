"""
   .d88888b.  88888b.d88b.   .d88b.   8888b.  .d8888b
  d88" "888  888 "888 "88b d8P  Y8b     "88b 88K
  888   888  888  888  888 88888888 .d888888 "Y8888b.
  Y88b 888  888  888  888 Y8b.     888  888      X88
   "Y88888  888  888  888  "Y8888  "Y888888  88888P'
       888
       888  generalized quantum measurements
"""

# the less import, the better for startup time
import argparse
import sys
from pathlib import Path

PYTHON_MIN_VERSION = (3, 8)
FORMAT_FROM_EXT = {".csv": "csv", ".json": "json"}

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DOMAIN = 2
EXIT_SOLVER = 3


def check_python(min_version):
    if sys.version_info >= min_version:
        return True

    print(f"Python >= {'.'.join(map(str, min_version))} required", file=sys.stderr)
    return False


def get_parser():
    parser = argparse.ArgumentParser(
        prog="qmeas", description="generalized quantum measurement experiments"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run an experiment and emit its table")
    run.add_argument("--config", required=True, type=Path, help="JSON config")
    run.add_argument("--format", choices=("csv", "json"), help="default from --out")
    run.add_argument("--out", type=Path, help="output file, default stdout")
    run.add_argument("--tol", type=float, help="Hermiticity & positivity tolerance")
    run.add_argument("--timestamp", action="store_true", help="add a local timestamp")
    run.add_argument("--quiet", action="store_true", help="no log on stderr")

    validate = commands.add_parser("validate", help="only check a config")
    validate.add_argument("--config", required=True, type=Path, help="JSON config")
    validate.add_argument(
        "--tol", type=float, help="Hermiticity & positivity tolerance"
    )
    validate.add_argument("--quiet", action="store_true", help="no log on stderr")

    commands.add_parser("kinds", help="list the experiment kinds")
    return parser


def get_format(args):
    if args.format:
        return args.format

    if args.out:
        return FORMAT_FROM_EXT.get(args.out.suffix.lower(), "csv")
    return "csv"


def read_config(path):
    # pylint: disable=import-outside-toplevel
    from runner.experiment import ConfigError

    try:
        return path.read_text(encoding="utf8")

    except OSError as e:
        raise ConfigError(f'can\'t read "{path}" ({e.strerror})') from e

    except UnicodeDecodeError as e:
        raise ConfigError(f'"{path}" is not UTF-8') from e


def execute(args):
    # pylint: disable=import-outside-toplevel
    from measurement.tolerance import TOL
    from runner.experiment import ConfigError
    from runner.experiments_handler import ExperimentsHandler
    from runner.result_table import emit

    handler = ExperimentsHandler()
    if args.command == "kinds":
        print("\n".join(handler.get_kinds()))
        return EXIT_OK

    if getattr(args, "tol", None) is not None:
        try:
            TOL.set_check(args.tol)

        except ValueError as e:
            raise ConfigError(str(e), "--tol") from e

    config = handler.validate(read_config(args.config))
    if args.command == "validate":
        return EXIT_OK

    table = handler.run(config)
    if args.timestamp:
        table.stamp(timestamp=True)
    emit(table, get_format(args), args.out)
    return EXIT_OK if table.checks_passed else EXIT_DOMAIN


def main(argv=None):
    args = get_parser().parse_args(argv)

    # pylint: disable=import-outside-toplevel
    from measurement.errors import MeasurementError, SolverError
    from measurement.tolerance import TOL
    from runner.experiment import ConfigError
    from tools.log import log, logger
    from tools.save_handler import EmitError

    if getattr(args, "quiet", False):
        logger.mute()

    check_tol = TOL.check

    try:
        return execute(args)

    except ConfigError as e:
        log(f"CONFIG ERROR - {e}", error=True)
        return EXIT_CONFIG

    except SolverError as e:
        log(f"SOLVER ERROR - {e}", error=True)
        return EXIT_SOLVER

    except MeasurementError as e:
        log(f"{type(e).__name__} - {e}", error=True)
        return EXIT_DOMAIN

    except EmitError as e:
        log(f"EMIT ERROR - {e}", error=True)
        return EXIT_CONFIG

    finally:
        TOL.check = check_tol
        logger.unmute()


if __name__ == "__main__":
    if not check_python(PYTHON_MIN_VERSION):
        sys.exit(EXIT_CONFIG)
    sys.exit(main())
