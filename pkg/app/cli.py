# app/cli.py
import sys, os

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import argparse
import logging

from algebra.errors import CapacityError, MhcError, ParseError
from app.commands import execute, register_commands
from config.settings import LOG_FORMAT, LOG_LEVEL

logger = logging.getLogger("mhc")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mhc",
        description="Exact Hochschild and cyclic Hopf-cohomology of C(G) for finite groups.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress at INFO level")
    subparsers = parser.add_subparsers(dest="verb", required=True)
    register_commands(subparsers)
    return parser


def configure_logging(verbose=False):
    logging.basicConfig(
        level=logging.INFO if verbose else LOG_LEVEL,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )


def run_command(argv=None):
    """Parse ``argv``, run the verb and write its output to stdout.

    Returns:
        int: 0 on success, 2 on usage or parse errors, 1 on capacity or other failures.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    configure_logging(args.verbose)

    try:
        text = execute(args)
    except ParseError as e:
        print(f"mhc: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as e:
        print(f"mhc: capacity exceeded: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except MhcError as e:
        logger.error("❌ %s failed: %s", args.verb, e)
        return EXIT_FAILURE

    sys.stdout.write(text)
    sys.stdout.flush()
    return EXIT_OK


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
