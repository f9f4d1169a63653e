# prm_hull/cli.py

import argparse
import json
import sys
from typing import List, Optional

from prm_hull.commands import export, query, verify
from prm_hull.core.exceptions import PRMError
from prm_hull.services.logging_service import ErrorFormatter, HullLogger


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prm-hull",
        description="Dimensions and hull dimensions of projective Reed-Muller codes PRM(q, m, v)",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Overrides LOG_LEVEL from the environment",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Registramos los comandos
    query.register(subparsers)
    verify.register(subparsers)
    export.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the prm-hull command

    Args:
        argv: Arguments without the program name, sys.argv[1:] when None

    Returns:
        0 on success, 1 when a verification sweep has mismatches, 2 on usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logger = HullLogger("prm_hull", log_level=args.log_level)
    out = getattr(args, "out", None)
    try:
        if out:
            with open(out, "w", encoding="utf-8") as stream:
                return args.handler(args, logger, stream)
        return args.handler(args, logger, sys.stdout)
    except (PRMError, OSError) as e:
        # 1 queda reservado para discrepancias de verificacion
        logger.error(f"{type(e).__name__}: {e}", logger_name="cli")
        error = ErrorFormatter().format_error(e, function_name=args.command)
        print(json.dumps(error), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
