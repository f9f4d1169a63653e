"""
verify: sweep parameter points and compare every closed formula with its oracle.
"""
import argparse
from typing import List

from prm_hull.constants import HelpTexts, Limits
from prm_hull.models.reports import SweepResult
from prm_hull.services.logging_service import timed
from prm_hull.services.verification_service import MODES, VerificationService, validate_fields


def q_list(text: str) -> List[int]:
    """'2,3,4' -> [2, 3, 4]"""
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty field list")
    return values


def run_verify(args, logger, stream) -> int:
    validate_fields(args.q)
    service = VerificationService(logger)

    @timed(logger)
    def write_sweep() -> int:
        mismatches = 0
        stream.write(SweepResult.tsv_header() + "\n")
        for result in service.sweep(args.mode, args.q, args.m, jobs=args.jobs):
            stream.write(result.to_tsv() + "\n")
            stream.flush()
            mismatches += not result.match
        return mismatches

    mismatches = write_sweep()
    if mismatches:
        logger.warning(f"{mismatches} mismatching row(s)", logger_name="verify")
        return 1
    logger.info("All rows match", logger_name="verify")
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "verify",
        help="Sweep parameter points against brute-force oracles (TSV)",
        epilog=HelpTexts.VERIFY_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--mode", choices=MODES, required=True, help="What to verify")
    parser.add_argument(
        "-q",
        type=q_list,
        default=list(Limits.DEFAULT_SWEEP_FIELDS),
        help="Field orders, comma separated (default: %(default)s)",
    )
    parser.add_argument(
        "-m",
        type=int,
        default=Limits.DEFAULT_M_MAX,
        help="Largest m, or largest r for recursion, schur and blocks (default: %(default)s)",
    )
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes (default: 1)")
    parser.add_argument("--out", default=None, help="Write the TSV here instead of stdout")
    parser.set_defaults(handler=run_verify)
