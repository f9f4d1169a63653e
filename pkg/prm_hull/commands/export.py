"""
export: matrices and index families as plain text.
"""
import argparse

from prm_hull.constants import HelpTexts
from prm_hull.services.export_service import SELECTORS, ExportService


def run_export(args, logger, stream) -> int:
    text = ExportService(logger).export(args.q, args.m, args.v, args.what)
    stream.write(text)
    return 0


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "export",
        help="Write G, G1, S, P, W or E as text",
        epilog=HelpTexts.EXPORT_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-q", type=int, required=True, help="Field order, a prime power")
    parser.add_argument("-m", type=int, default=1, help="Projective dimension, used by G and G1 (default: 1)")
    parser.add_argument("-v", type=int, required=True, help="Degree")
    parser.add_argument("what", choices=SELECTORS, help="Object to export")
    parser.add_argument("--out", default=None, help="Write here instead of stdout")
    parser.set_defaults(handler=run_export)
