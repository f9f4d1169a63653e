"""
Single-point queries: hull, dim, delta and a-count, each printed as one JSON object.
"""
import argparse

from prm_hull.constants import HelpTexts
from prm_hull.core import formulas
from prm_hull.core.exceptions import IntervalMismatchError
from prm_hull.core.gf import factor_prime_power
from prm_hull.core.monomial import BoundaryTag, IntervalParams, interval_index
from prm_hull.core.projspace import point_count
from prm_hull.models.reports import ACountReport, DeltaReport, DimReport


def _interval(q: int, v: int) -> int:
    factor_prime_power(q)
    r = interval_index(q, v)
    if r is BoundaryTag.BOUNDARY:
        raise IntervalMismatchError(f"v={v} is a boundary degree for q={q}")
    IntervalParams(q=q, r=r, v=v)
    return r


def run_hull(args, logger, stream) -> int:
    report = formulas.hull_dim(args.q, args.m, args.v)
    logger.info(
        f"{report.case_tag.value}: hull_dim={report.hull_dim}",
        logger_name="hull",
        point_id=f"q={args.q},m={args.m},v={args.v}",
    )
    stream.write(report.model_dump_json(indent=2) + "\n")
    return 0


def run_dim(args, logger, stream) -> int:
    report = DimReport(
        q=args.q,
        m=args.m,
        v=args.v,
        length=point_count(args.q, args.m),
        code_dim=formulas.code_dim(args.q, args.m, args.v),
    )
    stream.write(report.model_dump_json(indent=2) + "\n")
    return 0


def run_delta(args, logger, stream) -> int:
    q, v = args.q, args.v
    r = _interval(q, v)
    report = DeltaReport(
        q=q,
        r=r,
        v=v,
        A=formulas.A_formula(q, r, v),
        delta=formulas.delta(q, r, v),
        delta_closed_chain=formulas.delta_closed_chain(q, r, v),
        delta_explicit=formulas.delta_explicit(q, r, v),
    )
    if len({report.delta, report.delta_closed_chain, report.delta_explicit}) > 1:
        logger.warning("delta routes disagree", logger_name="delta", point_id=f"q={q},v={v}")
    stream.write(report.model_dump_json(indent=2) + "\n")
    return 0


def run_a_count(args, logger, stream) -> int:
    q, v = args.q, args.v
    r = _interval(q, v)
    report = ACountReport(
        q=q,
        r=r,
        v=v,
        A_formula=formulas.A_formula(q, r, v),
        A_enumerate=formulas.A_enumerate(q, r, v),
    )
    stream.write(report.model_dump_json(indent=2) + "\n")
    return 0


def register(subparsers) -> None:
    specs = [
        ("hull", "Hull dimension of PRM(q, m, v)", HelpTexts.HULL_EPILOG, run_hull, True),
        ("dim", "Dimension of PRM(q, m, v)", HelpTexts.DIM_EPILOG, run_dim, True),
        ("delta", "Hull defect Delta_r(v) for v in I_r", HelpTexts.DELTA_EPILOG, run_delta, False),
        ("a-count", "Top-layer size A_r(v) for v in I_r", HelpTexts.A_COUNT_EPILOG, run_a_count, False),
    ]
    for name, help_text, epilog, handler, needs_m in specs:
        parser = subparsers.add_parser(
            name,
            help=help_text,
            epilog=epilog,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        parser.add_argument("-q", type=int, required=True, help="Field order, a prime power")
        if needs_m:
            parser.add_argument("-m", type=int, required=True, help="Projective dimension")
        parser.add_argument("-v", type=int, required=True, help="Degree")
        parser.set_defaults(handler=handler)
