import functools
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Sequence, Tuple

from prm_hull.core import formulas, linalg
from prm_hull.core.exceptions import SingularMatrixError
from prm_hull.core.gf import field_new
from prm_hull.core.monomial import E_set, IntervalParams, enumerate_G
from prm_hull.models.reports import SweepResult
from prm_hull.services.logging_service import HullLogger

MODES = ("hull", "dim", "recursion", "schur", "blocks")

SweepPoint = Tuple[str, int, int, int]


def open_interval_degrees(q: int, r: int) -> List[int]:
    """Integer v with rQ < 2v < (r+1)Q, ascending"""
    Q = q - 1
    return [v for v in range(r * Q // 2, (r + 1) * Q // 2 + 1) if r * Q < 2 * v < (r + 1) * Q]


def sweep_points(mode: str, q_list: Sequence[int], m_max: int) -> List[SweepPoint]:
    """
    Parameter points of a sweep in output order

    Args:
        mode: One of MODES
        q_list: Field orders, in the order given
        m_max: Largest m (hull, dim) or largest r (recursion, schur, blocks)

    Returns:
        (mode, q, m or r, v) tuples, q first, then m or r, then v
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}, expected one of {', '.join(MODES)}")
    points = []
    for q in q_list:
        Q = q - 1
        if mode == "hull":
            points += [(mode, q, m, v) for m in range(1, m_max + 1) for v in range(m * Q + 2)]
        elif mode == "dim":
            points += [(mode, q, m, v) for m in range(1, m_max + 1) for v in range(1, m * Q + 1)]
        else:
            first = 2 if mode == "schur" else 0
            points += [
                (mode, q, r, v)
                for r in range(first, m_max + 1)
                for v in open_interval_degrees(q, r)
            ]
    return points


class VerificationService:
    """Servicio que compara las formulas cerradas con oraculos por fuerza bruta"""

    def __init__(self, logger):
        self.logger = logger
        self.name = "Verification_Service"

    def check(self, mode: str, q: int, m: int, v: int) -> SweepResult:
        """
        Evaluate one sweep point

        Args:
            mode: One of MODES
            q: Field order
            m: Projective dimension, or interval index r for the structural modes
            v: Degree

        Returns:
            SweepResult with the formula value, the oracle value and the elapsed time
        """
        point_id = f"q={q},m={m},v={v}" if mode in ("hull", "dim") else f"q={q},r={m},v={v}"
        checks = {
            "hull": self.check_hull,
            "dim": self.check_dim,
            "recursion": self.check_recursion,
            "schur": self.check_schur,
            "blocks": self.check_blocks,
        }
        start = time.perf_counter()
        try:
            formula, oracle = checks[mode](q, m, v)
        except Exception as e:
            self.logger.error(f"Error checking {mode}: {e}", logger_name=self.name, point_id=point_id)
            exc_type, exc_obj, exc_tb = sys.exc_info()
            fname = os.path.split(exc_tb.tb_frame.f_code.co_filename)[1]
            self.logger.error(
                f"{exc_type} en {fname} línea {exc_tb.tb_lineno}",
                logger_name=self.name,
                point_id=point_id,
            )
            raise
        elapsed_ms = int((time.perf_counter() - start) * 1000)

        result = SweepResult(
            mode=mode,
            q=q,
            m=m,
            v=v,
            formula_hull_dim=formula,
            oracle_hull_dim=oracle,
            match=formula == oracle,
            elapsed_ms=elapsed_ms,
        )
        if result.match:
            self.logger.debug(f"{mode}: {formula} == {oracle}", logger_name=self.name, point_id=point_id)
        else:
            self.logger.warning(
                f"{mode} mismatch: formula {formula}, oracle {oracle}",
                logger_name=self.name,
                point_id=point_id,
            )
        return result

    def check_hull(self, q: int, m: int, v: int) -> Tuple[int, int]:
        report = formulas.hull_dim(q, m, v)
        k, oracle = linalg.hull_dim_oracle(field_new(q), m, v)
        if k != report.code_dim:
            self.logger.warning(
                f"rank(G1)={k} but code_dim={report.code_dim}",
                logger_name=self.name,
                point_id=f"q={q},m={m},v={v}",
            )
            return report.hull_dim, -1
        return report.hull_dim, oracle

    def check_dim(self, q: int, m: int, v: int) -> Tuple[int, int]:
        expected = formulas.sorensen_dim(q, m, v)
        if len(enumerate_G(q, m, v)) != expected:
            return expected, -1
        return expected, linalg.rank(linalg.full_monomial_matrix(field_new(q), m, v))

    def check_recursion(self, q: int, r: int, v: int) -> Tuple[int, int]:
        value = formulas.delta(q, r, v)
        routes = [formulas.delta_closed_chain(q, r, v), formulas.delta_explicit(q, r, v)]
        if r >= 2:
            routes.append(formulas.A_formula(q, r, v) + formulas.delta(q, r - 2, v - (q - 1)))
        if any(x != value for x in routes):
            self.logger.warning(
                f"delta routes disagree: {value} vs {routes}",
                logger_name=self.name,
                point_id=f"q={q},r={r},v={v}",
            )
            return value, -1
        P = IntervalParams(q=q, r=r, v=v)
        return value, linalg.rank(linalg.support_block(field_new(q), P))

    def check_schur(self, q: int, r: int, v: int) -> Tuple[int, int]:
        F = field_new(q)
        P = IntervalParams(q=q, r=r, v=v)
        try:
            holds = linalg.verify_schur_zero(F, P) and linalg.factorization_holds(F, P)
        except SingularMatrixError as e:
            self.logger.warning(f"{e}", logger_name=self.name, point_id=f"q={q},r={r},v={v}")
            holds = False
        return 1, int(holds)

    def check_blocks(self, q: int, r: int, v: int) -> Tuple[int, int]:
        F = field_new(q)
        P = IntervalParams(q=q, r=r, v=v)
        family = E_set(P)
        try:
            block = linalg.principal_block(F, P, family)
        except KeyError:
            # E_r(v) leaves the active set
            return formulas.delta(q, r, v), -1
        size = linalg.rank(block)
        return formulas.delta(q, r, v), size if size == len(family) else -1

    def sweep(
        self, mode: str, q_list: Sequence[int], m_max: int, jobs: int = 1
    ) -> Iterator[SweepResult]:
        """Run every point of a sweep, yielding results in point order."""
        points = sweep_points(mode, q_list, m_max)
        self.logger.info(
            f"Starting {mode} sweep: {len(points)} points, {jobs} job(s)",
            logger_name=self.name,
        )
        if jobs <= 1:
            for point in points:
                yield self.check(*point)
            return
        # los workers heredan el nivel del logger del servicio
        worker = functools.partial(run_point, log_level=self.logger.logger.getEffectiveLevel())
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map() keeps submission order
            yield from pool.map(worker, points)


def run_point(point: SweepPoint, log_level=None) -> SweepResult:
    """Process-pool entry point: one point, checked with the process's own logger"""
    return VerificationService(HullLogger("verify", log_level=log_level)).check(*point)


def validate_fields(q_list: Sequence[int]) -> None:
    """Fail before sweeping when any requested field cannot be built."""
    for q in q_list:
        field_new(q)
