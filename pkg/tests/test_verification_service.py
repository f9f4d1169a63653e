import logging

import pytest

from prm_hull.core.exceptions import IntervalMismatchError, NotPrimePowerError
from prm_hull.services import verification_service
from prm_hull.services.export_service import ExportService
from prm_hull.services.logging_service import HullLogger
from prm_hull.services.verification_service import (
    VerificationService,
    open_interval_degrees,
    run_point,
    sweep_points,
    validate_fields,
)


def test_open_interval_degrees():
    assert open_interval_degrees(4, 2) == [4]
    assert open_interval_degrees(9, 3) == [13, 14, 15]
    assert open_interval_degrees(5, 0) == [1]
    for r in range(5):
        assert open_interval_degrees(2, r) == []
        assert open_interval_degrees(3, r) == []


def test_sweep_points_order():
    points = sweep_points("dim", [2, 3], 2)
    assert len(points) == 9
    assert points[0] == ("dim", 2, 1, 1)
    assert points[3] == ("dim", 3, 1, 1)
    assert points[-1] == ("dim", 3, 2, 4)

    hull = sweep_points("hull", [4], 1)
    assert [v for _, _, _, v in hull] == [0, 1, 2, 3, 4]

    schur = sweep_points("schur", [4, 5], 3)
    assert schur == [("schur", 4, 2, 4), ("schur", 4, 3, 5), ("schur", 5, 2, 5), ("schur", 5, 3, 7)]

    with pytest.raises(ValueError):
        sweep_points("weights", [4], 2)


def test_validate_fields():
    validate_fields([2, 4, 9])
    with pytest.raises(NotPrimePowerError):
        validate_fields([4, 6])


@pytest.mark.parametrize(
    "mode, q, m, v",
    [
        ("hull", 3, 3, 4),
        ("hull", 4, 2, 0),
        ("hull", 4, 2, 7),
        ("dim", 5, 2, 3),
        ("recursion", 5, 3, 7),
        ("recursion", 4, 0, 1),
        ("schur", 4, 2, 4),
        ("blocks", 5, 3, 7),
    ],
)
def test_check_matches(logger, mode, q, m, v):
    result = VerificationService(logger).check(mode, q, m, v)
    assert result.match
    assert result.formula_hull_dim == result.oracle_hull_dim
    assert (result.mode, result.q, result.m, result.v) == (mode, q, m, v)
    assert result.elapsed_ms >= 0


def test_check_reraises(logger):
    with pytest.raises(IntervalMismatchError):
        VerificationService(logger).check("schur", 4, 2, 3)


def test_sweep_is_in_point_order(logger):
    service = VerificationService(logger)
    rows = list(service.sweep("recursion", [4, 5], 3))
    assert [(r.q, r.m, r.v) for r in rows] == [
        (q, m, v) for _, q, m, v in sweep_points("recursion", [4, 5], 3)
    ]
    assert all(r.match for r in rows)


def test_parallel_sweep_matches_serial(logger):
    service = VerificationService(logger)
    serial = [r.model_dump(exclude={"elapsed_ms"}) for r in service.sweep("dim", [2, 3, 4], 2)]
    parallel = [
        r.model_dump(exclude={"elapsed_ms"}) for r in service.sweep("dim", [2, 3, 4], 2, jobs=2)
    ]
    assert parallel == serial


def test_export_E(logger):
    assert ExportService(logger).export(4, 2, 2, "E") == "1,1\n0,2\n"


def test_export_matrices(logger):
    service = ExportService(logger)
    text = service.export(4, 1, 2, "G1")
    lines = text.splitlines()
    assert len(lines) == 3
    assert all(len(line.split(" ")) == 5 for line in lines)
    assert lines[0] == "1 1 1 1 0"
    assert service.export(4, 1, 2, "G1") == text

    P = service.export(4, 1, 2, "P")
    assert P == "1 0\n1 1\n"
    assert service.export(4, 1, 4, "W").count("\n") == 12


def test_export_errors(logger):
    service = ExportService(logger)
    with pytest.raises(ValueError):
        service.export(4, 2, 2, "H")
    with pytest.raises(IntervalMismatchError):
        service.export(4, 2, 3, "S")


class _InlinePool:
    """Runs map() in this process and remembers the function it was given."""

    submitted = []

    def __init__(self, max_workers=None):
        pass

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False

    def map(self, fn, iterable):
        self.submitted.append(fn)
        return map(fn, iterable)


def test_parallel_workers_inherit_log_level(monkeypatch):
    monkeypatch.setattr(verification_service, "ProcessPoolExecutor", _InlinePool)
    _InlinePool.submitted.clear()
    service = VerificationService(HullLogger("tests.debug", log_level="DEBUG"))
    try:
        rows = list(service.sweep("dim", [2], 1, jobs=2))
        assert [r.match for r in rows] == [True]
        worker = _InlinePool.submitted[0]
        assert worker.keywords["log_level"] == logging.DEBUG
        assert HullLogger("verify").logger.level == logging.DEBUG
    finally:
        HullLogger("verify")


def test_run_point_uses_given_level():
    try:
        result = run_point(("dim", 3, 1, 2), log_level="WARNING")
        assert result.match
        assert HullLogger("verify").logger.level == logging.WARNING
    finally:
        HullLogger("verify")
