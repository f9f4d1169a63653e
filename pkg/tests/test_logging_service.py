import pytest

from prm_hull.core.exceptions import SingularMatrixError
from prm_hull.services.logging_service import ErrorFormatter, HullLogger, timed


def test_logger_is_a_singleton_per_name():
    assert HullLogger("tests") is HullLogger("tests")
    assert HullLogger("tests") is not HullLogger("verify")


def test_log_level_override():
    logger = HullLogger("tests-level", log_level="ERROR")
    assert logger.logger.level == 40
    assert logger.logger.propagate is False
    assert len(logger.logger.handlers) == 1
    HullLogger("tests-level", log_level="DEBUG")
    assert len(logger.logger.handlers) == 1


def test_timed_returns_and_reraises(logger):
    @timed(logger)
    def double(x):
        return 2 * x

    @timed(logger)
    def fail():
        raise SingularMatrixError("2x2 matrix is singular")

    assert double(21) == 42
    assert double.__name__ == "double"
    with pytest.raises(SingularMatrixError):
        fail()


def test_error_formatter():
    try:
        raise SingularMatrixError("2x2 matrix is singular")
    except SingularMatrixError as e:
        error = ErrorFormatter().format_error(e, function_name="export")
    assert error["error"] is True
    assert error["error_type"] == "SingularMatrixError"
    assert error["error_technical_message"] == "2x2 matrix is singular"
    assert error["error_function"] == "export"
    assert isinstance(error["error_line"], int)

    unknown = ErrorFormatter().format_error(function_name="hull")
    assert unknown["error_type"] == "CustomError"
