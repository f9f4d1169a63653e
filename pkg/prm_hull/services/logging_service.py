import functools
import logging
import time
import traceback
from typing import Dict

from prm_hull.constants import Constants


class HullLogger:
    """A custom logger class that wraps Python's built-in logging functionality.
    This class provides a simplified interface for logging messages with different
    severity levels (info, error, warning, debug) to stderr, so that stdout stays
    free for JSON, TSV and matrix output. It automatically configures a stream
    handler with a standard formatting pattern.
    Args:
        name (str): The name of the logger instance.
        log_level (int | str, optional): The minimum logging level. Defaults to
            Constants.LOG_LEVEL. Use logging constants like logging.DEBUG or names
            like "DEBUG".
    Attributes:
        logger (logging.Logger): The underlying Logger instance from the logging module.
    Example:
        >>> logger = HullLogger("verify")
        >>> logger.info("Sweep started", point_id="q=4,m=3,v=4")
        2026-10-19 10:30:15,123 - q=4,m=3,v=4 - N/A  - INFO - Sweep started
    """

    # Remove duplicated logs
    _instances = {}

    def __new__(cls, name, *args, **kwargs):
        if name not in cls._instances:
            instance = super(HullLogger, cls).__new__(cls)
            instance.logger = logging.getLogger(name)
            cls._instances[name] = instance
        return cls._instances[name]

    def __init__(self, name: str, log_level=None):
        self.logger = logging.getLogger(name)
        self.logger.setLevel(log_level or Constants.LOG_LEVEL)
        self.logger.propagate = False

        handler_exists = any(
            isinstance(handler, logging.StreamHandler)
            for handler in self.logger.handlers
        )
        if not handler_exists:
            handler = logging.StreamHandler()
            formatter = logging.Formatter(
                "%(asctime)s - %(point_id)s - %(logger_name)s  - %(levelname)s - %(message)s"
            )
            handler.setFormatter(formatter)
            self.logger.addHandler(handler)

    def info(self, message, logger_name="N/A", point_id="N/A"):
        self.logger.info(
            message, extra={"point_id": point_id, "logger_name": logger_name}
        )

    def error(self, message, logger_name="N/A", point_id="N/A"):
        self.logger.error(
            message, extra={"point_id": point_id, "logger_name": logger_name}
        )

    def warning(self, message, logger_name="N/A", point_id="N/A"):
        self.logger.warning(
            message, extra={"point_id": point_id, "logger_name": logger_name}
        )

    def debug(self, message, logger_name="N/A", point_id="N/A"):
        self.logger.debug(
            message, extra={"point_id": point_id, "logger_name": logger_name}
        )


def timed(logger):
    """Decorador para medir el tiempo de ejecución de funciones"""

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            function_name = func.__name__
            logger.debug(f"Iniciando {function_name}", logger_name="timed")
            try:
                result = func(*args, **kwargs)
                total_time = time.perf_counter() - start_time
                logger.debug(
                    f"Función {function_name} completada en {total_time:.2f} segundos",
                    logger_name="timed",
                )
                return result
            except Exception as e:
                total_time = time.perf_counter() - start_time
                logger.error(
                    f"Función {function_name} falló después de {total_time:.2f} segundos: {str(e)}",
                    logger_name="timed",
                )
                raise

        return wrapper

    return decorator


class ErrorFormatter:
    def format_error(
        self, error=None, function_name: str = "", error_message: str = ""
    ) -> Dict:
        """Devuelve una respuesta de error estandarizada."""
        if isinstance(error, Exception):
            tb = traceback.extract_tb(error.__traceback__)
            error_line = tb[-1].lineno if tb else "N/A"
            error_file = tb[-1].filename if tb else "N/A"
            return {
                "error": True,
                "error_technical_message": str(error),
                "error_message": error_message or "invalid parameters, nothing was computed",
                "error_type": type(error).__name__,
                "error_function": function_name,
                "error_line": error_line,
                "error_file": error_file,
            }
        elif error is not None:
            return {
                "error": True,
                "error_technical_message": str(error),
                "error_message": error_message or "invalid parameters, nothing was computed",
                "error_type": type(error).__name__,
                "error_function": function_name,
            }
        else:
            return {
                "error": True,
                "error_message": error_message or "Error desconocido",
                "error_type": "CustomError",
                "error_function": function_name,
            }
