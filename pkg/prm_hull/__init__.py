"""Hull dimensions of projective Reed-Muller codes."""

__version__ = "1.0.0"
