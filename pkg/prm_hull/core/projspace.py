"""
Standard representatives of P^m(F_q).

Points come stratum by stratum: first by the position j of the first nonzero
coordinate (ascending), then lexicographically by element index on the free
coordinates after j.
"""
import itertools
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from prm_hull.core.exceptions import DimensionMismatchError
from prm_hull.core.gf import FiniteField, factor_prime_power

ProjectivePoint = Tuple[int, ...]


def point_count(q: int, m: int) -> int:
    """n = (q^(m+1) - 1) / (q - 1), exact."""
    factor_prime_power(q)
    if m < 1:
        raise DimensionMismatchError(f"projective dimension m={m} must be >= 1")
    return (q ** (m + 1) - 1) // (q - 1)


def enumerate_points(F: FiniteField, m: int) -> List[ProjectivePoint]:
    if m < 1:
        raise DimensionMismatchError(f"projective dimension m={m} must be >= 1")
    points = []
    for j in range(m + 1):
        for free in itertools.product(range(F.q), repeat=m - j):
            points.append((0,) * j + (1,) + free)
    return points


@lru_cache(maxsize=64)
def points_array(F: FiniteField, m: int) -> np.ndarray:
    """The enumeration as a read-only (n, m+1) array of element indices."""
    array = np.array(enumerate_points(F, m), dtype=np.uint8).reshape(-1, m + 1)
    array.setflags(write=False)
    return array
