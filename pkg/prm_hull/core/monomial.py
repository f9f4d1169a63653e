"""
Monomial index families for PRM codes and their support blocks.

Exponent vectors are plain tuples. Ambient vectors have length m+1 (x_0..x_m);
local vectors have length r+1 and live in the last r+1 variables z_0..z_r.
"""
import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple, Union

from prm_hull.core.exceptions import (
    ConstantMonomialError,
    DegreeOutOfRangeError,
    DimensionMismatchError,
    IntervalMismatchError,
    NotReducibleError,
)

ExponentVector = Tuple[int, ...]


class BoundaryTag(Enum):
    """Q divides 2v: no open interval I_r contains v."""

    BOUNDARY = "boundary"


def interval_index(q: int, v: int) -> Union[int, BoundaryTag]:
    Q = q - 1
    if (2 * v) % Q == 0:
        return BoundaryTag.BOUNDARY
    return (2 * v) // Q


@dataclass(frozen=True)
class IntervalParams:
    """Degree v inside the open interval I_r = (rQ/2, (r+1)Q/2)."""

    q: int
    r: int
    v: int

    def __post_init__(self):
        Q = self.q - 1
        if self.r < 0 or not (self.r * Q < 2 * self.v < (self.r + 1) * Q):
            raise IntervalMismatchError(
                f"v={self.v} is not in I_{self.r} for q={self.q}"
            )

    @classmethod
    def from_degree(cls, q: int, v: int) -> "IntervalParams":
        r = interval_index(q, v)
        if r is BoundaryTag.BOUNDARY:
            raise IntervalMismatchError(f"v={v} is a boundary degree for q={q}")
        return cls(q=q, r=r, v=v)

    @property
    def Q(self) -> int:
        return self.q - 1

    @property
    def beta(self) -> int:
        return 2 * self.v - self.r * self.Q

    @property
    def L(self) -> int:
        return self.r * self.Q - self.v

    @property
    def U(self) -> int:
        return self.v

    @property
    def u(self) -> int:
        return self.v - self.Q

    def lower(self) -> "IntervalParams":
        """Parameters of the lower interval I_{r-2} at u = v - Q."""
        return IntervalParams(q=self.q, r=self.r - 2, v=self.u)


def degree(a: ExponentVector) -> int:
    return sum(a)


def _descending(length: int, total: int) -> Iterator[ExponentVector]:
    if length == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _descending(length - 1, total - first):
            yield (first,) + rest


def enumerate_G1(m: int, v: int) -> List[ExponentVector]:
    """All degree-v exponent vectors in x_0..x_m, descending lex."""
    if m < 1 or v < 0:
        raise DegreeOutOfRangeError(f"need m >= 1 and v >= 0, got m={m}, v={v}")
    return list(_descending(m + 1, v))


def _is_reduced(a: ExponentVector, q: int) -> bool:
    first = next(i for i, x in enumerate(a) if x > 0)
    return all(x <= q - 1 for x in a[first + 1 :])


def enumerate_G(q: int, m: int, v: int) -> List[ExponentVector]:
    """
    Reduced monomial basis of PRM(q, m, v)

    Args:
        q: Field order
        m: Projective dimension
        v: Degree, 1 <= v <= m(q-1)

    Returns:
        The members of G1 whose exponents after the first positive one are at most q-1,
        in the order induced from G1
    """
    if v < 1 or v > m * (q - 1):
        raise DegreeOutOfRangeError(f"v={v} outside 1..{m * (q - 1)}")
    return [a for a in enumerate_G1(m, v) if _is_reduced(a, q)]


def top_tails(P: IntervalParams) -> List[ExponentVector]:
    """Tails a in [0,Q]^r with L <= |a| <= U, by increasing |a| then lex."""
    tails = [
        a
        for a in itertools.product(range(P.Q + 1), repeat=P.r)
        if P.L <= sum(a) <= P.U
    ]
    # product() is already lex, sort is stable
    return sorted(tails, key=sum)


def top_layer(P: IntervalParams) -> List[ExponentVector]:
    return [(P.v - sum(a),) + a for a in top_tails(P)]


def complement(P: IntervalParams, a: ExponentVector) -> ExponentVector:
    if len(a) != P.r or any(x < 0 or x > P.Q for x in a) or not P.L <= sum(a) <= P.U:
        raise DimensionMismatchError(f"{a} is not a top-layer tail for {P}")
    return tuple(P.Q - x for x in a)


def nonzero_index(Q: int, beta: int, c: ExponentVector) -> Optional[int]:
    """
    The index s of the nonzero-entry criterion for the exponent sums c, or None

    For v in an open interval the Gram entry of a pair with sums c is nonzero iff
    c vanishes before s, c_s is positive and congruent to beta mod Q, and every later
    c_j is a positive multiple of Q. The entry is then (-1)^(m-s).
    """
    positive = [i for i, x in enumerate(c) if x > 0]
    if not positive:
        return None
    s = positive[0]
    if c[s] % Q != beta % Q:
        return None
    if all(x > 0 and x % Q == 0 for x in c[s + 1 :]):
        return s
    return None


def _has_partner(P: IntervalParams, a: ExponentVector) -> bool:
    # Smallest admissible sums: every c_j after s is the least positive multiple of Q
    # that is >= a_j, which leaves the largest possible c_s.
    first = next(i for i, x in enumerate(a) if x > 0)
    need = [P.Q * max(1, -(-x // P.Q)) for x in a]
    suffix = 0
    for s in range(len(a) - 1, -1, -1):
        if s <= first and 2 * P.v - suffix >= max(a[s], 1):
            return True
        suffix += need[s]
    return False


@lru_cache(maxsize=256)
def _active_tuple(P: IntervalParams) -> Tuple[ExponentVector, ...]:
    top = top_layer(P)
    top_set = set(top)
    remainder = [
        a for a in _descending(P.r + 1, P.v) if a not in top_set and _has_partner(P, a)
    ]
    return tuple(top + remainder)


def active_set(P: IntervalParams) -> List[ExponentVector]:
    """
    Active monomials of degree v in z_0..z_r in the symmetric support order

    Top layer first (in the top-layer order), then the remainder in descending lex.
    Membership is decided by the nonzero-entry criterion, without evaluating anything.
    """
    return list(_active_tuple(P))


def remainder_set(P: IntervalParams) -> List[ExponentVector]:
    active = _active_tuple(P)
    return list(active[len(top_tails(P)) :])


def rightmost_lift(Q: int, M: ExponentVector) -> ExponentVector:
    positive = [j for j, x in enumerate(M) if x > 0]
    if not positive:
        raise ConstantMonomialError(f"{M} is constant")
    rho = positive[-1]
    return M[:rho] + (M[rho] + Q,) + M[rho + 1 :]


def reduce(Q: int, Y: ExponentVector) -> ExponentVector:
    """Divide by z_eta^Q, eta the rightmost tail variable with exponent above Q."""
    over = [j for j in range(1, len(Y)) if Y[j] > Q]
    if not over:
        raise NotReducibleError(f"{Y} has no tail exponent above {Q}")
    eta = over[-1]
    return Y[:eta] + (Y[eta] - Q,) + Y[eta + 1 :]


def reduced_monomials(P: IntervalParams) -> List[ExponentVector]:
    """M_r(u): degree-u monomials in z_1..z_r, written as local vectors with z_0-exponent 0."""
    return [(0,) + t for t in _descending(P.r, P.u)]


def E_set(P: IntervalParams) -> List[ExponentVector]:
    """
    Recursive principal-block family E_r(v)

    E_0(v) = {z_0^v}, E_1(v) = T_1(v), and for r >= 2 the top layer followed by the
    rightmost lifts of E_{r-2}(v - Q), the lower family padded by z_0^0 z_1^0.
    """
    if P.r == 0:
        return [(P.v,)]
    if P.r == 1:
        return top_layer(P)
    lower = E_set(P.lower())
    return top_layer(P) + [rightmost_lift(P.Q, (0, 0) + L) for L in lower]
