"""
Exact integer combinatorics for PRM codes: the top-layer count A_r(v), Sorensen's
dimension, the Delta recursion with its closed forms, and the hull-dimension cases.

Everything here is plain Python integers, no field arithmetic is involved.
"""
import itertools
import math
from functools import lru_cache

from prm_hull.core.exceptions import (
    DegreeOutOfRangeError,
    DimensionMismatchError,
    IntervalMismatchError,
)
from prm_hull.core.gf import factor_prime_power
from prm_hull.core.monomial import BoundaryTag, IntervalParams, interval_index
from prm_hull.core.projspace import point_count
from prm_hull.models.reports import CaseTag, HullReport


def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 when n < k or k < 0 (also for negative n)."""
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def _signed_count(q: int, r: int, low: int, high: int) -> int:
    # sum over low <= t <= high of the number of a in [0, Q]^r with |a| = t
    return sum(
        (-1) ** j * binom(r, j) * binom(t - j * q + r - 1, r - 1)
        for t in range(low, high + 1)
        for j in range(r + 1)
    )


def A_formula(q: int, r: int, v: int) -> int:
    """
    Size of the top layer by inclusion-exclusion

    Args:
        q: Field order
        r: Interval index, v must lie in I_r when r >= 1
        v: Degree

    Returns:
        A_r(v), with A_0(v) = 1

    Raises:
        IntervalMismatchError: r >= 1 and v is not in I_r
    """
    if r == 0:
        return 1
    P = IntervalParams(q=q, r=r, v=v)
    return _signed_count(q, r, P.L, P.U)


def A_enumerate(q: int, r: int, v: int) -> int:
    """
    Count a in [0, Q]^r with rQ - v <= |a| <= v, without inclusion-exclusion

    The distribution of |a| is built one coordinate at a time: each step convolves the
    current counts with the window [0, Q], so the cost is polynomial in r.
    """
    if r == 0:
        return 1
    Q = q - 1
    counts = [1]
    for _ in range(r):
        prefix = [0, *itertools.accumulate(counts)]
        last = len(counts) - 1
        counts = [prefix[min(s, last) + 1] - prefix[max(s - Q, 0)] for s in range(last + Q + 1)]
    low = r * Q - v
    return sum(counts[max(low, 0) : min(v, r * Q) + 1])


def sorensen_dim(q: int, m: int, v: int) -> int:
    """
    Dimension of PRM(q, m, v) for 1 <= v <= m(q-1)

    Sum over 0 < t <= v with t = v mod (q-1) of sum_j (-1)^j C(m+1, j) C(t - jq + m, m).
    """
    factor_prime_power(q)
    Q = q - 1
    if m < 1:
        raise DimensionMismatchError(f"projective dimension m={m} must be >= 1")
    if not 1 <= v <= m * Q:
        raise DegreeOutOfRangeError(f"v={v} outside 1..{m * Q}")
    return sum(
        (-1) ** j * binom(m + 1, j) * binom(t - j * q + m, m)
        for t in range(v % Q or Q, v + 1, Q)
        for j in range(m + 1)
    )


def code_dim(q: int, m: int, v: int) -> int:
    """k_{q,m}(v) for every v >= 0: 1 at v = 0 and n once the code is the whole space."""
    n = point_count(q, m)
    if v < 0:
        raise DegreeOutOfRangeError(f"v={v} must be >= 0")
    if v == 0:
        return 1
    if v > m * (q - 1):
        return n
    return sorensen_dim(q, m, v)


@lru_cache(maxsize=None)
def _delta(q: int, r: int, v: int) -> int:
    if r == 0:
        return 1
    if r == 1:
        return 2 * v - (q - 1) + 1
    return A_formula(q, r, v) + _delta(q, r - 2, v - (q - 1))


def delta(q: int, r: int, v: int) -> int:
    """
    Hull defect Delta_r(v) by the two-step recursion

    Args:
        q: Field order
        r: Interval index
        v: Degree in I_r

    Returns:
        Delta_r(v) = A_r(v) + Delta_{r-2}(v - Q), with Delta_0 = 1 and Delta_1 = 2v - Q + 1

    Raises:
        IntervalMismatchError: v is not in I_r
    """
    IntervalParams(q=q, r=r, v=v)
    return _delta(q, r, v)


def delta_closed_chain(q: int, r: int, v: int) -> int:
    """A_r(v) + A_{r-2}(v - Q) + ... down to A_1 or A_0 = 1."""
    IntervalParams(q=q, r=r, v=v)
    Q = q - 1
    ell, eps = divmod(r, 2)
    return sum(A_formula(q, 2 * i + eps, v - (ell - i) * Q) for i in range(ell + 1))


def delta_explicit(q: int, r: int, v: int) -> int:
    """Delta_r(v) as a single triple sum of binomials, one chain term per s."""
    IntervalParams(q=q, r=r, v=v)
    Q = q - 1
    ell, eps = divmod(r, 2)
    if eps == 0:
        return 1 + sum(
            _signed_count(q, 2 * s, (s + ell) * Q - v, v - (ell - s) * Q)
            for s in range(1, ell + 1)
        )
    return sum(
        _signed_count(q, 2 * s + 1, (s + ell + 1) * Q - v, v - (ell - s) * Q)
        for s in range(ell + 1)
    )


def _lower_open_interval(q: int, m: int, v: int) -> int:
    Q = q - 1
    if not 0 < 2 * v < m * Q:
        raise DegreeOutOfRangeError(f"v={v} is not in the open lower half (0, {m * Q}/2)")
    r = interval_index(q, v)
    if r is BoundaryTag.BOUNDARY:
        raise IntervalMismatchError(f"v={v} is a boundary degree for q={q}")
    return r


def lower_half_hull_dim(q: int, m: int, v: int) -> int:
    """k_{q,m}(v) - Delta_r(v) for 0 < v < mQ/2 with Q not dividing 2v."""
    r = _lower_open_interval(q, m, v)
    return sorensen_dim(q, m, v) - delta(q, r, v)


def abstract_form_hull_dim(q: int, m: int, v: int) -> int:
    """The lower-half hull dimension written as k minus one chain of A terms."""
    r = _lower_open_interval(q, m, v)
    Q = q - 1
    ell, eps = divmod(r, 2)
    chain = sum(A_formula(q, 2 * i + eps, v - (ell - i) * Q) for i in range(ell + 1))
    return sorensen_dim(q, m, v) - chain


def hull_dim(q: int, m: int, v: int) -> HullReport:
    """
    Hull dimension of PRM(q, m, v) for every v >= 0

    Args:
        q: Field order, a prime power
        m: Projective dimension, m >= 1
        v: Degree, v >= 0

    Returns:
        HullReport with the case tag, k, the defect in the open lower half and the hull dimension
    """
    n = point_count(q, m)
    if v < 0:
        raise DegreeOutOfRangeError(f"v={v} must be >= 0")
    Q = q - 1
    mQ = m * Q
    base = dict(q=q, m=m, v=v, length=n)

    if v == 0:
        # <1, 1> = n = 1 mod p
        return HullReport(**base, case_tag=CaseTag.ZERO_DEGREE, code_dim=1, hull_dim=0)
    if v > mQ:
        return HullReport(**base, case_tag=CaseTag.FULL_SPACE, code_dim=n, hull_dim=0)

    k = sorensen_dim(q, m, v)
    if v == mQ:
        return HullReport(**base, case_tag=CaseTag.ENDPOINT_LCD, code_dim=k, hull_dim=0)
    if 2 * v <= mQ and (2 * v) % Q == 0:
        return HullReport(
            **base, case_tag=CaseTag.SELF_ORTHOGONAL_BOUNDARY, code_dim=k, hull_dim=k
        )
    if 2 * v < mQ:
        r = interval_index(q, v)
        defect = delta(q, r, v)
        return HullReport(
            **base,
            case_tag=CaseTag.LOWER_OPEN,
            code_dim=k,
            defect=defect,
            hull_dim=k - defect,
            interval=r,
        )

    mu = mQ - v
    if v % Q:
        # the dual is PRM(q, m, mu), which shares the hull
        return HullReport(
            **base,
            case_tag=CaseTag.UPPER_OPEN_DUAL,
            code_dim=k,
            hull_dim=hull_dim(q, m, mu).hull_dim,
            dual_degree=mu,
        )
    return HullReport(
        **base,
        case_tag=CaseTag.UPPER_BOUNDARY_SONG_LUO,
        code_dim=k,
        hull_dim=sorensen_dim(q, m, mu),
        dual_degree=mu,
    )
