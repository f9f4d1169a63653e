"""
Dense exact matrices over GF(q): evaluation and Gram matrices, the structured
support blocks and exact rank, inverse and row basis by Gaussian elimination.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from prm_hull.constants import Limits
from prm_hull.core.exceptions import DimensionMismatchError, SingularMatrixError
from prm_hull.core.gf import FieldElement, FiniteField, field_new, sigma
from prm_hull.core.monomial import (
    ExponentVector,
    IntervalParams,
    active_set,
    complement,
    enumerate_G,
    enumerate_G1,
    reduce,
    reduced_monomials,
    rightmost_lift,
    top_layer,
    top_tails,
)
from prm_hull.core.projspace import points_array


@dataclass(frozen=True, eq=False)
class MatrixFq:
    """Row-major matrix of element indices over a fixed field"""

    field: FiniteField
    data: np.ndarray

    def __post_init__(self):
        if self.data.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-d array, got shape {self.data.shape}")
        if self.data.dtype != np.uint8:
            object.__setattr__(self, "data", self.data.astype(np.uint8))

    @classmethod
    def zeros(cls, F: FiniteField, rows: int, cols: int) -> "MatrixFq":
        return cls(F, np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, F: FiniteField, size: int) -> "MatrixFq":
        return cls(F, np.eye(size, dtype=np.uint8))

    @classmethod
    def from_rows(cls, F: FiniteField, rows: Sequence[Sequence[int]]) -> "MatrixFq":
        return cls(F, np.array(rows, dtype=np.uint8).reshape(len(rows), -1))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def T(self) -> "MatrixFq":
        return MatrixFq(self.field, self.data.T.copy())

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "MatrixFq":
        return MatrixFq(self.field, self.data[np.ix_(list(rows), list(cols))])

    def is_zero(self) -> bool:
        return not self.data.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return self.field is other.field and np.array_equal(self.data, other.data)

    def __matmul__(self, other: "MatrixFq") -> "MatrixFq":
        return matmul(self, other)

    def tolist(self) -> List[List[int]]:
        return self.data.tolist()


def matmul(A: MatrixFq, B: MatrixFq) -> MatrixFq:
    """
    Exact product over GF(q)

    Each operand is split into its e coefficient planes over GF(p); the e^2 plane
    products run as float64 BLAS products (exact while inner * (p-1)^2 < 2^53) and
    the result is reduced modulo the field modulus.
    """
    if A.cols != B.rows:
        raise DimensionMismatchError(f"cannot multiply {A.data.shape} by {B.data.shape}")
    F = A.field
    p, e = F.p, F.e
    # only inner indices where both operands can contribute
    inner = np.flatnonzero(A.data.any(axis=0) & B.data.any(axis=1))
    if inner.size == 0:
        return MatrixFq.zeros(F, A.rows, B.cols)
    planes_a = F.digits[A.data[:, inner]].astype(np.float64)
    planes_b = F.digits[B.data[inner, :]].astype(np.float64)

    acc = np.zeros((A.rows, B.cols, 2 * e - 1), dtype=np.int64)
    for i in range(e):
        for j in range(e):
            acc[:, :, i + j] += np.rint(planes_a[:, :, i] @ planes_b[:, :, j]).astype(np.int64)
    acc %= p
    # x^k = x^(k-e) * x^e and x^e = -(f_0 + ... + f_{e-1} x^(e-1))
    low = np.array(F.modulus[:e], dtype=np.int64)
    for k in range(2 * e - 2, e - 1, -1):
        top = acc[:, :, k].copy()
        acc[:, :, k] = 0
        acc[:, :, k - e : k] = (acc[:, :, k - e : k] - top[:, :, None] * low) % p
    weights = p ** np.arange(e)
    return MatrixFq(F, (acc[:, :, :e] @ weights).astype(np.uint8))


def _eliminate(F: FiniteField, data: np.ndarray, full: bool) -> Tuple[np.ndarray, List[int]]:
    # Row echelon form (reduced when full=True); returns the form and pivot columns.
    A = data.astype(np.uint8).copy()
    n_rows, n_cols = A.shape
    prime = F.e == 1
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        candidates = np.flatnonzero(A[r:, c])
        if candidates.size == 0:
            continue
        pivot = r + int(candidates[0])
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        A[r] = F.mul_table[F.inv_table[A[r, c]], A[r]]

        column = A[:, c].copy()
        column[r] = 0
        if not full:
            column[:r] = 0
        targets = np.flatnonzero(column)
        if targets.size:
            factors = column[targets]
            if prime:
                update = A[targets].astype(np.int64) - factors[:, None].astype(np.int64) * A[r].astype(np.int64)
                A[targets] = (update % F.p).astype(np.uint8)
            else:
                products = F.mul_table[factors[:, None], A[r][None, :]]
                A[targets] = F.add_table[A[targets], F.neg_table[products]]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M: MatrixFq) -> int:
    """Rank over GF(q); M is left untouched."""
    if M.rows == 0 or M.cols == 0:
        return 0
    _, pivots = _eliminate(M.field, M.data, full=False)
    return len(pivots)


def row_basis(M: MatrixFq) -> MatrixFq:
    """A basis of the row space: the nonzero rows of an echelon form of M."""
    if M.rows == 0 or M.cols == 0:
        return MatrixFq.zeros(M.field, 0, M.cols)
    echelon, pivots = _eliminate(M.field, M.data, full=False)
    return MatrixFq(M.field, echelon[: len(pivots)])


def inverse(M: MatrixFq) -> MatrixFq:
    if M.rows != M.cols:
        raise DimensionMismatchError(f"cannot invert a {M.rows}x{M.cols} matrix")
    n = M.rows
    augmented = np.concatenate([M.data, np.eye(n, dtype=np.uint8)], axis=1)
    reduced, pivots = _eliminate(M.field, augmented, full=True)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError(f"{n}x{n} matrix is singular")
    return MatrixFq(M.field, reduced[:, n:])


def evaluation_matrix(F: FiniteField, m: int, monomials: Sequence[ExponentVector]) -> MatrixFq:
    """
    Evaluate monomials at the standard representatives of P^m(F_q)

    Args:
        F: Ambient field
        m: Projective dimension
        monomials: Exponent vectors of length m+1

    Returns:
        MatrixFq with one row per monomial and one column per point, 0^0 = 1
    """
    points = points_array(F, m)
    data = np.ones((len(monomials), points.shape[0]), dtype=np.uint8)
    cache: Dict[int, np.ndarray] = {}
    for row, a in enumerate(monomials):
        if len(a) != m + 1:
            raise DimensionMismatchError(f"monomial {a} does not have {m + 1} exponents")
        for i, d in enumerate(a):
            if d == 0:
                continue
            if d not in cache:
                cache[d] = F.power_vector(d)
            data[row] = F.mul_table[data[row], cache[d][points[:, i]]]
    return MatrixFq(F, data)


def gram(M: MatrixFq) -> MatrixFq:
    return M @ M.T


def gram_entry(F: FiniteField, m: int, a: ExponentVector, b: ExponentVector) -> FieldElement:
    """
    Closed-form inner product of ev(X^a) and ev(X^b)

    Sums, over the position j of the first nonzero coordinate, the product of 0^c_i for
    i < j and sigma(c_t) for t > j, where c = a + b and 0^0 = 1.
    """
    if len(a) != m + 1 or len(b) != m + 1:
        raise DimensionMismatchError(f"exponent vectors must have {m + 1} entries")
    if sum(a) != sum(b):
        raise DimensionMismatchError(f"degrees differ: {sum(a)} != {sum(b)}")
    c = [x + y for x, y in zip(a, b)]
    total = 0
    for j in range(m + 1):
        if any(c[:j]):
            break
        term = 1
        for t in range(j + 1, m + 1):
            term = F.mul(term, sigma(F, c[t]))
        total = F.add(total, term)
    return total


def gram_block(
    F: FiniteField,
    m: int,
    rows: Sequence[ExponentVector],
    cols: Sequence[ExponentVector],
) -> MatrixFq:
    """
    gram_entry over two whole monomial families at once

    sigma(c) is -1 exactly when c > 0 and Q | c, so every term of the entry formula is
    0 or (-1)^(m-j) and the entry is the image of an integer in the prime subfield.
    """
    if not rows or not cols:
        return MatrixFq.zeros(F, len(rows), len(cols))
    R = np.array(rows, dtype=np.int64).reshape(len(rows), -1)
    C = np.array(cols, dtype=np.int64).reshape(len(cols), -1)
    if R.shape[1] != m + 1 or C.shape[1] != m + 1:
        raise DimensionMismatchError(f"exponent vectors must have {m + 1} entries")
    signs = np.array([(-1) ** (m - j) for j in range(m + 1)], dtype=np.int64)
    out = np.empty((len(rows), len(cols)), dtype=np.uint8)
    for start in range(0, len(rows), Limits.GRAM_CHUNK_ROWS):
        S = R[start : start + Limits.GRAM_CHUNK_ROWS, None, :] + C[None, :, :]
        zero = S == 0
        good = (S > 0) & (S % F.Q == 0)
        # prefix[j]: c_i == 0 for all i < j ; suffix[j]: sigma(c_t) != 0 for all t > j
        prefix = np.ones_like(zero)
        prefix[..., 1:] = np.logical_and.accumulate(zero, axis=-1)[..., :-1]
        suffix = np.ones_like(good)
        suffix[..., :-1] = np.logical_and.accumulate(good[..., ::-1], axis=-1)[..., ::-1][..., 1:]
        total = (prefix & suffix).astype(np.int64) @ signs
        out[start : start + len(S)] = total % F.p
    return MatrixFq(F, out)


def generator_matrix(F: FiniteField, m: int, v: int) -> MatrixFq:
    """G: evaluation matrix over the reduced basis G."""
    return evaluation_matrix(F, m, enumerate_G(F.q, m, v))


def full_monomial_matrix(F: FiniteField, m: int, v: int) -> MatrixFq:
    """G1: evaluation matrix over all degree-v monomials."""
    return evaluation_matrix(F, m, enumerate_G1(m, v))


def _pad(vectors: Sequence[ExponentVector], width: int) -> List[ExponentVector]:
    return [(0,) * (width - len(a)) + tuple(a) for a in vectors]


def support_block(F: FiniteField, P: IntervalParams, ambient_m: Optional[int] = None) -> MatrixFq:
    """
    S_r^sym(v), the principal Gram block on the active set

    Computed on local vectors (m = r) unless ambient_m is given, in which case the
    active monomials are padded with m - r leading zeros and evaluated in P^m.
    """
    index = active_set(P)
    m = P.r if ambient_m is None else ambient_m
    if m < P.r:
        raise DimensionMismatchError(f"ambient m={m} is smaller than r={P.r}")
    index = _pad(index, m + 1)
    return gram_block(F, m, index, index)


def top_pairing_matrix(F: FiniteField, P: IntervalParams) -> MatrixFq:
    """P_r(v): rows M_a, columns the complement partners M_{bar b}, both in layer order."""
    rows = top_layer(P)
    cols = [(sum(b) - P.L,) + complement(P, b) for b in top_tails(P)]
    return gram_block(F, P.r, rows, cols)


def working_block(F: FiniteField, P: IntervalParams) -> Tuple[MatrixFq, int]:
    """
    W_r(v) = S_r^sym(v) diag(Pi, I) and the size of the top layer

    Column j < split of W is the column of S at the complement partner of the j-th
    top-layer monomial, so W[:split, :split] is P_r(v).
    """
    S = support_block(F, P)
    index = active_set(P)
    position = {a: i for i, a in enumerate(index)}
    tails = top_tails(P)
    split = len(tails)
    partner_cols = [position[(sum(b) - P.L,) + complement(P, b)] for b in tails]
    order = partner_cols + list(range(split, len(index)))
    return MatrixFq(F, S.data[:, order]), split


def _blocks(W: MatrixFq, split: int) -> Tuple[MatrixFq, MatrixFq, MatrixFq, MatrixFq]:
    n = W.rows
    top, rest = range(split), range(split, n)
    return (
        W.submatrix(top, top),
        W.submatrix(top, rest),
        W.submatrix(rest, top),
        W.submatrix(rest, rest),
    )


def verify_schur_zero(F: FiniteField, P: IntervalParams) -> bool:
    """
    Check C P^-1 B = 0 for the block decomposition of W_r(v)

    Raises:
        SingularMatrixError: the top pairing block fails to invert
    """
    W, split = working_block(F, P)
    P_block, B, C, _ = _blocks(W, split)
    P_inv = inverse(P_block)
    return (C @ (P_inv @ B)).is_zero()


def reduction_index(P: IntervalParams) -> Tuple[List[ExponentVector], List[ExponentVector]]:
    """Row index (the remainder of the active set) and column index (M_r(u)) of R."""
    index = active_set(P)
    return index[len(top_tails(P)) :], reduced_monomials(P)


def reduction_matrix(P: IntervalParams) -> MatrixFq:
    """
    The 0-1 matrix R over GF(q) with R[Y, M] = 1 iff M = red(Y)

    Rows and columns follow reduction_index(P).
    """
    remainder, targets = reduction_index(P)
    column = {M: j for j, M in enumerate(targets)}
    R = np.zeros((len(remainder), len(targets)), dtype=np.uint8)
    for i, Y in enumerate(remainder):
        R[i, column[reduce(P.Q, Y)]] = 1
    return MatrixFq(field_new(P.q), R)


def remainder_gram(F: FiniteField, P: IntervalParams) -> MatrixFq:
    """H_r(u), the full degree-u Gram matrix on M_r(u)."""
    targets = reduced_monomials(P)
    return gram_block(F, P.r, targets, targets)


def factorization_holds(F: FiniteField, P: IntervalParams) -> bool:
    """D = R H_r(u) R^T, entry by entry."""
    W, split = working_block(F, P)
    _, _, _, D = _blocks(W, split)
    R = MatrixFq(F, reduction_matrix(P).data)
    return (R @ remainder_gram(F, P) @ R.T) == D


def remainder_block(F: FiniteField, P: IntervalParams) -> MatrixFq:
    W, split = working_block(F, P)
    return _blocks(W, split)[3]


def corner_structure_holds(F: FiniteField, P: IntervalParams) -> bool:
    """
    P_r(v) minus its diagonal blocks is supported in the (U, L) corner block, and the
    diagonal blocks equal (-1)^r times the identity.
    """
    P_block = top_pairing_matrix(F, P).data
    levels = np.array([sum(a) for a in top_tails(P)])
    same = levels[:, None] == levels[None, :]
    sign = F.minus_one if P.r % 2 else 1
    expected_diag = np.where(np.eye(len(levels), dtype=bool), sign, 0)
    if not np.array_equal(np.where(same, P_block, 0), expected_diag):
        return False
    corner = (levels[:, None] == P.U) & (levels[None, :] == P.L)
    return not np.where(~same & ~corner, P_block, 0).any()


def lower_embedding_holds(F: FiniteField, P: IntervalParams) -> bool:
    """S_{r-2}^sym(u) is the principal submatrix of S_r^sym(v) on the lifted lower active set."""
    lower = P.lower()
    lifted = [rightmost_lift(P.Q, (0, 0) + L) for L in active_set(lower)]
    position = {a: i for i, a in enumerate(active_set(P))}
    if any(a not in position for a in lifted):
        return False
    idx = [position[a] for a in lifted]
    return support_block(F, P).submatrix(idx, idx) == support_block(F, lower)


def principal_block(F: FiniteField, P: IntervalParams, family: Sequence[ExponentVector]) -> MatrixFq:
    """Principal submatrix of S_r^sym(v) on a subfamily of the active set."""
    position = {a: i for i, a in enumerate(active_set(P))}
    idx = [position[a] for a in family]
    return support_block(F, P).submatrix(idx, idx)


def hull_dim_oracle(F: FiniteField, m: int, v: int) -> Tuple[int, int]:
    """
    Brute-force (k, hull dimension) of PRM(q, m, v)

    k = rank(G1) and the hull dimension is k - rank(B B^T) for a row basis B of G1,
    which has the Gram rank of G1 G1^T.
    """
    basis = row_basis(full_monomial_matrix(F, m, v))
    k = basis.rows
    return k, k - rank(gram(basis))
