"""
Exact arithmetic in GF(q), q = p^e, driven by integer lookup tables.

Elements are the integers 0..q-1. The integer ``sum(c_i * p**i)`` stands for the
polynomial ``sum(c_i * x**i)`` modulo the field modulus, so index 0 is zero, index 1
is one and the prime subfield is 0..p-1.
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import List, Tuple

import numpy as np

from prm_hull.constants import Limits
from prm_hull.core.exceptions import FieldTooLargeError, NotPrimePowerError

FieldElement = int


def factor_prime_power(q: int) -> Tuple[int, int]:
    """
    Split a prime power into characteristic and degree

    Args:
        q: Candidate field order

    Returns:
        (p, e) with q = p**e

    Raises:
        NotPrimePowerError: q < 2 or q has two distinct prime factors
    """
    if q < 2:
        raise NotPrimePowerError(f"q={q} is not a prime power")
    p = q
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrimePowerError(f"q={q} is not a prime power")
    return p, e


def _poly_mod(a: List[int], b: List[int], p: int) -> List[int]:
    # coefficient lists, constant term first; b monic
    rem = list(a)
    db = len(b) - 1
    for shift in range(len(rem) - 1 - db, -1, -1):
        lead = rem[shift + db] % p
        if lead:
            for i, coeff in enumerate(b):
                rem[shift + i] = (rem[shift + i] - lead * coeff) % p
    return rem[:db]


def _is_irreducible(f: List[int], p: int) -> bool:
    e = len(f) - 1
    for d in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_mod(f, list(low) + [1], p)):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e, constant term compared first."""
    for low in itertools.product(range(p), repeat=e):
        candidate = list(low) + [1]
        if _is_irreducible(candidate, p):
            return tuple(candidate)
    raise NotPrimePowerError(f"no irreducible polynomial of degree {e} over GF({p})")


@dataclass(frozen=True, eq=False)
class FiniteField:
    """GF(q) with full addition, multiplication, negation and inverse tables"""

    p: int
    e: int
    q: int
    modulus: Tuple[int, ...]
    digits: np.ndarray
    add_table: np.ndarray
    mul_table: np.ndarray
    neg_table: np.ndarray
    inv_table: np.ndarray

    @property
    def Q(self) -> int:
        return self.q - 1

    @property
    def zero(self) -> FieldElement:
        return 0

    @property
    def one(self) -> FieldElement:
        return 1

    @property
    def minus_one(self) -> FieldElement:
        return int(self.neg_table[1])

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return int(self.add_table[a, b])

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return int(self.mul_table[a, b])

    def neg(self, a: FieldElement) -> FieldElement:
        return int(self.neg_table[a])

    def inv(self, a: FieldElement) -> FieldElement:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self.inv_table[a])

    def from_int(self, n: int) -> FieldElement:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    def power(self, a: FieldElement, d: int) -> FieldElement:
        result = 1
        base = a
        while d:
            if d & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            d >>= 1
        return result

    def power_vector(self, d: int) -> np.ndarray:
        """alpha**d for every alpha in the field, with 0**0 = 1."""
        result = np.ones(self.q, dtype=np.uint8)
        base = np.arange(self.q, dtype=np.uint8)
        while d:
            if d & 1:
                result = self.mul_table[result, base]
            base = self.mul_table[base, base]
            d >>= 1
        return result

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q}, p={self.p}, e={self.e}, modulus={self.modulus})"


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array, dtype=np.uint8)
    array.setflags(write=False)
    return array


@lru_cache(maxsize=None)
def field_new(q: int) -> FiniteField:
    """
    Build GF(q) from the smallest irreducible modulus

    Args:
        q: Field order, a prime power with 2 <= q <= 256

    Returns:
        FiniteField with fully populated tables

    Raises:
        NotPrimePowerError: q is not a prime power
        FieldTooLargeError: q > 256
    """
    p, e = factor_prime_power(q)
    if q > Limits.MAX_FIELD_ORDER:
        raise FieldTooLargeError(f"q={q} exceeds {Limits.MAX_FIELD_ORDER}")
    modulus = smallest_irreducible(p, e)

    index = np.arange(q)
    weights = p ** np.arange(e)
    digits = np.stack([(index // p**i) % p for i in range(e)], axis=1)

    add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    neg_table = ((-digits) % p) @ weights

    # shifts[i][a] = coefficients of a * x**i
    low = np.array(modulus[:e])
    shifts = [digits]
    for _ in range(1, e):
        prev = shifts[-1]
        top = prev[:, e - 1]
        nxt = np.concatenate([np.zeros((q, 1), dtype=prev.dtype), prev[:, : e - 1]], axis=1)
        shifts.append((nxt - top[:, None] * low[None, :]) % p)
    product_digits = np.einsum("bi,iak->abk", digits, np.stack(shifts)) % p
    mul_table = product_digits @ weights

    is_one = mul_table[1:, :] == 1
    assert is_one.sum(axis=1).tolist() == [1] * (q - 1), "modulus is not irreducible"
    inv_table = np.zeros(q, dtype=np.int64)
    inv_table[1:] = is_one.argmax(axis=1)

    return FiniteField(
        p=p,
        e=e,
        q=q,
        modulus=modulus,
        digits=_frozen(digits),
        add_table=_frozen(add_table),
        mul_table=_frozen(mul_table),
        neg_table=_frozen(neg_table),
        inv_table=_frozen(inv_table),
    )


def sigma(F: FiniteField, d: int) -> FieldElement:
    """Power sum of alpha**d over every alpha in GF(q), computed by summation."""
    return reduce(lambda acc, x: int(F.add_table[acc, x]), F.power_vector(d).tolist(), 0)


def sigma_closed_form(F: FiniteField, d: int) -> FieldElement:
    if d > 0 and d % F.Q == 0:
        return F.minus_one
    return 0
