"""Partitions as exponent vectors ``alpha = (a_1, ..., a_k)`` with ``sum j*a_j = n``."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

ExponentVector = tuple  # tuple[int, ...], position j-1 holds the multiplicity of part j


def weighted_sum(alpha: Sequence[int]) -> int:
    return sum((j + 1) * a for j, a in enumerate(alpha))


def size(alpha: Sequence[int]) -> int:
    return sum(alpha)


def monomial_key(alpha: Sequence[int]) -> tuple:
    """Canonical print order: lexicographic on the reversed exponent vector.

    This puts monomials using only ``t1`` first, then those whose largest
    variable is ``t2``, and so on; within a block higher ``t1`` powers come
    first.  ``t1^5, t1^3*t2, t1*t2^2, t1^2*t3, ...``
    """
    return tuple(reversed(alpha))


@lru_cache(maxsize=None)
def _partitions(n: int, k: int) -> tuple:
    if k == 0:
        return ((),) if n == 0 else ()
    out = []
    for a in range(n // k + 1):
        for rest in _partitions(n - a * k, k - 1):
            out.append(rest + (a,))
    return tuple(out)


def enumerate_partitions(n: int, k: int) -> list[ExponentVector]:
    """All exponent vectors of length ``k`` whose weighted sum is ``n``."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return sorted(_partitions(n, k), key=monomial_key)


def count_partitions(n: int, k: int) -> int:
    """P(n, k) from the recurrence P(n,k) = P(n-k,k) + P(n,k-1)."""

    @lru_cache(maxsize=None)
    def P(n, k):
        if n == 0:
            return 1
        if n < 0 or k == 0:
            return 0
        return P(n - k, k) + P(n, k - 1)

    return P(n, k)


def multinomial(alpha: Sequence[int]) -> int:
    out = factorial(sum(alpha))
    for a in alpha:
        out //= factorial(a)
    return out


def weight_factor(alpha: Sequence[int], omega) -> Fraction:
    """``(sum a_j w_j) / (sum a_j)``; the empty partition gets weight 1.

    ``omega`` is anything indexable by 1-based part size via ``omega(j)``
    or a plain sequence (0-based positions).
    """
    total = sum(alpha)
    if total == 0:
        return Fraction(1)
    get = omega if callable(omega) else (lambda j: omega[j - 1])
    num = sum(a * get(j + 1) for j, a in enumerate(alpha) if a)
    return Fraction(num, total)
