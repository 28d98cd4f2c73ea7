"""q-combinatorics over exact rationals.

Everything is built on the summation form [k]_q = 1 + q + ... + q^(k-1),
which is exact for every rational q > 0 and needs no special case at q = 1,
where it reduces to the ordinary integer k.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .scalars import Regime, as_qparam


def _check_index(k: int, name: str = "k") -> int:
    if isinstance(k, bool) or not isinstance(k, int):
        raise DomainError(f"{name} must be an integer, got {k!r}")
    if k < 0:
        raise DomainError(f"{name} must be non-negative, got {k}")
    return k


def q_number(k: int, q) -> Fraction:
    """[k]_q = 1 + q + ... + q^(k-1); equals (1 - q^k)/(1 - q) for q != 1."""
    _check_index(k)
    v = as_qparam(q).value
    total = Fraction(0)
    power = Fraction(1)
    for _ in range(k):
        total += power
        power *= v
    return total


def q_factorial(k: int, q) -> Fraction:
    """[k]_q! = [k]_q [k-1]_q ... [1]_q, with the empty product [0]_q! = 1."""
    _check_index(k)
    v = as_qparam(q).value
    out = Fraction(1)
    number = Fraction(0)
    power = Fraction(1)
    for _ in range(k):
        number += power
        power *= v
        out *= number
    return out


class QFactorialTable:
    """Immutable table of [k]_q! for k = 0..max_order.

    Built once in O(max_order) scalar steps; Gaussian binomials via the
    factorial quotient are then O(1) big-rational operations per query,
    which is what batch sweeps and the q-exponential builder use.
    """

    __slots__ = ("q", "values")

    def __init__(self, q, max_order: int):
        _check_index(max_order, "max_order")
        self.q = as_qparam(q)
        values = [Fraction(1)]
        number = Fraction(0)
        power = Fraction(1)
        for _ in range(max_order):
            number += power
            power *= self.q.value
            values.append(values[-1] * number)
        self.values = tuple(values)

    @property
    def max_order(self) -> int:
        return len(self.values) - 1

    def factorial(self, k: int) -> Fraction:
        """[k]_q! from the table (k <= max_order)."""
        return self.values[_check_index(k)]

    def binomial(self, k: int, j: int) -> Fraction:
        """Gaussian binomial [k choose j]_q; zero outside 0 <= j <= k."""
        _check_index(k)
        if j < 0 or j > k:
            return Fraction(0)
        return self.values[k] / (self.values[j] * self.values[k - j])


def q_binomial(k: int, j: int, q) -> Fraction:
    """Gaussian binomial [k choose j]_q = [k]_q! / ([j]_q! [k-j]_q!).

    Zero for j outside 0..k; symmetric under j <-> k-j; positive otherwise.
    """
    _check_index(k)
    if j < 0 or j > k:
        return Fraction(0)
    return QFactorialTable(q, k).binomial(k, j)


@lru_cache(maxsize=1 << 16)
def _pascal_entry(k: int, j: int, q_value: Fraction) -> Fraction:
    if j == 0 or j == k:
        return Fraction(1)
    return (q_value ** j) * _pascal_entry(k - 1, j, q_value) + _pascal_entry(k - 1, j - 1, q_value)


def q_binomial_pascal(k: int, j: int, q) -> Fraction:
    """Gaussian binomial via the Pascal-type recursion

        [k choose j]_q = q^j [k-1 choose j]_q + [k-1 choose j-1]_q.

    An independent route kept as a cross-check oracle; it must agree with
    :func:`q_binomial` everywhere. Memoized, so triangle sweeps are cheap.
    """
    _check_index(k)
    if j < 0 or j > k:
        return Fraction(0)
    return _pascal_entry(k, j, as_qparam(q).value)


def radius_of_convergence(q) -> "Fraction | float":
    """Radius of convergence of the q-exponential series.

    (1 - q)^(-1) for 0 < q < 1; infinite for q >= 1, where the series
    converges for every finite argument.
    """
    qp = as_qparam(q)
    if qp.regime is Regime.SUB_ONE:
        return 1 / (1 - qp.value)
    return math.inf
