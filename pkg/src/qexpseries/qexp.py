"""Jackson's q-exponential E_q(z) = sum_k z^k / [k]_q!.

Three views of the same object:

* the truncated series itself (:func:`qexp_series`);
* the coefficients c_k of its logarithm ln E_q(z) = sum_k c_k z^k, either in
  closed form c_k = (1-q)^(k-1) / (k [k]_q) or through the recursion those
  coefficients satisfy -- two independent routes that must agree exactly;
* guarded numeric evaluation of E_q and ln E_q with certified truncation
  bounds (:func:`eval_qexp`, :func:`eval_log_qexp`).

For 0 < q < 1 the series has radius of convergence (1-q)^(-1) and the
evaluators reject arguments on or outside it; for q >= 1 it converges
everywhere. With a rational argument the evaluators keep the partial sums
and the stopping test in exact arithmetic and round only the final value,
so the reported tail bound is honest; a float argument selects plain
binary64 arithmetic whose own rounding is outside the certificate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Literal, Union

from .errors import ConvergenceError, DomainError
from .qnumbers import QFactorialTable, q_number, radius_of_convergence
from .scalars import QParam, Regime, as_qparam, ensure_finite
from .series import TruncatedSeries

Scalar = Union[Fraction, int, float, complex]

DEFAULT_MAX_TERMS = 1000


@dataclass(frozen=True)
class QExpSeries:
    """E_q as a truncated exact series; coefficient k is 1/[k]_q!."""

    q: QParam
    series: TruncatedSeries


def qexp_series(q, order: int) -> QExpSeries:
    """Build the q-exponential series through z^order, exactly."""
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    qp = as_qparam(q)
    coeffs = [Fraction(1)]
    number = Fraction(0)
    power = Fraction(1)
    for _ in range(order):
        number += power
        power *= qp.value
        coeffs.append(coeffs[-1] / number)
    return QExpSeries(qp, TruncatedSeries(coeffs))


Provenance = Literal["closed_form", "recursion"]


@dataclass(frozen=True)
class LogCoeffVector:
    """Coefficients c_1..c_N of ln E_q(z) = sum_k c_k z^k (slot 0 holds 0)."""

    q: QParam
    values: "tuple[Fraction, ...]"
    provenance: Provenance

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def coeff(self, k: int) -> Fraction:
        if k < 1 or k > self.order:
            raise DomainError(f"k must be in 1..{self.order}, got {k}")
        return self.values[k]

    def as_series(self) -> TruncatedSeries:
        """The log series itself, ready for :meth:`TruncatedSeries.exp`."""
        return TruncatedSeries(self.values)


def log_coeff_closed(k: int, q) -> Fraction:
    """Closed form c_k = (1 - q)^(k-1) / (k [k]_q); c_1 = 1 for every q."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    qp = as_qparam(q)
    return (1 - qp.value) ** (k - 1) / (k * q_number(k, qp))


def log_coeffs_closed(order: int, q) -> LogCoeffVector:
    """Closed-form log coefficients c_1..c_order in one O(order) sweep."""
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    qp = as_qparam(q)
    values = [Fraction(0)]
    number = Fraction(0)     # [k]_q
    qpow = Fraction(1)       # q^(k-1)
    shift = Fraction(1)      # (1-q)^(k-1)
    one_minus = 1 - qp.value
    for k in range(1, order + 1):
        number += qpow
        qpow *= qp.value
        values.append(shift / (k * number))
        shift *= one_minus
    return LogCoeffVector(qp, tuple(values), "closed_form")


def log_coeffs_recursive(order: int, q) -> LogCoeffVector:
    """Log coefficients via the recursion they satisfy:

        c_1 = 1;   c_k = 1/[k]_q! - (1/k) * sum_{j=1}^{k-1} (j / [k-j]_q!) c_j.

    Computes the same values as :func:`log_coeffs_closed` by an independent
    O(order^2) route; exact agreement between the two is the library's
    central self-check.
    """
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    qp = as_qparam(q)
    inv_fact = [Fraction(1) / f for f in QFactorialTable(qp, order).values]
    c = [Fraction(0)] * (order + 1)
    c[1] = Fraction(1)
    for k in range(2, order + 1):
        acc = Fraction(0)
        for j in range(1, k):
            acc += j * inv_fact[k - j] * c[j]
        c[k] = inv_fact[k] - acc / k
    return LogCoeffVector(qp, tuple(c), "recursion")


@dataclass(frozen=True)
class Evaluation:
    """A certified partial-sum evaluation.

    ``order`` is the highest power included in the sum; ``tail_bound`` is a
    certified upper bound on the truncation error of ``value`` (for the
    rational-argument path it is exact up to the final binary64 rounding).
    """

    value: "float | complex"
    order: int
    tail_bound: float
    method: Literal["series", "log_of_qexp"] = "series"


def _radius_guard(qp: QParam, z_abs) -> None:
    if qp.regime is Regime.SUB_ONE:
        radius = radius_of_convergence(qp)
        if z_abs >= radius:
            raise DomainError(
                f"|z| = {z_abs} is outside the radius of convergence "
                f"(1-q)^(-1) = {radius} for q = {qp}"
            )


def _split_argument(z):
    """Classify the argument: exact rationals keep exact partial sums."""
    if isinstance(z, Rational):
        return Fraction(z), True
    if isinstance(z, (int, float)):
        return ensure_finite(complex(z)).real, False
    if isinstance(z, complex):
        return ensure_finite(z), False
    raise DomainError(f"unsupported argument type {type(z).__name__}")


def eval_qexp(q, z: Scalar, tol: float = 1e-12,
              max_terms: int = DEFAULT_MAX_TERMS) -> Evaluation:
    """Evaluate E_q(z) by partial summation with a certified tail bound.

    Stops at the first K where r = |z| / [K+2]_q < 1 and
    |t_{K+1}| / (1 - r) <= tol, where t_k = z^k/[k]_q! is the first omitted
    term. The geometric majorant is sound because [k]_q increases with k,
    so every later term ratio is at most r.
    """
    qp = as_qparam(q)
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    z, is_exact = _split_argument(z)
    z_abs = abs(z)
    _radius_guard(qp, z_abs)
    tol_cmp = Fraction(tol) if is_exact else tol

    term = Fraction(1) if is_exact else 1.0   # t_k, starting at t_0
    total = term
    qn = Fraction(1)          # [k+1]_q while summing through z^k
    qpow = qp.value           # q^(k+1)
    k = 0
    while True:
        nxt = term * z / (qn if is_exact else float(qn))
        qn_next = qn + qpow   # [k+2]_q
        r = z_abs / (qn_next if is_exact else float(qn_next))
        if r < 1:
            bound = abs(nxt) / (1 - r)
            if bound <= tol_cmp:
                value = float(total) if is_exact else total
                return Evaluation(value, k, float(bound), "series")
        total = total + nxt
        term = nxt
        qn = qn_next
        qpow *= qp.value
        k += 1
        if k >= max_terms:
            raise ConvergenceError(
                f"tail bound did not reach tol={tol} within {max_terms} terms"
            )


def eval_log_qexp(q, z: Scalar, tol: float = 1e-12,
                  max_terms: int = DEFAULT_MAX_TERMS) -> Evaluation:
    """Evaluate ln E_q(z) = sum_{k>=1} c_k(q) z^k with a certified bound.

    Successive term ratios are capped by r = |z|(1-q) for q <= 1 and by
    r = |z|(q-1)/q for q > 1 (both follow from k/(k+1) < 1 and the
    monotonicity bound [k]_q/[k+1]_q <= 1/q for q >= 1), giving a geometric
    tail majorant whenever the cap is below 1. For q > 1 outside that disk
    (|z| >= q/(q-1)) the value falls back to log(eval_qexp(z)); the
    ``method`` field reports which path produced the result.
    """
    qp = as_qparam(q)
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    z, is_exact = _split_argument(z)
    z_abs = abs(z)
    _radius_guard(qp, z_abs)
    v = qp.value

    if qp.regime is Regime.SUPER_ONE:
        r_cap = z_abs * (v - 1) / v
    else:
        r_cap = z_abs * (1 - v)
    if r_cap >= 1:
        if qp.regime is Regime.SUPER_ONE:
            return _log_via_qexp(qp, z, tol, max_terms)
        # float rounding pushed |z|(1-q) onto 1 right at the radius
        raise DomainError(
            f"|z| = {z_abs} is too close to the radius of convergence for a "
            f"certified log series at q = {qp}; pass z as an exact rational"
        )
    tol_cmp = Fraction(tol) if is_exact else tol

    total = Fraction(0) if is_exact else 0.0
    one_minus = 1 - v
    qn = Fraction(1)      # [k]_q
    qpow = v              # q^k
    shift = Fraction(1)   # (1-q)^(k-1)
    zpow = z              # z^k
    k = 1
    while True:
        c_k = shift / (k * qn)
        total = total + (c_k if is_exact else float(c_k)) * zpow
        shift *= one_minus
        qn += qpow
        qpow *= v
        zpow = zpow * z
        k += 1
        c_next = shift / (k * qn)
        bound = abs((c_next if is_exact else float(c_next)) * zpow) / (1 - r_cap)
        if bound <= tol_cmp:
            value = float(total) if is_exact else total
            return Evaluation(value, k - 1, float(bound), "series")
        if k > max_terms:
            raise ConvergenceError(
                f"tail bound did not reach tol={tol} within {max_terms} terms"
            )


def _log_via_qexp(qp: QParam, z, tol: float, max_terms: int) -> Evaluation:
    """log(E_q(z)) with the log-propagation error kept under tol.

    Two passes: an absolute-tolerance evaluation of E_q(z), then a tightened
    one when |E| is small. |delta log| <= tail / (|E| - tail) for tail < |E|.
    """
    inner = eval_qexp(qp, z, tol, max_terms)
    for _ in range(2):
        magnitude = abs(inner.value)
        if not isinstance(inner.value, complex) and inner.value <= 0:
            raise DomainError(
                f"ln E_q(z) undefined: E_q({z}) = {inner.value} <= 0 at q = {qp}"
            )
        if magnitude <= inner.tail_bound:
            raise DomainError(
                f"cannot certify E_q(z) != 0 at q = {qp}, z = {z}: "
                f"|value| = {magnitude} within tail bound {inner.tail_bound}"
            )
        propagated = inner.tail_bound / (magnitude - inner.tail_bound)
        if propagated <= tol:
            log_value = (cmath.log(inner.value) if isinstance(inner.value, complex)
                         else math.log(inner.value))
            return Evaluation(log_value, inner.order, propagated, "log_of_qexp")
        inner = eval_qexp(qp, z, tol * magnitude / 2, max_terms)
    raise ConvergenceError(
        f"could not certify tol={tol} for ln E_q(z) at q = {qp}, z = {z}"
    )
