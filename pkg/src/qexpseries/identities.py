"""Verification of the q-exponential identities, with structured reports.

Each check is a pure function returning a :class:`VerificationReport`.
Exact-mode checks demand literally zero residuals -- there is no epsilon
anywhere in the exact path. The root-of-unity product is the one numeric
check (roots of unity are irrational), verified in binary64 complex
arithmetic against a tolerance; its coefficient-level counterpart
:func:`check_coeff_multiple_order` covers the same content exactly and is
the source of truth.

The checked identities, with E = E_q the q-exponential and c_k = c_k(q) the
log coefficients (1-q)^(k-1)/(k [k]_q):

* qbinomial_sum:          sum_{j=1}^{k} [k ch j]_q (1-q)^(j-1) [j-1]_q! = k
* reciprocal_product:     E_q(z) E_{1/q}(-z) = 1
* reflection_product:     E_q(z) E_q(-z) = E_{q^2}((1-q)/(1+q) z^2)
* scaling_product:        E_q([n]_q z) = prod_{m=0}^{n-1} E_{q^n}(q^m z)
* root_of_unity_product:  prod_{m=0}^{n-1} E_q(w^m z) = E_{q^n}((1-q)^(n-1)/[n]_q z^n),
                          w = exp(2 pi i / n)
* coeff_sign_flip:        c_k(1/q) = (-1)^(k-1) c_k(q)
* coeff_double_order:     2 c_{2k}(q) = ((1-q)/(1+q))^k c_k(q^2)
* coeff_power_scale:      [n]_{q^k} c_k(q^n) = ([n]_q)^k c_k(q)
* coeff_multiple_order:   n c_{nk}(q) = ((1-q)^(n-1)/[n]_q)^k c_k(q^n)
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .qexp import log_coeffs_closed, qexp_series
from .qnumbers import QFactorialTable, q_number
from .scalars import QParam, Regime, as_qparam, rational_str
from .series import SeriesComparison, TruncatedSeries

EXACT = "exact"
NUMERIC = "numeric"

QBINOMIAL_SUM = "qbinomial_sum"
RECIPROCAL_PRODUCT = "reciprocal_product"
REFLECTION_PRODUCT = "reflection_product"
SCALING_PRODUCT = "scaling_product"
ROOT_OF_UNITY_PRODUCT = "root_of_unity_product"
COEFF_SIGN_FLIP = "coeff_sign_flip"
COEFF_DOUBLE_ORDER = "coeff_double_order"
COEFF_POWER_SCALE = "coeff_power_scale"
COEFF_MULTIPLE_ORDER = "coeff_multiple_order"

#: Identity names in canonical (sorted) report order.
ALL_IDENTITIES = (
    COEFF_DOUBLE_ORDER,
    COEFF_MULTIPLE_ORDER,
    COEFF_POWER_SCALE,
    COEFF_SIGN_FLIP,
    QBINOMIAL_SUM,
    RECIPROCAL_PRODUCT,
    REFLECTION_PRODUCT,
    ROOT_OF_UNITY_PRODUCT,
    SCALING_PRODUCT,
)

#: Identities parameterized by a factor count n >= 2.
PER_N_IDENTITIES = frozenset({
    SCALING_PRODUCT, ROOT_OF_UNITY_PRODUCT, COEFF_POWER_SCALE, COEFF_MULTIPLE_ORDER,
})

_WORST = 5


@dataclass(frozen=True)
class VerificationReport:
    """Structured outcome of one identity check.

    ``residuals`` holds the worst offenders as (index, residual) pairs:
    in exact mode only nonzero residuals are kept (so a pass has none);
    in numeric mode the largest magnitudes are kept for context even when
    the check passes.
    """

    identity: str
    q: QParam
    params: dict
    mode: str
    passed: bool
    residuals: tuple
    tol: "float | None" = None
    note: str = ""

    def to_json(self) -> dict:
        worst = [
            [k, rational_str(r) if isinstance(r, Fraction) else float(r)]
            for k, r in self.residuals
        ]
        out = {
            "identity": self.identity,
            "q": rational_str(self.q.value),
            "params": dict(self.params),
            "mode": self.mode,
            "passed": self.passed,
            "worst_residuals": worst,
        }
        if self.tol is not None:
            out["tol"] = self.tol
        if self.note:
            out["note"] = self.note
        return out


def _exact_report(identity, qp, params, residuals, note="") -> VerificationReport:
    offenders = [(k, r) for k, r in residuals if r != 0]
    offenders.sort(key=lambda kr: (-abs(kr[1]), kr[0]))
    return VerificationReport(identity, qp, params, EXACT,
                              not offenders, tuple(offenders[:_WORST]), None, note)


def _numeric_report(identity, qp, params, residuals, tol, note="") -> VerificationReport:
    passed = all(r <= tol for _, r in residuals)
    worst = sorted(residuals, key=lambda kr: (-kr[1], kr[0]))[:_WORST]
    return VerificationReport(identity, qp, params, NUMERIC,
                              passed, tuple(worst), float(tol), note)


def _indexed(cmp: SeriesComparison):
    return tuple(enumerate(cmp.residuals))


def _check_n(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")
    return n


def _check_min(value: int, minimum: int, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise DomainError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def check_qbinomial_sum(q, k_max: int = 40) -> VerificationReport:
    """sum_{j=1}^{k} [k choose j]_q (1-q)^(j-1) [j-1]_q! = k for k = 2..k_max."""
    qp = as_qparam(q)
    _check_min(k_max, 2, "k_max")
    table = QFactorialTable(qp, k_max)
    one_minus = 1 - qp.value
    residuals = []
    for k in range(2, k_max + 1):
        acc = Fraction(0)
        shift = Fraction(1)   # (1-q)^(j-1)
        for j in range(1, k + 1):
            acc += table.binomial(k, j) * shift * table.factorial(j - 1)
            shift *= one_minus
        residuals.append((k, acc - k))
    return _exact_report(QBINOMIAL_SUM, qp, {"k_min": 2, "k_max": k_max}, residuals)


def check_reciprocal_product(q, order: int = 32) -> VerificationReport:
    """E_q(z) E_{1/q}(-z) = 1 coefficientwise, exactly.

    This is the inverse relation between the two Jackson q-exponentials
    (E_{1/q}(z) carries the q^(k(k-1)/2) weights of the second kind). The
    sign in the second argument is forced by the sign-flip identity
    c_k(1/q) = (-1)^(k-1) c_k(q): it gives ln E_{1/q}(-z) = -ln E_q(z).
    At q = 1 the statement degenerates to exp(z) exp(-z) = 1 and still holds.
    """
    qp = as_qparam(q)
    _check_min(order, 1, "order")
    params = {"order": order}
    note = "degenerates to exp(z) exp(-z) = 1" if qp.regime is Regime.ONE else ""
    lhs = (qexp_series(qp, order).series
           * qexp_series(qp.inverse(), order).series.scale_substitute(-1))
    cmp = lhs.compare(TruncatedSeries.one(order))
    return _exact_report(RECIPROCAL_PRODUCT, qp, params, _indexed(cmp), note)


def check_reflection_product(q, order: int = 32) -> VerificationReport:
    """E_q(z) E_q(-z) = E_{q^2}((1-q)/(1+q) z^2) coefficientwise, exactly."""
    qp = as_qparam(q)
    _check_min(order, 2, "order")
    base = qexp_series(qp, order).series
    lhs = base * base.scale_substitute(-1)
    scale = (1 - qp.value) / (1 + qp.value)
    rhs = qexp_series(qp.power(2), order).series.scale_substitute(scale, 2)
    cmp = lhs.compare(rhs)
    return _exact_report(REFLECTION_PRODUCT, qp, {"order": order}, _indexed(cmp))


def check_scaling_product(q, n: int, order: int = 32) -> VerificationReport:
    """E_q([n]_q z) = prod_{m=0}^{n-1} E_{q^n}(q^m z) coefficientwise, exactly."""
    qp = as_qparam(q)
    _check_n(n)
    _check_min(order, 1, "order")
    lhs = qexp_series(qp, order).series.scale_substitute(q_number(n, qp))
    base = qexp_series(qp.power(n), order).series
    rhs = TruncatedSeries.one(order)
    factor = Fraction(1)   # q^m
    for _ in range(n):
        rhs = rhs * base.scale_substitute(factor)
        factor *= qp.value
    cmp = lhs.compare(rhs)
    return _exact_report(SCALING_PRODUCT, qp, {"n": n, "order": order}, _indexed(cmp))


def check_root_of_unity_product(q, n: int, order: int = 24,
                                tol: float = 1e-12) -> VerificationReport:
    """prod_{m=0}^{n-1} E_q(w^m z) = E_{q^n}((1-q)^(n-1)/[n]_q z^n) for
    w = exp(2 pi i / n), verified numerically in the complex domain.

    The exact counterpart of this identity at coefficient level is
    :func:`check_coeff_multiple_order`; this complex check is a sanity
    cross-check, not the source of truth.
    """
    qp = as_qparam(q)
    _check_n(n)
    _check_min(order, 1, "order")
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    base = qexp_series(qp, order).series.to_complex()
    lhs = TruncatedSeries.one(order).to_complex()
    for m in range(n):
        lhs = lhs * base.scale_substitute(cmath.rect(1.0, 2.0 * math.pi * m / n))
    scale = (1 - qp.value) ** (n - 1) / q_number(n, qp)
    rhs = qexp_series(qp.power(n), order).series.to_complex()
    rhs = rhs.scale_substitute(complex(float(scale)), n)
    cmp = lhs.compare(rhs, tol)
    return _numeric_report(ROOT_OF_UNITY_PRODUCT, qp, {"n": n, "order": order},
                           _indexed(cmp), tol)


def check_coeff_sign_flip(q, k_max: int = 64) -> VerificationReport:
    """c_k(1/q) = (-1)^(k-1) c_k(q) for k = 1..k_max, exactly."""
    qp = as_qparam(q)
    _check_min(k_max, 1, "k_max")
    c_q = log_coeffs_closed(k_max, qp)
    c_inv = log_coeffs_closed(k_max, qp.inverse())
    residuals = []
    sign = 1
    for k in range(1, k_max + 1):
        residuals.append((k, c_inv.coeff(k) - sign * c_q.coeff(k)))
        sign = -sign
    return _exact_report(COEFF_SIGN_FLIP, qp, {"k_max": k_max}, residuals)


def check_coeff_double_order(q, k_max: int = 64) -> VerificationReport:
    """2 c_{2k}(q) = ((1-q)/(1+q))^k c_k(q^2) for k = 1..k_max, exactly."""
    qp = as_qparam(q)
    _check_min(k_max, 1, "k_max")
    c_q = log_coeffs_closed(2 * k_max, qp)
    c_q2 = log_coeffs_closed(k_max, qp.power(2))
    ratio = (1 - qp.value) / (1 + qp.value)
    rpow = ratio
    residuals = []
    for k in range(1, k_max + 1):
        residuals.append((k, 2 * c_q.coeff(2 * k) - rpow * c_q2.coeff(k)))
        rpow *= ratio
    return _exact_report(COEFF_DOUBLE_ORDER, qp, {"k_max": k_max}, residuals)


def check_coeff_power_scale(q, n: int, k_max: int = 64) -> VerificationReport:
    """[n]_{q^k} c_k(q^n) = ([n]_q)^k c_k(q) for k = 1..k_max, exactly."""
    qp = as_qparam(q)
    _check_n(n)
    _check_min(k_max, 1, "k_max")
    c_q = log_coeffs_closed(k_max, qp)
    c_qn = log_coeffs_closed(k_max, qp.power(n))
    n_q = q_number(n, qp)
    npow = n_q                 # ([n]_q)^k
    vpow = qp.value            # q^k
    residuals = []
    for k in range(1, k_max + 1):
        lhs = q_number(n, QParam(vpow)) * c_qn.coeff(k)
        residuals.append((k, lhs - npow * c_q.coeff(k)))
        npow *= n_q
        vpow *= qp.value
    return _exact_report(COEFF_POWER_SCALE, qp, {"n": n, "k_max": k_max}, residuals)


def check_coeff_multiple_order(q, n: int, k_max: int = 64) -> VerificationReport:
    """n c_{nk}(q) = ((1-q)^(n-1)/[n]_q)^k c_k(q^n) for k = 1..k_max, exactly."""
    qp = as_qparam(q)
    _check_n(n)
    _check_min(k_max, 1, "k_max")
    c_q = log_coeffs_closed(n * k_max, qp)
    c_qn = log_coeffs_closed(k_max, qp.power(n))
    factor = (1 - qp.value) ** (n - 1) / q_number(n, qp)
    fpow = factor
    residuals = []
    for k in range(1, k_max + 1):
        residuals.append((k, n * c_q.coeff(n * k) - fpow * c_qn.coeff(k)))
        fpow *= factor
    return _exact_report(COEFF_MULTIPLE_ORDER, qp, {"n": n, "k_max": k_max}, residuals)


#: q grid covering both regimes; the suite default.
DEFAULT_QS = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3),
              Fraction(3, 2), Fraction(2), Fraction(5, 2))
DEFAULT_NS = (2, 3, 4, 5)


@dataclass(frozen=True)
class SuiteConfig:
    """Parameter grid for :func:`run_suite`.

    ``order`` applies to the exact series checks; ``numeric_order`` to the
    complex root-of-unity check, whose residuals are compared against
    ``tol``. ``k_max`` bounds the coefficient sweeps.
    """

    qs: tuple = DEFAULT_QS
    ns: tuple = DEFAULT_NS
    order: int = 32
    numeric_order: int = 24
    k_max: int = 64
    tol: float = 1e-12
    checks: tuple = ALL_IDENTITIES


def run_suite(config: SuiteConfig = SuiteConfig()) -> "tuple[VerificationReport, ...]":
    """Run the selected checks over the grid.

    Deterministic: reports are ordered by identity name, then q, then n,
    and identical inputs produce byte-identical JSON.
    """
    unknown = sorted(set(config.checks) - set(ALL_IDENTITIES))
    if unknown:
        raise DomainError(f"unknown identity check(s): {', '.join(unknown)}")
    reports = []
    for identity in sorted(set(config.checks)):
        for qv in sorted(Fraction(qv) for qv in config.qs):
            qp = as_qparam(qv)
            if identity in PER_N_IDENTITIES:
                for n in sorted(set(config.ns)):
                    reports.append(_dispatch(identity, qp, config, n))
            else:
                reports.append(_dispatch(identity, qp, config, None))
    return tuple(reports)


def _dispatch(identity, qp, config: SuiteConfig, n):
    if identity == QBINOMIAL_SUM:
        return check_qbinomial_sum(qp, config.k_max)
    if identity == RECIPROCAL_PRODUCT:
        return check_reciprocal_product(qp, config.order)
    if identity == REFLECTION_PRODUCT:
        return check_reflection_product(qp, config.order)
    if identity == SCALING_PRODUCT:
        return check_scaling_product(qp, n, config.order)
    if identity == ROOT_OF_UNITY_PRODUCT:
        return check_root_of_unity_product(qp, n, config.numeric_order, config.tol)
    if identity == COEFF_SIGN_FLIP:
        return check_coeff_sign_flip(qp, config.k_max)
    if identity == COEFF_DOUBLE_ORDER:
        return check_coeff_double_order(qp, config.k_max)
    if identity == COEFF_POWER_SCALE:
        return check_coeff_power_scale(qp, n, config.k_max)
    if identity == COEFF_MULTIPLE_ORDER:
        return check_coeff_multiple_order(qp, n, config.k_max)
    raise DomainError(f"unknown identity check: {identity}")


def reports_to_json(reports) -> str:
    """Stable JSON for a report list (schema-stable, byte-deterministic)."""
    return json.dumps([r.to_json() for r in reports], sort_keys=True, indent=2)
