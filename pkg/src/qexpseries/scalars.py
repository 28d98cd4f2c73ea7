"""Coefficient domains: exact rationals, binary64 complex, and the parameter q.

Exact computation runs on ``fractions.Fraction`` (aliased :data:`ExactScalar`),
which stores every value as a normalized num/den pair with gcd(|num|, den) = 1
and den > 0 and never rounds. The numeric domain is the built-in ``complex``,
restricted to finite values. :class:`QParam` validates the deformation
parameter q > 0 and classifies its regime, which drives the convergence
guards elsewhere.

Everything here is immutable and safe to share between threads.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational

from .errors import DomainError

#: Exact coefficient domain: arbitrary-precision rationals.
ExactScalar = Fraction


class Regime(Enum):
    """Position of q relative to the classical point q = 1."""

    SUB_ONE = "sub_one"        # 0 < q < 1: finite radius of convergence
    ONE = "one"                # q = 1: classical exponential
    SUPER_ONE = "super_one"    # q > 1: entire series


@dataclass(frozen=True)
class QParam:
    """Deformation parameter q, stored exactly as a positive rational.

    q is never a float: exact-mode identity checks demand bit-exact
    arithmetic in q, so floats are rejected outright.
    """

    value: Fraction

    def __post_init__(self) -> None:
        value = self.value
        if isinstance(value, float):
            raise DomainError("q must be exact; pass a Fraction or int, not a float")
        if not isinstance(value, Rational):
            raise DomainError(f"q must be rational, got {type(value).__name__}")
        value = Fraction(value)
        if value <= 0:
            raise DomainError(f"q must be positive, got {value}")
        object.__setattr__(self, "value", value)

    @property
    def regime(self) -> Regime:
        if self.value < 1:
            return Regime.SUB_ONE
        if self.value == 1:
            return Regime.ONE
        return Regime.SUPER_ONE

    def inverse(self) -> "QParam":
        """The reciprocal parameter 1/q (mirrors the regime around q = 1)."""
        return QParam(1 / self.value)

    def power(self, n: int) -> "QParam":
        """q**n as a new parameter; n may be negative."""
        return QParam(self.value ** n)

    def __str__(self) -> str:
        return str(self.value)


def as_qparam(q: "QParam | Rational | str") -> QParam:
    """Coerce a rational-like value (or a "p/q" string) to a validated QParam."""
    if isinstance(q, QParam):
        return q
    if isinstance(q, str):
        return QParam(parse_rational(q))
    return QParam(q)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", integer, or decimal text into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def rational_str(value: Rational) -> str:
    """Serialize exactly as "num/den", or "num" when den = 1."""
    return str(Fraction(value))


def complex_json(value: complex) -> dict:
    """JSON form of a complex scalar: {"re": ..., "im": ...}."""
    return {"re": value.real, "im": value.imag}


def ensure_finite(value: complex) -> complex:
    """Reject NaN/Inf anywhere in the numeric domain."""
    z = complex(value)
    if not cmath.isfinite(z):
        raise DomainError(f"non-finite numeric value: {value!r}")
    return z
