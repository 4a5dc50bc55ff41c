"""Rigorous enclosures of log-gamma and polygamma, plus interval polynomials.

Strategy for every special function here: push the argument up to at
least 8 with the exact recurrences, then sum the Bernoulli asymptotic
series truncated at the B10 term.  For real positive arguments those
series envelop the true value (consecutive Bernoulli terms alternate
in sign), so the truncation error is at most the first omitted term;
that term, evaluated in interval arithmetic, is added symmetrically.

The elementary two-sided bounds (`digamma_bounds`, `polygamma_bounds`,
`log1p_bounds`) are independent of the series route on purpose: the
test suite checks the rigorous enclosures against them, and the proof
replay substitutes them exactly where the argument does.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .enclosure import DomainError, Enclosure, LN_PI, _lift
from .exactpoly import PositivityCertificate, RationalPolynomial, certify_positive_on_ray

__all__ = [
    "ln_gamma",
    "polygamma",
    "digamma_bounds",
    "polygamma_bounds",
    "log1p_bounds",
    "BoundPair",
    "IntervalPolynomial",
    "eval_interval_poly",
    "certify_positive_interval_poly",
]

_SHIFT_THRESHOLD = 8.0

# B_{2n}/(2n(2n-1)) for the log-gamma series, n = 1..5; the tail
# coefficient is |B_12|/(12*11).
_LGAMMA_COEFFS = (
    Fraction(1, 12),
    Fraction(-1, 360),
    Fraction(1, 1260),
    Fraction(-1, 1680),
    Fraction(1, 1188),
)
_LGAMMA_TAIL = Fraction(691, 360360)

# B_{2n}/(2n) for psi, n = 1..5; tail |B_12|/12.
_PSI_COEFFS = (
    Fraction(1, 12),
    Fraction(-1, 120),
    Fraction(1, 252),
    Fraction(-1, 240),
    Fraction(1, 132),
)
_PSI_TAIL = Fraction(691, 32760)

# B_{2n} for psi', n = 1..5; tail |B_12|.
_PSI1_COEFFS = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
)
_PSI1_TAIL = Fraction(691, 2730)

# (2n+1) B_{2n} for psi'', n = 1..5; tail 13 |B_12|.
_PSI2_COEFFS = (
    Fraction(1, 2),
    Fraction(-1, 6),
    Fraction(1, 6),
    Fraction(-3, 10),
    Fraction(5, 6),
)
_PSI2_TAIL = Fraction(8983, 2730)

_HALF = Enclosure(0.5, 0.5)
_HALF_LN_TWO_PI = (LN_PI + Enclosure(2.0, 2.0).log()) * _HALF


def _shift_count(x: Enclosure) -> int:
    if x.lo >= _SHIFT_THRESHOLD:
        return 0
    return int(math.ceil(_SHIFT_THRESHOLD - x.lo))


def _odd_inverse_powers(y: Enclosure, top: int) -> list[Enclosure]:
    """[y**-1, y**-3, ..., y**-top] for odd top."""
    inv = Enclosure(1.0, 1.0) / y
    inv2 = inv * inv
    out = [inv]
    for _ in range(3, top + 1, 2):
        out.append(out[-1] * inv2)
    return out


def _symmetric(r: Enclosure) -> Enclosure:
    m = max(abs(r.lo), abs(r.hi))
    return Enclosure(-m, m)


def ln_gamma(x) -> Enclosure:
    """Enclosure of log Gamma(x) for x with positive lower endpoint."""
    xe = _lift(x)
    if xe.lo <= 0.0:
        raise DomainError(f"ln_gamma needs a positive argument, got {xe!r}")
    k = _shift_count(xe)
    y = xe + k if k else xe

    t = y.log()
    res = (y - _HALF) * t - y + _HALF_LN_TWO_PI
    powers = _odd_inverse_powers(y, 11)
    for c, p in zip(_LGAMMA_COEFFS, powers):
        res = res + Enclosure.from_rational(c) * p
    res = res + _symmetric(Enclosure.from_rational(_LGAMMA_TAIL) * powers[5])

    # log Gamma(x) = log Gamma(x + k) - sum log(x + j)
    for j in range(k):
        res = res - (xe + j).log()
    return res


def polygamma(k: int, x) -> Enclosure:
    """Enclosure of psi^(k)(x) for k in {0, 1, 2} and x > 0.

    Uses psi^(k)(x) = psi^(k)(x+1) + (-1)^(k+1) k!/x^(k+1) to reach an
    argument >= 8, then the asymptotic series.
    """
    if k not in (0, 1, 2):
        raise DomainError(f"polygamma order {k} not supported (need 0, 1 or 2)")
    xe = _lift(x)
    if xe.lo <= 0.0:
        raise DomainError(f"polygamma needs a positive argument, got {xe!r}")
    shift = _shift_count(xe)
    y = xe + shift if shift else xe
    inv = Enclosure(1.0, 1.0) / y
    inv2 = inv * inv

    if k == 0:
        res = y.log() - inv * _HALF
        p = inv2
        for c in _PSI_COEFFS:
            res = res - Enclosure.from_rational(c) * p
            p = p * inv2
        res = res + _symmetric(Enclosure.from_rational(_PSI_TAIL) * p)
        for j in range(shift):
            res = res - Enclosure(1.0, 1.0) / (xe + j)
        return res

    if k == 1:
        res = inv + inv2 * _HALF
        p = inv * inv2
        for c in _PSI1_COEFFS:
            res = res + Enclosure.from_rational(c) * p
            p = p * inv2
        res = res + _symmetric(Enclosure.from_rational(_PSI1_TAIL) * p)
        for j in range(shift):
            xj = xe + j
            res = res + Enclosure(1.0, 1.0) / (xj * xj)
        return res

    res = -(inv2 + inv * inv2)
    p = inv2 * inv2
    for c in _PSI2_COEFFS:
        res = res - Enclosure.from_rational(c) * p
        p = p * inv2
    res = res + _symmetric(Enclosure.from_rational(_PSI2_TAIL) * p)
    for j in range(shift):
        xj = xe + j
        res = res - Enclosure(2.0, 2.0) / (xj * xj * xj)
    return res


class BoundPair(NamedTuple):
    """Outer rounding of a two-sided analytic bound: lower down, upper up."""

    lower: float
    upper: float

    @property
    def gap(self) -> float:
        return self.upper - self.lower


def digamma_bounds(x) -> BoundPair:
    """Elementary bracket ln x - 1/x < psi(x) < ln x - 1/(2x), x > 0."""
    xe = _lift(x)
    if xe.lo <= 0.0:
        raise DomainError(f"digamma_bounds needs x > 0, got {xe!r}")
    t = xe.log()
    lower = t - Enclosure(1.0, 1.0) / xe
    upper = t - Enclosure(1.0, 1.0) / (xe * 2)
    return BoundPair(lower.lo, upper.hi)


def polygamma_bounds(k: int, x) -> BoundPair:
    """Elementary bracket of |psi^(k)(x)| for k >= 1 and x > 0:

        (k-1)!/x^k + k!/(2 x^(k+1)) < |psi^(k)(x)| < (k-1)!/x^k + k!/x^(k+1)
    """
    if k < 1:
        raise DomainError(f"polygamma_bounds needs k >= 1, got {k}")
    xe = _lift(x)
    if xe.lo <= 0.0:
        raise DomainError(f"polygamma_bounds needs x > 0, got {xe!r}")
    head = math.factorial(k - 1) / xe.pow_int(k)
    tail = math.factorial(k) / xe.pow_int(k + 1)
    lower = head + tail * _HALF
    upper = head + tail
    return BoundPair(lower.lo, upper.hi)


def log1p_bounds(t) -> BoundPair:
    """Elementary bracket 2t/(2+t) <= ln(1+t) <= t(2+t)/(2(1+t)), t > 0."""
    te = _lift(t)
    if te.lo <= 0.0:
        raise DomainError(f"log1p_bounds needs t > 0, got {te!r}")
    lower = (te * 2) / (te + 2)
    upper = te * (te + 2) / ((te + 1) * 2)
    return BoundPair(lower.lo, upper.hi)


class IntervalPolynomial:
    """Dense polynomial whose coefficients are Enclosures, ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(c if isinstance(c, Enclosure) else _lift(c) for c in coeffs)
        self.coeffs = cs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval(self, x) -> Enclosure:
        xe = _lift(x)
        acc = Enclosure(0.0, 0.0)
        for c in reversed(self.coeffs):
            acc = acc * xe + c
        return acc

    def derivative(self) -> "IntervalPolynomial":
        return IntervalPolynomial(
            tuple(c * i for i, c in enumerate(self.coeffs) if i > 0)
        )

    def __repr__(self) -> str:
        return f"IntervalPolynomial({list(self.coeffs)!r})"


def eval_interval_poly(p: IntervalPolynomial, x) -> Enclosure:
    return p.eval(x)


def certify_positive_interval_poly(p: IntervalPolynomial, a) -> PositivityCertificate:
    """Certify p > 0 on [a, infinity) for a >= 0.

    Delegates to the exact machinery through the rational lower-bound
    polynomial built from the coefficient lower endpoints; for x >= 0
    that polynomial never exceeds p, so its certificate transfers.
    """
    aq = a if isinstance(a, Fraction) else Fraction(a)
    if aq < 0:
        raise DomainError("interval-polynomial certification requires a >= 0")
    p_lo = RationalPolynomial(Fraction(c.lo) for c in p.coeffs)
    return certify_positive_on_ray(p_lo, aq)
