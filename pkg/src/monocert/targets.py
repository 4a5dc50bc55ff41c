"""The functions under certification.

Two continuous targets: `gamma_log_ratio`, which the certification shows
increasing from its exact value at 0, and `ball_volume_root`, shown
decreasing past 1.  The discrete targets are the unit-ball volume
sequence and its fractional-power companions.  Everything else in this
module is scaffolding those proofs walk through: five exact rational
polynomials certified positive, one interval polynomial with log-pi
coefficients, a quotient-derivative core whose positivity drives the
increasing half, and a six-member auxiliary sign chain that drives the
decreasing half.

All evaluators take a scalar (int, float, or Fraction) and return an
Enclosure.  Scalars are first converted to exact rationals so every
polynomial part is computed in exact arithmetic; only the special
functions and logarithms contribute interval width.
"""

from __future__ import annotations

from fractions import Fraction

from .enclosure import DomainError, Enclosure, EULER_GAMMA, LN_PI
from .exactpoly import RationalPolynomial
from .specfun import IntervalPolynomial, ln_gamma, polygamma

__all__ = [
    "GUARD_RADIUS",
    "GuardZoneError",
    "LEMMA_POLYS",
    "LEMMA_VALUE_AT_ONE",
    "P6_PAIRS",
    "H2_PAIRS",
    "MIDDLE_PAIRS",
    "RATE_NUMERATOR",
    "CHAIN_TOKENS",
    "pair_derivative",
    "interval_poly_from_pairs",
    "chain_interval_poly",
    "gamma_log_ratio",
    "log_ball_volume_root",
    "ball_volume_root",
    "log_unit_ball_volume",
    "unit_ball_volume",
    "log_omega_sequence_term",
    "omega_sequence_term",
    "SEQUENCE_MODES",
    "log_volume_sequence_value",
    "volume_sequence_value",
    "fg_ratio",
    "fg_ratio_core",
    "fg_ratio_core_rate",
    "fg_ratio_core_rate_lower_bound",
    "ball_root_slope_chain",
    "chain_rate_bound_with_log",
    "chain_rate_bound_rational",
]

# Radius of the refuse-to-evaluate zone around the two removable
# singularities of gamma_log_ratio (and the left edge of
# ball_volume_root).  Inside it the defining quotient is 0/0-unstable
# in interval arithmetic; callers get the exact limit value at the
# singular point itself and an error elsewhere in the zone.
GUARD_RADIUS = 2.0 ** -20


class GuardZoneError(ValueError):
    """Argument fell inside a guard zone: too close to a removable
    singularity for a meaningful enclosure, but not exactly on it."""


def _exact(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise DomainError("bool is not a numeric argument")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)  # floats are dyadic rationals, exact
    raise DomainError(f"unsupported scalar type {type(x).__name__}")


def _enc(q: Fraction) -> Enclosure:
    return Enclosure.from_rational(q)


# --- exact polynomial tables, ascending coefficients ---

_P1 = RationalPolynomial((-1, -1, 3, 1))        # x^3 + 3x^2 - x - 1
_P2 = RationalPolynomial((-1, -1, 3, 1))        # printed identically to p1
_P3 = RationalPolynomial((-1, 0, 2, 8, 3))      # 3x^4 + 8x^3 + 2x^2 - 1
_P4 = RationalPolynomial((-1, 1, 2, 2, 3, 1))   # x^5 + 3x^4 + 2x^3 + 2x^2 + x - 1
_P5 = RationalPolynomial((-1, -3, 0, 6, 5, 1))  # x^5 + 5x^4 + 6x^3 - 3x - 1

LEMMA_POLYS = {"p1": _P1, "p2": _P2, "p3": _P3, "p4": _P4, "p5": _P5}
LEMMA_VALUE_AT_ONE = {"p1": 2, "p2": 2, "p3": 12, "p4": 8, "p5": 8}

# psi-weight of fg_ratio_core: x^4 + 4x^3 - 2x^2 - 4x - 3
_CORE_PSI_WEIGHT = RationalPolynomial((-3, -4, -2, 4, 1))
# (x+1)(x^2+1) and x^2+2x-1, the pieces of fg_ratio
_CUBIC_NUM = RationalPolynomial((1, 1, 1, 1))
_QUAD_DEN = RationalPolynomial((-1, 2, 1))

# degree-6 numerator of the rational lower bound on the core's rate
RATE_NUMERATOR = RationalPolynomial((8, -2, -31, 8, 86, 66, 13))

# (a, b) meaning the coefficient a + b*ln(pi), ascending degree
P6_PAIRS = ((216, -288), (2832, -1536), (4800, -1680), (1800, -480))
H2_PAIRS = (
    (4, -8),
    (-12, -28),
    (13, -12),
    (-36, 48),
    (-118, 64),
    (-80, 28),
    (-15, 4),
)
# rational-plus-log bound on the slope chain's second member, before the
# logarithm inequality is applied: (MIDDLE + 4*p5*ln(x+1)) / (x+1)^2
MIDDLE_PAIRS = ((-2, 4), (11, 12), (0, 0), (18, -24), (26, -20), (7, -4))


def pair_derivative(pairs):
    """Formal derivative at the (a, b) pair level, exactly."""
    return tuple((i * a, i * b) for i, (a, b) in enumerate(pairs) if i > 0)


def interval_poly_from_pairs(pairs) -> IntervalPolynomial:
    return IntervalPolynomial(
        tuple(_enc(Fraction(a)) + _enc(Fraction(b)) * LN_PI for a, b in pairs)
    )


_H2P_PAIRS = pair_derivative(H2_PAIRS)
_H2PP_PAIRS = pair_derivative(_H2P_PAIRS)
_H2PPP_PAIRS = pair_derivative(_H2PP_PAIRS)

_CHAIN_PAIRS = {
    "h2": H2_PAIRS,
    "h2p": _H2P_PAIRS,
    "h2pp": _H2PP_PAIRS,
    "h2ppp": _H2PPP_PAIRS,
}

CHAIN_TOKENS = ("h", "h1", "h2", "h2p", "h2pp", "h2ppp")


def chain_interval_poly(which: str) -> IntervalPolynomial:
    """Interval polynomial for a polynomial chain member (h2 and its
    derivatives) or "p6"."""
    if which == "p6":
        return interval_poly_from_pairs(P6_PAIRS)
    if which in _CHAIN_PAIRS:
        return interval_poly_from_pairs(_CHAIN_PAIRS[which])
    raise DomainError(f"no interval polynomial named {which!r}")


# --- the two continuous targets ---


def _log_poly_quotient(xq: Fraction) -> Enclosure:
    """ln(x^2+1) - ln(x+1), both arguments exact."""
    return _enc(xq * xq + 1).log() - _enc(xq + 1).log()


def _in_guard_zone(xq: Fraction, center: int) -> bool:
    d = xq - center
    return abs(d) <= Fraction(GUARD_RADIUS) and d != 0


def gamma_log_ratio(x) -> Enclosure:
    """ln Gamma(x+1) / [ln(x^2+1) - ln(x+1)] on x >= 0.

    The quotient has removable singularities at 0 and 1; those two
    points return the exact limit values (the Euler-Mascheroni constant,
    and twice its complement).  Points inside the guard zones around
    them raise GuardZoneError instead of returning a uselessly wide
    interval.
    """
    xq = _exact(x)
    if xq < 0:
        raise DomainError(f"gamma_log_ratio needs x >= 0, got {x!r}")
    if xq == 0:
        return EULER_GAMMA
    if xq == 1:
        return (Enclosure(1.0, 1.0) - EULER_GAMMA) * 2
    if _in_guard_zone(xq, 0) or _in_guard_zone(xq, 1):
        raise GuardZoneError(
            f"x={x!r} is within {GUARD_RADIUS} of a removable singularity; "
            "evaluate at the singular point itself for the exact value"
        )
    return ln_gamma(_enc(xq + 1)) / _log_poly_quotient(xq)


def log_ball_volume_root(x) -> Enclosure:
    """ln of ball_volume_root: [x ln pi - ln Gamma(x+1)] / [ln(x^2+1) - ln(x+1)].

    Defined for x > 1 + GUARD_RADIUS.  The log form is the workhorse:
    the value itself overflows binary64 once x drops near 1, and the
    large-n sequence trends only make sense in log scale.
    """
    xq = _exact(x)
    if xq <= 1 + Fraction(GUARD_RADIUS):
        raise DomainError(
            f"log_ball_volume_root needs x > 1 + {GUARD_RADIUS}, got {x!r}"
        )
    num = LN_PI * _enc(xq) - ln_gamma(_enc(xq + 1))
    return num / _log_poly_quotient(xq)


def ball_volume_root(x) -> Enclosure:
    """[pi^x / Gamma(x+1)] ^ (1 / [ln(x^2+1) - ln(x+1)]) for x > 1.

    Computed as exp of log_ball_volume_root; raises OverflowError for x
    so close to 1 that the value exceeds binary64 range (about
    x < 1.0033).
    """
    return log_ball_volume_root(x).exp()


# --- discrete targets ---


def _check_dimension(n, minimum: int, who: str) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"{who} needs an integer dimension, got {n!r}")
    if n < minimum:
        raise DomainError(f"{who} needs n >= {minimum}, got {n}")
    return n


def log_unit_ball_volume(n) -> Enclosure:
    """ln of the n-dimensional unit-ball volume pi^(n/2) / Gamma(1 + n/2)."""
    n = _check_dimension(n, 1, "log_unit_ball_volume")
    half = Fraction(n, 2)
    return LN_PI * _enc(half) - ln_gamma(_enc(half + 1))


def unit_ball_volume(n) -> Enclosure:
    n = _check_dimension(n, 1, "unit_ball_volume")
    return log_unit_ball_volume(n).exp()


def log_omega_sequence_term(n) -> Enclosure:
    """ln of omega_sequence_term; robust for large n."""
    n = _check_dimension(n, 3, "log_omega_sequence_term")
    return log_ball_volume_root(Fraction(n, 2))


def omega_sequence_term(n) -> Enclosure:
    """The ball volume of dimension n raised to
    1 / [ln(n^2/4 + 1) - ln(n/2 + 1)].

    Implemented literally as ball_volume_root(n/2); the exponent above
    is what that substitution produces.  Needs n >= 3 so the exponent
    denominator is positive.
    """
    n = _check_dimension(n, 3, "omega_sequence_term")
    return ball_volume_root(Fraction(n, 2))


SEQUENCE_MODES = ("unit", "inv_n", "inv_nlnn", "paper")


def log_volume_sequence_value(n, mode: str) -> Enclosure:
    """ln of volume_sequence_value, same modes, same domains."""
    if mode == "unit":
        return log_unit_ball_volume(n)
    if mode == "inv_n":
        n = _check_dimension(n, 1, "sequence mode inv_n")
        return log_unit_ball_volume(n) / n
    if mode == "inv_nlnn":
        n = _check_dimension(n, 2, "sequence mode inv_nlnn")
        return log_unit_ball_volume(n) / (_enc(Fraction(n)).log() * n)
    if mode == "paper":
        return log_omega_sequence_term(n)
    raise DomainError(f"unknown sequence mode {mode!r} (expected one of {SEQUENCE_MODES})")


def volume_sequence_value(n, mode: str) -> Enclosure:
    """One member of the ball-volume sequence family at dimension n.

    mode "unit":     the volume itself, needs n >= 1
    mode "inv_n":    volume^(1/n), needs n >= 1
    mode "inv_nlnn": volume^(1/(n ln n)), needs n >= 2
    mode "paper":    volume^(1/[ln(n^2/4+1) - ln(n/2+1)]), needs n >= 3
    """
    return log_volume_sequence_value(n, mode).exp()


# --- increasing-side scaffolding ---


def _require_at_least_one(x, who: str) -> Fraction:
    xq = _exact(x)
    if xq < 1:
        raise DomainError(f"{who} needs x >= 1, got {x!r}")
    return xq


def fg_ratio(x) -> Enclosure:
    """(x+1)(x^2+1) psi(x+1) / (x^2 + 2x - 1) on x >= 1.

    This is the slope ratio of the two logarithms whose quotient is
    gamma_log_ratio; its strict increase is the hypothesis of the
    monotone-quotient rule that transfers to the target function.
    """
    xq = _require_at_least_one(x, "fg_ratio")
    num = _enc(_CUBIC_NUM.eval_at(xq)) * polygamma(0, _enc(xq + 1))
    return num / _enc(_QUAD_DEN.eval_at(xq))


def fg_ratio_core(x) -> Enclosure:
    """Numerator core of d/dx fg_ratio:

        (x^4+4x^3-2x^2-4x-3) psi(x+1) + (x+1)(x^2+1)(x^2+2x-1) psi'(x+1)

    so that fg_ratio'(x) = fg_ratio_core(x) / (x^2+2x-1)^2.  Positivity
    of the core on [1, oo) is what the certification establishes.
    """
    xq = _require_at_least_one(x, "fg_ratio_core")
    x1 = _enc(xq + 1)
    return _enc(_CORE_PSI_WEIGHT.eval_at(xq)) * polygamma(0, x1) + _enc(
        _P4.eval_at(xq)
    ) * polygamma(1, x1)


def fg_ratio_core_rate(x) -> Enclosure:
    """The core's derivative, transcribed as the displayed combination

        4 p1(x) psi(x+1) + 2 p3(x) psi'(x+1) + p4(x) psi''(x+1)

    on purpose verbatim rather than derived from fg_ratio_core, so the
    finite-difference cross-check in the test suite can catch a
    transcription slip in either form.
    """
    xq = _require_at_least_one(x, "fg_ratio_core_rate")
    x1 = _enc(xq + 1)
    return (
        _enc(4 * _P1.eval_at(xq)) * polygamma(0, x1)
        + _enc(2 * _P3.eval_at(xq)) * polygamma(1, x1)
        + _enc(_P4.eval_at(xq)) * polygamma(2, x1)
    )


def fg_ratio_core_rate_lower_bound(x):
    """Rational lower bound on fg_ratio_core_rate:

        (13x^6+66x^5+86x^4+8x^3-31x^2-2x+8) / ((x+1)^2 (x+2))

    Returns an exact Fraction for int or Fraction input, an Enclosure
    for float input.
    """
    exact_in = isinstance(x, (int, Fraction)) and not isinstance(x, bool)
    xq = _require_at_least_one(x, "fg_ratio_core_rate_lower_bound")
    value = RATE_NUMERATOR.eval_at(xq) / ((xq + 1) ** 2 * (xq + 2))
    return value if exact_in else _enc(value)


# --- decreasing-side scaffolding: the auxiliary sign chain ---


def _chain_h(xq: Fraction) -> Enclosure:
    weight = _enc(_CUBIC_NUM.eval_at(xq) / _QUAD_DEN.eval_at(xq))
    log_term = LN_PI - polygamma(0, _enc(xq + 1))
    return (
        weight * log_term * _log_poly_quotient(xq)
        - LN_PI * _enc(xq)
        + ln_gamma(_enc(xq + 1))
    )


def _chain_h1(xq: Fraction) -> Enclosure:
    x1 = _enc(xq + 1)
    return _enc(_CORE_PSI_WEIGHT.eval_at(xq)) * (
        polygamma(0, x1) - LN_PI
    ) + _enc(_P4.eval_at(xq)) * polygamma(1, x1)


def ball_root_slope_chain(which: str, x) -> Enclosure:
    """One member of the sign chain behind the decreasing proof.

    Member "h" has the sign of d/dx log_ball_volume_root (after
    clearing a positive factor); "h1" controls the sign of h's
    derivative the same way; "h2" with its derivatives "h2p", "h2pp",
    "h2ppp" is the polynomial tail of the chain.  All on x >= 1.
    """
    if which not in CHAIN_TOKENS:
        raise DomainError(
            f"unknown chain member {which!r} (expected one of {CHAIN_TOKENS})"
        )
    xq = _require_at_least_one(x, f"chain member {which!r}")
    if which == "h":
        return _chain_h(xq)
    if which == "h1":
        return _chain_h1(xq)
    return chain_interval_poly(which).eval(_enc(xq))


def chain_rate_bound_with_log(x) -> Enclosure:
    """Lower bound on the second chain member's derivative obtained by
    substituting the two-sided psi bounds; still carries a ln(x+1):

        [MIDDLE(x) + 4 p5(x) ln(x+1)] / (x+1)^2
    """
    xq = _require_at_least_one(x, "chain_rate_bound_with_log")
    middle = interval_poly_from_pairs(MIDDLE_PAIRS).eval(_enc(xq))
    logpart = _enc(4 * _P5.eval_at(xq)) * _enc(xq + 1).log()
    return (middle + logpart) / _enc((xq + 1) ** 2)


def chain_rate_bound_rational(x) -> Enclosure:
    """The same bound after the logarithm inequality is applied; fully
    rational apart from the ln-pi coefficients:

        -h2(x) / ((x+1)^2 (x+2))
    """
    xq = _require_at_least_one(x, "chain_rate_bound_rational")
    h2 = chain_interval_poly("h2").eval(_enc(xq))
    return -h2 / _enc((xq + 1) ** 2 * (xq + 2))
