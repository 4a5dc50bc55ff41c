"""Outward-rounded interval arithmetic over binary64.

An Enclosure is a closed interval [lo, hi] of floats guaranteed to
contain the exact real value it stands for.  Soundness never relies on
the platform rounding mode: every arithmetic operation widens its
result outward by one ulp per endpoint, and the transcendental
operations (whose libm primitives are close to, but not provably,
correctly rounded) widen by two.  The arithmetic is inclusion
monotone: widening an input never shrinks an output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "DomainError",
    "Enclosure",
    "TrustedConstant",
    "CONSTANTS",
    "PI",
    "LN_PI",
    "EULER_GAMMA",
    "PI_SQ_OVER_6",
    "ZETA_3",
]

_INF = math.inf


class DomainError(ValueError):
    """Raised when an operation is asked to leave its mathematical domain."""


def _down(v: float) -> float:
    return math.nextafter(v, -_INF)


def _up(v: float) -> float:
    return math.nextafter(v, _INF)


class Enclosure:
    """Closed float interval [lo, hi] containing one exact real value.

    Instances are immutable by convention; arithmetic returns new
    objects.  Both endpoints must be finite and ordered.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        lo = float(lo)
        hi = float(hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise DomainError(f"non-finite enclosure endpoints [{lo}, {hi}]")
        if lo > hi:
            raise DomainError(f"inverted enclosure [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    # -- constructors ------------------------------------------------

    @classmethod
    def point(cls, v: float) -> "Enclosure":
        """Exact enclosure of the float v itself."""
        return cls(v, v)

    @classmethod
    def from_rational(cls, q: Fraction) -> "Enclosure":
        """Tightest float enclosure of an exact rational."""
        f = float(q)
        fq = Fraction(f)
        if fq == q:
            return cls(f, f)
        if fq < q:
            return cls(f, _up(f))
        return cls(_down(f), f)

    # -- inspection --------------------------------------------------

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def strictly_positive(self) -> bool:
        return self.lo > 0.0

    @property
    def strictly_negative(self) -> bool:
        return self.hi < 0.0

    def contains(self, v) -> bool:
        """Exact membership test; Fractions are compared exactly."""
        if isinstance(v, Fraction):
            return Fraction(self.lo) <= v <= Fraction(self.hi)
        return self.lo <= v <= self.hi

    def strictly_less(self, other: "Enclosure") -> bool:
        """True iff every value here is below every value of other."""
        return self.hi < other.lo

    def __repr__(self) -> str:
        return f"Enclosure({self.lo!r}, {self.hi!r})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Enclosure)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    # -- arithmetic --------------------------------------------------

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __add__(self, other) -> "Enclosure":
        o = _lift(other)
        return Enclosure(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Enclosure":
        o = _lift(other)
        return Enclosure(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other) -> "Enclosure":
        return _lift(other) - self

    def __mul__(self, other) -> "Enclosure":
        o = _lift(other)
        a = self.lo * o.lo
        b = self.lo * o.hi
        c = self.hi * o.lo
        d = self.hi * o.hi
        return Enclosure(_down(min(a, b, c, d)), _up(max(a, b, c, d)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Enclosure":
        o = _lift(other)
        if o.lo <= 0.0 <= o.hi:
            raise DomainError(f"division by enclosure straddling zero {o!r}")
        a = self.lo / o.lo
        b = self.lo / o.hi
        c = self.hi / o.lo
        d = self.hi / o.hi
        return Enclosure(_down(min(a, b, c, d)), _up(max(a, b, c, d)))

    def __rtruediv__(self, other) -> "Enclosure":
        return _lift(other) / self

    def pow_int(self, n: int) -> "Enclosure":
        """Integer power by repeated multiplication, n >= 0."""
        if n < 0:
            raise DomainError("negative exponent; divide explicitly")
        acc = Enclosure(1.0, 1.0)
        for _ in range(n):
            acc = acc * self
        return acc

    # -- transcendental ----------------------------------------------

    def exp(self) -> "Enclosure":
        # math.exp raises OverflowError past ~709.78; underflow to 0 is
        # sound for the lower endpoint because exp > 0 everywhere.
        lo = max(0.0, _down(_down(math.exp(self.lo))))
        hi = _up(_up(math.exp(self.hi)))
        return Enclosure(lo, hi)

    def log(self) -> "Enclosure":
        if self.lo <= 0.0:
            raise DomainError(f"log of enclosure touching zero {self!r}")
        return Enclosure(_down(_down(math.log(self.lo))), _up(_up(math.log(self.hi))))

    def to_json_obj(self) -> dict:
        # shortest round-trip decimal strings, full binary64 precision
        return {"lo": repr(self.lo), "hi": repr(self.hi)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Enclosure":
        return cls(float(obj["lo"]), float(obj["hi"]))


def _lift(v) -> Enclosure:
    if isinstance(v, Enclosure):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a numeric operand")
    if isinstance(v, int):
        if -(2**53) <= v <= 2**53:
            return Enclosure(float(v), float(v))
        return Enclosure.from_rational(Fraction(v))
    if isinstance(v, float):
        return Enclosure(v, v)
    if isinstance(v, Fraction):
        return Enclosure.from_rational(v)
    raise TypeError(f"cannot lift {type(v).__name__} to Enclosure")


# -- trusted constants ----------------------------------------------

@dataclass(frozen=True)
class TrustedConstant:
    """A named constant pinned by a 50-significant-digit decimal literal.

    The enclosure is the tightest float pair around the literal,
    validated at import time to leave more than 1e-40 of slack to each
    endpoint, so the true constant (within 1e-48 of the literal) is
    certainly inside.  Width never exceeds 2 ulp.
    """

    name: str
    literal: str
    value: Enclosure


def _trusted(name: str, literal: str) -> TrustedConstant:
    q = Fraction(literal)
    enc = Enclosure.from_rational(q)
    lo_f, hi_f = Fraction(enc.lo), Fraction(enc.hi)
    slack = Fraction(1, 10**40)
    if lo_f == hi_f or q - lo_f <= slack or hi_f - q <= slack:
        enc = Enclosure(_down(enc.lo), _up(enc.hi))
    return TrustedConstant(name, literal, enc)


_PI = _trusted("pi", "3.1415926535897932384626433832795028841971693993751")
_LN_PI = _trusted("ln_pi", "1.1447298858494001741434273513530587116472948129153")
_EULER_GAMMA = _trusted(
    "euler_gamma", "0.57721566490153286060651209008240243104215933593992"
)
_PI_SQ_OVER_6 = _trusted(
    "pi_sq_over_6", "1.6449340668482264364724151666460251892189499012068"
)
_ZETA_3 = _trusted("zeta_3", "1.2020569031595942853997381615114499907649862923405")

CONSTANTS: dict[str, TrustedConstant] = {
    c.name: c for c in (_PI, _LN_PI, _EULER_GAMMA, _PI_SQ_OVER_6, _ZETA_3)
}

PI = _PI.value
LN_PI = _LN_PI.value
EULER_GAMMA = _EULER_GAMMA.value
PI_SQ_OVER_6 = _PI_SQ_OVER_6.value
ZETA_3 = _ZETA_3.value
