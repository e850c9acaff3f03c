"""Reduced fractions over a ring backend, used as morphism multipliers.

Over the domain backends a fraction num/den is kept in the unique reduced
form: gcd(num, den) is a unit, the denominator is the canonical associate
(positive integer, monic polynomial) and zero is exactly 0/1. Over Z_n the
denominator is always the unit 1; there are no genuine fractions over a
non-domain.

Text form: ``p`` or ``p/q`` for the integer backends. For qpoly the two
parts are parenthesized (``(x+1)/(x-1)``) because rational coefficients
already contain ``/``.
"""

from __future__ import annotations

import re

from .errors import FractionOverNonDomain, ParseError, RingMismatch, ZeroDenominator
from .rings import RationalPolynomialRing, Ring, RingElement

_QPOLY_FRACTION = re.compile(r"\((?P<num>[^()]*)\)\s*/\s*\((?P<den>[^()]*)\)")


class Fraction:
    """A reduced ring fraction. Construct via fraction_reduce or from_element."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, ring: Ring, num: RingElement, den: RingElement):
        self.ring = ring
        self.num = num
        self.den = den

    @classmethod
    def from_element(cls, ring: Ring, value) -> Fraction:
        return cls(ring, ring.coerce(value), ring.one)

    @classmethod
    def zero(cls, ring: Ring) -> Fraction:
        return cls(ring, ring.zero, ring.one)

    @classmethod
    def one(cls, ring: Ring) -> Fraction:
        return cls(ring, ring.one, ring.one)

    @property
    def is_zero(self) -> bool:
        return self.ring.is_zero(self.num)

    @property
    def is_one(self) -> bool:
        return self.num == self.ring.one and self.den == self.ring.one

    @property
    def is_integral(self) -> bool:
        return self.den == self.ring.one

    def _require_same_ring(self, other: Fraction) -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"fractions over {self.ring} and {other.ring}")

    def __add__(self, other: Fraction) -> Fraction:
        self._require_same_ring(other)
        r = self.ring
        num = r.add(r.mul(self.num, other.den), r.mul(other.num, self.den))
        return fraction_reduce(r, num, r.mul(self.den, other.den))

    def __neg__(self) -> Fraction:
        return Fraction(self.ring, self.ring.neg(self.num), self.den)

    def __sub__(self, other: Fraction) -> Fraction:
        return self + (-other)

    def __mul__(self, other: Fraction) -> Fraction:
        self._require_same_ring(other)
        r = self.ring
        return fraction_reduce(r, r.mul(self.num, other.num), r.mul(self.den, other.den))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Fraction)
            and self.ring == other.ring
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.num, self.den))

    def __repr__(self) -> str:
        return f"Fraction({self.ring.literal}, {format_fraction(self)!r})"

    def __str__(self) -> str:
        return format_fraction(self)


def fraction_reduce(ring: Ring, num, den) -> Fraction:
    """Build the reduced fraction num/den; the unit moves into the numerator."""
    num = ring.coerce(num)
    den = ring.coerce(den)
    if ring.is_zero(den):
        raise ZeroDenominator(f"zero denominator over {ring}")
    if not ring.is_domain:
        if den != ring.one:
            raise FractionOverNonDomain(f"denominator {den} over {ring}")
        return Fraction(ring, num, ring.one)
    if ring.is_zero(num):
        return Fraction(ring, ring.zero, ring.one)
    g = ring.gcd(num, den)
    num = ring.exact_div(num, g)
    den = ring.exact_div(den, g)
    u = ring.canonical_unit(den)
    return Fraction(ring, ring.exact_div(num, u), ring.exact_div(den, u))


def format_fraction(f: Fraction) -> str:
    ring = f.ring
    if f.is_integral:
        return ring.format_element(f.num)
    if isinstance(ring, RationalPolynomialRing):
        return f"({ring.format_element(f.num)})/({ring.format_element(f.den)})"
    return f"{ring.format_element(f.num)}/{ring.format_element(f.den)}"


def parse_fraction(ring: Ring, text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` (parenthesized parts for qpoly)."""
    t = text.strip()
    if not t:
        raise ParseError("empty fraction literal")
    if isinstance(ring, RationalPolynomialRing):
        if t.startswith("("):
            m = _QPOLY_FRACTION.fullmatch(t)
            if m is None:
                raise ParseError(f"bad polynomial fraction literal {text!r}")
            return fraction_reduce(
                ring, ring.parse_element(m.group("num")), ring.parse_element(m.group("den"))
            )
        return Fraction.from_element(ring, ring.parse_element(t))
    if "/" in t:
        num_text, den_text = t.split("/", 1)
        return fraction_reduce(
            ring, ring.parse_element(num_text), ring.parse_element(den_text)
        )
    return Fraction.from_element(ring, ring.parse_element(t))
