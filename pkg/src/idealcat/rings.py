"""Exact arithmetic backends: the integers, the integers modulo n, and
univariate polynomials over the rationals.

A ring object carries the arithmetic for raw element values (int for the
integer backends, Poly for polynomials) and owns the normalization
choices: canonical associates are nonnegative integers, monic polynomials,
and over Z_n the least residue dividing the modulus. Descriptors compare
structurally, so two ModularRing(6) instances are interchangeable.

Everything here is a pure function over immutable values; there is no
interior mutation anywhere in this module.
"""

from __future__ import annotations

import math
from fractions import Fraction as Q

from .errors import ParseError
from .poly import Poly, format_poly, parse_poly

RingElement = int | Poly


class Ring:
    """Arithmetic backend descriptor; subclasses fix the element type."""

    is_domain: bool = True

    def _key(self) -> tuple:
        return (type(self).__name__,)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"

    def __str__(self) -> str:
        return self.literal

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def gcd(self, a, b):
        """Canonical-associate gcd by Euclid's algorithm; gcd(0, 0) = 0."""
        while not self.is_zero(b):
            a, b = b, self.div_rem(a, b)[1]
        return self.canonical(a)

    def lcm(self, a, b):
        if self.is_zero(a) or self.is_zero(b):
            return self.zero
        return self.canonical(self.exact_div(self.mul(a, b), self.gcd(a, b)))


class IntegerRing(Ring):
    """Arbitrary-precision integers; canonical associates are nonnegative."""

    zero = 0
    one = 1

    @property
    def literal(self) -> str:
        return "z"

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value
        raise TypeError(f"not an integer element: {value!r}")

    def add(self, a: int, b: int) -> int:
        return a + b

    def neg(self, a: int) -> int:
        return -a

    def mul(self, a: int, b: int) -> int:
        return a * b

    def is_zero(self, a: int) -> bool:
        return a == 0

    def canonical(self, a: int) -> int:
        return abs(a)

    def canonical_unit(self, a: int) -> int:
        return -1 if a < 0 else 1

    def exact_div(self, a: int, b: int) -> int:
        q, r = divmod(a, b)
        if r:
            raise ValueError(f"{b} does not divide {a}")
        return q

    def div_rem(self, a: int, b: int) -> tuple[int, int]:
        return divmod(a, b)

    def gcd(self, a: int, b: int) -> int:
        return math.gcd(a, b)

    def divides(self, a: int, b: int) -> bool:
        return b == 0 if a == 0 else b % a == 0

    def parse_element(self, text: str) -> int:
        try:
            return int(text.strip())
        except ValueError:
            raise ParseError(f"bad integer literal {text!r}") from None

    def format_element(self, a: int) -> str:
        return str(a)


class ModularRing(Ring):
    """Residues modulo n, stored reduced into [0, n); not a domain."""

    is_domain = False

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {modulus!r}")
        self.modulus = modulus
        self.zero = 0
        self.one = 1

    def _key(self) -> tuple:
        return (type(self).__name__, self.modulus)

    def __repr__(self) -> str:
        return f"ModularRing({self.modulus})"

    @property
    def literal(self) -> str:
        return f"zmod:{self.modulus}"

    def coerce(self, value) -> int:
        if isinstance(value, int):
            return value % self.modulus
        raise TypeError(f"not a residue: {value!r}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def neg(self, a: int) -> int:
        return (-a) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def is_zero(self, a: int) -> bool:
        return a == 0

    def canonical(self, a: int) -> int:
        # every residue is an associate of gcd(a, n); n itself normalizes to 0
        return math.gcd(a, self.modulus) % self.modulus

    def canonical_unit(self, a: int) -> int:
        c = self.canonical(a)
        for u in range(1, self.modulus):
            if math.gcd(u, self.modulus) == 1 and (u * c) % self.modulus == a:
                return u
        return 1

    def divides(self, a: int, b: int) -> bool:
        # r*a = b (mod n) is solvable exactly when gcd(a, n) divides b
        return b % math.gcd(a, self.modulus) == 0

    def elements(self) -> range:
        return range(self.modulus)

    def parse_element(self, text: str) -> int:
        try:
            return int(text.strip()) % self.modulus
        except ValueError:
            raise ParseError(f"bad residue literal {text!r}") from None

    def format_element(self, a: int) -> str:
        return str(a)


class RationalPolynomialRing(Ring):
    """Polynomials over the exact rationals; canonical associates are monic."""

    zero = Poly()
    one = Poly((1,))

    @property
    def literal(self) -> str:
        return "qpoly"

    def coerce(self, value) -> Poly:
        if isinstance(value, Poly):
            return value
        if isinstance(value, (int, Q)):
            return Poly((Q(value),))
        raise TypeError(f"not a polynomial element: {value!r}")

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def neg(self, a: Poly) -> Poly:
        return -a

    def mul(self, a: Poly, b: Poly) -> Poly:
        return a * b

    def is_zero(self, a: Poly) -> bool:
        return a.is_zero

    def canonical(self, a: Poly) -> Poly:
        return a.monic()

    def canonical_unit(self, a: Poly) -> Poly:
        return Poly((a.leading,)) if not a.is_zero else self.one

    def exact_div(self, a: Poly, b: Poly) -> Poly:
        q, r = divmod(a, b)
        if not r.is_zero:
            raise ValueError(f"{b} does not divide {a}")
        return q

    def div_rem(self, a: Poly, b: Poly) -> tuple[Poly, Poly]:
        return divmod(a, b)

    def divides(self, a: Poly, b: Poly) -> bool:
        return b.is_zero if a.is_zero else (b % a).is_zero

    def parse_element(self, text: str) -> Poly:
        return parse_poly(text)

    def format_element(self, a: Poly) -> str:
        return format_poly(a)


INTEGERS = IntegerRing()
RATIONAL_POLYNOMIALS = RationalPolynomialRing()


def ring_from_literal(text: str) -> Ring:
    """Parse a ring literal: ``z``, ``zmod:<n>`` or ``qpoly``."""
    t = text.strip()
    if t == "z":
        return INTEGERS
    if t == "qpoly":
        return RATIONAL_POLYNOMIALS
    if t.startswith("zmod:"):
        try:
            n = int(t[len("zmod:"):])
        except ValueError:
            raise ParseError(f"bad modulus in ring literal {text!r}") from None
        if n < 2:
            raise ParseError(f"modulus must be >= 2 in ring literal {text!r}")
        return ModularRing(n)
    raise ParseError(f"unknown ring literal {text!r} (expected z, zmod:<n> or qpoly)")


def euclid_gcd(ring: Ring, a: RingElement, b: RingElement) -> RingElement:
    """Canonical-associate gcd over the domain backends; gcd(0, 0) = 0."""
    if not ring.is_domain:
        raise ValueError("euclid_gcd is defined over the domain backends only")
    return ring.gcd(a, b)


def euclid_xgcd(ring: Ring, a: RingElement, b: RingElement):
    """Extended Euclid: (g, u, v) with u*a + v*b = g, g the canonical gcd."""
    if not ring.is_domain:
        raise ValueError("euclid_xgcd is defined over the domain backends only")
    r0, r1 = a, b
    s0, s1 = ring.one, ring.zero
    t0, t1 = ring.zero, ring.one
    while not ring.is_zero(r1):
        q, rem = ring.div_rem(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, ring.sub(s0, ring.mul(q, s1))
        t0, t1 = t1, ring.sub(t0, ring.mul(q, t1))
    if ring.is_zero(r0):
        return ring.zero, s0, t0
    u = ring.canonical_unit(r0)
    return ring.exact_div(r0, u), ring.exact_div(s0, u), ring.exact_div(t0, u)


def divides(ring: Ring, a: RingElement, b: RingElement) -> bool:
    """True when b = r*a for some ring element r (modulo n over Z_n)."""
    return ring.divides(a, b)


def canonical_generator(ring: Ring, gens) -> RingElement:
    """Collapse a generator list to the canonical principal generator.

    Domains fold the canonical gcd (0 for the empty list); over Z_n the
    integer lifts are gcd'd together with the modulus and reduced, so the
    result always divides n and n itself normalizes to 0.
    """
    if isinstance(ring, ModularRing):
        g = ring.modulus
        for x in gens:
            g = math.gcd(g, ring.coerce(x))
        return g % ring.modulus
    g = ring.zero
    for x in gens:
        g = ring.gcd(g, ring.coerce(x))
    return g


def combination_witness(ring: Ring, gens) -> list:
    """Coefficients c_i with sum(c_i * g_i) = canonical_generator(ring, gens).

    Certifies constructively that the canonical generator is a ring
    combination of the given generators. Over Z_n the witness is computed on
    integer lifts together with the modulus, then reduced.
    """
    gens = [ring.coerce(g) for g in gens]
    if isinstance(ring, ModularRing):
        lifted = _fold_witness(INTEGERS, gens + [ring.modulus])
        return [c % ring.modulus for c in lifted[:-1]]
    return _fold_witness(ring, gens)


def _fold_witness(ring: Ring, gens: list) -> list:
    coeffs: list = []
    g = ring.zero
    for x in gens:
        if not coeffs:
            u = ring.canonical_unit(x)
            g = ring.exact_div(x, u)
            coeffs = [ring.exact_div(ring.one, u)]
        else:
            g2, u, v = euclid_xgcd(ring, g, x)
            coeffs = [ring.mul(u, c) for c in coeffs] + [v]
            g = g2
    return coeffs
