"""Ideals as objects and multiplication maps as morphisms.

An Ideal is identified by its ring and canonical principal generator; the
generators it was built from are kept as provenance but excluded from
equality. A Morphism dom -> cod is the map x -> x*s for a canonicalized
multiplier s, stored so that morphism equality coincides with pointwise
equality of the underlying functions:

* multipliers out of the zero ideal collapse to 0;
* over Z_n with dom = <a>, a != 0, the multiplier is reduced mod n/a;
* over Z and Q[x] the multiplier is a reduced fraction, which is unique.

Two multiplier universes are supported. In ``full`` mode (the default)
multipliers over the domain backends range over the fraction field, which
captures every linear map between principal ideals of a domain; ``paper``
mode restricts them to ring elements. Over Z_n the two universes coincide.

All values are immutable and every operation is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    HomMismatch,
    InfiniteObjectClass,
    InvalidMultiplier,
    NotASubideal,
    NotComposable,
    NotInDomain,
    RingMismatch,
)
from .fracfield import Fraction, fraction_reduce
from .rings import ModularRing, Ring, RingElement, canonical_generator

FULL = "full"
PAPER = "paper"
MODES = (FULL, PAPER)


@dataclass(frozen=True)
class Ideal:
    """A principal ideal <generator> of its ring."""

    ring: Ring
    generator: RingElement
    given_generators: tuple = field(default=(), compare=False, repr=False)

    @property
    def is_zero(self) -> bool:
        return self.ring.is_zero(self.generator)

    @property
    def literal(self) -> str:
        return f"<{self.ring.format_element(self.generator)}>"

    def __str__(self) -> str:
        return self.literal


@dataclass(frozen=True)
class Morphism:
    """The map x -> x * multiplier from dom to cod, multiplier canonical."""

    dom: Ideal
    cod: Ideal
    multiplier: Fraction

    @property
    def is_zero(self) -> bool:
        return self.multiplier.is_zero

    @property
    def literal(self) -> str:
        fmt = self.dom.ring.format_element
        return f"rho({fmt(self.dom.generator)};{self.multiplier};{fmt(self.cod.generator)})"

    def __str__(self) -> str:
        return self.literal

    def __add__(self, other: Morphism) -> Morphism:
        return hom_add(self, other)

    def __neg__(self) -> Morphism:
        return hom_neg(self)

    def __matmul__(self, other: Morphism) -> Morphism:
        return compose(self, other)


@dataclass(frozen=True)
class HomSet:
    """All morphisms dom -> cod, as a cyclic description.

    The set is every ring multiple of ``base``. Over Z_n the multipliers
    live modulo ``modulus`` = n / dom.generator and ``elements`` lists each
    morphism explicitly; over the infinite backends both stay None.
    """

    dom: Ideal
    cod: Ideal
    base: Fraction
    modulus: int | None = None
    elements: tuple[Morphism, ...] | None = None


def _require_same_ring(a, b) -> None:
    if a.ring != b.ring:
        raise RingMismatch(f"mixed rings {a.ring} and {b.ring}")


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def ideal_new(ring: Ring, gens=()) -> Ideal:
    """Normalize a generator list into the ideal it generates."""
    gens = tuple(ring.coerce(g) for g in gens)
    return Ideal(ring, canonical_generator(ring, gens), gens)


def contains_element(A: Ideal, x: RingElement) -> bool:
    return A.ring.divides(A.generator, A.ring.coerce(x))


def is_subideal(A: Ideal, B: Ideal) -> bool:
    """A is contained in B exactly when B's generator divides A's."""
    _require_same_ring(A, B)
    return B.ring.divides(B.generator, A.generator)


def intersect(A: Ideal, B: Ideal) -> Ideal:
    _require_same_ring(A, B)
    ring = A.ring
    if isinstance(ring, ModularRing):
        return ideal_new(ring, [math.lcm(A.generator, B.generator) % ring.modulus])
    return ideal_new(ring, [ring.lcm(A.generator, B.generator)])


def ideal_sum(A: Ideal, B: Ideal) -> Ideal:
    _require_same_ring(A, B)
    return ideal_new(A.ring, [A.generator, B.generator])


def _as_fraction(ring: Ring, value) -> Fraction:
    if isinstance(value, Fraction):
        if value.ring != ring:
            raise RingMismatch(f"multiplier over {value.ring}, ideals over {ring}")
        return value
    return Fraction.from_element(ring, value)


def _canonical_multiplier(dom: Ideal, s: Fraction) -> Fraction:
    if dom.is_zero:
        return Fraction.zero(dom.ring)
    ring = dom.ring
    if isinstance(ring, ModularRing):
        m = ring.modulus // dom.generator
        return Fraction(ring, s.num % m, ring.one)
    return s


def _multiplier_sends_into(dom: Ideal, cod: Ideal, s: Fraction) -> bool:
    ring = dom.ring
    if dom.is_zero:
        return True
    if isinstance(ring, ModularRing):
        return ring.divides(cod.generator, (s.num * dom.generator) % ring.modulus)
    if not ring.divides(s.den, dom.generator):
        return False  # s * generator must land back inside the ring
    t = ring.exact_div(ring.mul(s.num, dom.generator), s.den)
    return ring.divides(cod.generator, t)


def _raw_morphism(dom: Ideal, cod: Ideal, s: Fraction) -> Morphism:
    # canonicalizes but skips the validity check; internal fast path
    return Morphism(dom, cod, _canonical_multiplier(dom, s))


def morphism_new(dom: Ideal, cod: Ideal, multiplier, mode: str = FULL) -> Morphism:
    """Build the validated, canonicalized morphism x -> x * multiplier."""
    _require_same_ring(dom, cod)
    _check_mode(mode)
    s = _as_fraction(dom.ring, multiplier)
    if mode == PAPER and not s.is_integral:
        raise InvalidMultiplier(f"{s} is not a ring element (paper mode)")
    if not _multiplier_sends_into(dom, cod, s):
        raise InvalidMultiplier(f"{s} does not map {dom} into {cod}")
    return _raw_morphism(dom, cod, s)


def zero_morphism(A: Ideal, B: Ideal) -> Morphism:
    _require_same_ring(A, B)
    return _raw_morphism(A, B, Fraction.zero(A.ring))


def identity(A: Ideal) -> Morphism:
    return _raw_morphism(A, A, Fraction.one(A.ring))


def inclusion(A: Ideal, B: Ideal) -> Morphism:
    """The inclusion j(A, B): the identity function restricted to A."""
    if not is_subideal(A, B):
        raise NotASubideal(f"{A} is not contained in {B}")
    return _raw_morphism(A, B, Fraction.one(A.ring))


def is_inclusion(f: Morphism) -> bool:
    return is_subideal(f.dom, f.cod) and f == inclusion(f.dom, f.cod)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f; multipliers multiply."""
    if f.cod != g.dom:
        raise NotComposable(f"cod {f.cod} of f differs from dom {g.dom} of g")
    return _raw_morphism(f.dom, g.cod, f.multiplier * g.multiplier)


def hom_add(f: Morphism, g: Morphism) -> Morphism:
    if f.dom != g.dom or f.cod != g.cod:
        raise HomMismatch(f"cannot add {f} and {g}")
    return _raw_morphism(f.dom, f.cod, f.multiplier + g.multiplier)


def hom_neg(f: Morphism) -> Morphism:
    return _raw_morphism(f.dom, f.cod, -f.multiplier)


def apply(f: Morphism, x: RingElement) -> RingElement:
    """Evaluate the morphism at x; the result lies in f.cod."""
    ring = f.dom.ring
    x = ring.coerce(x)
    if not contains_element(f.dom, x):
        raise NotInDomain(f"{ring.format_element(x)} is not in {f.dom}")
    s = f.multiplier
    if isinstance(ring, ModularRing):
        return (x * s.num) % ring.modulus
    return ring.exact_div(ring.mul(x, s.num), s.den)


def image(f: Morphism) -> Ideal:
    """The ideal f(dom) = <multiplier * dom.generator>."""
    ring = f.dom.ring
    if f.dom.is_zero or f.multiplier.is_zero:
        return ideal_new(ring)
    s = f.multiplier
    if isinstance(ring, ModularRing):
        return ideal_new(ring, [(f.dom.generator * s.num) % ring.modulus])
    return ideal_new(ring, [ring.exact_div(ring.mul(s.num, f.dom.generator), s.den)])


def kernel_generator(f: Morphism) -> RingElement:
    """Canonical generator of {x in dom : f(x) = 0}."""
    ring = f.dom.ring
    if isinstance(ring, ModularRing):
        a = f.dom.generator
        if a == 0:
            return 0
        n = ring.modulus
        g = math.gcd(n, (a * f.multiplier.num) % n)
        return canonical_generator(ring, [a * (n // g)])
    if f.multiplier.is_zero:
        return f.dom.generator
    return ring.zero


def is_mono(f: Morphism) -> bool:
    """Monomorphism test: the kernel is the zero ideal."""
    return f.dom.ring.is_zero(kernel_generator(f))


def is_epi(f: Morphism) -> bool:
    """Epimorphism test: surjectivity over Z_n, nonzero multiplier otherwise."""
    if isinstance(f.dom.ring, ModularRing):
        return image(f) == f.cod
    return not f.multiplier.is_zero or f.cod.is_zero


def enumerate_objects(ring: Ring) -> list[Ideal]:
    """All ideals of Z_n: one per divisor of n, with <n> normalized to <0>."""
    if not isinstance(ring, ModularRing):
        raise InfiniteObjectClass(f"{ring} has infinitely many ideals")
    n = ring.modulus
    gens = sorted(d % n for d in range(1, n + 1) if n % d == 0)
    return [Ideal(ring, g) for g in gens]


def ideal_elements(A: Ideal) -> tuple[int, ...]:
    """The elements of a Z_n ideal, sorted."""
    ring = A.ring
    if not isinstance(ring, ModularRing):
        raise InfiniteObjectClass(f"cannot list elements of an ideal of {ring}")
    a = A.generator
    if a == 0:
        return (0,)
    return tuple(range(0, ring.modulus, a))


def all_morphisms(ring: Ring) -> list[Morphism]:
    """Every morphism of the category of Z_n ideals, in canonical order."""
    objs = enumerate_objects(ring)
    return [f for A in objs for B in objs for f in enumerate_hom(A, B).elements]


def enumerate_hom(A: Ideal, B: Ideal, mode: str = FULL) -> HomSet:
    """Describe all morphisms A -> B.

    Z_n with A = <a>, a != 0: the valid canonical multipliers are exactly
    the multiples of b/gcd(a, b) modulo n/a, listed explicitly. A = <0>
    admits only the zero morphism. Over Z and Q[x] the description is
    cyclic with base b/a (full mode) or b/gcd(a, b) (paper mode).
    """
    _require_same_ring(A, B)
    _check_mode(mode)
    ring = A.ring
    a, b = A.generator, B.generator
    if isinstance(ring, ModularRing):
        if a == 0:
            return HomSet(A, B, Fraction.zero(ring), 1, (zero_morphism(A, B),))
        m = ring.modulus // a
        base = (b // math.gcd(a, b)) % m if b else 0
        multipliers = sorted({(k * base) % m for k in range(m)})
        elements = tuple(
            _raw_morphism(A, B, Fraction(ring, s, ring.one)) for s in multipliers
        )
        return HomSet(A, B, Fraction(ring, base, ring.one), m, elements)
    if A.is_zero or B.is_zero:
        return HomSet(A, B, Fraction.zero(ring))
    if mode == FULL:
        return HomSet(A, B, fraction_reduce(ring, b, a))
    base = ring.exact_div(b, ring.gcd(a, b))
    return HomSet(A, B, Fraction.from_element(ring, base))
