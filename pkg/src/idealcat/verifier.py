"""Axiom verification, the brute-force hom oracle, and existence audits.

Over Z_n every check quantifies exhaustively over all objects, morphisms
and elements; over Z and Q[x] the same laws run on seeded samples, with
universal properties probed on a grid of multiplier multiples. Checks are
independent pure computations assembled in a fixed order, so a report is
deterministic for a given (ring, bounds, seed).

The brute-force oracle rebuilds hom-sets as raw linear function tables
from first principles, independent of the Morphism machinery. The
existence audits search Z_n exhaustively for cokernels and biproducts
that the construction rules refuse: a construction the rule returns but
the search rejects is a failure, while a construction the search certifies
and the rule refuses is reported with status ``discrepancy`` and a
machine-checkable witness, and does not fail the suite.

``law_mutations`` documents five single-law defects (composition,
addition, kernel, factorization image, splitting corestriction); each must
be caught by at least one check on the Z_6 category.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction as Q
from itertools import product
from typing import Callable

from .constructions import (
    Biproduct,
    CokernelPair,
    Factorization,
    KernelPair,
    Splitting,
    biproduct,
    canonical_factorization,
    cokernel,
    copair_from_coproduct,
    kernel,
    pair_into_product,
    split_idempotent,
    zero_object,
)
from .errors import (
    CokernelDoesNotExist,
    HomMismatch,
    InvalidMultiplier,
    NontrivialIntersection,
    NotComposable,
    NotIdempotent,
    RingMismatch,
)
from .fracfield import Fraction
from .ideals import (
    FULL,
    Ideal,
    Morphism,
    _raw_morphism,
    apply,
    compose,
    contains_element,
    enumerate_hom,
    enumerate_objects,
    hom_add,
    hom_neg,
    ideal_elements,
    ideal_new,
    identity,
    image,
    inclusion,
    intersect,
    is_epi,
    is_inclusion,
    is_mono,
    is_subideal,
    morphism_new,
    zero_morphism,
)
from .poly import Poly
from .rings import ModularRing, RationalPolynomialRing, Ring


@dataclass(frozen=True)
class Bounds:
    """Sampling and enumeration configuration for the verifier.

    ``max_abs`` bounds sampled integer generators and multiplier factors,
    ``samples`` the number of sampled cases per check over the infinite
    backends, and ``search_ceiling`` the largest modulus for which the
    exhaustive cokernel/biproduct searches run during verify_ring.
    """

    seed: int = 0
    max_abs: int = 25
    samples: int = 500
    max_degree: int = 2
    search_ceiling: int = 12


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "discrepancy"
    witness: dict | str | None = None


@dataclass
class Report:
    """Named verdicts for one ring; a fail always carries a witness."""

    ring: Ring
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def totals(self) -> dict[str, int]:
        t = {"pass": 0, "fail": 0, "discrepancy": 0}
        for c in self.checks:
            t[c.status] += 1
        return t

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.literal,
            "checks": [
                {"name": c.name, "status": c.status, "witness": c.witness}
                for c in self.checks
            ],
            "totals": self.totals,
        }


@dataclass(frozen=True)
class LawTable:
    """The operations the checks exercise; swap entries in to test mutants."""

    compose: Callable[[Morphism, Morphism], Morphism]
    add: Callable[[Morphism, Morphism], Morphism]
    kernel: Callable[[Morphism], KernelPair]
    factorize: Callable[[Morphism], Factorization]
    split: Callable[[Morphism], Splitting]


STANDARD_LAWS = LawTable(
    compose=compose,
    add=hom_add,
    kernel=kernel,
    factorize=canonical_factorization,
    split=split_idempotent,
)


def law_mutations() -> dict[str, LawTable]:
    """Five documented single-law defects for mutation testing."""

    def compose_adds(g: Morphism, f: Morphism) -> Morphism:
        if f.cod != g.dom:
            raise NotComposable("mutant compose on non-composable pair")
        return _raw_morphism(f.dom, g.cod, f.multiplier + g.multiplier)

    def add_multiplies(f: Morphism, g: Morphism) -> Morphism:
        if f.dom != g.dom or f.cod != g.cod:
            raise HomMismatch("mutant add on mismatched pair")
        return _raw_morphism(f.dom, f.cod, f.multiplier * g.multiplier)

    def kernel_whole_domain(f: Morphism) -> KernelPair:
        return KernelPair(f.dom, identity(f.dom))

    def factor_skips_image(f: Morphism) -> Factorization:
        return Factorization(
            _raw_morphism(f.dom, f.cod, f.multiplier), identity(f.cod)
        )

    def split_identity_retraction(e: Morphism) -> Splitting:
        if e.dom != e.cod or compose(e, e) != e:
            raise NotIdempotent("mutant split on non-idempotent")
        im = image(e)
        return Splitting(
            im, _raw_morphism(e.dom, im, Fraction.one(e.dom.ring)), inclusion(im, e.dom)
        )

    return {
        "compose-adds-multipliers": replace(STANDARD_LAWS, compose=compose_adds),
        "add-multiplies-multipliers": replace(STANDARD_LAWS, add=add_multiplies),
        "kernel-whole-domain": replace(STANDARD_LAWS, kernel=kernel_whole_domain),
        "factorization-skips-image": replace(STANDARD_LAWS, factorize=factor_skips_image),
        "splitting-identity-retraction": replace(STANDARD_LAWS, split=split_identity_retraction),
    }


# ---------------------------------------------------------------------------
# brute-force hom oracle

FunctionTable = tuple[tuple[int, int], ...]


def _require_modular(ring: Ring) -> ModularRing:
    if not isinstance(ring, ModularRing):
        raise RingMismatch(f"exhaustive enumeration needs Z_n, got {ring}")
    return ring


def brute_force_hom_set(A: Ideal, B: Ideal) -> list[FunctionTable]:
    """All additive, homogeneous function tables A -> B over Z_n.

    Candidate images y of the generator a must satisfy (n/a)*y = 0; each
    candidate induces the full table k*a -> k*y, which is then filtered by
    literal additivity and homogeneity over every element pair. This never
    touches the Morphism machinery.
    """
    ring = _require_modular(A.ring)
    if A.ring != B.ring:
        raise RingMismatch(f"mixed rings {A.ring} and {B.ring}")
    n = ring.modulus
    a = A.generator
    if a == 0:
        return [((0, 0),)]
    m = n // a
    tables = []
    for y in ideal_elements(B):
        if (m * y) % n:
            continue
        table = {(k * a) % n: (k * y) % n for k in range(m)}
        if _table_is_linear(table, n):
            tables.append(tuple(sorted(table.items())))
    return tables


def _table_is_linear(table: dict[int, int], n: int) -> bool:
    xs = list(table)
    for x1 in xs:
        for x2 in xs:
            if table[(x1 + x2) % n] != (table[x1] + table[x2]) % n:
                return False
    for r in range(n):
        for x in xs:
            if table[(r * x) % n] != (r * table[x]) % n:
                return False
    return True


def morphism_table(f: Morphism) -> FunctionTable:
    """The function table a morphism induces on its (finite) domain."""
    return tuple((x, apply(f, x)) for x in ideal_elements(f.dom))


# ---------------------------------------------------------------------------
# exhaustive world for Z_n


class _FiniteWorld:
    """Precomputed objects, hom-sets and ideal elements of the Z_n category."""

    def __init__(self, ring: ModularRing, laws: LawTable):
        self.ring = ring
        self.laws = laws
        self.objects = enumerate_objects(ring)
        self.hom: dict[tuple[Ideal, Ideal], tuple[Morphism, ...]] = {
            (A, B): enumerate_hom(A, B).elements
            for A in self.objects
            for B in self.objects
        }
        self.morphisms = [f for homset in self.hom.values() for f in homset]
        self.elements = {A: ideal_elements(A) for A in self.objects}


def _m(f: Morphism) -> str:
    return f.literal


def _fin_compose_associative(w: _FiniteWorld):
    laws = w.laws
    for (B, C), inner in w.hom.items():
        for g in inner:
            for A in w.objects:
                for f in w.hom[(A, B)]:
                    gf = laws.compose(g, f)
                    for D in w.objects:
                        for h in w.hom[(C, D)]:
                            if laws.compose(h, gf) != laws.compose(laws.compose(h, g), f):
                                return {"f": _m(f), "g": _m(g), "h": _m(h)}
    return None


def _fin_identity_neutral(w: _FiniteWorld):
    laws = w.laws
    for f in w.morphisms:
        if laws.compose(identity(f.cod), f) != f:
            return {"f": _m(f), "law": "1 after f"}
        if laws.compose(f, identity(f.dom)) != f:
            return {"f": _m(f), "law": "f after 1"}
    return None


def _fin_hom_abelian(w: _FiniteWorld):
    laws = w.laws
    for (A, B), homset in w.hom.items():
        members = set(homset)
        zero = zero_morphism(A, B)
        if zero not in members:
            return {"hom": f"{A.literal}->{B.literal}", "law": "zero missing"}
        for f in homset:
            if hom_neg(f) not in members:
                return {"f": _m(f), "law": "negation closure"}
            if laws.add(f, zero) != f:
                return {"f": _m(f), "law": "zero neutral"}
            if laws.add(f, hom_neg(f)) != zero:
                return {"f": _m(f), "law": "inverse"}
            for g in homset:
                s = laws.add(f, g)
                if s not in members:
                    return {"f": _m(f), "g": _m(g), "law": "closure"}
                if s != laws.add(g, f):
                    return {"f": _m(f), "g": _m(g), "law": "commutativity"}
                for h in homset:
                    if laws.add(s, h) != laws.add(f, laws.add(g, h)):
                        return {"f": _m(f), "g": _m(g), "h": _m(h), "law": "associativity"}
    return None


def _fin_bilinear(w: _FiniteWorld):
    laws = w.laws
    for A in w.objects:
        for B in w.objects:
            for C in w.objects:
                outer = w.hom[(B, C)]
                for f, f2 in product(w.hom[(A, B)], repeat=2):
                    ff = laws.add(f, f2)
                    for g, g2 in product(outer, repeat=2):
                        lhs = laws.compose(laws.add(g, g2), ff)
                        rhs = laws.add(
                            laws.add(laws.compose(g, f), laws.compose(g, f2)),
                            laws.add(laws.compose(g2, f), laws.compose(g2, f2)),
                        )
                        if lhs != rhs:
                            return {"f": _m(f), "f'": _m(f2), "g": _m(g), "g'": _m(g2)}
    return None


def _fin_zero_object(w: _FiniteWorld):
    O = w.objects[0]
    if not O.is_zero:
        return {"law": "zero ideal missing from object list"}
    for B in w.objects:
        into, out = w.hom[(B, O)], w.hom[(O, B)]
        if len(into) != 1 or not into[0].is_zero:
            return {"object": B.literal, "law": "terminal"}
        if len(out) != 1 or not out[0].is_zero:
            return {"object": B.literal, "law": "initial"}
    return None


def _fin_pointwise_compose(w: _FiniteWorld):
    laws = w.laws
    for (B, C), inner in w.hom.items():
        for g in inner:
            for A in w.objects:
                for f in w.hom[(A, B)]:
                    gf = laws.compose(g, f)
                    for x in w.elements[A]:
                        if apply(gf, x) != apply(g, apply(f, x)):
                            return {"f": _m(f), "g": _m(g), "x": x}
    return None


def _fin_pointwise_add(w: _FiniteWorld):
    laws = w.laws
    n = w.ring.modulus
    for (A, B), homset in w.hom.items():
        for f, g in product(homset, repeat=2):
            s = laws.add(f, g)
            for x in w.elements[A]:
                if apply(s, x) != (apply(f, x) + apply(g, x)) % n:
                    return {"f": _m(f), "g": _m(g), "x": x}
    return None


def _fin_equality_pointwise(w: _FiniteWorld):
    for (A, B), homset in w.hom.items():
        tables = {morphism_table(f) for f in homset}
        if len(tables) != len(homset):
            return {
                "hom": f"{A.literal}->{B.literal}",
                "law": "distinct canonical morphisms share a function table",
            }
    return None


def _fin_hom_oracle(w: _FiniteWorld):
    for (A, B), homset in w.hom.items():
        ours = sorted(morphism_table(f) for f in homset)
        brute = sorted(brute_force_hom_set(A, B))
        if ours != brute:
            return {
                "hom": f"{A.literal}->{B.literal}",
                "enumerated": len(ours),
                "brute_force": len(brute),
            }
    return None


def _fin_kernel_zero_set(w: _FiniteWorld):
    for f in w.morphisms:
        K, j = w.laws.kernel(f)
        if j.dom != K or j.cod != f.dom or not is_inclusion(j):
            return {"f": _m(f), "law": "kernel inclusion shape"}
        if compose(f, j) != zero_morphism(K, f.cod):
            return {"f": _m(f), "law": "f after inclusion is zero"}
        zero_set = tuple(x for x in w.elements[f.dom] if apply(f, x) == 0)
        if zero_set != w.elements[K]:
            return {"f": _m(f), "kernel": K.literal, "zero_set": list(zero_set)}
    return None


def _fin_kernel_universal(w: _FiniteWorld):
    for f in w.morphisms:
        K, j = w.laws.kernel(f)
        for K2 in w.objects:
            target = zero_morphism(K2, f.cod)
            for j2 in w.hom[(K2, f.dom)]:
                if compose(f, j2) != target:
                    continue
                count = sum(1 for h in w.hom[(K2, K)] if compose(j, h) == j2)
                if count != 1:
                    return {"f": _m(f), "j'": _m(j2), "factorizations": count}
    return None


def _fin_cokernel_universal(w: _FiniteWorld):
    for f in w.morphisms:
        try:
            E, p = cokernel(f)
        except CokernelDoesNotExist:
            continue
        if compose(p, f) != zero_morphism(f.dom, E):
            return {"f": _m(f), "law": "projection after f is zero"}
        for E2 in w.objects:
            target = zero_morphism(f.dom, E2)
            for q in w.hom[(f.cod, E2)]:
                if compose(q, f) != target:
                    continue
                count = sum(1 for h in w.hom[(E, E2)] if compose(h, p) == q)
                if count != 1:
                    return {"f": _m(f), "q": _m(q), "factorizations": count}
    return None


def _left_cancellable(w: _FiniteWorld, f: Morphism) -> bool:
    for C in w.objects:
        seen = set()
        for g in w.hom[(C, f.dom)]:
            fg = compose(f, g)
            if fg in seen:
                return False
            seen.add(fg)
    return True


def _right_cancellable(w: _FiniteWorld, f: Morphism) -> bool:
    for D in w.objects:
        seen = set()
        for g in w.hom[(f.cod, D)]:
            gf = compose(g, f)
            if gf in seen:
                return False
            seen.add(gf)
    return True


def _fin_factorization(w: _FiniteWorld):
    for f in w.morphisms:
        q, j = w.laws.factorize(f)
        im = image(f)
        if q.dom != f.dom or q.cod != im or j.dom != im or j.cod != f.cod:
            return {"f": _m(f), "law": "factor shapes", "q": _m(q), "j": _m(j)}
        if not is_inclusion(j):
            return {"f": _m(f), "j": _m(j), "law": "j is an inclusion"}
        if compose(j, q) != f:
            return {"f": _m(f), "law": "j after q recovers f"}
        if not is_epi(q):
            return {"f": _m(f), "q": _m(q), "law": "q is epi"}
        if not _right_cancellable(w, q):
            return {"f": _m(f), "q": _m(q), "law": "q right-cancellation"}
    return None


def _fin_mono_cancellation(w: _FiniteWorld):
    for f in w.morphisms:
        if is_mono(f) != _left_cancellable(w, f):
            return {"f": _m(f), "is_mono": is_mono(f)}
    return None


def _fin_epi_cancellation(w: _FiniteWorld):
    for f in w.morphisms:
        if is_epi(f) != _right_cancellable(w, f):
            return {"f": _m(f), "is_epi": is_epi(f)}
    return None


def _fin_subobject_preorder(w: _FiniteWorld):
    for A in w.objects:
        if not is_subideal(A, A):
            return {"object": A.literal, "law": "reflexivity"}
    for A, B in product(w.objects, repeat=2):
        if is_subideal(A, B) and is_subideal(B, A) and A != B:
            return {"A": A.literal, "B": B.literal, "law": "antisymmetry"}
        for C in w.objects:
            if is_subideal(A, B) and is_subideal(B, C) and not is_subideal(A, C):
                return {"A": A.literal, "B": B.literal, "C": C.literal, "law": "transitivity"}
    return None


def _fin_inclusion_axioms(w: _FiniteWorld):
    for A, B in product(w.objects, repeat=2):
        if not is_subideal(A, B):
            continue
        j = inclusion(A, B)
        if not is_mono(j):
            return {"j": _m(j), "law": "inclusions are mono"}
        if any(apply(j, x) != x for x in w.elements[A]):
            return {"j": _m(j), "law": "inclusion acts as identity"}
        for C in w.objects:
            if is_subideal(B, C):
                if compose(inclusion(B, C), j) != inclusion(A, C):
                    return {"A": A.literal, "B": B.literal, "C": C.literal,
                            "law": "inclusions compose to inclusions"}
    # right division: j1 = j2 . h forces h to be an inclusion
    for C in w.objects:
        subs = [A for A in w.objects if is_subideal(A, C)]
        for A in subs:
            j1 = inclusion(A, C)
            for B in subs:
                j2 = inclusion(B, C)
                for h in w.hom[(A, B)]:
                    if compose(j2, h) == j1 and not is_inclusion(h):
                        return {"j1": _m(j1), "j2": _m(j2), "h": _m(h),
                                "law": "right division"}
    return None


def _fin_idempotent_split(w: _FiniteWorld):
    for A in w.objects:
        for e in w.hom[(A, A)]:
            if compose(e, e) != e:
                continue
            B, g, f = w.laws.split(e)
            if compose(g, f) != identity(B):
                return {"e": _m(e), "law": "retraction after section is identity"}
            if compose(f, g) != e:
                return {"e": _m(e), "law": "section after retraction is e"}
    return None


def _fin_idempotent_kernel(w: _FiniteWorld):
    for A in w.objects:
        for e in w.hom[(A, A)]:
            if compose(e, e) != e:
                continue
            K, j = w.laws.kernel(e)
            if compose(e, j) != zero_morphism(K, A):
                return {"e": _m(e), "law": "idempotent kernel"}
    return None


def _fin_biproduct(w: _FiniteWorld):
    for i, A in enumerate(w.objects):
        for B in w.objects[i:]:
            if not intersect(A, B).is_zero:
                try:
                    biproduct(A, B)
                except NontrivialIntersection:
                    continue
                return {"A": A.literal, "B": B.literal,
                        "law": "nontrivial intersection must be refused"}
            bp = biproduct(A, B)
            checks = (
                (compose(bp.p1, bp.i1), identity(A), "p1 i1 = 1"),
                (compose(bp.p2, bp.i2), identity(B), "p2 i2 = 1"),
                (compose(bp.p1, bp.i2), zero_morphism(B, A), "p1 i2 = 0"),
                (compose(bp.p2, bp.i1), zero_morphism(A, B), "p2 i1 = 0"),
                (hom_add(compose(bp.i1, bp.p1), compose(bp.i2, bp.p2)),
                 identity(bp.object), "i1 p1 + i2 p2 = 1"),
            )
            for got, expected, law in checks:
                if got != expected:
                    return {"A": A.literal, "B": B.literal, "law": law}
            for C in w.objects:
                for f1 in w.hom[(C, A)]:
                    for f2 in w.hom[(C, B)]:
                        h = pair_into_product(bp, f1, f2)
                        if compose(bp.p1, h) != f1 or compose(bp.p2, h) != f2:
                            return {"f1": _m(f1), "f2": _m(f2), "law": "pairing"}
                        count = sum(
                            1
                            for h2 in w.hom[(C, bp.object)]
                            if compose(bp.p1, h2) == f1 and compose(bp.p2, h2) == f2
                        )
                        if count != 1:
                            return {"f1": _m(f1), "f2": _m(f2),
                                    "law": "pairing uniqueness", "count": count}
                for g1 in w.hom[(A, C)]:
                    for g2 in w.hom[(B, C)]:
                        h = copair_from_coproduct(bp, g1, g2)
                        if compose(h, bp.i1) != g1 or compose(h, bp.i2) != g2:
                            return {"g1": _m(g1), "g2": _m(g2), "law": "copairing"}
                        count = sum(
                            1
                            for h2 in w.hom[(bp.object, C)]
                            if compose(h2, bp.i1) == g1 and compose(h2, bp.i2) == g2
                        )
                        if count != 1:
                            return {"g1": _m(g1), "g2": _m(g2),
                                    "law": "copairing uniqueness", "count": count}
    return None


_FINITE_CHECKS = [
    ("compose-associative", _fin_compose_associative),
    ("identity-neutral", _fin_identity_neutral),
    ("hom-abelian-group", _fin_hom_abelian),
    ("compose-bilinear", _fin_bilinear),
    ("zero-object-initial-terminal", _fin_zero_object),
    ("compose-pointwise", _fin_pointwise_compose),
    ("add-pointwise", _fin_pointwise_add),
    ("morphism-equality-pointwise", _fin_equality_pointwise),
    ("hom-oracle-agreement", _fin_hom_oracle),
    ("kernel-zero-set", _fin_kernel_zero_set),
    ("kernel-universal", _fin_kernel_universal),
    ("cokernel-universal", _fin_cokernel_universal),
    ("factorization-epi-inclusion", _fin_factorization),
    ("mono-left-cancellation", _fin_mono_cancellation),
    ("epi-right-cancellation", _fin_epi_cancellation),
    ("subobject-strict-preorder", _fin_subobject_preorder),
    ("inclusion-axioms", _fin_inclusion_axioms),
    ("idempotent-splitting", _fin_idempotent_split),
    ("idempotent-kernel", _fin_idempotent_kernel),
    ("biproduct-laws", _fin_biproduct),
]


# ---------------------------------------------------------------------------
# sampled world for Z and Q[x]


class _SampledWorld:
    """Seeded sample pools over an infinite backend."""

    def __init__(self, ring: Ring, bounds: Bounds, mode: str, laws: LawTable):
        self.ring = ring
        self.bounds = bounds
        self.mode = mode
        self.laws = laws
        self.rng = random.Random(f"{bounds.seed}:{ring.literal}:{mode}")

    def random_element(self, nonzero: bool = False):
        rng, ring = self.rng, self.ring
        if isinstance(ring, RationalPolynomialRing):
            while True:
                degree = rng.randint(0, self.bounds.max_degree)
                coeffs = [Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(degree + 1)]
                p = Poly(coeffs)
                if not (nonzero and p.is_zero):
                    return p
        while True:
            k = rng.randint(-self.bounds.max_abs, self.bounds.max_abs)
            if not (nonzero and k == 0):
                return k

    def random_ideal(self, nonzero: bool = False) -> Ideal:
        if not nonzero and self.rng.random() < 0.1:
            return ideal_new(self.ring)
        return ideal_new(self.ring, [self.random_element(nonzero=True)])

    def hom_element(self, A: Ideal, B: Ideal, factor=None) -> Morphism:
        base = enumerate_hom(A, B, self.mode).base
        if factor is None:
            factor = self.random_element()
        scaled = base * Fraction.from_element(self.ring, self.ring.coerce(factor))
        return _raw_morphism(A, B, scaled)

    def random_point(self, A: Ideal):
        return self.ring.mul(self.ring.coerce(self.random_element()), A.generator)

    def chain(self, length: int) -> tuple:
        objs = [self.random_ideal() for _ in range(length + 1)]
        maps = [self.hom_element(objs[i], objs[i + 1]) for i in range(length)]
        return tuple(maps)


def _smp_compose_associative(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples):
        f, g, h = w.chain(3)
        if laws.compose(h, laws.compose(g, f)) != laws.compose(laws.compose(h, g), f):
            return {"f": _m(f), "g": _m(g), "h": _m(h)}
    return None


def _smp_identity_neutral(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples):
        (f,) = w.chain(1)
        if laws.compose(identity(f.cod), f) != f or laws.compose(f, identity(f.dom)) != f:
            return {"f": _m(f)}
    return None


def _smp_hom_abelian(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples):
        A, B = w.random_ideal(), w.random_ideal()
        f, g, h = (w.hom_element(A, B) for _ in range(3))
        zero = zero_morphism(A, B)
        if laws.add(f, g) != laws.add(g, f):
            return {"f": _m(f), "g": _m(g), "law": "commutativity"}
        if laws.add(laws.add(f, g), h) != laws.add(f, laws.add(g, h)):
            return {"f": _m(f), "g": _m(g), "h": _m(h), "law": "associativity"}
        if laws.add(f, zero) != f:
            return {"f": _m(f), "law": "zero neutral"}
        if laws.add(f, hom_neg(f)) != zero:
            return {"f": _m(f), "law": "inverse"}
    return None


def _smp_bilinear(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples):
        A, B, C = (w.random_ideal() for _ in range(3))
        f, f2 = w.hom_element(A, B), w.hom_element(A, B)
        g, g2 = w.hom_element(B, C), w.hom_element(B, C)
        lhs = laws.compose(laws.add(g, g2), laws.add(f, f2))
        rhs = laws.add(
            laws.add(laws.compose(g, f), laws.compose(g, f2)),
            laws.add(laws.compose(g2, f), laws.compose(g2, f2)),
        )
        if lhs != rhs:
            return {"f": _m(f), "f'": _m(f2), "g": _m(g), "g'": _m(g2)}
    return None


def _smp_zero_object(w: _SampledWorld):
    O = zero_object(w.ring)
    for _ in range(w.bounds.samples // 5):
        B = w.random_ideal(nonzero=True)
        if not enumerate_hom(O, B, w.mode).base.is_zero:
            return {"object": B.literal, "law": "initial"}
        if not enumerate_hom(B, O, w.mode).base.is_zero:
            return {"object": B.literal, "law": "terminal"}
        try:
            morphism_new(B, O, Fraction.one(w.ring))
            return {"object": B.literal, "law": "only the zero map enters the zero ideal"}
        except InvalidMultiplier:
            pass
    return None


def _smp_pointwise_compose(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples):
        f, g = w.chain(2)
        gf = laws.compose(g, f)
        x = w.random_point(f.dom)
        if apply(gf, x) != apply(g, apply(f, x)):
            return {"f": _m(f), "g": _m(g), "x": w.ring.format_element(x)}
    return None


def _smp_pointwise_add(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples):
        A, B = w.random_ideal(), w.random_ideal()
        f, g = w.hom_element(A, B), w.hom_element(A, B)
        s = laws.add(f, g)
        x = w.random_point(A)
        if apply(s, x) != w.ring.add(apply(f, x), apply(g, x)):
            return {"f": _m(f), "g": _m(g), "x": w.ring.format_element(x)}
    return None


def _smp_equality_pointwise(w: _SampledWorld):
    for _ in range(w.bounds.samples):
        A = w.random_ideal(nonzero=True)
        B = w.random_ideal()
        f, g = w.hom_element(A, B), w.hom_element(A, B)
        if (f == g) != (apply(f, A.generator) == apply(g, A.generator)):
            return {"f": _m(f), "g": _m(g)}
    return None


def _smp_kernel_zero_set(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples):
        (f,) = w.chain(1)
        K, j = laws.kernel(f)
        expected = f.dom if f.multiplier.is_zero else zero_object(w.ring)
        if K != expected:
            return {"f": _m(f), "kernel": K.literal, "expected": expected.literal}
        if j.dom != K or j.cod != f.dom or not is_inclusion(j):
            return {"f": _m(f), "law": "kernel inclusion shape"}
        if compose(f, j) != zero_morphism(K, f.cod):
            return {"f": _m(f), "law": "f after inclusion is zero"}
        x = w.random_point(f.dom)
        if (w.ring.is_zero(apply(f, x))) != contains_element(K, x):
            return {"f": _m(f), "x": w.ring.format_element(x)}
    return None


def _smp_kernel_universal(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples // 5):
        (f,) = w.chain(1)
        K, j = laws.kernel(f)
        K2 = w.random_ideal()
        if f.multiplier.is_zero:
            j2 = w.hom_element(K2, f.dom)
        else:
            j2 = zero_morphism(K2, f.dom)
        if compose(f, j2) != zero_morphism(K2, f.cod):
            continue
        h = morphism_new(K2, K, j2.multiplier)
        if compose(j, h) != j2:
            return {"f": _m(f), "j'": _m(j2), "law": "existence"}
        base = enumerate_hom(K2, K, w.mode).base
        for k in (1, 2, -1):
            shift = base * Fraction.from_element(w.ring, w.ring.coerce(k))
            if shift.is_zero:
                continue
            other = _raw_morphism(K2, K, h.multiplier + shift)
            if compose(j, other) == j2:
                return {"f": _m(f), "j'": _m(j2), "law": "uniqueness"}
    return None


def _smp_cokernel_rule(w: _SampledWorld):
    for _ in range(w.bounds.samples // 5):
        A = w.random_ideal(nonzero=True)
        B = w.random_ideal(nonzero=True)
        zero = zero_morphism(A, B)
        E, p = cokernel(zero)
        if E != B or p != identity(B):
            return {"f": _m(zero), "law": "zero map gets (cod, identity)"}
        sample = w.hom_element(A, B, factor=w.random_element(nonzero=True))
        onto = morphism_new(A, image(sample), sample.multiplier)
        if not onto.is_zero:
            E, p = cokernel(onto)
            if not E.is_zero or p != zero_morphism(onto.cod, E):
                return {"f": _m(onto), "law": "surjection gets the zero object"}
        proper = w.hom_element(A, B, factor=w.ring.mul(
            w.ring.coerce(2), w.ring.coerce(w.random_element(nonzero=True))))
        if image(proper) == B or proper.is_zero:
            continue
        try:
            cokernel(proper)
            return {"f": _m(proper), "law": "nonzero non-surjection must be refused"}
        except CokernelDoesNotExist:
            pass
    return None


def _smp_factorization(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples):
        (f,) = w.chain(1)
        q, j = laws.factorize(f)
        im = image(f)
        if q.dom != f.dom or q.cod != im or j.dom != im or j.cod != f.cod:
            return {"f": _m(f), "law": "factor shapes"}
        if not is_inclusion(j):
            return {"f": _m(f), "j": _m(j), "law": "j is an inclusion"}
        if compose(j, q) != f:
            return {"f": _m(f), "law": "j after q recovers f"}
        if not is_epi(q):
            return {"f": _m(f), "q": _m(q), "law": "q is epi"}
    return None


def _smp_mono_criterion(w: _SampledWorld):
    for _ in range(w.bounds.samples):
        (f,) = w.chain(1)
        expected = f.dom.is_zero or not f.multiplier.is_zero
        if is_mono(f) != expected:
            return {"f": _m(f), "is_mono": is_mono(f), "expected": expected}
        C = w.random_ideal(nonzero=True)
        g1 = w.hom_element(C, f.dom)
        g2 = w.hom_element(C, f.dom)
        if expected:
            if g1 != g2 and compose(f, g1) == compose(f, g2):
                return {"f": _m(f), "g1": _m(g1), "g2": _m(g2), "law": "left cancellation"}
        elif not f.dom.is_zero:
            a, b = identity(f.dom), hom_add(identity(f.dom), identity(f.dom))
            if compose(f, a) != compose(f, b):
                return {"f": _m(f), "law": "zero map should not cancel"}
    return None


def _smp_epi_criterion(w: _SampledWorld):
    for _ in range(w.bounds.samples):
        (f,) = w.chain(1)
        expected = f.cod.is_zero or not f.multiplier.is_zero
        if is_epi(f) != expected:
            return {"f": _m(f), "is_epi": is_epi(f), "expected": expected}
        D = w.random_ideal(nonzero=True)
        g1 = w.hom_element(f.cod, D)
        g2 = w.hom_element(f.cod, D)
        if expected and g1 != g2 and compose(g1, f) == compose(g2, f):
            return {"f": _m(f), "g1": _m(g1), "g2": _m(g2), "law": "right cancellation"}
    return None


def _smp_subobject_preorder(w: _SampledWorld):
    ring = w.ring
    for _ in range(w.bounds.samples):
        c = w.random_element(nonzero=True)
        k1 = w.random_element(nonzero=True)
        k2 = w.random_element(nonzero=True)
        C = ideal_new(ring, [c])
        B = ideal_new(ring, [ring.mul(c, k1)])
        A = ideal_new(ring, [ring.mul(ring.mul(c, k1), k2)])
        if not (is_subideal(A, B) and is_subideal(B, C) and is_subideal(A, C)):
            return {"A": A.literal, "B": B.literal, "C": C.literal, "law": "chain order"}
        if not is_subideal(A, A):
            return {"A": A.literal, "law": "reflexivity"}
        neg = ideal_new(ring, [ring.neg(A.generator)])
        if is_subideal(A, neg) and is_subideal(neg, A) and A != neg:
            return {"A": A.literal, "law": "antisymmetry"}
    return None


def _smp_inclusion_axioms(w: _SampledWorld):
    ring = w.ring
    for _ in range(w.bounds.samples // 5):
        c = w.random_element(nonzero=True)
        k1 = w.random_element(nonzero=True)
        k2 = w.random_element(nonzero=True)
        C = ideal_new(ring, [c])
        B = ideal_new(ring, [ring.mul(c, k1)])
        A = ideal_new(ring, [ring.mul(ring.mul(c, k1), k2)])
        if compose(inclusion(B, C), inclusion(A, B)) != inclusion(A, C):
            return {"A": A.literal, "B": B.literal, "C": C.literal,
                    "law": "inclusions compose to inclusions"}
        if not is_mono(inclusion(A, C)) and not A.is_zero:
            return {"A": A.literal, "C": C.literal, "law": "inclusions are mono"}
        # right division: the solver of j(B,C) . h = j(A,C) is the inclusion
        h = morphism_new(A, B, Fraction.one(ring))
        if compose(inclusion(B, C), h) != inclusion(A, C) or not is_inclusion(h):
            return {"A": A.literal, "B": B.literal, "law": "right division"}
    return None


def _smp_idempotent_split(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples // 5):
        A = w.random_ideal()
        for e in (zero_morphism(A, A), identity(A)):
            B, g, f = laws.split(e)
            if compose(g, f) != identity(B) or compose(f, g) != e:
                return {"e": _m(e), "law": "splitting equations"}
        if not A.is_zero:
            bad = w.hom_element(A, A, factor=2)
            try:
                laws.split(bad)
                return {"e": _m(bad), "law": "non-idempotent must be refused"}
            except NotIdempotent:
                pass
    return None


def _smp_idempotent_kernel(w: _SampledWorld):
    laws = w.laws
    for _ in range(w.bounds.samples // 5):
        A = w.random_ideal()
        for e in (zero_morphism(A, A), identity(A)):
            K, j = laws.kernel(e)
            if compose(e, j) != zero_morphism(K, A):
                return {"e": _m(e), "law": "idempotent kernel"}
    return None


_SAMPLED_CHECKS = [
    ("compose-associative", _smp_compose_associative),
    ("identity-neutral", _smp_identity_neutral),
    ("hom-abelian-group", _smp_hom_abelian),
    ("compose-bilinear", _smp_bilinear),
    ("zero-object-initial-terminal", _smp_zero_object),
    ("compose-pointwise", _smp_pointwise_compose),
    ("add-pointwise", _smp_pointwise_add),
    ("morphism-equality-pointwise", _smp_equality_pointwise),
    ("kernel-zero-set", _smp_kernel_zero_set),
    ("kernel-universal", _smp_kernel_universal),
    ("cokernel-rule", _smp_cokernel_rule),
    ("factorization-epi-inclusion", _smp_factorization),
    ("mono-criterion", _smp_mono_criterion),
    ("epi-criterion", _smp_epi_criterion),
    ("subobject-strict-preorder", _smp_subobject_preorder),
    ("inclusion-axioms", _smp_inclusion_axioms),
    ("idempotent-splitting", _smp_idempotent_split),
    ("idempotent-kernel", _smp_idempotent_kernel),
]


def check_axioms(
    ring: Ring,
    bounds: Bounds | None = None,
    mode: str = FULL,
    laws: LawTable | None = None,
) -> Report:
    """Run every axiom check for one ring; failures become report entries."""
    bounds = bounds or Bounds()
    laws = laws or STANDARD_LAWS
    if isinstance(ring, ModularRing):
        world = _FiniteWorld(ring, laws)
        steps = _FINITE_CHECKS
    else:
        world = _SampledWorld(ring, bounds, mode, laws)
        steps = _SAMPLED_CHECKS
    report = Report(ring)
    for name, fn in steps:
        try:
            witness = fn(world)
        except Exception as exc:  # mutated laws may raise anywhere mid-check
            witness = {"error": f"{type(exc).__name__}: {exc}"}
        status = "pass" if witness is None else "fail"
        report.checks.append(CheckResult(name, status, witness))
    return report


# ---------------------------------------------------------------------------
# existence audits: exhaustive searches vs the construction rules


def _has_cokernel_property(w: _FiniteWorld, f: Morphism, E: Ideal, p: Morphism) -> bool:
    for E2 in w.objects:
        target = zero_morphism(f.dom, E2)
        for q in w.hom[(f.cod, E2)]:
            if compose(q, f) != target:
                continue
            if sum(1 for h in w.hom[(E, E2)] if compose(h, p) == q) != 1:
                return False
    return True


def _search_cokernel(w: _FiniteWorld, f: Morphism) -> list[CokernelPair]:
    found = []
    for E in w.objects:
        target = zero_morphism(f.dom, E)
        for p in w.hom[(f.cod, E)]:
            if compose(p, f) == target and _has_cokernel_property(w, f, E, p):
                found.append(CokernelPair(E, p))
    return found


def search_cokernel(f: Morphism) -> list[CokernelPair]:
    """Every (E, p) satisfying the full cokernel universal property, by
    exhaustive search over the Z_n category."""
    ring = _require_modular(f.dom.ring)
    return _search_cokernel(_FiniteWorld(ring, STANDARD_LAWS), f)


def _is_product(w: _FiniteWorld, A: Ideal, B: Ideal, P: Ideal, p1, p2) -> bool:
    for C in w.objects:
        for f1 in w.hom[(C, A)]:
            for f2 in w.hom[(C, B)]:
                count = 0
                for h in w.hom[(C, P)]:
                    if compose(p1, h) == f1 and compose(p2, h) == f2:
                        count += 1
                        if count > 1:
                            return False
                if count != 1:
                    return False
    return True


def _is_coproduct(w: _FiniteWorld, A: Ideal, B: Ideal, P: Ideal, i1, i2) -> bool:
    for C in w.objects:
        for g1 in w.hom[(A, C)]:
            for g2 in w.hom[(B, C)]:
                count = 0
                for h in w.hom[(P, C)]:
                    if compose(h, i1) == g1 and compose(h, i2) == g2:
                        count += 1
                        if count > 1:
                            return False
                if count != 1:
                    return False
    return True


def _search_biproduct(w: _FiniteWorld, A: Ideal, B: Ideal) -> list[Biproduct]:
    products = []
    coproducts = []
    for P in w.objects:
        for p1 in w.hom[(P, A)]:
            for p2 in w.hom[(P, B)]:
                if _is_product(w, A, B, P, p1, p2):
                    products.append((P, p1, p2))
        for i1 in w.hom[(A, P)]:
            for i2 in w.hom[(B, P)]:
                if _is_coproduct(w, A, B, P, i1, i2):
                    coproducts.append((P, i1, i2))
    return [
        Biproduct(P, p1, p2, i1, i2)
        for (P, p1, p2) in products
        for (P2, i1, i2) in coproducts
        if P == P2
    ]


def search_biproduct(A: Ideal, B: Ideal) -> list[Biproduct]:
    """Every tuple satisfying both universal properties, by exhaustive
    search over the Z_n category."""
    ring = _require_modular(A.ring)
    if A.ring != B.ring:
        raise RingMismatch(f"mixed rings {A.ring} and {B.ring}")
    return _search_biproduct(_FiniteWorld(ring, STANDARD_LAWS), A, B)


def audit_existence(ring: Ring) -> list[CheckResult]:
    """Compare the cokernel and biproduct rules against exhaustive searches.

    Constructions the rules return must be certified by the search (a miss
    is a failure); constructions the search certifies but the rules refuse
    are emitted as ``discrepancy`` entries with the found witnesses.
    """
    w = _FiniteWorld(_require_modular(ring), STANDARD_LAWS)
    entries: list[CheckResult] = []

    agreement = None
    refused_but_found: list[tuple[Morphism, list[CokernelPair]]] = []
    for f in w.morphisms:
        found = _search_cokernel(w, f)
        try:
            pair = cokernel(f)
        except CokernelDoesNotExist:
            if found:
                refused_but_found.append((f, found))
            continue
        if pair not in found and agreement is None:
            agreement = {"f": _m(f), "law": "returned cokernel fails the search"}
    entries.append(CheckResult(
        "cokernel-rule-agreement", "pass" if agreement is None else "fail", agreement))
    for f, found in refused_but_found:
        entries.append(CheckResult(
            f"cokernel-converse[{f.literal}]",
            "discrepancy",
            {
                "morphism": f.literal,
                "rule": "refused: neither zero nor surjective",
                "found": [
                    {"object": E.literal, "projection": _m(p)} for E, p in found
                ],
                "certificate": (
                    "each listed pair satisfies projection after f = 0 and factors "
                    "every zero-composing morphism uniquely, checked over all objects"
                ),
            },
        ))

    agreement = None
    pairs_found: list[tuple[Ideal, Ideal, int]] = []
    for i, A in enumerate(w.objects):
        for B in w.objects[i:]:
            found = _search_biproduct(w, A, B)
            if intersect(A, B).is_zero:
                bp = biproduct(A, B)
                if bp not in found and agreement is None:
                    agreement = {"A": A.literal, "B": B.literal,
                                 "law": "constructed biproduct fails the search"}
            elif found:
                pairs_found.append((A, B, len(found)))
    entries.append(CheckResult(
        "biproduct-rule-agreement", "pass" if agreement is None else "fail", agreement))
    for A, B, count in pairs_found:
        entries.append(CheckResult(
            f"biproduct-converse[({A.literal},{B.literal})]",
            "discrepancy",
            {
                "pair": [A.literal, B.literal],
                "rule": "refused: nontrivial intersection",
                "found": count,
                "certificate": "tuples satisfy both universal properties exhaustively",
            },
        ))
    return entries


def verify_ring(
    ring: Ring,
    bounds: Bounds | None = None,
    mode: str = FULL,
    laws: LawTable | None = None,
) -> Report:
    """check_axioms plus, for Z_n within the search ceiling, the audits."""
    bounds = bounds or Bounds()
    report = check_axioms(ring, bounds, mode, laws)
    if isinstance(ring, ModularRing) and ring.modulus <= bounds.search_ceiling:
        report.checks.extend(audit_existence(ring))
    return report
