import pytest
from hypothesis import given
from hypothesis import strategies as st

from idealcat.errors import (
    InfiniteObjectClass,
    InvalidMultiplier,
    NotASubideal,
    NotComposable,
    NotInDomain,
    RingMismatch,
)
from idealcat.fracfield import Fraction, fraction_reduce
from idealcat.ideals import (
    HomSet,
    all_morphisms,
    apply,
    compose,
    contains_element,
    enumerate_hom,
    enumerate_objects,
    hom_add,
    hom_neg,
    ideal_elements,
    ideal_new,
    ideal_sum,
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
from idealcat.poly import parse_poly
from idealcat.rings import INTEGERS, RATIONAL_POLYNOMIALS, ModularRing

Z = INTEGERS
QX = RATIONAL_POLYNOMIALS
Z6 = ModularRing(6)


def zmod_set(n, g):
    """Independent membership oracle: the set an element generates in Z_n."""
    return {(k * g) % n for k in range(n)}


def zi(*gens):
    return ideal_new(Z, gens)


def z6i(*gens):
    return ideal_new(Z6, gens)


# --- objects ---------------------------------------------------------------


def test_ideal_new_examples():
    assert zi(4, 6).generator == 2
    assert z6i(4).generator == 2
    assert zmod_set(6, 4) == zmod_set(6, 2) == {0, 2, 4}
    assert ideal_new(QX).generator == QX.zero


def test_ideal_equality_ignores_provenance():
    assert zi(4, 6) == zi(2) == zi(-2)
    assert hash(zi(4, 6)) == hash(zi(2))
    assert zi(2) != z6i(2)
    assert ideal_new(Z6, [2]).given_generators == (2,)


def test_ideal_new_idempotent():
    A = z6i(4)
    assert ideal_new(Z6, [A.generator]) == A


def test_contains_element():
    assert contains_element(zi(2), 6)
    assert not contains_element(z6i(3), 2)
    assert 2 not in zmod_set(6, 3)
    assert contains_element(zi(0), 0)
    assert not contains_element(zi(0), 1)


def test_subideal():
    assert is_subideal(zi(6), zi(3))
    assert is_subideal(zi(2), zi(2))
    assert not is_subideal(z6i(2), z6i(3))
    with pytest.raises(RingMismatch):
        is_subideal(zi(2), z6i(2))


def test_intersect():
    assert intersect(zi(4), zi(6)) == zi(12)
    for spot in (12, 24):  # both lie in <4> and in <6>
        assert spot % 4 == 0 and spot % 6 == 0
    assert intersect(z6i(2), z6i(3)).is_zero
    assert zmod_set(6, 2) & zmod_set(6, 3) == {0}
    assert intersect(zi(5), zi(0)).is_zero


def test_intersect_agrees_with_set_intersection_mod_12():
    ring = ModularRing(12)
    for a in range(12):
        for b in range(12):
            A, B = ideal_new(ring, [a]), ideal_new(ring, [b])
            expected = zmod_set(12, a) & zmod_set(12, b)
            assert set(ideal_elements(intersect(A, B))) == expected


def test_ideal_sum():
    assert ideal_sum(zi(4), zi(6)) == zi(2)
    assert ideal_sum(z6i(2), z6i(3)) == z6i(1)
    assert {(a + b) % 6 for a in zmod_set(6, 2) for b in zmod_set(6, 3)} == zmod_set(6, 1)
    A = zi(7)
    assert ideal_sum(A, zi(0)) == A
    assert is_subideal(A, ideal_sum(A, zi(4)))


# --- morphisms -------------------------------------------------------------


def test_morphism_new_examples():
    f = morphism_new(zi(2), zi(3), 3)
    assert apply(f, 2) == 6 and contains_element(zi(3), 6)
    with pytest.raises(InvalidMultiplier):
        morphism_new(zi(2), zi(3), 1)
    zero = morphism_new(zi(5), zi(7), 0)
    assert zero.is_zero


def test_fraction_multiplier_modes():
    s = fraction_reduce(Z, 3, 2)
    f = morphism_new(zi(2), zi(3), s)
    assert apply(f, 4) == 6
    with pytest.raises(InvalidMultiplier):
        morphism_new(zi(2), zi(3), s, mode="paper")


def test_inclusion():
    j = inclusion(zi(6), zi(3))
    assert j.literal == "rho(6;1;3)"
    assert is_inclusion(j)
    assert inclusion(zi(2), zi(2)) == identity(zi(2))
    with pytest.raises(NotASubideal):
        inclusion(z6i(2), z6i(3))


def test_compose_formula_and_zero():
    # rho(m,t,p) . rho(n,s,m) = rho(n, s*t, p)
    f = morphism_new(zi(2), zi(6), 9)
    g = morphism_new(zi(6), zi(3), 2)
    assert compose(g, f) == morphism_new(zi(2), zi(3), 18)
    h = compose(morphism_new(z6i(2), z6i(3), 3), morphism_new(z6i(1), z6i(2), 4))
    assert h.is_zero  # 12 = 0 mod 6
    for x in range(6):
        assert (x * 4 * 3) % 6 == 0
    with pytest.raises(NotComposable):
        compose(f, g)


def test_identity_neutral():
    f = morphism_new(zi(2), zi(3), 3)
    assert compose(identity(zi(3)), f) == f
    assert compose(f, identity(zi(2))) == f


def test_hom_add_and_neg():
    one = z6i(1)
    assert hom_add(morphism_new(one, one, 4), morphism_new(one, one, 3)) == identity(one)
    f = morphism_new(one, z6i(2), 2)
    assert hom_neg(f).multiplier.num == 4  # -2 = 4 mod 6
    assert hom_add(f, hom_neg(f)) == zero_morphism(one, z6i(2))
    assert hom_add(f, zero_morphism(one, z6i(2))) == f
    assert (f + (-f)).is_zero and (f @ identity(one)) == f


def test_apply():
    f = morphism_new(zi(2), zi(3), 3)
    assert apply(f, 4) == 12
    assert apply(f, 0) == 0
    assert apply(morphism_new(z6i(1), z6i(2), 4), 5) == 2  # 20 mod 6
    with pytest.raises(NotInDomain):
        apply(f, 3)


def test_image():
    assert image(morphism_new(zi(2), zi(3), 3)) == zi(6)
    assert image(zero_morphism(zi(5), zi(2))).is_zero
    f = morphism_new(z6i(1), z6i(1), 2)
    assert image(f) == z6i(2)
    assert {apply(f, x) for x in range(6)} == zmod_set(6, 2)


def test_canonical_multiplier_mod_n_over_a():
    # multipliers out of <2> in Z_6 live mod 3: s and s+3 are the same map
    f = morphism_new(z6i(2), z6i(1), 1)
    g = morphism_new(z6i(2), z6i(1), 4)
    assert f == g
    assert all(apply(f, x) == apply(g, x) for x in ideal_elements(z6i(2)))
    out_of_zero = morphism_new(z6i(0), z6i(1), 5)
    assert out_of_zero.is_zero


def test_mono_examples():
    assert is_mono(morphism_new(zi(2), zi(3), 3))
    assert not is_mono(zero_morphism(zi(1), zi(1)))
    assert not is_mono(morphism_new(z6i(1), z6i(2), 2))  # kernel {0, 3}
    assert is_mono(zero_morphism(zi(0), zi(3)))


def test_epi_examples():
    assert is_epi(morphism_new(zi(2), zi(3), 3))  # epi without being surjective
    assert not is_epi(zero_morphism(zi(1), zi(1)))
    assert is_epi(morphism_new(z6i(1), z6i(2), 2))
    assert is_epi(zero_morphism(zi(1), zi(0)))


def test_enumerate_objects():
    assert [A.literal for A in enumerate_objects(Z6)] == ["<0>", "<1>", "<2>", "<3>"]
    assert [A.literal for A in enumerate_objects(ModularRing(2))] == ["<0>", "<1>"]
    assert [A.literal for A in enumerate_objects(ModularRing(4))] == ["<0>", "<1>", "<2>"]
    with pytest.raises(InfiniteObjectClass):
        enumerate_objects(Z)


def test_enumerate_hom_zmod():
    hs = enumerate_hom(z6i(2), z6i(3))
    assert [f.multiplier.num for f in hs.elements] == [0]
    hs = enumerate_hom(z6i(1), z6i(2))
    assert [f.multiplier.num for f in hs.elements] == [0, 2, 4]
    assert hs.modulus == 6 and hs.base.num == 2
    hs = enumerate_hom(z6i(0), z6i(2))
    assert len(hs.elements) == 1 and hs.elements[0].is_zero


def test_enumerate_hom_domains():
    hs = enumerate_hom(zi(2), zi(3))
    assert str(hs.base) == "3/2" and hs.modulus is None and hs.elements is None
    assert str(enumerate_hom(zi(2), zi(3), mode="paper").base) == "3"
    assert enumerate_hom(zi(0), zi(3)).base.is_zero
    assert enumerate_hom(zi(3), zi(0)).base.is_zero
    hs = enumerate_hom(ideal_new(QX, [parse_poly("x-1")]), ideal_new(QX, [parse_poly("x^2-1")]))
    assert str(hs.base) == "1x+1"


def test_homset_is_closed_group_z6():
    for A in enumerate_objects(Z6):
        for B in enumerate_objects(Z6):
            hs = enumerate_hom(A, B)
            members = set(hs.elements)
            assert zero_morphism(A, B) in members
            for f in members:
                assert hom_neg(f) in members
                for g in members:
                    assert hom_add(f, g) in members


def test_all_morphisms_count_z6():
    # rows by domain: <0>: 1+1+1+1; <1>: 1+6+3+2; <2>: 1+3+3+1; <3>: 1+2+1+2
    assert len(all_morphisms(Z6)) == 30


@given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40))
def test_pointwise_soundness_z(a, s_factor, x_factor):
    A = zi(a)
    B = zi(3)
    base = enumerate_hom(A, B).base
    f_mult = base * Fraction.from_element(Z, s_factor)
    f = morphism_new(A, B, f_mult)
    x = a * x_factor
    y = apply(f, x)
    assert contains_element(B, y)
    assert contains_element(image(f), y)


def test_homset_type_shape():
    hs = enumerate_hom(zi(2), zi(4))
    assert isinstance(hs, HomSet)
    assert hs.dom == zi(2) and hs.cod == zi(4)
