import json
from itertools import product

import pytest

from idealcat.constructions import CokernelPair, cokernel
from idealcat.errors import CokernelDoesNotExist, RingMismatch
from idealcat.ideals import (
    all_morphisms,
    enumerate_hom,
    enumerate_objects,
    ideal_elements,
    ideal_new,
    morphism_new,
)
from idealcat.rings import INTEGERS, RATIONAL_POLYNOMIALS, ModularRing
from idealcat.verifier import (
    Bounds,
    brute_force_hom_set,
    check_axioms,
    law_mutations,
    morphism_table,
    search_biproduct,
    search_cokernel,
    verify_ring,
)

Z6 = ModularRing(6)


def exhaustive_linear_tables(n, a, b):
    """Second, fully independent oracle: try EVERY function table A -> B and
    keep the additive homogeneous ones. Exponential, so only for tiny n."""
    ring = ModularRing(n)
    xs = ideal_elements(ideal_new(ring, [a]))
    ys = ideal_elements(ideal_new(ring, [b]))
    tables = []
    for values in product(ys, repeat=len(xs)):
        table = dict(zip(xs, values))
        additive = all(
            table[(x1 + x2) % n] == (table[x1] + table[x2]) % n
            for x1 in xs
            for x2 in xs
        )
        homogeneous = all(
            table[(r * x) % n] == (r * table[x]) % n for r in range(n) for x in xs
        )
        if additive and homogeneous:
            tables.append(tuple(sorted(table.items())))
    return sorted(tables)


def test_brute_force_counts():
    one, two, three, zero = (ideal_new(Z6, [g]) for g in (1, 2, 3, 0))
    assert len(brute_force_hom_set(two, three)) == 1
    assert len(brute_force_hom_set(one, two)) == 3
    assert len(brute_force_hom_set(zero, three)) == 1


def test_brute_force_matches_exhaustive_filter():
    for n in (2, 3, 4, 5, 6):
        ring = ModularRing(n)
        for A in enumerate_objects(ring):
            for B in enumerate_objects(ring):
                brute = sorted(brute_force_hom_set(A, B))
                assert brute == exhaustive_linear_tables(n, A.generator, B.generator)


def test_brute_force_rejects_domains():
    with pytest.raises(RingMismatch):
        brute_force_hom_set(ideal_new(INTEGERS, [2]), ideal_new(INTEGERS, [3]))


def test_enumerate_hom_matches_brute_force_through_n_12():
    for n in range(2, 13):
        ring = ModularRing(n)
        for A in enumerate_objects(ring):
            for B in enumerate_objects(ring):
                ours = sorted(morphism_table(f) for f in enumerate_hom(A, B).elements)
                assert ours == sorted(brute_force_hom_set(A, B)), (n, A, B)


def test_check_axioms_z6_all_pass():
    report = check_axioms(Z6)
    assert not report.failed
    assert report.totals["fail"] == 0
    assert {c.name for c in report.checks} >= {
        "compose-associative",
        "hom-abelian-group",
        "compose-bilinear",
        "zero-object-initial-terminal",
        "kernel-universal",
        "hom-oracle-agreement",
        "biproduct-laws",
    }


@pytest.mark.parametrize("ring", [INTEGERS, RATIONAL_POLYNOMIALS], ids=["z", "qpoly"])
def test_check_axioms_sampled_backends(ring):
    report = check_axioms(ring, Bounds(seed=3, samples=120))
    failures = [(c.name, c.witness) for c in report.checks if c.status != "pass"]
    assert not failures, failures


def test_check_axioms_z_paper_mode():
    report = check_axioms(INTEGERS, Bounds(seed=5, samples=120), mode="paper")
    assert not report.failed


def test_every_fail_carries_witness_and_mutations_are_caught():
    for name, laws in law_mutations().items():
        report = check_axioms(Z6, laws=laws)
        failing = [c for c in report.checks if c.status == "fail"]
        assert failing, f"mutation {name} was not caught"
        for c in failing:
            assert c.witness is not None


def test_mutation_catalogue_is_the_documented_five():
    assert sorted(law_mutations()) == [
        "add-multiplies-multipliers",
        "compose-adds-multipliers",
        "factorization-skips-image",
        "kernel-whole-domain",
        "splitting-identity-retraction",
    ]


def test_search_cokernel_examples():
    one, two, three = (ideal_new(Z6, [g]) for g in (1, 2, 3))
    zero_map = morphism_new(two, three, 0)
    found = search_cokernel(zero_map)
    assert CokernelPair(three, morphism_new(three, three, 1)) in found
    surj = morphism_new(one, two, 2)
    assert cokernel(surj) in search_cokernel(surj)
    # the audited counterexample: the rule refuses, the search certifies
    doubling = morphism_new(one, one, 2)
    with pytest.raises(CokernelDoesNotExist):
        cokernel(doubling)
    found = search_cokernel(doubling)
    assert CokernelPair(three, morphism_new(one, three, 3)) in found


def test_search_biproduct_examples():
    one, two, three, zero = (ideal_new(Z6, [g]) for g in (1, 2, 3, 0))
    found = search_biproduct(two, three)
    from idealcat.constructions import biproduct

    assert biproduct(two, three) in found
    assert search_biproduct(zero, two)  # nonempty
    assert search_biproduct(one, one) == []


def test_verify_ring_z6_records_the_discrepancy():
    report = verify_ring(Z6)
    assert not report.failed
    by_name = {c.name: c for c in report.checks}
    assert by_name["cokernel-rule-agreement"].status == "pass"
    assert by_name["biproduct-rule-agreement"].status == "pass"
    entry = by_name["cokernel-converse[rho(1;2;1)]"]
    assert entry.status == "discrepancy"
    assert {"object": "<3>", "projection": "rho(1;3;3)"} in entry.witness["found"]
    # no biproduct the rule refuses exists in Z_6
    assert not [n for n in by_name if n.startswith("biproduct-converse")]


def test_verify_ring_respects_search_ceiling():
    report = verify_ring(Z6, Bounds(search_ceiling=2))
    audits = [c.name for c in report.checks
              if "rule-agreement" in c.name or "-converse[" in c.name]
    assert audits == []


def test_reports_are_deterministic():
    a = json.dumps(verify_ring(Z6, Bounds(seed=1)).to_json(), sort_keys=True)
    b = json.dumps(verify_ring(Z6, Bounds(seed=1)).to_json(), sort_keys=True)
    assert a == b
    a = json.dumps(check_axioms(INTEGERS, Bounds(seed=9, samples=60)).to_json())
    b = json.dumps(check_axioms(INTEGERS, Bounds(seed=9, samples=60)).to_json())
    assert a == b


def test_morphism_tables_injective_all_n_10():
    for n in range(2, 11):
        ring = ModularRing(n)
        morphisms = all_morphisms(ring)
        tables = {(f.dom, f.cod, morphism_table(f)) for f in morphisms}
        assert len(tables) == len(morphisms)
