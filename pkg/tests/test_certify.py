import math

import pytest

from ramcover.bounds import g_X2_formula
from ramcover.certify import (
    CONSTRUCTIONS,
    CHECKS,
    CONTAINS_ALT,
    CYCLE_TYPES_MATCH,
    GENUS_MATCH,
    LABELS,
    PRIMITIVE,
    PRODUCT_ONE,
    TRANSITIVE,
    CertReport,
    Check,
    admissible_ells,
    build_tuple,
    centralizer_elements,
    certify,
    certify_all,
    certify_label,
    class_elements,
    exhaustive_refute,
    half_pairing,
    i2n1_witness,
    i2n2_witness,
    imprimitivity_witness,
)
from ramcover.induced import BranchTuple, quotient_genera
from ramcover.perm import GeneratorSet, GroupKind, Permutation, is_primitive
from ramcover.ramdata import Partition, RamificationData
from ramcover.tables import Inadmissible, nonexistence_row, two_set_row


def three_smallest_and_largest(label, top=60):
    ells = admissible_ells(label, top)
    return sorted(set(ells[:3] + ells[-1:]))


# -- construction and certification


def test_first_construction_is_symmetric():
    r = certify_label("F1.9", 12)
    assert r.ok
    assert r.verdict.kind == GroupKind.SYMMETRIC


def test_order_four_family_smallest():
    built = build_tuple("F3.1", 8)
    assert len(built.tuple) == 3
    assert certify(built, built.expected).ok


@pytest.mark.parametrize("label", sorted(CONSTRUCTIONS))
def test_every_construction_certifies(label):
    for ell in three_smallest_and_largest(label):
        r = certify_label(label, ell)
        assert r.ok, (label, ell, {k: c.detail for k, c in r.checks.items() if not c.passed})


def test_built_tuple_matches_table_row():
    built = build_tuple("F4.3", 13)
    assert built.expected == two_set_row("F4.3", 13)
    assert RamificationData(13, tuple(Partition.of(x.cycle_lengths()) for x in built.tuple)) == built.expected


def test_corrupted_tuple_fails_product():
    built = build_tuple("F4.1", 12)
    x = list(built.tuple[0].images)
    x[0], x[1] = x[1], x[0]
    bad = (Permutation(tuple(x)),) + built.tuple[1:]
    r = certify(bad, built.expected)
    assert not r.checks[PRODUCT_ONE].passed and not r.ok


def test_wrong_expectation_fails_type_and_genus():
    built = build_tuple("F3.1", 8)
    other = RamificationData.of([[8], [8], [2] * 4])
    r = certify(built, other)
    assert not r.checks[CYCLE_TYPES_MATCH].passed
    assert not r.checks[GENUS_MATCH].passed


def test_intransitive_tuple_has_no_verdict():
    a = Permutation.parse("(1,2)", 4)
    b = Permutation.parse("(3,4)", 4)
    r = certify([a, a, b, b], RamificationData.of([[2, 1, 1]] * 4))
    assert not r.checks[TRANSITIVE].passed
    assert r.verdict is None
    assert not r.checks[PRIMITIVE].passed and not r.checks[CONTAINS_ALT].passed


def test_report_rejects_inconsistent_verdict():
    checks = {k: Check(True, "") for k in CHECKS}
    with pytest.raises(ValueError):
        CertReport("x", 5, checks, None)


def test_report_json_keys():
    obj = certify_label("F4.1", 12).to_json()
    assert set(obj) == {"label", "ell", "checks", "verdict", "tuple", "normalization", "ok"}
    assert set(obj["checks"]) == set(CHECKS)
    assert all(set(v) == {"pass", "detail"} for v in obj["checks"].values())


def test_generic_first_row():
    built = build_tuple("I1.1-generic", 13, a=3)
    assert certify(built, two_set_row("I1.1", 13, 3)).ok
    for a in (1, 5, 7, 11):
        assert certify_label("I1.1-generic", 13, a=a).ok


def test_generic_needs_valid_a():
    with pytest.raises(Inadmissible):
        build_tuple("I1.1-generic", 14, a=4)
    with pytest.raises(Inadmissible):
        build_tuple("I1.1-generic", 15, a=5)


def test_unknown_label_and_inadmissible_degree():
    with pytest.raises(ValueError, match="unknown label"):
        build_tuple("Z9.9", 12)
    with pytest.raises(Inadmissible):
        build_tuple("F4.1", 13)
    with pytest.raises(Inadmissible):
        build_tuple("F4.3", 7)
    assert "F1.9" in LABELS


def test_certify_all_small():
    reports = certify_all(16)
    assert reports and all(r.ok for r in reports)
    assert {r.label for r in reports} == set(CONSTRUCTIONS)


@pytest.mark.parametrize("label", sorted(CONSTRUCTIONS))
def test_certified_tuples_have_zero_pair_genus(label):
    ell = admissible_ells(label, 30)[0]
    built = build_tuple(label, ell)
    b = BranchTuple.of(built.tuple)
    assert quotient_genera(b, 2).g_Xt == 0 == g_X2_formula(built.expected, 0)


@pytest.mark.slow
def test_every_admissible_degree_up_to_sixty():
    for label in CONSTRUCTIONS:
        for ell in admissible_ells(label, 60):
            assert certify_label(label, ell).ok, (label, ell)


# -- imprimitive witnesses


def test_half_pairing():
    assert half_pairing(6) == [[0, 3], [1, 4], [2, 5]]
    with pytest.raises(ValueError):
        half_pairing(5)


def _full_cycle(ell):
    return Permutation.from_cycles([list(range(ell))], ell)


@pytest.mark.parametrize("ell", range(4, 41, 2))
def test_first_witness_all_splits(ell):
    for m in range(0, (ell - 4) // 2 + 1):
        n = (ell - 4) // 2 - m
        b, c = i2n1_witness(m, n)
        assert b * c == _full_cycle(ell)
        assert imprimitivity_witness([b, c])
        assert not is_primitive(GeneratorSet.of([b, c]))


@pytest.mark.parametrize("ell", range(4, 41, 2))
def test_second_witness_all_splits(ell):
    for m in range(1, (ell - 2) // 2 + 1):
        n = (ell - 2) // 2 - m
        b, c, d = i2n2_witness(m, n)
        assert d * c * b == _full_cycle(ell)
        assert imprimitivity_witness([b, c, d])


@pytest.mark.parametrize("label,row", [("I2.N1-witness", "I2.N1"), ("I2.N2-witness", "I2.N2")])
@pytest.mark.parametrize("ell", [8, 12, 20])
def test_witness_matches_row_and_fails_only_primitivity(label, row, ell):
    built = build_tuple(label, ell)
    r = certify(built, nonexistence_row(row, ell))
    failed = {k for k, c in r.checks.items() if not c.passed}
    assert failed <= {PRIMITIVE, CONTAINS_ALT} and PRIMITIVE in failed
    assert imprimitivity_witness(built)


def test_primitive_tuple_is_not_a_witness():
    assert not imprimitivity_witness(build_tuple("F1.9", 12))


# -- exhaustive search


def test_class_elements_count():
    for parts in ([2, 2, 1], [3, 1, 1], [5], [2, 1, 1, 1]):
        e = Partition.of(parts)
        xs = list(class_elements(e))
        assert len(set(xs)) == len(xs)
        assert all(Partition.of(x.cycle_lengths()) == e for x in xs)
        z = math.prod(k ** e.count(k) * math.factorial(e.count(k)) for k in set(parts))
        assert len(xs) == math.factorial(5) // z


def test_centralizer_elements():
    x = Permutation.parse("(1,2,3)(4,5)", 6)
    cs = centralizer_elements(x)
    assert len(cs) == 3 * 2 * 1
    assert all(c * x == x * c for c in cs)


def test_first_solvable_row_is_cyclic():
    r = exhaustive_refute(RamificationData.of([[5], [5]]))
    assert r.verdict == "NONEXISTENT"
    assert set(r.orders) == {5}


def test_order_four_nonexistence_row_at_eight():
    r = exhaustive_refute(nonexistence_row("F4.N1", 8))
    assert r.verdict == "NONEXISTENT"
    assert r.transitive >= 1 and max(r.orders) < math.factorial(8) // 2


def test_small_existing_type_found():
    r = exhaustive_refute(RamificationData.of([[7], [4, 3], [2] + [1] * 5]))
    assert r.verdict == "EXISTS"
    assert r.witness is not None


def test_refute_degree_cap():
    with pytest.raises(ValueError):
        exhaustive_refute(RamificationData.of([[9], [9]]), degree_cap=8)
