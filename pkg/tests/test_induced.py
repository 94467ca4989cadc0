import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from ramcover.bounds import canonical_permutation, partitions
from ramcover.certify import build_tuple
from ramcover.induced import (
    BranchTuple,
    lift_table_entry,
    lift_to_2sets,
    pair_orbit_split,
    product_is_identity,
    quotient_genera,
)
from ramcover.perm import GeneratorSet, Permutation, classify_alternating, induced_on_tsets, is_transitive
from ramcover.ramdata import Partition, RamificationData
from ramcover.tables import f_template, two_set_row


def test_pair_orbit_split_cases():
    assert sorted(pair_orbit_split(4, 6, False)) == [12, 12]
    assert sorted(pair_orbit_split(5, 5, True)) == [5, 5]
    assert sorted(pair_orbit_split(6, 6, True)) == [3, 6, 6]


def test_pair_orbit_split_rejects_bad_same_orbit():
    with pytest.raises(ValueError):
        pair_orbit_split(4, 6, True)


def test_lift_examples():
    assert lift_to_2sets(Partition.of([5])).parts == (5, 5)
    assert lift_to_2sets(Partition.of([13])).parts == (13,) * 6
    assert lift_to_2sets(Partition.of([2, 1, 1])).parts == (2, 2, 1, 1)


def test_lift_of_even_row_matches_template():
    d = two_set_row("I2.2", 14)
    assert lift_table_entry(d) == f_template("I2.2", 14)


def test_lift_of_first_row_matches_template():
    assert lift_table_entry(two_set_row("I1.1", 13, 3)) == f_template("I1.1a", 13, 3)


def test_collapsed_rows_lift_identically():
    assert two_set_row("F1.7", 12) != two_set_row("F1.9", 12)
    assert lift_table_entry(two_set_row("F1.7", 12)) == lift_table_entry(two_set_row("F1.9", 12))


@pytest.mark.parametrize("n", range(2, 13))
def test_lift_matches_induced_action_for_every_cycle_type(n):
    for parts in partitions(n):
        p = canonical_permutation(parts)
        assert lift_to_2sets(Partition.of(parts)) == Partition.of(induced_on_tsets(p, 2).cycle_lengths()), parts


def test_lift_matches_induced_action_random_large():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(2, 40)
        xs = list(range(n))
        rng.shuffle(xs)
        p = Permutation(tuple(xs))
        assert lift_to_2sets(Partition.of(p.cycle_lengths())) == Partition.of(induced_on_tsets(p, 2).cycle_lengths())


def test_branch_tuple_validation():
    a = Permutation.parse("(1,2,3)")
    with pytest.raises(ValueError):
        BranchTuple.of([a, a])
    with pytest.raises(ValueError):
        BranchTuple.of([Permutation.parse("(1,2)", 3), Permutation.parse("(1,2)", 3)])
    b = BranchTuple.of([a, a.inverse()])
    assert b.ramification() == RamificationData.of([[3], [3]])
    assert product_is_identity(b.cycles)


def _random_tuple(rng, n):
    while True:
        xs, ys = list(range(n)), list(range(n))
        rng.shuffle(xs)
        rng.shuffle(ys)
        x, y = Permutation(tuple(xs)), Permutation(tuple(ys))
        cycles = (x, y, (x * y).inverse())
        if is_transitive(GeneratorSet(n, cycles)):
            return BranchTuple.of(cycles)


def _rh_genus_of(perms):
    n = perms[0].degree
    return sum(n - len(p.cycle_lengths()) for p in perms) // 2 - n + 1


def test_quotient_genera_t1_is_cover_genus():
    b = build_tuple("I1.1-generic", 13, a=3).tuple
    report = quotient_genera(BranchTuple.of(b), 1)
    assert report.g_Xt == report.g_Yt == 0


def test_first_row_tuple_has_zero_pair_genus():
    b = BranchTuple.of(build_tuple("I1.1-generic", 13, a=3).tuple)
    assert quotient_genera(b, 2).g_Xt == 0


def test_quotient_genera_matches_direct_induced_rh():
    rng = random.Random(3)
    for _ in range(100):
        b = _random_tuple(rng, 8)
        report = quotient_genera(b, 2)
        assert report.g_Xt == _rh_genus_of([induced_on_tsets(x, 2) for x in b.cycles])


def test_chain_rule_per_branch():
    rng = random.Random(5)
    for _ in range(40):
        b = _random_tuple(rng, rng.randint(4, 7))
        for t in (2, 3):
            report = quotient_genera(b, t)
            for rf, rh, rpi in report.per_branch:
                assert rh == math.factorial(t) * rf + rpi


def test_pair_genus_never_below_point_genus_for_big_groups():
    rng = random.Random(9)
    checked = 0
    for _ in range(60):
        b = _random_tuple(rng, rng.randint(5, 8))
        if not classify_alternating(b.generators()).contains_alternating:
            continue
        g = [quotient_genera(b, t).g_Xt for t in (1, 2, 3)]
        assert g[0] <= g[1] <= g[2]
        checked += 1
    assert checked > 20


def test_genus_cap_and_range():
    b = BranchTuple.of(build_tuple("F3.1", 8).tuple)
    with pytest.raises(ValueError):
        quotient_genera(b, 9)


@settings(max_examples=40)
@given(st.lists(st.integers(1, 7), min_size=1, max_size=6))
def test_lift_conserves_pair_count(parts):
    e = Partition.of(parts + [1])
    assert lift_to_2sets(e).degree == math.comb(e.degree, 2)
