import json

import pytest
from hypothesis import given, strategies as st

from ramcover.ramdata import (
    GenusMarker,
    InputError,
    Partition,
    RamificationData,
    data_from_json_text,
    data_to_json_text,
    expand_star,
    from_csv,
    parse_partition,
    rh_genus,
    to_csv,
    total_parity,
)
from ramcover.induced import lift_table_entry, lift_to_2sets
from ramcover.tables import gen_f_table, gen_nonexistence_table, gen_solvable_table, gen_two_set_table, two_set_row


def D(*branches):
    return RamificationData.of(branches)


def partitions_of(max_n=14):
    return st.lists(st.integers(1, 6), min_size=1, max_size=max_n).map(Partition.of)


def test_partition_is_sorted_descending():
    p = Partition.of([1, 3, 2, 3])
    assert p.parts == (3, 3, 2, 1)
    assert p.degree == 9
    assert p.count(3) == 2


def test_trivial_branches_dropped_and_order_canonical():
    a = RamificationData.of([[2, 1, 1], [1, 1, 1, 1], [4]])
    b = RamificationData.of([[4], [2, 1, 1]])
    assert a == b
    assert len(a.branches) == 2


def test_branch_degree_mismatch():
    with pytest.raises(ValueError):
        RamificationData.of([[3], [2]])


@given(st.lists(partitions_of(), min_size=1, max_size=4))
def test_canonicalization_idempotent(parts):
    n = parts[0].degree
    parts = [p for p in parts if p.degree == n]
    d = RamificationData(n, tuple(parts))
    assert RamificationData(n, d.branches) == d
    assert RamificationData(n, tuple(reversed(parts))) == d


# -- genus


def test_genus_of_first_row_example():
    g = rh_genus(D([13], [3, 10], [2] + [1] * 11))
    assert g.ok and g.genus == 0 and g.rh_sum == 24


def test_unramified_is_negative():
    assert rh_genus(RamificationData(5, ())).genus == GenusMarker.NEGATIVE


def test_genus_one_nonexistence_row():
    d = D([2] * 5 + [1, 1], [2] * 6, [2] * 6, [2] * 6, [2] + [1] * 10)
    assert rh_genus(d).genus == 1


def test_odd_sum_not_integral():
    g = rh_genus(D([2, 1, 1]))
    assert g.genus == GenusMarker.NOT_INTEGRAL and not g.ok


def test_base_genus():
    # an unramified double cover of a genus 2 curve has genus 3
    assert rh_genus(RamificationData(2, ()), base_genus=2).genus == 3
    with pytest.raises(ValueError):
        rh_genus(RamificationData(2, ()), base_genus=-1)


def test_parity():
    assert total_parity(D([2, 1, 1, 1])) == "odd"
    assert total_parity(D([13], [3, 10], [2] + [1] * 11)) == "even"
    assert total_parity(lift_table_entry(two_set_row("F4.1", 12))) == "even"


@given(st.lists(partitions_of(), min_size=1, max_size=4))
def test_parity_iff_integral(parts):
    n = parts[0].degree
    d = RamificationData(n, tuple(p for p in parts if p.degree == n))
    integral = rh_genus(d).genus != GenusMarker.NOT_INTEGRAL
    assert integral == (total_parity(d) == "even")


# -- compact grammar


def test_expand_star_examples():
    assert expand_star("1^2,2^*", 10).parts == (2, 2, 2, 2, 1, 1)
    assert expand_star("7", 7).parts == (7,)
    # 78 - 33 leaves 45, which tens cannot fill; the I1.1 lift at l=13, a=3
    # also carries a 5
    with pytest.raises(InputError):
        expand_star("30,3,10^*", 78)
    lifted = lift_to_2sets(Partition.of([10, 3]))
    assert expand_star("30,5,3,10^*", 78) == lifted


def test_expand_star_errors():
    with pytest.raises(InputError):
        expand_star("3^*", 10)
    with pytest.raises(InputError):
        expand_star("6,6", 10)
    with pytest.raises(InputError):
        expand_star("2^*,3^*", 12)
    with pytest.raises(InputError):
        expand_star("2^x", 4)


def test_compact_round_trip():
    p = Partition.of([6, 6, 6, 2, 1, 1])
    assert p.compact() == "6^3,2,1^2"
    assert parse_partition(p.compact()) == p


@given(partitions_of(20))
def test_compact_round_trip_random(p):
    assert parse_partition(p.compact()) == p
    assert expand_star(p.compact(), p.degree) == p


# -- JSON and CSV


def test_json_round_trip():
    d = D([13], [3, 10], [2] + [1] * 11)
    assert data_from_json_text(data_to_json_text(d)) == d
    assert json.loads(data_to_json_text(d)) == {"degree": 13, "branches": [[13], [10, 3], [2] + [1] * 11]}


def test_json_accepts_compact_strings():
    d = data_from_json_text('{"degree": 10, "branches": ["1^2,2^*", [10]]}')
    assert d == D([10], [2, 2, 2, 2, 1, 1])


def test_json_diagnostic_names_line_and_token():
    text = '{\n  "degree": 6,\n  "branches": [\n    [6],\n    [2, 2, 3]\n  ]\n}'
    with pytest.raises(InputError) as info:
        data_from_json_text(text)
    assert info.value.line == 5
    assert "2, 2, 3" in info.value.token


def test_json_syntax_error_located():
    with pytest.raises(InputError) as info:
        data_from_json_text('{"degree": 4,\n "branches": [[4],, ]}')
    assert info.value.line == 2


def test_json_bad_degree():
    with pytest.raises(InputError) as info:
        data_from_json_text('{"degree": -3, "branches": []}')
    assert info.value.line == 1


def test_csv_round_trip():
    rows = [("x", D([4], [2, 2])), ("y", D([3], [2, 1]))]
    text = to_csv(rows)
    assert text.splitlines()[0] == "label,degree,partition"
    assert from_csv(text) == rows


def test_csv_bad_row():
    with pytest.raises(InputError) as info:
        from_csv("label,degree,partition\nx,4,3\n")
    assert info.value.line == 2


# -- table-wide invariants


@pytest.mark.parametrize("ell", [13, 14, 15, 16, 29, 60, 97, 120, 199, 200])
def test_two_set_rows_have_genus_zero(ell):
    for e in gen_two_set_table(ell):
        assert rh_genus(e.data).genus == 0, e.key()


@pytest.mark.parametrize("ell", [13, 14, 24, 37, 58])
def test_lifted_rows_have_genus_zero(ell):
    for e in gen_f_table(ell):
        assert e.data.degree == ell * (ell - 1) // 2
        assert rh_genus(e.data).genus == 0, e.key()


@pytest.mark.parametrize("ell", [5, 7, 12, 13, 14, 18])
def test_every_table_entry_has_even_parity(ell):
    entries = list(gen_nonexistence_table(ell))
    try:
        entries += gen_solvable_table(ell)
    except ValueError:
        pass
    if ell >= 13:
        entries += gen_two_set_table(ell) + gen_f_table(ell)
    for e in entries:
        assert total_parity(e.data) == "even", e.key()
