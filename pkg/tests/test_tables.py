import json
from pathlib import Path

import pytest

from ramcover.bounds import g_X2_formula, galois_closure_genus
from ramcover.induced import lift_table_entry
from ramcover.ramdata import RamificationData, data_from_json_text, rh_genus
from ramcover.tables import (
    Inadmissible,
    a_values,
    euler_phi,
    evaluate,
    expand_template,
    gen_f_table,
    gen_nonexistence_table,
    gen_solvable_table,
    gen_two_set_table,
    gen_two_set_table_raw,
    table_counts,
    two_set_row,
)

GOLDEN = Path(__file__).parent / "golden"


def labels(entries):
    return {e.label for e in entries}


def test_first_degree_has_36_entries():
    assert len(gen_two_set_table(13)) == 36


@pytest.mark.parametrize("ell", ["13", "14"])
def test_entry_keys_frozen(ell):
    frozen = json.loads((GOLDEN / "two_set_keys.json").read_text())[ell]
    assert sorted(e.key() for e in gen_two_set_table(int(ell))) == frozen


def test_parity_of_rows():
    got = labels(gen_two_set_table(14))
    assert "I2.2" in got and "I2.1" not in got
    got = labels(gen_two_set_table(13))
    assert "I2.1" in got and "I2.2" not in got


def test_degree_guard():
    with pytest.raises(ValueError):
        gen_two_set_table(12)
    with pytest.raises(ValueError):
        gen_f_table(10)


def test_a_values():
    assert a_values(13) == [1, 3, 5, 7, 9, 11]
    assert a_values(14) == [1, 3, 5, 9, 11, 13]


def test_a_and_complement_collapse():
    # for even l both a and l-a are odd, so they give one multiset
    raw = gen_two_set_table_raw(14)
    i11 = [e for e in raw if e.label == "I1.1"]
    assert len(i11) == 6
    kept = [e for e in gen_two_set_table(14) if e.label == "I1.1"]
    assert len(kept) == 3
    assert all(e.aliases for e in kept)


def test_lift_of_first_row():
    f = {e.key(): e for e in gen_f_table(13)}
    e = f["I1.1a,a=3"]
    assert e.data == RamificationData.of([[13] * 6, [30, 10, 10, 10, 10, 5, 3], [2] * 11 + [1] * 56])


@pytest.mark.parametrize("ell", [13, 17, 22, 24, 30])
def test_lifted_rows_match_templates(ell):
    for e in gen_f_table(ell):
        assert e.note == "matches template", e.key()
        assert e.data.degree == ell * (ell - 1) // 2
        assert rh_genus(e.data).genus == 0


def test_collapsed_labels_absent_from_lifted_table():
    got = labels(gen_f_table(24))
    assert "I2.13" not in got and "F1.9" not in got
    assert "I2.11" in got and "F1.7" in got


@pytest.mark.parametrize("ell", [14, 18, 22, 26])
def test_order_four_family_absent_when_two_mod_four(ell):
    assert not [e for e in gen_f_table(ell) if e.label.startswith("F3")]
    assert not [e for e in gen_two_set_table(ell) if e.label.startswith("F3")]


def test_counts_frozen():
    frozen = json.loads((GOLDEN / "table_counts.json").read_text())
    for ell in (13, 14, 15, 16, 36, 60, 97, 100):
        c = table_counts(ell)
        assert c["two_set_entries"] == frozen[str(ell)]["two_set_entries"]
        assert c["f_types"] == frozen[str(ell)]["f_types"] == c["predicted"]


def test_count_constant_by_class():
    for ell in (13, 15, 21):
        assert table_counts(ell)["predicted"] == 2 * euler_phi(ell) + 12
    assert table_counts(16)["predicted"] == 2 * 8 + 8
    assert table_counts(14)["predicted"] == 2 * 6 + 7


def test_entries_round_trip_through_json():
    for e in gen_two_set_table(15) + gen_nonexistence_table(12):
        obj = e.to_json()
        back = data_from_json_text(json.dumps({"degree": obj["degree"], "branches": obj["branches"]}))
        assert back == e.data


# -- solvable and non-existence tables


def test_solvable_prime_five():
    rows = {e.label: e for e in gen_solvable_table(5)}
    assert rows["A1"].data == RamificationData.of([[5], [5]])
    assert rows["A1"].note == "monodromy C_5"
    assert rows["A2"].data == RamificationData.of([[1, 2, 2], [1, 2, 2], [5]])
    assert rows["A2"].note == "monodromy D_10"


def test_solvable_e2_at_seven():
    e = gen_solvable_table(7, "E2")[0]
    assert e.data == RamificationData.of([[1, 3, 3]] * 3)
    assert e.note == "monodromy C_7:C_3"
    assert "GALOIS_CLOSURE_GENUS:1" in e.claims


@pytest.mark.parametrize("ell", [2, 3, 4, 5, 6, 7, 9, 10, 11, 13, 25, 49])
def test_solvable_closure_genus_matches_claim(ell):
    try:
        rows = gen_solvable_table(ell)
    except ValueError:
        return
    for e in rows:
        claim = next(int(c.split(":")[1]) for c in e.claims if c.startswith("GALOIS_CLOSURE_GENUS"))
        assert galois_closure_genus(e.data).genus == claim, e.label


def test_solvable_inadmissible():
    with pytest.raises(ValueError):
        gen_solvable_table(8)
    with pytest.raises(ValueError):
        gen_solvable_table(7, "E5")


def test_nonexistence_rows_present():
    assert {"F1.N1", "F1.N2", "F1.N3", "F1.N4"} <= labels(gen_nonexistence_table(12))
    assert "F4.N1" in labels(gen_nonexistence_table(14))
    assert "F4.N1" not in labels(gen_nonexistence_table(12))


@pytest.mark.parametrize("ell", [10, 12, 14, 16, 20, 30])
def test_first_family_nonexistence_rows_genus_one_and_zero_pair_genus(ell):
    for e in gen_nonexistence_table(ell):
        if e.label.startswith("F1.N"):
            assert rh_genus(e.data).genus == 1
            assert g_X2_formula(e.data, 1) == 0


# -- template evaluation


def test_evaluate_exact():
    assert evaluate("(l-3)/2", {"l": 13}) == 5
    assert evaluate("a*(l-a)", {"l": 13, "a": 3}) == 30


def test_evaluate_rejects_other_syntax():
    for bad in ("__import__('os')", "l.real", "[l]", "l if l else 1"):
        with pytest.raises(ValueError):
            evaluate(bad, {"l": 5})


def test_template_integrality_enforced():
    with pytest.raises(Inadmissible):
        expand_template("1,2^((l-1)/2)", 12, {"l": 12})
    assert expand_template("1,2^((l-1)/2)", 13, {"l": 13}).count(2) == 6


def test_lifted_row_degree():
    assert lift_table_entry(two_set_row("F4.2", 14)).degree == 91
