import json

import pytest

from groupdet import (
    BudgetExceededError,
    SearchReport,
    check_even_divisibility,
    check_membership,
    find_witness,
    group_determinant,
    make_group,
    membership_spec,
    search_values,
)
from oracles import box_value_set, first_witness


def test_small_boxes_match_oracle_sets():
    # full achieved sets frozen from the naive cofactor oracle
    assert set(search_values(make_group((1,)), 2).achieved) == {-2, -1, 0, 1, 2}
    assert set(search_values(make_group(2), 2).achieved) == {-4, -3, -1, 0, 1, 3, 4}
    assert set(search_values(make_group(3), 1).achieved) == {-4, -2, -1, 0, 1, 2, 4}
    assert set(search_values(make_group((2, 2)), 1).achieved) == {-16, -3, 0, 1}


@pytest.mark.parametrize("orders,box", [((2,), 2), ((3,), 1), ((2, 2), 1)])
def test_achieved_sets_equal_oracle(orders, box):
    rep = search_values(make_group(orders), box)
    assert set(rep.achieved) == box_value_set(orders, box)
    assert rep.evaluated == (2 * box + 1) ** make_group(orders).order


def test_witnesses_are_lexicographically_first_and_sound():
    g = make_group((2, 2))
    rep = search_values(g, 1)
    for v, w in rep.achieved.items():
        assert group_determinant(g, w) == v
        assert w == first_witness((2, 2), 1, v)


def test_determinism_across_job_counts():
    g = make_group((2, 2))
    serial = search_values(g, 2, jobs=1)
    sharded = search_values(g, 2, jobs=3)
    assert serial == sharded
    g3 = make_group(3)
    assert search_values(g3, 2, jobs=1) == search_values(g3, 2, jobs=2)


@pytest.mark.parametrize("orders", [(2,), (3,), (5,), (2, 2)])
def test_monotonicity_in_box(orders):
    g = make_group(orders)
    small = set(search_values(g, 1).achieved)
    mid = set(search_values(g, 2).achieved)
    big = set(search_values(g, 3).achieved)
    assert small <= mid <= big


def test_monotonicity_order_six():
    g = make_group(6)
    assert set(search_values(g, 1).achieved) <= set(search_values(g, 2).achieved)


def test_pruned_search_identical_reports():
    for orders, box in [((2, 2), 1), ((4,), 1), ((2, 3), 1)]:
        g = make_group(orders)
        full = search_values(g, box)
        pruned = search_values(g, box, prune=True)
        assert pruned.achieved == full.achieved  # same values AND same witnesses
        assert pruned.evaluated <= full.evaluated


def test_value_cap_drops_large_values():
    g = make_group(2)
    rep = search_values(g, 2, value_cap=3)
    assert set(rep.achieved) == {-3, -1, 0, 1, 3}
    assert rep.evaluated == 25


def test_budget_guard():
    g = make_group((4, 2))
    with pytest.raises(BudgetExceededError):
        search_values(g, 3, budget=1000)
    with pytest.raises(BudgetExceededError):
        find_witness(g, 3, 1, budget=1000)
    # force runs anyway (keep it tiny)
    rep = search_values(make_group(2), 1, budget=2, force=True)
    assert rep.evaluated == 9


def test_find_witness_frozen():
    g = make_group((2, 2))
    assert find_witness(g, 2, 16) == (-2, 0, 0, 0)
    assert find_witness(g, 2, 5) == (-2, -1, -1, -1)
    assert find_witness(g, 1, -3) == (-1, -1, -1, 0)
    assert find_witness(g, 3, 2) is None
    # the classical witness value is achieved by x_e = 2
    assert group_determinant(g, (2, 0, 0, 0)) == 16


def test_min_even_valuation():
    rep = search_values(make_group(2), 2)
    # even values here are -4, 0, 4; the 0 is excluded, so the minimum is 2
    assert rep.min_even_valuation == 2
    assert search_values(make_group((1,)), 2).min_even_valuation == 1
    assert search_values(make_group((1,)), 1).min_even_valuation is None  # only 0 is even there


def test_check_even_divisibility():
    rep = search_values(make_group((2, 2)), 1)
    ok = check_even_divisibility(rep, 4)
    assert ok.status == "pass" and ok.violations == ()
    strict = check_even_divisibility(rep, 5)
    assert strict.status == "fail"
    assert [v for v, _ in strict.violations] == [-16]
    # 0 is divisible by everything
    zero_rep = SearchReport((1,), 0, 1, {0: (0,)})
    assert check_even_divisibility(zero_rep, 99).status == "pass"


def test_membership_specs_frozen():
    z22 = membership_spec("Z2Z2")
    assert z22.predicate(1) and z22.predicate(5) and z22.predicate(-3)
    assert z22.predicate(16) and z22.predicate(-16) and z22.predicate(48)
    assert z22.predicate(64) and z22.predicate(0) and z22.predicate(-128)
    assert not z22.predicate(2) and not z22.predicate(3) and not z22.predicate(8)
    assert not z22.predicate(32)  # 2^5 * 1: not 16*odd, not divisible by 64

    z222 = membership_spec("Z2Z2Z2")
    assert z222.predicate(1) and z222.predicate(9) and z222.predicate(-7)
    assert z222.predicate(256) and z222.predicate(-768) and z222.predicate(0)
    assert z222.predicate(4096) and z222.predicate(2**12 * 3)
    assert not z222.predicate(3) and not z222.predicate(512) and not z222.predicate(2**9)

    z42 = membership_spec("Z4Z2")
    assert z42.predicate(1) and z42.predicate(-7) and z42.predicate(0)
    assert z42.predicate(256) and z42.predicate(-256) and z42.predicate(512)
    assert not z42.predicate(3) and not z42.predicate(16) and not z42.predicate(128)

    s6 = membership_spec("S2p(3)")
    assert s6.predicate(1) and s6.predicate(5) and s6.predicate(-5) and s6.predicate(7)
    assert s6.predicate(4) and s6.predicate(-8) and s6.predicate(9 * 4) and s6.predicate(0)
    assert s6.predicate(45)  # odd, divisible by 9
    assert not s6.predicate(2) and not s6.predicate(-2)  # even but not 4Z
    assert not s6.predicate(3) and not s6.predicate(15)  # divisible by 3, not by 9
    assert not s6.predicate(6)


def test_membership_spec_validation():
    with pytest.raises(ValueError):
        membership_spec("S2p(4)")
    with pytest.raises(ValueError):
        membership_spec("S2p(9)")
    with pytest.raises(ValueError):
        membership_spec("nonsense")


def test_check_membership():
    rep = search_values(make_group((2, 2)), 1)
    res = check_membership(rep, membership_spec("Z2Z2"))
    assert res.status == "pass"
    bad = check_membership(rep, membership_spec("Z4Z2"))  # wrong set for this group
    assert bad.status == "fail"
    assert all(not membership_spec("Z4Z2").predicate(v) for v, _ in bad.violations)


def test_report_json_roundtrip(tmp_path):
    rep = search_values(make_group(2), 2)
    path = tmp_path / "report.json"
    rep.save(path)
    data = json.loads(path.read_text())
    assert data["group"] == "2"
    assert data["counts"] == {"evaluated": 25, "distinct": 7}
    by_value = {row["v"]: row for row in data["values"]}
    assert by_value["0"]["val2"] is None
    assert by_value["-4"]["val2"] == 2
    assert all(isinstance(row["v"], str) for row in data["values"])
    loaded = SearchReport.load(path)
    assert loaded == rep


def test_loaded_report_witnesses_revalidate(tmp_path):
    g = make_group((2, 3))
    rep = search_values(g, 1)
    path = tmp_path / "r.json"
    rep.save(path)
    loaded = SearchReport.load(path)
    for v, w in loaded.achieved.items():
        assert group_determinant(g, w) == v
