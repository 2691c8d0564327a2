import pytest

from lie_core.lie_core_types import SimpleType
from symplectic_theorem.symplectic_theorem_types import SymplecticTheoremError
from symplectic_theorem.symplectic_theorem_utils import (
    build_weil_weights,
    cache_info,
    check_branching_formulas,
    check_levi_chain,
    check_parity_separation,
    check_subgroup_restriction,
    restrict_weights_levi,
    restriction_coefficients,
    sweep_grid,
    symplectic_root_system,
    weight_count_sweep,
    weil_highest_weights,
)


@pytest.mark.parametrize(
    "n,p,count1,count2",
    [(1, 3, 1, 2), (1, 5, 2, 3), (2, 3, 4, 5), (3, 3, 13, 14), (2, 5, 12, 13), (2, 7, 24, 25)],
)
def test_weight_counts(n: int, p: int, count1: int, count2: int) -> None:
    weights = build_weil_weights(n, p)
    assert weights.x1.distinct == count1
    assert weights.x2.distinct == count2
    assert weights.to_dict()["expected1"] == count1


def test_highest_weights() -> None:
    assert weil_highest_weights(1, 7) == ((2,), (3,))
    assert weil_highest_weights(3, 5) == ((0, 1, 1), (0, 0, 2))
    assert weil_highest_weights(2, 3) == ((1, 0), (0, 1))
    assert symplectic_root_system(1).type == SimpleType("A", 1)
    assert symplectic_root_system(3).type == SimpleType("C", 3)


def test_rejects_bad_inputs() -> None:
    with pytest.raises(SymplecticTheoremError):
        weil_highest_weights(2, 2)
    with pytest.raises(SymplecticTheoremError):
        weil_highest_weights(0, 3)
    with pytest.raises(SymplecticTheoremError):
        build_weil_weights(4, 7, max_pn=100)
    with pytest.raises(SymplecticTheoremError):
        build_weil_weights(2, 3).piece(3)


@pytest.mark.parametrize("n,p,k", [(2, 3, 1), (3, 3, 1), (3, 3, 2), (2, 5, 1), (3, 5, 2)])
def test_levi_branching(n: int, p: int, k: int) -> None:
    report = check_branching_formulas(n, p, k)
    assert report.passed
    assert [case.formula for case in report.cases] == ["1x2+2x1", "1x1+2x2"]
    assert report.cases[0].actual_mass == (p**n - 1) // 2
    assert report.cases[1].actual_mass == (p**n + 1) // 2


def test_levi_restriction_splits_epsilon_coordinates() -> None:
    weights = build_weil_weights(2, 3)
    pairs = restrict_weights_levi(weights, 1, 1)
    # odd piece of Sp4(3) has weights ±eps_1, ±eps_2
    assert pairs == {((1,), (0,)): 1, ((-1,), (0,)): 1, ((0,), (1,)): 1, ((0,), (-1,)): 1}
    with pytest.raises(SymplecticTheoremError):
        restrict_weights_levi(weights, 2, 1)


def test_levi_chain() -> None:
    reports = check_levi_chain(3, 3)
    assert [(r.n, r.k) for r in reports] == [(3, 1), (3, 2), (2, 1)]
    assert all(r.passed for r in reports)


@pytest.mark.parametrize("n,p", [(2, 3), (3, 3), (2, 5), (2, 7)])
def test_subgroup_restriction(n: int, p: int) -> None:
    report = check_subgroup_restriction(n, p)
    assert report.passed
    assert report.cases[0].coefficients == restriction_coefficients(p, 1)
    assert report.cases[1].coefficients == ((p - 1) // 2, (p + 1) // 2)


def test_subgroup_restriction_needs_rank_two() -> None:
    with pytest.raises(SymplecticTheoremError):
        check_subgroup_restriction(1, 3)


@pytest.mark.parametrize("n,p", [(1, 3), (1, 5), (2, 3), (2, 5), (3, 3), (3, 5)])
def test_parity_separation(n: int, p: int) -> None:
    report = check_parity_separation(build_weil_weights(n, p))
    assert report.holds
    assert report.even_parity == (n * (p - 1) // 2) % 2
    assert report.to_dict()["status"] == "conjecture"


def test_sweep() -> None:
    assert sweep_grid([5, 3], max_pn=30) == [(1, 3), (2, 3), (3, 3), (1, 5), (2, 5)]
    rows = weight_count_sweep([3, 5], max_pn=125)
    assert len(rows) == 7
    assert all(row.passed for row in rows)
    assert rows[3].to_dict()["count2"] == (81 + 1) // 2
    pooled = weight_count_sweep([3, 5], max_pn=125, parallelism=3)
    assert [r.to_dict() for r in pooled] == [r.to_dict() for r in rows]
    with pytest.raises(SymplecticTheoremError):
        sweep_grid([2, 3])


def test_weight_count_sweep_up_to_243() -> None:
    rows = weight_count_sweep([3, 5, 7, 11, 13], max_pn=243)
    tops = {3: 5, 5: 3, 7: 2, 11: 2, 13: 2}
    assert [(row.n, row.p) for row in rows] == [
        (n, p) for p, top in tops.items() for n in range(1, top + 1)
    ]
    for row in rows:
        assert row.passed, row.error
        assert row.count1 == (row.p**row.n - 1) // 2
        assert row.count2 == (row.p**row.n + 1) // 2


def test_cache_info_reports_cached_weights() -> None:
    build_weil_weights(2, 3)
    before = cache_info()
    build_weil_weights(2, 3)
    assert cache_info()["hits"] == before["hits"] + 1
