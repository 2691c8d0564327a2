import random
from fractions import Fraction

import pytest

from lie_core.lie_core_types import LieCoreError, SimpleType
from lie_core.lie_core_utils import (
    a_value,
    add_weights,
    alpha_coords,
    build_root_system,
    cache_info,
    coroot_pairing,
    dominant_representative,
    epsilon_coords,
    expected_positive_root_count,
    format_weight,
    from_epsilon_coords,
    fundamental_weight,
    height,
    is_minuscule,
    is_radical,
    parse_weight,
    root_system,
    simple_reflection,
    weight_label,
    weyl_group_order,
    weyl_orbit,
)

ALL_TYPES = [
    ("A", 1),
    ("A", 3),
    ("B", 3),
    ("C", 4),
    ("D", 4),
    ("D", 5),
    ("G", 2),
    ("F", 4),
    ("E", 6),
    ("E", 7),
]


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_positive_root_count(family: str, rank: int) -> None:
    rs = root_system(family, rank)
    assert len(rs.positive_roots) == expected_positive_root_count(rs.type)
    assert len(rs.positive_roots_alpha) == len(rs.positive_roots)


@pytest.mark.parametrize(
    "family,rank,highest",
    [("A", 2, (1, 1)), ("B", 2, (0, 2)), ("C", 2, (2, 0)), ("G", 2, (0, 1)), ("C", 3, (2, 0, 0))],
)
def test_highest_root(family: str, rank: int, highest: tuple[int, ...]) -> None:
    assert root_system(family, rank).highest_root == highest


def test_g2_highest_root_in_simple_roots() -> None:
    rs = root_system("G", 2)
    assert rs.positive_roots_alpha[-1] == (3, 2)
    assert height(rs, rs.highest_root) == 5


def test_unsupported_types() -> None:
    with pytest.raises(LieCoreError):
        SimpleType("E", 8)
    with pytest.raises(LieCoreError):
        SimpleType("B", 1)
    with pytest.raises(LieCoreError):
        SimpleType("Q", 2)
    with pytest.raises(LieCoreError):
        SimpleType.parse("A", "two")
    assert SimpleType.parse(" c", "3") == SimpleType("C", 3)


@pytest.mark.parametrize(
    "family,rank,order",
    [("A", 3, 24), ("B", 3, 48), ("C", 3, 48), ("D", 4, 192), ("G", 2, 12), ("F", 4, 1152)],
)
def test_rho_orbit_is_regular(family: str, rank: int, order: int) -> None:
    rs = root_system(family, rank)
    assert weyl_group_order(rs.type) == order
    assert len(weyl_orbit(rs, rs.rho)) == order


def test_reflection_is_involution() -> None:
    rng = random.Random(7)
    for family, rank in ALL_TYPES:
        rs = root_system(family, rank)
        for _ in range(20):
            w = tuple(rng.randint(-3, 3) for _ in range(rank))
            i = rng.randint(1, rank)
            assert simple_reflection(rs, i, simple_reflection(rs, i, w)) == w


def test_reflection_of_fundamental_weight() -> None:
    rs = root_system("A", 2)
    # s_1(omega_1) = omega_1 - alpha_1
    assert simple_reflection(rs, 1, (1, 0)) == (-1, 1)
    with pytest.raises(LieCoreError):
        simple_reflection(rs, 3, (1, 0))


def test_dominant_representative() -> None:
    assert dominant_representative(root_system("A", 2), (-1, 0)) == (0, 1)
    assert dominant_representative(root_system("C", 2), (-1, 0)) == (1, 0)
    rs = root_system("B", 3)
    for w in weyl_orbit(rs, (1, 0, 1)):
        assert dominant_representative(rs, w) == (1, 0, 1)


def test_minuscule_weights() -> None:
    assert is_minuscule(root_system("C", 3), (1, 0, 0))
    assert not is_minuscule(root_system("C", 3), (0, 0, 1))
    assert all(is_minuscule(root_system("A", 4), fundamental_weight(4, i)) for i in range(1, 5))
    assert is_minuscule(root_system("E", 6), fundamental_weight(6, 1))
    assert is_minuscule(root_system("E", 7), fundamental_weight(7, 7))
    assert not is_minuscule(root_system("G", 2), (1, 0))
    with pytest.raises(LieCoreError):
        is_minuscule(root_system("A", 2), (-1, 0))


def test_a_value() -> None:
    rs = root_system("C", 4)
    assert [a_value(rs, fundamental_weight(4, i)) for i in range(1, 5)] == [1, 1, 1, 1]
    g2 = root_system("G", 2)
    assert a_value(g2, (1, 0)) == 1
    assert a_value(g2, (0, 1)) == 2
    assert coroot_pairing(g2, (0, 1), g2.highest_root) == 2


def test_radical_weights() -> None:
    rs = root_system("A", 1)
    assert not is_radical(rs, (1,))
    assert is_radical(rs, (2,))
    assert alpha_coords(rs, (1,)) == (Fraction(1, 2),)


def test_epsilon_coordinates() -> None:
    rs = root_system("C", 3)
    assert epsilon_coords(rs, (1, 0, 0)) == (1, 0, 0)
    assert epsilon_coords(rs, (0, 1, 0)) == (1, 1, 0)
    assert epsilon_coords(rs, (0, 0, 1)) == (1, 1, 1)
    assert epsilon_coords(rs, (1, 0, 2)) == (3, 2, 2)
    for w in weyl_orbit(rs, (1, 1, 1)):
        assert from_epsilon_coords(rs, epsilon_coords(rs, w)) == w
    assert epsilon_coords(root_system("A", 1), (3,)) == (3,)
    with pytest.raises(LieCoreError):
        epsilon_coords(root_system("B", 3), (1, 0, 0))


@pytest.mark.parametrize(
    "text,rank,expected",
    [
        ("1,0,2", 3, (1, 0, 2)),
        ("ω_1+2ω_3", 3, (1, 0, 2)),
        ("w2", 3, (0, 1, 0)),
        ("omega_3 + omega_3", 3, (0, 0, 2)),
        ("0", 3, (0, 0, 0)),
        ("5", 1, (5,)),
    ],
)
def test_parse_weight(text: str, rank: int, expected: tuple[int, ...]) -> None:
    assert parse_weight(text, rank) == expected


@pytest.mark.parametrize("text", ["", "1,2", "x", "ω_4", "1,a,0"])
def test_parse_weight_rejects(text: str) -> None:
    with pytest.raises(LieCoreError):
        parse_weight(text, 3)


def test_weight_formatting() -> None:
    assert weight_label((1, 0, 2)) == "ω1+2ω3"
    assert weight_label((0, 0)) == "0"
    assert format_weight((1, 0, 2)) == "(1,0,2)"


def test_root_system_is_cached() -> None:
    assert build_root_system(SimpleType("F", 4)) is build_root_system(SimpleType("F", 4))


def test_symplectic_rank_two_reflections() -> None:
    rs = root_system("C", 2)
    # s_2(omega_2) = omega_2 - alpha_2 = epsilon_1 - epsilon_2
    assert simple_reflection(rs, 2, (0, 1)) == (2, -1)
    orbit = weyl_orbit(rs, (0, 1))
    assert len(orbit) == 4
    assert {epsilon_coords(rs, w) for w in orbit} == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


def test_radical_membership() -> None:
    assert is_radical(root_system("C", 2), (0, 1))
    assert not is_radical(root_system("C", 2), (1, 0))
    assert not is_radical(root_system("A", 2), (1, 0))
    assert is_radical(root_system("A", 2), (1, 1))
    rng = random.Random(11)
    for family, rank in ALL_TYPES:
        if rank > 5:
            continue
        rs = root_system(family, rank)
        w = tuple(rng.randint(0, 2) for _ in range(rank))
        assert {is_radical(rs, v) for v in weyl_orbit(rs, w)} == {is_radical(rs, w)}


def test_dominant_representative_lies_in_orbit() -> None:
    rng = random.Random(5)
    for family, rank in ALL_TYPES:
        if rank > 5:
            continue
        rs = root_system(family, rank)
        w = tuple(rng.randint(-2, 2) for _ in range(rank))
        representative = dominant_representative(rs, w)
        assert all(c >= 0 for c in representative)
        assert representative in weyl_orbit(rs, w)


def test_a_value_is_additive() -> None:
    rng = random.Random(3)
    for family, rank in ALL_TYPES:
        rs = root_system(family, rank)
        for _ in range(10):
            v = tuple(rng.randint(-3, 3) for _ in range(rank))
            w = tuple(rng.randint(-3, 3) for _ in range(rank))
            assert a_value(rs, add_weights(v, w)) == a_value(rs, v) + a_value(rs, w)


def test_cache_info_counts_lookups() -> None:
    root_system("B", 3)
    before = cache_info()
    root_system("B", 3)
    after = cache_info()
    assert after["hits"] == before["hits"] + 1
    assert after["misses"] == before["misses"]
