from fractions import Fraction

import numpy as np
import pytest

from weil_matrix_lab.weil_matrix_lab_brauer import (
    brauer_compare_sl2,
    brauer_symmetric_power,
    discrete_log,
    eigenvalues_mod_p,
    extension_field,
    multiplicative_generator,
)
from weil_matrix_lab.weil_matrix_lab_cyclotomic import CycQ, Operator, gauss_sum
from weil_matrix_lab.weil_matrix_lab_group import enumerate_group
from weil_matrix_lab.weil_matrix_lab_types import (
    CocycleObstruction,
    FiniteSpElement,
    UnsupportedSizeError,
    WeilLabError,
    sp_order,
)
from weil_matrix_lab.weil_matrix_lab_utils import (
    build_weil_rep,
    calibration_candidates,
    character_inner_product,
    character_values,
    check_character_norms,
    check_class_constancy,
    check_galois_stability,
    check_gauss_sum,
    check_homomorphism,
    check_inverses,
    check_levi_tensor_restriction,
    check_no_intertwiner,
    check_singer_eigenvalues,
    embed_levi,
    extend_along_atlas,
    find_singer_element,
    oscillator_generators,
    parity_split,
    run_weil_checks,
)

SMALL_PRIMES = [3, 5, 7]


@pytest.fixture(scope="module", params=SMALL_PRIMES)
def rank_one_split(request):
    return parity_split(build_weil_rep(1, request.param))


def test_cyclotomic_arithmetic() -> None:
    z = CycQ.zeta(5)
    one = CycQ.rational(5, 1)
    assert z**5 == one
    assert z * z.inverse() == one
    assert z.conj() == CycQ.zeta(5, 4)
    assert z.galois(2) == z * z
    assert z.norm() == 1
    assert (one - z).norm() == 5
    # 1 + z + ... + z^4 = 0
    assert sum((CycQ.zeta(5, k) for k in range(5)), CycQ.rational(5, 0)).is_zero()
    assert (z / z).rational_value() == 1
    assert abs(z.to_complex() - np.exp(2j * np.pi / 5)) < 1e-12
    half = CycQ.rational(5, Fraction(1, 2))
    assert (half + half) == one
    with pytest.raises(WeilLabError):
        z + CycQ.zeta(3)
    with pytest.raises(ZeroDivisionError):
        CycQ.rational(5, 0).inverse()
    with pytest.raises(WeilLabError):
        z.galois(5)


@pytest.mark.parametrize("p", SMALL_PRIMES + [11, 13])
def test_gauss_sum_square(p: int) -> None:
    g = gauss_sum(p)
    sign = 1 if p % 4 == 1 else -1
    assert g * g == CycQ.rational(p, sign * p)
    assert check_gauss_sum(p).passed


def test_operator_arithmetic() -> None:
    p = 3
    diag = Operator.from_terms(p, 2, [(0, 0, 1, 1), (1, 1, 2, 1)])
    assert (diag @ diag @ diag).is_identity()
    assert diag.trace() == CycQ.zeta(3) + CycQ.zeta(3, 2)
    assert diag.trace().rational_value() == -1
    doubled = diag.scale(CycQ.rational(p, 2))
    assert doubled.ratio_to(diag) == CycQ.rational(p, 2)
    halved = diag.scale(CycQ.rational(p, Fraction(1, 2)))
    assert halved.denominator == 2
    assert halved.entry(0, 0) == CycQ.zeta(3) * Fraction(1, 2)


def test_finite_sp_elements() -> None:
    g = FiniteSpElement.from_matrix(5, [[1, 1], [0, 1]])
    assert g.is_symplectic()
    assert g.order() == 5
    assert (g @ g.inverse()).is_identity()
    assert g.power(-2) == g.inverse() @ g.inverse()
    assert not FiniteSpElement.from_matrix(5, [[2, 0], [0, 2]]).is_symplectic()
    with pytest.raises(WeilLabError):
        FiniteSpElement.from_matrix(5, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


@pytest.mark.parametrize("n,p", [(1, 3), (1, 5), (1, 7), (2, 3), (3, 3)])
def test_sp_orders(n: int, p: int) -> None:
    assert sp_order(n, p) == {
        (1, 3): 24,
        (1, 5): 120,
        (1, 7): 336,
        (2, 3): 51840,
        (3, 3): 9170703360,
    }[(n, p)]


def test_enumerate_group_cap() -> None:
    gens = [element for element, _ in oscillator_generators(1, 5)]
    atlas = enumerate_group(gens)
    assert atlas.order == 120
    assert atlas.words[0] == ()
    assert all(
        len(atlas.words[j]) <= len(atlas.words[i]) + 1
        for i, row in enumerate(atlas.table)
        for j in row
    )
    with pytest.raises(WeilLabError):
        enumerate_group(gens, cap=10)
    with pytest.raises(WeilLabError):
        enumerate_group(gens, expected_order=121)


@pytest.mark.parametrize(
    "p,calibration,tried", [(3, "G^-n", []), (5, "-G^-n", ["G^-n"]), (7, "-G^-n", ["G^-n"])]
)
def test_calibration(p: int, calibration: str, tried: list[str]) -> None:
    rep = build_weil_rep(1, p)
    assert rep.atlas.order == sp_order(1, p)
    assert rep.calibration == calibration
    assert rep.tried == tried
    assert [label for label, _ in calibration_candidates(1, p)][:2] == ["G^-n", "-G^-n"]


def test_wrong_calibration_is_an_obstruction() -> None:
    rep = build_weil_rep(1, 5)
    operators = [op for _, op in oscillator_generators(1, 5)]
    with pytest.raises(CocycleObstruction) as excinfo:
        extend_along_atlas(rep.atlas, operators)
    assert excinfo.value.to_dict()["words"]


def test_unsupported_sizes() -> None:
    with pytest.raises(UnsupportedSizeError):
        build_weil_rep(2, 5)
    with pytest.raises(UnsupportedSizeError):
        build_weil_rep(1, 2)
    with pytest.raises(UnsupportedSizeError):
        build_weil_rep(2, 3, cap=1000)


def test_parity_split_dimensions(rank_one_split) -> None:
    p = rank_one_split.rep.p
    assert rank_one_split.dims == ((p - 1) // 2, (p + 1) // 2)
    odd, even = rank_one_split.characters()
    assert odd.shape == (sp_order(1, p), p - 1)
    assert int(odd[0, 0]) + int(even[0, 0]) == p


def test_rank_one_checks(rank_one_split) -> None:
    rep = rank_one_split.rep
    assert check_homomorphism(rep, samples=200).passed
    assert check_inverses(rep, samples=50).passed
    assert check_class_constancy(rep, samples=50).passed
    assert check_character_norms(rank_one_split).passed
    assert check_no_intertwiner(rank_one_split).passed
    assert check_galois_stability(rank_one_split).passed


def test_singer_element(rank_one_split) -> None:
    rep = rank_one_split.rep
    i = find_singer_element(rep)
    assert rep.atlas.elements[i].order() == rep.p + 1
    report = check_singer_eigenvalues(rank_one_split)
    assert report.passed
    assert report.details["order"] == rep.p + 1


def test_inner_product_of_distinct_pieces(rank_one_split) -> None:
    odd, even = rank_one_split.characters()
    p = rank_one_split.rep.p
    assert character_inner_product(odd, even, p) == 0
    assert character_inner_product(even, even, p) == 1


def test_character_values(rank_one_split) -> None:
    odd, _ = rank_one_split.characters()
    p = rank_one_split.rep.p
    values = character_values(odd, p)
    assert len(values) == sp_order(1, p)
    assert values[0].rational_value() == (p - 1) // 2


def test_run_weil_checks_rank_one() -> None:
    report = run_weil_checks(1, 7, samples=100)
    assert report.passed
    assert report.group_order == 336
    assert report.dims == (3, 4)
    assert [c.name for c in report.checks] == [
        "gauss_sum",
        "homomorphism",
        "inverses",
        "class_constancy",
        "character_norms",
        "no_intertwiner",
        "galois_stability",
        "simple_spectrum",
    ]


def test_embed_levi() -> None:
    a = FiniteSpElement.from_matrix(3, [[1, 1], [0, 1]])
    b = FiniteSpElement.from_matrix(3, [[0, 1], [2, 0]])
    embedded = embed_levi(a, b)
    assert embedded.n == 2
    assert embedded.is_symplectic()
    assert embedded.matrix.tolist() == [
        [1, 0, 1, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, 2, 0, 0],
    ]


@pytest.mark.slow
def test_sp4_construction() -> None:
    report = run_weil_checks(2, 3, samples=200)
    assert report.group_order == 51840
    assert report.calibration == "G^-n"
    assert report.dims == (4, 5)
    assert report.passed
    assert report.checks[-1].name == "levi_restriction"


@pytest.mark.slow
def test_levi_tensor_restriction() -> None:
    report = check_levi_tensor_restriction(2, 3, 1)
    assert report.passed
    assert report.details["subgroup_order"] == 24 * 24
    assert report.details["piece1"] == [0, 0, 1, 1]
    assert report.details["piece2"] == [1, 1, 0, 0]


def test_levi_split_range() -> None:
    with pytest.raises(WeilLabError):
        check_levi_tensor_restriction(2, 3, 2)


@pytest.mark.parametrize("p,regular", [(3, 8), (5, 72), (7, 240)])
def test_brauer_comparison(p: int, regular: int) -> None:
    report = brauer_compare_sl2(p)
    assert report.passed
    assert report.regular_elements == regular
    assert report.dims == ((p - 1) // 2, (p + 1) // 2)


def test_brauer_rejects_other_primes() -> None:
    with pytest.raises(UnsupportedSizeError):
        brauer_compare_sl2(11)


def test_field_with_p_squared_elements() -> None:
    p = 7
    field = extension_field(p)
    assert field.order == p * p
    generator = multiplicative_generator(p)
    assert discrete_log(field(1)) == 0
    assert discrete_log(generator) == 1
    assert generator ** (p * p - 1) == field(1)
    # 48 = 2^4 * 3: no proper divisor reaches one
    assert generator**24 != field(1)
    assert generator**16 != field(1)
    powers = {int(generator**k) for k in range(p * p - 1)}
    assert len(powers) == p * p - 1
    assert 0 not in powers
    with pytest.raises(ZeroDivisionError):
        discrete_log(field(0))


def test_eigenvalues_mod_p() -> None:
    first, second = eigenvalues_mod_p(FiniteSpElement.identity(1, 5))
    assert first == 1 and second == 1

    # t^2 + 1 splits over F_5 with roots 2 and 3
    rotation = FiniteSpElement.from_matrix(5, [[0, 1], [4, 0]])
    first, second = eigenvalues_mod_p(rotation)
    assert {int(first), int(second)} == {2, 3}
    assert first * second == 1

    # t^2 - t + 1 is irreducible over F_5, so the roots are Frobenius conjugates in F_25
    order_six = FiniteSpElement.from_matrix(5, [[0, 4], [1, 1]])
    first, second = eigenvalues_mod_p(order_six)
    assert int(first) >= 5
    assert first**5 == second
    assert first**6 == 1
    assert order_six.order() == 6

    with pytest.raises(WeilLabError):
        eigenvalues_mod_p(FiniteSpElement.identity(2, 3))


def test_brauer_symmetric_power_at_identity() -> None:
    identity = FiniteSpElement.identity(1, 7)
    for k in range(4):
        assert abs(brauer_symmetric_power(identity, k) - (k + 1)) < 1e-12


def test_mod_p_linear_algebra() -> None:
    scalar = FiniteSpElement.from_matrix(5, [[2, 0], [0, 2]])
    assert scalar.inverse().matrix.tolist() == [[3, 0], [0, 3]]
    assert not scalar.is_symplectic()
    singer = FiniteSpElement.from_matrix(5, [[0, 4], [1, 1]])
    assert singer.is_symplectic()
    assert singer.field_matrix.characteristic_poly().is_irreducible()
