from collections import Counter
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

import sympy

from charzero_weights.charzero_weights_types import WeightMultiset
from charzero_weights.charzero_weights_utils import dominant_weights_below
from lie_core.lie_core_types import RootSystemData, SimpleType, Weight
from lie_core.lie_core_utils import (
    build_root_system,
    epsilon_coords,
    from_epsilon_coords,
    weyl_orbit,
)
from symplectic_theorem.symplectic_theorem_types import (
    DEFAULT_MAX_PN,
    BranchingCase,
    BranchingReport,
    PairDefect,
    PairWeight,
    ParityReport,
    RestrictionCase,
    SubgroupRestrictionReport,
    SweepRow,
    SymplecticTheoremError,
    WeilWeights,
)
from utils.pool_utils import run_parallel


def symplectic_root_system(n: int) -> RootSystemData:
    """Root system of Sp_2n; rank 1 is A1 read as C1."""
    if n < 1:
        raise SymplecticTheoremError(f"Rank must be at least 1, got {n}")
    return build_root_system(SimpleType("C", n) if n >= 2 else SimpleType("A", 1))


def _require_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not sympy.isprime(p):
        raise SymplecticTheoremError(f"p must be an odd prime, got {p!r}")


def weil_highest_weights(n: int, p: int) -> Tuple[Weight, Weight]:
    """Highest weights of the odd and even pieces; omega_{n-1} is omitted when n = 1."""
    _require_odd_prime(p)
    if n < 1:
        raise SymplecticTheoremError(f"Rank must be at least 1, got {n}")
    hw1 = [0] * n
    hw1[n - 1] = (p - 3) // 2
    if n >= 2:
        hw1[n - 2] = 1
    hw2 = [0] * n
    hw2[n - 1] = (p - 1) // 2
    return tuple(hw1), tuple(hw2)


def _support(rs: RootSystemData, lam: Weight) -> WeightMultiset:
    # Multiplicity 1 everywhere: the count identity below is what licenses it
    support = WeightMultiset(rank=rs.rank)
    for mu in dominant_weights_below(rs, lam):
        for weight in weyl_orbit(rs, mu):
            support.add(weight)
    return support


@lru_cache(maxsize=None)
def _cached_weil_weights(n: int, p: int) -> WeilWeights:
    rs = symplectic_root_system(n)
    hw1, hw2 = weil_highest_weights(n, p)
    weights = WeilWeights(
        n=n, p=p, hw1=hw1, hw2=hw2, x1=_support(rs, hw1), x2=_support(rs, hw2)
    )
    for i, multiset in ((1, weights.x1), (2, weights.x2)):
        expected = (p**n + (-1) ** i) // 2
        if multiset.distinct != expected:
            raise SymplecticTheoremError(
                f"Weight count of piece {i} for n={n}, p={p} is {multiset.distinct}, "
                f"expected {expected}"
            )
    return weights


def cache_info() -> Dict[str, Optional[int]]:
    """Hit and miss counts of the Weil weight cache."""
    return dict(_cached_weil_weights.cache_info()._asdict())


def build_weil_weights(n: int, p: int, max_pn: int = DEFAULT_MAX_PN) -> WeilWeights:
    _require_odd_prime(p)
    if n < 1:
        raise SymplecticTheoremError(f"Rank must be at least 1, got {n}")
    if p**n > max_pn:
        raise SymplecticTheoremError(f"p^n = {p**n} exceeds the configured bound {max_pn}")
    return _cached_weil_weights(n, p)


def restrict_weights_levi(weights: WeilWeights, k: int, piece: int) -> Counter[PairWeight]:
    """Split each weight of one piece along the Levi factor Sp_2k x Sp_2(n-k)."""
    n = weights.n
    if not 1 <= k < n:
        raise SymplecticTheoremError(f"Levi split needs 1 <= k < n, got k={k}, n={n}")
    rs = symplectic_root_system(n)
    left_rs = symplectic_root_system(k)
    right_rs = symplectic_root_system(n - k)
    pairs: Counter[PairWeight] = Counter()
    for weight, multiplicity in weights.piece(piece).entries.items():
        coords = epsilon_coords(rs, weight)
        left = from_epsilon_coords(left_rs, coords[:k])
        right = from_epsilon_coords(right_rs, coords[k:])
        pairs[(left, right)] += multiplicity
    return pairs


def _product(left: Iterable[Weight], right: Iterable[Weight]) -> Counter[PairWeight]:
    right_weights = list(right)
    return Counter((a, b) for a in left for b in right_weights)


def _counter_defects(
    expected: Counter[PairWeight], actual: Counter[PairWeight]
) -> List[PairDefect]:
    defects = []
    for pair in sorted(set(expected) | set(actual)):
        if expected[pair] != actual[pair]:
            defects.append(PairDefect(pair, expected[pair], actual[pair]))
    return defects


def check_branching_formulas(
    n: int, p: int, k: int, max_pn: int = DEFAULT_MAX_PN
) -> BranchingReport:
    """Compare each piece restricted to the Levi factor with the tensor decomposition.

    Odd piece: odd x even + even x odd. Even piece: odd x odd + even x even.
    """
    full = build_weil_weights(n, p, max_pn)
    left = build_weil_weights(k, p, max_pn)
    right = build_weil_weights(n - k, p, max_pn)

    formulas = {
        1: ("1x2+2x1", _product(left.x1, right.x2) + _product(left.x2, right.x1)),
        2: ("1x1+2x2", _product(left.x1, right.x1) + _product(left.x2, right.x2)),
    }
    report = BranchingReport(n=n, p=p, k=k)
    for piece, (formula, expected) in formulas.items():
        actual = restrict_weights_levi(full, k, piece)
        report.cases.append(
            BranchingCase(
                piece=piece,
                formula=formula,
                expected_mass=sum(expected.values()),
                actual_mass=sum(actual.values()),
                defects=_counter_defects(expected, actual),
            )
        )
    return report


def restriction_coefficients(p: int, piece: int) -> Tuple[int, int]:
    """Multiplicities of the (odd, even) pieces of rank n-1 inside piece i of rank n."""
    if piece == 1:
        return (p + 1) // 2, (p - 1) // 2
    return (p - 1) // 2, (p + 1) // 2


def check_subgroup_restriction(
    n: int, p: int, max_pn: int = DEFAULT_MAX_PN
) -> SubgroupRestrictionReport:
    """Restrict to the subgroup with simple roots alpha_2..alpha_n by dropping eps_1."""
    if n < 2:
        raise SymplecticTheoremError(f"Subgroup restriction needs n >= 2, got {n}")
    full = build_weil_weights(n, p, max_pn)
    lower = build_weil_weights(n - 1, p, max_pn)
    rs = symplectic_root_system(n)
    sub_rs = symplectic_root_system(n - 1)

    report = SubgroupRestrictionReport(n=n, p=p)
    for piece in (1, 2):
        a, b = restriction_coefficients(p, piece)
        expected: Dict[Weight, int] = Counter()
        for weight in lower.x1:
            expected[weight] += a
        for weight in lower.x2:
            expected[weight] += b

        actual: Dict[Weight, int] = Counter()
        for weight, multiplicity in full.piece(piece).entries.items():
            coords = epsilon_coords(rs, weight)
            actual[from_epsilon_coords(sub_rs, coords[1:])] += multiplicity

        defects = [
            (weight, expected.get(weight, 0), actual.get(weight, 0))
            for weight in sorted(set(expected) | set(actual))
            if expected.get(weight, 0) != actual.get(weight, 0)
        ]
        report.cases.append(
            RestrictionCase(
                piece=piece,
                coefficients=(a, b),
                expected_mass=sum(expected.values()),
                actual_mass=sum(actual.values()),
                defects=defects,
            )
        )
    return report


def check_levi_chain(n: int, p: int, max_pn: int = DEFAULT_MAX_PN) -> List[BranchingReport]:
    """Branching checks for every split of rank n and, recursively, of every smaller rank."""
    reports = []
    for rank in range(n, 1, -1):
        for k in range(1, rank):
            reports.append(check_branching_formulas(rank, p, k, max_pn))
    return reports


def check_parity_separation(weights: WeilWeights) -> ParityReport:
    """Epsilon-sums on the even piece are congruent to n(p-1)/2 mod 2; the odd piece differs."""
    rs = symplectic_root_system(weights.n)
    even_parity = (weights.n * (weights.p - 1) // 2) % 2
    report = ParityReport(n=weights.n, p=weights.p, even_parity=even_parity)
    for piece, parity in ((1, 1 - even_parity), (2, even_parity)):
        for weight in sorted(weights.piece(piece)):
            if sum(epsilon_coords(rs, weight)) % 2 != parity:
                report.offenders.append((piece, weight))
    return report


def sweep_grid(primes: Iterable[int], max_pn: int = DEFAULT_MAX_PN) -> List[Tuple[int, int]]:
    grid = []
    for p in sorted(set(primes)):
        _require_odd_prime(p)
        n = 1
        while p**n <= max_pn:
            grid.append((n, p))
            n += 1
    return grid


def _sweep_row(point: Tuple[int, int], max_pn: int) -> SweepRow:
    n, p = point
    try:
        weights = build_weil_weights(n, p, max_pn)
    except SymplecticTheoremError as e:
        return SweepRow(n=n, p=p, count1=0, count2=0, passed=False, error=str(e))
    return SweepRow(
        n=n, p=p, count1=weights.x1.distinct, count2=weights.x2.distinct, passed=True
    )


def weight_count_sweep(
    primes: Iterable[int], max_pn: int = DEFAULT_MAX_PN, parallelism: int = 1
) -> List[SweepRow]:
    """Weight-count identity for every (n, p) with p^n within the bound."""
    grid = sweep_grid(primes, max_pn)
    return run_parallel(lambda point: _sweep_row(point, max_pn), grid, parallelism)
