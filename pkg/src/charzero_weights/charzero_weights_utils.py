from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from charzero_weights.charzero_weights_types import (
    DEFAULT_DOMINANT_CAP,
    CharZeroError,
    WeightMultiset,
)
from lie_core.lie_core_types import RootSystemData, SimpleType, Weight
from lie_core.lie_core_utils import (
    add_weights,
    alpha_coords,
    build_root_system,
    dominant_representative,
    is_dominant,
    scaled_pair,
    subtract_weights,
    weyl_orbit,
)


def _require_dominant(rs: RootSystemData, lam: Sequence[int]) -> Weight:
    lam = tuple(int(c) for c in lam)
    if len(lam) != rs.rank:
        raise CharZeroError(f"Weight {lam} does not have rank {rs.rank}")
    if not is_dominant(lam):
        raise CharZeroError(f"Highest weight must be dominant, got {lam}")
    return lam


def _depth(rs: RootSystemData, lam: Weight, mu: Weight) -> int:
    """Height of lam - mu; an integer because lam - mu lies in the root lattice."""
    value = sum(alpha_coords(rs, subtract_weights(lam, mu)), Fraction(0))
    return int(value)


def dominant_weights_below(
    rs: RootSystemData, lam: Sequence[int], cap: int = DEFAULT_DOMINANT_CAP
) -> List[Weight]:
    """All dominant mu with lam - mu in the positive root cone, highest first.

    Covers in the dominance order on dominant weights differ by a positive root, so descending
    by positive roots while staying dominant reaches every such mu.
    """
    top = _require_dominant(rs, lam)
    seen = {top}
    queue = deque([top])
    while queue:
        mu = queue.popleft()
        for beta in rs.positive_roots:
            nu = subtract_weights(mu, beta)
            if nu in seen or not is_dominant(nu):
                continue
            seen.add(nu)
            if len(seen) > cap:
                raise CharZeroError(
                    f"More than {cap} dominant weights below {top}; raise the cap to continue"
                )
            queue.append(nu)

    return sorted(seen, key=lambda mu: (_depth(rs, top, mu), mu))


@lru_cache(maxsize=1024)
def _dominant_character(simple_type: SimpleType, lam: Weight) -> Tuple[Tuple[Weight, int], ...]:
    rs = build_root_system(simple_type)
    dominants = dominant_weights_below(rs, lam)
    support = set(dominants)
    multiplicities: Dict[Weight, int] = {lam: 1}

    shifted_top = add_weights(lam, rs.rho)
    top_norm = scaled_pair(rs, shifted_top, shifted_top)

    for mu in dominants[1:]:
        total = 0
        for beta in rs.positive_roots:
            k = 1
            while True:
                nu = tuple(m + k * b for m, b in zip(mu, beta))
                representative = dominant_representative(rs, nu)
                # the beta-string through mu is unbroken, so it ends at the first non-weight
                if representative not in support:
                    break
                total += multiplicities[representative] * scaled_pair(rs, nu, beta)
                k += 1

        shifted = add_weights(mu, rs.rho)
        denominator = top_norm - scaled_pair(rs, shifted, shifted)
        numerator = 2 * total
        if denominator <= 0 or numerator % denominator != 0:
            raise CharZeroError(
                f"Freudenthal recursion produced a non-integral multiplicity at {mu} for {lam}"
            )
        multiplicities[mu] = numerator // denominator

    return tuple((mu, multiplicities[mu]) for mu in dominants)


def cache_info() -> Dict[str, Optional[int]]:
    """Hit and miss counts of the dominant-character cache."""
    return dict(_dominant_character.cache_info()._asdict())


def dominant_character(rs: RootSystemData, lam: Sequence[int]) -> Dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam)."""
    top = _require_dominant(rs, lam)
    return dict(_dominant_character(rs.type, top))


def freudenthal_multiplicity(rs: RootSystemData, lam: Sequence[int], mu: Sequence[int]) -> int:
    table = dominant_character(rs, lam)
    if len(mu) != rs.rank:
        raise CharZeroError(f"Weight {tuple(mu)} does not have rank {rs.rank}")
    return table.get(dominant_representative(rs, mu), 0)


def weight_system(rs: RootSystemData, lam: Sequence[int]) -> WeightMultiset:
    multiset = WeightMultiset(rank=rs.rank)
    for mu, multiplicity in dominant_character(rs, lam).items():
        for weight in weyl_orbit(rs, mu):
            multiset.add(weight, multiplicity)
    return multiset


def weight_orbits(rs: RootSystemData, lam: Sequence[int]) -> List[Tuple[Weight, int, int]]:
    """(dominant weight, multiplicity, orbit size) for each dominant weight of V(lam)."""
    return [
        (mu, multiplicity, len(weyl_orbit(rs, mu)))
        for mu, multiplicity in dominant_character(rs, lam).items()
    ]


def weyl_dimension(rs: RootSystemData, lam: Sequence[int]) -> int:
    top = _require_dominant(rs, lam)
    shifted = add_weights(top, rs.rho)
    value = Fraction(1)
    for beta in rs.positive_roots:
        value *= Fraction(scaled_pair(rs, shifted, beta), scaled_pair(rs, rs.rho, beta))
    if value.denominator != 1:
        raise CharZeroError(f"Weyl dimension of {top} is not integral: {value}")
    return int(value)


def weight_count(rs: RootSystemData, lam: Sequence[int]) -> int:
    """Number of distinct weights of V(lam)."""
    top = _require_dominant(rs, lam)
    return sum(len(weyl_orbit(rs, mu)) for mu in dominant_weights_below(rs, top))
