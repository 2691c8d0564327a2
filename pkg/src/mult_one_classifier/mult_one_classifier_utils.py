from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import sympy

from lie_core.lie_core_types import LieCoreError, RootSystemData, SimpleType, Weight
from lie_core.lie_core_utils import (
    dominant_representative,
    fundamental_weight,
    is_dominant,
    scale_weight,
    subtract_weights,
)
from mult_one_classifier.mult_one_classifier_types import (
    ADJ_C_P2,
    ADJ_G2_P2,
    ADJ_G2_P3,
    OUTSIDE_TABLE,
    ZERO_LAYER,
    AdjacencyViolation,
    ClassifierError,
    ClassifierVerdict,
    LayerReport,
    NormalizedType,
    ObstructionResult,
    PAdicExpansion,
)


def require_prime(p: int) -> int:
    if not isinstance(p, int) or p < 2 or not sympy.isprime(p):
        raise ClassifierError(f"p must be a prime, got {p!r}")
    return p


def normalize_type(family: str, rank: int, p: int) -> NormalizedType:
    """Map the requested type onto the type whose table is printed.

    B2 is C2 with the two nodes swapped, D3 is A3 with nodes 1 and 2 swapped, and in
    characteristic 2 the groups B_n and C_n coincide with the same node labels.
    """
    try:
        original = SimpleType.parse(family, rank)
    except LieCoreError as e:
        raise ClassifierError(str(e)) from e
    identity = tuple(range(original.rank))

    if original.family == "B" and original.rank == 2:
        return NormalizedType(original, SimpleType("C", 2), (1, 0), note="B2 read as C2")
    if original.family == "B" and p == 2:
        return NormalizedType(
            original, SimpleType("C", original.rank), identity, note="B_n = C_n for p=2"
        )
    if original.family == "B" and original.rank == 3:
        return NormalizedType(
            original,
            original,
            identity,
            boundary=True,
            note="boundary: outside printed table (B3, p>2); provisional {ω1, ω3}",
        )
    if original.family == "D" and original.rank == 3:
        return NormalizedType(original, SimpleType("A", 3), (1, 0, 2), note="D3 read as A3")
    return NormalizedType(original, original, identity)


def omega_table_normalized(
    target: SimpleType, p: int, strict: bool = False
) -> Dict[Weight, str]:
    family, n = target.family, target.rank

    def omega(i: int) -> Weight:
        return fundamental_weight(n, i)

    def combine(*terms: Tuple[int, int]) -> Weight:
        coords = [0] * n
        for multiple, i in terms:
            coords[i - 1] += multiple
        return tuple(coords)

    table: Dict[Weight, str] = {}

    if family == "A" and n == 1:
        for a in range(1, p):
            table[(a,)] = "Omega(A1):restricted"
        return table

    if family == "A":
        for i in range(1, n + 1):
            table.setdefault(omega(i), "Omega(A_n):omega_i")
        for a in range(1, p):
            table.setdefault(combine((a, 1)), "Omega(A_n):a*omega_1")
            table.setdefault(combine((a, n)), "Omega(A_n):b*omega_n")
        for j in range(1, n):
            for c in range(p):
                weight = combine((c, j), (p - 1 - c, j + 1))
                table.setdefault(weight, "Omega(A_n):c*omega_j+(p-1-c)*omega_j+1")
        return table

    if family == "C":
        if p == 2:
            table[omega(1)] = "Omega(C_n,p=2):omega_1"
            table.setdefault(omega(n), "Omega(C_n,p=2):omega_n")
            return table
        table[omega(1)] = "Omega(C_n):omega_1"
        table.setdefault(combine((1, n - 1), ((p - 3) // 2, n)), "Omega(C_n):omega_prime")
        table.setdefault(combine(((p - 1) // 2, n)), "Omega(C_n):omega_double_prime")
        if n == 2:
            table.setdefault(omega(2), "Omega(C_n):omega_n,n=2")
        if n == 3 and not strict:
            table.setdefault(omega(3), "Omega(C_n):omega_n,n=3")
        return table

    if family == "B":
        table[omega(1)] = "Omega(B_n):omega_1"
        table[omega(n)] = "Omega(B_n):omega_n"
        return table

    if family == "D":
        table[omega(1)] = "Omega(D_n):omega_1"
        table[omega(n - 1)] = "Omega(D_n):omega_n-1"
        table[omega(n)] = "Omega(D_n):omega_n"
        return table

    if family == "E" and n == 6:
        table[omega(1)] = "Omega(E6):omega_1"
        table[omega(6)] = "Omega(E6):omega_6"
        return table

    if family == "E" and n == 7:
        table[omega(7)] = "Omega(E7):omega_7"
        return table

    if family == "F":
        if p == 3:
            table[omega(4)] = "Omega(F4,p=3):omega_4"
        return table

    if family == "G":
        table[omega(1)] = "Omega(G2):omega_1"
        if p == 3:
            table[omega(2)] = "Omega(G2,p=3):omega_2"
        return table

    raise ClassifierError(f"No multiplicity-one table for {target}")


def omega_table_tagged(
    family: str, rank: int, p: int, strict: bool = False
) -> Dict[Weight, str]:
    """Table entries in the caller's coordinates, each with the clause that admits it."""
    require_prime(p)
    normalized = normalize_type(family, rank, p)
    table = omega_table_normalized(normalized.target, p, strict)
    return {normalized.to_original(w): tag for w, tag in table.items()}


def omega_table(family: str, rank: int, p: int, strict: bool = False) -> FrozenSet[Weight]:
    return frozenset(omega_table_tagged(family, rank, p, strict))


def p_adic_expand(w: Sequence[int], p: int) -> PAdicExpansion:
    require_prime(p)
    if not is_dominant(w):
        raise ClassifierError(f"p-adic expansion needs a dominant weight, got {tuple(w)}")

    remaining = [int(c) for c in w]
    layers: List[Weight] = []
    while any(remaining):
        layers.append(tuple(c % p for c in remaining))
        remaining = [c // p for c in remaining]
    return PAdicExpansion(prime=p, layers=tuple(layers))


def adjacency_rule(target: SimpleType, p: int, layer: Weight) -> Optional[str]:
    """Tag of the rule forbidding the next layer to be omega_1, if its premise holds."""
    n = target.rank
    if target.family == "C" and p == 2 and layer == fundamental_weight(n, n):
        return ADJ_C_P2
    if target.family == "G" and p == 2 and layer == fundamental_weight(2, 1):
        return ADJ_G2_P2
    if target.family == "G" and p == 3 and layer == fundamental_weight(2, 2):
        return ADJ_G2_P3
    return None


def classify(
    family: str, rank: int, p: int, w: Sequence[int], strict: bool = False
) -> ClassifierVerdict:
    """Decide whether the irreducible module with highest weight w has all multiplicities 1."""
    require_prime(p)
    normalized = normalize_type(family, rank, p)
    weight = tuple(int(c) for c in w)
    if len(weight) != normalized.original.rank:
        raise ClassifierError(
            f"Weight {weight} has {len(weight)} coordinates, expected {normalized.original.rank}"
        )
    if not is_dominant(weight):
        raise ClassifierError(f"Highest weight must be dominant, got {weight}")

    target = normalized.target
    table = omega_table_normalized(target, p, strict)
    expansion = p_adic_expand(normalized.to_target(weight), p)

    verdict = ClassifierVerdict(
        family=normalized.original.family,
        rank=normalized.original.rank,
        prime=p,
        weight=weight,
        answer=True,
        lookup_type=target.label,
        boundary=normalized.boundary,
    )
    if normalized.note:
        verdict.notes.append(normalized.note)
    if target.family == "F" and p != 3:
        verdict.notes.append("table for F4 is empty unless p=3")

    layers = expansion.layers
    for index, layer in enumerate(layers):
        original_layer = normalized.to_original(layer)
        if not any(layer):
            verdict.layer_reports.append(LayerReport(index, original_layer, False, ZERO_LAYER))
            continue
        tag = table.get(layer)
        if tag is None:
            verdict.layer_reports.append(
                LayerReport(index, original_layer, False, OUTSIDE_TABLE)
            )
            verdict.answer = False
            continue
        verdict.layer_reports.append(LayerReport(index, original_layer, True, tag))
        if tag not in verdict.rules_fired:
            verdict.rules_fired.append(tag)

    omega_1 = fundamental_weight(target.rank, 1)
    for index, layer in enumerate(layers):
        rule = adjacency_rule(target, p, layer)
        if rule is None:
            continue
        if rule not in verdict.rules_fired:
            verdict.rules_fired.append(rule)
        if index + 1 < len(layers) and layers[index + 1] == omega_1:
            verdict.adjacency_violations.append(AdjacencyViolation(index, rule))
            verdict.answer = False

    return verdict


def difference_dominants(rs: RootSystemData, weights: Iterable[Weight]) -> FrozenSet[Weight]:
    """Dominant representatives of all pairwise differences, 0 included."""
    support = sorted(set(weights))
    result = set()
    for mu_1 in support:
        for mu_2 in support:
            result.add(dominant_representative(rs, subtract_weights(mu_1, mu_2)))
    return frozenset(result)


def difference_table(
    weights: Iterable[Weight],
) -> Dict[Weight, Tuple[Weight, Weight]]:
    """Each difference mapped to the lexicographically least pair producing it."""
    support = sorted(set(weights))
    table: Dict[Weight, Tuple[Weight, Weight]] = {}
    for mu_1 in support:
        for mu_2 in support:
            table.setdefault(subtract_weights(mu_1, mu_2), (mu_1, mu_2))
    return table


def obstruction_from_tables(
    p: int,
    rho_table: Dict[Weight, Tuple[Weight, Weight]],
    psi_table: Dict[Weight, Tuple[Weight, Weight]],
) -> ObstructionResult:
    best: Optional[Tuple[Weight, Weight, Weight, Weight]] = None
    for difference, (mu_1p, mu_2p) in psi_table.items():
        if not any(difference):
            continue
        pair = rho_table.get(scale_weight(p, difference))
        if pair is None:
            continue
        candidate = (pair[0], pair[1], mu_1p, mu_2p)
        if best is None or candidate < best:
            best = candidate
    return ObstructionResult(found=best is not None, witness=best)


def tensor_obstruction(
    rs: RootSystemData, p: int, x_rho: Iterable[Weight], x_psi: Iterable[Weight]
) -> ObstructionResult:
    """Look for mu_1 - mu_2 = p (mu_1' - mu_2') != 0 with mu in x_rho and mu' in x_psi."""
    rho_weights = list(x_rho)
    psi_weights = list(x_psi)
    for weight in rho_weights + psi_weights:
        if len(weight) != rs.rank:
            raise ClassifierError(f"Weight {weight} does not have rank {rs.rank}")
    return obstruction_from_tables(p, difference_table(rho_weights), difference_table(psi_weights))
