"""
Cross-validation of the multiplicity-one decision procedure on a grid of highest weights.

Layer memberships are re-derived from characteristic-zero data where that is sound, adjacency
rules are re-derived with tensor_obstruction, and every disagreement is listed as "hard" (the
evidence is exact or cited) or "proxy" (it rests on a characteristic-zero weight set whose use
is not licensed for this prime).
"""

import itertools
from collections import Counter
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple

import pandas as pd

from charzero_weights.charzero_weights_utils import (
    dominant_weights_below,
    freudenthal_multiplicity,
    weight_count,
    weyl_dimension,
)
from lie_core.lie_core_types import SimpleType, Weight
from lie_core.lie_core_utils import (
    a_value,
    build_root_system,
    fundamental_weight,
    is_minuscule,
    weight_label,
    weyl_orbit,
)
from mult_one_classifier.mult_one_classifier_types import (
    BASIS_CITED,
    BASIS_EXACT,
    BASIS_PROXY,
    AuditDiscrepancy,
    AuditReport,
    Expectation,
)
from mult_one_classifier.mult_one_classifier_utils import (
    adjacency_rule,
    classify,
    difference_dominants,
    difference_table,
    normalize_type,
    obstruction_from_tables,
    omega_table_normalized,
    p_adic_expand,
    require_prime,
)
from utils.pool_utils import run_parallel

# Skip the characteristic-zero multiplicity-free test for modules larger than this
DEFAULT_DIMENSION_CAP = 5000


def premet_applies(target: SimpleType, p: int) -> bool:
    """Restricted modules share their weight set with the Weyl module unless p is special."""
    if target.family in ("B", "C", "F"):
        return p > 2
    if target.family == "G":
        return p > 3
    return True


def _charzero_support(target: SimpleType, layer: Weight) -> FrozenSet[Weight]:
    rs = build_root_system(target)
    support: set[Weight] = set()
    for mu in dominant_weights_below(rs, layer):
        support.update(weyl_orbit(rs, mu))
    return frozenset(support)


def layer_weight_set(target: SimpleType, p: int, layer: Weight) -> Tuple[FrozenSet[Weight], str]:
    """Weight set of the irreducible module L(layer) in characteristic p, with its basis label."""
    rs = build_root_system(target)
    n = target.rank
    zero = rs.zero()

    if is_minuscule(rs, layer):
        return weyl_orbit(rs, layer), BASIS_EXACT
    natural, top = fundamental_weight(n, 1), fundamental_weight(n, n)
    if target.family == "C" and p == 2 and layer in (natural, top):
        return weyl_orbit(rs, layer), BASIS_CITED
    if target.family == "G" and p == 2 and layer == fundamental_weight(2, 1):
        # six-dimensional module: the short roots, no zero weight
        return weyl_orbit(rs, layer), BASIS_CITED
    if target.family == "G" and p == 3 and layer in (natural, top):
        return weyl_orbit(rs, layer) | {zero}, BASIS_CITED

    basis = BASIS_EXACT if premet_applies(target, p) else BASIS_PROXY
    return _charzero_support(target, layer), basis


def expected_membership(
    target: SimpleType,
    p: int,
    layer: Weight,
    dimension_cap: int = DEFAULT_DIMENSION_CAP,
) -> Expectation:
    """Whether layer must (True) or must not (False) be in the table, when that is derivable."""
    rs = build_root_system(target)
    n = target.rank

    if is_minuscule(rs, layer):
        return True, BASIS_EXACT, "minuscule weight"

    if target.family == "C" and p > 2:
        omega_prime = tuple(
            (1 if k == n - 2 else 0) + ((p - 3) // 2 if k == n - 1 else 0) for k in range(n)
        )
        omega_double_prime = tuple((p - 1) // 2 if k == n - 1 else 0 for k in range(n))
        if layer in (omega_prime, omega_double_prime):
            sign = -1 if layer == omega_prime else 1
            expected = (p**n + sign) // 2
            count = weight_count(rs, layer)
            return (
                count == expected,
                BASIS_CITED,
                f"weight count {count}, dimension {expected}",
            )

        for r in range(2, n - 1):
            if layer == fundamental_weight(n, r):
                lower = rs.zero() if r == 2 else fundamental_weight(n, r - 2)
                multiplicity = freudenthal_multiplicity(rs, layer, lower)
                if multiplicity - 1 >= 2:
                    return (
                        False,
                        BASIS_CITED,
                        f"{weight_label(lower)} has multiplicity {multiplicity} in V(ω{r}), "
                        f"at least {multiplicity - 1} in L(ω{r})",
                    )

        if p > 3 and n >= 4 and layer == fundamental_weight(n, n):
            if n == 4:
                zero_multiplicity = freudenthal_multiplicity(rs, layer, rs.zero())
                if zero_multiplicity == 2:
                    return False, BASIS_CITED, "zero weight has multiplicity 2 in V(ω4) = L(ω4)"
            else:
                return False, BASIS_CITED, "restriction to a C4 Levi subgroup contains L(ω4)"

    dimension = weyl_dimension(rs, layer)
    if dimension <= dimension_cap and weight_count(rs, layer) == dimension:
        return True, BASIS_EXACT, "characteristic-zero module is multiplicity free"

    if target.family == "G" and p == 3 and layer == fundamental_weight(2, 2):
        return True, BASIS_CITED, "image of ω1 under the special isogeny"
    if target.family == "F" and p == 3 and layer == fundamental_weight(4, 4):
        count = weight_count(rs, layer)
        return count == 25, BASIS_CITED, f"25-dimensional module, {count} weights"
    if target.family == "A" and n >= 2:
        tag = omega_table_normalized(target, p).get(layer, "")
        if tag.startswith("Omega(A_n):c*omega_j"):
            return True, BASIS_CITED, "two adjacent coefficients summing to p-1"

    return None, BASIS_PROXY, "no derivable expectation"


def _combine_basis(*labels: str) -> str:
    if BASIS_PROXY in labels:
        return BASIS_PROXY
    if BASIS_CITED in labels:
        return BASIS_CITED
    return BASIS_EXACT


def audit_classifier(
    family: str,
    rank: int,
    p: int,
    bound: int,
    strict: bool = False,
    parallelism: int = 1,
    dimension_cap: int = DEFAULT_DIMENSION_CAP,
) -> AuditReport:
    require_prime(p)
    if bound < 0:
        raise ValueError(f"Grid bound must be non-negative, got {bound}")
    normalized = normalize_type(family, rank, p)
    target = normalized.target
    rs = build_root_system(target)
    table = omega_table_normalized(target, p, strict)
    omega_1 = fundamental_weight(target.rank, 1)

    report = AuditReport(
        family=normalized.original.family,
        rank=normalized.original.rank,
        prime=p,
        bound=bound,
        strict=strict,
    )

    grid = list(itertools.product(range(bound + 1), repeat=normalized.original.rank))
    report.grid_size = len(grid)
    verdicts = run_parallel(
        lambda w: classify(family, rank, p, w, strict=strict), grid, parallelism
    )

    layer_points: Counter[Weight] = Counter()
    pair_points: Counter[Tuple[Weight, Weight]] = Counter()
    rules_fired: Counter[str] = Counter()
    violations: Counter[str] = Counter()

    for weight, verdict in zip(grid, verdicts):
        if verdict.answer:
            report.yes_count += 1
        else:
            report.no_count += 1
        if verdict.boundary:
            report.boundary_count += 1
        rules_fired.update(verdict.rules_fired)
        violations.update(v.rule for v in verdict.adjacency_violations)

        layers = p_adic_expand(normalized.to_target(weight), p).layers
        for layer in set(layers):
            if any(layer):
                layer_points[layer] += 1
        for lower, upper in set(zip(layers, layers[1:])):
            if lower in table and upper in table:
                pair_points[(lower, upper)] += 1

        report.rows.append(
            {
                "weight": ",".join(str(c) for c in weight),
                "answer": verdict.answer_text,
                "layers": " | ".join(
                    ",".join(str(c) for c in layer.weight) for layer in verdict.layer_reports
                ),
                "rules": ";".join(verdict.rules_fired),
                "violations": len(verdict.adjacency_violations),
                "boundary": verdict.boundary,
            }
        )

    report.rules_fired = dict(rules_fired)
    report.violations = dict(violations)

    # Layer membership against derivable expectations
    unique_layers = sorted(layer_points)
    expectations = run_parallel(
        lambda layer: expected_membership(target, p, layer, dimension_cap),
        unique_layers,
        parallelism,
    )
    layer_checks: Counter[str] = Counter()
    for layer, (expected, basis, reason) in zip(unique_layers, expectations):
        if expected is None:
            layer_checks["skipped"] += 1
            continue
        layer_checks[basis] += 1
        in_table = layer in table
        if expected != in_table:
            report.discrepancies.append(
                AuditDiscrepancy(
                    kind="proxy" if basis == BASIS_PROXY else "hard",
                    check="layer-membership",
                    layers=(normalized.to_original(layer),),
                    message=(
                        f"{weight_label(normalized.to_original(layer))} is "
                        f"{'in' if in_table else 'not in'} the table but {reason}"
                    ),
                    grid_points=layer_points[layer],
                )
            )
    report.layer_checks = dict(layer_checks)

    # Weight sets for the table entries that occur on the grid
    table_layers = sorted(layer for layer in unique_layers if layer in table)
    weight_sets = dict(
        zip(
            table_layers,
            run_parallel(
                lambda layer: layer_weight_set(target, p, layer), table_layers, parallelism
            ),
            strict=True,
        )
    )

    # a(mu) <= 2 a(layer) for every dominant difference of weights of a table entry
    for layer in table_layers:
        weights, _ = weight_sets[layer]
        bound_value = 2 * a_value(rs, layer)
        worst: Optional[Weight] = None
        for mu in difference_dominants(rs, weights):
            if a_value(rs, mu) > bound_value:
                worst = mu
                break
        report.a_bound_checked += 1
        if worst is not None:
            report.discrepancies.append(
                AuditDiscrepancy(
                    kind="hard",
                    check="a-bound",
                    layers=(normalized.to_original(layer),),
                    message=f"a({weight_label(worst)}) exceeds 2a = {bound_value}",
                    grid_points=layer_points[layer],
                )
            )

    # Adjacency rules against condition (2) on the weight sets
    difference_tables: Dict[Weight, Dict[Weight, Tuple[Weight, Weight]]] = {
        layer: difference_table(weight_sets[layer][0]) for layer in table_layers
    }
    pair_checks: Counter[str] = Counter()
    for lower, upper in sorted(pair_points):
        basis = _combine_basis(weight_sets[lower][1], weight_sets[upper][1])
        pair_checks[basis] += 1
        predicted = adjacency_rule(target, p, lower) is not None and upper == omega_1
        result = obstruction_from_tables(p, difference_tables[lower], difference_tables[upper])
        if result.found != predicted:
            report.discrepancies.append(
                AuditDiscrepancy(
                    kind="proxy" if basis == BASIS_PROXY else "hard",
                    check="adjacency",
                    layers=(normalized.to_original(lower), normalized.to_original(upper)),
                    message=(
                        f"obstruction {'found' if result.found else 'absent'} for "
                        f"{weight_label(lower)} followed by {weight_label(upper)}, "
                        f"rule {'applies' if predicted else 'does not apply'}"
                    ),
                    grid_points=pair_points[(lower, upper)],
                )
            )
    report.pair_checks = dict(pair_checks)

    return report


def audit_frame(report: AuditReport) -> pd.DataFrame:
    """The per-weight grid of an audit as a DataFrame."""
    frame = pd.DataFrame(
        report.rows, columns=["weight", "answer", "layers", "rules", "violations", "boundary"]
    )
    frame.insert(0, "type", f"{report.family}{report.rank}")
    frame.insert(1, "p", report.prime)
    return frame


def export_audit(report: AuditReport, path: str) -> str:
    """Write the audit grid as CSV or parquet, chosen by the file extension."""
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    frame = audit_frame(report)
    suffix = file_path.suffix.lower()
    if suffix == ".csv":
        frame.to_csv(file_path, index=False)
    elif suffix == ".parquet":
        frame.to_parquet(file_path, engine="pyarrow", index=False)
    else:
        raise ValueError(f"Unsupported export format: {suffix or '(none)'}; use .csv or .parquet")
    return str(file_path)


def audit_rows(reports: List[AuditReport]) -> pd.DataFrame:
    """One summary row per audit."""
    return pd.DataFrame(
        [
            {
                "type": f"{r.family}{r.rank}",
                "p": r.prime,
                "bound": r.bound,
                "grid": r.grid_size,
                "yes": r.yes_count,
                "no": r.no_count,
                "hard": len(r.hard_discrepancies),
                "proxy": len(r.discrepancies) - len(r.hard_discrepancies),
            }
            for r in reports
        ]
    )
