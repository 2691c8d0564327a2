"""
Thin adapters from parsed command-line arguments to the library packages, the text renderers,
and the acceptance harness behind the `report` subcommand.
"""

import json
import random
import time
from functools import partial
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Tuple

from rich.progress import Progress, SpinnerColumn, TextColumn, TimeElapsedColumn

from charzero_weights.charzero_weights_utils import (
    cache_info as charzero_cache_info,
    freudenthal_multiplicity,
    weight_count,
    weight_orbits,
    weight_system,
    weyl_dimension,
)
from lie_core.lie_core_types import SimpleType, Weight
from lie_core.lie_core_utils import (
    build_root_system,
    cache_info as lie_cache_info,
    fundamental_weight,
    parse_weight,
    root_system,
    scale_weight,
    simple_reflection,
    weight_label,
    weyl_group_order,
    weyl_orbit,
)
from mult_one_classifier.mult_one_classifier_audit import (
    audit_classifier,
    export_audit,
    layer_weight_set,
)
from mult_one_classifier.mult_one_classifier_types import (
    ADJACENCY_RULES,
    AuditReport,
    ClassifierVerdict,
)
from mult_one_classifier.mult_one_classifier_utils import classify, difference_dominants
from symplectic_theorem.symplectic_theorem_utils import (
    build_weil_weights,
    cache_info as symplectic_cache_info,
    check_branching_formulas,
    check_levi_chain,
    check_parity_separation,
    check_subgroup_restriction,
    weight_count_sweep,
    weil_highest_weights,
)
from utils.pool_utils import run_parallel
from utils.report_utils import emit_document, render_json, to_jsonable
from utils.rich_utils import (
    add_row,
    console,
    create_table,
    err_console,
    is_verbose,
    shows_summary,
    status_text,
)
from weil_matrix_lab.weil_matrix_lab_brauer import BRAUER_PRIMES, brauer_compare_sl2
from weil_matrix_lab.weil_matrix_lab_types import SUPPORTED_SIZES, sp_order
from weil_matrix_lab.weil_matrix_lab_utils import (
    build_weil_rep,
    cache_info as weil_lab_cache_info,
    check_homomorphism,
    run_weil_checks,
)
from weil_tools.weil_tools_types import (
    EXIT_FAIL,
    EXIT_OK,
    HarnessReport,
    ReportCheck,
    RunConfig,
    UsageError,
)

PRIME_SHORTCUTS = ("ω′", "ω'", "w'", "omega'")
DOUBLE_PRIME_SHORTCUTS = ("ω″", "ω''", "w''", "omega''")

BRANCHING_CASES = [(2, 3, 1), (3, 3, 1), (3, 3, 2), (2, 5, 1), (2, 7, 1)]

AUDIT_TYPES = [
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("A", 4),
    ("B", 2),
    ("B", 3),
    ("B", 4),
    ("C", 2),
    ("C", 3),
    ("C", 4),
    ("D", 4),
    ("G", 2),
    ("F", 4),
    ("E", 6),
    ("E", 7),
]
AUDIT_PRIMES = [2, 3, 5, 7]

# Types small enough for a thousand random orbit and character computations
PROPERTY_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("G", 2)]

ExitPayload = Tuple[Any, int]


def resolve_weight(text: str, family: str, rank: int, p: Optional[int]) -> Weight:
    """Parse a weight, expanding the ω′ / ω″ shortcuts for the symplectic family."""
    token = text.strip()
    if token not in PRIME_SHORTCUTS and token not in DOUBLE_PRIME_SHORTCUTS:
        return parse_weight(token, rank)

    family = family.strip().upper()
    if family != "C" and (family, rank) != ("A", 1):
        raise UsageError(f"Shortcut '{token}' is only defined for type C (or A1)")
    if p is None:
        raise UsageError(f"Shortcut '{token}' needs --p")
    hw1, hw2 = weil_highest_weights(rank, p)
    return hw2 if token in DOUBLE_PRIME_SHORTCUTS else hw1


def _require_rank(config: RunConfig, rank: int) -> None:
    if rank > config.max_rank:
        raise UsageError(f"Rank {rank} exceeds max_rank {config.max_rank}")


def default_audit_bound(rank: int, p: int) -> int:
    """Coordinates up to p^2 - 1 through rank 3, so both p-adic layers take every digit."""
    if rank <= 3:
        return p * p - 1
    if rank == 4:
        return min(p, 2)
    return 1


# Subcommands


def cmd_classify(config: RunConfig, family: str, rank: int, p: int, weight: str) -> ExitPayload:
    _require_rank(config, rank)
    w = resolve_weight(weight, family, rank, p)
    verdict = classify(family, rank, p, w, strict=config.omega_cn_strict)
    return verdict, EXIT_OK if verdict.answer else EXIT_FAIL


def _weil_expectation(family: str, rank: int, lam: Weight, p: Optional[int]) -> Optional[int]:
    if p is None or (family.upper() != "C" and (family.upper(), rank) != ("A", 1)):
        return None
    hw1, hw2 = weil_highest_weights(rank, p)
    if lam == hw1:
        return (p**rank - 1) // 2
    if lam == hw2:
        return (p**rank + 1) // 2
    return None


def cmd_weights(
    config: RunConfig, family: str, rank: int, weight: str, p: Optional[int] = None
) -> ExitPayload:
    _require_rank(config, rank)
    rs = root_system(family, rank)
    lam = resolve_weight(weight, family, rank, p)
    multiset = weight_system(rs, lam)
    payload: Dict[str, Any] = {
        "type": rs.type.label,
        "weight": list(lam),
        "label": weight_label(lam),
        "distinct": multiset.distinct,
        "mass": multiset.mass,
        "dimension": weyl_dimension(rs, lam),
        "multiplicity_free": multiset.is_multiplicity_free(),
        "orbits": [
            {"dominant": list(mu), "multiplicity": m, "orbit_size": size}
            for mu, m, size in weight_orbits(rs, lam)
        ],
    }
    expected = _weil_expectation(family, rank, lam, p)
    if expected is None:
        return payload, EXIT_OK
    payload["expected_distinct"] = expected
    payload["passed"] = multiset.distinct == expected
    return payload, EXIT_OK if payload["passed"] else EXIT_FAIL


def cmd_dim(
    config: RunConfig, family: str, rank: int, weight: str, p: Optional[int] = None
) -> ExitPayload:
    _require_rank(config, rank)
    rs = root_system(family, rank)
    lam = resolve_weight(weight, family, rank, p)
    payload = {
        "type": rs.type.label,
        "weight": list(lam),
        "label": weight_label(lam),
        "dimension": weyl_dimension(rs, lam),
        "distinct": weight_count(rs, lam),
    }
    return payload, EXIT_OK


def cmd_branch(config: RunConfig, n: int, p: int, k: Optional[int] = None) -> ExitPayload:
    _require_rank(config, n)
    if n < 2:
        raise UsageError(f"Branching needs n >= 2, got {n}")
    if k is None:
        levi = check_levi_chain(n, p, config.max_pn)
    else:
        levi = [check_branching_formulas(n, p, k, config.max_pn)]
    subgroup = check_subgroup_restriction(n, p, config.max_pn)
    parity = check_parity_separation(build_weil_weights(n, p, config.max_pn))
    passed = all(report.passed for report in levi) and subgroup.passed
    payload = {
        "n": n,
        "p": p,
        "levi": [report.to_dict() for report in levi],
        "subgroup": subgroup.to_dict(),
        "parity": parity.to_dict(),
        "passed": passed,
    }
    return payload, EXIT_OK if passed else EXIT_FAIL


def cmd_weilcheck(config: RunConfig, n: int, p: int, samples: int = 1000) -> ExitPayload:
    report = run_weil_checks(n, p, config.group_cap, config.seed, samples)
    return report, EXIT_OK if report.passed else EXIT_FAIL


def cmd_brauer(config: RunConfig, p: int) -> ExitPayload:
    report = brauer_compare_sl2(p, config.group_cap)
    return report, EXIT_OK if report.passed else EXIT_FAIL


def cmd_audit(
    config: RunConfig,
    family: str,
    rank: int,
    p: int,
    bound: Optional[int] = None,
    export: Optional[str] = None,
) -> ExitPayload:
    _require_rank(config, rank)
    report = audit_classifier(
        family,
        rank,
        p,
        default_audit_bound(rank, p) if bound is None else bound,
        strict=config.omega_cn_strict,
        parallelism=config.parallelism,
    )
    payload = report.to_dict()
    if export is not None:
        payload["export"] = export_audit(report, export)
    return payload, EXIT_OK if report.passed else EXIT_FAIL


def cmd_report(config: RunConfig, quick: bool = False) -> ExitPayload:
    report = run_report(config, quick)
    return report, EXIT_OK if report.passed else EXIT_FAIL


# Acceptance harness


def harness_weight_counts(config: RunConfig) -> ReportCheck:
    rows = weight_count_sweep(config.primes, config.max_pn, config.parallelism)
    return ReportCheck(
        name="weight_counts",
        passed=all(row.passed for row in rows),
        summary={"points": len(rows), "rows": [row.to_dict() for row in rows]},
        tags=["count-identity"],
    )


def harness_multiplicity_facts(config: RunConfig) -> ReportCheck:
    facts = []
    for n in range(2, min(6, config.max_rank) + 1):
        rs = root_system("C", n)
        for r in range(2, n + 1):
            lower = fundamental_weight(n, r - 2) if r > 2 else rs.zero()
            facts.append(
                {
                    "type": f"C{n}",
                    "highest": weight_label(fundamental_weight(n, r)),
                    "weight": weight_label(lower),
                    "expected": n - r + 1,
                    "actual": freudenthal_multiplicity(rs, fundamental_weight(n, r), lower),
                }
            )
    if config.max_rank >= 4:
        rs = root_system("C", 4)
        facts.append(
            {
                "type": "C4",
                "highest": weight_label(fundamental_weight(4, 4)),
                "weight": "0",
                "expected": 2,
                "actual": freudenthal_multiplicity(rs, fundamental_weight(4, 4), rs.zero()),
            }
        )
    failures = [fact for fact in facts if fact["expected"] != fact["actual"]]
    return ReportCheck(
        name="multiplicity_facts",
        passed=not failures,
        summary={"facts": len(facts), "failures": failures},
        tags=["freudenthal"],
    )


def audit_grid(max_rank: int, quick: bool = False) -> List[Tuple[str, int, int, int]]:
    primes = AUDIT_PRIMES[:2] if quick else AUDIT_PRIMES
    grid = []
    for family, rank in AUDIT_TYPES:
        if rank > max_rank or (quick and rank > 4):
            continue
        for p in primes:
            bound = default_audit_bound(rank, p)
            grid.append((family, rank, p, min(bound, p) if quick else bound))
    return grid


def harness_audits(config: RunConfig, quick: bool = False) -> ReportCheck:
    grid = audit_grid(config.max_rank, quick)
    reports: List[AuditReport] = run_parallel(
        lambda point: audit_classifier(*point, strict=config.omega_cn_strict),
        grid,
        config.parallelism,
    )
    fired: Dict[str, int] = {}
    for report in reports:
        for rule, count in report.rules_fired.items():
            fired[rule] = fired.get(rule, 0) + count
    silent = [rule for rule in ADJACENCY_RULES if not fired.get(rule)]
    hard = sum(len(report.hard_discrepancies) for report in reports)
    return ReportCheck(
        name="classifier_audit",
        passed=hard == 0 and not silent,
        summary={
            "audits": len(reports),
            "grid_points": sum(report.grid_size for report in reports),
            "hard_discrepancies": hard,
            "proxy_discrepancies": sum(
                len(report.discrepancies) - len(report.hard_discrepancies) for report in reports
            ),
            "rules_never_fired": silent,
            "rows": [
                {
                    "type": f"{report.family}{report.rank}",
                    "p": report.prime,
                    "bound": report.bound,
                    "grid": report.grid_size,
                    "yes": report.yes_count,
                    "hard": len(report.hard_discrepancies),
                }
                for report in reports
            ],
        },
        tags=sorted(fired),
    )


def difference_cases(max_rank: int) -> List[Tuple[SimpleType, int, Weight, FrozenSet[Weight]]]:
    """(type, p, layer, expected dominant differences) for the small characteristics."""
    cases = []
    for n in range(2, min(4, max_rank) + 1):
        top = fundamental_weight(n, n)
        doubled = {scale_weight(2, fundamental_weight(n, i)) for i in range(1, n + 1)}
        zero = (0,) * n
        cases.append((SimpleType("C", n), 2, top, frozenset(doubled | {zero})))
        natural = {scale_weight(2, fundamental_weight(n, 1)), fundamental_weight(n, 2), zero}
        cases.append((SimpleType("C", n), 2, fundamental_weight(n, 1), frozenset(natural)))
    g2 = SimpleType("G", 2)
    cases.append((g2, 2, (1, 0), frozenset({(0, 0), (1, 0), (0, 1), (2, 0)})))
    cases.append((g2, 3, (0, 1), frozenset({(0, 0), (0, 1), (0, 2), (3, 0)})))
    return cases


def harness_difference_witnesses(config: RunConfig) -> ReportCheck:
    rows = []
    tags = set()
    for target, p, layer, expected in difference_cases(config.max_rank):
        weights, basis = layer_weight_set(target, p, layer)
        actual = difference_dominants(build_root_system(target), weights)
        tags.add(basis)
        rows.append(
            {
                "type": target.label,
                "p": p,
                "layer": weight_label(layer),
                "differences": sorted(weight_label(mu) for mu in actual),
                "basis": basis,
                "passed": actual == expected,
            }
        )
    return ReportCheck(
        name="difference_witnesses",
        passed=all(row["passed"] for row in rows),
        summary={"cases": rows},
        tags=sorted(tags),
    )


def harness_branching(config: RunConfig) -> ReportCheck:
    rows = []
    restricted = set()
    for n, p, k in BRANCHING_CASES:
        if n > config.max_rank or p**n > config.max_pn:
            continue
        levi = check_branching_formulas(n, p, k, config.max_pn)
        row: Dict[str, Any] = {"n": n, "p": p, "k": k, "levi": levi.passed}
        if (n, p) not in restricted:
            restricted.add((n, p))
            row["subgroup"] = check_subgroup_restriction(n, p, config.max_pn).passed
        rows.append(row)
    return ReportCheck(
        name="branching",
        passed=all(row["levi"] and row.get("subgroup", True) for row in rows),
        summary={"cases": rows},
        tags=["levi-branching", "subgroup-restriction"],
    )


def weil_sizes(config: RunConfig, quick: bool = False) -> List[Tuple[int, int]]:
    return [
        (n, p)
        for n, p in SUPPORTED_SIZES
        if sp_order(n, p) <= config.group_cap and (n == 1 or not quick)
    ]


def harness_weil(config: RunConfig, n: int, p: int, quick: bool = False) -> ReportCheck:
    report = run_weil_checks(n, p, config.group_cap, config.seed, 100 if quick else 1000)
    return ReportCheck(
        name=f"weil_n{report.n}_p{report.p}",
        passed=report.passed,
        summary={
            "group_order": report.group_order,
            "calibration": report.calibration,
            "dims": list(report.dims),
            "checks": {check.name: check.passed for check in report.checks},
        },
        tags=[check.name for check in report.checks],
    )


def harness_brauer(config: RunConfig) -> ReportCheck:
    reports = [brauer_compare_sl2(p, config.group_cap) for p in BRAUER_PRIMES]
    return ReportCheck(
        name="brauer",
        passed=all(report.passed for report in reports),
        summary={
            "primes": list(BRAUER_PRIMES),
            "regular_elements": {str(r.p): r.regular_elements for r in reports},
            "max_difference": max(r.max_difference for r in reports),
            "mismatches": sum(len(r.mismatches) for r in reports),
        },
        tags=["brauer-character"],
    )


# Property suites


def _random_dominant(rng: random.Random, rank: int, top: int) -> Weight:
    return tuple(rng.randint(0, top) for _ in range(rank))


def property_reflections(rng: random.Random, cases: int) -> List[str]:
    failures = []
    for _ in range(cases):
        family, rank = rng.choice(PROPERTY_TYPES + [("D", 4), ("F", 4)])
        rs = root_system(family, rank)
        w = tuple(rng.randint(-4, 4) for _ in range(rank))
        i = rng.randint(1, rank)
        if simple_reflection(rs, i, simple_reflection(rs, i, w)) != w:
            failures.append(f"s_{i} s_{i} moves {w} in {rs.type.label}")
    return failures


def property_orbit_sizes(rng: random.Random, cases: int) -> List[str]:
    failures = []
    for _ in range(cases):
        family, rank = rng.choice(PROPERTY_TYPES + [("D", 4)])
        rs = root_system(family, rank)
        w = _random_dominant(rng, rank, 2)
        size = len(weyl_orbit(rs, w))
        if weyl_group_order(rs.type) % size:
            failures.append(f"orbit of {w} in {rs.type.label} has size {size}")
    return failures


def property_freudenthal_mass(rng: random.Random, cases: int) -> List[str]:
    failures = []
    for _ in range(cases):
        family, rank = rng.choice(PROPERTY_TYPES)
        rs = root_system(family, rank)
        lam = _random_dominant(rng, rank, 2)
        mass, dimension = weight_system(rs, lam).mass, weyl_dimension(rs, lam)
        if mass != dimension:
            failures.append(f"{rs.type.label} {lam}: mass {mass} but dimension {dimension}")
    return failures


def property_frobenius_twist(rng: random.Random, cases: int, strict: bool) -> List[str]:
    failures = []
    for _ in range(cases):
        family, rank = rng.choice(PROPERTY_TYPES + [("D", 4), ("F", 4), ("E", 6)])
        p = rng.choice(AUDIT_PRIMES)
        w = _random_dominant(rng, rank, p * p - 1)
        before = classify(family, rank, p, w, strict=strict).answer
        after = classify(family, rank, p, scale_weight(p, w), strict=strict).answer
        if before != after:
            failures.append(f"{family}{rank} p={p} {w}: twist changes the verdict")
    return failures


def property_homomorphism(config: RunConfig, cases: int) -> List[str]:
    failures = []
    for n, p in weil_sizes(config, quick=True):
        report = check_homomorphism(build_weil_rep(n, p, config.group_cap), cases, config.seed)
        failures.extend(report.failures)
    return failures


def harness_properties(config: RunConfig, cases: int = 1000) -> ReportCheck:
    suites: Dict[str, Callable[[random.Random], List[str]]] = {
        "reflection_involution": lambda rng: property_reflections(rng, cases),
        "orbit_divides_weyl_order": lambda rng: property_orbit_sizes(rng, cases),
        "freudenthal_mass": lambda rng: property_freudenthal_mass(rng, cases),
        "frobenius_twist": lambda rng: property_frobenius_twist(
            rng, cases, config.omega_cn_strict
        ),
        "homomorphism": lambda rng: property_homomorphism(config, cases),
    }
    summary = {}
    for offset, (name, suite) in enumerate(suites.items()):
        failures = suite(random.Random(config.seed + offset))
        summary[name] = {"cases": cases, "failures": len(failures), "examples": failures[:3]}
    return ReportCheck(
        name="properties",
        passed=all(entry["failures"] == 0 for entry in summary.values()),
        summary=summary,
        tags=sorted(suites),
    )


def _timed(config: RunConfig, name: str, step: Callable[[], ReportCheck]) -> ReportCheck:
    start = time.perf_counter()
    try:
        check = step()
    except Exception as e:
        check = ReportCheck(name=name, passed=False, error=str(e))
    if config.timings:
        check.seconds = time.perf_counter() - start
    return check


def report_steps(config: RunConfig, quick: bool) -> List[Tuple[str, Callable[[], ReportCheck]]]:
    steps: List[Tuple[str, Callable[[], ReportCheck]]] = [
        ("weight_counts", lambda: harness_weight_counts(config)),
        ("multiplicity_facts", lambda: harness_multiplicity_facts(config)),
        ("classifier_audit", lambda: harness_audits(config, quick)),
        ("difference_witnesses", lambda: harness_difference_witnesses(config)),
        ("branching", lambda: harness_branching(config)),
    ]
    for n, p in weil_sizes(config, quick):
        steps.append((f"weil_n{n}_p{p}", partial(harness_weil, config, n, p, quick)))
    steps.append(("brauer", lambda: harness_brauer(config)))
    steps.append(("properties", lambda: harness_properties(config, 100 if quick else 1000)))
    return steps


def run_report(config: RunConfig, quick: bool = False) -> HarnessReport:
    """Run every acceptance check in a fixed order."""
    report = HarnessReport(
        settings={
            "primes": list(config.primes),
            "max_rank": config.max_rank,
            "max_pn": config.max_pn,
            "group_cap": config.group_cap,
            "omega_cn_strict": config.omega_cn_strict,
            "seed": config.seed,
            "quick": quick,
        }
    )
    steps = report_steps(config, quick)
    with Progress(
        SpinnerColumn(),
        TextColumn("[bold blue]{task.description}"),
        TimeElapsedColumn(),
        console=err_console,
        transient=True,
        disable=not shows_summary(config.logging_level),
    ) as progress:
        task = progress.add_task("Running checks...", total=len(steps))
        for name, step in steps:
            progress.update(task, description=f"Running {name}...")
            check = _timed(config, name, step)
            report.checks.append(check)
            if is_verbose(config.logging_level):
                elapsed = f" ({check.seconds:.2f}s)" if check.seconds is not None else ""
                err_console.print(f"{name}: {status_text(check.passed)}{elapsed}")
            elif not check.passed and config.logging_level != "errors_only":
                err_console.print(f"[bold red]{name} failed[/]")
            progress.advance(task)
    if config.logging_level == "debug":
        render_cache_statistics()
    return report


def cache_statistics() -> Dict[str, Dict[str, Optional[int]]]:
    return {
        "root_systems": lie_cache_info(),
        "dominant_characters": charzero_cache_info(),
        "weil_weights": symplectic_cache_info(),
        "weil_representations": weil_lab_cache_info(),
    }


def render_cache_statistics() -> None:
    table = create_table(
        {"Cache": str, "Hits": int, "Misses": int, "Size": int}, title="Cache statistics"
    )
    for name, info in cache_statistics().items():
        add_row(table, name, info["hits"], info["misses"], info["currsize"])
    err_console.print(table)


# Output


def _scalar_text(value: Any) -> str:
    plain = to_jsonable(value)
    if isinstance(plain, (dict, list)):
        return json.dumps(plain, sort_keys=True, ensure_ascii=False)
    return str(plain)


def render_verdict(verdict: ClassifierVerdict) -> None:
    table = create_table(
        {"Layer": int, "Weight": str, "In table": bool, "Rule": str},
        title=f"{verdict.family}{verdict.rank}, p={verdict.prime}, {weight_label(verdict.weight)}",
    )
    for layer in verdict.layer_reports:
        add_row(table, layer.index, weight_label(layer.weight), layer.in_omega, layer.rule)
    console.print(table)
    for violation in verdict.adjacency_violations:
        console.print(
            f"[red]Adjacency violation after layer {violation.index}:[/] {violation.rule}"
        )
    for note in verdict.notes:
        console.print(f"[italic]{note}[/]")
    color = "green" if verdict.answer else "red"
    console.print(f"[bold {color}]{verdict.answer_text}[/]")


def render_harness(report: HarnessReport) -> None:
    table = create_table({"Check": str, "Status": str, "Seconds": float, "Tags": str})
    for check in report.checks:
        add_row(
            table,
            check.name,
            status_text(check.passed),
            check.seconds,
            ", ".join(sorted(check.tags)),
        )
    console.print(table)
    for check in report.checks:
        if check.error:
            console.print(f"[bold red]{check.name}:[/] {check.error}")


def render_mapping(title: str, payload: Dict[str, Any]) -> None:
    table = create_table({"Field": str, "Value": str}, title)
    for key in sorted(payload):
        add_row(table, key, _scalar_text(payload[key]))
    console.print(table)


def render_text(command: str, payload: Any) -> None:
    console.print()
    console.rule(f"[bold]{command}[/]")
    if isinstance(payload, ClassifierVerdict):
        render_verdict(payload)
    elif isinstance(payload, HarnessReport):
        render_harness(payload)
        if payload.passed:
            console.rule("[bold green]All checks passed[/]")
        else:
            console.rule("[bold red]Some checks failed[/]")
    else:
        plain = payload.to_dict() if hasattr(payload, "to_dict") else payload
        render_mapping(command, plain)
    console.print()


def emit_result(command: str, payload: Any, config: RunConfig) -> None:
    """JSON to stdout or --output; text mode renders tables and still writes --output as JSON."""
    if config.output_format == "json" or config.output_path is not None:
        emit_document(render_json(command, payload), config.output_path)
    if config.output_format == "text":
        render_text(command, payload)
    elif shows_summary(config.logging_level) and config.output_path is not None:
        err_console.print(f"Wrote {command} document to [bold]{config.output_path}[/]")
