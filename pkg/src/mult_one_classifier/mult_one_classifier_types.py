from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from lie_core.lie_core_types import SimpleType, Weight

# Clause tags: every table entry and every adjacency rule carries one of these
ZERO_LAYER = "zero-layer"
OUTSIDE_TABLE = "outside-table"
ADJ_C_P2 = "adjacency:C_n,p=2,omega_n->omega_1"
ADJ_G2_P2 = "adjacency:G2,p=2,omega_1->omega_1"
ADJ_G2_P3 = "adjacency:G2,p=3,omega_2->omega_1"
ADJACENCY_RULES = [ADJ_C_P2, ADJ_G2_P2, ADJ_G2_P3]

# Basis labels for the weight sets and expectations used by audits
BASIS_EXACT = "exact"
BASIS_CITED = "cited"
BASIS_PROXY = "proxy"


class ClassifierError(ValueError):
    """Raised for invalid primes, non-dominant weights and unsupported types."""


@dataclass(frozen=True)
class NormalizedType:
    """The type the table is looked up in, plus the coordinate permutation that gets there."""

    original: SimpleType
    target: SimpleType
    permutation: Tuple[int, ...]  # target coordinate k is original coordinate permutation[k]
    boundary: bool = False
    note: str = ""

    def to_target(self, w: Weight) -> Weight:
        return tuple(w[k] for k in self.permutation)

    def to_original(self, w: Weight) -> Weight:
        result = [0] * len(w)
        for k, source in enumerate(self.permutation):
            result[source] = w[k]
        return tuple(result)


@dataclass(frozen=True)
class PAdicExpansion:
    prime: int
    layers: Tuple[Weight, ...]

    def __post_init__(self) -> None:
        for layer in self.layers:
            if any(c < 0 or c >= self.prime for c in layer):
                raise ClassifierError(f"Layer {layer} is not restricted for p={self.prime}")
        if self.layers and all(c == 0 for c in self.layers[-1]):
            raise ClassifierError("Trailing zero layers must be trimmed")

    def reconstruct(self, rank: int) -> Weight:
        total = [0] * rank
        for level, layer in enumerate(self.layers):
            for k, c in enumerate(layer):
                total[k] += c * self.prime**level
        return tuple(total)


@dataclass
class LayerReport:
    index: int
    weight: Weight
    in_omega: bool
    rule: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "weight": list(self.weight),
            "in_omega": self.in_omega,
            "rule": self.rule,
        }


@dataclass
class AdjacencyViolation:
    index: int  # the rule forbids layer index + 1 being omega_1
    rule: str

    def to_dict(self) -> Dict[str, Any]:
        return {"index": self.index, "rule": self.rule}


@dataclass
class ClassifierVerdict:
    family: str
    rank: int
    prime: int
    weight: Weight
    answer: bool
    layer_reports: List[LayerReport] = field(default_factory=list)
    adjacency_violations: List[AdjacencyViolation] = field(default_factory=list)
    rules_fired: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    lookup_type: str = ""
    boundary: bool = False

    @property
    def answer_text(self) -> str:
        return "YES" if self.answer else "NO"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": f"{self.family}{self.rank}",
            "lookup_type": self.lookup_type,
            "p": self.prime,
            "weight": list(self.weight),
            "answer": self.answer_text,
            "boundary": self.boundary,
            "layers": [layer.to_dict() for layer in self.layer_reports],
            "adjacency_violations": [v.to_dict() for v in self.adjacency_violations],
            "rules_fired": list(self.rules_fired),
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class ObstructionResult:
    found: bool
    # (mu_1, mu_2, mu_1', mu_2') with mu_1 - mu_2 = p (mu_1' - mu_2') != 0
    witness: Optional[Tuple[Weight, Weight, Weight, Weight]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "found": self.found,
            "witness": [list(w) for w in self.witness] if self.witness else None,
        }


@dataclass
class AuditDiscrepancy:
    kind: str  # "hard" or "proxy"
    check: str
    layers: Tuple[Weight, ...]
    message: str
    grid_points: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "check": self.check,
            "layers": [list(w) for w in self.layers],
            "message": self.message,
            "grid_points": self.grid_points,
        }


@dataclass
class AuditReport:
    family: str
    rank: int
    prime: int
    bound: int
    strict: bool
    grid_size: int = 0
    yes_count: int = 0
    no_count: int = 0
    boundary_count: int = 0
    rules_fired: Dict[str, int] = field(default_factory=dict)
    violations: Dict[str, int] = field(default_factory=dict)  # adjacency rule -> grid points
    layer_checks: Dict[str, int] = field(default_factory=dict)  # basis label -> count
    pair_checks: Dict[str, int] = field(default_factory=dict)
    a_bound_checked: int = 0
    discrepancies: List[AuditDiscrepancy] = field(default_factory=list)
    rows: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def hard_discrepancies(self) -> List[AuditDiscrepancy]:
        return [d for d in self.discrepancies if d.kind == "hard"]

    @property
    def passed(self) -> bool:
        return not self.hard_discrepancies

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": f"{self.family}{self.rank}",
            "p": self.prime,
            "bound": self.bound,
            "strict": self.strict,
            "grid_size": self.grid_size,
            "yes": self.yes_count,
            "no": self.no_count,
            "boundary": self.boundary_count,
            "rules_fired": dict(sorted(self.rules_fired.items())),
            "violations": dict(sorted(self.violations.items())),
            "layer_checks": dict(sorted(self.layer_checks.items())),
            "pair_checks": dict(sorted(self.pair_checks.items())),
            "a_bound_checked": self.a_bound_checked,
            "hard_discrepancies": len(self.hard_discrepancies),
            "discrepancies": [d.to_dict() for d in self.discrepancies],
            "passed": self.passed,
        }


# (expected membership or None, basis label, reason) for one layer
Expectation = Tuple[Optional[bool], str, str]
