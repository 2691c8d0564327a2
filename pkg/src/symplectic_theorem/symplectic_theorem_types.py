from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from charzero_weights.charzero_weights_types import WeightMultiset
from lie_core.lie_core_types import Weight

DEFAULT_MAX_PN = 3**7

PairWeight = Tuple[Weight, Weight]

# Why a count check stands in for the multiplicity-one statement
COUNT_REASONING = (
    "the module has dimension (p^n±1)/2 and, for p>2, the same weight set as the Weyl "
    "module; the Weyl module has exactly (p^n±1)/2 distinct weights, so every weight of "
    "the module occurs once"
)


class SymplecticTheoremError(ValueError):
    """Raised when a weight-count identity fails or inputs are out of range."""


@dataclass
class WeilWeights:
    n: int
    p: int
    hw1: Weight
    hw2: Weight
    x1: WeightMultiset
    x2: WeightMultiset

    def piece(self, i: int) -> WeightMultiset:
        if i not in (1, 2):
            raise SymplecticTheoremError(f"Piece index must be 1 or 2, got {i}")
        return self.x1 if i == 1 else self.x2

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "p": self.p,
            "hw1": list(self.hw1),
            "hw2": list(self.hw2),
            "count1": self.x1.distinct,
            "count2": self.x2.distinct,
            "expected1": (self.p**self.n - 1) // 2,
            "expected2": (self.p**self.n + 1) // 2,
            "reasoning": COUNT_REASONING,
        }


@dataclass
class PairDefect:
    pair: PairWeight
    expected: int
    actual: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": [list(self.pair[0]), list(self.pair[1])],
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class BranchingCase:
    piece: int
    formula: str
    expected_mass: int
    actual_mass: int
    defects: List[PairDefect] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.defects and self.expected_mass == self.actual_mass

    def to_dict(self) -> Dict[str, Any]:
        return {
            "piece": self.piece,
            "formula": self.formula,
            "expected_mass": self.expected_mass,
            "actual_mass": self.actual_mass,
            "defects": [d.to_dict() for d in self.defects],
            "passed": self.passed,
        }


@dataclass
class BranchingReport:
    n: int
    p: int
    k: int
    cases: List[BranchingCase] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "p": self.p,
            "k": self.k,
            "cases": [case.to_dict() for case in self.cases],
            "passed": self.passed,
        }


@dataclass
class RestrictionCase:
    piece: int
    coefficients: Tuple[int, int]
    expected_mass: int
    actual_mass: int
    defects: List[Tuple[Weight, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.defects and self.expected_mass == self.actual_mass

    def to_dict(self) -> Dict[str, Any]:
        return {
            "piece": self.piece,
            "coefficients": list(self.coefficients),
            "expected_mass": self.expected_mass,
            "actual_mass": self.actual_mass,
            "defects": [[list(w), e, a] for w, e, a in self.defects],
            "passed": self.passed,
        }


@dataclass
class SubgroupRestrictionReport:
    n: int
    p: int
    cases: List[RestrictionCase] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "p": self.p,
            "cases": [case.to_dict() for case in self.cases],
            "passed": self.passed,
        }


@dataclass
class ParityReport:
    n: int
    p: int
    even_parity: int  # expected parity of the epsilon-sum on the even piece
    offenders: List[Tuple[int, Weight]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.offenders

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "p": self.p,
            "status": "conjecture",
            "even_parity": self.even_parity,
            "holds": self.holds,
            "offenders": [[i, list(w)] for i, w in self.offenders],
        }


@dataclass
class SweepRow:
    n: int
    p: int
    count1: int
    count2: int
    passed: bool
    error: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "p": self.p,
            "count1": self.count1,
            "count2": self.count2,
            "expected1": (self.p**self.n - 1) // 2,
            "expected2": (self.p**self.n + 1) // 2,
            "passed": self.passed,
            "error": self.error,
        }
