from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple, Type

import galois
import numpy as np

# Sizes the Weil representation is built for by default
SUPPORTED_SIZES: List[Tuple[int, int]] = [(1, 3), (1, 5), (1, 7), (2, 3)]
DEFAULT_GROUP_CAP = 10**5
DEFAULT_SEED = 20240
EIGENVALUE_SEPARATION = 1e-6
BRAUER_TOLERANCE = 1e-8

Word = Tuple[int, ...]


class WeilLabError(ValueError):
    """Raised when a construction or check in the Weil lab cannot proceed."""


class UnsupportedSizeError(WeilLabError):
    pass


class CocycleObstruction(WeilLabError):
    """Two words for the same group element give different operators."""

    def __init__(self, message: str, words: Tuple[Word, Word], scalar: Optional[str]):
        super().__init__(message)
        self.words = words
        self.scalar = scalar

    def to_dict(self) -> Dict[str, Any]:
        return {
            "message": str(self),
            "words": [list(w) for w in self.words],
            "scalar": self.scalar,
        }


def sp_order(n: int, p: int) -> int:
    """|Sp_2n(p)| = p^(n^2) * prod (p^(2i) - 1)."""
    order = p ** (n * n)
    for i in range(1, n + 1):
        order *= p ** (2 * i) - 1
    return order


def standard_form(n: int) -> np.ndarray:
    """The alternating form [[0, I], [-I, 0]]."""
    form = np.zeros((2 * n, 2 * n), dtype=np.int64)
    form[:n, n:] = np.eye(n, dtype=np.int64)
    form[n:, :n] = -np.eye(n, dtype=np.int64)
    return form


@lru_cache(maxsize=None)
def prime_field(p: int) -> Type[galois.FieldArray]:
    return galois.GF(p)


@dataclass(frozen=True)
class FiniteSpElement:
    """A 2n x 2n matrix over F_p, stored row-major with entries in 0..p-1."""

    n: int
    p: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != 4 * self.n * self.n:
            raise WeilLabError(
                f"Expected {4 * self.n * self.n} entries for a {2 * self.n}x{2 * self.n} matrix, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_matrix(
        cls, p: int, matrix: Sequence[Sequence[int]] | np.ndarray
    ) -> "FiniteSpElement":
        array = np.asarray(matrix, dtype=np.int64) % p
        size = array.shape[0]
        if array.shape != (size, size) or size % 2:
            raise WeilLabError(f"Expected an even square matrix, got shape {array.shape}")
        return cls(n=size // 2, p=p, entries=tuple(int(v) for v in array.flatten()))

    @classmethod
    def identity(cls, n: int, p: int) -> "FiniteSpElement":
        return cls.from_matrix(p, np.eye(2 * n, dtype=np.int64))

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(2 * self.n, 2 * self.n)

    @property
    def field_matrix(self) -> galois.FieldArray:
        return prime_field(self.p)(self.matrix)

    def __matmul__(self, other: "FiniteSpElement") -> "FiniteSpElement":
        if (self.n, self.p) != (other.n, other.p):
            raise WeilLabError("Cannot multiply elements of different groups")
        # int64 product reduced mod p
        return FiniteSpElement.from_matrix(self.p, self.matrix @ other.matrix)

    def is_identity(self) -> bool:
        return self == FiniteSpElement.identity(self.n, self.p)

    def is_symplectic(self) -> bool:
        m = self.field_matrix
        form = prime_field(self.p)(standard_form(self.n) % self.p)
        return bool(np.array_equal(m.T @ form @ m, form))

    def inverse(self) -> "FiniteSpElement":
        inverse = np.linalg.inv(self.field_matrix)
        return FiniteSpElement.from_matrix(self.p, inverse.view(np.ndarray))

    def power(self, k: int) -> "FiniteSpElement":
        result = FiniteSpElement.identity(self.n, self.p)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result @ base
        return result

    def order(self, limit: int = 10**4) -> int:
        current = self
        for k in range(1, limit + 1):
            if current.is_identity():
                return k
            current = current @ self
        raise WeilLabError(f"Element order exceeds {limit}")

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "p": self.p, "matrix": self.matrix.tolist()}


@dataclass
class GroupAtlas:
    """Every group element once, with a shortest generator word and the right Cayley table."""

    n: int
    p: int
    gens: List[FiniteSpElement]
    elements: List[FiniteSpElement] = field(default_factory=list)
    words: List[Word] = field(default_factory=list)
    index: Dict[FiniteSpElement, int] = field(default_factory=dict)
    # table[i][s] is the index of elements[i] @ gens[s]
    table: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, element: FiniteSpElement) -> int:
        try:
            return self.index[element]
        except KeyError as e:
            raise WeilLabError("Element is not in the atlas") from e

    def product_index(self, i: int, j: int) -> int:
        return self.index_of(self.elements[i] @ self.elements[j])

    def inverse_index(self, i: int) -> int:
        return self.index_of(self.elements[i].inverse())


@dataclass
class CheckReport:
    """Outcome of one named check with free-form details."""

    name: str
    n: int
    p: int
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "n": self.n,
            "p": self.p,
            "passed": self.passed,
            "details": self.details,
            "failures": list(self.failures),
        }


@dataclass
class WeilCheckReport:
    n: int
    p: int
    group_order: int
    calibration: str
    dims: Tuple[int, int]
    checks: List[CheckReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "p": self.p,
            "group_order": self.group_order,
            "calibration": self.calibration,
            "dims": list(self.dims),
            "checks": [check.to_dict() for check in self.checks],
            "passed": self.passed,
        }


@dataclass
class BrauerRow:
    element: FiniteSpElement
    order: int
    piece: int
    ordinary: complex
    brauer: complex

    @property
    def difference(self) -> float:
        return abs(self.ordinary - self.brauer)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "matrix": self.element.matrix.tolist(),
            "order": self.order,
            "piece": self.piece,
            "ordinary": self.ordinary,
            "brauer": self.brauer,
            "difference": self.difference,
        }


@dataclass
class BrauerReport:
    p: int
    dims: Tuple[int, int]
    regular_elements: int
    max_difference: float
    tolerance: float
    mismatches: List[BrauerRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "dims": list(self.dims),
            "regular_elements": self.regular_elements,
            "max_difference": self.max_difference,
            "tolerance": self.tolerance,
            "mismatches": [row.to_dict() for row in self.mismatches],
            "passed": self.passed,
        }
