from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

# Integer coordinates in the fundamental-weight basis
Weight = Tuple[int, ...]

FAMILIES = ["A", "B", "C", "D", "E", "F", "G"]

# family -> (minimum rank, maximum rank or None), Bourbaki ranges; E8 is not supported
RANK_BOUNDS: Dict[str, Tuple[int, int | None]] = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 7),
    "F": (4, 4),
    "G": (2, 2),
}


class LieCoreError(ValueError):
    """Raised for unsupported root-system types and malformed weights."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in RANK_BOUNDS:
            raise LieCoreError(
                f"Unknown family '{self.family}'. Must be one of {', '.join(FAMILIES)}"
            )
        low, high = RANK_BOUNDS[self.family]
        if self.family == "E" and self.rank == 8:
            raise LieCoreError("Type E8 is not supported: no multiplicity-one table exists for it")
        if self.rank < low or (high is not None and self.rank > high):
            bound = f"rank >= {low}" if high is None else f"{low} <= rank <= {high}"
            raise LieCoreError(
                f"Unsupported rank {self.rank} for family {self.family}: requires {bound}"
            )

    @classmethod
    def parse(cls, family: str, rank: int | str) -> "SimpleType":
        try:
            rank_value = int(rank)
        except (TypeError, ValueError) as e:
            raise LieCoreError(f"Rank must be an integer, got {rank!r}") from e
        return cls(family.strip().upper(), rank_value)

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class RootSystemData:
    """Everything derived from one Cartan matrix; immutable once built."""

    type: SimpleType
    cartan: Tuple[Tuple[int, ...], ...]  # cartan[i][j] = <alpha_j, alpha_i coroot>
    cartan_inverse: Tuple[Tuple[Fraction, ...], ...]
    simple_roots: Tuple[Weight, ...]  # column j of the Cartan matrix
    root_lengths: Tuple[Fraction, ...]  # (alpha_i, alpha_i) / 2, long roots give 1
    positive_roots: Tuple[Weight, ...]  # omega-coordinates, ordered by height then lexicographic
    positive_roots_alpha: Tuple[Tuple[int, ...], ...]  # same roots in simple-root coordinates
    highest_root: Weight
    rho: Weight
    form: Tuple[Tuple[Fraction, ...], ...]  # invariant form on the omega basis
    form_scaled: Tuple[Tuple[int, ...], ...]  # form_scale * form, integral
    form_scale: int

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def family(self) -> str:
        return self.type.family

    def zero(self) -> Weight:
        return (0,) * self.rank
