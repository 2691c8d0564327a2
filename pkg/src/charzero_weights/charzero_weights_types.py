from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from lie_core.lie_core_types import Weight

# Abort dominance-descent enumeration beyond this many dominant weights
DEFAULT_DOMINANT_CAP = 10**6


class CharZeroError(ValueError):
    """Raised for non-dominant inputs and runaway enumerations."""


@dataclass
class WeightMultiset:
    """Weights with positive multiplicities, e.g. the weight system of a module."""

    rank: int
    entries: Dict[Weight, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for weight, multiplicity in self.entries.items():
            if len(weight) != self.rank:
                raise CharZeroError(f"Weight {weight} does not have rank {self.rank}")
            if multiplicity <= 0:
                raise CharZeroError(
                    f"Multiplicity of {weight} must be positive, got {multiplicity}"
                )

    @classmethod
    def from_weights(cls, rank: int, weights: Iterable[Weight]) -> "WeightMultiset":
        multiset = cls(rank=rank)
        for weight in weights:
            multiset.add(weight)
        return multiset

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def add(self, weight: Weight, multiplicity: int = 1) -> None:
        if multiplicity <= 0:
            return
        self.entries[weight] = self.entries.get(weight, 0) + multiplicity

    def multiplicity(self, weight: Weight) -> int:
        return self.entries.get(weight, 0)

    @property
    def distinct(self) -> int:
        return len(self.entries)

    @property
    def mass(self) -> int:
        return sum(self.entries.values())

    def as_set(self) -> FrozenSet[Weight]:
        return frozenset(self.entries)

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self.entries.values())

    def flattened(self) -> "WeightMultiset":
        """Same support, every multiplicity set to 1."""
        return WeightMultiset(rank=self.rank, entries={w: 1 for w in self.entries})

    def scaled(self, factor: int) -> "WeightMultiset":
        return WeightMultiset(
            rank=self.rank, entries={w: m * factor for w, m in self.entries.items()}
        )

    def union(self, other: "WeightMultiset") -> "WeightMultiset":
        """Multiset sum (multiplicities add)."""
        if other.rank != self.rank:
            raise CharZeroError(f"Rank mismatch: {self.rank} vs {other.rank}")
        merged = WeightMultiset(rank=self.rank, entries=dict(self.entries))
        for weight, multiplicity in other.entries.items():
            merged.add(weight, multiplicity)
        return merged

    def sorted_items(self) -> List[Tuple[Weight, int]]:
        return sorted(self.entries.items())

    def to_dict(self) -> Dict[str, object]:
        return {
            "rank": self.rank,
            "distinct": self.distinct,
            "mass": self.mass,
            "weights": [[list(w), m] for w, m in self.sorted_items()],
        }
