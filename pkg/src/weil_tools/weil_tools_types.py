from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional

import sympy

from symplectic_theorem.symplectic_theorem_types import DEFAULT_MAX_PN
from utils.rich_utils import LOGGING_LEVELS
from weil_matrix_lab.weil_matrix_lab_types import DEFAULT_GROUP_CAP, DEFAULT_SEED

OUTPUT_FORMATS = ["json", "text"]
DEFAULT_PRIMES = [3, 5, 7, 11, 13]
DEFAULT_MAX_RANK = 8

# Commands whose prime may be 2
EVEN_PRIME_COMMANDS = ["classify", "audit"]

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    """Raised for arguments that parse but make no sense together."""


def _positive_int(config: Dict[str, Any], key: str, default: int) -> int:
    value = config.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"'{key}' must be an integer, got {value!r}")
    if value < 1:
        raise ValueError(f"'{key}' must be positive, got {value}")
    return value


@dataclass
class RunConfig:
    """Settings shared by every subcommand, merged from config file, environment and flags"""

    primes: List[int] = field(default_factory=lambda: list(DEFAULT_PRIMES))
    max_rank: int = DEFAULT_MAX_RANK
    max_pn: int = DEFAULT_MAX_PN
    group_cap: int = DEFAULT_GROUP_CAP
    omega_cn_strict: bool = False
    parallelism: int = 1
    output_format: str = "json"
    logging_level: str = "summary"
    seed: int = DEFAULT_SEED
    timings: bool = True
    output_path: Optional[str] = None
    allow_even_prime: bool = False

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        for key in ("max_rank", "max_pn", "group_cap", "parallelism"):
            _positive_int({key: getattr(self, key)}, key, 1)
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"'output_format' must be one of {OUTPUT_FORMATS}, got {self.output_format!r}"
            )
        if self.logging_level not in LOGGING_LEVELS:
            raise ValueError(
                f"'logging_level' must be one of {LOGGING_LEVELS}, got {self.logging_level!r}"
            )
        if not isinstance(self.primes, list) or not self.primes:
            raise ValueError("'primes' must be a non-empty list")
        for p in self.primes:
            if isinstance(p, bool) or not isinstance(p, int) or not sympy.isprime(p):
                raise ValueError(f"'primes' entries must be primes, got {p!r}")
            if p == 2 and not self.allow_even_prime:
                raise ValueError("'primes' may only contain 2 for classify and audit")
        if not isinstance(self.omega_cn_strict, bool):
            raise ValueError(
                f"'omega_cn_strict' must be true or false, got {self.omega_cn_strict!r}"
            )

    @classmethod
    def from_dict(cls, config: Dict[str, Any], allow_even_prime: bool = False) -> "RunConfig":
        return cls(
            primes=list(config.get("primes", DEFAULT_PRIMES)),
            max_rank=_positive_int(config, "max_rank", DEFAULT_MAX_RANK),
            max_pn=_positive_int(config, "max_pn", DEFAULT_MAX_PN),
            group_cap=_positive_int(config, "group_cap", DEFAULT_GROUP_CAP),
            omega_cn_strict=config.get("omega_cn_strict", False),
            parallelism=_positive_int(config, "parallelism", 1),
            output_format=config.get("output_format", "json"),
            logging_level=config.get("logging_level", "summary"),
            seed=int(config.get("seed", DEFAULT_SEED)),
            allow_even_prime=allow_even_prime,
        )

    def with_overrides(self, **changes: Any) -> "RunConfig":
        """Copy with command-line values applied; None means not given."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


@dataclass
class ReportCheck:
    """One line of the harness summary."""

    name: str
    passed: bool
    summary: Dict[str, Any] = field(default_factory=dict)
    tags: List[str] = field(default_factory=list)
    seconds: Optional[float] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "summary": self.summary,
            "tags": sorted(self.tags),
        }
        if self.seconds is not None:
            result["seconds"] = round(self.seconds, 3)
        if self.error is not None:
            result["error"] = self.error
        return result


@dataclass
class HarnessReport:
    checks: List[ReportCheck] = field(default_factory=list)
    settings: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "settings": self.settings,
            "checks": [check.to_dict() for check in self.checks],
            "failed": [check.name for check in self.checks if not check.passed],
            "passed": self.passed,
        }
