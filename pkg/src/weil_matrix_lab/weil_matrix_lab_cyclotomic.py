"""
Exact arithmetic in the cyclotomic field Q(zeta_p).

Elements are stored in the power basis 1, zeta, ..., zeta^(p-2); zeta^(p-1) is rewritten as
-(1 + zeta + ... + zeta^(p-2)). Operators keep one integer coefficient matrix per basis power and a
shared positive denominator, reduced by the gcd after every operation.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from weil_matrix_lab.weil_matrix_lab_types import WeilLabError

Scalar = Union[int, Fraction, "CycQ"]


def _fold(values: Sequence[Fraction], p: int) -> Tuple[Fraction, ...]:
    """Reduce coefficients of zeta^0..zeta^m (any m) to the power basis."""
    full = [Fraction(0)] * p
    for k, value in enumerate(values):
        full[k % p] += value
    top = full[p - 1]
    return tuple(full[k] - top for k in range(p - 1))


@dataclass(frozen=True)
class CycQ:
    """An element of Q(zeta_p) in the power basis of length p - 1."""

    p: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.p < 2:
            raise WeilLabError(f"Cyclotomic field needs a prime p >= 2, got {self.p}")
        if len(self.coeffs) != self.p - 1:
            raise WeilLabError(f"Expected {self.p - 1} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_exponents(cls, p: int, values: Sequence[Union[int, Fraction]]) -> "CycQ":
        """Element sum values[k] * zeta^k for exponents k of any size."""
        return cls(p, _fold([Fraction(v) for v in values], p))

    @classmethod
    def rational(cls, p: int, value: Union[int, Fraction]) -> "CycQ":
        return cls.from_exponents(p, [value])

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> "CycQ":
        values = [Fraction(0)] * p
        values[k % p] = Fraction(1)
        return cls(p, _fold(values, p))

    def _coerce(self, other: Scalar) -> "CycQ":
        if isinstance(other, CycQ):
            if other.p != self.p:
                raise WeilLabError(f"Cannot combine Q(zeta_{self.p}) with Q(zeta_{other.p})")
            return other
        return CycQ.rational(self.p, other)

    def __add__(self, other: Scalar) -> "CycQ":
        other = self._coerce(other)
        return CycQ(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    __radd__ = __add__

    def __neg__(self) -> "CycQ":
        return CycQ(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other: Scalar) -> "CycQ":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "CycQ":
        return self._coerce(other) - self

    def __mul__(self, other: Scalar) -> "CycQ":
        other = self._coerce(other)
        product = [Fraction(0)] * (2 * self.p - 3)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    product[i + j] += a * b
        return CycQ.from_exponents(self.p, product)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycQ":
        base = self if k >= 0 else self.inverse()
        result = CycQ.rational(self.p, 1)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __truediv__(self, other: Scalar) -> "CycQ":
        return self * self._coerce(other).inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise WeilLabError(f"{self} is not rational")
        return self.coeffs[0]

    def galois(self, k: int) -> "CycQ":
        """Image under the automorphism zeta -> zeta^k."""
        if k % self.p == 0:
            raise WeilLabError(f"zeta -> zeta^{k} is not an automorphism of Q(zeta_{self.p})")
        values = [Fraction(0)] * self.p
        for j, a in enumerate(self.coeffs):
            values[(j * k) % self.p] += a
        return CycQ(self.p, _fold(values, self.p))

    def conj(self) -> "CycQ":
        return self.galois(self.p - 1)

    def norm(self) -> Fraction:
        product = CycQ.rational(self.p, 1)
        for k in range(1, self.p):
            product = product * self.galois(k)
        return product.rational_value()

    def inverse(self) -> "CycQ":
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero in a cyclotomic field")
        # Product of the other conjugates divided by the norm
        others = CycQ.rational(self.p, 1)
        for k in range(2, self.p):
            others = others * self.galois(k)
        return others * (1 / (self * others).rational_value())

    def to_complex(self) -> complex:
        powers = np.exp(2j * np.pi * np.arange(self.p - 1) / self.p)
        return complex(np.dot(np.array([float(a) for a in self.coeffs]), powers))

    def to_dict(self) -> List[str]:
        return [str(a) for a in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs):
            if a:
                terms.append(f"{a}" if k == 0 else f"{a}*z^{k}")
        return " + ".join(terms) if terms else "0"


def gauss_sum(p: int) -> CycQ:
    """G = sum over t in F_p of zeta^(t^2)."""
    values = [0] * p
    for t in range(p):
        values[(t * t) % p] += 1
    return CycQ.from_exponents(p, values)


# Operators


def _reduce_powers(acc: np.ndarray, p: int) -> np.ndarray:
    """Fold a stack of coefficient matrices indexed by zeta power into the power basis."""
    full = np.zeros((p,) + acc.shape[1:], dtype=np.int64)
    for k in range(acc.shape[0]):
        full[k % p] += acc[k]
    return full[: p - 1] - full[p - 1]


def _gcd_all(values: np.ndarray, start: int) -> int:
    if values.size == 0:
        return start
    return math.gcd(start, int(np.gcd.reduce(np.abs(values).ravel())))


@dataclass(frozen=True, eq=False)
class Operator:
    """A square matrix over Q(zeta_p): numerators[k] holds the zeta^k coefficients."""

    p: int
    numerators: np.ndarray
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.numerators.ndim != 3 or self.numerators.shape[0] != self.p - 1:
            raise WeilLabError(f"Operator numerators have shape {self.numerators.shape}")
        if self.numerators.shape[1] != self.numerators.shape[2]:
            raise WeilLabError("Operator must be square")
        if self.denominator == 0:
            raise ZeroDivisionError("Operator denominator is zero")

    @classmethod
    def build(cls, p: int, numerators: np.ndarray, denominator: int = 1) -> "Operator":
        """Normalised operator: positive denominator coprime to the numerators."""
        numerators = np.asarray(numerators, dtype=np.int64)
        if denominator < 0:
            numerators, denominator = -numerators, -denominator
        divisor = _gcd_all(numerators, denominator)
        if divisor > 1:
            numerators = numerators // divisor
            denominator //= divisor
        return cls(p, numerators, denominator)

    @classmethod
    def from_terms(
        cls, p: int, dim: int, terms: Iterable[Tuple[int, int, int, int]]
    ) -> "Operator":
        """Sum of coefficient * zeta^exponent placed at (row, col)."""
        acc = np.zeros((p, dim, dim), dtype=np.int64)
        for row, col, exponent, coefficient in terms:
            acc[exponent % p, row, col] += coefficient
        return cls.build(p, _reduce_powers(acc, p))

    @classmethod
    def identity(cls, p: int, dim: int) -> "Operator":
        numerators = np.zeros((p - 1, dim, dim), dtype=np.int64)
        numerators[0] = np.eye(dim, dtype=np.int64)
        return cls(p, numerators, 1)

    @property
    def dim(self) -> int:
        return int(self.numerators.shape[1])

    def __matmul__(self, other: "Operator") -> "Operator":
        if other.p != self.p or other.dim != self.dim:
            raise WeilLabError("Operator size or field mismatch")
        m = self.p - 1
        products = np.matmul(self.numerators[:, None], other.numerators[None, :])
        acc = np.zeros((2 * m - 1, self.dim, self.dim), dtype=np.int64)
        for i in range(m):
            acc[i : i + m] += products[i]
        return Operator.build(
            self.p, _reduce_powers(acc, self.p), self.denominator * other.denominator
        )

    def scale(self, scalar: CycQ) -> "Operator":
        """Multiply every entry by a field element."""
        if scalar.p != self.p:
            raise WeilLabError("Scalar field mismatch")
        common = reduce(math.lcm, (a.denominator for a in scalar.coeffs), 1)
        ints = [int(a * common) for a in scalar.coeffs]
        m = self.p - 1
        acc = np.zeros((2 * m - 1, self.dim, self.dim), dtype=np.int64)
        for i, c in enumerate(ints):
            if c:
                acc[i : i + m] += c * self.numerators
        return Operator.build(
            self.p, _reduce_powers(acc, self.p), self.denominator * common
        )

    def conjugate_by(self, rows: np.ndarray, cols: np.ndarray) -> "Operator":
        """Integer change of basis rows @ self @ cols applied to every power."""
        numerators = np.stack([rows @ self.numerators[k] @ cols for k in range(self.p - 1)])
        return Operator.build(self.p, numerators, self.denominator)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Operator):
            return NotImplemented
        return (
            self.p == other.p
            and self.denominator == other.denominator
            and np.array_equal(self.numerators, other.numerators)
        )

    __hash__ = None  # type: ignore[assignment]

    def entry(self, row: int, col: int) -> CycQ:
        return CycQ(
            self.p,
            tuple(Fraction(int(v), self.denominator) for v in self.numerators[:, row, col]),
        )

    def trace_coeffs(self) -> np.ndarray:
        """Trace in the power basis; traces of finite-order operators are integral."""
        total = np.trace(self.numerators, axis1=1, axis2=2)
        if np.any(total % self.denominator):
            raise WeilLabError("Trace is not an algebraic integer")
        return total // self.denominator

    def trace(self) -> CycQ:
        return CycQ(self.p, tuple(Fraction(int(v)) for v in self.trace_coeffs()))

    def is_identity(self) -> bool:
        return self == Operator.identity(self.p, self.dim)

    def to_complex(self) -> np.ndarray:
        powers = np.exp(2j * np.pi * np.arange(self.p - 1) / self.p)
        return np.tensordot(powers, self.numerators.astype(float), axes=1) / self.denominator

    def ratio_to(self, other: "Operator") -> CycQ | None:
        """The scalar c with self = c * other, if there is one."""
        nonzero = np.argwhere(np.any(other.numerators != 0, axis=0))
        if nonzero.size == 0:
            return None
        row, col = (int(v) for v in nonzero[0])
        c = self.entry(row, col) / other.entry(row, col)
        return c if other.scale(c) == self else None


# Characters as integer arrays: one row of power-basis coefficients per group element


def cyclotomic_multiply(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Row-wise product of two arrays of integral field elements, shape (N, p-1)."""
    m = p - 1
    acc = np.zeros((2 * m - 1,) + a.shape[:-1], dtype=np.int64)
    for i in range(m):
        for j in range(m):
            acc[i + j] += a[..., i] * b[..., j]
    return np.moveaxis(_reduce_powers(acc, p), 0, -1)


def cyclotomic_galois(a: np.ndarray, p: int, k: int) -> np.ndarray:
    """Apply zeta -> zeta^k row-wise to an array of shape (N, p-1)."""
    full = np.zeros((p,) + a.shape[:-1], dtype=np.int64)
    for j in range(p - 1):
        full[(j * k) % p] += a[..., j]
    return np.moveaxis(full[: p - 1] - full[p - 1], 0, -1)


def cyclotomic_to_complex(a: np.ndarray, p: int) -> np.ndarray:
    powers = np.exp(2j * np.pi * np.arange(p - 1) / p)
    return a.astype(float) @ powers
