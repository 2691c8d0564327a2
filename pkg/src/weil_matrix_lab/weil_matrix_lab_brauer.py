"""
Brauer characters of the symmetric powers of the natural module of SL_2(p), compared with the
ordinary characters of the two halves of the Weil representation on p-regular elements.
"""

import cmath
from functools import lru_cache
from typing import Tuple, Type

import galois

from weil_matrix_lab.weil_matrix_lab_cyclotomic import cyclotomic_to_complex
from weil_matrix_lab.weil_matrix_lab_types import (
    BRAUER_TOLERANCE,
    DEFAULT_GROUP_CAP,
    BrauerReport,
    BrauerRow,
    FiniteSpElement,
    UnsupportedSizeError,
    WeilLabError,
)
from weil_matrix_lab.weil_matrix_lab_utils import build_weil_rep, parity_split

BRAUER_PRIMES = (3, 5, 7)


@lru_cache(maxsize=None)
def extension_field(p: int) -> Type[galois.FieldArray]:
    """The field with p^2 elements; its prime subfield holds the integers 0..p-1."""
    return galois.GF(p**2)


def multiplicative_generator(p: int) -> galois.FieldArray:
    return extension_field(p).primitive_element


def discrete_log(value: galois.FieldArray) -> int:
    """Exponent of a nonzero value with respect to the field's primitive element."""
    if value == 0:
        raise ZeroDivisionError("Zero has no discrete logarithm")
    return int(value.log())


def eigenvalues_mod_p(element: FiniteSpElement) -> Tuple[galois.FieldArray, galois.FieldArray]:
    """Roots of t^2 - trace t + 1 in the field with p^2 elements."""
    if element.n != 1:
        raise WeilLabError(f"Eigenvalues are taken for SL_2 elements, got n={element.n}")
    p = element.p
    trace = int(element.matrix.trace()) % p
    charpoly = galois.Poly([1, (-trace) % p, 1], field=extension_field(p))
    roots = charpoly.roots()
    if len(roots) == 0:
        raise ValueError(f"Characteristic polynomial of {element.matrix.tolist()} has no root")
    first = roots[0]
    return first, first**-1


def lifted_eigenvalue(element: FiniteSpElement) -> complex:
    """Complex root of unity lifting the first eigenvalue through the primitive element."""
    first, _ = eigenvalues_mod_p(element)
    return cmath.exp(2j * cmath.pi * discrete_log(first) / (element.p**2 - 1))


def symmetric_power_trace(lifted: complex, k: int) -> complex:
    """Sum of lambda^(k-2j), j = 0..k."""
    return complex(sum(lifted ** (k - 2 * j) for j in range(k + 1)))


def brauer_symmetric_power(element: FiniteSpElement, k: int) -> complex:
    return symmetric_power_trace(lifted_eigenvalue(element), k)


def brauer_compare_sl2(
    p: int, cap: int = DEFAULT_GROUP_CAP, tolerance: float = BRAUER_TOLERANCE
) -> BrauerReport:
    """Odd piece against Sym^((p-3)/2), even piece against Sym^((p-1)/2), on p-regular elements."""
    if p not in BRAUER_PRIMES:
        raise UnsupportedSizeError(f"Brauer comparison runs for p in {BRAUER_PRIMES}, got {p}")
    split = parity_split(build_weil_rep(1, p, cap))
    odd, even = split.characters()
    ordinary = {1: cyclotomic_to_complex(odd, p), 2: cyclotomic_to_complex(even, p)}
    powers = {1: (p - 3) // 2, 2: (p - 1) // 2}

    report = BrauerReport(
        p=p,
        dims=split.dims,
        regular_elements=0,
        max_difference=0.0,
        tolerance=tolerance,
    )
    for i, element in enumerate(split.rep.atlas.elements):
        order = element.order()
        if order % p == 0:
            continue
        report.regular_elements += 1
        lifted = lifted_eigenvalue(element)
        for piece in (1, 2):
            row = BrauerRow(
                element=element,
                order=order,
                piece=piece,
                ordinary=complex(ordinary[piece][i]),
                brauer=symmetric_power_trace(lifted, powers[piece]),
            )
            report.max_difference = max(report.max_difference, row.difference)
            if row.difference >= tolerance:
                report.mismatches.append(row)
    return report
