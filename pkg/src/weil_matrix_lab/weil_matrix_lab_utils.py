import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy import QQ, ZZ
from sympy.ntheory import legendre_symbol, primitive_root
from sympy.polys.matrices import DomainMatrix

from weil_matrix_lab.weil_matrix_lab_cyclotomic import (
    CycQ,
    Operator,
    cyclotomic_galois,
    cyclotomic_multiply,
    gauss_sum,
)
from weil_matrix_lab.weil_matrix_lab_group import enumerate_group
from weil_matrix_lab.weil_matrix_lab_types import (
    DEFAULT_GROUP_CAP,
    DEFAULT_SEED,
    EIGENVALUE_SEPARATION,
    SUPPORTED_SIZES,
    CheckReport,
    CocycleObstruction,
    FiniteSpElement,
    GroupAtlas,
    UnsupportedSizeError,
    WeilCheckReport,
    WeilLabError,
    prime_field,
    sp_order,
)

Vector = Tuple[int, ...]
Generator = Tuple[FiniteSpElement, Operator]


def require_supported(
    n: int, p: int, supported: Sequence[Tuple[int, int]] = tuple(SUPPORTED_SIZES)
) -> None:
    if p < 3 or not sympy.isprime(p):
        raise UnsupportedSizeError(f"p must be an odd prime, got {p}")
    if (n, p) not in supported:
        sizes = ", ".join(f"({a},{b})" for a, b in supported)
        raise UnsupportedSizeError(f"(n, p) = ({n}, {p}) is not among the supported sizes {sizes}")


def function_space(n: int, p: int) -> List[Vector]:
    """Basis of delta functions on F_p^n, in lexicographic order."""
    return list(itertools.product(range(p), repeat=n))


def check_gauss_sum(p: int) -> CheckReport:
    g = gauss_sum(p)
    expected = CycQ.rational(p, legendre_symbol(p - 1, p) * p)
    report = CheckReport(name="gauss_sum", n=0, p=p, passed=True)
    report.details = {"gauss_sum": g, "square": g * g}
    if g * g != expected:
        report.failures.append(f"G^2 = {g * g}, expected {expected}")
    if g.conj() * g != CycQ.rational(p, p):
        report.failures.append("conj(G) * G differs from p")
    report.passed = not report.failures
    return report


# Generators


def _embed_blocks(
    n: int,
    p: int,
    top_left: np.ndarray,
    bottom_right: np.ndarray,
    bottom_left: Optional[np.ndarray] = None,
) -> FiniteSpElement:
    matrix = np.zeros((2 * n, 2 * n), dtype=np.int64)
    matrix[:n, :n] = top_left
    matrix[n:, n:] = bottom_right
    if bottom_left is not None:
        matrix[n:, :n] = bottom_left
    return FiniteSpElement.from_matrix(p, matrix)


def multiplier_generator(n: int, p: int, b: np.ndarray) -> Generator:
    """f(x) -> zeta^(x^T B x / 2) f(x), paired with [[I, 0], [-B, I]]."""
    vectors = function_space(n, p)
    half = pow(2, -1, p)
    terms = []
    for k, x in enumerate(vectors):
        v = np.array(x, dtype=np.int64)
        terms.append((k, k, int(half * (v @ b @ v)) % p, 1))
    identity = np.eye(n, dtype=np.int64)
    element = _embed_blocks(n, p, identity, identity, -b)
    return element, Operator.from_terms(p, len(vectors), terms)


def levi_generator(n: int, p: int, a: np.ndarray) -> Generator:
    """f(x) -> legendre(det A) f(A^-1 x), paired with diag(A, A^-T)."""
    a_field = prime_field(p)(a % p)
    det = int(np.linalg.det(a_field))
    if det == 0:
        raise WeilLabError("Levi matrix is singular mod p")
    inverse = np.linalg.inv(a_field).view(np.ndarray).astype(np.int64)
    vectors = function_space(n, p)
    index = {v: k for k, v in enumerate(vectors)}
    sign = legendre_symbol(det, p)
    terms = []
    for k, y in enumerate(vectors):
        image = tuple(int(c) for c in (a @ np.array(y, dtype=np.int64)) % p)
        terms.append((index[image], k, 0, sign))
    element = _embed_blocks(n, p, a % p, inverse.T % p)
    return element, Operator.from_terms(p, len(vectors), terms)


def fourier_operator(n: int, p: int) -> Operator:
    """Unnormalised transform (F f)(x) = sum over y of zeta^(x.y) f(y)."""
    vectors = function_space(n, p)
    terms = []
    for i, x in enumerate(vectors):
        for j, y in enumerate(vectors):
            terms.append((i, j, sum(a * b for a, b in zip(x, y, strict=True)) % p, 1))
    return Operator.from_terms(p, len(vectors), terms)


def fourier_element(n: int, p: int) -> FiniteSpElement:
    identity = np.eye(n, dtype=np.int64)
    matrix = np.zeros((2 * n, 2 * n), dtype=np.int64)
    matrix[:n, n:] = identity
    matrix[n:, :n] = -identity
    return FiniteSpElement.from_matrix(p, matrix)


def _symmetric_basis(n: int) -> List[np.ndarray]:
    basis = []
    for i in range(n):
        for j in range(i, n):
            b = np.zeros((n, n), dtype=np.int64)
            b[i, j] = 1
            b[j, i] = 1
            basis.append(b)
    return basis


def _levi_basis(n: int, p: int) -> List[np.ndarray]:
    diagonal = np.eye(n, dtype=np.int64)
    diagonal[0, 0] = primitive_root(p)
    basis = [diagonal]
    for i in range(n - 1):
        for row, col in ((i, i + 1), (i + 1, i)):
            elementary = np.eye(n, dtype=np.int64)
            elementary[row, col] = 1
            basis.append(elementary)
    return basis


def oscillator_generators(
    n: int, p: int, fourier_scalar: Optional[CycQ] = None
) -> List[Generator]:
    """Multipliers, Levi elements and the Fourier transform (last), each with its group element.

    The Fourier transform is scaled by G^-n unless another scalar is given.
    """
    if p < 3 or not sympy.isprime(p):
        raise UnsupportedSizeError(f"p must be an odd prime, got {p}")
    generators = [multiplier_generator(n, p, b) for b in _symmetric_basis(n)]
    generators += [levi_generator(n, p, a) for a in _levi_basis(n, p)]
    scalar = fourier_scalar if fourier_scalar is not None else gauss_sum(p) ** (-n)
    generators.append((fourier_element(n, p), fourier_operator(n, p).scale(scalar)))
    return generators


def calibration_candidates(n: int, p: int) -> List[Tuple[str, CycQ]]:
    """Scalars tried on the Fourier generator, in order."""
    base = gauss_sum(p) ** (-n)
    candidates = [("G^-n", base), ("-G^-n", -base)]
    for k in range(1, p):
        twist = CycQ.zeta(p, k)
        candidates.append((f"zeta^{k}*G^-n", twist * base))
        candidates.append((f"-zeta^{k}*G^-n", -(twist * base)))
    return candidates


# The representation


@dataclass
class WeilRep:
    n: int
    p: int
    atlas: GroupAtlas
    generators: List[Generator]
    images: List[Operator]
    calibration: str
    tried: List[str] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return self.p**self.n

    def image(self, element: FiniteSpElement) -> Operator:
        return self.images[self.atlas.index_of(element)]


def extend_along_atlas(atlas: GroupAtlas, operators: Sequence[Operator]) -> List[Operator]:
    """Images of every element along its word, checking every edge of the Cayley graph."""
    if len(operators) != len(atlas.gens):
        raise WeilLabError("One operator per generator is needed")
    dim = operators[0].dim
    p = operators[0].p
    images: List[Optional[Operator]] = [None] * atlas.order
    images[0] = Operator.identity(p, dim)
    for i, row in enumerate(atlas.table):
        current = images[i]
        assert current is not None
        for s, j in enumerate(row):
            product = current @ operators[s]
            existing = images[j]
            if existing is None:
                images[j] = product
            elif existing != product:
                scalar = product.ratio_to(existing)
                raise CocycleObstruction(
                    f"Words {list(atlas.words[j])} and {list(atlas.words[i] + (s,))} "
                    "give different operators",
                    (atlas.words[j], atlas.words[i] + (s,)),
                    str(scalar) if scalar is not None else None,
                )
    return [image for image in images if image is not None]


@lru_cache(maxsize=8)
def _cached_weil_rep(n: int, p: int, cap: int) -> WeilRep:
    base = oscillator_generators(n, p)[:-1]
    fourier = fourier_operator(n, p)
    gens = [element for element, _ in base] + [fourier_element(n, p)]
    atlas = enumerate_group(gens, cap=cap, expected_order=sp_order(n, p))

    tried: List[str] = []
    first_failure: Optional[CocycleObstruction] = None
    for label, scalar in calibration_candidates(n, p):
        generators = base + [(fourier_element(n, p), fourier.scale(scalar))]
        try:
            images = extend_along_atlas(atlas, [op for _, op in generators])
        except CocycleObstruction as e:
            tried.append(label)
            first_failure = first_failure or e
            continue
        return WeilRep(n, p, atlas, generators, images, calibration=label, tried=tried)

    assert first_failure is not None
    raise CocycleObstruction(
        f"No calibration of the Fourier generator linearises the construction "
        f"(tried {', '.join(tried)}): {first_failure}",
        first_failure.words,
        first_failure.scalar,
    )


def cache_info() -> Dict[str, Optional[int]]:
    """Hit and miss counts of the Weil representation cache."""
    return dict(_cached_weil_rep.cache_info()._asdict())


def build_weil_rep(
    n: int,
    p: int,
    cap: int = DEFAULT_GROUP_CAP,
    supported: Sequence[Tuple[int, int]] = tuple(SUPPORTED_SIZES),
) -> WeilRep:
    require_supported(n, p, supported)
    if sp_order(n, p) > cap:
        raise UnsupportedSizeError(f"|Sp_{2 * n}({p})| = {sp_order(n, p)} exceeds the cap {cap}")
    return _cached_weil_rep(n, p, cap)


# Parity split


@dataclass
class ParitySplit:
    """Odd and even functions: the two constituents of the representation."""

    rep: WeilRep
    odd_rows: np.ndarray
    odd_cols: np.ndarray
    even_rows: np.ndarray
    even_cols: np.ndarray
    representatives: np.ndarray
    negatives: np.ndarray
    zero: int
    _characters: Optional[Tuple[np.ndarray, np.ndarray]] = field(default=None, repr=False)

    @property
    def dims(self) -> Tuple[int, int]:
        return int(self.odd_rows.shape[0]), int(self.even_rows.shape[0])

    def odd(self, i: int) -> Operator:
        return self.rep.images[i].conjugate_by(self.odd_rows, self.odd_cols)

    def even(self, i: int) -> Operator:
        return self.rep.images[i].conjugate_by(self.even_rows, self.even_cols)

    def piece(self, piece: int, i: int) -> Operator:
        return self.odd(i) if piece == 1 else self.even(i)

    def characters(self) -> Tuple[np.ndarray, np.ndarray]:
        """Traces of both pieces on every atlas element, shape (order, p - 1)."""
        if self._characters is None:
            stack = np.stack([image.numerators for image in self.rep.images])
            denominators = np.array([image.denominator for image in self.rep.images])
            reps, negs, zero = self.representatives, self.negatives, self.zero
            diagonal = stack[:, :, reps, reps]
            crossed = stack[:, :, reps, negs]
            odd = (diagonal - crossed).sum(axis=-1)
            even = stack[:, :, zero, zero] + (diagonal + crossed).sum(axis=-1)
            if np.any(odd % denominators[:, None]) or np.any(even % denominators[:, None]):
                raise WeilLabError("Character values are not algebraic integers")
            self._characters = (odd // denominators[:, None], even // denominators[:, None])
        return self._characters

    def character(self, piece: int) -> np.ndarray:
        odd, even = self.characters()
        return odd if piece == 1 else even


def parity_split(rep: WeilRep) -> ParitySplit:
    """Split into odd (dimension (p^n-1)/2) and even ((p^n+1)/2) functions.

    Every image must commute with f(x) -> f(-x); a failure means the construction is wrong.
    """
    vectors = function_space(rep.n, rep.p)
    index = {v: k for k, v in enumerate(vectors)}
    negation = np.array([index[tuple((-c) % rep.p for c in v)] for v in vectors])
    half = (rep.p - 1) // 2
    representatives = [
        k for k, v in enumerate(vectors) if any(v) and next(c for c in v if c) <= half
    ]
    zero = index[(0,) * rep.n]

    for i, image in enumerate(rep.images):
        flipped = image.numerators[:, negation][:, :, negation]
        if not np.array_equal(flipped, image.numerators):
            raise WeilLabError(
                f"Image of word {list(rep.atlas.words[i])} does not commute with parity"
            )

    d, r = rep.dim, len(representatives)
    reps = np.array(representatives)
    negs = negation[reps]
    odd_rows = np.zeros((r, d), dtype=np.int64)
    odd_cols = np.zeros((d, r), dtype=np.int64)
    even_rows = np.zeros((r + 1, d), dtype=np.int64)
    even_cols = np.zeros((d, r + 1), dtype=np.int64)
    even_rows[0, zero] = 1
    even_cols[zero, 0] = 1
    for k, (x, minus_x) in enumerate(zip(reps, negs, strict=True)):
        odd_rows[k, x] = 1
        odd_cols[x, k] = 1
        odd_cols[minus_x, k] = -1
        even_rows[k + 1, x] = 1
        even_cols[x, k + 1] = 1
        even_cols[minus_x, k + 1] = 1

    return ParitySplit(
        rep=rep,
        odd_rows=odd_rows,
        odd_cols=odd_cols,
        even_rows=even_rows,
        even_cols=even_cols,
        representatives=reps,
        negatives=negs,
        zero=zero,
    )


# Characters


def character_inner_product(chi: np.ndarray, psi: np.ndarray, p: int) -> Fraction:
    """<chi, psi> = |G|^-1 sum chi(g) conj(psi(g)) over the rows given."""
    if chi.shape != psi.shape:
        raise WeilLabError("Characters must be evaluated on the same elements")
    total = cyclotomic_multiply(chi, cyclotomic_galois(psi, p, p - 1), p).sum(axis=0)
    if np.any(total[1:]):
        raise WeilLabError("Inner product is not rational")
    return Fraction(int(total[0]), chi.shape[0])


def character_values(chi: np.ndarray, p: int) -> List[CycQ]:
    return [CycQ(p, tuple(Fraction(int(v)) for v in row)) for row in chi]


def _sample_pairs(order: int, samples: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, order, size=(samples, 2))


def check_homomorphism(
    rep: WeilRep, samples: int = 1000, seed: int = DEFAULT_SEED
) -> CheckReport:
    report = CheckReport(name="homomorphism", n=rep.n, p=rep.p, passed=True)
    for i, j in _sample_pairs(rep.atlas.order, samples, seed):
        k = rep.atlas.product_index(int(i), int(j))
        if rep.images[k] != rep.images[i] @ rep.images[j]:
            report.failures.append(f"rho(g{i} g{j}) != rho(g{i}) rho(g{j})")
    edges = rep.atlas.order * len(rep.atlas.gens)
    report.details = {"samples": samples, "seed": seed, "edges_checked": edges}
    report.passed = not report.failures
    return report


def check_inverses(rep: WeilRep, samples: int = 100, seed: int = DEFAULT_SEED) -> CheckReport:
    report = CheckReport(name="inverses", n=rep.n, p=rep.p, passed=True)
    for i, _ in _sample_pairs(rep.atlas.order, samples, seed):
        inverse = rep.atlas.inverse_index(int(i))
        if not (rep.images[inverse] @ rep.images[i]).is_identity():
            report.failures.append(f"rho(g{i}^-1) rho(g{i}) is not the identity")
    report.details = {"samples": samples, "seed": seed}
    report.passed = not report.failures
    return report


def check_class_constancy(
    rep: WeilRep, samples: int = 50, seed: int = DEFAULT_SEED
) -> CheckReport:
    """trace rho(h g h^-1) = trace rho(g) on random pairs."""
    report = CheckReport(name="class_constancy", n=rep.n, p=rep.p, passed=True)
    elements = rep.atlas.elements
    for i, j in _sample_pairs(rep.atlas.order, samples, seed):
        g, h = elements[i], elements[j]
        k = rep.atlas.index_of(h @ g @ h.inverse())
        if not np.array_equal(rep.images[k].trace_coeffs(), rep.images[i].trace_coeffs()):
            report.failures.append(f"trace differs between g{i} and its conjugate g{k}")
    report.details = {"samples": samples, "seed": seed}
    report.passed = not report.failures
    return report


def check_character_norms(split: ParitySplit) -> CheckReport:
    """Both pieces are irreducible and orthogonal, and their degrees add up to p^n."""
    rep = split.rep
    odd, even = split.characters()
    norms = {
        "odd": character_inner_product(odd, odd, rep.p),
        "even": character_inner_product(even, even, rep.p),
        "cross": character_inner_product(odd, even, rep.p),
    }
    report = CheckReport(name="character_norms", n=rep.n, p=rep.p, passed=True)
    report.details = {"inner_products": norms, "dims": list(split.dims)}
    if norms["odd"] != 1 or norms["even"] != 1:
        report.failures.append(f"character norms are {norms['odd']} and {norms['even']}")
    if norms["cross"] != 0:
        report.failures.append(f"pieces are not orthogonal: {norms['cross']}")
    degrees = (int(odd[0, 0]), int(even[0, 0]))
    if degrees != split.dims or sum(degrees) != rep.dim:
        report.failures.append(f"degrees {degrees} do not add up to {rep.dim}")
    report.passed = not report.failures
    return report


def _multiplication_matrix(p: int, k: int) -> np.ndarray:
    """Matrix of multiplication by zeta^k on the power basis."""
    columns = [CycQ.zeta(p, k + j).coeffs for j in range(p - 1)]
    return np.array([[int(c) for c in column] for column in columns], dtype=np.int64).T


def check_no_intertwiner(split: ParitySplit) -> CheckReport:
    """Solve T rho_odd(s) = rho_even(s) T over Q for all generators; only T = 0 may remain."""
    rep = split.rep
    d_odd, d_even = split.dims
    m = rep.p - 1
    mult = [_multiplication_matrix(rep.p, k) for k in range(m)]
    eye_odd = np.eye(d_odd, dtype=np.int64)
    eye_even = np.eye(d_even, dtype=np.int64)

    blocks = []
    for element, _ in rep.generators:
        i = rep.atlas.index_of(element)
        a, b = split.odd(i), split.even(i)
        system = np.zeros((d_even * d_odd * m, d_even * d_odd * m), dtype=np.int64)
        for k in range(m):
            left = b.denominator * np.kron(eye_even, a.numerators[k].T)
            right = a.denominator * np.kron(b.numerators[k], eye_odd)
            system += np.kron(left - right, mult[k])
        blocks.append(system)
    stacked = np.vstack(blocks)

    matrix = DomainMatrix(
        [[ZZ(int(v)) for v in row] for row in stacked.tolist()], stacked.shape, ZZ
    )
    rank = matrix.convert_to(QQ).rank()
    unknowns = stacked.shape[1]
    report = CheckReport(name="no_intertwiner", n=rep.n, p=rep.p, passed=rank == unknowns)
    report.details = {"unknowns": unknowns, "rank": rank, "nullity": unknowns - rank}
    if rank != unknowns:
        report.failures.append(f"intertwiner space has dimension {unknowns - rank}")
    return report


def check_galois_stability(split: ParitySplit) -> CheckReport:
    """Character values are fixed by zeta -> zeta^k for every square k mod p."""
    rep = split.rep
    squares = sorted({(t * t) % rep.p for t in range(1, rep.p)})
    report = CheckReport(name="galois_stability", n=rep.n, p=rep.p, passed=True)
    for piece in (1, 2):
        chi = split.character(piece)
        for k in squares:
            if not np.array_equal(cyclotomic_galois(chi, rep.p, k), chi):
                report.failures.append(f"piece {piece} is not fixed by zeta -> zeta^{k}")
    report.details = {"squares": squares}
    report.passed = not report.failures
    return report


# Simple spectrum


def _has_exact_order(element: FiniteSpElement, m: int) -> bool:
    current = element
    for k in range(1, m + 1):
        if current.is_identity():
            return k == m
        current = current @ element
    return False


def _acts_irreducibly(element: FiniteSpElement) -> bool:
    return bool(element.field_matrix.characteristic_poly().is_irreducible())


def find_singer_element(rep: WeilRep) -> int:
    """Index of the first element of order p^n + 1 with irreducible characteristic polynomial."""
    m = rep.p**rep.n + 1
    for i, element in enumerate(rep.atlas.elements):
        if _has_exact_order(element, m) and _acts_irreducibly(element):
            return i
    raise WeilLabError(f"No element of order {m} acting irreducibly was found")


def _min_separation(values: np.ndarray) -> float:
    if len(values) < 2:
        return float("inf")
    gaps = np.abs(values[:, None] - values[None, :])
    gaps[np.diag_indices(len(values))] = np.inf
    return float(gaps.min())


def check_singer_eigenvalues(split: ParitySplit) -> CheckReport:
    """All eigenvalues of both pieces at an element of order p^n + 1 are simple."""
    rep = split.rep
    report = CheckReport(name="simple_spectrum", n=rep.n, p=rep.p, passed=True)
    try:
        i = find_singer_element(rep)
    except WeilLabError as e:
        report.passed = False
        report.failures.append(str(e))
        return report

    element = rep.atlas.elements[i]
    report.details = {
        "element": element.matrix.tolist(),
        "order": rep.p**rep.n + 1,
        "word": list(rep.atlas.words[i]),
    }
    for piece in (1, 2):
        eigenvalues = np.linalg.eigvals(split.piece(piece, i).to_complex())
        separation = _min_separation(eigenvalues)
        report.details[f"piece{piece}_eigenvalues"] = len(eigenvalues)
        report.details[f"piece{piece}_separation"] = separation
        if separation <= EIGENVALUE_SEPARATION:
            report.failures.append(f"piece {piece} has a repeated eigenvalue ({separation:.3g})")
    report.passed = not report.failures
    return report


# Levi restriction by characters


def embed_levi(left: FiniteSpElement, right: FiniteSpElement) -> FiniteSpElement:
    """Sp_2k x Sp_2(n-k) inside Sp_2n: the left factor acts on x_1..x_k and y_1..y_k."""
    k, rest, p = left.n, right.n, left.p
    n = k + rest
    first = list(range(k)) + list(range(n, n + k))
    second = list(range(k, n)) + list(range(n + k, 2 * n))
    matrix = np.zeros((2 * n, 2 * n), dtype=np.int64)
    matrix[np.ix_(first, first)] = left.matrix
    matrix[np.ix_(second, second)] = right.matrix
    return FiniteSpElement.from_matrix(p, matrix)


TENSOR_ORDER = [(1, 1), (2, 2), (1, 2), (2, 1)]
EXPECTED_PATTERN: Dict[int, Tuple[int, ...]] = {2: (1, 1, 0, 0), 1: (0, 0, 1, 1)}


def check_levi_tensor_restriction(
    n: int = 2, p: int = 3, k: int = 1, cap: int = DEFAULT_GROUP_CAP
) -> CheckReport:
    """Decompose both pieces restricted to Sp_2k x Sp_2(n-k) against the four tensor products."""
    if not 1 <= k < n:
        raise WeilLabError(f"Levi split needs 1 <= k < n, got k={k}, n={n}")
    big = parity_split(build_weil_rep(n, p, cap))
    left = parity_split(build_weil_rep(k, p, cap))
    right = parity_split(build_weil_rep(n - k, p, cap))

    left_order, right_order = left.rep.atlas.order, right.rep.atlas.order
    pairs = [(a, b) for a in range(left_order) for b in range(right_order)]
    indices = np.array(
        [
            big.rep.atlas.index_of(
                embed_levi(left.rep.atlas.elements[a], right.rep.atlas.elements[b])
            )
            for a, b in pairs
        ]
    )
    a_idx = np.array([a for a, _ in pairs])
    b_idx = np.array([b for _, b in pairs])

    report = CheckReport(name="levi_restriction", n=n, p=p, passed=True)
    patterns = {}
    for piece in (1, 2):
        restricted = big.character(piece)[indices]
        values = []
        for l_piece, r_piece in TENSOR_ORDER:
            tensor = cyclotomic_multiply(
                left.character(l_piece)[a_idx], right.character(r_piece)[b_idx], p
            )
            values.append(character_inner_product(restricted, tensor, p))
        patterns[piece] = values
        if tuple(values) != EXPECTED_PATTERN[piece]:
            report.failures.append(
                f"piece {piece} decomposes as {[str(v) for v in values]}, "
                f"expected {list(EXPECTED_PATTERN[piece])}"
            )
    report.details = {
        "k": k,
        "subgroup_order": len(pairs),
        "order": ["1x1", "2x2", "1x2", "2x1"],
        "piece1": patterns[1],
        "piece2": patterns[2],
    }
    report.passed = not report.failures
    return report


def run_weil_checks(
    n: int,
    p: int,
    cap: int = DEFAULT_GROUP_CAP,
    seed: int = DEFAULT_SEED,
    samples: int = 1000,
) -> WeilCheckReport:
    """Build the representation for (n, p) and run every check that applies to it."""
    rep = build_weil_rep(n, p, cap)
    split = parity_split(rep)
    report = WeilCheckReport(
        n=n,
        p=p,
        group_order=rep.atlas.order,
        calibration=rep.calibration,
        dims=split.dims,
    )
    report.checks.append(check_gauss_sum(p))
    report.checks.append(check_homomorphism(rep, samples, seed))
    report.checks.append(check_inverses(rep, max(1, samples // 10), seed))
    report.checks.append(check_class_constancy(rep, max(1, samples // 20), seed))
    report.checks.append(check_character_norms(split))
    report.checks.append(check_no_intertwiner(split))
    report.checks.append(check_galois_stability(split))
    report.checks.append(check_singer_eigenvalues(split))
    if n >= 2:
        report.checks.append(check_levi_tensor_restriction(n, p, 1, cap))
    return report
