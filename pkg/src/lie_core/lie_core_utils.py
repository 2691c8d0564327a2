import math
import re
from collections import deque
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import sympy

from lie_core.lie_core_types import LieCoreError, RootSystemData, SimpleType, Weight

# Bourbaki node numbering: E6 is the chain 1-3-4-5-6 with 2 attached to 4, E7 extends it by 7
_E_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (6, 7)]

_WEYL_GROUP_ORDERS = {("E", 6): 51840, ("E", 7): 2903040, ("F", 4): 1152, ("G", 2): 12}


def _chain_cartan(rank: int) -> List[List[int]]:
    cartan = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        cartan[i][i] = 2
        if i + 1 < rank:
            cartan[i][i + 1] = -1
            cartan[i + 1][i] = -1
    return cartan


def _cartan_and_lengths(simple_type: SimpleType) -> Tuple[List[List[int]], List[Fraction]]:
    family, n = simple_type.family, simple_type.rank
    one, half, third = Fraction(1), Fraction(1, 2), Fraction(1, 3)

    if family == "A":
        return _chain_cartan(n), [one] * n
    if family == "B":
        cartan = _chain_cartan(n)
        cartan[n - 2][n - 1] = -1
        cartan[n - 1][n - 2] = -2
        return cartan, [one] * (n - 1) + [half]
    if family == "C":
        cartan = _chain_cartan(n)
        cartan[n - 2][n - 1] = -2
        cartan[n - 1][n - 2] = -1
        return cartan, [half] * (n - 1) + [one]
    if family == "D":
        cartan = _chain_cartan(n)
        # nodes n-1 and n both hang off node n-2
        cartan[n - 2][n - 1] = 0
        cartan[n - 1][n - 2] = 0
        cartan[n - 3][n - 1] = -1
        cartan[n - 1][n - 3] = -1
        return cartan, [one] * n
    if family == "E":
        cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for a, b in _E_EDGES:
            if a <= n and b <= n:
                cartan[a - 1][b - 1] = -1
                cartan[b - 1][a - 1] = -1
        return cartan, [one] * n
    if family == "F":
        cartan = _chain_cartan(4)
        cartan[1][2] = -1
        cartan[2][1] = -2
        return cartan, [one, one, half, half]
    if family == "G":
        return [[2, -3], [-1, 2]], [third, one]

    raise LieCoreError(f"Unsupported family {family}")


def _positive_roots_alpha(cartan: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Positive roots in simple-root coordinates via root strings, one height at a time."""
    rank = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    ordered = list(simple)

    while layer:
        next_layer = set()
        for beta in layer:
            for i in range(rank):
                # p: how far the alpha_i string extends below beta
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[i][j] for j in range(rank))
                if p - pairing > 0:
                    raised = list(beta)
                    raised[i] += 1
                    candidate = tuple(raised)
                    if candidate not in roots:
                        next_layer.add(candidate)
        fresh = sorted(next_layer)
        roots.update(fresh)
        ordered.extend(fresh)
        layer = fresh

    return ordered


def _to_fraction(value: sympy.Rational) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


@lru_cache(maxsize=None)
def build_root_system(simple_type: SimpleType) -> RootSystemData:
    """Construct the Bourbaki-labelled root system data for a simple type."""
    cartan, lengths = _cartan_and_lengths(simple_type)
    rank = simple_type.rank

    inverse_matrix = sympy.Matrix(cartan).inv()
    cartan_inverse = tuple(
        tuple(_to_fraction(inverse_matrix[i, j]) for j in range(rank)) for i in range(rank)
    )

    simple_roots = tuple(tuple(cartan[i][j] for i in range(rank)) for j in range(rank))

    alpha_roots = _positive_roots_alpha(cartan)
    alpha_roots.sort(key=lambda beta: (sum(beta), beta))
    omega_roots = [
        tuple(sum(cartan[i][j] * beta[j] for j in range(rank)) for i in range(rank))
        for beta in alpha_roots
    ]

    # form on the omega basis: F = D * C^-1, symmetric for a symmetrizable Cartan matrix
    form = tuple(
        tuple(lengths[i] * cartan_inverse[i][j] for j in range(rank)) for i in range(rank)
    )
    for i in range(rank):
        for j in range(rank):
            if form[i][j] != form[j][i]:
                raise LieCoreError(f"Invariant form for {simple_type} is not symmetric")
    scale = reduce(math.lcm, (entry.denominator for row in form for entry in row), 1)
    form_scaled = tuple(tuple(int(entry * scale) for entry in row) for row in form)

    highest_index = max(range(len(alpha_roots)), key=lambda k: sum(alpha_roots[k]))

    return RootSystemData(
        type=simple_type,
        cartan=tuple(tuple(row) for row in cartan),
        cartan_inverse=cartan_inverse,
        simple_roots=simple_roots,
        root_lengths=tuple(lengths),
        positive_roots=tuple(omega_roots),
        positive_roots_alpha=tuple(alpha_roots),
        highest_root=omega_roots[highest_index],
        rho=(1,) * rank,
        form=form,
        form_scaled=form_scaled,
        form_scale=scale,
    )


def cache_info() -> Dict[str, Optional[int]]:
    """Hit and miss counts of the root-system cache."""
    return dict(build_root_system.cache_info()._asdict())


def root_system(family: str, rank: int) -> RootSystemData:
    return build_root_system(SimpleType.parse(family, rank))


def expected_positive_root_count(simple_type: SimpleType) -> int:
    family, n = simple_type.family, simple_type.rank
    if family == "A":
        return n * (n + 1) // 2
    if family in ("B", "C"):
        return n * n
    if family == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("E", 7): 63, ("F", 4): 24, ("G", 2): 6}[(family, n)]


def weyl_group_order(simple_type: SimpleType) -> int:
    family, n = simple_type.family, simple_type.rank
    if family == "A":
        return math.factorial(n + 1)
    if family in ("B", "C"):
        return 2**n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return _WEYL_GROUP_ORDERS[(family, n)]


def _check_weight(rs: RootSystemData, w: Sequence[int]) -> Weight:
    if len(w) != rs.rank:
        raise LieCoreError(f"Weight {tuple(w)} has length {len(w)}, expected rank {rs.rank}")
    return tuple(int(c) for c in w)


def is_dominant(w: Sequence[int]) -> bool:
    return all(c >= 0 for c in w)


def add_weights(v: Sequence[int], w: Sequence[int]) -> Weight:
    return tuple(a + b for a, b in zip(v, w, strict=True))


def subtract_weights(v: Sequence[int], w: Sequence[int]) -> Weight:
    return tuple(a - b for a, b in zip(v, w, strict=True))


def scale_weight(k: int, w: Sequence[int]) -> Weight:
    return tuple(k * c for c in w)


def fundamental_weight(rank: int, i: int) -> Weight:
    if not 1 <= i <= rank:
        raise LieCoreError(f"Fundamental weight index {i} out of range 1..{rank}")
    return tuple(1 if k == i - 1 else 0 for k in range(rank))


def simple_reflection(rs: RootSystemData, i: int, w: Sequence[int]) -> Weight:
    """Apply s_i (1-based index) to a weight in omega coordinates."""
    if not 1 <= i <= rs.rank:
        raise LieCoreError(f"Reflection index {i} out of range 1..{rs.rank}")
    w = _check_weight(rs, w)
    coefficient = w[i - 1]
    if coefficient == 0:
        return w
    column = rs.simple_roots[i - 1]
    return tuple(a - coefficient * c for a, c in zip(w, column))


def weyl_orbit(rs: RootSystemData, w: Sequence[int]) -> FrozenSet[Weight]:
    start = _check_weight(rs, w)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for i in range(1, rs.rank + 1):
            if current[i - 1] == 0:
                continue
            image = simple_reflection(rs, i, current)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


def dominant_representative(rs: RootSystemData, w: Sequence[int]) -> Weight:
    current = list(_check_weight(rs, w))
    while True:
        negative = next((k for k, c in enumerate(current) if c < 0), None)
        if negative is None:
            return tuple(current)
        coefficient = current[negative]
        column = rs.simple_roots[negative]
        for k in range(rs.rank):
            current[k] -= coefficient * column[k]


def alpha_coords(rs: RootSystemData, w: Sequence[int]) -> Tuple[Fraction, ...]:
    """Coordinates of w in the basis of simple roots (rational in general)."""
    w = _check_weight(rs, w)
    return tuple(
        sum((rs.cartan_inverse[i][j] * w[j] for j in range(rs.rank)), Fraction(0))
        for i in range(rs.rank)
    )


def height(rs: RootSystemData, w: Sequence[int]) -> Fraction:
    return sum(alpha_coords(rs, w), Fraction(0))


def is_radical(rs: RootSystemData, w: Sequence[int]) -> bool:
    return all(c.denominator == 1 for c in alpha_coords(rs, w))


def scaled_pair(rs: RootSystemData, v: Sequence[int], w: Sequence[int]) -> int:
    """form_scale * (v, w), kept integral for the hot loops."""
    total = 0
    for i, vi in enumerate(v):
        if vi == 0:
            continue
        row = rs.form_scaled[i]
        for j, wj in enumerate(w):
            if wj:
                total += vi * row[j] * wj
    return total


def pair(rs: RootSystemData, v: Sequence[int], w: Sequence[int]) -> Fraction:
    return Fraction(scaled_pair(rs, v, w), rs.form_scale)


def coroot_pairing(rs: RootSystemData, w: Sequence[int], root: Sequence[int]) -> int:
    """<w, root coroot> = 2 (w, root) / (root, root); integral for weights."""
    value = Fraction(2 * scaled_pair(rs, w, root), scaled_pair(rs, root, root))
    if value.denominator != 1:
        raise LieCoreError(f"Non-integral coroot pairing of {tuple(w)} with {tuple(root)}")
    return int(value)


def a_value(rs: RootSystemData, w: Sequence[int]) -> int:
    """Pairing of w with the coroot of the highest root."""
    return coroot_pairing(rs, _check_weight(rs, w), rs.highest_root)


def is_minuscule(rs: RootSystemData, w: Sequence[int]) -> bool:
    w = _check_weight(rs, w)
    if not is_dominant(w):
        raise LieCoreError(f"is_minuscule expects a dominant weight, got {w}")
    return all(coroot_pairing(rs, w, beta) <= 1 for beta in rs.positive_roots)


def _require_symplectic(rs: RootSystemData) -> None:
    # A1 is read as C1 = Sp2
    if not (rs.family == "C" or (rs.family == "A" and rs.rank == 1)):
        raise LieCoreError(f"Epsilon coordinates are only defined here for type C, not {rs.type}")


def epsilon_coords(rs: RootSystemData, w: Sequence[int]) -> Tuple[int, ...]:
    """Standard coordinates with omega_i = eps_1 + ... + eps_i."""
    _require_symplectic(rs)
    w = _check_weight(rs, w)
    coords = []
    running = 0
    for a in reversed(w):
        running += a
        coords.append(running)
    return tuple(reversed(coords))


def from_epsilon_coords(rs: RootSystemData, c: Sequence[int]) -> Weight:
    _require_symplectic(rs)
    c = _check_weight(rs, c)
    return tuple(c[i] - (c[i + 1] if i + 1 < len(c) else 0) for i in range(len(c)))


_TERM_PATTERN = re.compile(r"^(\d*)\s*\*?\s*(?:ω|w|omega)_?(\d+)$", re.IGNORECASE)


def parse_weight(text: str, rank: int) -> Weight:
    """Parse "1,0,2" or a sum of fundamental weights such as "ω_1+2ω_3" or "0"."""
    text = text.strip()
    if not text:
        raise LieCoreError("Empty weight")

    if "," in text or re.fullmatch(r"-?\d+", text):
        try:
            coords = tuple(int(part) for part in text.split(","))
        except ValueError as e:
            raise LieCoreError(f"Malformed weight vector '{text}'") from e
        if len(coords) != rank:
            if coords == (0,):
                return (0,) * rank
            raise LieCoreError(f"Weight '{text}' has {len(coords)} coordinates, expected {rank}")
        return coords

    coords_list = [0] * rank
    for term in text.replace(" ", "").split("+"):
        match = _TERM_PATTERN.match(term)
        if not match:
            raise LieCoreError(f"Malformed weight term '{term}' in '{text}'")
        multiple = int(match.group(1)) if match.group(1) else 1
        index = int(match.group(2))
        if not 1 <= index <= rank:
            raise LieCoreError(f"Fundamental weight index {index} out of range 1..{rank}")
        coords_list[index - 1] += multiple
    return tuple(coords_list)


def format_weight(w: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in w) + ")"


def weight_label(w: Sequence[int]) -> str:
    """Readable sum of fundamental weights, e.g. 'ω1+2ω3'."""
    terms = [f"{'' if c == 1 else c}ω{i + 1}" for i, c in enumerate(w) if c != 0]
    return "+".join(terms) if terms else "0"
