from collections import deque
from typing import List, Optional, Sequence

from weil_matrix_lab.weil_matrix_lab_types import (
    DEFAULT_GROUP_CAP,
    FiniteSpElement,
    GroupAtlas,
    WeilLabError,
)


def enumerate_group(
    gens: Sequence[FiniteSpElement],
    cap: int = DEFAULT_GROUP_CAP,
    expected_order: Optional[int] = None,
) -> GroupAtlas:
    """Breadth-first search of the right Cayley graph starting at the identity.

    Elements are numbered in discovery order, so each element's word extends the word of an
    element with a smaller index.
    """
    if not gens:
        raise WeilLabError("At least one generator is needed")
    n, p = gens[0].n, gens[0].p
    for s, gen in enumerate(gens):
        if (gen.n, gen.p) != (n, p):
            raise WeilLabError(f"Generator {s} lives in a different group")
        if not gen.is_symplectic():
            raise WeilLabError(f"Generator {s} does not preserve the symplectic form")

    identity = FiniteSpElement.identity(n, p)
    atlas = GroupAtlas(n=n, p=p, gens=list(gens))
    atlas.elements.append(identity)
    atlas.words.append(())
    atlas.index[identity] = 0

    queue = deque([0])
    rows: List[List[int]] = [[]]
    while queue:
        i = queue.popleft()
        current = atlas.elements[i]
        for s, gen in enumerate(gens):
            neighbour = current @ gen
            j = atlas.index.get(neighbour)
            if j is None:
                j = len(atlas.elements)
                if j >= cap:
                    raise WeilLabError(f"Group has more than {cap} elements; raise the cap")
                atlas.elements.append(neighbour)
                atlas.words.append(atlas.words[i] + (s,))
                atlas.index[neighbour] = j
                rows.append([])
                queue.append(j)
            rows[i].append(j)

    atlas.table = [tuple(row) for row in rows]
    if expected_order is not None and atlas.order != expected_order:
        raise WeilLabError(f"Enumerated {atlas.order} elements, expected {expected_order}")
    return atlas
