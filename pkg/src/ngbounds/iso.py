"""Isomorphism testing, canonical forms and small-graph enumeration.

Canonical labelling is an individualise-and-refine search whose only
automorphism pruning is skipping twin vertices, so it is exact but only meant
for the desk-scale orders the corpora use.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, GraphError, members

MAX_ISO_ORDER = 8
MAX_LABELED_ORDER = 7

# Number of unlabelled graphs on n vertices, n = 1..8.
KNOWN_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; cell order depends only on the graph structure."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {v: tuple((g.adj[v] & m).bit_count() for m in masks) for v in cell}
            for key in sorted(set(sig.values())):
                new_cells.append([v for v in cell if sig[v] == key])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _code(g: Graph, order: list[int]) -> int:
    code = 0
    for j in range(1, g.n):
        vj = order[j]
        row = g.adj[vj]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _search(g: Graph, cells: list[list[int]]) -> tuple[int, list[int]]:
    cells = _refine(g, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        order = [c[0] for c in cells]
        return _code(g, order), order
    best: tuple[int, list[int]] | None = None
    cell = cells[target]
    tried: list[int] = []
    for v in cell:
        # Swapping twins is an automorphism fixing the partition: same leaves.
        if any(g.adj[v] & ~(1 << w) == g.adj[w] & ~(1 << v) for w in tried):
            continue
        tried.append(v)
        branch = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]
        cand = _search(g, branch)
        if best is None or cand[0] > best[0]:
            best = cand
    assert best is not None
    return best


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order ``perm`` such that ``g.relabel(perm)`` is the canonical form."""
    return _search(g, [list(range(g.n))])[1]


def canonical_code(g: Graph) -> tuple[int, int]:
    """Isomorphism-invariant key: equal for two graphs iff they are isomorphic."""
    return g.n, _search(g, [list(range(g.n))])[0]


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def brute_force_code(g: Graph) -> tuple[int, int]:
    """Canonical key by maximising over all ``n!`` orders; test oracle only."""
    from itertools import permutations

    return g.n, max(_code(g, list(p)) for p in permutations(range(g.n)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking bijection search with degree pruning."""
    if g.n != h.n:
        return False
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return False
    n = g.n
    order = sorted(range(n), key=lambda v: (-dg[v], v))
    image = [-1] * n
    used = 0

    def extend(idx: int) -> bool:
        nonlocal used
        if idx == n:
            return True
        v = order[idx]
        for w in range(n):
            if used >> w & 1 or dh[w] != dg[v]:
                continue
            ok = True
            for u in order[:idx]:
                if g.has_edge(u, v) != h.has_edge(image[u], w):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used |= 1 << w
            if extend(idx + 1):
                return True
            used &= ~(1 << w)
            image[v] = -1
        return False

    return extend(0)


def _labeled(n: int) -> Iterator[Graph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if code >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


@lru_cache(maxsize=None)
def iso_classes(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class, sorted by canonical code.

    Built by vertex augmentation: every class of order n arises from some class
    of order n-1 by adding a vertex, so extending all representatives of order
    n-1 in every possible way and deduplicating reaches each class.
    """
    if not 1 <= n <= MAX_ISO_ORDER:
        raise GraphError(f"isomorphism-class enumeration supports 1 <= n <= {MAX_ISO_ORDER}")
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[int, Graph] = {}
    for base in iso_classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = list(base.adj) + [nbrs]
            for v in members(nbrs):
                rows[v] |= 1 << (n - 1)
            g = Graph(n, tuple(rows))
            perm = canonical_labeling(g)
            code = _code(g, perm)
            if code not in seen:
                seen[code] = g.relabel(perm)
    return tuple(seen[c] for c in sorted(seen))


def enumerate_graphs(n: int, up_to_iso: bool = True) -> Iterator[Graph]:
    if up_to_iso:
        yield from iso_classes(n)
        return
    if not 1 <= n <= MAX_LABELED_ORDER:
        raise GraphError(f"labeled enumeration supports 1 <= n <= {MAX_LABELED_ORDER}")
    yield from _labeled(n)
