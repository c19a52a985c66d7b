"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bit rows.

Vertex sets are plain ``int`` bit masks throughout the package: bit ``v`` is
set iff vertex ``v`` belongs to the set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64

INFINITE = float("inf")


class GraphError(ValueError):
    """Raised for invalid graph construction input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside [1, {MAX_ORDER}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                w = low.bit_length() - 1
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
                r ^= low

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def closed(self, v: int) -> int:
        """Closed neighborhood ``N[v]`` as a mask."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def induced(self, mask: int) -> Graph:
        """Induced subgraph on ``mask``, relabelled to ``0..|mask|-1`` in index order."""
        verts = members(mask)
        if not verts:
            raise GraphError("induced subgraph on the empty set")
        pos = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            rows.append(sum(1 << pos[w] for w in members(self.adj[v] & mask)))
        return Graph(len(verts), tuple(rows))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph whose vertex ``i`` is vertex ``perm[i]`` of this graph."""
        inv = [0] * self.n
        for i, v in enumerate(perm):
            inv[v] = i
        rows = [0] * self.n
        for i, v in enumerate(perm):
            r = 0
            for w in members(self.adj[v]):
                r |= 1 << inv[w]
            rows[i] = r
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def members(mask: int) -> list[int]:
    """Vertices of a mask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside [1, {MAX_ORDER}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g + h``; the vertices of ``h`` are shifted up by ``g.n``."""
    if g.n + h.n > MAX_ORDER:
        raise GraphError(f"combined order {g.n + h.n} exceeds {MAX_ORDER}")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    return max(g.degrees())


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as masks, ordered by lowest vertex."""
    remaining = g.vertex_mask if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= g.adj[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph, within: int | None = None) -> bool:
    return len(components(g, within)) <= 1


def eccentricity(g: Graph, v: int) -> float:
    seen = 1 << v
    frontier = 1 << v
    dist = 0
    while True:
        nxt = 0
        for w in members(frontier):
            nxt |= g.adj[w]
        nxt &= ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
        dist += 1
    return dist if seen == g.vertex_mask else INFINITE


def diameter(g: Graph) -> float:
    """Largest BFS eccentricity; ``INFINITE`` when ``g`` is disconnected."""
    return max(eccentricity(g, v) for v in range(g.n))


def is_complete(g: Graph) -> bool:
    return all(row.bit_count() == g.n - 1 for row in g.adj)


def minimum_vertex_cut(g: Graph) -> int | None:
    """First minimum vertex cut, scanning sizes upward and masks by value.

    Returns ``None`` for complete graphs, which have no vertex cut, and ``0``
    (the empty cut) for disconnected graphs.
    """
    if is_complete(g):
        return None
    full = g.vertex_mask
    for size in range(g.n - 1):
        for cut in iter_masks_of_size(g.n, size):
            if not is_connected(g, full & ~cut):
                return cut
    raise AssertionError("non-complete graph without a vertex cut")


def vertex_connectivity(g: Graph) -> int:
    cut = minimum_vertex_cut(g)
    return g.n - 1 if cut is None else cut.bit_count()


def is_clique(g: Graph, mask: int) -> bool:
    return all((g.adj[v] | (1 << v)) & mask == mask for v in members(mask))


def _clique_number(g: Graph, cand: int, size: int, best: int) -> int:
    if not cand:
        return max(best, size)
    if size + cand.bit_count() <= best:
        return best
    while cand:
        if size + cand.bit_count() <= best:
            break
        low = cand & -cand
        v = low.bit_length() - 1
        best = _clique_number(g, cand & g.adj[v], size + 1, best)
        cand ^= low
    return best


def _first_clique_of_size(g: Graph, cand: int, need: int, chosen: int) -> int | None:
    # High vertices are decided first, "exclude" before "include", so the first
    # hit is the numerically smallest mask.
    if need == 0:
        return chosen
    if cand.bit_count() < need:
        return None
    top = cand.bit_length() - 1
    rest = cand & ~(1 << top)
    hit = _first_clique_of_size(g, rest, need, chosen)
    if hit is not None:
        return hit
    return _first_clique_of_size(g, rest & g.adj[top], need - 1, chosen | (1 << top))


def max_clique(g: Graph, within: int | None = None) -> int:
    """Maximum clique of ``g[within]``; ties go to the smallest mask value."""
    cand = g.vertex_mask if within is None else within
    if not cand:
        return 0
    omega = _clique_number(g, cand, 0, 0)
    hit = _first_clique_of_size(g, cand, omega, 0)
    assert hit is not None
    return hit


def max_independent_set(g: Graph, within: int | None = None) -> int:
    return max_clique(complement(g), within)


def iter_masks_of_size(n: int, k: int) -> Iterator[int]:
    """All ``k``-subsets of ``0..n-1`` in increasing mask value (Gosper's hack)."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    m = (1 << k) - 1
    limit = 1 << n
    while m < limit:
        yield m
        low = m & -m
        ripple = m + low
        m = (((ripple ^ m) >> 2) // low) | ripple


def first_clique_of_size(g: Graph, size: int, within: int | None = None) -> int | None:
    """Smallest-valued clique mask of exactly ``size`` vertices inside ``within``."""
    cand = g.vertex_mask if within is None else within
    return _first_clique_of_size(g, cand, size, 0)
