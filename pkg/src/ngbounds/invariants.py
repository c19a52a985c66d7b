"""Domination and packing predicates with exact optimal-value solvers.

Every minimisation parameter is a ``(k, k', k'')``-domination number and every
maximisation parameter is a (closed or open) limited packing number, so two
search routines cover the whole catalogue.  Both walk vertices from the highest
index down and try "exclude" before "include"; at a fixed cardinality the first
feasible set found is therefore the one with the smallest mask value, which is
also what the unpruned :func:`oracle_param` returns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .graph import Graph, GraphError, members


@dataclass(frozen=True)
class ParamResult:
    """Optimal value plus witness mask; ``value is None`` means infeasible."""

    value: int | None
    witness: int | None = None
    graph: Graph | None = field(default=None, compare=False, repr=False)

    @property
    def feasible(self) -> bool:
        return self.value is not None

    @property
    def vertices(self) -> list[int]:
        return [] if self.witness is None else members(self.witness)

    def to_json(self):
        return "INFEASIBLE" if self.value is None else self.value


INFEASIBLE = ParamResult(None)


def as_mask(g: Graph, s: int | Iterable[int]) -> int:
    if isinstance(s, int):
        mask = s
    else:
        mask = 0
        for v in s:
            mask |= 1 << v
    if mask < 0 or mask >> g.n:
        raise GraphError(f"vertex set {mask:#x} not contained in 0..{g.n - 1}")
    return mask


# -- predicates --------------------------------------------------------------

def is_kkk_dominating(g: Graph, s, k: int, k1: int, k2: int) -> bool:
    """Inside vertices see >= k of S; outside ones see >= k1 of S and >= k2 outside."""
    s = as_mask(g, s)
    out = g.vertex_mask & ~s
    for v, row in enumerate(g.adj):
        if s >> v & 1:
            if (row & s).bit_count() < k:
                return False
        elif (row & s).bit_count() < k1 or (row & out).bit_count() < k2:
            return False
    return True


def is_dominating(g: Graph, s) -> bool:
    return is_kkk_dominating(g, s, 0, 1, 0)


def is_total_dominating(g: Graph, s) -> bool:
    s = as_mask(g, s)
    return all(row & s for row in g.adj)


def is_k_dominating(g: Graph, s, k: int) -> bool:
    return is_kkk_dominating(g, s, 0, k, 0)


def is_k_limited_packing(g: Graph, b, k: int) -> bool:
    b = as_mask(g, b)
    return all(((row | (1 << v)) & b).bit_count() <= k for v, row in enumerate(g.adj))


def is_k_total_limited_packing(g: Graph, b, k: int) -> bool:
    b = as_mask(g, b)
    return all((row & b).bit_count() <= k for row in g.adj)


def is_packing(g: Graph, b) -> bool:
    return is_k_limited_packing(g, b, 1)


def is_open_packing(g: Graph, b) -> bool:
    return is_k_total_limited_packing(g, b, 1)


def is_k_independent(g: Graph, s, k: int) -> bool:
    """``g[S]`` has maximum degree at most ``k - 1``."""
    s = as_mask(g, s)
    return all((g.adj[v] & s).bit_count() <= k - 1 for v in members(s))


# -- minimisation ------------------------------------------------------------

def _first_kkk_set(g: Graph, size: int, k: int, k1: int, k2: int) -> int | None:
    adj = g.adj
    closed = [row | (1 << v) for v, row in enumerate(adj)]

    def ok(x: int, s: int, o: int, und: int) -> bool:
        row = adj[x]
        if s >> x & 1:
            return (row & (s | und)).bit_count() >= k
        return (row & (s | und)).bit_count() >= k1 and (row & (o | und)).bit_count() >= k2

    def dfs(top: int, s: int, o: int, und: int, need: int):
        if need == 0:
            s_final = s
            return s_final if is_kkk_dominating(g, s_final, k, k1, k2) else None
        if und.bit_count() == need:
            s_final = s | und
            return s_final if is_kkk_dominating(g, s_final, k, k1, k2) else None
        bit = 1 << top
        und2 = und ^ bit
        # exclude top
        o2 = o | bit
        if all(ok(x, s, o2, und2) for x in members(closed[top] & (s | o2))):
            hit = dfs(top - 1, s, o2, und2, need)
            if hit is not None:
                return hit
        # include top
        s2 = s | bit
        if all(ok(x, s2, o, und2) for x in members(closed[top] & (s2 | o))):
            return dfs(top - 1, s2, o, und2, need - 1)
        return None

    return dfs(g.n - 1, 0, 0, g.vertex_mask, size)


def gamma_kkk(g: Graph, k: int, k1: int, k2: int) -> ParamResult:
    """Minimum ``(k, k', k'')``-dominating set, or ``INFEASIBLE``."""
    if min(k, k1, k2) < 0:
        raise ValueError("domination parameters must be nonnegative")
    # A vertex with fewer than min(k, k'+k'') neighbours can be neither in S nor out of it.
    if any(row.bit_count() < min(k, k1 + k2) for row in g.adj):
        return ParamResult(None, None, g)
    for size in range(g.n + 1):
        hit = _first_kkk_set(g, size, k, k1, k2)
        if hit is not None:
            return ParamResult(size, hit, g)
    return ParamResult(None, None, g)


def gamma(g: Graph) -> ParamResult:
    return gamma_kkk(g, 0, 1, 0)


def gamma_t(g: Graph) -> ParamResult:
    # Total domination: every vertex, in S or not, has a neighbour in S.
    return gamma_kkk(g, 1, 1, 0)


def gamma_k(g: Graph, k: int) -> ParamResult:
    return gamma_kkk(g, 0, k, 0)


def double_domination(g: Graph) -> ParamResult:
    return gamma_kkk(g, 1, 2, 0)


def k_tuple_domination(g: Graph, k: int) -> ParamResult:
    if k < 1:
        raise ValueError("k-tuple domination needs k >= 1")
    return gamma_kkk(g, k - 1, k, 0)


def restrained_domination(g: Graph) -> ParamResult:
    return gamma_kkk(g, 0, 1, 1)


def restrained_double_domination(g: Graph) -> ParamResult:
    return gamma_kkk(g, 1, 2, 1)


# -- maximisation ------------------------------------------------------------

def _first_packing(g: Graph, size: int, k: int, use_closed: bool) -> int | None:
    nbhd = [row | (1 << v) for v, row in enumerate(g.adj)] if use_closed else list(g.adj)
    # x is constrained by t's membership iff t is in x's neighbourhood.
    watchers = [0] * g.n
    for x, m in enumerate(nbhd):
        for t in members(m):
            watchers[t] |= 1 << x

    def dfs(top: int, s: int, und: int, need: int):
        if need == 0:
            return s
        if und.bit_count() < need:
            return None
        bit = 1 << top
        und2 = und ^ bit
        hit = dfs(top - 1, s, und2, need)
        if hit is not None:
            return hit
        s2 = s | bit
        if all((nbhd[x] & s2).bit_count() <= k for x in members(watchers[top])):
            return dfs(top - 1, s2, und2, need - 1)
        return None

    return dfs(g.n - 1, 0, g.vertex_mask, size)


def _max_packing(g: Graph, k: int, use_closed: bool) -> ParamResult:
    if k < 0:
        raise ValueError("packing bound must be nonnegative")
    for size in range(g.n, -1, -1):
        hit = _first_packing(g, size, k, use_closed)
        if hit is not None:
            return ParamResult(size, hit, g)
    raise AssertionError("the empty set is always a packing")


def L_k(g: Graph, k: int) -> ParamResult:
    """Maximum ``k``-limited packing: ``|N[u] & B| <= k`` everywhere."""
    return _max_packing(g, k, True)


def L_kt(g: Graph, k: int) -> ParamResult:
    """Maximum ``k``-total limited packing: ``|N(u) & B| <= k`` everywhere."""
    return _max_packing(g, k, False)


def rho(g: Graph) -> ParamResult:
    return L_k(g, 1)


def rho_o(g: Graph) -> ParamResult:
    return L_kt(g, 1)


# -- brute-force oracle ------------------------------------------------------

PREDICATES: dict[str, Callable[..., bool]] = {
    "dominating": is_dominating,
    "total_dominating": is_total_dominating,
    "k_dominating": is_k_dominating,
    "kkk_dominating": is_kkk_dominating,
    "packing": is_packing,
    "open_packing": is_open_packing,
    "k_limited_packing": is_k_limited_packing,
    "k_total_limited_packing": is_k_total_limited_packing,
}


def oracle_param(g: Graph, predicate: str, direction: str, params: tuple = ()) -> ParamResult:
    """Scan all ``2^n`` masks in increasing order; no pruning at all."""
    test = PREDICATES[predicate]
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    best = None
    best_size = None
    for mask in range(1 << g.n):
        if not test(g, mask, *params):
            continue
        size = mask.bit_count()
        if best is None or (size < best_size if direction == "min" else size > best_size):
            best, best_size = mask, size
    if best is None:
        return ParamResult(None, None, g)
    return ParamResult(best_size, best, g)
