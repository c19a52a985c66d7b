"""Witness builders for the two domination bounds and extremal-family recognisers.

The builders run the constructive arguments step by step with every free
choice pinned to the lowest index, then check the resulting set against the
target predicate instead of trusting the argument.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .graph import (
    Graph,
    complement,
    components,
    empty_graph,
    first_clique_of_size,
    from_edge_list,
    max_clique,
    max_degree,
    members,
    min_degree,
    minimum_vertex_cut,
    path_graph,
    cycle_graph,
    complete_graph,
)
from .invariants import gamma, is_k_dominating, is_kkk_dominating, rho, rho_o
from .iso import is_isomorphic


class HypothesisNotMet(ValueError):
    """The graph does not satisfy the theorem's hypothesis."""


class ProofViolation(RuntimeError):
    """A construction produced a set that fails its predicate or size bound."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


@dataclass(frozen=True)
class WitnessCertificate:
    theorem: str
    k: int
    j: int | None
    u: int
    v0: int | None
    cut_A: int | None
    X0_prime: int
    anchors: tuple[int, ...]
    result_set: int
    claimed_bound: int
    gamma_g: int
    gamma_complement: int
    W0: int | None = None
    X0: int | None = None
    v0_attempts: int = 1
    predicate: str = ""

    @property
    def size(self) -> int:
        return self.result_set.bit_count()

    def to_json(self) -> dict:
        def vs(mask):
            return None if mask is None else members(mask)

        return {
            "theorem": self.theorem,
            "k": self.k,
            "j": self.j,
            "u": self.u,
            "v0": self.v0,
            "cut_A": vs(self.cut_A),
            "W0": vs(self.W0),
            "X0": vs(self.X0),
            "X0_prime": vs(self.X0_prime),
            "anchors": list(self.anchors),
            "result_set": vs(self.result_set),
            "size": self.size,
            "claimed_bound": self.claimed_bound,
            "gamma_g": self.gamma_g,
            "gamma_complement": self.gamma_complement,
            "v0_attempts": self.v0_attempts,
            "predicate": self.predicate,
        }


def _gammas(g: Graph) -> tuple[int, int]:
    return gamma(g).value, gamma(complement(g)).value


def _thm21_attempt(g: Graph, co: Graph, u: int, v0: int, k: int, j: int,
                   gg: int, gc: int) -> tuple[WitnessCertificate | None, str]:
    w0 = g.vertex_mask & ~(co.closed(u) | co.closed(v0))
    x0 = max_clique(g, within=w0)
    need = gc - 2
    if x0.bit_count() < need:
        return None, f"max clique in W0 has {x0.bit_count()} < {need} vertices"
    x0p_list = members(x0)[:need]
    x0p = sum(1 << x for x in x0p_list)
    anchors = tuple(x0p_list[:k])
    dropped = x0p & ~sum(1 << x for x in anchors)
    d = g.adj[u] & ~dropped
    bound = min_degree(g) - gc + k + 2
    cert = WitnessCertificate(
        theorem="2.1", k=k, j=j, u=u, v0=v0, cut_A=None, X0_prime=x0p,
        anchors=anchors, result_set=d, claimed_bound=bound, gamma_g=gg,
        gamma_complement=gc, W0=w0, X0=x0,
        predicate=f"({k - 1},{k},{j})-dominating",
    )
    if not is_kkk_dominating(g, d, k - 1, k, j):
        return None, f"D={members(d)} is not ({k - 1},{k},{j})-dominating"
    if d.bit_count() > bound:
        return None, f"|D|={d.bit_count()} exceeds bound {bound}"
    return cert, ""


def thm21_witness(g: Graph, k: int = 1, j: int = 0, v0: int | None = None) -> WitnessCertificate:
    """Build a small ``(k-1, k, j)``-dominating set from a minimum-degree vertex.

    ``u`` is the lowest-index minimum-degree vertex.  Without an explicit
    ``v0`` every other vertex is tried in index order and the first one whose
    set validates is kept; :class:`ProofViolation` means none did.
    """
    if k < 1 or j < 0:
        raise ValueError("need k >= 1 and j >= 0")
    gg, gc = _gammas(g)
    need = k + j + 2
    if gg < need or gc < need:
        raise HypothesisNotMet(f"gamma(G)={gg}, gamma(co-G)={gc}; both must be >= {need}")
    co = complement(g)
    delta = min_degree(g)
    u = next(v for v in range(g.n) if g.degree(v) == delta)
    if v0 is not None and (v0 == u or not 0 <= v0 < g.n):
        raise ValueError(f"v0 must be a vertex other than u={u}")
    candidates = [v0] if v0 is not None else [v for v in range(g.n) if v != u]
    failures = []
    for attempt, cand in enumerate(candidates, start=1):
        cert, why = _thm21_attempt(g, co, u, cand, k, j, gg, gc)
        if cert is not None:
            if attempt > 1:
                cert = replace(cert, v0_attempts=attempt)
            return cert
        failures.append({"v0": cand, "reason": why})
    raise ProofViolation("no choice of v0 produced a valid set", {"u": u, "failures": failures})


def thm22_witness(g: Graph, k: int = 1) -> WitnessCertificate:
    """Build a small ``k``-dominating set inside a minimum vertex cut."""
    if k < 1:
        raise ValueError("need k >= 1")
    gg, gc = _gammas(g)
    if gg < k + 2 or gc < k + 2:
        raise HypothesisNotMet(f"gamma(G)={gg}, gamma(co-G)={gc}; both must be >= {k + 2}")
    cut = minimum_vertex_cut(g)
    if cut is None:
        raise HypothesisNotMet("complete graph has no vertex cut")
    comps = components(g, g.vertex_mask & ~cut)
    u = (comps[0] & -comps[0]).bit_length() - 1
    v = min((c & -c).bit_length() - 1 for c in comps[1:])
    need = gc - 2
    pool = cut & g.adj[u] & g.adj[v]
    x = first_clique_of_size(g, need, within=pool)
    if x is None:
        raise ProofViolation(
            f"no clique of size {need} among common neighbours of {u} and {v} in the cut",
            {"u": u, "v": v, "cut": members(cut)},
        )
    anchors = tuple(members(x)[:k])
    s = cut & ~(x & ~sum(1 << a for a in anchors))
    kappa = cut.bit_count()
    bound = kappa - gc + k + 2
    cert = WitnessCertificate(
        theorem="2.2", k=k, j=None, u=u, v0=v, cut_A=cut, X0_prime=x,
        anchors=anchors, result_set=s, claimed_bound=bound, gamma_g=gg,
        gamma_complement=gc, predicate=f"{k}-dominating",
    )
    if not is_k_dominating(g, s, k):
        raise ProofViolation(f"S={members(s)} is not {k}-dominating", cert.to_json())
    if s.bit_count() > bound:
        raise ProofViolation(f"|S|={s.bit_count()} exceeds bound {bound}", cert.to_json())
    return cert


# -- extremal families -------------------------------------------------------

@dataclass(frozen=True)
class FamilyVerdict:
    member: bool
    witness_pair: tuple[int, int] | None = None
    decomposition: tuple[int, int, int] | None = None  # (H mask, r, s)

    def __bool__(self):
        return self.member


def in_gamma_family(g: Graph, repaired: bool = False) -> FamilyVerdict:
    """Search all (max-degree ``u``, neighbour ``v``) pairs for the three conditions.

    With ``repaired=True`` condition (i) is strengthened so that no vertex of
    ``N[v]`` has a neighbour outside ``N[u]``; that is exactly what makes
    ``{v} | (V - N[u])`` a packing.
    """
    big = max_degree(g)
    if big == 0:
        raise ValueError("family defined only for graphs with at least one edge")
    for u in range(g.n):
        if g.degree(u) != big:
            continue
        nu = g.closed(u)
        rest = g.vertex_mask & ~nu
        if any(g.adj[w] & rest for w in members(rest)):
            continue
        for v in members(g.adj[u]):
            nv = g.closed(v)
            if nv & ~nu:
                continue
            if repaired and any(g.adj[x] & rest for x in members(nv)):
                continue
            if all((g.adj[x] & rest).bit_count() <= 1 for x in members(nu & ~nv)):
                return FamilyVerdict(True, witness_pair=(u, v))
    return FamilyVerdict(False)


def in_pi_family(g: Graph) -> FamilyVerdict:
    return FamilyVerdict(max_degree(g) == g.n - 1 and min_degree(g) == 1)


def is_pi_plus_matching_decomposition(g: Graph) -> FamilyVerdict:
    """``g`` is ``H + rK2 + sK1`` for one component ``H`` in the Pi family."""
    comps = components(g)
    singles = [c for c in comps if c.bit_count() == 1]
    pairs = [c for c in comps if c.bit_count() == 2]
    large = [c for c in comps if c.bit_count() > 2]
    if len(large) > 1:
        return FamilyVerdict(False)
    if large:
        h = large[0]
        if not in_pi_family(g.induced(h)):
            return FamilyVerdict(False)
        return FamilyVerdict(True, decomposition=(h, len(pairs), len(singles)))
    if pairs:
        return FamilyVerdict(True, decomposition=(pairs[0], len(pairs) - 1, len(singles)))
    return FamilyVerdict(False)


def is_pi_plus_isolate(g: Graph) -> bool:
    """``g`` is ``H' + K1`` with ``H'`` in the Pi family."""
    comps = components(g)
    if len(comps) != 2:
        return False
    small, large = sorted(comps, key=lambda c: c.bit_count())
    return small.bit_count() == 1 and bool(in_pi_family(g.induced(large)))


def is_pi_isolate_pair(g: Graph) -> bool:
    """``{g, co-g} = {H, H' + K1}`` with ``H, H'`` in the Pi family."""
    co = complement(g)
    return (bool(in_pi_family(g)) and is_pi_plus_isolate(co)) or (
        bool(in_pi_family(co)) and is_pi_plus_isolate(g)
    )


def is_matching_graph(g: Graph) -> bool:
    """Disjoint copies of ``K2``."""
    return all(row.bit_count() == 1 for row in g.adj)


def rho_extremal(g: Graph) -> bool:
    return rho(g).value == g.n - max_degree(g)


def rho_o_extremal(g: Graph) -> bool:
    return rho_o(g).value == g.n - max_degree(g) + 1


def _named_pairs():
    two_k2 = from_edge_list(4, [(0, 1), (2, 3)])
    k2_k1 = from_edge_list(3, [(0, 1)])
    return [
        (two_k2, cycle_graph(4)),
        (complete_graph(2), empty_graph(2)),
        (path_graph(3), k2_k1),
    ]


def thm35_extremal_pair(g: Graph) -> bool:
    """``{g, co-g}`` is one of ``{2K2, C4}``, ``{K2, 2K1}``, ``{P3, co-P3}``."""
    co = complement(g)
    for a, b in _named_pairs():
        if a.n != g.n:
            continue
        if (is_isomorphic(g, a) and is_isomorphic(co, b)) or (
            is_isomorphic(g, b) and is_isomorphic(co, a)
        ):
            return True
    return False
