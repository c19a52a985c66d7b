import pytest

from conftest import C4, C5, K1, K13, K2, K2_K1, P3, TWO_K2, iso_corpus, naive_gamma_at_least, paley
from ngbounds import constructions as con
from ngbounds.graph import (
    complement,
    complete_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    is_clique,
    members,
    min_degree,
    star_graph,
    vertex_connectivity,
)
from ngbounds.graph6 import from_graph6
from ngbounds.invariants import is_k_dominating, is_kkk_dominating, rho, rho_o

# Found by `ngverify hunt` with seeds 1 and 7 at n=20.
HUNTED_21 = from_graph6('Sd@wiTxPDh`KWtL{\\Pm]Oe`\\yaFtNiOcG')
HUNTED_22 = from_graph6('S\\qSYzN|PSIRTLwhASlO|L}UwxQmeFaVw')


def _naive_kkk(g, chosen, k, k1, k2):
    """Plain-loop (k, k', k'')-domination check."""
    for v in range(g.n):
        inside = sum(1 for w in chosen if g.has_edge(v, w))
        outside = sum(1 for w in range(g.n) if w not in chosen and g.has_edge(v, w))
        if v in chosen and inside < k:
            return False
        if v not in chosen and (inside < k1 or outside < k2):
            return False
    return True


# -- hypothesis rejection -----------------------------------------------------

@pytest.mark.parametrize("g", [C4, K1, complete_graph(5), C5, TWO_K2])
def test_thm21_rejects_small_gamma(g):
    with pytest.raises(con.HypothesisNotMet):
        con.thm21_witness(g, 1, 0)


@pytest.mark.parametrize("g", [C4, K1, complete_graph(5), P3])
def test_thm22_rejects_small_gamma(g):
    with pytest.raises(con.HypothesisNotMet):
        con.thm22_witness(g, 1)


def test_paley13_rejects_larger_k():
    g = paley(13)
    with pytest.raises(con.HypothesisNotMet):
        con.thm21_witness(g, 2, 0)
    with pytest.raises(con.HypothesisNotMet):
        con.thm22_witness(g, 2)


def test_builders_reject_bad_arguments():
    with pytest.raises(ValueError):
        con.thm21_witness(C4, 0, 0)
    with pytest.raises(ValueError):
        con.thm22_witness(C4, 0)


def test_no_hypothesis_graph_up_to_order_seven():
    for g in iso_corpus(7):
        co = complement(g)
        assert not (naive_gamma_at_least(g, 3) and naive_gamma_at_least(co, 3))


# -- minimum-degree witnesses ---------------------------------------------------

def _check21(g, cert, k, j):
    gc = cert.gamma_complement
    assert cert.size == min_degree(g) - gc + k + 2 == cert.claimed_bound
    assert _naive_kkk(g, set(members(cert.result_set)), k - 1, k, j)
    assert is_clique(g, cert.X0_prime) and cert.X0_prime.bit_count() == gc - 2
    assert cert.X0_prime & ~cert.X0 == 0 and cert.X0 & ~cert.W0 == 0
    assert cert.result_set & ~g.adj[cert.u] == 0
    assert set(cert.anchors) <= set(members(cert.X0_prime)) and len(cert.anchors) == k


@pytest.mark.parametrize("q, k, j", [(13, 1, 0), (17, 1, 0), (29, 1, 0), (29, 2, 0), (29, 1, 1)])
def test_thm21_on_paley(q, k, j):
    g = paley(q)
    for side in (g, complement(g)):
        _check21(side, con.thm21_witness(side, k, j), k, j)


def test_thm21_hunted_fixture():
    g = HUNTED_21
    assert naive_gamma_at_least(g, 3) and naive_gamma_at_least(complement(g), 3)
    cert = con.thm21_witness(g, 1, 0)
    _check21(g, cert, 1, 0)
    assert (cert.u, cert.v0, members(cert.result_set)) == (19, 0, [1, 4, 9, 12, 17])
    cert = con.thm21_witness(complement(g), 1, 0)
    assert (cert.u, cert.v0, members(cert.result_set)) == (18, 0, [5, 7, 9, 10, 16, 19])


def test_thm21_explicit_v0_and_determinism():
    g = paley(13)
    a, b = con.thm21_witness(g, 1, 0), con.thm21_witness(g, 1, 0)
    assert a == b and a.to_json() == b.to_json()
    c = con.thm21_witness(g, 1, 0, v0=a.v0)
    assert c.result_set == a.result_set
    for bad in (a.u, g.n):
        with pytest.raises(ValueError):
            con.thm21_witness(g, 1, 0, v0=bad)


def test_certificate_json_shape():
    d = con.thm21_witness(paley(13), 1, 0).to_json()
    assert d["theorem"] == "2.1" and d["size"] == d["claimed_bound"] == 6
    assert d["predicate"] == "(0,1,0)-dominating"
    assert d["cut_A"] is None and isinstance(d["X0_prime"], list)


# -- vertex-cut witnesses -------------------------------------------------------

def _check22(g, cert, k):
    kappa = vertex_connectivity(g)
    assert cert.cut_A.bit_count() == kappa
    assert cert.size == kappa - cert.gamma_complement + k + 2 == cert.claimed_bound
    chosen = set(members(cert.result_set))
    assert _naive_kkk(g, chosen, 0, k, 0) and is_k_dominating(g, cert.result_set, k)
    assert cert.result_set & ~cert.cut_A == 0
    assert is_clique(g, cert.X0_prime)
    assert cert.X0_prime & ~(g.adj[cert.u] & g.adj[cert.v0]) == 0


@pytest.mark.parametrize("q", [13, 17])
def test_thm22_on_paley(q):
    g = paley(q)
    for side in (g, complement(g)):
        _check22(side, con.thm22_witness(side, 1), 1)


def test_thm22_hunted_fixture():
    g = HUNTED_22
    cert = con.thm22_witness(g, 1)
    _check22(g, cert, 1)
    assert (cert.u, cert.v0, members(cert.result_set)) == (0, 14, [3, 6, 8, 11, 13, 15, 19])
    cert = con.thm22_witness(complement(g), 1)
    assert (cert.u, cert.v0, members(cert.result_set)) == (0, 3, [1, 4, 6, 8, 10, 13, 15])


# -- extremal families --------------------------------------------------------

def test_gamma_family_examples():
    assert con.in_gamma_family(K13).witness_pair == (0, 1)
    assert con.in_gamma_family(complete_graph(4))
    assert con.in_gamma_family(K2_K1)
    assert not con.in_gamma_family(TWO_K2)
    with pytest.raises(ValueError):
        con.in_gamma_family(empty_graph(3))


def test_gamma_family_literal_conditions_overshoot():
    # u=0, v=1 satisfy the three literal conditions, yet N[2] reaches 4 and
    # N[3] reaches 5, so no packing of size n - Delta exists.
    g = from_edge_list(6, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 4), (3, 5)])
    assert con.in_gamma_family(g)
    assert not con.rho_extremal(g)
    assert not con.in_gamma_family(g, repaired=True)


def test_repaired_gamma_family_characterises_rho():
    for g in iso_corpus(6):
        if g.edge_count():
            assert bool(con.in_gamma_family(g, repaired=True)) == con.rho_extremal(g)


def test_pi_family_examples():
    assert con.in_pi_family(K2) and con.in_pi_family(K13) and con.in_pi_family(P3)
    assert not con.in_pi_family(C4) and not con.in_pi_family(complete_graph(4))


def test_pi_decomposition_examples():
    g = disjoint_union(disjoint_union(K13, K2), K1)
    assert con.is_pi_plus_matching_decomposition(g).decomposition == (0b1111, 1, 1)
    assert con.is_pi_plus_matching_decomposition(TWO_K2).decomposition == (0b0011, 1, 0)
    assert not con.is_pi_plus_matching_decomposition(C4)
    assert not con.is_pi_plus_matching_decomposition(empty_graph(3))
    assert not con.is_pi_plus_matching_decomposition(disjoint_union(K13, K13))


def test_pi_decomposition_characterises_rho_o():
    for g in iso_corpus(6):
        assert bool(con.is_pi_plus_matching_decomposition(g)) == con.rho_o_extremal(g)


def test_pi_isolate_and_matching():
    assert con.is_pi_plus_isolate(K2_K1)
    assert con.is_pi_isolate_pair(P3)
    assert not con.is_pi_isolate_pair(C4)
    assert con.is_matching_graph(TWO_K2) and not con.is_matching_graph(P3)


def test_extremal_packing_examples():
    assert con.rho_extremal(K13) and con.rho_extremal(complete_graph(5))
    assert rho(TWO_K2).value == 2 and not con.rho_extremal(TWO_K2)
    assert con.rho_o_extremal(star_graph(4)) and con.rho_o_extremal(K2)
    assert rho_o(C4).value == 2 and not con.rho_o_extremal(C4)


@pytest.mark.parametrize("g, expected", [
    (C4, True), (TWO_K2, True), (P3, True), (K2_K1, True), (K2, True), (empty_graph(2), True),
    (C5, False), (K13, False), (K1, False), (complete_graph(3), False),
])
def test_thm35_pairs(g, expected):
    assert con.thm35_extremal_pair(g) is expected


def test_proof_violation_carries_details():
    exc = con.ProofViolation("boom", {"u": 1})
    assert exc.details == {"u": 1} and con.ProofViolation("x").details == {}
    assert is_kkk_dominating(K2, 0b11, 1, 1, 0)
