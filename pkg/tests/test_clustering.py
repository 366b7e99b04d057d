import brute
import pytest
from conftest import graph_and_ordering
from hypothesis import given
from hypothesis import strategies as st

from sparse_powers.clustering import (
    Clustering,
    build_clustering,
    leader,
    leaders,
    quotient,
    quotient_ordering,
    verify_clustering_bound,
)
from sparse_powers.errors import ValidationError
from sparse_powers.graph import complete_graph, cycle_graph, path_graph, power
from sparse_powers.orderings import VertexOrdering, degeneracy_ordering, wcol_of_ordering, wreach


def test_path_fixture():
    g, o = path_graph(4), VertexOrdering.identity(4)
    assert leaders(g, o, 2) == [0, 0, 1, 2]
    X = build_clustering(g, o, 2)
    assert X.blocks == ((0, 1), (2,), (3,))
    assert X.leader == (0, 1, 2)
    assert X.format() == "0: 0 1\n1: 2\n2: 3\n"
    q = quotient(power(g, 2), X)
    assert q.graph.edges() == complete_graph(3).edges()
    rep = verify_clustering_bound(g, o, 2, 1)
    assert (rep.lhs, rep.rhs) == (3, 4)
    assert rep.passed


def test_d1_gives_singletons():
    g = cycle_graph(6)
    X = build_clustering(g, VertexOrdering.identity(6), 1)
    assert all(len(b) == 1 for b in X.blocks)


def test_validate_rejects_non_clique():
    g = path_graph(3)
    bad = Clustering(d=1, block_of=(0, 0, 0), blocks=((0, 1, 2),), leader=(0,))
    with pytest.raises(ValidationError):
        bad.validate(g)


@given(graph_and_ordering(max_n=9), st.integers(1, 4))
def test_blocks_are_power_cliques(go, d):
    g, o = go
    X = build_clustering(g, o, d)
    X.validate(power(g, d))
    dist = brute.all_pairs_distances(g)
    for block in X.blocks:
        assert all(dist[u][v] <= d for u in block for v in block)


@given(graph_and_ordering(max_n=9), st.integers(1, 4))
def test_leader_is_in_every_member_reach(go, d):
    g, o = go
    X = build_clustering(g, o, d)
    for b, block in enumerate(X.blocks):
        ld = X.leader[b]
        for a in block:
            assert leader(g, o, a, d) == ld
            assert ld in brute.wreach_by_paths(g, o.sequence, a, d // 2)


@given(graph_and_ordering(max_n=9), st.integers(1, 4), st.integers(0, 2))
def test_quotient_bound(go, d, r):
    g, o = go
    rep = verify_clustering_bound(g, o, d, r)
    assert rep.passed, rep.as_dict()
    X = build_clustering(g, o, d)
    q = quotient(power(g, d), X)
    tau = quotient_ordering(X, o)
    assert tau.sequence == tuple(range(X.size))
    assert wcol_of_ordering(q.graph, tau, r) <= wcol_of_ordering(g, o, 2 * d * r)


@given(graph_and_ordering(max_n=8), st.integers(2, 4))
def test_quotient_adjacency_definition(go, d):
    g, o = go
    gd = power(g, d)
    X = build_clustering(g, o, d)
    q = quotient(gd, X).graph
    for a in range(X.size):
        for b in range(a + 1, X.size):
            link = any(gd.has_edge(u, v) for u in X.blocks[a] for v in X.blocks[b])
            assert q.has_edge(a, b) == link


def test_clustering_is_deterministic():
    g = cycle_graph(11)
    o, _ = degeneracy_ordering(g)
    assert build_clustering(g, o, 3) == build_clustering(g, o, 3)


def test_leader_matches_wreach_head():
    g, o = cycle_graph(7), VertexOrdering.identity(7)
    for u in range(7):
        assert leader(g, o, u, 3) == wreach(g, o, u, 1)[0]
