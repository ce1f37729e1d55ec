import itertools

import pytest
from hypothesis import given, settings

from hspec.hypergraph import (
    Hypergraph,
    HypergraphError,
    complete_hypergraph,
    enumerate_connected,
    gen_planted_odd_bipartite,
    gen_random,
    is_connected,
)
from hspec.structure import (
    edge_connectivity,
    edge_disjoint_path_count,
    edge_disjoint_path_count_brute,
    is_odd_bipartition,
    odd_bipartition,
    odd_bipartition_brute,
)

from conftest import complete_graph, cycle_graph, hypergraphs, path_graph


def assert_witness(H, u, v, paths):
    used = set()
    for P in paths:
        assert P.is_valid(H)
        assert (P.start, P.end) == (u, v)
        assert used.isdisjoint(P.edges)
        used.update(P.edges)


class TestPathCount:
    def test_single_edge(self):
        H = Hypergraph(3, 3, ((1, 2, 3),))
        c, paths = edge_disjoint_path_count(H, 1, 2)
        assert c == 1
        assert_witness(H, 1, 2, paths)

    def test_chain(self):
        H = Hypergraph(3, 5, ((1, 2, 3), (3, 4, 5)))
        c, paths = edge_disjoint_path_count(H, 1, 5)
        assert c == 1 and paths[0].length == 2

    def test_k4(self):
        K4 = complete_graph(4)
        for u, v in itertools.combinations(range(1, 5), 2):
            assert edge_disjoint_path_count_brute(K4, u, v) == 3
            c, paths = edge_disjoint_path_count(K4, u, v)
            assert c == 3
            assert_witness(K4, u, v, paths)

    def test_errors(self):
        with pytest.raises(HypergraphError):
            edge_disjoint_path_count(path_graph(3), 2, 2)
        with pytest.raises(HypergraphError):
            edge_disjoint_path_count(Hypergraph(2, 4, ((1, 2), (3, 4))), 1, 3)

    @settings(max_examples=80, deadline=None)
    @given(hypergraphs(connected=True, max_n=6, max_edges=7))
    def test_flow_matches_brute_force(self, H):
        for u, v in itertools.combinations(range(1, H.n + 1), 2):
            c, paths = edge_disjoint_path_count(H, u, v)
            assert c == edge_disjoint_path_count_brute(H, u, v)
            assert_witness(H, u, v, paths)


class TestEdgeConnectivity:
    def test_examples(self):
        assert edge_connectivity(path_graph(4)).f == 1
        assert edge_connectivity(cycle_graph(4)).f == 2
        assert edge_connectivity(Hypergraph(3, 5, ((1, 2, 3), (1, 2, 4), (3, 4, 5)))).f == 1
        assert edge_connectivity(complete_graph(5)).f == 4

    def test_witness(self):
        H = complete_hypergraph(6, 3)
        res = edge_connectivity(H)
        assert res.f == 10  # every vertex has degree C(5, 2)
        assert len(res.witness) == res.f
        assert_witness(H, *res.min_pair, res.witness)

    def test_errors(self):
        with pytest.raises(HypergraphError):
            edge_connectivity(Hypergraph(2, 1))
        with pytest.raises(HypergraphError):
            edge_connectivity(Hypergraph(2, 4, ((1, 2), (3, 4))))

    @pytest.mark.parametrize("n, k", [(4, 2), (5, 3), (5, 4)])
    def test_deletion_soundness(self, n, k):
        for H in enumerate_connected(n, k, max_edges=8):
            f = edge_connectivity(H).f
            for U in itertools.combinations(H.edges, f - 1):
                G = Hypergraph(k, n, tuple(e for e in H.edges if e not in U))
                assert is_connected(G)
            assert any(
                not is_connected(Hypergraph(k, n, tuple(e for e in H.edges if e not in U)))
                for U in itertools.combinations(H.edges, f)
            )


class TestOddBipartition:
    def test_examples(self):
        assert not odd_bipartition(cycle_graph(3)).exists
        assert odd_bipartition(Hypergraph(4, 4, ((1, 2, 3, 4),))).v1 == {1}
        H = Hypergraph(4, 5, ((1, 2, 3, 4), (1, 2, 3, 5)))
        assert is_odd_bipartition(H, {1})
        assert is_odd_bipartition(H, odd_bipartition(H).v1)

    def test_brute_examples(self):
        assert not odd_bipartition_brute(cycle_graph(3)).exists
        assert odd_bipartition_brute(cycle_graph(4)).v1 == {1, 3}
        assert not odd_bipartition_brute(cycle_graph(5)).exists

    def test_complete_4_graph_on_5(self):
        assert not odd_bipartition(complete_hypergraph(5, 4)).exists
        assert not odd_bipartition_brute(complete_hypergraph(5, 4)).exists

    def test_full_set_replaced_by_proper_solution(self):
        # odd k: V itself meets every edge in k vertices, so elimination may land on it
        H = Hypergraph(3, 4, ((1, 2, 3),))
        v1 = odd_bipartition(H).v1
        assert v1 is not None and len(v1) < H.n and is_odd_bipartition(H, v1)
        # a single triple on 3 vertices: {1}, {2}, {3} work, V itself is excluded
        T = Hypergraph(3, 3, ((1, 2, 3),))
        assert is_odd_bipartition(T, odd_bipartition(T).v1)

    def test_only_full_set_solves(self):
        # complete 3-graph on 4 vertices: the unique solution is all of V
        H = complete_hypergraph(4, 3)
        assert not odd_bipartition(H).exists
        assert not odd_bipartition_brute(H).exists

    def test_errors(self):
        with pytest.raises(HypergraphError):
            odd_bipartition(Hypergraph(3, 3))
        with pytest.raises(HypergraphError):
            odd_bipartition_brute(Hypergraph(2, 21, ((1, 2),)))

    @given(hypergraphs(min_edges=1, max_n=8))
    def test_agrees_with_brute_force(self, H):
        a, b = odd_bipartition(H), odd_bipartition_brute(H)
        assert a.exists == b.exists
        if a.exists:
            assert is_odd_bipartition(H, a.v1)
            assert is_odd_bipartition(H, b.v1)
            if H.k % 2 == 0:
                assert len(a.v1) < H.n

    def test_planted_instances_detected(self):
        for s in range(30):
            H, _ = gen_planted_odd_bipartite(9, 4, s)
            assert odd_bipartition(H).exists

    def test_random_larger(self):
        for s in range(40):
            H = gen_random(11, 3, 6, seed=s)
            assert odd_bipartition(H).exists == odd_bipartition_brute(H).exists
