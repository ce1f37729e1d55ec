import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hspec.hypergraph import (
    Hypergraph,
    HypergraphError,
    complete_hypergraph,
    enumerate_connected,
    gen_planted_odd_bipartite,
    gen_random_connected,
)
from hspec.mu import (
    mu_estimate,
    mu_estimate_components,
    mu_odd_bipartite_exact,
    rayleigh_gradient,
    sub_hypergraph,
)
from hspec.spectral import rho_enclose
from hspec.structure import odd_bipartition
from hspec.tensor import eigen_residual, rayleigh

from conftest import cycle_graph, hypergraphs, path_graph
from test_spectral import adjacency_matrix

EDGE4 = Hypergraph(4, 4, ((1, 2, 3, 4),))


def central_difference(H, x, h=1e-5):
    g = np.empty(H.n)
    for i in range(H.n):
        e = np.zeros(H.n)
        e[i] = h
        g[i] = (rayleigh(H, x + e) - rayleigh(H, x - e)) / (2 * h)
    return g


class TestGradient:
    def test_examples(self):
        np.testing.assert_array_equal(rayleigh_gradient(EDGE4, np.ones(4)), [4, 4, 4, 4])
        np.testing.assert_array_equal(rayleigh_gradient(EDGE4, np.zeros(4)), [0, 0, 0, 0])
        np.testing.assert_array_equal(rayleigh_gradient(EDGE4, [1, 2, 1, 1]), [8, 4, 8, 8])

    @given(hypergraphs(), st.integers(0, 2**32 - 1))
    def test_finite_differences(self, H, seed):
        x = np.random.default_rng(seed).uniform(-1, 1, H.n)
        g = rayleigh_gradient(H, x)
        fd = central_difference(H, x)
        assert np.max(np.abs(g - fd)) <= 1e-6 * max(1.0, np.max(np.abs(g)))


class TestMuEstimate:
    def test_single_edge(self):
        assert mu_estimate(EDGE4).value == pytest.approx(-1, abs=1e-6)

    def test_path_and_triangle(self):
        assert mu_estimate(path_graph(3)).value == pytest.approx(-np.sqrt(2), abs=1e-6)
        # triangle adjacency spectrum is {2, -1, -1}
        assert mu_estimate(cycle_graph(3)).value == pytest.approx(-1, abs=1e-6)

    def test_errors(self):
        with pytest.raises(HypergraphError):
            mu_estimate(Hypergraph(3, 3, ((1, 2, 3),)))
        with pytest.raises(HypergraphError):
            mu_estimate(Hypergraph(2, 4, ((1, 2), (3, 4))))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_graphs_reach_matrix_minimum(self, n):
        for H in itertools.islice(enumerate_connected(n, 2), 0, None, 1 if n < 5 else 7):
            lo = np.linalg.eigvalsh(adjacency_matrix(H))[0]
            est = mu_estimate(H, restarts=4)
            assert est.value >= lo - 1e-9
            assert est.value == pytest.approx(lo, abs=1e-6)

    def test_invariants(self):
        for seed in range(8):
            H = gen_random_connected(6, 4, seed)
            rho = rho_enclose(H)
            est = mu_estimate(H, restarts=16, rho=rho)
            assert abs(np.sum(np.abs(est.x) ** 4) - 1) <= 1e-12
            assert abs(est.value - rayleigh(H, est.x)) <= 1e-12
            assert est.value <= 1e-9  # 0 is an H-eigenvalue for k >= 3
            assert est.value >= -rho.upper - 1e-9
            assert est.method == "projected-descent"

    def test_deterministic(self):
        H = gen_random_connected(7, 4, 3)
        a, b = mu_estimate(H, seed=5), mu_estimate(H, seed=5)
        assert a.value == b.value
        np.testing.assert_array_equal(a.x, b.x)

    def test_complete_4_graph(self):
        H = complete_hypergraph(5, 4)
        est = mu_estimate(H)
        assert est.residual < 1e-5
        assert 4 + est.value > 1 / 15


class TestOddBipartiteExact:
    def test_single_edge(self):
        est = mu_odd_bipartite_exact(EDGE4)
        assert est.value == pytest.approx(-1, abs=1e-12)
        assert est.method == "exact-odd-bipartite"

    def test_path(self):
        assert mu_odd_bipartite_exact(path_graph(3)).value == pytest.approx(-np.sqrt(2), abs=1e-9)

    def test_planted_class(self):
        H = Hypergraph(4, 5, ((1, 2, 3, 4), (1, 2, 3, 5)))
        rho = rho_enclose(H)
        est = mu_odd_bipartite_exact(H, rho=rho, v1={1})
        assert est.value == pytest.approx(-rho.midpoint, abs=1e-15)
        assert est.interval == (-rho.upper, -rho.lower)
        assert est.residual <= 1e-6

    def test_errors(self):
        with pytest.raises(HypergraphError):
            mu_odd_bipartite_exact(complete_hypergraph(5, 4))
        with pytest.raises(HypergraphError):
            mu_odd_bipartite_exact(Hypergraph(3, 3, ((1, 2, 3),)))

    def test_descent_agrees_on_planted(self):
        for seed in range(10):
            H, _ = gen_planted_odd_bipartite(7, 4, seed)
            rho = rho_enclose(H)
            exact = mu_odd_bipartite_exact(H, rho=rho)
            est = mu_estimate(H, restarts=16, rho=rho)
            assert exact.residual <= 1e-6
            assert est.value <= -rho.lower + 1e-4


@settings(max_examples=50)
@given(hypergraphs(k=st.sampled_from([2, 4]), min_edges=1), st.integers(0, 2**32 - 1))
def test_sign_flip_leaves_rayleigh_unchanged(H, seed):
    # flipping signs on any class meeting every edge evenly preserves every edge product
    rng = np.random.default_rng(seed)
    x = rng.normal(size=H.n)
    for mask in range(1 << H.n):
        cls = {v for v in range(1, H.n + 1) if mask >> (v - 1) & 1}
        if all(len(cls.intersection(e)) % 2 == 0 for e in H.edges):
            s = np.array([-1.0 if v in cls else 1.0 for v in range(1, H.n + 1)])
            assert rayleigh(H, s * x) == pytest.approx(rayleigh(H, x), abs=1e-12)


def test_components_minimum():
    # two disjoint single edges plus an isolated vertex
    H = Hypergraph(4, 9, ((1, 2, 3, 4), (5, 6, 7, 8)))
    assert mu_estimate_components(H) == pytest.approx(-1, abs=1e-6)
    part = sub_hypergraph(H, {5, 6, 7, 8})
    assert part == EDGE4


def test_residual_of_perron_flip_is_small():
    for seed in range(5):
        H, v1 = gen_planted_odd_bipartite(8, 4, seed)
        est = mu_odd_bipartite_exact(H, v1=v1)
        assert eigen_residual(H, est.x, est.value) <= 1e-6
        assert odd_bipartition(H).exists
