"""Path accessibility, connection reliability, and the epsilon0 bound."""

import math

import numpy as np
import pytest

from graphprox import (
    TooManyPathsError,
    connection_reliability,
    directed,
    enum_simple_paths,
    epsilon0,
    path_accessibility,
    reliability_by_states,
    transit_triples,
    undirected,
)


def test_epsilon0_two_vertices():
    assert epsilon0(2, 1) == 1.0
    assert epsilon0(2, 3) == pytest.approx(1 / 3, abs=1e-14)


def test_epsilon0_three_vertices_golden_ratio():
    assert epsilon0(3, 1) == pytest.approx((math.sqrt(5) - 1) / 2, abs=1e-12)


def test_epsilon0_n4_m2_residual():
    # root of x + 2x^2 + 2x^3 = 1 in x = eps*m (permutation coefficients 1, 2, 2)
    eps = epsilon0(4, 2)
    x = 2 * eps
    assert abs(x + 2 * x ** 2 + 2 * x ** 3 - 1) < 1e-12


def test_epsilon0_monotone_in_n_and_m():
    assert epsilon0(5, 1) < epsilon0(4, 1) < epsilon0(3, 1)
    assert epsilon0(4, 2) < epsilon0(4, 1)


def test_path_accessibility_k2():
    p = path_accessibility(undirected(2, [(1, 2, 0.3)]))
    assert p.entry(1, 2) == 0.3
    assert p.entry(1, 1) == 1.0  # a lone undirected edge forms no cycle


def test_path_accessibility_parallel_edges():
    p = path_accessibility(undirected(2, [(1, 2, 0.2), (1, 2, 0.3)]))
    assert p.entry(1, 2) == pytest.approx(0.5, abs=1e-15)
    assert p.entry(1, 1) == pytest.approx(1.12, abs=1e-15)


def test_path_accessibility_trivial_diagonal_switch():
    g = undirected(2, [(1, 2, 0.2), (1, 2, 0.3)])
    p = path_accessibility(g, diagonal="trivial")
    assert p.entry(1, 1) == 1.0
    with pytest.raises(ValueError):
        path_accessibility(g, diagonal="bogus")


def test_path_accessibility_disconnected_zeros():
    p = path_accessibility(undirected(4, [(1, 2, 0.4), (3, 4, 0.4)]))
    assert p.entry(1, 3) == 0.0 and p.entry(2, 4) == 0.0


def test_path_accessibility_admissibility_flag():
    ok = path_accessibility(undirected(3, [(1, 2, 0.3)]))
    assert ok.params["weights_below_epsilon0"]
    hot = path_accessibility(undirected(3, [(1, 2, 0.9)]))
    assert not hot.params["weights_below_epsilon0"]
    assert hot.params["epsilon0"] == pytest.approx((math.sqrt(5) - 1) / 2, abs=1e-12)


def test_regime_bounds_offdiagonal_below_one(paths_corpus):
    for g in paths_corpus[:40]:
        p = path_accessibility(g).values
        off = p - np.diag(np.diag(p))
        assert off.max(initial=0.0) < 1.0
        assert all(p[i, i] >= 1.0 for i in range(g.n))


def test_through_vertex_factorization(paths_corpus):
    seen = 0
    for g in paths_corpus:
        p = path_accessibility(g).values
        for i, k, t in transit_triples(g):
            expected = p[i - 1, k - 1] * p[k - 1, t - 1]
            assert p[i - 1, t - 1] == pytest.approx(expected, rel=1e-12, abs=1e-15)
            seen += 1
        if seen > 200:
            break
    assert seen > 0


def test_reliability_parallel_pair():
    p = connection_reliability(undirected(2, [(1, 2, 0.5), (1, 2, 0.5)]))
    assert p.entry(1, 2) == pytest.approx(0.75, abs=1e-15)
    assert p.entry(1, 1) == 1.0


def test_reliability_series_product():
    p = connection_reliability(undirected(3, [(1, 2, 0.5), (2, 3, 0.5)]))
    assert p.entry(1, 3) == pytest.approx(0.25, abs=1e-15)


def test_reliability_diamond():
    q = 0.3
    g = undirected(4, [(1, 2, q), (2, 4, q), (1, 3, q), (3, 4, q)])
    p = connection_reliability(g)
    assert p.entry(1, 4) == pytest.approx(2 * q ** 2 - q ** 4, abs=1e-15)


def test_reliability_rejects_bad_weights():
    with pytest.raises(ValueError):
        connection_reliability(undirected(2, [(1, 2, 1.2)]))


def test_reliability_path_budget():
    # complete graph on 6 vertices has 65 simple paths per pair
    edges = [(i, j, 0.1) for i in range(1, 7) for j in range(i + 1, 7)]
    with pytest.raises(TooManyPathsError):
        connection_reliability(undirected(6, edges))


def test_reliability_matches_state_enumeration_sample(reliability_corpus):
    for g in reliability_corpus[:25]:
        p = connection_reliability(g).values
        for i in range(1, g.n + 1):
            for j in range(1, g.n + 1):
                if i != j:
                    assert p[i - 1, j - 1] == pytest.approx(
                        reliability_by_states(g, i, j), abs=1e-12)


def test_reliability_affine_in_each_weight(reliability_corpus):
    """Sweeping one weight over {0.2, 0.5, 0.8} keeps every entry collinear."""
    checked = 0
    for g in reliability_corpus:
        if not g.edges:
            continue
        values = {}
        for w in (0.2, 0.5, 0.8):
            edges = list(g.edges)
            e = edges[0]
            edges[0] = type(e)(e.tail, e.head, w)
            values[w] = connection_reliability(
                type(g)(g.n, g.directed, tuple(edges))).values
        mid = (values[0.2] + values[0.8]) / 2
        assert np.allclose(values[0.5], mid, atol=1e-12)
        checked += 1
        if checked >= 15:
            break
    assert checked == 15


def test_path_accessibility_affine_in_each_weight(paths_corpus):
    for g in paths_corpus[:10]:
        if not g.edges:
            continue
        values = {}
        for w in (0.2, 0.5, 0.8):
            edges = list(g.edges)
            e = edges[0]
            edges[0] = type(e)(e.tail, e.head, w)
            values[w] = path_accessibility(
                type(g)(g.n, g.directed, tuple(edges))).values
        assert np.allclose(values[0.5], (values[0.2] + values[0.8]) / 2, atol=1e-12)


def test_reliability_directed_pairs():
    g = directed(3, [(1, 2, 0.5), (2, 3, 0.5), (3, 1, 0.5)])
    p = connection_reliability(g)
    assert p.entry(1, 2) == pytest.approx(0.5)
    assert p.entry(2, 1) == pytest.approx(0.25)
    for i in range(1, 4):
        for j in range(1, 4):
            assert p.entry(i, j) == pytest.approx(
                reliability_by_states(g, i, j), abs=1e-14)
