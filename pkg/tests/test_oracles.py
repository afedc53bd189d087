"""Brute-force oracles: paths, routes, forests, reliability states."""

import math

import numpy as np
import pytest

from graphprox import (
    CapExceededError,
    build_laplacian,
    build_weight_matrix,
    directed,
    enum_rooted_forests,
    enum_routes,
    enum_simple_paths,
    reliability_by_states,
    total_path_weight,
    undirected,
)

TRIANGLE = undirected(3, [(1, 2, 1.0), (2, 3, 1.0), (1, 3, 1.0)])
PATH3 = undirected(3, [(1, 2, 1.0), (1, 3, 1.0)])


def test_triangle_paths():
    paths = enum_simple_paths(TRIANGLE, 1, 2)
    assert sorted(p.vertices for p in paths) == [(1, 2), (1, 3, 2)]
    assert total_path_weight(TRIANGLE, 1, 2) == 2.0


def test_k2_single_path():
    g = undirected(2, [(1, 2, 0.37)])
    paths = enum_simple_paths(g, 1, 2)
    assert len(paths) == 1 and paths[0].weight == 0.37


def test_disconnected_pair_has_no_paths():
    g = undirected(4, [(1, 2, 1.0), (3, 4, 1.0)])
    assert enum_simple_paths(g, 1, 3) == []


def test_cycle_mode_counts_orientations():
    # one triangle, two traversal directions through vertex 1
    cycles = enum_simple_paths(TRIANGLE, 1, 1)
    assert sorted(c.vertices for c in cycles) == [(1, 2, 3, 1), (1, 3, 2, 1)]
    # a 2-cycle needs two distinct parallel edges, again both orientations
    pair = undirected(2, [(1, 2, 0.2), (1, 2, 0.3)])
    cycles = enum_simple_paths(pair, 1, 1)
    assert len(cycles) == 2
    assert all(c.weight == pytest.approx(0.06, rel=1e-15) for c in cycles)
    # a single undirected edge cannot be walked back and forth
    assert enum_simple_paths(undirected(2, [(1, 2, 0.5)]), 1, 1) == []


def test_cycle_mode_loops_once():
    g = undirected(1, [(1, 1, 0.25)])
    cycles = enum_simple_paths(g, 1, 1)
    assert [(c.vertices, c.weight) for c in cycles] == [((1, 1), 0.25)]


def test_directed_cycle_counted_once():
    g = directed(3, [(1, 2, 0.5), (2, 3, 0.5), (3, 1, 0.5)])
    cycles = enum_simple_paths(g, 1, 1)
    assert [c.vertices for c in cycles] == [(1, 2, 3, 1)]


def test_routes_length_zero():
    g = undirected(3, [(1, 2, 1.0)])
    assert enum_routes(g, 1, 1, 0) == [1.0]
    assert enum_routes(g, 1, 2, 0) == [0.0]


def test_routes_k2_diagonal():
    eps = 0.3
    totals = enum_routes(undirected(2, [(1, 2, eps)]), 1, 1, 4)
    assert totals == pytest.approx([1.0, 0.0, eps ** 2, 0.0, eps ** 4], rel=1e-15)


def test_routes_single_arc():
    totals = enum_routes(directed(2, [(1, 2, 0.4)]), 1, 2, 5)
    assert totals == pytest.approx([0.0, 0.4, 0.0, 0.0, 0.0, 0.0], abs=0)


def test_routes_match_matrix_powers(routes_corpus):
    rng = np.random.default_rng(7)
    for g in rng.permutation(np.array(routes_corpus, dtype=object))[:30]:
        if g.n > 6:
            continue
        E = build_weight_matrix(g)
        i, j = rng.integers(1, g.n + 1, size=2)
        totals = enum_routes(g, int(i), int(j), 8)
        power = np.eye(g.n)
        for ell in range(9):
            expected = power[i - 1, j - 1]
            assert totals[ell] == pytest.approx(expected, rel=1e-12, abs=1e-15)
            power = power @ E


def test_forest_census_path3():
    census = enum_rooted_forests(PATH3)
    assert census.totals.tolist() == [1.0, 4.0, 3.0]
    assert census.grand_total() == pytest.approx(
        np.linalg.det(np.eye(3) + build_laplacian(PATH3)), rel=1e-12)


def test_forest_census_k2():
    census = enum_rooted_forests(undirected(2, [(1, 2, 1.0)]))
    assert census.grand_total() == 3.0
    f11 = sum(census.rooted_matrix(k)[0, 0] for k in range(census.max_edges + 1))
    f12 = sum(census.rooted_matrix(k)[0, 1] for k in range(census.max_edges + 1))
    assert (f11, f12) == (2.0, 1.0)


def test_forest_census_row_sums(forest_censuses):
    for _, census in forest_censuses[:40]:
        for k in range(census.max_edges + 1):
            sums = census.rooted_matrix(k).sum(axis=1)
            assert np.allclose(sums, census.total(k), rtol=1e-12, atol=1e-12)


@pytest.mark.parametrize("tau", [0.5, 1.0, 2.0])
def test_census_determinant_identity(tau, forest_censuses):
    for g, census in forest_censuses[:40]:
        det = np.linalg.det(np.eye(g.n) + tau * build_laplacian(g))
        total = math.fsum(tau ** k * census.total(k) for k in range(census.max_edges + 1))
        assert total == pytest.approx(det, rel=1e-10)


def test_census_caps():
    big = undirected(9, [])
    with pytest.raises(CapExceededError):
        enum_rooted_forests(big)
    dense = undirected(5, [(1, 2, 1.0)] * 2 + [(2, 3, 1.0)] * 2 + [(3, 4, 1.0)] * 2
                       + [(4, 5, 1.0)] * 2 + [(5, 1, 1.0)] * 2)
    with pytest.raises(CapExceededError):
        enum_rooted_forests(dense, max_edges=8)


def test_reliability_parallel_pair():
    g = undirected(2, [(1, 2, 0.5), (1, 2, 0.5)])
    assert reliability_by_states(g, 1, 2) == pytest.approx(0.75, abs=1e-15)


def test_reliability_series():
    g = undirected(3, [(1, 2, 0.3), (2, 3, 0.7)])
    assert reliability_by_states(g, 1, 3) == pytest.approx(0.21, abs=1e-15)


def test_reliability_same_vertex():
    assert reliability_by_states(undirected(2, []), 1, 1) == 1.0


def test_reliability_directed_respects_orientation():
    g = directed(2, [(1, 2, 0.6)])
    assert reliability_by_states(g, 1, 2) == pytest.approx(0.6)
    assert reliability_by_states(g, 2, 1) == 0.0


def test_reliability_caps_and_domain():
    with pytest.raises(CapExceededError):
        reliability_by_states(undirected(2, [(1, 2, 0.5)] * 5), 1, 2, max_edges=4)
    with pytest.raises(ValueError):
        reliability_by_states(undirected(2, [(1, 2, 1.5)]), 1, 2)
