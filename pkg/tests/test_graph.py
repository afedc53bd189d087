"""Graph model and derived matrices."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphprox import (
    GraphError,
    WeightedMultigraph,
    build_jbar,
    build_laplacian,
    build_weight_matrix,
    components,
    directed,
    scale_weights,
    symmetrize,
    undirected,
)


def test_weight_matrix_k2():
    g = undirected(2, [(1, 2, 1.0)])
    assert build_weight_matrix(g).tolist() == [[0, 1], [1, 0]]


def test_weight_matrix_sums_parallel_edges():
    g = undirected(2, [(1, 2, 0.2), (1, 2, 0.3)])
    E = build_weight_matrix(g)
    assert E[0, 1] == pytest.approx(0.5, abs=0) and E[1, 0] == pytest.approx(0.5, abs=0)


def test_weight_matrix_directed_asymmetry():
    g = directed(2, [(1, 2, 0.4)])
    E = build_weight_matrix(g)
    assert E[0, 1] == 0.4 and E[1, 0] == 0.0


def test_laplacian_path():
    g = undirected(3, [(1, 2, 1.0), (1, 3, 1.0)])
    assert build_laplacian(g).tolist() == [[2, -1, -1], [-1, 1, 0], [-1, 0, 1]]


def test_laplacian_edgeless_is_zero():
    assert not build_laplacian(undirected(3, [])).any()


def test_laplacian_ignores_loops():
    plain = undirected(2, [(1, 2, 1.0)])
    loopy = undirected(2, [(1, 2, 1.0), (1, 1, 5.0)])
    assert np.array_equal(build_laplacian(plain), build_laplacian(loopy))


def test_laplacian_rejects_directed():
    with pytest.raises(GraphError):
        build_laplacian(directed(2, [(1, 2, 1.0)]))


def test_laplacian_rows_sum_to_zero_and_symmetric(forest_corpus):
    for g in forest_corpus[:40]:
        L = build_laplacian(g)
        assert np.array_equal(L, L.T)
        assert np.abs(L.sum(axis=1)).max(initial=0.0) == 0.0


def test_components_and_jbar():
    g = undirected(3, [(1, 2, 1.0)])
    assert components(g) == [[1, 2], [3]]
    jbar = build_jbar(components(g), 3)
    assert jbar.tolist() == [[0.5, 0.5, 0], [0.5, 0.5, 0], [0, 0, 1]]


def test_jbar_connected_is_uniform():
    g = undirected(3, [(1, 2, 1.0), (2, 3, 1.0)])
    assert np.allclose(build_jbar(components(g), 3), np.full((3, 3), 1 / 3), atol=0)


def test_jbar_point_graph():
    g = undirected(1, [])
    assert build_jbar(components(g), 1).tolist() == [[1.0]]


def test_jbar_idempotent_and_annihilates_laplacian(forest_corpus):
    for g in forest_corpus[:40]:
        jbar = build_jbar(components(g), g.n)
        L = build_laplacian(g)
        assert np.abs(jbar @ jbar - jbar).max(initial=0.0) <= 1e-12
        assert np.abs(jbar @ L).max(initial=0.0) <= 1e-12
        assert np.abs(L @ jbar).max(initial=0.0) <= 1e-12


def test_scale_weights_identity_and_errors():
    g = undirected(2, [(1, 2, 0.2), (1, 2, 0.3)])
    assert scale_weights(g, 1.0) == g
    scaled = scale_weights(g, 0.1)
    assert [e.weight for e in scaled.edges] == pytest.approx([0.02, 0.03], abs=1e-18)
    with pytest.raises(GraphError):
        scale_weights(g, 0.0)


def test_unweighted_lift_by_half():
    g = undirected(3, [(1, 2, 1.0), (2, 3, 1.0)])
    lifted = scale_weights(g, 0.5)
    assert all(e.weight == 0.5 for e in lifted.edges)


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 6))
    is_directed = draw(st.booleans())
    edges = draw(st.lists(
        st.tuples(st.integers(1, n), st.integers(1, n),
                  st.floats(0.01, 2.0, allow_nan=False)),
        max_size=10))
    return WeightedMultigraph(n, is_directed, tuple(edges))


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.floats(0.01, 1.0))
def test_weight_matrix_scaling_homogeneous(g, tau):
    assert np.array_equal(build_weight_matrix(scale_weights(g, tau)),
                          tau * build_weight_matrix(g))


def test_symmetrize_two_cycle():
    g = directed(2, [(1, 2, 0.3), (2, 1, 0.3)])
    sym = symmetrize(g)
    assert not sym.directed
    assert [tuple(e) for e in sym.edges] == [(1, 2, 0.3)]
    assert np.array_equal(build_weight_matrix(sym), build_weight_matrix(g))


def test_symmetrize_preserves_weight_matrix():
    g = directed(3, [(1, 2, 0.2), (2, 1, 0.2), (2, 3, 0.7), (3, 2, 0.7)])
    assert np.array_equal(build_weight_matrix(symmetrize(g)), build_weight_matrix(g))


def test_symmetrize_rejects_asymmetric():
    with pytest.raises(GraphError):
        symmetrize(directed(2, [(1, 2, 0.3)]))


def test_graph_validation():
    with pytest.raises(GraphError):
        WeightedMultigraph(2, False, ((1, 3, 0.5),))
    with pytest.raises(GraphError):
        WeightedMultigraph(2, False, ((1, 2, 0.0),))
    with pytest.raises(GraphError):
        WeightedMultigraph(0, False, ())
