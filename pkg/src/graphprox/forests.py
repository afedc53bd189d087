"""Forest-based proximity: Q(tau) = (I + tau L)^{-1}, its polynomial
decomposition, the Laplacian Moore-Penrose inverse, and the dense-forest
measure (L + alpha Jbar)^{-1}.

By the matrix-forest theorem the entries of Q(tau) are ratios of spanning
rooted forest weights; the coefficient matrices Q_k of the adjugate
polynomial det(I + tau L) (I + tau L)^{-1} collect the forests with exactly
k edges. All solves run blockwise per connected component, so entries
joining different components are exact zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .graph import (
    Edge,
    WeightedMultigraph,
    build_jbar,
    build_laplacian,
    components,
)
from .oracles import enum_rooted_forests
from .proximity import ProximityMatrix


def _blockwise(g: WeightedMultigraph, block_solve) -> np.ndarray:
    """Assemble a matrix whose component blocks come from ``block_solve``.

    ``block_solve(L_block, size)`` receives one component's Laplacian block.
    """
    L = build_laplacian(g)
    out = np.zeros((g.n, g.n))
    for part in components(g):
        idx = np.asarray(part) - 1
        out[np.ix_(idx, idx)] = block_solve(L[np.ix_(idx, idx)], len(part))
    return out


def forest_accessibility(g: WeightedMultigraph, tau: float = 1.0) -> ProximityMatrix:
    """Relative forest accessibility Q(tau) = (I + tau L)^{-1}.

    Always defined for tau >= 0; entries equal the weight of forests where
    j sits in the tree rooted at i (with edge weights scaled by tau),
    relative to the weight of all spanning rooted forests.
    """
    if tau < 0:
        raise ValueError(f"tau must be nonnegative, got {tau}")
    values = _blockwise(
        g, lambda L, size: np.linalg.solve(np.eye(size) + tau * L, np.eye(size)))
    return ProximityMatrix(values, "forests", {"tau": tau})


@dataclass(frozen=True)
class QkStack:
    """Coefficient matrices of det(I + tau L) (I + tau L)^{-1}.

    ``matrices[k]`` holds the total weights of k-edge spanning rooted
    forests per (root, vertex) pair; ``forest_totals[k]`` is the matching
    coefficient of det(I + tau L). k runs 0..n-v.
    """

    n: int
    v: int
    matrices: np.ndarray
    forest_totals: np.ndarray

    @property
    def max_edges(self) -> int:
        return self.n - self.v


def qk_decomposition(g: WeightedMultigraph) -> QkStack:
    """Extract the Q_k stack by evaluation/interpolation.

    det(I + tau L) (I + tau L)^{-1} is a matrix polynomial of degree n - v;
    evaluating it at n - v + 1 Chebyshev-spaced nodes in [0.5, 2] and
    solving the node Vandermonde system recovers the coefficient matrices,
    and the same fit on the determinant recovers the forest totals.
    """
    L = build_laplacian(g)
    v = len(components(g))
    deg = g.n - v
    if deg == 0:
        nodes = np.array([1.0])
    else:
        nodes = 1.25 + 0.75 * np.cos(np.pi * np.arange(deg + 1) / deg)
    adj_values = np.empty((deg + 1, g.n * g.n))
    det_values = np.empty(deg + 1)
    eye = np.eye(g.n)
    for a, tau in enumerate(nodes):
        A = eye + tau * L
        det_values[a] = np.linalg.det(A)
        adj_values[a] = (det_values[a] * np.linalg.solve(A, eye)).ravel()
    vander = nodes[:, None] ** np.arange(deg + 1)[None, :]
    coeffs = np.linalg.solve(vander, adj_values)
    totals = np.linalg.solve(vander, det_values)
    return QkStack(g.n, v, coeffs.reshape(deg + 1, g.n, g.n), totals)


def dense_forest_threshold(g: WeightedMultigraph) -> float:
    """Largest alpha for which (L + alpha Jbar)^{-1} stays a positive
    combination of Q_{n-v-1} and Q_{n-v}: the ratio of the top two forest
    totals. Infinite for edgeless graphs (n - v = 0)."""
    totals = qk_decomposition(g).forest_totals
    if len(totals) < 2:
        return math.inf
    return float(totals[-1] / totals[-2])


def default_alpha(g: WeightedMultigraph) -> float:
    """Half the dense-forest threshold (1.0 when the threshold is infinite),
    always inside the proximity window."""
    threshold = dense_forest_threshold(g)
    return 1.0 if math.isinf(threshold) else threshold / 2.0


def jbar_limit_check(g: WeightedMultigraph,
                     tau_ladder: tuple[float, ...] = (1e2, 1e4, 1e6)) -> list[tuple[float, float]]:
    """Row-sum-norm deviation of Q(tau) from Jbar along a tau ladder.

    Q(tau) converges to the per-component averaging matrix as tau grows;
    the deviation decays like 1/tau.
    """
    jbar = build_jbar(components(g), g.n)
    out = []
    for tau in tau_ladder:
        q = forest_accessibility(g, tau).values
        out.append((tau, float(np.max(np.abs(q - jbar).sum(axis=1)))))
    return out


def pinv_limit_estimate(g: WeightedMultigraph, tau: float) -> np.ndarray:
    """tau * (Q(tau) - Jbar), the finite-tau approximation of L^+.

    Evaluated as the blockwise solve (I + tau L) X = tau (I - Jbar), which
    is algebraically identical (Q(tau) Jbar = Jbar) but folds tau into the
    right-hand side; forming Q(tau) first and subtracting would amplify the
    solve's rounding error by tau.
    """

    def block(L, size):
        rhs = tau * (np.eye(size) - 1.0 / size)
        return np.linalg.solve(np.eye(size) + tau * L, rhs)

    return _blockwise(g, block)


def laplacian_pinv(g: WeightedMultigraph) -> np.ndarray:
    """Moore-Penrose generalized inverse of the Laplacian: (L + Jbar)^{-1} - Jbar."""

    def block(L, size):
        shift = 1.0 / size
        return np.linalg.solve(L + shift, np.eye(size)) - shift

    return _blockwise(g, block)


def pinv_topological(g: WeightedMultigraph, max_vertices: int = 8) -> np.ndarray:
    """Laplacian pseudoinverse assembled from the spanning-forest census.

    Entry (i, j), for j in i's component, is the centered count of forests
    with n - v - 1 edges that join j to the tree rooted at i, divided by
    the total weight of maximal (n - v edge) forests:
    (eps(F^{ij}_{n-v-1}) - eps(F_{n-v-1}) / |V_i|) / eps(F_{n-v}).
    """
    census = enum_rooted_forests(g, max_vertices=max_vertices)
    kmax = census.max_edges
    top = census.total(kmax)
    sub = census.rooted_matrix(kmax - 1)
    sub_total = census.total(kmax - 1)
    out = np.zeros((g.n, g.n))
    for part in components(g):
        idx = np.asarray(part) - 1
        out[np.ix_(idx, idx)] = (sub[np.ix_(idx, idx)] - sub_total / len(part)) / top
    return out


def dense_forest_accessibility(g: WeightedMultigraph, alpha: float) -> ProximityMatrix:
    """Accessibility via dense forests: (L + alpha Jbar)^{-1}.

    The raw inverse exists for every alpha != 0 and equals
    L^+ + alpha^{-1} Jbar. It is a proximity measure (a positively weighted
    sum of Q_{n-v-1} and Q_{n-v}) exactly when 0 < alpha < the threshold
    ratio; outside that window the matrix is still returned, flagged
    is_proximity=False.
    """
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    threshold = dense_forest_threshold(g)

    def block(L, size):
        return np.linalg.solve(L + alpha / size, np.eye(size))

    values = _blockwise(g, block)
    return ProximityMatrix(values, "dense-forests", {
        "alpha": alpha,
        "threshold": threshold,
        "is_proximity": 0.0 < alpha < threshold,
    })


@dataclass(frozen=True)
class PerturbationDeltas:
    """Both readings of a dense-forest perturbation increment.

    ``pinv_delta`` is the change of L^+; ``dense_delta`` is the change of
    the full (L + alpha Jbar)^{-1}, which additionally carries the
    alpha^{-1} * (change of Jbar) term when components merge.
    """

    alpha: float
    pinv_delta: np.ndarray
    dense_delta: np.ndarray


def edge_perturbation_deltas(g: WeightedMultigraph, k: int, t: int,
                             delta_eps: float, alpha: float = 1.0) -> PerturbationDeltas:
    """Deltas of L^+ and of (L + alpha Jbar)^{-1} when edge (k, t) gains
    weight delta_eps (as a new parallel edge, which is equivalent)."""
    perturbed = replace(g, edges=g.edges + (Edge(k, t, delta_eps),))
    pinv_delta = laplacian_pinv(perturbed) - laplacian_pinv(g)
    dense_delta = (dense_forest_accessibility(perturbed, alpha).values
                   - dense_forest_accessibility(g, alpha).values)
    return PerturbationDeltas(alpha, pinv_delta, dense_delta)
