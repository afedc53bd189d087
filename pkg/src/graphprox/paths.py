"""Path accessibility and connection reliability.

Both measures are path-built: the first sums simple-path weights, the
second combines them by inclusion-exclusion into a two-terminal
reliability. The admissibility constant epsilon0(n, m) bounds the edge
weights under which path accessibility behaves as a proximity measure.
"""

from __future__ import annotations

import math

from .graph import WeightedMultigraph
from .oracles import enum_simple_paths
from .proximity import ProximityMatrix
import numpy as np


class TooManyPathsError(RuntimeError):
    """A vertex pair exceeds the inclusion-exclusion path budget."""


def epsilon0(n: int, m: int, tol: float = 1e-14) -> float:
    """Weight bound for path accessibility on graphs with n vertices, m parallels.

    The positive root of sum_{k=1}^{n-1} P(n-2, k-1) (eps*m)^k = 1, where
    P(a, b) counts permutations of a items taken b at a time; the left side
    is the off-diagonal path accessibility in a complete multigraph with all
    weights eps. Solved by bisection.
    """
    if n < 2 or m < 1:
        raise ValueError(f"need n >= 2 and m >= 1, got n={n}, m={m}")
    coeffs = [math.perm(n - 2, k - 1) for k in range(1, n)]

    def residual(eps: float) -> float:
        x = eps * m
        return math.fsum(c * x ** k for k, c in enumerate(coeffs, start=1)) - 1.0

    lo, hi = 0.0, 1.0 / m
    if residual(hi) == 0.0:
        return hi
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        if residual(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def path_accessibility(g: WeightedMultigraph, diagonal: str = "cycles") -> ProximityMatrix:
    """Total simple-path weight between every vertex pair.

    diagonal="cycles" sets p_ii to 1 plus the total weight of simple cycles
    through i (undirected cycles of length >= 2 counted once per
    orientation); diagonal="trivial" keeps only the length-0 path, p_ii = 1.
    The result flags whether all weights lie below epsilon0(n, m), the
    regime in which the measure has its full property set.
    """
    if diagonal not in ("cycles", "trivial"):
        raise ValueError(f"unknown diagonal convention {diagonal!r}")
    n = g.n
    p = np.zeros((n, n))
    for i in range(1, n + 1):
        if diagonal == "cycles":
            p[i - 1, i - 1] = 1.0 + math.fsum(c.weight for c in enum_simple_paths(g, i, i))
        else:
            p[i - 1, i - 1] = 1.0
        jstart = i + 1 if not g.directed else 1
        for j in range(jstart, n + 1):
            if j == i:
                continue
            total = math.fsum(q.weight for q in enum_simple_paths(g, i, j))
            p[i - 1, j - 1] = total
            if not g.directed:
                p[j - 1, i - 1] = total
    eps0 = epsilon0(n, g.m) if n >= 2 else 1.0
    return ProximityMatrix(p, "paths", {
        "diagonal": diagonal,
        "epsilon0": eps0,
        "weights_below_epsilon0": g.max_weight < eps0,
    })


def connection_reliability(g: WeightedMultigraph, max_paths: int = 20) -> ProximityMatrix:
    """Probability that at least one intact path joins each vertex pair.

    Edge weights are independent intactness probabilities in [0, 1]. Each
    entry is the inclusion-exclusion sum over the pair's simple paths, where
    a set of paths contributes the weight of its edge-set union. Pairs with
    more than ``max_paths`` paths raise TooManyPathsError (the sum has
    2^h terms).
    """
    if g.max_weight > 1.0:
        raise ValueError(f"edge weight {g.max_weight} outside [0, 1]")
    n = g.n
    p = np.eye(n)
    weights = [e.weight for e in g.edges]
    for i in range(1, n + 1):
        jstart = i + 1 if not g.directed else 1
        for j in range(jstart, n + 1):
            if j == i:
                continue
            value = _pair_reliability(g, i, j, weights, max_paths)
            p[i - 1, j - 1] = value
            if not g.directed:
                p[j - 1, i - 1] = value
    return ProximityMatrix(p, "reliability", {"max_paths": max_paths})


def _pair_reliability(g, i, j, weights, max_paths):
    paths = enum_simple_paths(g, i, j)
    h = len(paths)
    if h == 0:
        return 0.0
    if h > max_paths:
        raise TooManyPathsError(
            f"{h} paths between {i} and {j} exceed the budget of {max_paths}")
    masks = []
    for path in paths:
        mask = 0
        for e in path.edge_indices:
            mask |= 1 << e
        masks.append(mask)

    union_weight: dict[int, float] = {}

    def weight_of(mask: int) -> float:
        cached = union_weight.get(mask)
        if cached is None:
            cached = 1.0
            sel = mask
            while sel:
                e = (sel & -sel).bit_length() - 1
                sel &= sel - 1
                cached *= weights[e]
            union_weight[mask] = cached
        return cached

    # unions[s] is the edge-set union of the path subset encoded by s
    unions = [0] * (1 << h)
    terms = []
    for s in range(1, 1 << h):
        low = (s & -s).bit_length() - 1
        unions[s] = unions[s & (s - 1)] | masks[low]
        sign = 1.0 if s.bit_count() % 2 else -1.0
        terms.append(sign * weight_of(unions[s]))
    return math.fsum(terms)
