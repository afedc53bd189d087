"""Exponential-time exact reference implementations.

These enumerate paths, routes, spanning rooted forests, and reliability
states outright. They exist to validate the closed-form kernels on small
instances, so they stay deliberately brute force; totals are accumulated
with math.fsum to keep rounding deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph import WeightedMultigraph, components


class CapExceededError(RuntimeError):
    """The instance is larger than the configured enumeration cap."""


class SimplePath(NamedTuple):
    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]
    weight: float


def enum_simple_paths(g: WeightedMultigraph, i: int, j: int) -> list[SimplePath]:
    """All simple paths from i to j, each with its product weight.

    Vertices along a path are pairwise distinct; parallel edges count as
    distinct path choices. For i == j the function enumerates simple cycles
    through i instead: edges pairwise distinct, intermediate vertices
    distinct and different from i. In undirected graphs a cycle of length
    >= 2 is produced once per traversal orientation (so a 2-cycle needs two
    distinct parallel edges); a loop is a cycle of length 1 and appears once.
    The trivial length-0 path is never included.
    """
    cycle_mode = i == j
    found: list[SimplePath] = []
    verts = [i]
    eidx: list[int] = []
    weights: list[float] = []
    on_path = set() if cycle_mode else {i}
    used_edges: set[int] = set()

    def extend(v: int):
        for idx, other, w in g.neighbors(v):
            if idx in used_edges:
                continue
            if other == j:
                found.append(
                    SimplePath(tuple(verts) + (j,), tuple(eidx) + (idx,),
                               math.prod(weights, start=w))
                )
                continue
            if other in on_path or (cycle_mode and other == i):
                continue
            verts.append(other)
            eidx.append(idx)
            weights.append(w)
            on_path.add(other)
            used_edges.add(idx)
            extend(other)
            on_path.discard(other)
            used_edges.discard(idx)
            verts.pop()
            eidx.pop()
            weights.pop()

    extend(i)
    return found


def total_path_weight(g: WeightedMultigraph, i: int, j: int) -> float:
    return math.fsum(p.weight for p in enum_simple_paths(g, i, j))


def enum_routes(g: WeightedMultigraph, i: int, j: int, maxlen: int) -> list[float]:
    """Total weight of routes (walks) from i to j per length 0..maxlen.

    Computed by explicit walk extension, one edge at a time, never through
    matrix powers. The length-0 route exists only for j == i and weighs 1.
    """
    if maxlen < 0:
        raise ValueError("maxlen must be >= 0")
    front = np.zeros(g.n)
    front[i - 1] = 1.0
    totals = [front[j - 1]]
    steps = [(t - 1, h - 1, w) for t, h, w in g.edges]
    if not g.directed:
        steps += [(h - 1, t - 1, w) for t, h, w in g.edges if t != h]
    for _ in range(maxlen):
        nxt = np.zeros(g.n)
        for t, h, w in steps:
            nxt[h] += front[t] * w
        front = nxt
        totals.append(front[j - 1])
    return totals


@dataclass(frozen=True)
class ForestCensus:
    """Exact spanning-rooted-forest weights of an undirected multigraph.

    ``totals[k]`` is the weight of the set of all spanning rooted forests
    with k edges; ``rooted[k][i-1][j-1]`` restricts to forests where j lies
    in the tree rooted at i. k runs 0..n-v with v the component count.
    """

    n: int
    v: int
    totals: np.ndarray
    rooted: np.ndarray

    @property
    def max_edges(self) -> int:
        return self.n - self.v

    def total(self, k: int) -> float:
        # k outside 0..n-v corresponds to an empty forest set
        if 0 <= k <= self.max_edges:
            return float(self.totals[k])
        return 0.0

    def rooted_matrix(self, k: int) -> np.ndarray:
        if 0 <= k <= self.max_edges:
            return self.rooted[k]
        return np.zeros((self.n, self.n))

    def grand_total(self) -> float:
        return math.fsum(self.totals)


def enum_rooted_forests(g: WeightedMultigraph, max_vertices: int = 8,
                        max_edges: int = 20) -> ForestCensus:
    """Census of spanning rooted forests by edge-subset enumeration.

    Walks all 2^|E| edge subsets, keeps the acyclic ones, and distributes
    each forest's weight over its admissible root choices (one root per
    tree). Loops are cycles, so no forest contains one.
    """
    if g.directed:
        raise ValueError("forest census is defined for undirected multigraphs")
    if g.n > max_vertices:
        raise CapExceededError(f"census capped at {max_vertices} vertices, graph has {g.n}")
    nedges = len(g.edges)
    if nedges > max_edges:
        raise CapExceededError(f"census capped at {max_edges} edges, graph has {nedges}")

    v = len(components(g))
    kmax = g.n - v
    total_parts: list[list[float]] = [[] for _ in range(kmax + 1)]
    rooted = np.zeros((kmax + 1, g.n, g.n))
    tails = [e.tail - 1 for e in g.edges]
    heads = [e.head - 1 for e in g.edges]
    wts = [e.weight for e in g.edges]

    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for mask in range(1 << nedges):
        k = mask.bit_count()
        if k > kmax:
            continue
        for x in range(g.n):
            parent[x] = x
        weight = 1.0
        acyclic = True
        sel = mask
        while sel:
            e = (sel & -sel).bit_length() - 1
            sel &= sel - 1
            a, b = find(tails[e]), find(heads[e])
            if a == b:
                acyclic = False
                break
            parent[a] = b
            weight *= wts[e]
        if not acyclic:
            continue
        groups: dict[int, list[int]] = {}
        for x in range(g.n):
            groups.setdefault(find(x), []).append(x)
        multiplier = math.prod(len(members) for members in groups.values())
        total_parts[k].append(weight * multiplier)
        for members in groups.values():
            share = weight * (multiplier // len(members))
            idx = np.asarray(members)
            rooted[k][np.ix_(idx, idx)] += share

    totals = np.array([math.fsum(part) for part in total_parts])
    return ForestCensus(g.n, v, totals, rooted)


def reliability_by_states(g: WeightedMultigraph, i: int, j: int,
                          max_edges: int = 16) -> float:
    """Probability that i reaches j, by summing over all 2^|E| edge states.

    Weights are read as independent intactness probabilities and must lie
    in [0, 1]. A state's probability is the product of the intactness
    probabilities of its present edges and the failure probabilities of the
    absent ones.
    """
    nedges = len(g.edges)
    if nedges > max_edges:
        raise CapExceededError(f"state enumeration capped at {max_edges} edges, graph has {nedges}")
    for e in g.edges:
        if e.weight > 1.0:
            raise ValueError(f"edge weight {e.weight} outside [0, 1]")
    if i == j:
        return 1.0

    probs = [e.weight for e in g.edges]
    terms = []
    for mask in range(1 << nedges):
        p_state = 1.0
        for e in range(nedges):
            p_state *= probs[e] if mask >> e & 1 else 1.0 - probs[e]
        if p_state == 0.0:
            continue
        if _connects(g, mask, i, j):
            terms.append(p_state)
    return math.fsum(terms)


def _connects(g: WeightedMultigraph, mask: int, i: int, j: int) -> bool:
    present = [e for idx, e in enumerate(g.edges) if mask >> idx & 1]
    reached = {i}
    frontier = [i]
    while frontier:
        v = frontier.pop()
        for tail, head, _ in present:
            nxt = None
            if tail == v and head not in reached:
                nxt = head
            elif not g.directed and head == v and tail not in reached:
                nxt = tail
            if nxt is not None:
                if nxt == j:
                    return True
                reached.add(nxt)
                frontier.append(nxt)
    return j in reached
