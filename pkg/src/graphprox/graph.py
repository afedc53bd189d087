"""Weighted multigraph model and its derived matrices.

Vertices are dense 1-based integers 1..n. Parallel edges and loops are
allowed; every weight is strictly positive. Undirected edges are stored
once with their endpoints as given; the weight matrix materializes the
symmetry. All values are immutable after construction and every operation
here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import NamedTuple, Sequence

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction or an operation applied out of domain."""


class Edge(NamedTuple):
    tail: int
    head: int
    weight: float


@dataclass(frozen=True)
class WeightedMultigraph:
    """A weighted multigraph (directed=False) or multidigraph (directed=True).

    ``edges`` keeps insertion order; the multiplicity index of a parallel
    edge is its position among edges with the same endpoint pair.
    """

    n: int
    directed: bool
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        normalized = []
        for e in self.edges:
            tail, head, weight = e
            if not (1 <= tail <= self.n and 1 <= head <= self.n):
                raise GraphError(f"edge endpoints ({tail}, {head}) outside 1..{self.n}")
            weight = float(weight)
            if not weight > 0.0 or not np.isfinite(weight):
                raise GraphError(f"edge ({tail}, {head}) has nonpositive weight {weight}")
            normalized.append(Edge(int(tail), int(head), weight))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        """Greatest number of parallel edges (arcs) on any vertex pair; >= 1."""
        counts: dict[tuple[int, int], int] = {}
        for tail, head, _ in self.edges:
            if tail == head:
                continue
            key = (tail, head) if self.directed else (min(tail, head), max(tail, head))
            counts[key] = counts.get(key, 0) + 1
        return max(counts.values(), default=1)

    @property
    def max_weight(self) -> float:
        return max((e.weight for e in self.edges), default=0.0)

    def neighbors(self, v: int):
        """(edge index, other endpoint, weight) triples leaving v.

        For undirected graphs each non-loop edge is traversable from both
        endpoints; a loop is reported once.
        """
        out = []
        for idx, (tail, head, weight) in enumerate(self.edges):
            if tail == v:
                out.append((idx, head, weight))
            elif not self.directed and head == v:
                out.append((idx, tail, weight))
        return out


def undirected(n: int, edges: Sequence[tuple[int, int, float]]) -> WeightedMultigraph:
    return WeightedMultigraph(n, False, tuple(Edge(*e) for e in edges))


def directed(n: int, arcs: Sequence[tuple[int, int, float]]) -> WeightedMultigraph:
    return WeightedMultigraph(n, True, tuple(Edge(*e) for e in arcs))


def build_weight_matrix(g: WeightedMultigraph) -> np.ndarray:
    """n x n matrix of total parallel edge/arc weights between vertex pairs."""
    E = np.zeros((g.n, g.n))
    for tail, head, weight in g.edges:
        E[tail - 1, head - 1] += weight
        if not g.directed and tail != head:
            E[head - 1, tail - 1] += weight
    return E


def build_laplacian(g: WeightedMultigraph) -> np.ndarray:
    """Laplacian of an undirected multigraph; loops contribute nothing."""
    if g.directed:
        raise GraphError("the Laplacian matrix is defined for undirected multigraphs only")
    E = build_weight_matrix(g)
    np.fill_diagonal(E, 0.0)
    return np.diag(E.sum(axis=1)) - E


def components(g: WeightedMultigraph) -> list[list[int]]:
    """Vertex sets of connected components (undirected connectivity), each sorted.

    Components are ordered by their smallest vertex. Arc directions are
    ignored for digraphs.
    """
    adjacency: list[list[int]] = [[] for _ in range(g.n + 1)]
    for tail, head, _ in g.edges:
        adjacency[tail].append(head)
        adjacency[head].append(tail)
    seen = [False] * (g.n + 1)
    parts = []
    for start in range(1, g.n + 1):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        parts.append(sorted(comp))
    return parts


def build_jbar(parts: list[list[int]], n: int | None = None) -> np.ndarray:
    """Per-component averaging matrix: 1/|V_i| inside a component, 0 outside."""
    if n is None:
        n = sum(len(p) for p in parts)
    jbar = np.zeros((n, n))
    for part in parts:
        idx = np.asarray(part) - 1
        jbar[np.ix_(idx, idx)] = 1.0 / len(part)
    return jbar


def scale_weights(g: WeightedMultigraph, tau: float) -> WeightedMultigraph:
    """Multiply every edge/arc weight by tau > 0; structure is unchanged."""
    if not tau > 0:
        raise GraphError(f"scale factor must be positive, got {tau}")
    return replace(g, edges=tuple(Edge(t, h, w * tau) for t, h, w in g.edges))


def reverse(g: WeightedMultigraph) -> WeightedMultigraph:
    """Reverse every arc, preserving weights. Identity on undirected graphs."""
    if not g.directed:
        return g
    return replace(g, edges=tuple(Edge(h, t, w) for t, h, w in g.edges))


def symmetrize(g: WeightedMultigraph) -> WeightedMultigraph:
    """Undirected multigraph with the same weight matrix as a symmetric digraph.

    Each unordered pair with total arc weight w in both directions becomes a
    single undirected edge of weight w; loops carry over as loops.
    """
    if not g.directed:
        raise GraphError("symmetrize expects a directed graph")
    E = build_weight_matrix(g)
    asym = np.max(np.abs(E - E.T))
    if asym > 0.0:
        raise GraphError(f"weight matrix is not symmetric (max |E - E^T| = {asym:g})")
    edges = []
    for i in range(1, g.n + 1):
        for j in range(i, g.n + 1):
            if E[i - 1, j - 1] > 0.0:
                edges.append(Edge(i, j, E[i - 1, j - 1]))
    return WeightedMultigraph(g.n, False, tuple(edges))
