"""Mechanical checkers for the normative proximity properties.

Every checker takes a measure (by name or spec) and a graph and returns a
PropertyReport: a verdict, the numeric margin that decided it, and - on
violation - a witness that can be replayed standalone. Strict inequalities
demand a margin above 1e-12; equalities tolerate 1e-10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .forests import dense_forest_accessibility, default_alpha, forest_accessibility, laplacian_pinv
from .graph import Edge, WeightedMultigraph, build_weight_matrix, components, reverse
from .oracles import enum_simple_paths
from .paths import connection_reliability, path_accessibility
from .proximity import ProximityMatrix
from .routes import route_accessibility

STRICT_MARGIN = 1e-12
EQ_TOL = 1e-10

HOLDS = "holds"
HOLDS_NONSTRICT = "holds-nonstrict"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"


# ---------------------------------------------------------------------------
# measures under test

@dataclass(frozen=True)
class MeasureSpec:
    name: str
    undirected_only: bool
    compute: Callable[[WeightedMultigraph], ProximityMatrix]
    # matrices to difference for monotonicity checks; the dense-forest
    # measure is compared through L^+ so that the alpha^{-1} Jbar offset
    # (which depends on the component structure) drops out
    delta_values: Callable[[WeightedMultigraph], np.ndarray] | None = None

    def values(self, g: WeightedMultigraph) -> np.ndarray:
        return self.compute(g).values

    def perturbation_values(self, g: WeightedMultigraph) -> np.ndarray:
        if self.delta_values is not None:
            return self.delta_values(g)
        return self.values(g)


MEASURES: dict[str, MeasureSpec] = {
    "paths": MeasureSpec("paths", False, path_accessibility),
    "reliability": MeasureSpec("reliability", False, connection_reliability),
    "routes": MeasureSpec("routes", False, route_accessibility),
    "forests": MeasureSpec("forests", True, forest_accessibility),
    "dense-forests": MeasureSpec(
        "dense-forests", True,
        lambda g: dense_forest_accessibility(g, default_alpha(g)),
        delta_values=laplacian_pinv,
    ),
}


def measure_spec(measure: str | MeasureSpec) -> MeasureSpec:
    if isinstance(measure, MeasureSpec):
        return measure
    try:
        return MEASURES[measure]
    except KeyError:
        raise KeyError(f"unknown measure {measure!r}; choose from {sorted(MEASURES)}") from None


# ---------------------------------------------------------------------------
# reports and witnesses

@dataclass(frozen=True)
class Perturbation:
    """A positive weight increment on pair (k, t): either on an existing
    parallel edge (edge_index) or as a brand-new edge/arc."""

    kind: str  # "increase-weight" | "add-edge"
    k: int
    t: int
    delta: float
    edge_index: int | None = None

    def __post_init__(self):
        if self.kind not in ("increase-weight", "add-edge"):
            raise ValueError(f"unknown perturbation kind {self.kind!r}")
        if not self.delta > 0:
            raise ValueError("perturbation increment must be positive")

    def describe(self) -> str:
        if self.kind == "add-edge":
            return f"add-edge k={self.k} t={self.t} delta={self.delta:g}"
        return (f"increase-weight k={self.k} t={self.t} delta={self.delta:g}"
                f" edge={self.edge_index}")


def apply_perturbation(g: WeightedMultigraph, pert: Perturbation) -> WeightedMultigraph:
    if pert.kind == "add-edge":
        return replace(g, edges=g.edges + (Edge(pert.k, pert.t, pert.delta),))
    e = g.edges[pert.edge_index]
    if {e.tail, e.head} != {pert.k, pert.t} and (e.tail, e.head) != (pert.k, pert.t):
        raise ValueError(f"edge {pert.edge_index} does not join {pert.k} and {pert.t}")
    edges = list(g.edges)
    edges[pert.edge_index] = Edge(e.tail, e.head, e.weight + pert.delta)
    return replace(g, edges=tuple(edges))


@dataclass(frozen=True)
class Witness:
    vertices: tuple[int, ...]
    margin: float
    perturbation: Perturbation | None = None
    note: str = ""

    def describe(self) -> str:
        parts = [f"vertices={','.join(map(str, self.vertices))}"]
        if self.perturbation is not None:
            parts.append(self.perturbation.describe())
        if self.note:
            parts.append(self.note)
        return " ".join(parts)


@dataclass(frozen=True)
class PropertyReport:
    measure: str
    prop: str
    verdict: str
    margin: float
    tolerance: float
    witness: Witness | None = None

    @property
    def ok(self) -> bool:
        return self.verdict in (HOLDS, HOLDS_NONSTRICT, NOT_APPLICABLE)

    def line(self) -> str:
        text = f"{self.measure} {self.prop} {self.verdict} {self.margin:.6g}"
        if self.witness is not None:
            text += " " + self.witness.describe()
        return text


def serialize_reports(reports: list[PropertyReport]) -> str:
    return "\n".join(r.line() for r in reports)


def _strict_report(measure, prop, margin, witness=None) -> PropertyReport:
    """Three-way verdict for a strict inequality with margin floor 1e-12."""
    if margin > STRICT_MARGIN:
        verdict = HOLDS
    elif margin >= -STRICT_MARGIN:
        verdict = HOLDS_NONSTRICT
    else:
        verdict = VIOLATED
    return PropertyReport(measure, prop, verdict, float(margin), STRICT_MARGIN,
                          witness if verdict == VIOLATED else None)


def _na(measure, prop, note="") -> PropertyReport:
    return PropertyReport(measure, prop, NOT_APPLICABLE, math.nan, math.nan,
                          Witness((), math.nan, note=note) if note else None)


# ---------------------------------------------------------------------------
# per-property checkers

def check_symmetry(measure, g: WeightedMultigraph, p: np.ndarray | None = None) -> PropertyReport:
    spec = measure_spec(measure)
    if g.directed:
        return _na(spec.name, "symmetry", "directed input")
    P = spec.values(g) if p is None else p
    gap = np.abs(P - P.T)
    margin = float(gap.max(initial=0.0))
    i, j = np.unravel_index(int(np.argmax(gap)), gap.shape)
    verdict = HOLDS if margin <= EQ_TOL else VIOLATED
    witness = Witness((i + 1, j + 1), margin) if verdict == VIOLATED else None
    return PropertyReport(spec.name, "symmetry", verdict, margin, EQ_TOL, witness)


def check_nonnegativity(measure, g: WeightedMultigraph, p: np.ndarray | None = None) -> PropertyReport:
    spec = measure_spec(measure)
    if g.directed and spec.undirected_only:
        return _na(spec.name, "nonnegativity", "measure is undirected-only")
    P = spec.values(g) if p is None else p
    margin = float(P.min())
    i, j = np.unravel_index(int(np.argmin(P)), P.shape)
    verdict = HOLDS if margin >= -STRICT_MARGIN else VIOLATED
    witness = Witness((i + 1, j + 1), margin) if verdict == VIOLATED else None
    return PropertyReport(spec.name, "nonnegativity", verdict, margin, STRICT_MARGIN, witness)


def check_reversal(measure, g: WeightedMultigraph, p: np.ndarray | None = None) -> PropertyReport:
    spec = measure_spec(measure)
    if spec.undirected_only:
        return _na(spec.name, "reversal", "measure is undirected-only")
    if not g.directed:
        return _na(spec.name, "reversal", "undirected input")
    P = spec.values(g) if p is None else p
    Pr = spec.values(reverse(g))
    gap = np.abs(Pr - P.T)
    margin = float(gap.max(initial=0.0))
    i, j = np.unravel_index(int(np.argmax(gap)), gap.shape)
    verdict = HOLDS if margin <= EQ_TOL else VIOLATED
    witness = Witness((i + 1, j + 1), margin) if verdict == VIOLATED else None
    return PropertyReport(spec.name, "reversal", verdict, margin, EQ_TOL, witness)


def check_diagonal_maximality(measure, g: WeightedMultigraph,
                              p: np.ndarray | None = None) -> PropertyReport:
    spec = measure_spec(measure)
    if g.directed and spec.undirected_only:
        return _na(spec.name, "diagonal-maximality", "measure is undirected-only")
    P = spec.values(g) if p is None else p
    margin = math.inf
    worst = (1, 1)
    for i in range(g.n):
        for j in range(g.n):
            if i == j:
                continue
            gap = min(P[i, i] - P[i, j], P[i, i] - P[j, i])
            if gap < margin:
                margin, worst = gap, (i + 1, j + 1)
    if g.n == 1:
        return PropertyReport(spec.name, "diagonal-maximality", HOLDS, math.inf, STRICT_MARGIN)
    return _strict_report(spec.name, "diagonal-maximality", margin, Witness(worst, margin))


def check_triangle_proximity(measure, g: WeightedMultigraph,
                             p: np.ndarray | None = None) -> PropertyReport:
    """p_ij + p_ik - p_jk <= p_ii for all triples, strict when j = k != i."""
    spec = measure_spec(measure)
    if g.directed:
        return _na(spec.name, "triangle", "undirected statement only")
    P = spec.values(g) if p is None else p
    nonstrict = math.inf
    strict = math.inf
    worst = (1, 1, 1)
    worst_strict = None
    for i in range(g.n):
        for j in range(g.n):
            for k in range(g.n):
                gap = P[i, i] - (P[i, j] + P[i, k] - P[j, k])
                if gap < nonstrict:
                    nonstrict, worst = gap, (i + 1, j + 1, k + 1)
                if j == k and i != j and gap < strict:
                    strict, worst_strict = gap, (i + 1, j + 1, k + 1)
    if nonstrict < -STRICT_MARGIN:
        return PropertyReport(spec.name, "triangle", VIOLATED, float(nonstrict),
                              STRICT_MARGIN, Witness(worst, float(nonstrict)))
    if strict <= STRICT_MARGIN and worst_strict is not None:
        return PropertyReport(spec.name, "triangle", HOLDS_NONSTRICT, float(strict),
                              STRICT_MARGIN)
    return PropertyReport(spec.name, "triangle", HOLDS, float(min(nonstrict, strict)),
                          STRICT_MARGIN)


def metric_transform(p: ProximityMatrix | np.ndarray) -> np.ndarray:
    """Distance candidate d_ij = p_ii + p_jj - p_ij - p_ji."""
    P = p.values if isinstance(p, ProximityMatrix) else np.asarray(p, dtype=float)
    d = np.diag(P)
    return d[:, None] + d[None, :] - P - P.T


def check_metric_axioms(D: np.ndarray, parts: list[list[int]],
                        measure: str = "metric") -> PropertyReport:
    """Nonnegativity, zero diagonal, identity of indiscernibles within
    components, symmetry, and the triangle inequality, all exhaustively."""
    n = D.shape[0]
    label = np.empty(n, dtype=int)
    for c, part in enumerate(parts):
        for v in part:
            label[v - 1] = c
    failures: list[tuple[float, Witness]] = []
    margin = math.inf

    def record(value, tol, vertices, note):
        nonlocal margin
        margin = min(margin, value)
        if value < -tol:
            failures.append((value, Witness(vertices, float(value), note=note)))

    record(float(-np.abs(D - D.T).max(initial=0.0)), EQ_TOL, (), "symmetry")
    record(float(-np.abs(np.diag(D)).max(initial=0.0)), EQ_TOL, (), "zero diagonal")
    record(float(D.min()), STRICT_MARGIN,
           tuple(int(x) + 1 for x in np.unravel_index(int(np.argmin(D)), D.shape)),
           "nonnegativity")
    for i in range(n):
        for j in range(n):
            if i != j and label[i] == label[j]:
                record(float(D[i, j]) - STRICT_MARGIN, 0.0, (i + 1, j + 1),
                       "identity of indiscernibles")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                record(float(D[i, j] + D[j, k] - D[i, k]), EQ_TOL,
                       (i + 1, j + 1, k + 1), "triangle")
    if failures:
        worst = min(failures, key=lambda f: f[0])
        return PropertyReport(measure, "metric", VIOLATED, worst[0], EQ_TOL, worst[1])
    return PropertyReport(measure, "metric", HOLDS, float(margin), EQ_TOL)


def check_metric_representability(measure, g: WeightedMultigraph,
                                  p: np.ndarray | None = None) -> PropertyReport:
    spec = measure_spec(measure)
    if g.directed:
        return _na(spec.name, "metric", "undirected statement only")
    P = spec.values(g) if p is None else p
    report = check_metric_axioms(metric_transform(P), components(g), spec.name)
    return report


def reachability(g: WeightedMultigraph) -> np.ndarray:
    """Boolean matrix: r_ij true iff a path (directed, if applicable) runs
    from i to j. Diagonal true via the length-0 path."""
    adj: list[set[int]] = [set() for _ in range(g.n + 1)]
    for tail, head, _ in g.edges:
        adj[tail].add(head)
        if not g.directed:
            adj[head].add(tail)
    out = np.zeros((g.n, g.n), dtype=bool)
    for s in range(1, g.n + 1):
        seen = {s}
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        for v in seen:
            out[s - 1, v - 1] = True
    return out


def check_disconnection(measure, g: WeightedMultigraph,
                        p: np.ndarray | None = None) -> PropertyReport:
    """p_ij = 0 exactly when no path runs from i to j."""
    spec = measure_spec(measure)
    if g.directed and spec.undirected_only:
        return _na(spec.name, "disconnection", "measure is undirected-only")
    P = spec.values(g) if p is None else p
    reach = reachability(g)
    margin = math.inf
    worst = None
    for i in range(g.n):
        for j in range(g.n):
            value = P[i, j] - STRICT_MARGIN if reach[i, j] else -abs(P[i, j])
            if value < margin:
                margin, worst = value, (i + 1, j + 1)
    verdict = HOLDS if margin >= -STRICT_MARGIN else VIOLATED
    witness = Witness(worst, float(margin)) if verdict == VIOLATED else None
    return PropertyReport(spec.name, "disconnection", verdict, float(margin),
                          STRICT_MARGIN, witness)


def check_connectivity(measure, g: WeightedMultigraph,
                       p: np.ndarray | None = None) -> PropertyReport:
    """Block-diagonal positivity per component (undirected) and transitivity
    of positivity: p_ij > 0 and p_jk > 0 imply p_ik > 0."""
    spec = measure_spec(measure)
    if g.directed and spec.undirected_only:
        return _na(spec.name, "connectivity", "measure is undirected-only")
    P = spec.values(g) if p is None else p
    margin = math.inf
    worst = None
    if not g.directed:
        label = np.empty(g.n, dtype=int)
        for c, part in enumerate(components(g)):
            for v in part:
                label[v - 1] = c
        for i in range(g.n):
            for j in range(g.n):
                same = label[i] == label[j]
                value = P[i, j] - STRICT_MARGIN if same else -abs(P[i, j])
                if value < margin:
                    margin, worst = value, (i + 1, j + 1)
    positive = P > STRICT_MARGIN
    closure_gap = positive @ positive & ~positive
    if closure_gap.any():
        i, k = map(int, np.argwhere(closure_gap)[0])
        return PropertyReport(spec.name, "connectivity", VIOLATED, float(P[i, k]),
                              STRICT_MARGIN, Witness((i + 1, k + 1), float(P[i, k]),
                                                     note="positivity not transitive"))
    verdict = HOLDS if margin >= -STRICT_MARGIN else VIOLATED
    witness = Witness(worst, float(margin)) if verdict == VIOLATED else None
    return PropertyReport(spec.name, "connectivity", verdict, float(margin),
                          STRICT_MARGIN, witness)


def transit_triples(g: WeightedMultigraph) -> list[tuple[int, int, int]]:
    """All (i, k, t), pairwise distinct, where a path i->k exists and every
    path i->t passes through k. Found by exhaustive path enumeration."""
    triples = []
    for i in range(1, g.n + 1):
        for t in range(1, g.n + 1):
            if t == i:
                continue
            paths = enum_simple_paths(g, i, t)
            if not paths:
                continue
            common = set(paths[0].vertices[1:-1])
            for path in paths[1:]:
                if not common:
                    break
                common &= set(path.vertices[1:-1])
            for k in sorted(common):
                triples.append((i, k, t))
    return triples


def check_transit(measure, g: WeightedMultigraph,
                  p: np.ndarray | None = None) -> PropertyReport:
    spec = measure_spec(measure)
    if g.directed and spec.undirected_only:
        return _na(spec.name, "transit", "measure is undirected-only")
    triples = transit_triples(g)
    if not triples:
        return PropertyReport(spec.name, "transit", HOLDS, math.inf, STRICT_MARGIN)
    P = spec.values(g) if p is None else p
    margin = math.inf
    worst = triples[0]
    for i, k, t in triples:
        gap = P[i - 1, k - 1] - P[i - 1, t - 1]
        if gap < margin:
            margin, worst = gap, (i, k, t)
    return _strict_report(spec.name, "transit", margin, Witness(worst, float(margin)))


def _item2_vertices(g2: WeightedMultigraph, k: int, t: int) -> list[int]:
    """Vertices i (distinct from k, t) with a path i->k in the perturbed
    graph whose every path i->t passes through k."""
    out = []
    for i in range(1, g2.n + 1):
        if i in (k, t):
            continue
        if not enum_simple_paths(g2, i, k):
            continue
        paths_it = enum_simple_paths(g2, i, t)
        if paths_it and all(k in path.vertices for path in paths_it):
            out.append(i)
    return out


def _bond_extraneous(g2: WeightedMultigraph, a: int, b: int, k: int, t: int) -> bool:
    """True when no simple path from a to b (simple cycle through a, when
    a == b) traverses an edge joining k and t.

    The two-sided hypothesis of monotonicity item 3 already forces this for
    distinct a, b; for a == b on a digraph a cycle through a may still use
    the strengthened arc (and then the bond is not extraneous to the pair's
    own connection, so the item makes no claim about it).
    """
    for path in enum_simple_paths(g2, a, b):
        for idx in path.edge_indices:
            e = g2.edges[idx]
            if g2.directed:
                if (e.tail, e.head) == (k, t):
                    return False
            elif {e.tail, e.head} == {k, t}:
                return False
    return True


def check_monotonicity(measure, g: WeightedMultigraph,
                       pert: Perturbation) -> list[PropertyReport]:
    """Items 1-3 of monotonicity under one weight increment.

    Item 1: delta p_kt > 0 and exceeds every other delta p_ij.
    Item 2: delta p_it > delta p_ik for vertices i whose every path to t
    runs through k. Item 3: delta p_{i1 i2} <= 0 for i1, i2 drawn from the
    item-2 hypothesis set (repeats allowed).
    """
    spec = measure_spec(measure)
    props = ["monotonicity-1", "monotonicity-2", "monotonicity-3"]
    if g.directed and spec.undirected_only:
        return [_na(spec.name, prop, "measure is undirected-only") for prop in props]
    g2 = apply_perturbation(g, pert)
    before = spec.perturbation_values(g)
    after = spec.perturbation_values(g2)
    D = after - before
    k, t = pert.k, pert.t
    reports = []

    # item 1
    dkt = D[k - 1, t - 1]
    margin = dkt
    worst = (k, t)
    for i in range(1, g.n + 1):
        for j in range(1, g.n + 1):
            if g.directed:
                skip = (i, j) == (k, t)
            else:
                skip = {i, j} == {k, t}
            if skip:
                continue
            gap = dkt - D[i - 1, j - 1]
            if gap < margin:
                margin, worst = gap, (i, j)
    reports.append(_strict_report(
        spec.name, "monotonicity-1", margin, Witness(worst, float(margin), pert)))

    # item 2
    hyp = _item2_vertices(g2, k, t)
    if not hyp:
        reports.append(PropertyReport(spec.name, "monotonicity-2", HOLDS,
                                      math.inf, STRICT_MARGIN))
    else:
        margin = math.inf
        worst = (hyp[0],)
        for i in hyp:
            gap = D[i - 1, t - 1] - D[i - 1, k - 1]
            if gap < margin:
                margin, worst = gap, (i,)
        reports.append(_strict_report(
            spec.name, "monotonicity-2", margin, Witness(worst, float(margin), pert)))

    # item 3 (nonstrict by statement: the proximity does not increase)
    pairs = [(i1, i2) for i1 in hyp for i2 in hyp
             if _bond_extraneous(g2, i1, i2, k, t)]
    if not pairs:
        reports.append(PropertyReport(spec.name, "monotonicity-3", HOLDS,
                                      math.inf, STRICT_MARGIN))
    else:
        margin = math.inf
        worst = pairs[0]
        for i1, i2 in pairs:
            gap = -D[i1 - 1, i2 - 1]
            if gap < margin:
                margin, worst = gap, (i1, i2)
        verdict = HOLDS if margin >= -STRICT_MARGIN else VIOLATED
        witness = Witness(worst, float(margin), pert) if verdict == VIOLATED else None
        reports.append(PropertyReport(spec.name, "monotonicity-3", verdict,
                                      float(margin), STRICT_MARGIN, witness))
    return reports


def check_doubly_stochastic(p: ProximityMatrix | np.ndarray,
                            measure: str = "forests") -> PropertyReport:
    P = p.values if isinstance(p, ProximityMatrix) else np.asarray(p, dtype=float)
    row_gap = float(np.abs(P.sum(axis=1) - 1.0).max(initial=0.0))
    col_gap = float(np.abs(P.sum(axis=0) - 1.0).max(initial=0.0))
    neg = float(P.min(initial=0.0))
    margin = min(-row_gap, -col_gap, neg)
    ok = row_gap <= EQ_TOL and col_gap <= EQ_TOL and neg >= -STRICT_MARGIN
    witness = None if ok else Witness((), margin, note="row/column sums or sign")
    return PropertyReport(measure, "doubly-stochastic", HOLDS if ok else VIOLATED,
                          margin, EQ_TOL, witness)


def validate_macrovertex(g: WeightedMultigraph, D: set[int]) -> None:
    """D is a macrovertex iff all its members carry equal total weight to
    every outside vertex."""
    if not D or not D <= set(range(1, g.n + 1)):
        raise ValueError(f"macrovertex set {sorted(D)} outside 1..{g.n}")
    E = build_weight_matrix(g)
    members = sorted(D)
    for k in range(1, g.n + 1):
        if k in D:
            continue
        ref = E[members[0] - 1, k - 1]
        for i in members[1:]:
            if abs(E[i - 1, k - 1] - ref) > STRICT_MARGIN:
                raise ValueError(
                    f"{sorted(D)} is not a macrovertex: eps({i},{k}) != eps({members[0]},{k})")


def check_macrovertex(measure, g: WeightedMultigraph, D: set[int]) -> PropertyReport:
    """Equal proximity from every macrovertex member to each outsider, and
    stability of those proximities under intra-D edits."""
    spec = measure_spec(measure)
    if g.directed:
        return _na(spec.name, "macrovertex", "undirected statement only")
    validate_macrovertex(g, D)
    members = sorted(D)
    outsiders = [v for v in range(1, g.n + 1) if v not in D]
    P = spec.values(g)

    def spread(values: np.ndarray) -> tuple[float, tuple[int, ...]]:
        worst, at = 0.0, ()
        for k in outsiders:
            col = [values[i - 1, k - 1] for i in members]
            gap = max(col) - min(col)
            if gap > worst:
                worst, at = gap, (members[0], k)
        return worst, at

    margin, worst_at = spread(P)
    # intra-D stability: add one edge inside D and reweight another if present
    if len(members) >= 2:
        edits = [replace(g, edges=g.edges + (Edge(members[0], members[1], 0.5),))]
        intra = [idx for idx, e in enumerate(g.edges)
                 if e.tail in D and e.head in D and e.tail != e.head]
        if intra:
            edges = list(g.edges)
            e = edges[intra[0]]
            edges[intra[0]] = Edge(e.tail, e.head, e.weight * 1.5)
            edits.append(replace(g, edges=tuple(edges)))
        for edited in edits:
            P2 = spec.values(edited)
            for k in outsiders:
                for i in members:
                    gap = abs(P2[i - 1, k - 1] - P[i - 1, k - 1])
                    if gap > margin:
                        margin, worst_at = gap, (i, k)
    verdict = HOLDS if margin <= STRICT_MARGIN else VIOLATED
    witness = Witness(worst_at, float(margin)) if verdict == VIOLATED else None
    return PropertyReport(spec.name, "macrovertex", verdict, float(margin),
                          STRICT_MARGIN, witness)


# ---------------------------------------------------------------------------
# witness replay

def replay_witness(measure, g: WeightedMultigraph, report: PropertyReport) -> float:
    """Recompute the margin a violated report's witness refers to.

    A faithful witness reproduces a margin of the same sign as the report.
    """
    spec = measure_spec(measure)
    w = report.witness
    if w is None:
        raise ValueError("report carries no witness")
    if report.prop.startswith("monotonicity"):
        g2 = apply_perturbation(g, w.perturbation)
        D = spec.perturbation_values(g2) - spec.perturbation_values(g)
        k, t = w.perturbation.k, w.perturbation.t
        if report.prop == "monotonicity-1":
            i, j = w.vertices
            if (i, j) == (k, t):
                return float(D[k - 1, t - 1])
            return float(D[k - 1, t - 1] - D[i - 1, j - 1])
        if report.prop == "monotonicity-2":
            (i,) = w.vertices
            return float(D[i - 1, t - 1] - D[i - 1, k - 1])
        i1, i2 = w.vertices
        return float(-D[i1 - 1, i2 - 1])
    P = spec.values(g)
    if report.prop == "symmetry":
        i, j = w.vertices
        return float(-abs(P[i - 1, j - 1] - P[j - 1, i - 1]))
    if report.prop == "nonnegativity":
        i, j = w.vertices
        return float(P[i - 1, j - 1])
    if report.prop == "diagonal-maximality":
        i, j = w.vertices
        return float(min(P[i - 1, i - 1] - P[i - 1, j - 1],
                         P[i - 1, i - 1] - P[j - 1, i - 1]))
    if report.prop == "triangle":
        i, j, k = w.vertices
        return float(P[i - 1, i - 1] - (P[i - 1, j - 1] + P[i - 1, k - 1] - P[j - 1, k - 1]))
    if report.prop == "transit":
        i, k, t = w.vertices
        return float(P[i - 1, k - 1] - P[i - 1, t - 1])
    if report.prop in ("disconnection", "connectivity"):
        i, j = w.vertices
        reach = reachability(g)[i - 1, j - 1]
        return float(P[i - 1, j - 1] - STRICT_MARGIN if reach else -abs(P[i - 1, j - 1]))
    raise ValueError(f"no replay rule for property {report.prop!r}")
