"""Frozen example graphs and their golden proximity orderings.

Three small unweighted topologies, lifted by a constant edge weight chosen
inside every measure's admissible regime, separate the five measures:

* example 1 - a star i-k, i-t, i-u with an extra edge u-t. The path, route,
  and reliability measures prefer t (two routes), while both forest
  measures treat {k, t, u} as a macrovertex and rate them identically.
* example 2 - i is joined to k by two vertex-disjoint 3-edge paths and to t
  by two 3-edge paths sharing their first edge. Path totals tie; the shared
  edge hurts reliability and both forest measures; route accessibility
  rewards the t side.
* example 3 - pendant edges i-k and i-t plus a 3-cycle hanging off t. The
  cycle is invisible to paths and reliability, feeds extra routes into t,
  and dilutes t's forest share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .axioms import EQ_TOL, STRICT_MARGIN, MEASURES
from .forests import edge_perturbation_deltas
from .graph import WeightedMultigraph, scale_weights, undirected


@dataclass(frozen=True)
class FigureExample:
    name: str
    graph: WeightedMultigraph  # unit weights
    lift: float                # constant weight within every regime
    i: int
    k: int
    t: int
    u: int | None = None


EXAMPLE1 = FigureExample(
    "example-1",
    undirected(4, [(1, 2, 1.0), (1, 3, 1.0), (1, 4, 1.0), (4, 3, 1.0)]),
    lift=0.25, i=1, k=2, t=3, u=4)

EXAMPLE2 = FigureExample(
    "example-2",
    undirected(10, [(1, 2, 1.0), (2, 3, 1.0), (3, 5, 1.0), (2, 4, 1.0), (4, 5, 1.0),
                    (1, 6, 1.0), (6, 7, 1.0), (7, 10, 1.0),
                    (1, 8, 1.0), (8, 9, 1.0), (9, 10, 1.0)]),
    lift=0.1, i=1, k=10, t=5)

EXAMPLE3 = FigureExample(
    "example-3",
    undirected(5, [(1, 2, 1.0), (1, 3, 1.0), (3, 4, 1.0), (4, 5, 1.0), (5, 3, 1.0)]),
    lift=0.2, i=1, k=2, t=3)

EXAMPLES = (EXAMPLE1, EXAMPLE2, EXAMPLE3)

# (example, measure, lhs pair, relation, rhs pair); pairs name (row, column)
# attributes of the example
ORDERINGS = [
    ("example-1", "paths", ("i", "k"), "<", ("i", "t")),
    ("example-1", "reliability", ("i", "k"), "<", ("i", "t")),
    ("example-1", "routes", ("i", "k"), "<", ("i", "t")),
    ("example-1", "forests", ("i", "k"), "==", ("i", "t")),
    ("example-1", "forests", ("i", "t"), "==", ("i", "u")),
    ("example-1", "dense-forests", ("i", "k"), "==", ("i", "t")),
    ("example-1", "dense-forests", ("i", "t"), "==", ("i", "u")),
    ("example-2", "paths", ("i", "k"), "==", ("i", "t")),
    ("example-2", "reliability", ("i", "k"), ">", ("i", "t")),
    ("example-2", "routes", ("i", "k"), "<", ("i", "t")),
    ("example-2", "forests", ("i", "k"), ">", ("i", "t")),
    ("example-2", "dense-forests", ("i", "k"), ">", ("i", "t")),
    ("example-3", "paths", ("i", "t"), "==", ("i", "k")),
    ("example-3", "reliability", ("i", "t"), "==", ("i", "k")),
    ("example-3", "routes", ("i", "t"), ">", ("i", "k")),
    ("example-3", "forests", ("i", "t"), "<", ("i", "k")),
    ("example-3", "dense-forests", ("i", "t"), "<", ("i", "k")),
]


@dataclass(frozen=True)
class OrderingResult:
    example: str
    measure: str
    statement: str
    lhs: float
    rhs: float
    relation: str
    ok: bool

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.example} {self.measure}: {self.statement} ({self.lhs:.9g} vs {self.rhs:.9g})"


def run_figure_examples() -> list[OrderingResult]:
    """Evaluate every published ordering on the frozen example graphs."""
    results = []
    by_name = {ex.name: ex for ex in EXAMPLES}
    matrices: dict[tuple[str, str], np.ndarray] = {}
    for (example, measure, left, rel, right) in ORDERINGS:
        ex = by_name[example]
        key = (example, measure)
        if key not in matrices:
            matrices[key] = MEASURES[measure].values(scale_weights(ex.graph, ex.lift))
        P = matrices[key]
        la, lb = (getattr(ex, left[0]), getattr(ex, left[1]))
        ra, rb = (getattr(ex, right[0]), getattr(ex, right[1]))
        lhs = float(P[la - 1, lb - 1])
        rhs = float(P[ra - 1, rb - 1])
        if rel == "<":
            ok = lhs < rhs - STRICT_MARGIN
        elif rel == ">":
            ok = lhs > rhs + STRICT_MARGIN
        else:
            ok = abs(lhs - rhs) <= EQ_TOL
        statement = f"p_{left[0]}{left[1]} {rel} p_{right[0]}{right[1]}"
        results.append(OrderingResult(example, measure, statement, lhs, rhs, rel, ok))
    return results


@dataclass(frozen=True)
class DeltaResult:
    label: str
    actual: float
    expected: float

    @property
    def ok(self) -> bool:
        return abs(self.actual - self.expected) <= 1e-12

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.label}: {self.actual:.15g} (expected {self.expected:.15g})"


def appendix_delta_checks() -> list[DeltaResult]:
    """Dense-forest monotonicity counterexample: three vertices, edge (1,2)
    of weight 1, then edge (1,3) of weight 1 added. The L+ increments are
    exact simple fractions."""
    base = undirected(3, [(1, 2, 1.0)])
    deltas = edge_perturbation_deltas(base, 1, 3, 1.0, alpha=1.0).pinv_delta
    expected = {
        (1, 3): Fraction(-1, 9),
        (1, 2): Fraction(5, 36),
        (2, 3): Fraction(-4, 9),
        (2, 2): Fraction(11, 36),
        (2, 1): Fraction(5, 36),
    }
    return [
        DeltaResult(f"delta p_{i}{j}", float(deltas[i - 1, j - 1]), float(frac))
        for (i, j), frac in expected.items()
    ]
