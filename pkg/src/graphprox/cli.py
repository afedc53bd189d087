"""Command-line front end: graph files in, matrices and reports out.

Graph files are plain text: a ``directed``/``undirected`` line, a
``vertices N`` line, then ``edge U V W`` lines (repeat a line for parallel
edges); ``#`` starts a comment. Matrix output is byte-stable: a ``#``
header echoing measure and parameters, then rows of 12-significant-digit
entries.

Exit codes: 0 success, 1 precondition/diagnostic failure, 2 parse or
usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import axioms
from .axioms import (
    MEASURES,
    Perturbation,
    check_connectivity,
    check_diagonal_maximality,
    check_disconnection,
    check_doubly_stochastic,
    check_macrovertex,
    check_metric_representability,
    check_monotonicity,
    check_nonnegativity,
    check_reversal,
    check_symmetry,
    check_transit,
    check_triangle_proximity,
    measure_spec,
    serialize_reports,
)
from .corpus import perturbation_candidates, reproduce_table1
from .figures import appendix_delta_checks, run_figure_examples
from .forests import (
    default_alpha,
    dense_forest_accessibility,
    dense_forest_threshold,
    forest_accessibility,
    laplacian_pinv,
    qk_decomposition,
)
from .graph import GraphError, WeightedMultigraph, scale_weights
from .oracles import CapExceededError
from .paths import TooManyPathsError, connection_reliability, path_accessibility
from .routes import DivergentSeriesError, check_admissibility, route_accessibility

EXIT_OK = 0
EXIT_DIAGNOSTIC = 1
EXIT_PARSE = 2


class GraphParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_graph(text: str) -> WeightedMultigraph:
    """Parse the edge-list format into a graph; errors carry line numbers."""
    directed: bool | None = None
    n: int | None = None
    edges: list[tuple[int, int, float]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        keyword = fields[0].lower()
        if keyword in ("directed", "undirected"):
            if directed is not None:
                raise GraphParseError(lineno, "direction declared twice")
            if len(fields) != 1:
                raise GraphParseError(lineno, f"unexpected tokens after {keyword!r}")
            directed = keyword == "directed"
        elif keyword == "vertices":
            if n is not None:
                raise GraphParseError(lineno, "vertex count declared twice")
            if len(fields) != 2:
                raise GraphParseError(lineno, "expected: vertices N")
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphParseError(lineno, f"vertex count {fields[1]!r} is not an integer")
            if n < 1:
                raise GraphParseError(lineno, "vertex count must be at least 1")
        elif keyword == "edge":
            if directed is None or n is None:
                raise GraphParseError(
                    lineno, "edges must come after the direction and vertices lines")
            if len(fields) != 4:
                raise GraphParseError(lineno, "expected: edge U V W")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphParseError(lineno, "edge endpoints must be integers")
            try:
                w = float(fields[3])
            except ValueError:
                raise GraphParseError(lineno, f"weight {fields[3]!r} is not a number")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(lineno, f"endpoint outside 1..{n}")
            if not w > 0:
                raise GraphParseError(lineno, "weight must be positive")
            edges.append((u, v, w))
        else:
            raise GraphParseError(lineno, f"unknown keyword {keyword!r}")
    if directed is None:
        raise GraphParseError(1, "missing 'directed' or 'undirected' line")
    if n is None:
        raise GraphParseError(1, "missing 'vertices N' line")
    try:
        return WeightedMultigraph(n, directed, tuple(edges))
    except GraphError as exc:
        raise GraphParseError(1, str(exc))


def serialize_graph(g: WeightedMultigraph) -> str:
    lines = ["directed" if g.directed else "undirected", f"vertices {g.n}"]
    lines += [f"edge {e.tail} {e.head} {e.weight!r}" for e in g.edges]
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> WeightedMultigraph:
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read())


def format_matrix(values: np.ndarray) -> str:
    return "\n".join(" ".join(f"{v:.12g}" for v in row) for row in values)


MEASURE_CHOICES = ["paths", "reliability", "routes", "forests", "dense-forests",
                   "laplacian-pinv", "qk"]


def _cmd_compute(args) -> int:
    g = load_graph(args.graph)
    if args.scale is not None:
        g = scale_weights(g, args.scale)
    header = [f"measure={args.measure}"]
    if args.measure == "paths":
        result = path_accessibility(g)
        header.append(f"epsilon0={result.params['epsilon0']:.12g}")
        header.append(f"weights_below_epsilon0={str(result.params['weights_below_epsilon0']).lower()}")
        values = result.values
    elif args.measure == "reliability":
        values = connection_reliability(g).values
    elif args.measure == "routes":
        result = route_accessibility(g)
        header.append(f"spectral_radius={result.params['spectral_radius']:.12g}")
        values = result.values
    elif args.measure == "forests":
        result = forest_accessibility(g, args.tau)
        header.append(f"tau={args.tau:.12g}")
        values = result.values
    elif args.measure == "dense-forests":
        alpha = args.alpha if args.alpha is not None else default_alpha(g)
        result = dense_forest_accessibility(g, alpha)
        header.append(f"alpha={alpha:.12g}")
        header.append(f"threshold={result.params['threshold']:.12g}")
        values = result.values
    elif args.measure == "laplacian-pinv":
        values = laplacian_pinv(g)
    else:  # qk
        stack = qk_decomposition(g)
        header.append(f"k_max={stack.max_edges}")
        print("# " + " ".join(header))
        for k in range(stack.max_edges + 1):
            print(f"# Q_{k} forest_total={stack.forest_totals[k]:.12g}")
            print(format_matrix(stack.matrices[k]))
        return EXIT_OK
    print("# " + " ".join(header))
    if args.format == "report":
        for line in check_admissibility(g).describe().splitlines():
            print("# " + line)
    print(format_matrix(values))
    return EXIT_OK


PROPERTY_CHECKS = {
    "symmetry": check_symmetry,
    "nonnegativity": check_nonnegativity,
    "reversal": check_reversal,
    "diagonal-maximality": check_diagonal_maximality,
    "triangle": check_triangle_proximity,
    "metric": check_metric_representability,
    "disconnection": check_disconnection,
    "connectivity": check_connectivity,
    "transit": check_transit,
}


def _cmd_check(args) -> int:
    g = load_graph(args.graph)
    if args.scale is not None:
        g = scale_weights(g, args.scale)
    measure = args.measure
    if measure not in MEASURES:
        print(f"unknown measure {measure!r}; choose from {sorted(MEASURES)}", file=sys.stderr)
        return EXIT_PARSE
    names = args.properties or ["all"]
    if names == ["all"]:
        names = list(PROPERTY_CHECKS) + ["doubly-stochastic", "monotonicity"]
    reports = []
    rng = np.random.default_rng(args.seed)
    for name in names:
        if name in PROPERTY_CHECKS:
            reports.append(PROPERTY_CHECKS[name](measure, g))
        elif name == "doubly-stochastic":
            spec = measure_spec(measure)
            if g.directed and spec.undirected_only:
                reports.append(axioms.PropertyReport(
                    measure, "doubly-stochastic", axioms.NOT_APPLICABLE,
                    float("nan"), float("nan")))
            else:
                reports.append(check_doubly_stochastic(spec.compute(g), measure))
        elif name == "monotonicity":
            from .corpus import MAIN_REGIME

            perts = perturbation_candidates(g, MAIN_REGIME[measure], rng, 1)
            if not perts:
                print(f"# no admissible perturbation found for {measure} on this graph")
                continue
            reports.extend(check_monotonicity(measure, g, perts[0]))
        elif name == "macrovertex":
            if not args.macrovertex:
                print("macrovertex check needs --macrovertex 'v1,v2,...'", file=sys.stderr)
                return EXIT_PARSE
            D = {int(v) for v in args.macrovertex.split(",")}
            reports.append(check_macrovertex(measure, g, D))
        else:
            print(f"unknown property {name!r}; choose from "
                  f"{sorted(PROPERTY_CHECKS) + ['doubly-stochastic', 'monotonicity', 'macrovertex']}",
                  file=sys.stderr)
            return EXIT_PARSE
    print(serialize_reports(reports))
    return EXIT_OK


def _cmd_examples(_args) -> int:
    failures = 0
    for result in run_figure_examples():
        print(result.line())
        failures += 0 if result.ok else 1
    for delta in appendix_delta_checks():
        print(delta.line())
        failures += 0 if delta.ok else 1
    if failures:
        print(f"{failures} example check(s) failed")
        return EXIT_DIAGNOSTIC
    print("all example checks passed")
    return EXIT_OK


def _cmd_corpus(args) -> int:
    result = reproduce_table1(seed=args.seed, count=args.count)
    print(result.render())
    mismatches = result.mismatches()
    for line in mismatches:
        print("MISMATCH " + line)
    if mismatches:
        return EXIT_DIAGNOSTIC
    print("property grid matches the published table")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphprox",
        description="Proximity measures for weighted multigraph vertices")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="print a measure's matrix")
    compute.add_argument("measure", choices=MEASURE_CHOICES)
    compute.add_argument("--graph", required=True, help="graph file path")
    compute.add_argument("--tau", type=float, default=1.0)
    compute.add_argument("--alpha", type=float, default=None,
                         help="dense-forest parameter (default: half the threshold)")
    compute.add_argument("--scale", type=float, default=None,
                         help="multiply all weights by this factor first")
    compute.add_argument("--format", choices=["matrix", "report"], default="matrix")
    compute.set_defaults(func=_cmd_compute)

    check = sub.add_parser("check", help="run property checkers")
    check.add_argument("measure")
    check.add_argument("properties", nargs="*", help="property names or 'all'")
    check.add_argument("--graph", required=True)
    check.add_argument("--scale", type=float, default=None)
    check.add_argument("--seed", type=int, default=1)
    check.add_argument("--macrovertex", default=None, help="comma-separated vertex ids")
    check.set_defaults(func=_cmd_check)

    examples = sub.add_parser("examples", help="replay the published example orderings")
    examples.set_defaults(func=_cmd_examples)

    corpus = sub.add_parser("corpus", help="regenerate the property grid")
    corpus.add_argument("--seed", type=int, default=1)
    corpus.add_argument("--count", type=int, default=200)
    corpus.set_defaults(func=_cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"cannot read graph file: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DivergentSeriesError, TooManyPathsError, CapExceededError,
            GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIAGNOSTIC


if __name__ == "__main__":
    sys.exit(main())
