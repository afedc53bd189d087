"""Route accessibility P = (I - E)^{-1} and its admissibility machinery.

The geometric series I + E + E^2 + ... converges exactly when the spectral
radius of E is below 1. Admissibility is reported with a power-iteration
estimate of the spectral radius, its Gershgorin upper bound (the maximum
absolute row sum), and the sufficient weight condition
eps_max < (m (n-1))^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .graph import Edge, WeightedMultigraph, build_weight_matrix
from .proximity import ProximityMatrix

POWER_ITERATIONS = 200
POWER_WINDOW = 1e-10


class DivergentSeriesError(RuntimeError):
    """The route series does not converge (spectral radius >= 1)."""


class SingularUpdateError(RuntimeError):
    """The one-step update denominator 1 - delta * p_tk is numerically zero."""


@dataclass(frozen=True)
class AdmissibilityReport:
    spectral_radius: float
    converged: bool
    gershgorin: float
    eps_max: float
    m: int
    n: int
    weight_bound: float
    weight_constraint_ok: bool

    @property
    def series_converges(self) -> bool:
        """Convergence verdict; falls back to the Gershgorin bound when the
        power iteration did not settle."""
        if self.converged:
            return self.spectral_radius < 1.0
        return self.gershgorin < 1.0

    def describe(self) -> str:
        lines = [
            f"spectral radius estimate: {self.spectral_radius:.6g}"
            + ("" if self.converged else " (not converged; using Gershgorin bound)"),
            f"Gershgorin bound (max row sum): {self.gershgorin:.6g}",
            f"max edge weight: {self.eps_max:.6g}, multiplicity m = {self.m}",
            f"weight condition eps_max < 1/(m(n-1)) = {self.weight_bound:.6g}: "
            + ("satisfied" if self.weight_constraint_ok else "violated"),
            f"series converges: {'yes' if self.series_converges else 'no'}",
        ]
        return "\n".join(lines)


def _power_estimate(E: np.ndarray) -> tuple[float, bool]:
    """Spectral-radius estimate by infinity-norm power iteration.

    The running estimate ||E x||_inf / ||x||_inf never exceeds ||E||_inf,
    so it stays below the Gershgorin bound by construction.
    """
    n = E.shape[0]
    if n == 0:
        return 0.0, True
    x = np.ones(n)
    estimate = 0.0
    for _ in range(POWER_ITERATIONS):
        y = E @ x
        norm = float(np.max(np.abs(y)))
        if norm == 0.0:
            return 0.0, True
        previous, estimate = estimate, norm
        x = y / norm
        if abs(estimate - previous) < POWER_WINDOW:
            return estimate, True
    return estimate, False


def check_admissibility(g: WeightedMultigraph) -> AdmissibilityReport:
    E = build_weight_matrix(g)
    gershgorin = float(np.max(np.abs(E).sum(axis=1))) if g.n else 0.0
    radius, converged = _power_estimate(E)
    m = g.m
    denom = m * (g.n - 1)
    bound = float("inf") if denom == 0 else 1.0 / denom
    eps_max = g.max_weight
    return AdmissibilityReport(
        spectral_radius=radius,
        converged=converged,
        gershgorin=gershgorin,
        eps_max=eps_max,
        m=m,
        n=g.n,
        weight_bound=bound,
        weight_constraint_ok=eps_max < bound,
    )


def route_accessibility(g: WeightedMultigraph) -> ProximityMatrix:
    """Total route (walk) weight between every vertex pair: (I - E)^{-1}.

    Computed by a direct linear solve against the identity. Raises
    DivergentSeriesError when the admissibility report cannot certify
    spectral radius < 1.
    """
    report = check_admissibility(g)
    if not report.series_converges:
        raise DivergentSeriesError(
            "route series diverges:\n" + report.describe())
    E = build_weight_matrix(g)
    p = np.linalg.solve(np.eye(g.n) - E, np.eye(g.n))
    return ProximityMatrix(p, "routes", {
        "spectral_radius": report.spectral_radius,
        "gershgorin": report.gershgorin,
        "weight_constraint_ok": report.weight_constraint_ok,
        "updates_applied": 0,
    })


def rank_one_update(p: ProximityMatrix, k: int, t: int, delta_eps: float) -> ProximityMatrix:
    """Route accessibility after arc weight (k, t) grows by delta_eps.

    Uses the one-step increment formula: P' = P + h R with
    h = delta / (1 - delta * p_tk) and r_ij = p_ik * p_tj. Equivalent to
    recomputing (I - E')^{-1} as long as the updated graph stays admissible
    (which this pure matrix operation cannot check itself).
    """
    P = p.values
    denom = 1.0 - delta_eps * P[t - 1, k - 1]
    if abs(denom) < 1e-12:
        raise SingularUpdateError(
            f"update denominator 1 - delta*p_tk = {denom:.3e} is numerically singular")
    h = delta_eps / denom
    new = P + h * np.outer(P[:, k - 1], P[t - 1, :])
    params = dict(p.params)
    params["updates_applied"] = params.get("updates_applied", 0) + 1
    return ProximityMatrix(new, p.measure, params)


def apply_route_updates(
    g: WeightedMultigraph,
    increments: list[tuple[int, int, float]],
    recompute_every: int = 32,
) -> tuple[WeightedMultigraph, ProximityMatrix]:
    """Chain one-step updates, recomputing from scratch every ``recompute_every``.

    Each (k, t, delta) adds an arc (edge) of weight delta from k to t, which
    has the same weight-matrix effect as increasing an existing one. Periodic
    recomputation caps floating-point drift across long update chains.
    """
    p = route_accessibility(g)
    for count, (k, t, delta) in enumerate(increments, start=1):
        g = replace(g, edges=g.edges + (Edge(k, t, delta),))
        report = check_admissibility(g)
        if not report.series_converges:
            raise DivergentSeriesError(
                f"update {count} makes the route series diverge:\n" + report.describe())
        if count % recompute_every == 0:
            p = route_accessibility(g)
        else:
            p = rank_one_update(p, k, t, delta)
    return g, p
