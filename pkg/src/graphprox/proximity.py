"""Shared output type of all proximity measures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np


@dataclass(frozen=True)
class ProximityMatrix:
    """An n x n proximity matrix together with how it was produced.

    ``params`` records the parameters the measure ran with (tau, alpha,
    epsilon0 bound, admissibility flags, ...); keys vary by measure.
    """

    values: np.ndarray
    measure: str
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValueError(f"proximity matrix must be square, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise ValueError("proximity matrix has non-finite entries")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def entry(self, i: int, j: int) -> float:
        """Entry for 1-based vertex ids."""
        return float(self.values[i - 1, j - 1])
