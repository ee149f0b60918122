"""Tolerance configuration shared across the library.

All geometric predicates in this package are tolerance-based double
precision; there is no exact rational arithmetic.  Three scales are
distinguished:

``eps_lp``
    pivot / feasibility tolerance inside the LP solver,
``eps_geom``
    pointwise geometric predicates (membership, incidence, dedup),
``eps_set``
    set equality, always meant as Hausdorff distance <= eps_set.

The invariant ``eps_lp <= eps_geom <= eps_set`` keeps the layers
consistent: an LP answer is always at least as sharp as the geometric
predicate consuming it.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ToleranceConfig:
    """Numerical tolerances used throughout the library."""

    eps_geom: float = 1e-9
    eps_set: float = 1e-7
    eps_lp: float = 1e-10

    def __post_init__(self) -> None:
        if not (self.eps_lp > 0 and self.eps_geom > 0 and self.eps_set > 0):
            raise ValueError("all tolerances must be positive")
        if not (self.eps_lp <= self.eps_geom <= self.eps_set):
            raise ValueError("tolerances must satisfy eps_lp <= eps_geom <= eps_set")

    def with_eps_set(self, eps_set: float) -> "ToleranceConfig":
        """Return a copy with a different set-equality tolerance."""
        return ToleranceConfig(
            eps_geom=min(self.eps_geom, eps_set),
            eps_set=eps_set,
            eps_lp=min(self.eps_lp, eps_set),
        )


DEFAULT_TOL = ToleranceConfig()
