"""Numerical tolerances shared across the package."""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # Jacobi stops once every off-diagonal entry is below this
    convergence: float = 1e-11
    max_sweeps: int = 100
    # spectral assertions (lambda_1 == k, delta >= 0, soundness)
    assertion: float = 1e-8
    # edge condition / homogeneity / degree identity
    internal_weight: float = 1e-9
    user_weight: float = 1e-6
    symmetry: float = 1e-12
    # LP
    lp_feasibility: float = 1e-9
    lp_pivot: float = 1e-12
    lp_drop: float = 1e-10
    lp_recertify: float = 1e-7
    # search guard for cycle / clique backtracking
    node_limit: int = 10**7
    iso_max_vertices: int = 20


DEFAULT = Tolerances()

ENV_ASSERT_TOL = "SPECTRAL_DECOMP_TOL"


def from_environment() -> Tolerances:
    """Defaults, with the assertion tolerance overridable by ``SPECTRAL_DECOMP_TOL``."""
    raw = os.environ.get(ENV_ASSERT_TOL)
    if not raw:
        return DEFAULT
    try:
        value = float(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_ASSERT_TOL} must be a float, got {raw!r}") from exc
    if not value > 0:
        raise ValueError(f"{ENV_ASSERT_TOL} must be positive")
    return Tolerances(assertion=value)
