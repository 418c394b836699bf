"""Adjacency spectra by cyclic Jacobi, and the gap lambda_min + lambda_1."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .config import DEFAULT, Tolerances
from .errors import ConvergenceError, InputError
from .graph import Graph


@dataclass(frozen=True)
class Eigensystem:
    values: np.ndarray  # descending
    vectors: np.ndarray  # column i belongs to values[i]
    sweeps: int
    residual: float


def _fix_sign(vec: np.ndarray, eps: float = 1e-12) -> np.ndarray:
    for x in vec:
        if abs(x) > eps:
            return vec if x > 0 else -vec
    return vec


def jacobi_eigensystem(matrix, tol: Tolerances = DEFAULT) -> Eigensystem:
    """Eigenvalues (descending) and unit eigenvectors of a real symmetric matrix.

    Raises ``InputError`` when the matrix is not symmetric within
    ``tol.symmetry`` and ``ConvergenceError`` when ``tol.max_sweeps`` sweeps
    leave an off-diagonal entry of size ``tol.convergence`` or more.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"expected a square matrix, got shape {a.shape}")
    if a.size and np.max(np.abs(a - a.T)) > tol.symmetry:
        raise InputError("matrix is not symmetric")
    if not np.all(np.isfinite(a)):
        raise InputError("matrix has non-finite entries")
    diag, vecs, sweeps, off = _kernels.jacobi_eigh(a, tol.convergence, tol.max_sweeps)
    if off >= tol.convergence:
        raise ConvergenceError(
            f"Jacobi did not converge in {sweeps} sweeps (max off-diagonal {off:.3e})",
            details={"sweeps": sweeps, "residual": off},
        )
    order = np.argsort(-diag, kind="stable")
    vecs = vecs[:, order]
    for j in range(vecs.shape[1]):
        col = vecs[:, j] / np.linalg.norm(vecs[:, j])
        vecs[:, j] = _fix_sign(col)
    return Eigensystem(diag[order], vecs, sweeps, off)


def eigenvalues_symmetric(matrix, tol: Tolerances = DEFAULT) -> list[float]:
    return [float(x) for x in jacobi_eigensystem(matrix, tol).values]


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: tuple[float, ...]
    lambda_1: float
    lambda_min: float
    delta: float
    min_vector: np.ndarray
    min_multiplicity: int

    def to_json(self) -> dict:
        return {
            "n": len(self.eigenvalues),
            "eigenvalues": list(self.eigenvalues),
            "lambda_1": self.lambda_1,
            "lambda_min": self.lambda_min,
            "delta": self.delta,
            "lambda_min_multiplicity": self.min_multiplicity,
        }


def spectral_summary(g: Graph, tol: Tolerances = DEFAULT) -> SpectralSummary:
    if g.n == 0:
        raise InputError("spectral_summary needs a nonempty graph")
    es = jacobi_eigensystem(g.adjacency(), tol)
    vals = es.values
    lam_min = float(vals[-1])
    mult = int(np.sum(np.abs(vals - lam_min) <= max(tol.assertion, 1e-9)))
    return SpectralSummary(
        eigenvalues=tuple(float(x) for x in vals),
        lambda_1=float(vals[0]),
        lambda_min=lam_min,
        delta=float(vals[0]) + lam_min,
        min_vector=es.vectors[:, -1].copy(),
        min_multiplicity=mult,
    )


def lambda_min(g: Graph, tol: Tolerances = DEFAULT) -> float:
    """Smallest adjacency eigenvalue; 0 for an edgeless graph."""
    if g.m == 0:
        return 0.0
    return spectral_summary(g, tol).lambda_min


def delta(g: Graph, tol: Tolerances = DEFAULT) -> float:
    return spectral_summary(g, tol).delta


def cycle_lambda_min(h: int) -> float:
    """Smallest eigenvalue of the odd cycle C_{2h+1}: -2 cos(pi / (2h+1))."""
    if int(h) != h or h < 1:
        raise InputError("h must be a positive integer")
    return -2.0 * math.cos(math.pi / (2 * h + 1))


def cycle_lambda_min_minorant(h: int) -> float:
    """Two-term Taylor lower bound -2 + x^2 - x^4/12 with x = pi/(2h+1)."""
    x = math.pi / (2 * h + 1)
    return -2.0 + x * x - x**4 / 12.0
