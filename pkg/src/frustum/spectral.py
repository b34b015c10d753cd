"""Normalized Laplacian spectrum, spectral gap, and mixing checks.

This is the only module that touches floating point.  Eigenvalues are
computed with a dense symmetric solve and every assertion downstream
carries an explicit 1e-9 slack; volumes and edge counts stay exact
integers, and the mixing inequality's left side is an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .errors import DisconnectedGraphError, EigensolveError, IsolatedVertexError
from .metrics import is_connected
from .model import Graph

#: Absolute slack applied to every eigenvalue-dependent comparison.
SLACK = 1e-9

#: Residual tolerance for the eigensolve, relative to the matrix norm.
RESIDUAL_TOL = 1e-9


def adjacency_matrix(graph: Graph) -> np.ndarray:
    a = np.zeros((graph.n, graph.n))
    for u, row in enumerate(graph.neighbors):
        a[u, list(row)] = 1.0
    return a


def normalized_laplacian(graph: Graph) -> np.ndarray:
    """I - D^{-1/2} A D^{-1/2}; requires every degree to be positive."""
    degs = graph.degrees()
    if any(d == 0 for d in degs):
        isolated = [v for v, d in enumerate(degs) if d == 0]
        raise IsolatedVertexError(f"isolated vertices {isolated} have no D^(-1/2)")
    inv_sqrt = 1.0 / np.sqrt(np.array(degs, dtype=float))
    lap = np.eye(graph.n) - adjacency_matrix(graph) * np.outer(inv_sqrt, inv_sqrt)
    # kill rounding asymmetry so eigh sees an exactly symmetric matrix
    return (lap + lap.T) / 2.0


def eigenvalues_symmetric(matrix: np.ndarray) -> tuple[np.ndarray, float]:
    """Full spectrum of a symmetric matrix, ascending, with its residual.

    Returns (eigenvalues, residual) where the residual is the largest
    ||M v - lambda v|| over eigenpairs relative to ||M||; a residual
    over the tolerance raises :class:`EigensolveError`.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.allclose(matrix, matrix.T, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    values, vectors = np.linalg.eigh(matrix)
    errors = matrix @ vectors - vectors * values
    residual = float(np.max(np.linalg.norm(errors, axis=0)))
    scale = max(float(np.max(np.abs(values))), 1.0)
    residual /= scale
    if residual > RESIDUAL_TOL:
        raise EigensolveError(residual, RESIDUAL_TOL)
    return values, residual


@dataclass(frozen=True)
class SpectralReport:
    """Spectrum summary: eigenvalues ascending in [0, 2], gap, residual."""

    eigenvalues: tuple[float, ...]
    lambda_gap: float
    residual: float


def spectral_report(graph: Graph) -> SpectralReport:
    """Full normalized-Laplacian spectrum plus the spectral gap.

    The gap is max(|l_1 - 1|, |l_max - 1|) where l_1 is the second
    smallest eigenvalue; it needs a connected graph on >= 2 vertices to
    be well defined.  Values near 1 mean good expansion; the clique
    extension families sit far from it.
    """
    if graph.n < 2:
        raise ValueError("spectral gap needs at least two vertices")
    if not is_connected(graph):
        raise DisconnectedGraphError("spectral gap of a disconnected graph")
    values, residual = eigenvalues_symmetric(normalized_laplacian(graph))
    gap = max(abs(float(values[1]) - 1.0), abs(float(values[-1]) - 1.0))
    return SpectralReport(tuple(float(v) for v in values), gap, residual)


def spectral_gap(graph: Graph) -> float:
    return spectral_report(graph).lambda_gap


def volume(graph: Graph, vertices: Iterable[int]) -> int:
    """Sum of degrees over a vertex set."""
    return sum(graph.degree(v) for v in set(vertices))


def ordered_internal_edges(graph: Graph, vertices: Iterable[int]) -> int:
    """e(X, X): ordered pairs, i.e. twice the edges inside the set."""
    inside = set(vertices)
    return sum(
        1 for u in inside for v in graph.neighbors[u] if v in inside
    )


@dataclass(frozen=True)
class MixingCheck:
    """One instance of the mixing inequality on an explicit vertex set.

    lhs = |e(X,X) - vol(X)^2 / vol(G)| held exactly as a rational;
    rhs = lambda * vol(X) * vol(complement) / vol(G) in floating point.
    """

    vertices: tuple[int, ...]
    e_xx: int
    vol_x: int
    vol_xbar: int
    vol_g: int
    lhs: Fraction
    rhs: float
    holds: bool


def mixing_check(graph: Graph, vertices: Iterable[int], lam: float) -> MixingCheck:
    """Check e(X,X) against the volume bound implied by spectral gap lam."""
    inside = sorted(set(vertices))
    if inside and not 0 <= inside[0] <= inside[-1] < graph.n:
        raise ValueError("vertex set out of range")
    vol_g = 2 * graph.edge_count
    if vol_g <= 0:
        raise ValueError("mixing check needs at least one edge")
    vol_x = volume(graph, inside)
    vol_xbar = vol_g - vol_x
    e_xx = ordered_internal_edges(graph, inside)
    lhs = abs(Fraction(e_xx) - Fraction(vol_x * vol_x, vol_g))
    rhs = lam * vol_x * vol_xbar / vol_g
    return MixingCheck(
        vertices=tuple(inside),
        e_xx=e_xx,
        vol_x=vol_x,
        vol_xbar=vol_xbar,
        vol_g=vol_g,
        lhs=lhs,
        rhs=rhs,
        holds=float(lhs) <= rhs + SLACK,
    )
