"""Conic bases and the circumcentric direction.

The direction d is minus the orthogonal projection of the origin onto the
affine hull of the unit generators.  It is computed by three independent
routes (inverse-Gram formula, affine least squares, circumcenter linear
system) so each can cross-validate the others, together with two-sided
spectral bounds on ||d||^2 and the common aperture angle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    AffinelyDependent,
    DegenerateDirection,
    DependentBase,
    DimensionMismatch,
    DuplicateGenerator,
    ZeroVector,
)

#: Below this smallest Gram eigenvalue the base counts as linearly dependent.
INDEPENDENCE_TOL = 1e-10
#: Two normalized generators closer than this are duplicates.
DUPLICATE_TOL = 1e-12
#: ||d||^2 at or below this counts as the degenerate d = 0 case.
DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class ConicBase:
    """Unit generators of a polyhedral cone, one per row of ``matrix``."""

    matrix: np.ndarray  # shape (p, n), rows unit-norm

    @property
    def p(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    @property
    def vectors(self) -> list[np.ndarray]:
        return [self.matrix[i] for i in range(self.p)]


@dataclass(frozen=True)
class GramMatrix:
    """Pairwise inner products of the unit generators."""

    entries: np.ndarray  # shape (p, p)

    def __post_init__(self):
        M = self.entries
        if not np.allclose(M, M.T, atol=1e-14):
            raise ValueError("Gram matrix must be symmetric")
        if not np.allclose(np.diag(M), 1.0, atol=1e-12):
            raise ValueError("Gram diagonal must be 1 (unit generators)")

    @property
    def p(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class CircumDirection:
    """The circumcentric direction with its squared norm and aperture.

    ``weights`` are the convex coefficients of -d on the generators and are
    present only when computed through the Gram route.
    """

    d: np.ndarray
    norm_sq: float
    aperture: float
    weights: Optional[np.ndarray] = None


def _aperture(norm_sq: float) -> float:
    return float(np.arccos(np.clip(np.sqrt(max(norm_sq, 0.0)), 0.0, 1.0)))


def build_base(raw_vectors) -> ConicBase:
    """Normalize the given vectors into a conic base.

    Rejects zero vectors and duplicate directions; accepts any positive
    scaling of the generators (the cone only sees directions).
    """
    rows = [np.asarray(v, dtype=float).ravel() for v in raw_vectors]
    if not rows:
        raise ZeroVector("a conic base needs at least one generator")
    n = rows[0].size
    if n < 1:
        raise DimensionMismatch("ambient dimension must be >= 1")
    unit = []
    for k, v in enumerate(rows):
        if v.size != n:
            raise DimensionMismatch(
                f"generator {k} has dimension {v.size}, expected {n}"
            )
        nv = float(np.linalg.norm(v))
        if nv == 0.0 or not np.isfinite(nv):
            raise ZeroVector(f"generator {k} is zero or non-finite")
        unit.append(v / nv)
    U = np.array(unit)
    for i in range(len(unit)):
        for j in range(i + 1, len(unit)):
            if np.linalg.norm(U[i] - U[j]) < DUPLICATE_TOL:
                raise DuplicateGenerator(
                    f"generators {i} and {j} point in the same direction"
                )
    return ConicBase(U)


def gram(base: ConicBase) -> GramMatrix:
    """Gram matrix M_ij = <u^i, u^j> of the base."""
    M = base.matrix @ base.matrix.T
    # exact symmetry for the downstream eigen-solvers
    M = 0.5 * (M + M.T)
    np.fill_diagonal(M, 1.0)
    return GramMatrix(M)


def circum_via_gram(base: ConicBase) -> CircumDirection:
    """Circumcentric direction through the inverse Gram matrix.

    d = -(1/(1' M^{-1} 1)) sum_i (M^{-1} 1)_i u^i with ||d||^2 the
    reciprocal of 1' M^{-1} 1.  Requires a linearly independent base.
    """
    M = gram(base).entries
    evals = np.linalg.eigvalsh(M)
    if evals[0] <= INDEPENDENCE_TOL:
        raise DependentBase(
            f"smallest Gram eigenvalue {evals[0]:.3e} <= {INDEPENDENCE_TOL:g}"
        )
    ones = np.ones(base.p)
    y = np.linalg.solve(M, ones)
    s = float(ones @ y)
    weights = y / s
    d = -(weights @ base.matrix)
    norm_sq = 1.0 / s
    return CircumDirection(d=d, norm_sq=norm_sq, aperture=_aperture(norm_sq),
                           weights=weights)


def circum_via_projection(base: ConicBase) -> CircumDirection:
    """Circumcentric direction as minus the projection of 0 onto aff(base).

    Least-squares on the affine parametrization x = u^1 + V a, so it works
    for dependent bases and for p > n; returns d = 0 when the affine hull
    passes through the origin.
    """
    U = base.matrix
    if base.p == 1:
        proj = U[0]
    else:
        V = (U[1:] - U[0]).T  # n x (p-1) difference vectors
        alpha, *_ = np.linalg.lstsq(V, -U[0], rcond=None)
        proj = U[0] + V @ alpha
    d = -proj
    norm_sq = float(d @ d)
    return CircumDirection(d=d, norm_sq=norm_sq, aperture=_aperture(norm_sq))


def circum_via_system(base: ConicBase) -> CircumDirection:
    """Circumcentric direction through the circumcenter linear system.

    Solves the (p-1) x (p-1) system in the affine coefficients of the
    circumcenter; a cross-validation route for the other two.
    """
    U = base.matrix
    if base.p == 1:
        circ = U[0]
    else:
        D = U[1:] - U[0]  # (p-1, n)
        G = D @ D.T
        G = 0.5 * (G + G.T)
        evals = np.linalg.eigvalsh(G)
        if evals[0] <= INDEPENDENCE_TOL:
            raise AffinelyDependent(
                f"smallest system eigenvalue {evals[0]:.3e} <= "
                f"{INDEPENDENCE_TOL:g}"
            )
        rhs = 0.5 * np.sum(D * D, axis=1)
        alpha = np.linalg.solve(G, rhs)
        circ = U[0] + alpha @ D
    d = -circ
    norm_sq = float(d @ d)
    return CircumDirection(d=d, norm_sq=norm_sq, aperture=_aperture(norm_sq))


def spectral_bounds(M: GramMatrix) -> tuple[float, float]:
    """Two-sided bounds lam_min(M)/p <= ||d||^2 <= lam_max(M)/p."""
    evals = np.linalg.eigvalsh(M.entries)
    p = M.p
    return float(evals[0] / p), float(evals[-1] / p)


def aperture_axis(c: CircumDirection) -> tuple[np.ndarray, float]:
    """Axis a = -d/||d|| and half-aperture theta = arccos ||d||.

    Every generator satisfies <u^i, a> = cos(theta).  Undefined for d = 0.
    """
    if c.norm_sq <= DEGENERATE_TOL:
        raise DegenerateDirection("d = 0 has no aperture axis")
    nd = float(np.linalg.norm(c.d))
    axis = -c.d / nd
    theta = float(np.arccos(np.clip(nd, 0.0, 1.0)))
    return axis, theta
