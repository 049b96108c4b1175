"""Bregman projections of the origin and the dual feasibility direction.

For a Legendre function h minimized at 0, the Bregman projection c_h of
the origin onto the affine hull of the conic base yields a dual point
grad h(c_h) with constant inner product kappa_h against every generator.
The direction d_h = -grad h(c_h) then carries a Euclidean inscribed ball
of radius kappa_h inside the polar cone, and a mirror-descent update.
Three closed-form families ship: Euclidean, p-norm power, and the
Mahalanobis quadratic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import admissible, geometry
from .errors import DegenerateAffine, DegenerateDirection, DependentBase, ZeroVector
from .geometry import ConicBase

#: kappa at or below this is reported degenerate (the d = 0 analogue).
KAPPA_TOL = 1e-12
#: Ball-check boundary slack.
BALL_TOL = 1e-12


class LegendreFunction:
    """Value / gradient / dual-gradient provider with grad(0) = 0."""

    label: str

    def value(self, x) -> float:
        raise NotImplementedError

    def grad(self, x) -> np.ndarray:
        raise NotImplementedError

    def grad_dual(self, y) -> np.ndarray:
        raise NotImplementedError

    def divergence(self, x, y) -> float:
        """Bregman divergence D_h(x, y)."""
        x = np.asarray(x, dtype=float).ravel()
        y = np.asarray(y, dtype=float).ravel()
        return self.value(x) - self.value(y) - float(self.grad(y) @ (x - y))


class Euclidean(LegendreFunction):
    """h(x) = ||x||^2 / 2; grad and its inverse are the identity."""

    label = "euclidean"

    def value(self, x):
        x = np.asarray(x, dtype=float).ravel()
        return 0.5 * float(x @ x)

    def grad(self, x):
        return np.asarray(x, dtype=float).ravel().copy()

    def grad_dual(self, y):
        return np.asarray(y, dtype=float).ravel().copy()


class PNorm(LegendreFunction):
    """h(x) = ||x||^p / p for p >= 2, with grad(0) = 0."""

    def __init__(self, p: float):
        if p < 2.0:
            raise ValueError("p must be >= 2")
        self.p = float(p)
        self.label = f"pnorm({p:g})"

    def value(self, x):
        x = np.asarray(x, dtype=float).ravel()
        return float(np.linalg.norm(x) ** self.p) / self.p

    def grad(self, x):
        x = np.asarray(x, dtype=float).ravel()
        r = float(np.linalg.norm(x))
        if r == 0.0:
            return np.zeros_like(x)
        return r ** (self.p - 2.0) * x

    def grad_dual(self, y):
        # inverse of r^(p-2) x: exponent (2-p)/(p-1) on the dual radius
        y = np.asarray(y, dtype=float).ravel()
        r = float(np.linalg.norm(y))
        if r == 0.0:
            return np.zeros_like(y)
        return r ** ((2.0 - self.p) / (self.p - 1.0)) * y


class Mahalanobis(LegendreFunction):
    """h(x) = x'Ax / 2 for symmetric positive-definite A."""

    def __init__(self, A):
        A = np.atleast_2d(np.asarray(A, dtype=float))
        if not np.allclose(A, A.T, atol=1e-12):
            raise ValueError("A must be symmetric")
        if np.linalg.eigvalsh(A)[0] <= 1e-10:
            raise ValueError("A must be positive definite")
        self.A = 0.5 * (A + A.T)
        self.label = "mahalanobis"

    def value(self, x):
        x = np.asarray(x, dtype=float).ravel()
        return 0.5 * float(x @ self.A @ x)

    def grad(self, x):
        return self.A @ np.asarray(x, dtype=float).ravel()

    def grad_dual(self, y):
        return np.linalg.solve(self.A, np.asarray(y, dtype=float).ravel())


@dataclass(frozen=True)
class BregmanDirection:
    """c_h on the affine hull, d_h = -grad h(c_h), margin kappa > 0."""

    c_h: np.ndarray
    d_h: np.ndarray
    kappa: float


def bregman_proj_affine(h: LegendreFunction, base: ConicBase) -> np.ndarray:
    """argmin of D_h(., 0) over aff(base).

    Euclidean and p-norm both minimize the Euclidean norm on the affine
    hull, so they share the projection point -d; Mahalanobis solves the
    A-weighted normal equations on the difference vectors.
    """
    euclid = geometry.circum_via_projection(base)
    if math.sqrt(max(euclid.norm_sq, 0.0)) <= 1e-10:
        raise DegenerateAffine("origin lies on aff(base)")
    if isinstance(h, Mahalanobis):
        U = base.matrix
        if base.p == 1:
            return U[0].copy()
        V = (U[1:] - U[0]).T  # n x (p-1)
        G = V.T @ h.A @ V
        G = 0.5 * (G + G.T)
        if np.linalg.eigvalsh(G)[0] <= 1e-12:
            raise DependentBase("difference vectors are A-degenerate")
        alpha = np.linalg.solve(G, -V.T @ (h.A @ U[0]))
        return U[0] + V @ alpha
    return -euclid.d


def bregman_direction(h: LegendreFunction, base: ConicBase) -> BregmanDirection:
    """Dual direction d_h and margin kappa from the Bregman projection."""
    c = bregman_proj_affine(h, base)
    g = h.grad(c)
    kappa = float(g @ c)
    if kappa <= KAPPA_TOL:
        raise DegenerateDirection(f"kappa = {kappa:.3e} is degenerate")
    return BregmanDirection(c_h=c, d_h=-g, kappa=kappa)


def bregman_ball_check(bd: BregmanDirection, base: ConicBase, v) -> bool:
    """Is d_h + v in the polar cone?  Guaranteed when ||v|| <= kappa."""
    v = np.asarray(v, dtype=float).ravel()
    return bool(np.max(base.matrix @ (bd.d_h + v)) <= BALL_TOL)


def sigma_star_h(bd: BregmanDirection, base: ConicBase, w) -> float:
    """Bregman step bound: kappa over the binding generator product."""
    w = np.asarray(w, dtype=float).ravel()
    if not np.any(w):
        raise ZeroVector("step direction must be nonzero")
    return admissible.directional_depth(base, bd.kappa, w).value


def mirror_step(h: LegendreFunction, x, d_h, grad_f, sigma: float,
                eta: float) -> np.ndarray:
    """Mirror-descent update: dual shift by eta*(d_h - sigma*grad_f)."""
    x = np.asarray(x, dtype=float).ravel()
    d_h = np.asarray(d_h, dtype=float).ravel()
    grad_f = np.asarray(grad_f, dtype=float).ravel()
    if eta <= 0.0:
        raise ValueError("eta must be positive")
    return h.grad_dual(h.grad(x) + eta * (d_h - sigma * grad_f))
