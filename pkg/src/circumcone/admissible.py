"""Exact admissible set of the polar cone and directional depth.

A perturbation v keeps d + v inside the polar cone exactly when
max_i <v, u^i> <= ||d||^2; the depth along a direction w is the largest
admissible multiple of w, infinite for w in the polar cone itself.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, ZeroVector
from .geometry import ConicBase

#: Contact points sit on the admissible boundary within this margin.
CONTACT_TOL = 1e-12


@dataclass(frozen=True)
class DepthResult:
    """Directional depth; ``value`` is math.inf when the ray never exits.

    ``binding_index`` names the generator attaining the binding constraint
    and is present exactly when the depth is finite (ties break low).
    """

    value: float
    binding_index: Optional[int] = None

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)


def _check_dim(base: ConicBase, v: np.ndarray, name: str) -> np.ndarray:
    v = np.asarray(v, dtype=float).ravel()
    if v.size != base.n:
        raise DimensionMismatch(
            f"{name} has dimension {v.size}, base lives in R^{base.n}"
        )
    return v


def admissible_margin(base: ConicBase, norm_sq: float, v) -> float:
    """Margin ||d||^2 - max_i <v, u^i>; v is admissible iff this is >= 0."""
    v = _check_dim(base, v, "v")
    return float(norm_sq - np.max(base.matrix @ v))


def directional_depth(base: ConicBase, norm_sq: float, w) -> DepthResult:
    """Largest t with d + t w in the polar cone."""
    w = _check_dim(base, w, "w")
    if not np.any(w):
        raise ZeroVector("depth direction must be nonzero")
    products = base.matrix @ w
    s = float(np.max(products))
    if s <= 0.0:
        return DepthResult(math.inf)
    return DepthResult(norm_sq / s, int(np.argmax(products)))


def angular_depth_bound(norm_sq: float, phi: float) -> float:
    """Depth lower bound cos^2(theta) / [cos(phi - theta)]_+.

    theta is the half-aperture arccos(sqrt(norm_sq)) and phi the angle of
    the direction to the axis; the bound is +inf once phi - theta >= pi/2.
    """
    if not (0.0 < norm_sq <= 1.0 + 1e-12):
        raise ValueError(f"norm_sq must lie in (0, 1], got {norm_sq}")
    if not (0.0 <= phi <= math.pi + 1e-12):
        raise ValueError(f"phi must lie in [0, pi], got {phi}")
    theta = math.acos(min(1.0, math.sqrt(norm_sq)))
    if phi - theta >= math.pi / 2.0:
        return math.inf
    return norm_sq / math.cos(phi - theta)


def contact_points(base: ConicBase, norm_sq: float) -> list[np.ndarray]:
    """Points where the inscribed ball touches the admissible boundary.

    These are the generators scaled by ||d||^2; each has margin exactly 0.
    """
    if norm_sq <= 0.0:
        raise ValueError("contact set needs norm_sq > 0")
    return [norm_sq * u for u in base.vectors]
