"""Canonical cones with closed-form circumcentric directions.

Each descriptor carries the closed-form data of its extremal section:
the set of unit vectors spanning extreme rays.  Symmetric matrices are
embedded isometrically in R^{n(n+1)/2} (off-diagonals scaled by sqrt 2)
so Euclidean inner products equal Frobenius inner products and a single
vector type serves every variant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import admissible, geometry
from .errors import DependentBase, HypothesisFails, UnsupportedExact, ZeroVector
from .geometry import CircumDirection, ConicBase

#: Sampled affine hulls carry noise; the hypothesis needs this much distance.
HYPOTHESIS_TOL = 1e-8
#: Slack for the exact polar-membership predicates.
MEMBERSHIP_TOL = 1e-10


# ---------------------------------------------------------------------------
# symmetric-matrix embedding


def sym_embed(X: np.ndarray) -> np.ndarray:
    """Half-vectorize a symmetric matrix with sqrt(2)-scaled off-diagonals."""
    X = np.asarray(X, dtype=float)
    n = X.shape[0]
    out = np.empty(n * (n + 1) // 2)
    k = 0
    r2 = math.sqrt(2.0)
    for i in range(n):
        out[k] = X[i, i]
        k += 1
        for j in range(i + 1, n):
            out[k] = r2 * X[i, j]
            k += 1
    return out


def sym_restore(v: np.ndarray, n: int) -> np.ndarray:
    """Inverse of :func:`sym_embed`."""
    v = np.asarray(v, dtype=float).ravel()
    X = np.empty((n, n))
    k = 0
    r2 = math.sqrt(2.0)
    for i in range(n):
        X[i, i] = v[k]
        k += 1
        for j in range(i + 1, n):
            X[i, j] = X[j, i] = v[k] / r2
            k += 1
    return X


def matrix_order(embedded_dim: int) -> int:
    n = int((math.isqrt(8 * embedded_dim + 1) - 1) // 2)
    if n * (n + 1) // 2 != embedded_dim:
        raise ValueError(f"{embedded_dim} is not a triangular number")
    return n


# ---------------------------------------------------------------------------
# descriptors


class ConeDescriptor:
    """Tagged description of a canonical cone."""

    variant: str

    @property
    def dim(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class Orthant(ConeDescriptor):
    n: int
    variant = "orthant"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("orthant dimension must be >= 1")

    @property
    def dim(self) -> int:
        return self.n


@dataclass(frozen=True)
class SOC(ConeDescriptor):
    """Second-order cone {(x, t): ||x|| <= t} in R^n."""

    n: int
    variant = "soc"

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("SOC needs ambient dimension >= 2")

    @property
    def dim(self) -> int:
        return self.n


@dataclass(frozen=True)
class PSD(ConeDescriptor):
    """Positive-semidefinite n x n matrices, embedded in R^{n(n+1)/2}."""

    n: int
    variant = "psd"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("PSD matrix order must be >= 1")

    @property
    def dim(self) -> int:
        return self.n * (self.n + 1) // 2


@dataclass(frozen=True)
class DNN(ConeDescriptor):
    """Doubly nonnegative n x n matrices (PSD with nonnegative entries)."""

    n: int
    variant = "dnn"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("DNN matrix order must be >= 1")

    @property
    def dim(self) -> int:
        return self.n * (self.n + 1) // 2


@dataclass(frozen=True)
class PCone(ConeDescriptor):
    """p-norm cone {(x, t): ||x||_p <= t}; hypothesis fails for p != 2."""

    n: int
    p: float
    variant = "pcone"

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("p-cone needs ambient dimension >= 3")
        if not (1.0 < self.p < math.inf):
            raise ValueError("p must lie in (1, inf)")

    @property
    def dim(self) -> int:
        return self.n

    @property
    def hypothesis_fails(self) -> bool:
        return self.p != 2.0


@dataclass(frozen=True)
class Product(ConeDescriptor):
    blocks: tuple[ConeDescriptor, ...]
    variant = "product"

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("product needs at least one block")

    @property
    def dim(self) -> int:
        return sum(b.dim for b in self.blocks)

    def offsets(self) -> list[tuple[int, int]]:
        """Half-open ambient index range of each block."""
        out, start = [], 0
        for b in self.blocks:
            out.append((start, start + b.dim))
            start += b.dim
        return out


@dataclass(frozen=True)
class Polyhedral(ConeDescriptor):
    base: ConicBase
    variant = "polyhedral"

    @property
    def dim(self) -> int:
        return self.base.n


@dataclass(frozen=True)
class HypothesisReport:
    """Result of the affine-hull origin test on a sampled extremal section."""

    holds: bool
    distance: float
    witness: Optional[CircumDirection] = None


# ---------------------------------------------------------------------------
# circumcentric direction


def _direction(d: np.ndarray, norm_sq: float) -> CircumDirection:
    theta = float(np.arccos(np.clip(math.sqrt(max(norm_sq, 0.0)), 0.0, 1.0)))
    return CircumDirection(d=d, norm_sq=norm_sq, aperture=theta)


def _soc_direction(n: int) -> CircumDirection:
    d = np.zeros(n)
    d[-1] = -1.0 / math.sqrt(2.0)
    return _direction(d, 0.5)


def circum_direction(c: ConeDescriptor) -> CircumDirection:
    """Closed-form d = -proj_{aff(E)}(0) for each supported variant."""
    if isinstance(c, Orthant):
        return _direction(np.full(c.n, -1.0 / c.n), 1.0 / c.n)
    if isinstance(c, SOC):
        return _soc_direction(c.n)
    if isinstance(c, (PSD, DNN)):
        d = -sym_embed(np.eye(c.n) / c.n)
        return _direction(d, 1.0 / c.n)
    if isinstance(c, PCone):
        if c.hypothesis_fails:
            raise HypothesisFails(f"pcone(p={c.p})", 0.0)
        return _soc_direction(c.n)
    if isinstance(c, Product):
        parts = [circum_direction(b) for b in c.blocks]
        inv = sum(1.0 / part.norm_sq for part in parts)
        norm_sq = 1.0 / inv
        d = np.concatenate([(norm_sq / part.norm_sq) * part.d
                            for part in parts])
        return _direction(d, norm_sq)
    if isinstance(c, Polyhedral):
        try:
            cd = geometry.circum_via_gram(c.base)
        except DependentBase:
            cd = geometry.circum_via_projection(c.base)
        dist = math.sqrt(max(cd.norm_sq, 0.0))
        if dist <= HYPOTHESIS_TOL:
            raise HypothesisFails("polyhedral", dist)
        return cd
    raise TypeError(f"unknown descriptor {type(c).__name__}")


# ---------------------------------------------------------------------------
# extremal sampling and the hypothesis check


def _unit_rows(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    rows = rng.normal(size=(count, dim))
    norms = np.linalg.norm(rows, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return rows / norms


def _pcone_witness_directions(dim: int) -> list[np.ndarray]:
    # the five probe directions from the non-planarity argument
    e1 = np.zeros(dim)
    e1[0] = 1.0
    e2 = np.zeros(dim)
    e2[1] = 1.0
    return [e1, -e1, e2, -e2, (e1 + e2) / math.sqrt(2.0)]


def sample_extremal(c: ConeDescriptor, count: int, seed: int) -> list[np.ndarray]:
    """Euclidean-unit points of the extremal section, seed-deterministic."""
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.default_rng(seed)
    if isinstance(c, Orthant):
        return [np.eye(c.n)[i] for i in range(min(count, c.n))]
    if isinstance(c, SOC):
        omegas = _unit_rows(rng, count, c.n - 1)
        r2 = math.sqrt(2.0)
        return [np.append(w / r2, 1.0 / r2) for w in omegas]
    if isinstance(c, PSD):
        vs = _unit_rows(rng, count, c.n)
        return [sym_embed(np.outer(v, v)) for v in vs]
    if isinstance(c, DNN):
        vs = np.abs(rng.normal(size=(count, c.n)))
        vs /= np.linalg.norm(vs, axis=1, keepdims=True)
        return [sym_embed(np.outer(v, v)) for v in vs]
    if isinstance(c, PCone):
        omegas = _pcone_witness_directions(c.n - 1)[:count]
        extra = count - len(omegas)
        if extra > 0:
            omegas.extend(_unit_rows(rng, extra, c.n - 1))
        out = []
        for w in omegas:
            t = float(np.linalg.norm(w, ord=c.p))
            u = np.append(w, t)
            out.append(u / math.sqrt(1.0 + t * t))
        return out
    if isinstance(c, Polyhedral):
        return c.base.vectors[:count]
    if isinstance(c, Product):
        per = -(-count // len(c.blocks))  # ceil
        out = []
        for k, (b, (lo, hi)) in enumerate(zip(c.blocks, c.offsets())):
            for u in sample_extremal(b, per, seed + 1 + k):
                full = np.zeros(c.dim)
                full[lo:hi] = u
                out.append(full)
        return out[:count]
    raise TypeError(f"unknown descriptor {type(c).__name__}")


def affine_projection_of_origin(points: list[np.ndarray]) -> np.ndarray:
    """Projection of 0 onto the affine hull of the points (dependent-safe)."""
    P = np.array([np.asarray(p, dtype=float).ravel() for p in points])
    if P.shape[0] == 1:
        return P[0]
    V = (P[1:] - P[0]).T
    alpha, *_ = np.linalg.lstsq(V, -P[0], rcond=None)
    return P[0] + V @ alpha


def hypothesis_check(samples: list[np.ndarray]) -> HypothesisReport:
    """Does the affine hull of the samples avoid the origin?

    For samples affinely spanning aff(E) this decides the true hypothesis;
    the witness is the circumcentric direction d = -projection.
    """
    if not samples:
        raise ValueError("need at least one sample")
    proj = affine_projection_of_origin(samples)
    dist = float(np.linalg.norm(proj))
    if dist > HYPOTHESIS_TOL:
        return HypothesisReport(True, dist, _direction(-proj, dist * dist))
    return HypothesisReport(False, dist)


# ---------------------------------------------------------------------------
# support functions, depth, polar membership


def support_on_extremal(c: ConeDescriptor, w) -> float:
    """Exact supremum of <w, u> over the extremal section."""
    w = np.asarray(w, dtype=float).ravel()
    if w.size != c.dim:
        raise ValueError(f"direction has dimension {w.size}, cone {c.dim}")
    if not np.any(w):
        raise ZeroVector("support direction must be nonzero")
    if isinstance(c, Orthant):
        return float(np.max(w))
    if isinstance(c, SOC):
        wx, wt = w[:-1], w[-1]
        return float((np.linalg.norm(wx) + wt) / math.sqrt(2.0))
    if isinstance(c, PSD):
        W = sym_restore(w, c.n)
        return float(np.linalg.eigvalsh(W)[-1])
    if isinstance(c, DNN):
        raise UnsupportedExact(
            "exact DNN support is NP-hard; use support_sampled"
        )
    if isinstance(c, PCone):
        raise UnsupportedExact(
            "p-cone support has no closed form here; use support_sampled"
        )
    if isinstance(c, Polyhedral):
        return float(np.max(c.base.matrix @ w))
    if isinstance(c, Product):
        # a zero sub-vector contributes sup 0 over that block's section
        supports = [
            support_on_extremal(b, w[lo:hi]) if np.any(w[lo:hi]) else 0.0
            for b, (lo, hi) in zip(c.blocks, c.offsets())
        ]
        return float(max(supports))
    raise TypeError(f"unknown descriptor {type(c).__name__}")


def support_sampled(c: ConeDescriptor, w, count: int, seed: int) -> float:
    """Certified lower bound on the extremal support via sampling."""
    w = np.asarray(w, dtype=float).ravel()
    samples = sample_extremal(c, count, seed)
    return float(max(float(u @ w) for u in samples))


def directional_depth_np(c: ConeDescriptor, w) -> admissible.DepthResult:
    """Depth ||d||^2 / sup_E <w, u>, infinite for w in the polar cone."""
    cd = circum_direction(c)
    if isinstance(c, Polyhedral):
        return admissible.directional_depth(c.base, cd.norm_sq, w)
    s = support_on_extremal(c, w)
    if s <= 0.0:
        return admissible.DepthResult(math.inf)
    return admissible.DepthResult(cd.norm_sq / s)


def polar_membership(c: ConeDescriptor, z, tol: float = MEMBERSHIP_TOL) -> bool:
    """Exact test z in K-polar (DNN refused: only falsifiable by sampling)."""
    z = np.asarray(z, dtype=float).ravel()
    if z.size != c.dim:
        raise ValueError(f"point has dimension {z.size}, cone {c.dim}")
    if isinstance(c, Orthant):
        return bool(np.all(z <= tol))
    if isinstance(c, SOC):
        return bool(np.linalg.norm(z[:-1]) <= -z[-1] + tol)
    if isinstance(c, PSD):
        return bool(np.linalg.eigvalsh(sym_restore(z, c.n))[-1] <= tol)
    if isinstance(c, DNN):
        raise UnsupportedExact("exact DNN polar membership is NP-hard")
    if isinstance(c, PCone):
        # polar of the p-cone is the negated q-cone, 1/p + 1/q = 1
        q = c.p / (c.p - 1.0)
        return bool(np.linalg.norm(z[:-1], ord=q) <= -z[-1] + tol)
    if isinstance(c, Polyhedral):
        return bool(np.max(c.base.matrix @ z) <= tol)
    if isinstance(c, Product):
        return all(
            polar_membership(b, z[lo:hi], tol)
            for b, (lo, hi) in zip(c.blocks, c.offsets())
        )
    raise TypeError(f"unknown descriptor {type(c).__name__}")


def jordan_value(c: ConeDescriptor) -> Optional[float]:
    """1/rank for the three symmetric variants, None otherwise."""
    if isinstance(c, Orthant):
        return 1.0 / c.n
    if isinstance(c, SOC):
        return 0.5
    if isinstance(c, PSD):
        return 1.0 / c.n
    return None
