"""Brute-force verifiers, independent of the formulas they check.

These oracles only ever consume a membership predicate (and optionally a
margin function); they never re-evaluate the closed forms under test.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

#: Bisection stops at this interval width.
BISECTION_WIDTH = 1e-9
#: Depths beyond this cap are reported as infinite.
T_MAX = 1e6


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of a randomized falsification probe."""

    trials: int
    failures: int
    worst_margin: float
    seed: int

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "failures": self.failures,
            "worst_margin": self.worst_margin,
            "seed": self.seed,
        }


def depth_by_bisection(membership: Callable[[np.ndarray], bool], d, w,
                       t_max: float = T_MAX) -> float:
    """Largest t with d + t*w still a member, to width 1e-9; inf if capped."""
    d = np.asarray(d, dtype=float).ravel()
    w = np.asarray(w, dtype=float).ravel()
    if not membership(d):
        raise ValueError("membership(d) must hold at the anchor")
    if membership(d + t_max * w):
        return math.inf
    lo, hi = 0.0, t_max
    while hi - lo > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        if membership(d + mid * w):
            lo = mid
        else:
            hi = mid
    return lo


def sphere_points(rng: np.random.Generator, trials: int, dim: int,
                  radius: float) -> np.ndarray:
    """Uniform points on the sphere of the given radius (Gaussian trick)."""
    g = rng.normal(size=(trials, dim))
    norms = np.linalg.norm(g, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return radius * g / norms


def ball_probe(membership: Callable[[np.ndarray], bool], d, radius: float,
               trials: int, seed: int,
               margin: Optional[Callable[[np.ndarray], float]] = None
               ) -> ProbeReport:
    """Probe membership of d + v over random v on a sphere.

    ``margin`` (nonpositive inside) only feeds the worst_margin field; the
    failure count always comes from the exact predicate.
    """
    if radius <= 0.0:
        raise ValueError("radius must be positive")
    d = np.asarray(d, dtype=float).ravel()
    rng = np.random.default_rng(seed)
    failures = 0
    worst = -math.inf
    for v in sphere_points(rng, trials, d.size, radius):
        z = d + v
        if not membership(z):
            failures += 1
        if margin is not None:
            worst = max(worst, margin(z))
    if margin is None:
        worst = 0.0 if failures == 0 else math.inf
    return ProbeReport(trials=trials, failures=failures,
                       worst_margin=worst, seed=seed)


def weyl_check(n: int, trials: int, seed: int) -> ProbeReport:
    """lambda_min(I/n - V) >= 0 for random symmetric ||V||_F <= 1/n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = np.random.default_rng(seed)
    failures = 0
    worst = math.inf
    for _ in range(trials):
        G = rng.normal(size=(n, n))
        V = 0.5 * (G + G.T)
        # scale into the Frobenius ball of radius 1/n
        scale = rng.uniform(0.0, 1.0) / (n * np.linalg.norm(V))
        V = scale * V
        lam = float(np.linalg.eigvalsh(np.eye(n) / n - V)[0])
        worst = min(worst, lam)
        if lam < -1e-12:
            failures += 1
    return ProbeReport(trials=trials, failures=failures,
                       worst_margin=worst, seed=seed)
