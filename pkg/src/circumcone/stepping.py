"""Active cones at feasible points and the sharp interior-step oracle.

At a feasible point, the normalized gradients of the active constraints
form a conic base whose circumcentric direction d is an interior feasible
direction; sigma*(w) is the largest multiple of a prescribed direction w
that can be added to d without leaving the interior.  Concrete oracles
are provided for box-constrained least squares (L-infinity ball) and
second-order cone programs, plus a feasibility-corrected projected
gradient driver built on them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from . import admissible, geometry
from .errors import (
    ApexError,
    DegenerateBox,
    DependentBase,
    InfeasiblePoint,
    NoActiveConstraints,
    StepFailure,
    StepTooLong,
    ZeroVector,
)
from .geometry import CircumDirection, ConicBase

#: |g_j(x)| below this (scaled) counts as active; exact zero never occurs.
ACTIVITY_TOL = 1e-9
#: Active SOC residuals smaller than this sit at the apex.
APEX_TOL = 1e-10


@dataclass(frozen=True)
class SmoothConstraint:
    """A convex differentiable constraint g(x) <= 0 with its gradient."""

    label: str
    evaluate: Callable[[np.ndarray], tuple[float, np.ndarray]]


@dataclass(frozen=True)
class ActiveCone:
    """Normalized active-constraint gradients plus their circum direction."""

    labels: tuple[str, ...]
    base: ConicBase
    circ: CircumDirection


def active_set(constraints: Sequence[SmoothConstraint], x,
               tol: float = ACTIVITY_TOL) -> list[str]:
    """Labels of constraints active at the feasible point x."""
    x = np.asarray(x, dtype=float).ravel()
    labels = []
    for con in constraints:
        value, _ = con.evaluate(x)
        scaled = tol * (1.0 + abs(value))
        if value > scaled:
            raise InfeasiblePoint(f"{con.label}: g = {value:.3e} > 0")
        if value >= -scaled:
            labels.append(con.label)
    return labels


def build_active_cone(gradients: Sequence[np.ndarray],
                      labels: Optional[Sequence[str]] = None) -> ActiveCone:
    """Normalize, deduplicate, and run circum on active gradients."""
    if len(gradients) == 0:
        raise NoActiveConstraints("empty active set: every direction is interior")
    if labels is None:
        labels = [f"g{j}" for j in range(len(gradients))]
    unit, kept = [], []
    for g, lab in zip(gradients, labels):
        g = np.asarray(g, dtype=float).ravel()
        norm = float(np.linalg.norm(g))
        if norm == 0.0:
            raise ZeroVector(f"zero gradient for active constraint {lab}")
        u = g / norm
        if any(np.linalg.norm(u - v) < geometry.DUPLICATE_TOL for v in unit):
            continue
        unit.append(u)
        kept.append(lab)
    base = ConicBase(np.array(unit))
    try:
        circ = geometry.circum_via_gram(base)
    except DependentBase:
        circ = geometry.circum_via_projection(base)
    return ActiveCone(tuple(kept), base, circ)


def sigma_star(ac: ActiveCone, w) -> float:
    """Supremum of sigma with d + sigma*w still an interior direction."""
    return admissible.directional_depth(ac.base, ac.circ.norm_sq, w).value


def mfcq_witness(ac: ActiveCone) -> Optional[np.ndarray]:
    """d itself certifies MFCQ when nonzero: <u^j, d> = -||d||^2 < 0."""
    if ac.circ.norm_sq > geometry.DEGENERATE_TOL:
        return ac.circ.d
    return None


def fcpg_step(x, ac: ActiveCone, w, sigma: float, t: float) -> np.ndarray:
    """One feasibility-corrected step x + t (d + sigma*w)."""
    x = np.asarray(x, dtype=float).ravel()
    w = np.asarray(w, dtype=float).ravel()
    if not (0.0 < sigma < sigma_star(ac, w)):
        raise StepTooLong(f"sigma = {sigma} not in (0, sigma*)")
    if t <= 0.0:
        raise ValueError("t must be positive")
    direction = ac.circ.d + sigma * w
    if np.max(ac.base.matrix @ direction) >= 0.0:
        raise StepTooLong("search direction is not strictly interior")
    return x + t * direction


# ---------------------------------------------------------------------------
# L-infinity-ball constrained least squares


@dataclass(frozen=True)
class LinfProblem:
    """min (1/2)||Ax - b||^2  s.t.  ||Cx - d||_inf <= tau."""

    A: np.ndarray
    b: np.ndarray
    C: np.ndarray
    dvec: np.ndarray
    tau: float

    def __post_init__(self):
        object.__setattr__(self, "A", np.atleast_2d(np.asarray(self.A, float)))
        object.__setattr__(self, "b", np.asarray(self.b, float).ravel())
        object.__setattr__(self, "C", np.atleast_2d(np.asarray(self.C, float)))
        object.__setattr__(self, "dvec", np.asarray(self.dvec, float).ravel())
        if self.tau <= 0.0:
            raise ValueError("tau must be positive")
        if np.any(np.linalg.norm(self.C, axis=1) == 0.0):
            raise ValueError("C must have no zero row")

    @property
    def n(self) -> int:
        return self.A.shape[1]

    def objective(self, x) -> float:
        r = self.A @ x - self.b
        return 0.5 * float(r @ r)

    def gradient(self, x) -> np.ndarray:
        return self.A.T @ (self.A @ x - self.b)

    def feasibility_margin(self, x) -> float:
        return self.tau - float(np.max(np.abs(self.C @ x - self.dvec)))


def linf_oracle(prob: LinfProblem, x,
                tol: float = ACTIVITY_TOL) -> tuple[ActiveCone, np.ndarray, float]:
    """Signed active rows, circum direction, and the sharp step for Linf-LS."""
    x = np.asarray(x, dtype=float).ravel()
    r = prob.C @ x - prob.dvec
    atol = tol * (1.0 + prob.tau)
    if np.max(np.abs(r)) > prob.tau + atol:
        raise InfeasiblePoint("point violates the L-infinity box")
    gradients, labels = [], []
    for j, rj in enumerate(r):
        plus = rj >= prob.tau - atol
        minus = rj <= -prob.tau + atol
        if plus and minus:
            raise DegenerateBox(f"both signs of row {j} active (tau ~ 0)")
        if plus:
            gradients.append(prob.C[j])
            labels.append(f"row{j}+")
        elif minus:
            gradients.append(-prob.C[j])
            labels.append(f"row{j}-")
    if not gradients:
        raise NoActiveConstraints("no box face active at this point")
    ac = build_active_cone(gradients, labels)
    w = -prob.gradient(x)
    return ac, w, sigma_star(ac, w)


# ---------------------------------------------------------------------------
# second-order cone programming


@dataclass(frozen=True)
class SocpConstraint:
    """||A x - b|| <= c.x + delta."""

    A: np.ndarray
    b: np.ndarray
    c: np.ndarray
    delta: float

    def __post_init__(self):
        object.__setattr__(self, "A", np.atleast_2d(np.asarray(self.A, float)))
        object.__setattr__(self, "b", np.asarray(self.b, float).ravel())
        object.__setattr__(self, "c", np.asarray(self.c, float).ravel())

    def value(self, x) -> float:
        return float(np.linalg.norm(self.A @ x - self.b)
                     - self.c @ x - self.delta)

    def residual_norm(self, x) -> float:
        return float(np.linalg.norm(self.A @ x - self.b))

    def gradient(self, x) -> np.ndarray:
        r = self.A @ x - self.b
        return self.A.T @ r / np.linalg.norm(r) - self.c


@dataclass(frozen=True)
class SocpProblem:
    """min (1/2) x'Qx + q'x  s.t.  ||A_j x - b_j|| <= c_j.x + delta_j."""

    Q: np.ndarray
    q: np.ndarray
    constraints: tuple[SocpConstraint, ...]

    def __post_init__(self):
        Q = np.atleast_2d(np.asarray(self.Q, float))
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "q", np.asarray(self.q, float).ravel())
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if not np.allclose(Q, Q.T, atol=1e-10):
            raise ValueError("Q must be symmetric")
        if np.linalg.eigvalsh(0.5 * (Q + Q.T))[0] < -1e-10:
            raise ValueError("Q must be positive semidefinite")

    @property
    def n(self) -> int:
        return self.Q.shape[0]

    def objective(self, x) -> float:
        return 0.5 * float(x @ self.Q @ x) + float(self.q @ x)

    def gradient(self, x) -> np.ndarray:
        return self.Q @ x + self.q

    def feasibility_margin(self, x) -> float:
        return -max(con.value(x) for con in self.constraints)


def socp_oracle(prob: SocpProblem, x,
                tol: float = ACTIVITY_TOL) -> tuple[ActiveCone, np.ndarray, float]:
    """Active SOC gradients, circum direction, and the sharp step."""
    x = np.asarray(x, dtype=float).ravel()
    gradients, labels = [], []
    for j, con in enumerate(prob.constraints):
        value = con.value(x)
        scaled = tol * (1.0 + abs(con.delta))
        if value > scaled:
            raise InfeasiblePoint(f"SOC constraint {j} violated: {value:.3e}")
        if value >= -scaled:
            if con.residual_norm(x) <= APEX_TOL:
                raise ApexError(j)
            gradients.append(con.gradient(x))
            labels.append(f"soc{j}")
    if not gradients:
        raise NoActiveConstraints("no SOC constraint active at this point")
    ac = build_active_cone(gradients, labels)
    w = -prob.gradient(x)
    return ac, w, sigma_star(ac, w)


# ---------------------------------------------------------------------------
# feasibility-corrected projected-gradient driver


Problem = Union[LinfProblem, SocpProblem]


@dataclass
class FcpgParams:
    tol: float = 1e-8
    max_iter: int = 100
    t0: float = 1.0
    max_halvings: int = 60


@dataclass(frozen=True)
class TraceRow:
    iter: int
    objective: float
    margin: float
    active_count: int
    norm_sq: float  # nan on interior (plain-gradient) iterations
    sigma: float    # nan on interior iterations
    t: float


@dataclass
class FcpgResult:
    x: np.ndarray
    trace: list[TraceRow] = field(default_factory=list)
    stop_reason: str = ""

    def trace_csv(self) -> str:
        lines = ["iter,objective,margin,active_count,norm_sq,sigma,t"]
        for row in self.trace:
            lines.append(
                f"{row.iter},{row.objective!r},{row.margin!r},"
                f"{row.active_count},{row.norm_sq!r},{row.sigma!r},{row.t!r}"
            )
        return "\n".join(lines) + "\n"


def _oracle(prob: Problem, x):
    if isinstance(prob, LinfProblem):
        return linf_oracle(prob, x)
    return socp_oracle(prob, x)


def run_fcpg(prob: Problem, x0, params: Optional[FcpgParams] = None) -> FcpgResult:
    """Feasibility-corrected projected gradient with feasibility backtracking.

    Active iterations move along d + sigma*w with sigma = sigma*/2 (or the
    conservative ||d||^2/||w|| when sigma* is infinite); interior iterations
    take plain gradient steps.  t is halved until the trial point is
    feasible.
    """
    params = params or FcpgParams()
    x = np.asarray(x0, dtype=float).ravel()
    if prob.feasibility_margin(x) <= 0.0:
        raise InfeasiblePoint("x0 must be strictly feasible")
    result = FcpgResult(x=x)
    for k in range(params.max_iter):
        grad = prob.gradient(x)
        gnorm = float(np.linalg.norm(grad))
        if gnorm < params.tol:
            result.stop_reason = "gradient_norm"
            break
        w = -grad
        try:
            ac, w, sstar = _oracle(prob, x)
            norm_sq = ac.circ.norm_sq
            if math.isfinite(sstar):
                sigma = 0.5 * sstar
            else:
                sigma = norm_sq / float(np.linalg.norm(w))
            direction = ac.circ.d + sigma * w
            active_count = len(ac.labels)
        except NoActiveConstraints:
            direction = w
            active_count = 0
            norm_sq = math.nan
            sigma = math.nan
        t = params.t0
        halvings = 0
        while prob.feasibility_margin(x + t * direction) < 0.0:
            t *= 0.5
            halvings += 1
            if halvings > params.max_halvings:
                raise StepFailure(
                    f"no feasible step after {params.max_halvings} halvings"
                )
        x = x + t * direction
        result.trace.append(TraceRow(
            iter=k,
            objective=prob.objective(x),
            margin=prob.feasibility_margin(x),
            active_count=active_count,
            norm_sq=norm_sq,
            sigma=sigma,
            t=t,
        ))
    else:
        result.stop_reason = "max_iter"
    result.x = x
    return result
