"""Pydantic request/response models shared by the CLI and the service.

Infinite values never appear as JSON numbers: extended reals serialize
as a nullable float paired with an explicit ``infinite`` flag.
"""
from __future__ import annotations

import math
from typing import Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, Field, model_validator

from . import bregman, cones, stepping
from .geometry import ConicBase, build_base


# ---------------------------------------------------------------------------
# input file schemas


class BaseSpec(BaseModel):
    """Conic base file: vectors may be unnormalized on input."""

    n: int
    vectors: list[list[float]]

    def to_core(self) -> ConicBase:
        base = build_base(self.vectors)
        if base.n != self.n:
            raise ValueError(f"vectors have dimension {base.n}, header says {self.n}")
        return base


class ConeSpec(BaseModel):
    variant: Literal["orthant", "soc", "psd", "dnn", "pcone", "product",
                     "polyhedral"]
    n: Optional[int] = None
    p: Optional[float] = None
    blocks: Optional[list["ConeSpec"]] = None
    base: Optional[BaseSpec] = None

    def to_core(self) -> cones.ConeDescriptor:
        if self.variant == "orthant":
            return cones.Orthant(self._need_n())
        if self.variant == "soc":
            return cones.SOC(self._need_n())
        if self.variant == "psd":
            return cones.PSD(self._need_n())
        if self.variant == "dnn":
            return cones.DNN(self._need_n())
        if self.variant == "pcone":
            if self.p is None:
                raise ValueError("pcone needs the field p")
            return cones.PCone(self._need_n(), self.p)
        if self.variant == "product":
            if not self.blocks:
                raise ValueError("product needs nonempty blocks")
            return cones.Product(tuple(b.to_core() for b in self.blocks))
        if self.base is None:
            raise ValueError("polyhedral needs a base")
        return cones.Polyhedral(self.base.to_core())

    def _need_n(self) -> int:
        if self.n is None:
            raise ValueError(f"{self.variant} needs the field n")
        return self.n


class LegendreSpec(BaseModel):
    family: Literal["euclidean", "pnorm", "mahalanobis"]
    p: Optional[float] = None
    A: Optional[list[list[float]]] = None

    def to_core(self) -> bregman.LegendreFunction:
        if self.family == "euclidean":
            return bregman.Euclidean()
        if self.family == "pnorm":
            if self.p is None:
                raise ValueError("pnorm needs the field p")
            return bregman.PNorm(self.p)
        if self.A is None:
            raise ValueError("mahalanobis needs the matrix A")
        return bregman.Mahalanobis(np.array(self.A))


class LinfSpec(BaseModel):
    type: Literal["linf"] = "linf"
    A: list[list[float]]
    b: list[float]
    C: list[list[float]]
    d: list[float]
    tau: float

    def to_core(self) -> stepping.LinfProblem:
        return stepping.LinfProblem(A=np.array(self.A), b=np.array(self.b),
                                    C=np.array(self.C), dvec=np.array(self.d),
                                    tau=self.tau)


class SocpConstraintSpec(BaseModel):
    A: list[list[float]]
    b: list[float]
    c: list[float]
    delta: float


class SocpSpec(BaseModel):
    type: Literal["socp"] = "socp"
    Q: list[list[float]]
    q: list[float]
    constraints: list[SocpConstraintSpec]

    def to_core(self) -> stepping.SocpProblem:
        cons = tuple(
            stepping.SocpConstraint(A=np.array(c.A), b=np.array(c.b),
                                    c=np.array(c.c), delta=c.delta)
            for c in self.constraints
        )
        return stepping.SocpProblem(Q=np.array(self.Q), q=np.array(self.q),
                                    constraints=cons)


ProblemSpec = Union[LinfSpec, SocpSpec]


# ---------------------------------------------------------------------------
# requests


class CircumRequest(BaseModel):
    base: BaseSpec
    route: Literal["gram", "proj", "system"] = "gram"


class DepthRequest(BaseModel):
    base: Optional[BaseSpec] = None
    cone: Optional[ConeSpec] = None
    direction: list[float]

    @model_validator(mode="after")
    def _exactly_one_geometry(self):
        if (self.base is None) == (self.cone is None):
            raise ValueError("provide exactly one of base / cone")
        return self


class StepRequest(BaseModel):
    problem: ProblemSpec = Field(discriminator="type")
    point: list[float]


class ZooRequest(BaseModel):
    cone: ConeSpec
    hypothesis: bool = False
    samples: int = 200
    seed: int = 0


class BregmanRequest(BaseModel):
    h: LegendreSpec
    base: BaseSpec


class FcpgRequest(BaseModel):
    problem: ProblemSpec = Field(discriminator="type")
    x0: list[float]
    max_iter: int = 100
    tol: float = 1e-8


class VerifyRequest(BaseModel):
    suite: Literal["all", "depth", "ball", "weyl"] = "all"
    seed: int = 0


class FigureRequest(BaseModel):
    name: Literal["orthant", "soc"]


# ---------------------------------------------------------------------------
# responses


class ExtendedReal(BaseModel):
    """A nonnegative extended real; ``value`` is null when infinite."""

    value: Optional[float] = None
    infinite: bool = False

    @classmethod
    def wrap(cls, x: float) -> "ExtendedReal":
        if math.isinf(x):
            return cls(value=None, infinite=True)
        return cls(value=float(x), infinite=False)


class CircumResponse(BaseModel):
    d: list[float]
    norm_sq: float
    weights: Optional[list[float]] = None
    aperture: float
    spectral_lo: float
    spectral_hi: float


class DepthResponse(BaseModel):
    rho: ExtendedReal
    binding: Optional[int] = None


class StepResponse(BaseModel):
    active: list[str]
    d: list[float]
    norm_sq: float
    w: list[float]
    sigma: ExtendedReal


class HypothesisModel(BaseModel):
    holds: bool
    distance: float


class ZooResponse(BaseModel):
    variant: str
    dim: int
    d: Optional[list[float]] = None
    norm_sq: Optional[float] = None
    aperture: Optional[float] = None
    jordan: Optional[float] = None
    hypothesis: Optional[HypothesisModel] = None
    error: Optional[str] = None


class BregmanResponse(BaseModel):
    c_h: list[float]
    d_h: list[float]
    kappa: float


class ProbeReportModel(BaseModel):
    trials: int
    failures: int
    worst_margin: Optional[float] = None
    seed: int


class VerifyCheck(BaseModel):
    name: str
    passed: bool
    report: ProbeReportModel


class VerifyResponse(BaseModel):
    suite: str
    seed: int
    checks: list[VerifyCheck]
    ok: bool


class CsvResponse(BaseModel):
    csv: str


ConeSpec.model_rebuild()
