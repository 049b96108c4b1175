"""Service layer: one function per subcommand/endpoint.

The CLI calls these in-process; the FastAPI app wraps them over HTTP.
Domain failures propagate as CircumconeError for uniform error mapping.
"""
from __future__ import annotations

import math

import numpy as np

from . import admissible, bregman, cones, geometry, probes, stepping
from .errors import HypothesisFails
from .schemas import (
    BregmanRequest,
    BregmanResponse,
    CircumRequest,
    CircumResponse,
    CsvResponse,
    DepthRequest,
    DepthResponse,
    ExtendedReal,
    FcpgRequest,
    FigureRequest,
    HypothesisModel,
    LinfSpec,
    ProbeReportModel,
    StepRequest,
    StepResponse,
    VerifyCheck,
    VerifyRequest,
    VerifyResponse,
    ZooRequest,
    ZooResponse,
)

_ROUTES = {
    "gram": geometry.circum_via_gram,
    "proj": geometry.circum_via_projection,
    "system": geometry.circum_via_system,
}


def _circum_with_fallback(base) -> geometry.CircumDirection:
    try:
        return geometry.circum_via_gram(base)
    except geometry.DependentBase:
        return geometry.circum_via_projection(base)


def compute_circum(req: CircumRequest) -> CircumResponse:
    base = req.base.to_core()
    cd = _ROUTES[req.route](base)
    lo, hi = geometry.spectral_bounds(geometry.gram(base))
    return CircumResponse(
        d=cd.d.tolist(),
        norm_sq=cd.norm_sq,
        weights=None if cd.weights is None else cd.weights.tolist(),
        aperture=cd.aperture,
        spectral_lo=lo,
        spectral_hi=hi,
    )


def compute_depth(req: DepthRequest) -> DepthResponse:
    w = np.array(req.direction, dtype=float)
    if req.base is not None:
        base = req.base.to_core()
        cd = _circum_with_fallback(base)
        res = admissible.directional_depth(base, cd.norm_sq, w)
    else:
        res = cones.directional_depth_np(req.cone.to_core(), w)
    return DepthResponse(rho=ExtendedReal.wrap(res.value),
                         binding=res.binding_index)


def compute_step(req: StepRequest) -> StepResponse:
    prob = req.problem.to_core()
    x = np.array(req.point, dtype=float)
    if isinstance(req.problem, LinfSpec):
        ac, w, sigma = stepping.linf_oracle(prob, x)
    else:
        ac, w, sigma = stepping.socp_oracle(prob, x)
    return StepResponse(
        active=list(ac.labels),
        d=ac.circ.d.tolist(),
        norm_sq=ac.circ.norm_sq,
        w=w.tolist(),
        sigma=ExtendedReal.wrap(sigma),
    )


def compute_zoo(req: ZooRequest) -> ZooResponse:
    cone = req.cone.to_core()
    resp = ZooResponse(variant=cone.variant, dim=cone.dim,
                       jordan=cones.jordan_value(cone))
    try:
        cd = cones.circum_direction(cone)
        resp.d = cd.d.tolist()
        resp.norm_sq = cd.norm_sq
        resp.aperture = cd.aperture
    except HypothesisFails as exc:
        resp.error = f"HypothesisFails: {exc}"
    if req.hypothesis:
        samples = cones.sample_extremal(cone, req.samples, req.seed)
        rep = cones.hypothesis_check(samples)
        resp.hypothesis = HypothesisModel(holds=rep.holds,
                                          distance=rep.distance)
    return resp


def compute_bregman(req: BregmanRequest) -> BregmanResponse:
    h = req.h.to_core()
    base = req.base.to_core()
    bd = bregman.bregman_direction(h, base)
    return BregmanResponse(c_h=bd.c_h.tolist(), d_h=bd.d_h.tolist(),
                           kappa=bd.kappa)


def run_fcpg_csv(req: FcpgRequest) -> CsvResponse:
    prob = req.problem.to_core()
    params = stepping.FcpgParams(tol=req.tol, max_iter=req.max_iter)
    result = stepping.run_fcpg(prob, np.array(req.x0, dtype=float), params)
    return CsvResponse(csv=result.trace_csv())


# ---------------------------------------------------------------------------
# verification suites


def _report_model(rep: probes.ProbeReport) -> ProbeReportModel:
    worst = rep.worst_margin
    return ProbeReportModel(
        trials=rep.trials,
        failures=rep.failures,
        worst_margin=worst if math.isfinite(worst) else None,
        seed=rep.seed,
    )


def _weyl_suite(seed: int) -> list[VerifyCheck]:
    checks = []
    for n in (2, 3, 5):
        rep = probes.weyl_check(n, trials=1000, seed=seed + n)
        checks.append(VerifyCheck(name=f"weyl_n{n}", passed=rep.ok,
                                  report=_report_model(rep)))
    return checks


def _ball_cases():
    return [
        ("orthant3", cones.Orthant(3)),
        ("soc3", cones.SOC(3)),
        ("psd3", cones.PSD(3)),
        ("product_1_2", cones.Product((cones.Orthant(1), cones.Orthant(2)))),
    ]


def _ball_suite(seed: int) -> list[VerifyCheck]:
    checks = []
    for name, cone in _ball_cases():
        cd = cones.circum_direction(cone)
        member = lambda z, c=cone: cones.polar_membership(c, z)
        inside = probes.ball_probe(member, cd.d, 0.999 * cd.norm_sq,
                                   trials=500, seed=seed)
        checks.append(VerifyCheck(name=f"{name}_inside", passed=inside.ok,
                                  report=_report_model(inside)))
        # overshoot along sampled extremal directions must be caught
        hits = 0
        samples = cones.sample_extremal(cone, 50, seed)
        for u in samples:
            if not member(cd.d + 1.001 * cd.norm_sq * u):
                hits += 1
        over = probes.ProbeReport(trials=len(samples),
                                  failures=len(samples) - hits,
                                  worst_margin=math.inf, seed=seed)
        checks.append(VerifyCheck(name=f"{name}_overshoot", passed=over.ok,
                                  report=_report_model(over)))
    return checks


def _depth_cases(rng: np.random.Generator):
    base = geometry.build_base(rng.normal(size=(3, 5)))
    return [
        ("orthant4", cones.Orthant(4)),
        ("soc4", cones.SOC(4)),
        ("psd3", cones.PSD(3)),
        ("polyhedral", cones.Polyhedral(base)),
    ]


def _depth_suite(seed: int) -> list[VerifyCheck]:
    rng = np.random.default_rng(seed)
    checks = []
    for name, cone in _depth_cases(rng):
        member = lambda z, c=cone: cones.polar_membership(c, z)
        cd = cones.circum_direction(cone)
        failures = 0
        worst = 0.0
        trials = 20
        for _ in range(trials):
            w = rng.normal(size=cone.dim)
            w /= np.linalg.norm(w)
            formula = cones.directional_depth_np(cone, w).value
            oracle = probes.depth_by_bisection(member, cd.d, w)
            if math.isinf(formula) != math.isinf(oracle):
                failures += 1
            elif math.isfinite(formula):
                diff = abs(formula - oracle)
                worst = max(worst, diff)
                if diff > 1e-6:
                    failures += 1
        rep = probes.ProbeReport(trials=trials, failures=failures,
                                 worst_margin=worst, seed=seed)
        checks.append(VerifyCheck(name=f"depth_{name}", passed=rep.ok,
                                  report=_report_model(rep)))
    return checks


def run_verify(req: VerifyRequest) -> VerifyResponse:
    suites = {
        "weyl": _weyl_suite,
        "ball": _ball_suite,
        "depth": _depth_suite,
    }
    names = list(suites) if req.suite == "all" else [req.suite]
    checks: list[VerifyCheck] = []
    for name in names:
        checks.extend(suites[name](req.seed))
    return VerifyResponse(suite=req.suite, seed=req.seed, checks=checks,
                          ok=all(c.passed for c in checks))


# ---------------------------------------------------------------------------
# figure data


def _csv_rows(rows) -> str:
    return "\n".join(",".join(repr(float(x)) if not isinstance(x, str) else x
                              for x in row) for row in rows) + "\n"


def _figure_orthant() -> str:
    rows = [("series", "x", "y")]
    for y in np.linspace(0.5, -2.0, 26):
        rows.append(("boundary_v1", 0.5, y))
    for x in np.linspace(0.5, -2.0, 26):
        rows.append(("boundary_v2", x, 0.5))
    for phi in np.linspace(0.0, 2.0 * math.pi, 129):
        rows.append(("inscribed_circle", 0.5 * math.cos(phi),
                     0.5 * math.sin(phi)))
    rows.append(("contact", 0.5, 0.0))
    rows.append(("contact", 0.0, 0.5))
    rows.append(("direction", -0.5, -0.5))
    for t in np.linspace(0.0, 2.0, 21):
        rows.append(("recession", -t, -t))
    return _csv_rows(rows)


def _figure_soc() -> str:
    r2 = math.sqrt(2.0)
    rows = [("series", "x", "y", "z")]
    for phi in np.linspace(0.0, 2.0 * math.pi, 129):
        c, s = math.cos(phi), math.sin(phi)
        rows.append(("extremal_circle", c / r2, s / r2, 1.0 / r2))
        rows.append(("contact_circle", c / (2 * r2), s / (2 * r2),
                     -1.0 / (2 * r2)))
        rows.append(("ball_equator", 0.5 * c, 0.5 * s, -1.0 / r2))
        rows.append(("polar_rim", c / r2, s / r2, -1.0 / r2))
    rows.append(("direction", 0.0, 0.0, -1.0 / r2))
    for t in np.linspace(0.0, 2.0, 21):
        rows.append(("recession", 0.0, 0.0, -t))
    return _csv_rows(rows)


def figure_csv(req: FigureRequest) -> CsvResponse:
    if req.name == "orthant":
        return CsvResponse(csv=_figure_orthant())
    return CsvResponse(csv=_figure_soc())
