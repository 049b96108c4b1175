"""Circumcentric directions of convex cones and their polar certificates."""

from .admissible import (
    DepthResult,
    admissible_margin,
    angular_depth_bound,
    contact_points,
    directional_depth,
)
from .bregman import (
    BregmanDirection,
    Euclidean,
    LegendreFunction,
    Mahalanobis,
    PNorm,
    bregman_ball_check,
    bregman_direction,
    bregman_proj_affine,
    mirror_step,
    sigma_star_h,
)
from .cones import (
    DNN,
    PSD,
    SOC,
    Orthant,
    PCone,
    Polyhedral,
    Product,
    circum_direction,
    directional_depth_np,
    hypothesis_check,
    jordan_value,
    polar_membership,
    sample_extremal,
    support_on_extremal,
    support_sampled,
    sym_embed,
    sym_restore,
)
from .errors import (
    ApexError,
    CircumconeError,
    DegenerateDirection,
    DependentBase,
    HypothesisFails,
    InfeasiblePoint,
    UnsupportedExact,
)
from .geometry import (
    CircumDirection,
    ConicBase,
    aperture_axis,
    build_base,
    circum_via_gram,
    circum_via_projection,
    circum_via_system,
    gram,
    spectral_bounds,
)
from .probes import ProbeReport, ball_probe, depth_by_bisection, weyl_check
from .stepping import (
    ActiveCone,
    FcpgParams,
    FcpgResult,
    LinfProblem,
    SocpConstraint,
    SocpProblem,
    build_active_cone,
    fcpg_step,
    linf_oracle,
    mfcq_witness,
    run_fcpg,
    sigma_star,
    socp_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "ActiveCone",
    "ApexError",
    "BregmanDirection",
    "CircumDirection",
    "CircumconeError",
    "ConicBase",
    "DNN",
    "DegenerateDirection",
    "DependentBase",
    "DepthResult",
    "Euclidean",
    "FcpgParams",
    "FcpgResult",
    "HypothesisFails",
    "InfeasiblePoint",
    "LegendreFunction",
    "LinfProblem",
    "Mahalanobis",
    "Orthant",
    "PCone",
    "PNorm",
    "PSD",
    "Polyhedral",
    "ProbeReport",
    "Product",
    "SOC",
    "SocpConstraint",
    "SocpProblem",
    "UnsupportedExact",
    "admissible_margin",
    "angular_depth_bound",
    "aperture_axis",
    "ball_probe",
    "bregman_ball_check",
    "bregman_direction",
    "bregman_proj_affine",
    "build_active_cone",
    "build_base",
    "circum_direction",
    "circum_via_gram",
    "circum_via_projection",
    "circum_via_system",
    "contact_points",
    "depth_by_bisection",
    "directional_depth",
    "directional_depth_np",
    "fcpg_step",
    "gram",
    "hypothesis_check",
    "jordan_value",
    "linf_oracle",
    "mfcq_witness",
    "mirror_step",
    "polar_membership",
    "run_fcpg",
    "sample_extremal",
    "sigma_star",
    "sigma_star_h",
    "socp_oracle",
    "spectral_bounds",
    "support_on_extremal",
    "support_sampled",
    "sym_embed",
    "sym_restore",
    "weyl_check",
]
