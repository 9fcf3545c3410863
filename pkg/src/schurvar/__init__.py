"""Schur-algorithm interpolation and variability regions of analytic functions.

The package peels Carathéodory coefficient data into Schur parameters,
classifies the data against the coefficient body, builds the associated
polynomial quadruple, and computes the variability region of the weighted
primitive functional over all admissible maps into a convex target domain
— including its extremal boundary parametrization, a closed-form
cross-check for the bounded-derivative special case, and Monte-Carlo
membership verification.
"""

from .domains import DomainMap, disk, half_plane, parse_domain, strip
from .errors import (
    BranchCutHit,
    ContractViolation,
    DegenerateDenominator,
    GeometryDegenerate,
    QuadratureNonConvergence,
    SchurvarError,
)
from .polynomials import (
    Polynomial,
    SchurPolynomialSet,
    VariabilityDisk,
    build_polynomials,
    eval_poly,
    identity_residuals,
    omega_nested,
    omega_rational,
    schur_lift,
    variability_disk,
)
from .quadrature import integrate_segment
from .regions import (
    Empty,
    Jordan,
    OracleSample,
    RegionRequest,
    RegionResult,
    SinglePoint,
    boundary_curve,
    containment_depths,
    contains,
    convex_hull,
    convexity_defect,
    distance_to_boundary,
    enclosed_area,
    hausdorff_distance,
    integrand,
    log_derivative_curve,
    log_derivative_setup,
    oracle_samples,
    q_value,
    region,
    sample_member,
)
from .schur import (
    Boundary,
    CaratheodoryData,
    Exterior,
    ExteriorReason,
    Interior,
    SchurClassification,
    ToleranceConfig,
    data_from_parameters,
    mobius,
    schur_parameters,
    schur_step,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "SchurvarError",
    "ContractViolation",
    "DegenerateDenominator",
    "QuadratureNonConvergence",
    "GeometryDegenerate",
    "BranchCutHit",
    # peeling
    "CaratheodoryData",
    "ToleranceConfig",
    "SchurClassification",
    "Interior",
    "Boundary",
    "Exterior",
    "ExteriorReason",
    "mobius",
    "schur_step",
    "schur_parameters",
    "data_from_parameters",
    # polynomials
    "Polynomial",
    "SchurPolynomialSet",
    "VariabilityDisk",
    "build_polynomials",
    "eval_poly",
    "omega_nested",
    "omega_rational",
    "schur_lift",
    "variability_disk",
    "identity_residuals",
    # domains
    "DomainMap",
    "half_plane",
    "disk",
    "strip",
    "parse_domain",
    # quadrature
    "integrate_segment",
    # regions
    "RegionRequest",
    "RegionResult",
    "Empty",
    "SinglePoint",
    "Jordan",
    "OracleSample",
    "integrand",
    "q_value",
    "boundary_curve",
    "region",
    "log_derivative_curve",
    "log_derivative_setup",
    "sample_member",
    "oracle_samples",
    "contains",
    "containment_depths",
    "convexity_defect",
    "convex_hull",
    "distance_to_boundary",
    "hausdorff_distance",
    "enclosed_area",
]
