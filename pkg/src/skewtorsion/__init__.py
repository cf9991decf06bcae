"""Exact rational computations for G-structures with skew-symmetric torsion.

Forms, frames, connections and curvature are handled with
:class:`fractions.Fraction` coefficients only; every check is an exact
equality.
"""

from .errors import (
    ConsistencyError,
    DegreeMismatch,
    DimensionMismatch,
    FrameSyntaxError,
    GeometryError,
    InvalidFrame,
    NotAdmissible,
    UnsupportedOperation,
)
from .exterior import (
    Endomorphism,
    KForm,
    exact_einsum,
    format_form,
    hodge_star,
    inner,
    linear_ratio,
    parse_form,
    pullback_endo,
    scalar,
    volume,
    wedge,
    zeros,
)
from .frames import (
    Connection,
    CurvatureTensor,
    LieFrame,
    ModelSpace,
    add_torsion,
    codifferential,
    constant_curvature,
    covariant_derivative_3form,
    curvature,
    dT_quadratic,
    exterior_derivative,
    is_parallel,
    levi_civita,
    pontrjagin,
    pontrjagin_raw,
    product_with_line,
    ricci,
    ricci_scalar_weyl,
    scalar_curvature,
    tilde_curvature,
)
from .structures import (
    ContactStructure,
    DilatonData,
    G2Structure,
    Spin7Structure,
    SU3Structure,
    canonical,
    g2_torsion,
    in_g2,
    in_spin7,
    in_su3,
    instanton_check,
    lee_form,
    lift_contact_to_hermitian,
    lift_g2_to_spin7,
    lift_su3_to_g2,
    nijenhuis,
    scalar_identity_check,
    spin7_torsion,
    su3_analyze,
    su3_torsion,
)
from .models import ModelHandle, build, calibrate_pontrjagin
from .report import BianchiReport, CheckResult, bianchi_calibrate
from .scenarios import UsageError, run_scenario
from .cli import format_frame, parse_frame

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "DegreeMismatch",
    "DimensionMismatch",
    "FrameSyntaxError",
    "GeometryError",
    "InvalidFrame",
    "NotAdmissible",
    "UnsupportedOperation",
    "Endomorphism",
    "KForm",
    "exact_einsum",
    "format_form",
    "hodge_star",
    "inner",
    "linear_ratio",
    "parse_form",
    "pullback_endo",
    "scalar",
    "volume",
    "wedge",
    "zeros",
    "Connection",
    "CurvatureTensor",
    "LieFrame",
    "ModelSpace",
    "add_torsion",
    "codifferential",
    "constant_curvature",
    "covariant_derivative_3form",
    "curvature",
    "dT_quadratic",
    "exterior_derivative",
    "is_parallel",
    "levi_civita",
    "pontrjagin",
    "pontrjagin_raw",
    "product_with_line",
    "ricci",
    "ricci_scalar_weyl",
    "scalar_curvature",
    "tilde_curvature",
    "ContactStructure",
    "DilatonData",
    "G2Structure",
    "Spin7Structure",
    "SU3Structure",
    "canonical",
    "g2_torsion",
    "in_g2",
    "in_spin7",
    "in_su3",
    "instanton_check",
    "lee_form",
    "lift_contact_to_hermitian",
    "lift_g2_to_spin7",
    "lift_su3_to_g2",
    "nijenhuis",
    "scalar_identity_check",
    "spin7_torsion",
    "su3_analyze",
    "su3_torsion",
    "ModelHandle",
    "build",
    "calibrate_pontrjagin",
    "BianchiReport",
    "CheckResult",
    "bianchi_calibrate",
    "UsageError",
    "run_scenario",
    "format_frame",
    "parse_frame",
    "__version__",
]
