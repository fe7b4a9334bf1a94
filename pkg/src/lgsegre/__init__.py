"""Landau-Ginzburg models on the minimal adjoint orbit of sl(n+1).

Exact Gaussian-rational arithmetic throughout: the orbit in its matrix and
rank-one tensor models, the height-function potential and its rational
extension, Bruhat charts, and the comparison of the homogenized orbit ideal
with the Segre (2x2 minors) ideal by Groebner bases.
"""

from .exact import GaussianRational, SquareMatrix, adjugate, det, parse_scalar
from .liecore import FormSpec, LieElement, GroupElement, WeylElement
from .orbit import NonRegularError, OrbitSpec, TensorPoint, adjoint_point, model_map, sample_sl, tensor_point
from .lgfib import IndeterminacyError, critical_points, potential_f, rational_potential_R, sl2_fiber
from .segre import IncidencePair, ProjectivePoint, segre_coords
from .polyideal import (
    MonomialOrder,
    Polynomial,
    PolynomialIdeal,
    ResourceCapExceeded,
    compare_with_segre,
    groebner,
    ideal_equal,
)
from .checks import VerificationReport, emit_report, run_check

__all__ = [
    "FormSpec",
    "GaussianRational",
    "GroupElement",
    "IncidencePair",
    "IndeterminacyError",
    "LieElement",
    "MonomialOrder",
    "NonRegularError",
    "OrbitSpec",
    "Polynomial",
    "PolynomialIdeal",
    "ProjectivePoint",
    "ResourceCapExceeded",
    "SquareMatrix",
    "TensorPoint",
    "VerificationReport",
    "WeylElement",
    "adjoint_point",
    "adjugate",
    "compare_with_segre",
    "critical_points",
    "det",
    "emit_report",
    "groebner",
    "ideal_equal",
    "model_map",
    "parse_scalar",
    "potential_f",
    "rational_potential_R",
    "run_check",
    "sample_sl",
    "segre_coords",
    "sl2_fiber",
    "tensor_point",
]

__version__ = "0.1.0"
