"""Prism complexes as a combinatorial model of Seifert fibred 3-manifolds."""

from .builders import BuildError, involution_bundle, mapping_torus, prismify
from .fibration import (
    Fibration,
    FibrationError,
    NotSpecial,
    classify_circuits,
    extract_fibration,
    horizontal_surface,
)
from .manifold3 import Triangulation3, barycentric_subdivide3, is_simplicial3, validate3
from .prism import PrismComplex, complex_stats, edge_classes, is_special, validate_prism_complex
from .report import InvalidInput, ValidationReport, Violation
from .seifert import (
    SeifertParams,
    build_slope_curves,
    decide_horizontal,
    euler_number,
    extension_rectangle,
    extension_surface,
    horizontal_multiplicity,
    pn_closure_check,
)
from .surface import (
    SimplicialAutomorphism,
    SurfaceTriangulation,
    automorphism_order,
    barycentric_subdivide_surface,
    check_automorphism,
    enumerate_automorphisms,
    is_fixed_point_free,
    surface_stats,
    validate_surface,
)

__version__ = "0.1.0"

__all__ = [
    "BuildError",
    "Fibration",
    "FibrationError",
    "InvalidInput",
    "NotSpecial",
    "PrismComplex",
    "SeifertParams",
    "SimplicialAutomorphism",
    "SurfaceTriangulation",
    "Triangulation3",
    "ValidationReport",
    "Violation",
    "automorphism_order",
    "barycentric_subdivide3",
    "barycentric_subdivide_surface",
    "build_slope_curves",
    "check_automorphism",
    "classify_circuits",
    "complex_stats",
    "decide_horizontal",
    "edge_classes",
    "enumerate_automorphisms",
    "euler_number",
    "extension_rectangle",
    "extension_surface",
    "extract_fibration",
    "horizontal_multiplicity",
    "horizontal_surface",
    "involution_bundle",
    "is_fixed_point_free",
    "is_simplicial3",
    "is_special",
    "mapping_torus",
    "pn_closure_check",
    "prismify",
    "surface_stats",
    "validate3",
    "validate_prism_complex",
    "validate_surface",
]
