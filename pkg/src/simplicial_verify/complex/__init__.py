from .base import BaseComplex
from .face import Face, VertexMap, VertexPermutation
from .operations import (
    AnyComplex,
    BalanceCheck,
    InducedCheck,
    apply_permutation,
    boundary_complex,
    combinatorial_closure,
    cone,
    enumerate_faces,
    induced_subcomplex,
    intersection,
    is_automorphism,
    is_balanced,
    is_induced,
    link,
    minimal_faces,
    relabel,
    require_pure,
    ridge_degrees,
    union,
)
from .relative import RelativeComplex
from .simplicial import NormalizationReport, SimplicialComplex, build_complex
from .vectors import (
    FVector,
    HVector,
    f_from_h,
    f_vector,
    h_from_f,
    h_vector,
    h_vector_obstruction,
)

__all__ = [
    "AnyComplex",
    "BalanceCheck",
    "BaseComplex",
    "FVector",
    "Face",
    "HVector",
    "InducedCheck",
    "NormalizationReport",
    "RelativeComplex",
    "SimplicialComplex",
    "VertexMap",
    "VertexPermutation",
    "apply_permutation",
    "boundary_complex",
    "build_complex",
    "combinatorial_closure",
    "cone",
    "enumerate_faces",
    "f_from_h",
    "f_vector",
    "h_from_f",
    "h_vector",
    "h_vector_obstruction",
    "induced_subcomplex",
    "intersection",
    "is_automorphism",
    "is_balanced",
    "is_induced",
    "link",
    "minimal_faces",
    "relabel",
    "require_pure",
    "ridge_degrees",
    "union",
]
