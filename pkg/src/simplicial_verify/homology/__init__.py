from .chains import BoundaryMatrix, boundary_matrix
from .homology import (
    HomologyGroup,
    HomologyProfile,
    boundary_smith_forms,
    euler_characteristic,
    reduced_homology,
)
from .smith import SmithForm, divisibility_chain, smith_normal_form

__all__ = [
    "BoundaryMatrix",
    "HomologyGroup",
    "HomologyProfile",
    "SmithForm",
    "boundary_matrix",
    "boundary_smith_forms",
    "divisibility_chain",
    "euler_characteristic",
    "reduced_homology",
    "smith_normal_form",
]
