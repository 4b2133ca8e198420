"""Exact computations with A-infinity and L-infinity coalgebras.

Cells of the associahedra and their diagonal, A-infinity/C-infinity
coalgebras and tensor products, the tensor algebra on a coalgebra with its
two extensions of the cooperations, and the symmetrized L-infinity
structures on primitives.
"""
from . import associahedron
from .ainf import AInfCoalgebra, TensorProductAInf, check_ainf, check_cinf, check_tensor_ainf
from .graded import UNIT, Gen, GradedSpace, Tensor
from .hopf import (
    PsiExtension,
    RhoExtension,
    bracket,
    check_bialgebra,
    check_primitive_ainf,
    check_rho_preserves_primitives,
    lie_basis,
    primitives,
)
from .linf import check_linf, check_linf_bialgebra, compare, ell3_rank_invariant, symmetrize, theorem_pl
from .report import Report
from .structures import builtin, load, parse_structure, serialize

__version__ = "0.1.0"

__all__ = [
    "associahedron",
    "AInfCoalgebra",
    "TensorProductAInf",
    "check_ainf",
    "check_cinf",
    "check_tensor_ainf",
    "UNIT",
    "Gen",
    "GradedSpace",
    "Tensor",
    "PsiExtension",
    "RhoExtension",
    "bracket",
    "check_bialgebra",
    "check_primitive_ainf",
    "check_rho_preserves_primitives",
    "lie_basis",
    "primitives",
    "check_linf",
    "check_linf_bialgebra",
    "compare",
    "ell3_rank_invariant",
    "symmetrize",
    "theorem_pl",
    "Report",
    "builtin",
    "load",
    "parse_structure",
    "serialize",
]
