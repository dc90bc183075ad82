"""Poincare polynomials, Betti numbers and Chow bases for spaces of
degree-two genus-zero stable maps to projective space."""

from .basis import basis_catalog, basis_dims, verify_basis
from .closedform import (
    betti,
    betti_stable,
    betti_table,
    euler_m02,
    serre_m01_closed,
    serre_m02_closed,
)
from .equivrep import EquivPoly2, augment, equivariant_square, rank
from .errors import (
    BoundExceeded,
    BranchMismatch,
    ConsistencyError,
    DivisionByZero,
    DivisionNotExact,
    NegativeInput,
    StableMapsError,
)
from .formats import OutputRecord
from .moduli import (
    STRATA,
    equivariant_f_p1_4,
    equivariant_m04,
    equivariant_p1_4,
    serre_m02_strata,
    serre_stratum,
)
from .qalgebra import QPoly, exact_div, lambda_k, q_binomial, q_factorial, q_int, sigma_k
from .trees import StableTree, enumerate_stable_trees, group_by_type

__version__ = "0.1.0"

__all__ = [
    "QPoly", "q_int", "q_factorial", "q_binomial", "exact_div", "lambda_k", "sigma_k",
    "EquivPoly2", "augment", "rank", "equivariant_square",
    "STRATA", "serre_stratum", "serre_m02_strata",
    "equivariant_p1_4", "equivariant_f_p1_4", "equivariant_m04",
    "serre_m02_closed", "serre_m01_closed", "euler_m02", "betti", "betti_stable", "betti_table",
    "basis_catalog", "basis_dims", "verify_basis",
    "StableTree", "enumerate_stable_trees", "group_by_type",
    "OutputRecord",
    "StableMapsError", "DivisionNotExact", "DivisionByZero", "NegativeInput",
    "BranchMismatch", "BoundExceeded", "ConsistencyError",
]
