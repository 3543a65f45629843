"""Cochains, cohomology and cohomology operations over Q and F_p"""

# Fields
from .field import Field, RATIONALS, F2

# Cochains
from .cochains import (
    Cochain,
    coboundary,
    restrict,
    extend_by_zero,
    cup,
    cup_i,
)

# Linear algebra
from .linalg import coboundary_matrix, matrix_rank

# Cohomology
from .basis import (
    CohomologyBasis,
    CohomologyClass,
    betti,
    cohomology_basis,
    clear_basis_cache,
    is_cocycle,
    class_of,
    reduce_to_cohomology,
    zero_class,
)

# Products
from .products import cup_classes, cup_product_matrix, cup_length, cup_length_by_degree

# Steenrod squares
from .steenrod import sq, sq_rank, sq_relative_rank, steenrod_nontrivial_on_components

__all__ = [
    # Fields
    "Field",
    "RATIONALS",
    "F2",
    # Cochains
    "Cochain",
    "coboundary",
    "restrict",
    "extend_by_zero",
    "cup",
    "cup_i",
    # Linear algebra
    "coboundary_matrix",
    "matrix_rank",
    # Cohomology
    "CohomologyBasis",
    "CohomologyClass",
    "betti",
    "cohomology_basis",
    "clear_basis_cache",
    "is_cocycle",
    "class_of",
    "reduce_to_cohomology",
    "zero_class",
    # Products
    "cup_classes",
    "cup_product_matrix",
    "cup_length",
    "cup_length_by_degree",
    # Steenrod squares
    "sq",
    "sq_rank",
    "sq_relative_rank",
    "steenrod_nontrivial_on_components",
]
