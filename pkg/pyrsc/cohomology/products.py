"""
Cup products of cohomology classes and the cup length of a complex.
"""

import logging
from typing import Any, Dict, List, Tuple

from ..errors import CochainInputError
from ..simplicial.models import SimplicialComplex
from .basis import CohomologyClass, class_of, cohomology_basis
from .cochains import cup
from .field import Field
from .linalg import Echelon

logger = logging.getLogger(__name__)


def cup_classes(x: CohomologyClass, y: CohomologyClass) -> CohomologyClass:
    """Class of the product of two classes (computed on representatives)."""
    if x.field != y.field:
        raise CochainInputError(f"Field mismatch: {x.field} vs {y.field}")
    return class_of(cup(x.representative, y.representative))


def cup_product_matrix(
    K: SimplicialComplex, p: int, q: int, field: Field
) -> List[List[List[Any]]]:
    """
    Structure constants of H^p x H^q -> H^{p+q} in the cached bases.

    Entry [i][j] holds the coordinates of e_i u e_j as plain Python numbers.
    """
    left = cohomology_basis(K, p, field).classes()
    right = cohomology_basis(K, q, field).classes()
    return [
        [[field.to_python(c) for c in cup_classes(x, y).coordinates] for y in right]
        for x in left
    ]


def cup_length(K: SimplicialComplex, field: Field) -> int:
    """
    Largest r such that some product of r positive-degree classes is nonzero.

    Works level by level: level r is spanned by products of r basis classes,
    kept reduced per degree. Positive-degree classes on different connected
    components multiply to zero, so this equals the maximum over components.
    Returns 0 when there is no positive-degree cohomology.
    """
    if K.dim < 1:
        return 0
    generators: List[CohomologyClass] = []
    for k in range(1, K.dim + 1):
        generators.extend(cohomology_basis(K, k, field).classes())
    if not generators:
        return 0

    level: List[CohomologyClass] = generators
    length = 1
    while True:
        echelons: Dict[int, Echelon] = {}
        next_level: List[CohomologyClass] = []
        for x in level:
            for y in generators:
                degree = x.degree + y.degree
                if degree > K.dim:
                    continue
                product = cup_classes(x, y)
                if product.is_zero():
                    continue
                ech = echelons.setdefault(degree, Echelon(field))
                if ech.add(product.coordinates):
                    next_level.append(product)
        if not next_level:
            logger.debug(f"Cup length over {field}: {length}")
            return length
        level = next_level
        length += 1


def cup_length_by_degree(K: SimplicialComplex, field: Field) -> List[Tuple[int, int]]:
    """Nonzero (p, q) pairs where H^p x H^q -> H^{p+q} is nontrivial, for p <= q."""
    pairs: List[Tuple[int, int]] = []
    for p in range(1, K.dim + 1):
        for q in range(p, K.dim + 1 - p):
            table = cup_product_matrix(K, p, q, field)
            if any(any(c != 0 for c in coords) for row in table for coords in row):
                pairs.append((p, q))
    return pairs
