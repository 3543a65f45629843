"""
Steenrod squares over F_2 and the component-wise search for nontrivial ones.

Sq^i on a degree-k class z is the class of z u_{k-i} z; it vanishes for
i > k and is the identity for i = 0.
"""

import logging

from ..errors import CochainInputError
from ..simplicial.models import SimplicialComplex
from ..simplicial.operations import skeleton, strong_components
from .basis import CohomologyClass, betti, class_of, cohomology_basis, zero_class
from .cochains import coboundary, cup_i, extend_by_zero
from .field import F2
from .linalg import Echelon

logger = logging.getLogger(__name__)


def sq(K: SimplicialComplex, i: int, x: CohomologyClass) -> CohomologyClass:
    """
    Steenrod square Sq^i of a class of H^*(K; F_2).

    Raises:
        CochainInputError: For i < 0, a class over another field or a class
            that does not live on K
    """
    if not x.field.is_f2:
        raise CochainInputError(f"Steenrod squares are computed over F2, got {x.field}")
    if i < 0:
        raise CochainInputError(f"Steenrod square index must be >= 0, got {i}")
    if x.representative.complex != K:
        raise CochainInputError("Class does not live on the given complex")
    k = x.degree
    if i > k:
        return zero_class(K, k + i, F2)
    z = x.representative
    return class_of(cup_i(z, z, k - i))


def sq_rank(K: SimplicialComplex, i: int, d: int) -> int:
    """Rank of Sq^i: H^{d-i}(K; F_2) -> H^d(K; F_2)."""
    if i < 0:
        raise CochainInputError(f"Steenrod square index must be >= 0, got {i}")
    if d - i < 0 or d > K.dim:
        return 0
    ech = Echelon(F2)
    for x in cohomology_basis(K, d - i, F2).classes():
        image = sq(K, i, x)
        if not image.is_zero():
            ech.add(image.coordinates)
    return len(ech)


def sq_relative_rank(K: SimplicialComplex, i: int, d: int) -> float:
    """rank Sq^i divided by b_d over F_2; 0 when H^d vanishes."""
    b = cohomology_basis(K, d, F2).dim if 0 <= d <= K.dim else 0
    return sq_rank(K, i, d) / b if b else 0.0


def _nontrivial_on(K: SimplicialComplex, i: int, d: int) -> bool:
    return any(not sq(K, i, x).is_zero() for x in cohomology_basis(K, d - i, F2).classes())


def steenrod_nontrivial_on_components(K: SimplicialComplex, i: int, d: int) -> bool:
    """
    Whether Sq^i: H^{d-i}(K; F_2) -> H^d(K; F_2) is nonzero.

    H^d(K) injects into H^d of the d-skeleton, which injects into the sum
    over its strong d-components, so a nonzero square on K is nonzero on
    some component. The components only screen: a square that fires on a
    component need not fire on K, because the witnessing class may not
    extend to a cocycle of K or its square may die there.

    The decision is always made on K. A witness from a component is first
    extended by zero; when that is a cocycle of K with a nonzero square the
    answer is yes after a single square on K. Otherwise every basis class of
    H^{d-i}(K) is squared.
    """
    if i < 0:
        raise CochainInputError(f"Steenrod square index must be >= 0, got {i}")
    if d - i < 0 or d > K.dim or K.is_empty():
        return False
    b = betti(K, F2)
    if b[d] == 0 or b[d - i] == 0:
        return False
    if i == 0:
        return True
    if d < 1:
        return False

    hits = []
    for comp in strong_components(skeleton(K, d), d):
        if _nontrivial_on(comp, i, d):
            hits.append(comp)
    logger.debug(f"Sq^{i} into degree {d}: {len(hits)} candidate components")
    if not hits:
        return False

    for comp in hits:
        for x in cohomology_basis(comp, d - i, F2).classes():
            if sq(comp, i, x).is_zero():
                continue
            lifted = extend_by_zero(x.representative, K)
            if coboundary(lifted).is_zero() and not sq(K, i, class_of(lifted)).is_zero():
                return True
    return _nontrivial_on(K, i, d)
