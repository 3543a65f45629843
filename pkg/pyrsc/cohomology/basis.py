"""
Betti numbers, cohomology bases and reduction of cocycles to classes.
"""

import logging
import threading
from collections import OrderedDict
from dataclasses import dataclass, field as dc_field
from typing import Any, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from ..errors import CochainInputError
from ..simplicial.models import SimplicialComplex
from .cochains import Cochain, coboundary
from .field import Field
from .linalg import (
    coboundary_matrix,
    column_matrix,
    kernel_basis,
    matrix_rank,
    pivot_columns,
)

logger = logging.getLogger(__name__)

CACHE_SIZE = 128


def betti(K: SimplicialComplex, field: Field) -> List[int]:
    """
    Betti numbers b_0..b_dim of K over the field.

    b_k = f_k - rank d_k - rank d_{k-1}; the empty complex gives [].
    """
    if K.is_empty():
        return []
    ranks = [matrix_rank(coboundary_matrix(K, k, field)) for k in range(K.dim + 1)]
    fvec = K.f_vector
    return [fvec[k] - ranks[k] - (ranks[k - 1] if k > 0 else 0) for k in range(K.dim + 1)]


@dataclass(eq=False)
class CohomologyBasis:
    """
    Cocycle representatives of a basis of H^k together with the map that
    reads off the coordinates of any k-cocycle in that basis.
    """

    complex: SimplicialComplex
    degree: int
    field: Field
    representatives: List[Cochain]
    # Rows of the cocycle space used for solving, and the last b rows of
    # the inverse of [image basis | representatives] restricted to them.
    _rows: List[int] = dc_field(default_factory=list, repr=False)
    _projection: Optional[DomainMatrix] = dc_field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def coordinates(self, z: Cochain) -> Tuple[Any, ...]:
        """Coordinates of a cocycle (assumed closed) in this basis."""
        if not self.representatives or self._projection is None:
            return ()
        vector = z.to_vector()
        column = DomainMatrix.from_list([[vector[r]] for r in self._rows], self.field.domain)
        solved = (self._projection * column).to_list()
        return tuple(row[0] for row in solved)

    def class_at(self, i: int) -> "CohomologyClass":
        zero, one = self.field.zero, self.field.one
        coords = tuple(one if j == i else zero for j in range(self.dim))
        return CohomologyClass(self.representatives[i], coords, self)

    def classes(self) -> List["CohomologyClass"]:
        return [self.class_at(i) for i in range(self.dim)]


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    """A cohomology class: a cocycle and its coordinates in a fixed basis"""

    representative: Cochain
    coordinates: Tuple[Any, ...]
    basis: CohomologyBasis

    @property
    def degree(self) -> int:
        return self.representative.degree

    @property
    def field(self) -> Field:
        return self.representative.field

    def is_zero(self) -> bool:
        zero = self.field.zero
        return all(c == zero for c in self.coordinates)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.degree == other.degree and self.coordinates == other.coordinates

    def __hash__(self) -> int:
        return hash((self.degree, self.coordinates))

    def __repr__(self) -> str:
        coords = [self.field.to_python(c) for c in self.coordinates]
        return f"CohomologyClass(degree={self.degree}, coordinates={coords})"


def _build_basis(K: SimplicialComplex, k: int, field: Field) -> CohomologyBasis:
    n_k = len(K.simplices_of_dim(k))
    if k < 0 or n_k == 0:
        return CohomologyBasis(K, k, field, [])

    image: List[List[Any]] = []
    if k > 0:
        d_prev = coboundary_matrix(K, k - 1, field)
        image = d_prev.transpose().to_dense().to_list() if d_prev.shape[1] else []
    kernel = kernel_basis(coboundary_matrix(K, k, field), n_k, field)

    combined = column_matrix(image + kernel, n_k, field)
    pivots = pivot_columns(combined)
    image_pivots = [image[p] for p in pivots if p < len(image)]
    reps = [kernel[p - len(image)] for p in pivots if p >= len(image)]
    logger.debug(f"H^{k} over {field}: {len(reps)} classes, image rank {len(image_pivots)}")
    if not reps:
        return CohomologyBasis(K, k, field, [])

    spanning = column_matrix(image_pivots + reps, n_k, field)
    r = spanning.shape[1]
    rows = pivot_columns(spanning.transpose())
    square = spanning.extract(rows, list(range(r)))
    projection = square.inv().extract(list(range(r - len(reps), r)), list(range(r)))
    representatives = [Cochain.from_vector(K, k, field, v) for v in reps]
    return CohomologyBasis(K, k, field, representatives, rows, projection)


_CacheKey = Tuple[SimplicialComplex, int, Field]


class _BasisCache:
    """
    LRU cache of bases keyed by (complex, degree, field); lookups are shared
    and each basis is built by a single writer.
    """

    def __init__(self, size: int = CACHE_SIZE):
        self.size = size
        self._entries: "OrderedDict[_CacheKey, CohomologyBasis]" = OrderedDict()
        self._lock = threading.Lock()

    def get(self, K: SimplicialComplex, k: int, field: Field) -> CohomologyBasis:
        key = (K, k, field)
        with self._lock:
            hit = self._entries.get(key)
            if hit is not None:
                self._entries.move_to_end(key)
                return hit
            basis = _build_basis(K, k, field)
            self._entries[key] = basis
            if len(self._entries) > self.size:
                self._entries.popitem(last=False)
            return basis

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()


_cache = _BasisCache()


def cohomology_basis(K: SimplicialComplex, k: int, field: Field) -> CohomologyBasis:
    """Basis of H^k(K; field); memoized per (complex, degree, field)."""
    return _cache.get(K, k, field)


def clear_basis_cache() -> None:
    _cache.clear()


def is_cocycle(z: Cochain) -> bool:
    return coboundary(z).is_zero()


def class_of(z: Cochain) -> CohomologyClass:
    """
    Cohomology class of a cocycle.

    Raises:
        CochainInputError: If z is not closed
    """
    if not is_cocycle(z):
        raise CochainInputError(f"Degree-{z.degree} cochain is not a cocycle")
    basis = cohomology_basis(z.complex, z.degree, z.field)
    return CohomologyClass(z, basis.coordinates(z), basis)


def reduce_to_cohomology(K: SimplicialComplex, z: Cochain, field: Field) -> Tuple[Any, ...]:
    """Coordinates of the class of the cocycle z in the cached basis of H^k(K)."""
    if z.complex != K:
        raise CochainInputError("Cocycle does not live on the given complex")
    if z.field != field:
        raise CochainInputError(f"Cocycle is over {z.field}, not {field}")
    return class_of(z).coordinates


def zero_class(K: SimplicialComplex, k: int, field: Field) -> CohomologyClass:
    basis = cohomology_basis(K, k, field)
    return CohomologyClass(
        Cochain.zero(K, k, field), tuple(field.zero for _ in range(basis.dim)), basis
    )
