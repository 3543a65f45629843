"""
Exact linear algebra over the coefficient field with sympy's DomainMatrix.
"""

from typing import Any, Dict, List, Sequence

from sympy.polys.matrices import DomainMatrix

from ..simplicial.models import SimplicialComplex
from .field import Field


def coboundary_matrix(K: SimplicialComplex, k: int, field: Field) -> DomainMatrix:
    """
    Matrix of d_k: C^k -> C^{k+1}.

    Rows follow the (k+1)-simplices and columns the k-simplices, both in
    lexicographic order; the entry for (tau, sigma) is (-1)^j when sigma is
    tau with its j-th vertex removed.
    """
    dom = field.domain
    rows_of = K.simplices_of_dim(k + 1)
    cols_of = K.simplices_of_dim(k)
    col_index = K.dim_index(k) if cols_of else {}
    one, minus_one = dom.one, -dom.one
    rows: Dict[int, Dict[int, Any]] = {}
    for r, tau in enumerate(rows_of):
        row: Dict[int, Any] = {}
        for j in range(len(tau)):
            face = tau[:j] + tau[j + 1 :]
            entry = one if j % 2 == 0 else minus_one
            if entry:
                row[col_index[face]] = entry
        if row:
            rows[r] = row
    return DomainMatrix(rows, (len(rows_of), len(cols_of)), dom)


def matrix_rank(M: DomainMatrix) -> int:
    rows, cols = M.shape
    if rows == 0 or cols == 0:
        return 0
    return int(M.rank())


def column_matrix(vectors: Sequence[Sequence[Any]], length: int, field: Field) -> DomainMatrix:
    """Dense matrix whose columns are the given vectors."""
    if not vectors:
        return DomainMatrix.zeros((length, 0), field.domain).to_dense()
    return DomainMatrix.from_list(
        [[v[i] for v in vectors] for i in range(length)], field.domain
    ).to_dense()


def kernel_basis(M: DomainMatrix, ncols: int, field: Field) -> List[List[Any]]:
    """Basis vectors of the null space of M (which has ncols columns)."""
    dom = field.domain
    if ncols == 0:
        return []
    if M.shape[0] == 0:
        return [[dom.one if i == j else dom.zero for i in range(ncols)] for j in range(ncols)]
    null = M.to_dense().nullspace()
    if null.shape[0] == 0:
        return []
    return null.to_list()


def pivot_columns(M: DomainMatrix) -> List[int]:
    rows, cols = M.shape
    if rows == 0 or cols == 0:
        return []
    _, pivots = M.to_dense().rref()
    return list(pivots)


class Echelon:
    """
    Incrementally maintained row echelon form, used to test whether a new
    vector is independent of the ones already accepted.
    """

    def __init__(self, field: Field):
        self.field = field
        self._rows: List[List[Any]] = []
        self._pivots: List[int] = []

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence[Any]) -> List[Any]:
        v = list(vector)
        zero = self.field.zero
        for row, p in zip(self._rows, self._pivots):
            c = v[p]
            if c != zero:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def add(self, vector: Sequence[Any]) -> bool:
        """Accept the vector if it is independent; returns whether it was."""
        v = self.reduce(vector)
        zero = self.field.zero
        pivot = next((i for i, x in enumerate(v) if x != zero), None)
        if pivot is None:
            return False
        inv = self.field.one / v[pivot]
        v = [x * inv for x in v]
        for idx, row in enumerate(self._rows):
            c = row[pivot]
            if c != zero:
                self._rows[idx] = [x - c * y for x, y in zip(row, v)]
        self._rows.append(v)
        self._pivots.append(pivot)
        return True
