"""
Simplicial cochains and the cochain-level products.

A k-cochain assigns a field element to every k-simplex; simplices are
oriented by ascending vertex order and absent keys mean zero.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..errors import CochainInputError
from ..simplicial.models import Simplex, SimplicialComplex
from .field import Field


class Cochain:
    """
    Degree-k cochain on a fixed complex over a fixed field.
    """

    __slots__ = ("degree", "complex", "field", "values")

    def __init__(
        self,
        K: SimplicialComplex,
        degree: int,
        field: Field,
        values: Optional[Mapping[Simplex, Any]] = None,
    ):
        self.degree = degree
        self.complex = K
        self.field = field
        zero = field.zero
        clean: Dict[Simplex, Any] = {}
        for s, v in (values or {}).items():
            if len(s) != degree + 1:
                raise CochainInputError(f"Simplex {s} does not have dimension {degree}")
            if s not in K:
                raise CochainInputError(f"Simplex {s} is not in the ambient complex")
            x = field.element(v)
            if x != zero:
                clean[s] = x
        self.values = clean

    @classmethod
    def _trusted(
        cls, K: SimplicialComplex, degree: int, field: Field, values: Dict[Simplex, Any]
    ) -> "Cochain":
        c = cls.__new__(cls)
        c.degree = degree
        c.complex = K
        c.field = field
        zero = field.zero
        c.values = {s: v for s, v in values.items() if v != zero}
        return c

    @classmethod
    def zero(cls, K: SimplicialComplex, degree: int, field: Field) -> "Cochain":
        return cls._trusted(K, degree, field, {})

    @classmethod
    def indicator(
        cls, K: SimplicialComplex, simplex: Iterable[int], field: Field, value: Any = 1
    ) -> "Cochain":
        s = tuple(sorted(simplex))
        return cls(K, len(s) - 1, field, {s: value})

    @classmethod
    def from_vector(
        cls, K: SimplicialComplex, degree: int, field: Field, vector: Sequence[Any]
    ) -> "Cochain":
        basis = K.simplices_of_dim(degree)
        if len(vector) != len(basis):
            raise CochainInputError(
                f"Vector of length {len(vector)} for {len(basis)} simplices of dimension {degree}"
            )
        return cls._trusted(
            K, degree, field, {s: field.element(x) for s, x in zip(basis, vector)}
        )

    @classmethod
    def random(
        cls,
        K: SimplicialComplex,
        degree: int,
        field: Field,
        rng: np.random.Generator,
        density: float = 1.0,
    ) -> "Cochain":
        """Random cochain; F_p values are uniform, Q values are integers in [-2, 2]."""
        values: Dict[Simplex, Any] = {}
        for s in K.simplices_of_dim(degree):
            if density < 1.0 and rng.random() >= density:
                continue
            if field.characteristic:
                x = int(rng.integers(field.characteristic))
            else:
                x = int(rng.integers(-2, 3))
            values[s] = field.element(x)
        return cls._trusted(K, degree, field, values)

    def to_vector(self) -> List[Any]:
        zero = self.field.zero
        return [self.values.get(s, zero) for s in self.complex.simplices_of_dim(self.degree)]

    def __call__(self, simplex: Simplex) -> Any:
        return self.values.get(simplex, self.field.zero)

    def is_zero(self) -> bool:
        return not self.values

    @property
    def support(self) -> List[Simplex]:
        return sorted(self.values)

    def _check_compatible(self, other: "Cochain") -> None:
        if self.field != other.field:
            raise CochainInputError(f"Field mismatch: {self.field} vs {other.field}")
        if self.complex is not other.complex and self.complex != other.complex:
            raise CochainInputError("Cochains live on different complexes")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        if self.degree != other.degree:
            raise CochainInputError(f"Degree mismatch: {self.degree} vs {other.degree}")
        out = dict(self.values)
        for s, v in other.values.items():
            out[s] = out[s] + v if s in out else v
        return Cochain._trusted(self.complex, self.degree, self.field, out)

    def __neg__(self) -> "Cochain":
        return Cochain._trusted(
            self.complex, self.degree, self.field, {s: -v for s, v in self.values.items()}
        )

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, c: Any) -> "Cochain":
        x = self.field.element(c)
        return Cochain._trusted(
            self.complex, self.degree, self.field, {s: x * v for s, v in self.values.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.field == other.field
            and self.complex == other.complex
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.field, frozenset(self.values.items())))

    def __iter__(self) -> Iterator[Tuple[Simplex, Any]]:
        return iter(sorted(self.values.items()))

    def __repr__(self) -> str:
        return f"Cochain(degree={self.degree}, field={self.field}, support={len(self.values)})"


def coboundary(c: Cochain) -> Cochain:
    """(dc)(v_0..v_{k+1}) = sum_j (-1)^j c(v_0..^v_j..v_{k+1})."""
    K = c.complex
    out: Dict[Simplex, Any] = {}
    for sigma, value in c.values.items():
        for tau in K.cofaces[sigma]:
            j = next(i for i, v in enumerate(tau) if i == len(sigma) or v != sigma[i])
            term = value if j % 2 == 0 else -value
            out[tau] = out[tau] + term if tau in out else term
    return Cochain._trusted(K, c.degree + 1, c.field, out)


def restrict(c: Cochain, sub: SimplicialComplex) -> Cochain:
    """Pull a cochain back along the inclusion of a subcomplex."""
    if not sub.is_subcomplex_of(c.complex):
        raise CochainInputError("Restriction target is not a subcomplex")
    return Cochain._trusted(sub, c.degree, c.field, {s: v for s, v in c.values.items() if s in sub})


def extend_by_zero(c: Cochain, K: SimplicialComplex) -> Cochain:
    """Push a cochain on a subcomplex forward to K, zero off the subcomplex."""
    if not c.complex.is_subcomplex_of(K):
        raise CochainInputError("Cochain's complex is not a subcomplex of the target")
    return Cochain._trusted(K, c.degree, c.field, dict(c.values))


def cup(a: Cochain, b: Cochain) -> Cochain:
    """Front-face times back-face product."""
    a._check_compatible(b)
    K = a.complex
    p, q = a.degree, b.degree
    out: Dict[Simplex, Any] = {}
    if not a.values or not b.values:
        return Cochain._trusted(K, p + q, a.field, out)
    for sigma in K.simplices_of_dim(p + q):
        front = a.values.get(sigma[: p + 1])
        if front is None:
            continue
        back = b.values.get(sigma[p:])
        if back is not None:
            out[sigma] = front * back
    return Cochain._trusted(K, p + q, a.field, out)


@lru_cache(maxsize=None)
def _cup_i_terms(n: int, p: int, i: int) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]:
    """Kept positions (front, back) of every term in the cup-i formula on an n-simplex.

    For U = {u_1 < ... < u_{n-i}} in {0..n}, U0 collects the u_j with
    u_j = j (mod 2) and U1 the rest; the term pairs the face with U0 deleted
    against the face with U1 deleted. Only terms of the right degrees stay.
    """
    terms = []
    positions = range(n + 1)
    for U in combinations(positions, n - i):
        U0 = {u for j, u in enumerate(U, start=1) if (u - j) % 2 == 0}
        if len(U0) != n - p:
            continue
        U1 = set(U) - U0
        front = tuple(x for x in positions if x not in U0)
        back = tuple(x for x in positions if x not in U1)
        terms.append((front, back))
    return tuple(terms)


def cup_i(a: Cochain, b: Cochain, i: int) -> Cochain:
    """Steenrod's cup-i product over F_2.

    Satisfies d(a u_i b) = da u_i b + a u_i db + a u_{i-1} b + b u_{i-1} a,
    and u_0 is the cup product.

    Raises:
        CochainInputError: Outside F_2 or for i outside 0..min(deg a, deg b)
    """
    a._check_compatible(b)
    if not a.field.is_f2:
        raise CochainInputError(f"cup_i is only defined over F2, got {a.field}")
    p, q = a.degree, b.degree
    if not 0 <= i <= min(p, q):
        raise CochainInputError(f"cup_{i} needs 0 <= i <= min({p}, {q})")
    K = a.complex
    n = p + q - i
    out: Dict[Simplex, Any] = {}
    if not a.values or not b.values:
        return Cochain._trusted(K, n, a.field, out)
    terms = _cup_i_terms(n, p, i)
    one = a.field.one
    for sigma in K.simplices_of_dim(n):
        total = 0
        for front, back in terms:
            if tuple(sigma[x] for x in front) not in a.values:
                continue
            if tuple(sigma[x] for x in back) in b.values:
                total ^= 1
        if total:
            out[sigma] = one
    return Cochain._trusted(K, n, a.field, out)
