"""
Data models for finite abstract simplicial complexes.

A simplex is a strictly increasing tuple of non-negative vertex indices; its
orientation is the ascending order. A complex is an immutable, downward
closed set of simplices on an ambient vertex range ``0..n_vertices-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from ..errors import ComplexInputError

Simplex = Tuple[int, ...]


def make_simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize an iterable of vertex indices into a simplex.

    Args:
        vertices: Vertex indices in any order

    Returns:
        The sorted vertex tuple

    Raises:
        ComplexInputError: If the simplex is empty, has a negative or
            non-integer vertex, or repeats a vertex
    """
    try:
        simplex = tuple(sorted(int(v) for v in vertices))
    except (TypeError, ValueError) as e:
        raise ComplexInputError(f"Invalid vertex in simplex: {e}") from e
    if not simplex:
        raise ComplexInputError("A simplex needs at least one vertex")
    if simplex[0] < 0:
        raise ComplexInputError(f"Negative vertex index in simplex {simplex}")
    for a, b in zip(simplex, simplex[1:]):
        if a == b:
            raise ComplexInputError(f"Repeated vertex {a} in simplex {simplex}")
    return simplex


def is_simplex(vertices: Tuple[int, ...]) -> bool:
    """Check that a tuple is non-empty, non-negative and strictly increasing."""
    if not vertices or vertices[0] < 0:
        return False
    return all(a < b for a, b in zip(vertices, vertices[1:]))


def codim_one_faces(simplex: Simplex) -> List[Simplex]:
    """Faces obtained by deleting one vertex, ordered by the deleted position."""
    if len(simplex) == 1:
        return []
    return [simplex[:j] + simplex[j + 1 :] for j in range(len(simplex))]


@dataclass(frozen=True)
class FVector:
    """Per-dimension simplex counts; ``counts[i]`` is f_i"""

    counts: Tuple[int, ...] = ()

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.counts):
            return self.counts[i]
        return 0

    def __len__(self) -> int:
        return len(self.counts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.counts))

    def fits(self, n_vertices: int) -> bool:
        """Check the bound f_i <= C(n_vertices, i+1)."""
        return all(0 <= f <= comb(n_vertices, i + 1) for i, f in enumerate(self.counts))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.counts) + ")"


def _close_downward(top: Iterable[Simplex]) -> FrozenSet[Simplex]:
    levels: Dict[int, set] = {}
    for s in top:
        levels.setdefault(len(s) - 1, set()).add(s)
    if not levels:
        return frozenset()
    for k in range(max(levels), 0, -1):
        below = levels.setdefault(k - 1, set())
        for s in levels.get(k, ()):
            below.update(codim_one_faces(s))
    out: set = set()
    for level in levels.values():
        out |= level
    return frozenset(out)


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Immutable finite simplicial complex.

    Instances are normally produced by :func:`pyrsc.simplicial.from_facets` or
    the samplers, which guarantee downward closure. Derived data (f-vector,
    per-dimension lists, coface index) is computed lazily and cached.
    """

    n_vertices: int
    simplices: FrozenSet[Simplex] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n_vertices < 0:
            raise ComplexInputError(f"n_vertices must be non-negative, got {self.n_vertices}")
        for s in self.simplices:
            if not is_simplex(s):
                raise ComplexInputError(f"Malformed simplex {s!r}")
            if s[-1] >= self.n_vertices:
                raise ComplexInputError(
                    f"Vertex {s[-1]} of simplex {s} out of range for n_vertices={self.n_vertices}"
                )

    @classmethod
    def closure_of(cls, top: Iterable[Simplex], n_vertices: int) -> "SimplicialComplex":
        """Downward closure of already-normalized simplices."""
        return cls(n_vertices, _close_downward(top))

    @cached_property
    def by_dim(self) -> Dict[int, List[Simplex]]:
        """Simplices grouped by dimension, each list in lexicographic order"""
        groups: Dict[int, List[Simplex]] = {}
        for s in self.simplices:
            groups.setdefault(len(s) - 1, []).append(s)
        for k in groups:
            groups[k].sort()
        return groups

    @property
    def dim(self) -> int:
        return max(self.by_dim) if self.by_dim else -1

    @cached_property
    def f_vector(self) -> FVector:
        return FVector(tuple(len(self.by_dim.get(k, ())) for k in range(self.dim + 1)))

    @property
    def vertices(self) -> List[int]:
        return [s[0] for s in self.by_dim.get(0, ())]

    def simplices_of_dim(self, k: int) -> List[Simplex]:
        return self.by_dim.get(k, [])

    @cached_property
    def _index(self) -> Dict[int, Dict[Simplex, int]]:
        return {k: {s: i for i, s in enumerate(ss)} for k, ss in self.by_dim.items()}

    def index_of(self, simplex: Simplex) -> int:
        """Position of a simplex in the lexicographic list of its dimension."""
        return self._index[len(simplex) - 1][simplex]

    def dim_index(self, k: int) -> Dict[Simplex, int]:
        return self._index.get(k, {})

    @cached_property
    def cofaces(self) -> Dict[Simplex, List[Simplex]]:
        """Codimension-one cofaces of every simplex"""
        table: Dict[Simplex, List[Simplex]] = {s: [] for s in self.simplices}
        for s in self.simplices:
            for face in codim_one_faces(s):
                table[face].append(s)
        return table

    @cached_property
    def facets(self) -> List[Simplex]:
        """Maximal simplices, sorted by dimension then lexicographically"""
        top = [s for s, up in self.cofaces.items() if not up]
        return sorted(top, key=lambda s: (len(s), s))

    def is_empty(self) -> bool:
        return not self.simplices

    def is_downward_closed(self) -> bool:
        return all(f in self.simplices for s in self.simplices for f in codim_one_faces(s))

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex(
            max(self.n_vertices, other.n_vertices), self.simplices | other.simplices
        )

    def __contains__(self, simplex: object) -> bool:
        return simplex in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        for k in sorted(self.by_dim):
            yield from self.by_dim[k]

    def __repr__(self) -> str:
        return f"SimplicialComplex(n_vertices={self.n_vertices}, f={self.f_vector})"
