"""
Construction and query operations on simplicial complexes.
"""

import logging
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Mapping, Sequence, Set

from networkx.utils import UnionFind

from ..errors import ComplexInputError
from .models import FVector, Simplex, SimplicialComplex, codim_one_faces, make_simplex

logger = logging.getLogger(__name__)


def from_facets(facets: Iterable[Iterable[int]], n_vertices: int) -> SimplicialComplex:
    """Build the downward closure of a list of facets.

    Args:
        facets: Vertex sets; each is sorted before use
        n_vertices: Ambient vertex count; every index must be below it

    Returns:
        The smallest complex containing every facet

    Raises:
        ComplexInputError: On a malformed facet or an out-of-range vertex
    """
    top: List[Simplex] = []
    for facet in facets:
        s = make_simplex(facet)
        if s[-1] >= n_vertices:
            raise ComplexInputError(
                f"Vertex {s[-1]} of facet {s} out of range for n_vertices={n_vertices}"
            )
        top.append(s)
    return SimplicialComplex.closure_of(top, n_vertices)


def f_vector(K: SimplicialComplex) -> FVector:
    return K.f_vector


def skeleton(K: SimplicialComplex, d: int) -> SimplicialComplex:
    """All simplices of dimension at most d."""
    if d < 0:
        raise ComplexInputError(f"Skeleton dimension must be non-negative, got {d}")
    if d >= K.dim:
        return K
    return SimplicialComplex(K.n_vertices, frozenset(s for s in K.simplices if len(s) <= d + 1))


def link(K: SimplicialComplex, s: Simplex) -> SimplicialComplex:
    """Link of a simplex, with the original vertex labels."""
    s = make_simplex(s)
    if s not in K:
        raise ComplexInputError(f"Simplex {s} is not in the complex")
    base = set(s)
    out: Set[Simplex] = set()
    for sigma in K.simplices:
        if len(sigma) > len(s) and base.issubset(sigma):
            out.add(tuple(v for v in sigma if v not in base))
    return SimplicialComplex(K.n_vertices, frozenset(out))


def induced_subcomplex(K: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    keep = set(vertices)
    return SimplicialComplex(K.n_vertices, frozenset(s for s in K.simplices if keep.issuperset(s)))


def relabel(
    K: SimplicialComplex, mapping: Mapping[int, int], n_vertices: int
) -> SimplicialComplex:
    """Apply an injective vertex map to every simplex."""
    images = [mapping[v] for v in K.vertices]
    if len(set(images)) != len(images):
        raise ComplexInputError("Vertex relabelling is not injective")
    return from_facets(([mapping[v] for v in s] for s in K.facets), n_vertices)


def _component_sets(K: SimplicialComplex, d: int) -> List[Set[Simplex]]:
    top = K.simplices_of_dim(d)
    uf = UnionFind(top)
    first_with_face: Dict[Simplex, Simplex] = {}
    for sigma in top:
        for face in codim_one_faces(sigma):
            other = first_with_face.setdefault(face, sigma)
            if other != sigma:
                uf.union(other, sigma)
    for k in range(d + 1, K.dim + 1):
        for sigma in K.simplices_of_dim(k):
            d_faces = list(combinations(sigma, d + 1))
            for face in d_faces[1:]:
                uf.union(d_faces[0], face)
    groups: Dict[Simplex, Set[Simplex]] = {}
    for sigma in top:
        groups.setdefault(uf[sigma], set()).add(sigma)
    for k in range(d + 1, K.dim + 1):
        for sigma in K.simplices_of_dim(k):
            groups[uf[sigma[: d + 1]]].add(sigma)
    return sorted(groups.values(), key=lambda g: min(x for x in g if len(x) == d + 1))


def strong_components(K: SimplicialComplex, d: int) -> List[SimplicialComplex]:
    """Strong connectivity components with respect to dimension d.

    d-simplices are joined when they share a (d-1)-face; a simplex of higher
    dimension joins (and merges) the components of its d-faces. Each
    component is returned as the downward closure of its simplices of
    dimension >= d, ordered by its smallest d-simplex.
    """
    if d < 1:
        raise ComplexInputError(f"Strong components need d >= 1, got {d}")
    return [SimplicialComplex.closure_of(g, K.n_vertices) for g in _component_sets(K, d)]


def is_pure(K: SimplicialComplex, d: int) -> bool:
    """Every simplex lies in a d-simplex and nothing is larger."""
    return bool(K.facets) and all(len(s) == d + 1 for s in K.facets)


def is_strongly_connected(K: SimplicialComplex, d: int) -> bool:
    """Strong connectivity with respect to dimension d.

    Every maximal simplex must have dimension >= d and the d-simplices must
    form a single component.
    """
    if d < 0 or not K.simplices_of_dim(d):
        return False
    if any(len(s) < d + 1 for s in K.facets):
        return False
    if d == 0:
        return True
    return len(_component_sets(K, d)) == 1


def has_complete_skeleton(K: SimplicialComplex, l: int) -> bool:
    """Check that every (l+1)-subset of the used vertices spans a simplex."""
    return len(K.simplices_of_dim(l)) == comb(len(K.vertices), l + 1)


def simplex_complex(d: int) -> SimplicialComplex:
    """The full d-simplex on vertices 0..d."""
    return from_facets([range(d + 1)], d + 1)


def boundary_of_simplex(d: int) -> SimplicialComplex:
    """The boundary of the d-simplex on vertices 0..d (a (d-1)-sphere)."""
    if d < 1:
        raise ComplexInputError("The boundary of a point is empty")
    return from_facets(combinations(range(d + 1), d), d + 1)


def cone(K: SimplicialComplex) -> SimplicialComplex:
    """Cone over K with apex ``K.n_vertices``."""
    apex = K.n_vertices
    coned = {s + (apex,) for s in K.simplices} | {(apex,)}
    return SimplicialComplex(apex + 1, frozenset(K.simplices | coned))


def disjoint_union(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    """Union with B shifted past A's vertex range."""
    shift = A.n_vertices
    moved = frozenset(tuple(v + shift for v in s) for s in B.simplices)
    return SimplicialComplex(A.n_vertices + B.n_vertices, A.simplices | moved)


def prime_suspension(K: SimplicialComplex, r: int = 1) -> SimplicialComplex:
    """Cone over K plus the full simplex on K's vertices, truncated one dimension up.

    The apex is the new vertex ``K.n_vertices``. Applied r times.

    Raises:
        ComplexInputError: If K is empty or r < 0
    """
    if r < 0:
        raise ComplexInputError(f"Suspension count must be non-negative, got {r}")
    for _ in range(r):
        if K.is_empty():
            raise ComplexInputError("Cannot suspend the empty complex")
        d = K.dim
        verts = K.vertices
        full = {s for m in range(1, min(len(verts), d + 2) + 1) for s in combinations(verts, m)}
        K = skeleton(
            SimplicialComplex(K.n_vertices + 1, cone(K).simplices | frozenset(full)), d + 1
        )
    return K


def plant_subcomplex(
    host: SimplicialComplex, pattern: SimplicialComplex, vertices: Sequence[int]
) -> SimplicialComplex:
    """Insert a copy of pattern into host on the given host vertices.

    The i-th used vertex of pattern (ascending) is sent to ``vertices[i]``.
    """
    if len(vertices) != len(pattern.vertices):
        raise ComplexInputError(
            f"Pattern has {len(pattern.vertices)} vertices but {len(vertices)} targets given"
        )
    n = max([host.n_vertices] + [v + 1 for v in vertices])
    mapping = dict(zip(pattern.vertices, vertices))
    copy = relabel(pattern, mapping, n)
    return SimplicialComplex(n, host.simplices | copy.simplices)


def new_vertex_count(K: SimplicialComplex, simplex: Iterable[int]) -> int:
    return sum(1 for v in make_simplex(simplex) if (v,) not in K)


def expand(K: SimplicialComplex, simplex: Iterable[int], d: int) -> SimplicialComplex:
    """Expansion operation: attach a simplex of dimension >= d along a (d-1)-face.

    The attached simplex must contain a (d-1)-face of some d-simplex of K, so
    the strong component it joins stays strongly connected.

    Raises:
        ComplexInputError: If the simplex is too small, out of range, or
            touches no (d-1)-face of a d-simplex of K
    """
    s = make_simplex(simplex)
    if d < 1 or len(s) < d + 1:
        raise ComplexInputError(f"Expansion needs a simplex of dimension >= {d} with d >= 1")
    if s[-1] >= K.n_vertices:
        raise ComplexInputError(f"Vertex {s[-1]} out of range for n_vertices={K.n_vertices}")
    glued = {f for sigma in K.simplices_of_dim(d) for f in codim_one_faces(sigma)}
    if not any(f in glued for f in combinations(s, d)):
        raise ComplexInputError(
            f"Simplex {s} shares no ({d - 1})-face with a {d}-simplex of the complex"
        )
    logger.debug(f"Expanding by {s} with {new_vertex_count(K, s)} new vertices")
    return SimplicialComplex(K.n_vertices, K.simplices | from_facets([s], K.n_vertices).simplices)
