"""
Counting copies of a pattern complex inside a host complex.

A copy is an injective vertex map under which every pattern simplex lands on
a host simplex. The host may carry extra simplices on the image vertices, so
an empty triangle also matches under a filled one.
"""

import logging
from typing import Dict, FrozenSet, List, Set, Tuple

from ..errors import ComplexInputError
from .models import Simplex, SimplicialComplex

logger = logging.getLogger(__name__)


def _adjacency(K: SimplicialComplex) -> Dict[int, Set[int]]:
    adj: Dict[int, Set[int]] = {v: set() for v in K.vertices}
    for a, b in K.simplices_of_dim(1):
        adj[a].add(b)
        adj[b].add(a)
    return adj


def _search_order(pattern: SimplicialComplex, adj: Dict[int, Set[int]]) -> List[int]:
    """Highest degree first, then always the vertex with most placed neighbours."""
    remaining = set(pattern.vertices)
    order: List[int] = []
    while remaining:
        placed = set(order)
        v = max(
            remaining,
            key=lambda u: (len(adj[u] & placed), len(adj[u]), -u),
        )
        order.append(v)
        remaining.remove(v)
    return order


def count_embeddings(pattern: SimplicialComplex, host: SimplicialComplex) -> int:
    """Number of injective simplicial vertex maps from pattern into host."""
    if pattern.is_empty():
        raise ComplexInputError("Pattern complex must be non-empty")
    p_adj = _adjacency(pattern)
    h_adj = _adjacency(host)
    order = _search_order(pattern, p_adj)
    position = {v: i for i, v in enumerate(order)}

    # Pattern simplices checked at the step where their last vertex is placed.
    checks: List[List[Tuple[int, ...]]] = [[] for _ in order]
    for s in pattern.simplices:
        if len(s) < 3:
            continue
        positions = tuple(sorted(position[v] for v in s))
        checks[positions[-1]].append(positions)
    back_neighbours = [
        sorted(position[u] for u in p_adj[v] if position[u] < i) for i, v in enumerate(order)
    ]
    degree = [len(p_adj[v]) for v in order]
    host_simplices: FrozenSet[Simplex] = host.simplices
    host_vertices = host.vertices

    image: List[int] = [-1] * len(order)
    used: Set[int] = set()
    count = 0

    def extend(i: int) -> None:
        nonlocal count
        if i == len(order):
            count += 1
            return
        nbrs = back_neighbours[i]
        if nbrs:
            candidates = set(h_adj[image[nbrs[0]]])
            for j in nbrs[1:]:
                candidates &= h_adj[image[j]]
            pool = sorted(candidates - used)
        else:
            pool = [v for v in host_vertices if v not in used]
        for w in pool:
            if len(h_adj[w]) < degree[i]:
                continue
            image[i] = w
            if all(tuple(sorted(image[p] for p in ps)) in host_simplices for ps in checks[i]):
                used.add(w)
                extend(i + 1)
                used.discard(w)
        image[i] = -1

    extend(0)
    return count


def count_subcomplex_copies(
    pattern: SimplicialComplex, host: SimplicialComplex
) -> Tuple[int, int, int]:
    """Count copies of pattern in host.

    Returns:
        (embeddings, automorphisms, copies) with copies = embeddings / automorphisms
    """
    embeddings = count_embeddings(pattern, host)
    automorphisms = count_embeddings(pattern, pattern)
    if embeddings % automorphisms:
        raise ArithmeticError(
            f"Embedding count {embeddings} not divisible by automorphism count {automorphisms}"
        )
    logger.debug(f"Pattern {pattern!r}: {embeddings} embeddings, {automorphisms} automorphisms")
    return embeddings, automorphisms, embeddings // automorphisms
