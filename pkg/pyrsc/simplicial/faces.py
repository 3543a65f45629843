"""
Lexicographic ranking of the faces of the full simplex on ``n`` vertices.

The samplers index their coins by face rank so that a face's coin does not
depend on the order in which faces are visited.
"""

from itertools import combinations
from math import comb
from typing import Iterator, List, Sequence

from .models import Simplex


def face_count(n: int, k: int) -> int:
    """Number of k-dimensional faces of the full simplex on n vertices."""
    return comb(n, k + 1)


def face_rank(face: Sequence[int], n: int) -> int:
    """Rank of a sorted face among all faces of its size, in lexicographic order.

    Args:
        face: Strictly increasing vertex indices, each < n
        n: Number of vertices of the ambient full simplex

    Returns:
        Index in ``itertools.combinations(range(n), len(face))`` order
    """
    m = len(face)
    rank = comb(n, m) - 1
    for i, c in enumerate(face):
        rank -= comb(n - 1 - c, m - i)
    return rank


def face_unrank(rank: int, n: int, m: int) -> Simplex:
    """Inverse of :func:`face_rank` for faces with m vertices."""
    out: List[int] = []
    c = 0
    for i in range(m):
        while True:
            below = comb(n - 1 - c, m - 1 - i)
            if rank < below:
                break
            rank -= below
            c += 1
        out.append(c)
        c += 1
    return tuple(out)


def iter_faces(n: int, k: int) -> Iterator[Simplex]:
    """All k-faces of the full simplex on n vertices, in rank order."""
    return combinations(range(n), k + 1)


def faces_of(simplex: Simplex, k: int) -> List[Simplex]:
    """All k-dimensional faces of a simplex, in lexicographic order."""
    return list(combinations(simplex, k + 1))
