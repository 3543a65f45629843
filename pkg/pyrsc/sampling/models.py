"""
Samplers for the random hypergraph X(n; p_1, p_2, ...) and its closures.

The lower model keeps a face only when its whole boundary survived and its own
coin succeeded; the upper model closes every marked face downwards. Both read
the same coins, so for a fixed seed the lower complex is contained in the
upper one.
"""

import logging
from itertools import combinations, compress
from math import comb
from typing import Dict, List, Optional, Set, Union

import numpy as np

from ..errors import ParamError, SamplingResourceError
from ..simplicial.faces import face_rank
from ..simplicial.models import Simplex, SimplicialComplex, codim_one_faces
from .coins import CoinStream
from .params import ModelKind, ParamVector, SampleSeed

logger = logging.getLogger(__name__)

MAX_FACES_PER_DIMENSION = 20_000_000

SeedLike = Union[SampleSeed, int]


def _as_seed(seed: SeedLike) -> SampleSeed:
    return seed if isinstance(seed, SampleSeed) else SampleSeed(int(seed), 0)


def _check_n(n: int) -> None:
    if n < 1:
        raise ParamError(f"A random complex needs n >= 1 vertices, got {n}")


def _check_bound(count: int, k: int, bound: int) -> None:
    if count > bound:
        raise SamplingResourceError(
            f"Dimension {k} needs {count} faces, above the bound of {bound}", bound
        )


def sample_hypergraph(
    n: int,
    params: ParamVector,
    seed: SeedLike,
    stream: Optional[CoinStream] = None,
    max_faces: int = MAX_FACES_PER_DIMENSION,
) -> Dict[int, List[Simplex]]:
    """Mark every k-face of [n] independently with probability p_k.

    Args:
        n: Number of vertices
        params: Model parameters
        seed: Master seed and trial (an int means trial 0)
        stream: Optional coin stream to share with a closure
        max_faces: Bound on C(n, k+1) for each sampled dimension

    Returns:
        Marked faces per dimension k = 1..max_dim, in rank order

    Raises:
        SamplingResourceError: If some dimension has more faces than max_faces
    """
    _check_n(n)
    stream = stream or CoinStream(n, _as_seed(seed))
    marked: Dict[int, List[Simplex]] = {}
    for k in range(1, params.max_dim + 1):
        p = params.probability(n, k)
        total = comb(n, k + 1)
        if p <= 0.0 or total == 0:
            marked[k] = []
            continue
        _check_bound(total, k, max_faces)
        mask = stream.prefix(k, total) < p
        marked[k] = list(compress(combinations(range(n), k + 1), mask.tolist()))
        logger.debug(
            f"Hypergraph dimension {k}: {len(marked[k])}/{total} faces marked (p={p:.4g})"
        )
    return marked


def upper_closure(
    n: int,
    params: ParamVector,
    seed: SeedLike,
    max_faces: int = MAX_FACES_PER_DIMENSION,
    max_simplices: Optional[int] = None,
) -> SimplicialComplex:
    """Minimal complex containing the hypergraph, plus all n vertices."""
    marked = sample_hypergraph(n, params, seed, max_faces=max_faces)
    top: List[Simplex] = [(v,) for v in range(n)]
    for faces in marked.values():
        top.extend(faces)
    K = SimplicialComplex.closure_of(top, n)
    if max_simplices is not None and len(K) > max_simplices:
        raise SamplingResourceError(
            f"Upper closure has {len(K)} simplices, above the bound of {max_simplices}",
            max_simplices,
        )
    return K


def lower_closure(
    n: int,
    params: ParamVector,
    seed: SeedLike,
    max_faces: int = MAX_FACES_PER_DIMENSION,
    max_simplices: Optional[int] = None,
) -> SimplicialComplex:
    """Maximal complex contained in the hypergraph, plus all n vertices.

    Built dimension by dimension: a k-face is a candidate only when all its
    (k-1)-faces survived, and only candidates have their coins evaluated.
    """
    _check_n(n)
    stream = CoinStream(n, _as_seed(seed))
    simplices: Set[Simplex] = {(v,) for v in range(n)}
    current: List[Simplex] = [(v,) for v in range(n)]
    for k in range(1, params.max_dim + 1):
        p = params.probability(n, k)
        if p <= 0.0 or not current:
            break
        alive = set(current)
        candidates = [
            s + (v,)
            for s in current
            for v in range(s[-1] + 1, n)
            if all(f in alive for f in codim_one_faces(s + (v,))[:-1])
        ]
        _check_bound(len(candidates), k, max_faces)
        if p >= 1.0:
            current = candidates
        else:
            ranks = np.fromiter((face_rank(c, n) for c in candidates), dtype=np.int64)
            keep = stream.uniforms(k, ranks) < p
            current = list(compress(candidates, keep.tolist()))
        simplices.update(current)
        if max_simplices is not None and len(simplices) > max_simplices:
            raise SamplingResourceError(
                f"Lower closure passed {max_simplices} simplices at dimension {k}", max_simplices
            )
        logger.debug(f"Lower closure dimension {k}: {len(current)} of {len(candidates)} kept")
    return SimplicialComplex(n, frozenset(simplices))


def sample_complex(
    model: ModelKind,
    n: int,
    params: ParamVector,
    seed: SeedLike,
    max_simplices: Optional[int] = None,
) -> SimplicialComplex:
    if model is ModelKind.LOWER:
        return lower_closure(n, params, seed, max_simplices=max_simplices)
    return upper_closure(n, params, seed, max_simplices=max_simplices)


def expected_f_vector(n: int, params: ParamVector, model: str = "lower") -> List[float]:
    """Exact expected face counts.

    ``model="lower"``: E f_k = C(n, k+1) * prod_{i=1..k} p_i^C(k+1, i+1).
    ``model="hypergraph"``: E (marked k-faces) = C(n, k+1) * p_k.
    """
    out: List[float] = [float(n)]
    for k in range(1, params.max_dim + 1):
        if model == "hypergraph":
            out.append(comb(n, k + 1) * params.probability(n, k))
            continue
        prob = 1.0
        for i in range(1, k + 1):
            prob *= params.probability(n, i) ** comb(k + 1, i + 1)
        out.append(comb(n, k + 1) * prob)
    return out
