"""
Free faces and elementary collapses.

A face sigma is free when exactly one simplex tau properly contains it; tau
is then a maximal simplex of dimension ``dim(sigma) + 1``. Removing the pair
is an elementary collapse, a homotopy equivalence.
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from ..errors import ComplexInputError
from .models import Simplex, SimplicialComplex, codim_one_faces

logger = logging.getLogger(__name__)

DEFAULT_RESTARTS = 16

FreePair = Tuple[Simplex, Simplex]


def free_faces(K: SimplicialComplex) -> List[FreePair]:
    """All free pairs (sigma, tau), sorted by sigma's dimension then lexicographically."""
    cof = K.cofaces
    pairs = [(s, up[0]) for s, up in cof.items() if len(up) == 1 and not cof[up[0]]]
    return sorted(pairs, key=lambda p: (len(p[0]), p[0]))


def elementary_collapse(K: SimplicialComplex, sigma: Simplex, tau: Simplex) -> SimplicialComplex:
    """Remove a free pair from K.

    Raises:
        ComplexInputError: If (sigma, tau) is not a free pair of K
    """
    up = K.cofaces.get(sigma)
    if up != [tau] or K.cofaces[tau]:
        raise ComplexInputError(f"({sigma}, {tau}) is not a free pair")
    return SimplicialComplex(K.n_vertices, K.simplices - {sigma, tau})


class _CollapseState:
    """Mutable coface index used while collapsing one copy of a complex.

    ``live`` holds exactly the current free faces whose coface has dimension
    above ``d``. It is updated around each collapse; removal swaps the last
    entry into the hole, so the order depends only on the collapse history.
    """

    def __init__(self, K: SimplicialComplex, d: int):
        self.d = d
        self.n_vertices = K.n_vertices
        self.cofaces: Dict[Simplex, Set[Simplex]] = {s: set(up) for s, up in K.cofaces.items()}
        self.live: List[Simplex] = []
        self._position: Dict[Simplex, int] = {}
        for s in sorted(self.cofaces, key=lambda s: (len(s), s)):
            if self.is_free(s):
                self._add(s)

    def is_free(self, sigma: Simplex) -> bool:
        up = self.cofaces.get(sigma)
        if up is None or len(up) != 1:
            return False
        (tau,) = up
        return len(tau) - 1 > self.d and not self.cofaces[tau]

    def _add(self, sigma: Simplex) -> None:
        if sigma not in self._position:
            self._position[sigma] = len(self.live)
            self.live.append(sigma)

    def _remove(self, sigma: Simplex) -> None:
        idx = self._position.pop(sigma, None)
        if idx is None:
            return
        last = self.live.pop()
        if idx < len(self.live):
            self.live[idx] = last
            self._position[last] = idx

    def collapse(self, sigma: Simplex) -> Simplex:
        (tau,) = self.cofaces.pop(sigma)
        del self.cofaces[tau]
        self._remove(sigma)
        touched: Set[Simplex] = set()
        for face in codim_one_faces(tau):
            if face != sigma:
                self.cofaces[face].discard(tau)
                touched.add(face)
        for face in codim_one_faces(sigma):
            self.cofaces[face].discard(sigma)
            touched.add(face)
        for face in list(touched):
            touched.update(codim_one_faces(face))
        # Only faces within two levels of tau can change status.
        for face in sorted(touched, key=lambda s: (len(s), s)):
            if self.is_free(face):
                self._add(face)
            else:
                self._remove(face)
        return tau

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.n_vertices, frozenset(self.cofaces))


def collapse_sequence(
    K: SimplicialComplex, d: int, rng: np.random.Generator
) -> Tuple[SimplicialComplex, List[FreePair]]:
    """Collapse greedily until no free pair with dim(tau) > d remains.

    Each step picks a free pair uniformly at random among the current ones.

    Returns:
        The final complex and the performed pairs, in order
    """
    state = _CollapseState(K, d)
    performed: List[FreePair] = []
    while state.live:
        sigma = state.live[int(rng.integers(len(state.live)))]
        tau = state.collapse(sigma)
        performed.append((sigma, tau))
    return state.complex(), performed


def collapse_to_dim(
    K: SimplicialComplex, d: int, seed: int = 0, restarts: int = DEFAULT_RESTARTS
) -> Tuple[SimplicialComplex, bool]:
    """Try to collapse K onto dimension d with randomized greedy restarts.

    Success is a certificate; failure after all restarts does not prove that
    K cannot collapse onto dimension d.

    Args:
        K: Complex to collapse
        d: Target dimension
        seed: Seed of the restart streams (run j uses ``[seed, j]``)
        restarts: Number of independent greedy runs

    Returns:
        (best complex reached, success flag); best means lowest dimension,
        then fewest simplices
    """
    if d < 0:
        raise ComplexInputError(f"Collapse dimension must be non-negative, got {d}")
    if restarts < 1:
        raise ComplexInputError(f"restarts must be >= 1, got {restarts}")
    if K.dim <= d:
        return K, True
    best: Optional[SimplicialComplex] = None
    for run in range(restarts):
        rng = np.random.default_rng([seed, run])
        result, performed = collapse_sequence(K, d, rng)
        logger.debug(
            f"Collapse run {run}: {len(performed)} collapses, reached dimension {result.dim}"
        )
        if best is None or (result.dim, len(result)) < (best.dim, len(best)):
            best = result
        if result.dim <= d:
            return result, True
    assert best is not None
    return best, False
