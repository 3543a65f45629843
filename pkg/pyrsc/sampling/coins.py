"""
Counter-based coin streams for the random models.

Every (dimension, face) pair owns one uniform[0, 1) draw. The draw for the
face of rank r in dimension k comes from a Philox stream keyed by
``(master_seed, trial, k)``; the stream is materialized lazily in fixed-size
blocks, so a coin has the same value no matter which faces were asked for
before it.
"""

import logging
from typing import Dict, Tuple

import numpy as np

from ..simplicial.faces import face_rank
from ..simplicial.models import Simplex
from .params import SampleSeed

logger = logging.getLogger(__name__)

BLOCK_SIZE = 4096


class CoinStream:
    """
    Lazily evaluated uniform coins for one sample.
    """

    def __init__(self, n: int, seed: SampleSeed):
        """
        Initialize the stream.

        Args:
            n: Number of vertices of the model
            seed: Master seed and trial index
        """
        self.n = n
        self.seed = seed
        self._keys: Dict[int, np.ndarray] = {}
        self._blocks: Dict[Tuple[int, int], np.ndarray] = {}

    def _key(self, k: int) -> np.ndarray:
        key = self._keys.get(k)
        if key is None:
            ss = np.random.SeedSequence([self.seed.master_seed, self.seed.trial, k])
            key = ss.generate_state(2, dtype=np.uint64)
            self._keys[k] = key
        return key

    def _block(self, k: int, b: int) -> np.ndarray:
        block = self._blocks.get((k, b))
        if block is None:
            # Each Philox counter step yields four 64-bit words, one per double.
            counter = np.array([b * (BLOCK_SIZE // 4), 0, 0, 0], dtype=np.uint64)
            bitgen = np.random.Philox(key=self._key(k), counter=counter)
            block = np.random.Generator(bitgen).random(BLOCK_SIZE)
            self._blocks[(k, b)] = block
        return block

    def uniforms(self, k: int, ranks: np.ndarray) -> np.ndarray:
        """Coins of the k-faces with the given ranks."""
        ranks = np.asarray(ranks, dtype=np.int64)
        out = np.empty(ranks.shape, dtype=np.float64)
        if ranks.size == 0:
            return out
        block_ids = ranks // BLOCK_SIZE
        offsets = ranks % BLOCK_SIZE
        for b in np.unique(block_ids):
            mask = block_ids == b
            out[mask] = self._block(k, int(b))[offsets[mask]]
        return out

    def prefix(self, k: int, count: int) -> np.ndarray:
        """Coins of the first ``count`` k-faces in rank order."""
        if count == 0:
            return np.empty(0, dtype=np.float64)
        n_blocks = (count + BLOCK_SIZE - 1) // BLOCK_SIZE
        return np.concatenate([self._block(k, b) for b in range(n_blocks)])[:count]

    def coin(self, k: int, face: Simplex) -> float:
        """Coin of one k-face."""
        rank = face_rank(face, self.n)
        return float(self._block(k, rank // BLOCK_SIZE)[rank % BLOCK_SIZE])

    def clear(self) -> None:
        self._blocks.clear()
