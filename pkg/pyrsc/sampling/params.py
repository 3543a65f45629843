"""
Parameters of the multiparametric random models.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from ..errors import ParamError


class TailPolicy(Enum):
    """Probability used for dimensions beyond the supplied parameter list"""

    ZERO = "zero"
    ONE = "one"


class ModelKind(Enum):
    LOWER = "lower"
    UPPER = "upper"


def alpha_to_p(n: int, alpha: float) -> float:
    """Probability ``n ** -alpha``; an infinite alpha gives 0."""
    if n < 2:
        raise ParamError(f"alpha_to_p needs n >= 2, got {n}")
    if alpha < 0 or math.isnan(alpha):
        raise ParamError(f"alpha must be non-negative, got {alpha}")
    if math.isinf(alpha):
        return 0.0
    return float(n) ** (-alpha)


@dataclass(frozen=True)
class ParamVector:
    """
    Finite parameter list plus a tail policy.

    Either ``alphas`` (p_k = n^-alpha_k) or ``probabilities`` (fixed p_k) is
    given; the other stays empty. ``dim_cap`` bounds the sampled dimension
    and defaults to the list length D.
    """

    alphas: Tuple[float, ...] = ()
    tail: TailPolicy = TailPolicy.ZERO
    dim_cap: Optional[int] = None
    probabilities: Tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if self.alphas and self.probabilities:
            raise ParamError("Give either alphas or probabilities, not both")
        for a in self.alphas:
            if math.isnan(a) or a < 0:
                raise ParamError(f"alphas must be non-negative, got {a}")
        for p in self.probabilities:
            if not 0.0 <= p <= 1.0:
                raise ParamError(f"probabilities must lie in [0, 1], got {p}")
        if self.dim_cap is not None:
            if self.dim_cap < 0:
                raise ParamError(f"dim_cap must be non-negative, got {self.dim_cap}")
            if self.tail is TailPolicy.ONE and self.dim_cap < self.D:
                raise ParamError(
                    f"dim_cap={self.dim_cap} is below D={self.D} under the one-probability tail"
                )

    @classmethod
    def from_alphas(
        cls,
        alphas: Sequence[float],
        tail: TailPolicy = TailPolicy.ZERO,
        dim_cap: Optional[int] = None,
    ) -> "ParamVector":
        return cls(alphas=tuple(float(a) for a in alphas), tail=tail, dim_cap=dim_cap)

    @classmethod
    def from_probabilities(
        cls,
        probabilities: Sequence[float],
        tail: TailPolicy = TailPolicy.ZERO,
        dim_cap: Optional[int] = None,
    ) -> "ParamVector":
        return cls(
            probabilities=tuple(float(p) for p in probabilities), tail=tail, dim_cap=dim_cap
        )

    @property
    def D(self) -> int:
        return len(self.alphas) or len(self.probabilities)

    @property
    def uses_alphas(self) -> bool:
        return not self.probabilities

    @property
    def max_dim(self) -> int:
        """Highest dimension that receives coins"""
        return self.D if self.dim_cap is None else self.dim_cap

    def alpha(self, k: int) -> float:
        """alpha_k for k >= 1, taking the tail beyond D."""
        if not self.uses_alphas:
            raise ParamError("ParamVector was built from fixed probabilities")
        if 1 <= k <= len(self.alphas):
            return self.alphas[k - 1]
        return 0.0 if self.tail is TailPolicy.ONE else math.inf

    def padded_alphas(self, length: int) -> List[float]:
        return [self.alpha(k) for k in range(1, length + 1)]

    def probability(self, n: int, k: int) -> float:
        """p_k for a model on n vertices; dimensions above max_dim get 0."""
        if k < 1 or k > self.max_dim or n < 2:
            return 0.0
        if self.uses_alphas:
            return alpha_to_p(n, self.alpha(k))
        if k <= len(self.probabilities):
            return self.probabilities[k - 1]
        return 1.0 if self.tail is TailPolicy.ONE else 0.0

    def probabilities_for(self, n: int) -> List[float]:
        return [self.probability(n, k) for k in range(1, self.max_dim + 1)]


def clique_params(p_edge: float, dim_cap: int) -> ParamVector:
    """Clique complex of G(n, p): (p, 1, 1, ...) up to dim_cap."""
    return ParamVector.from_probabilities([p_edge], TailPolicy.ONE, dim_cap=dim_cap)


def linial_meshulam_params(r: int, p_top: float) -> ParamVector:
    """Complete (r-1)-skeleton plus random r-simplices: (1, ..., 1, p, 0, ...)."""
    if r < 1:
        raise ParamError(f"Linial-Meshulam dimension must be >= 1, got {r}")
    return ParamVector.from_probabilities([1.0] * (r - 1) + [p_top], TailPolicy.ZERO)


@dataclass(frozen=True)
class SampleSeed:
    """Master seed and trial index; together they fix every coin of a sample"""

    master_seed: int
    trial: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.master_seed < 2**64:
            raise ParamError(
                f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}"
            )
        if self.trial < 0:
            raise ParamError(f"trial index must be non-negative, got {self.trial}")
