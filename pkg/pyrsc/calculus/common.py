"""Shared helpers for the exponent calculus"""

import math
from typing import List, Optional, Sequence, Union

from ..errors import ParamError
from ..sampling.params import ParamVector, TailPolicy

TOLERANCE = 1e-9

AlphasLike = Union[Sequence[float], ParamVector]


def tail_of(alphas: AlphasLike, tail: Optional[TailPolicy] = None) -> TailPolicy:
    if tail is not None:
        return tail
    if isinstance(alphas, ParamVector):
        return alphas.tail
    return TailPolicy.ZERO


def raw_alphas(alphas: AlphasLike) -> List[float]:
    if isinstance(alphas, ParamVector):
        if not alphas.uses_alphas:
            raise ParamError("Exponent calculus needs alphas, not fixed probabilities")
        return list(alphas.alphas)
    return [float(a) for a in alphas]


def alpha_values(
    alphas: AlphasLike, length: int, tail: Optional[TailPolicy] = None
) -> List[float]:
    """alpha_1..alpha_length, padded past D with the tail value (inf or 0)."""
    values = raw_alphas(alphas)
    for a in values:
        if math.isnan(a) or a < 0:
            raise ParamError(f"alphas must be non-negative, got {a}")
    pad = 0.0 if tail_of(alphas, tail) is TailPolicy.ONE else math.inf
    return (values + [pad] * max(0, length - len(values)))[:length]


def weighted(coefficients: Sequence[int], values: Sequence[float]) -> float:
    """Sum of c * a over pairs, skipping zero coefficients (no 0 * inf)."""
    return math.fsum(c * a for c, a in zip(coefficients, values) if c)


def is_integer(x: float, tol: float = TOLERANCE) -> bool:
    return math.isfinite(x) and abs(x - round(x)) <= tol
