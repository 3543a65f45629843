"""
Vanishing thresholds for H^k of the lower model.

With S1(k) = sum_{i=1}^{k+1} C(k+1, i) alpha_i and
S2(k) = sum_{i=1}^{k} C(k+2, i+1) alpha_i:

- S1(k) < 1: H^k(X; Q) = 0 a.a.s.
- S2(k) > k + 2: H^k(X; Z) = 0 a.a.s.
- S1(k) >= 1, S2(k) < k + 2 and all alpha_i > 0: H^k(X; Q) != 0 a.a.s.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import List, Optional

from ..errors import ParamError
from ..sampling.params import TailPolicy
from .common import TOLERANCE, AlphasLike, alpha_values, raw_alphas, weighted

logger = logging.getLogger(__name__)


class FowlerRegion(Enum):
    VANISHES_Q = "vanishes_Q"
    VANISHES_Z = "vanishes_Z"
    NONVANISHING_Q = "nonvanishing_Q"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class FowlerThresholds:
    """Threshold sums for one degree k and the resulting region"""

    k: int
    s1: float
    s2: float
    region: FowlerRegion
    s1_boundary: bool = False


def _check_k(k: int) -> None:
    if k < 1:
        raise ParamError(f"Threshold degree must be >= 1, got {k}")


def s1(k: int, alphas: AlphasLike, tail: Optional[TailPolicy] = None) -> float:
    _check_k(k)
    values = alpha_values(alphas, k + 1, tail)
    return weighted([comb(k + 1, i) for i in range(1, k + 2)], values)


def s2(k: int, alphas: AlphasLike, tail: Optional[TailPolicy] = None) -> float:
    _check_k(k)
    values = alpha_values(alphas, k, tail)
    return weighted([comb(k + 2, i + 1) for i in range(1, k + 1)], values)


def fowler_thresholds(
    k: int, alphas: AlphasLike, tail: Optional[TailPolicy] = None
) -> FowlerThresholds:
    """Evaluate S1, S2 and classify degree k.

    A value of S1 within the tolerance of 1 is reported as nonvanishing with
    ``s1_boundary`` set; a value of S2 within the tolerance of k + 2, or a
    zero alpha among the supplied ones, leaves the degree indeterminate.
    """
    a1 = s1(k, alphas, tail)
    a2 = s2(k, alphas, tail)
    boundary = math.isfinite(a1) and abs(a1 - 1.0) <= TOLERANCE
    positive = all(a > 0 for a in raw_alphas(alphas))
    if a1 < 1.0 - TOLERANCE:
        region = FowlerRegion.VANISHES_Q
    elif a2 > k + 2 + TOLERANCE:
        region = FowlerRegion.VANISHES_Z
    elif a2 < k + 2 - TOLERANCE and positive:
        region = FowlerRegion.NONVANISHING_Q
    else:
        region = FowlerRegion.INDETERMINATE
    if boundary:
        logger.warning(f"S1({k}) = {a1:.12g} sits on the threshold 1; classification is flagged")
    return FowlerThresholds(k=k, s1=a1, s2=a2, region=region, s1_boundary=boundary)


def fowler_region(k: int, alphas: AlphasLike, tail: Optional[TailPolicy] = None) -> FowlerRegion:
    return fowler_thresholds(k, alphas, tail).region


def fowler_table(
    alphas: AlphasLike, kmax: int, tail: Optional[TailPolicy] = None
) -> List[FowlerThresholds]:
    """Thresholds for k = 1..kmax."""
    return [fowler_thresholds(k, alphas, tail) for k in range(1, kmax + 1)]
