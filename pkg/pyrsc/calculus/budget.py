"""
Expected subcomplex counts in the lower model and the cost of expansions.

In the lower model a fixed complex A appears about n^{f_0(A) - sum_i f_i(A) alpha_i}
times; the exponent is the budget, and the cost of an expansion is the drop
in budget it causes.
"""

from dataclasses import dataclass
from math import comb
from typing import Optional

from ..errors import ComplexInputError, ParamError
from ..sampling.params import TailPolicy
from ..simplicial.models import FVector, SimplicialComplex
from .common import AlphasLike, alpha_values, weighted


@dataclass(frozen=True)
class LogExpectation:
    """log_n of the expected copy count, with the f-vector it came from"""

    value: float
    fvec: FVector


def log_expectation(
    A: SimplicialComplex, alphas: AlphasLike, tail: Optional[TailPolicy] = None
) -> LogExpectation:
    fvec = A.f_vector
    values = alpha_values(alphas, max(len(fvec) - 1, 0), tail)
    value = fvec[0] - weighted(list(fvec.counts[1:]), values)
    return LogExpectation(value=value, fvec=fvec)


def expansion_cost(
    before: SimplicialComplex,
    after: SimplicialComplex,
    alphas: AlphasLike,
    tail: Optional[TailPolicy] = None,
) -> float:
    """Drop in log_n expectation from before to after; positive means rarer."""
    if not before.is_subcomplex_of(after):
        raise ComplexInputError("expansion_cost needs before to be a subcomplex of after")
    return log_expectation(before, alphas, tail).value - log_expectation(after, alphas, tail).value


def vertex_bound(k: int) -> int:
    """Most vertices a strong 2k-component can have when it carries a cup product."""
    if k < 2:
        raise ParamError(f"The vertex bound starts at k = 2, got {k}")
    a = {2: 4, 3: 3}.get(k, 2)
    return 2 * k + 1 + a


def vertex_addition_cost(d: int, alphas: AlphasLike, tail: Optional[TailPolicy] = None) -> float:
    """Cost of gluing a d-simplex with one new vertex along a (d-1)-face."""
    if d < 1:
        raise ParamError(f"Expansion dimension must be >= 1, got {d}")
    values = alpha_values(alphas, d, tail)
    return weighted([comb(d, i) for i in range(1, d + 1)], values) - 1.0


def edge_addition_cost(m: int, alphas: AlphasLike, tail: Optional[TailPolicy] = None) -> float:
    """Cost of adding one edge and every simplex of an m-simplex that contains it."""
    if m < 1:
        raise ParamError(f"Simplex dimension must be >= 1, got {m}")
    values = alpha_values(alphas, m, tail)
    return weighted([comb(m - 1, i - 1) for i in range(1, m + 1)], values)
