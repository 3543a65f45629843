"""
Derived exponents of the upper model and the budget of its expansion steps.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from ..errors import BoundaryCaseError, ParamError
from ..sampling.params import TailPolicy
from ..simplicial.models import SimplicialComplex
from ..simplicial.operations import is_strongly_connected
from .common import AlphasLike, alpha_values, is_integer, raw_alphas, tail_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FarberNowikParams:
    """
    Exponents of the upper model for a finite parameter list.

    Tuples are indexed from dimension 1: ``beta_i[0]`` is beta_1. Beyond D
    the zero-probability tail gives -inf for beta, gamma, nu and e.
    """

    D: int
    beta_i: Tuple[float, ...]
    beta: float
    l: int
    gamma_k: Tuple[float, ...]
    nu_k: Tuple[float, ...]
    l_prime: int
    e_k: Tuple[float, ...]
    boundary: bool

    def _at(self, values: Tuple[float, ...], k: int) -> float:
        if k < 1:
            raise ParamError(f"Dimension index must be >= 1, got {k}")
        return values[k - 1] if k <= self.D else -math.inf

    def gamma(self, k: int) -> float:
        return self._at(self.gamma_k, k)

    def nu(self, k: int) -> float:
        return self._at(self.nu_k, k)

    def e(self, k: int) -> float:
        return self._at(self.e_k, k)

    @property
    def collapse_dimension(self) -> int:
        """Dimension the upper model collapses onto a.a.s (when beta is not an integer)"""
        return self.l

    def betti_log_bound(self, k: int) -> float:
        """log_n upper bound nu_k on b_k for k > l."""
        return self.nu(k)


def fn_params(
    alphas: AlphasLike, D: Optional[int] = None, tail: Optional[TailPolicy] = None
) -> FarberNowikParams:
    """Compute beta_i = i + 1 - alpha_i and everything derived from it.

    Args:
        alphas: Exponents alpha_1..alpha_D (or a ParamVector)
        D: Number of dimensions to use; defaults to the list length. Under the
            one-probability tail it must be given explicitly.
        tail: Tail policy; defaults to the ParamVector's or zero

    Returns:
        The derived parameters; ``boundary`` is set when beta is an integer
    """
    tail = tail_of(alphas, tail)
    if tail is TailPolicy.ONE:
        if D is None:
            raise ParamError("The one-probability tail needs an explicit D")
        logger.warning(
            f"One-probability tail: beta_i = i + 1 grows without bound; truncating at D={D}"
        )
    if D is None:
        D = len(raw_alphas(alphas))
    if D < 1:
        raise ParamError("Farber-Nowik parameters need at least one alpha")
    values = alpha_values(alphas, D, tail)
    beta_i = tuple(i + 1 - a for i, a in enumerate(values, start=1))
    beta = max(beta_i)
    gamma = list(beta_i)
    for k in range(D - 2, -1, -1):
        gamma[k] = max(gamma[k], gamma[k + 1])
    gamma_k = tuple(gamma)
    nu_k = tuple(2 * g - k for k, g in enumerate(gamma_k, start=1))
    e_k = tuple(g - k for k, g in enumerate(gamma_k, start=1))
    l_prime = max((k for k, nu in enumerate(nu_k, start=1) if nu >= 0), default=0)
    boundary = is_integer(beta)
    if boundary:
        logger.warning(f"beta = {beta:.12g} is an integer; upper-model statements do not apply")
    return FarberNowikParams(
        D=D,
        beta_i=beta_i,
        beta=beta,
        l=math.floor(beta) if math.isfinite(beta) else -1,
        gamma_k=gamma_k,
        nu_k=nu_k,
        l_prime=l_prime,
        e_k=e_k,
        boundary=boundary,
    )


def upper_simplex_log_expectation(
    alphas: AlphasLike, k: int, D: Optional[int] = None, tail: Optional[TailPolicy] = None
) -> float:
    """log_n of the expected number of k-simplices in the upper model: gamma_k."""
    return fn_params(alphas, D, tail).gamma(k)


def upper_budget_cost(
    alphas: AlphasLike,
    Z_before: Optional[SimplicialComplex],
    m: int,
    v: int,
    D: Optional[int] = None,
    tail: Optional[TailPolicy] = None,
) -> float:
    """Cost m - e_{l+1} - v - l of attaching an m-simplex with v new vertices.

    Z_before is the complex being expanded; it should be strongly connected
    with respect to dimension l + 1 (a warning is logged otherwise).

    Raises:
        BoundaryCaseError: If beta is an integer
        ParamError: If m <= l or v is outside 0..m-l
    """
    fn = fn_params(alphas, D, tail)
    if fn.boundary:
        raise BoundaryCaseError(f"beta = {fn.beta} is an integer")
    l = fn.l
    if m <= l:
        raise ParamError(f"Attached simplex dimension m={m} must exceed l={l}")
    if not 0 <= v <= m - l:
        raise ParamError(f"New vertex count v={v} must lie in 0..{m - l}")
    if Z_before is not None and not is_strongly_connected(Z_before, l + 1):
        logger.warning(f"Expanded complex is not strongly connected w.r.t. dimension {l + 1}")
    return m - fn.e(l + 1) - v - l
