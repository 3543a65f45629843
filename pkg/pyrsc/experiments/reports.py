"""
Theorem-trend reports built on top of the runner.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field, replace
from math import prod
from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np

from ..calculus.budget import log_expectation
from ..calculus.fowler import fowler_thresholds
from ..errors import ExperimentConfigError
from ..sampling.params import ModelKind, ParamVector
from ..simplicial.embeddings import count_embeddings
from ..simplicial.models import SimplicialComplex
from .config import ExperimentConfig, Measurement, MeasurementKind, PatternSpec, resolve_pattern
from .runner import ExperimentResult, run

logger = logging.getLogger(__name__)


def _falling(n: int, k: int) -> int:
    return prod(range(n - k + 1, n + 1)) if k <= n else 0


def expected_copies(pattern: SimplicialComplex, n: int, params: ParamVector) -> float:
    """
    Exact expected number of copies of pattern in the lower model on n vertices.

    A placed copy is present exactly when every one of its simplices is, so
    E = n!/(n-v)! / |Aut| * prod_k p_k^{f_k}.
    """
    fvec = pattern.f_vector
    v = len(pattern.vertices)
    aut = count_embeddings(pattern, pattern)
    prob = 1.0
    for k in range(1, len(fvec)):
        prob *= params.probability(n, k) ** fvec[k]
    return _falling(n, v) / aut * prob


@dataclass
class ConcentrationRow:
    n: int
    trials: int
    censored: int
    mean: float
    sd: float
    expected: float
    theoretical: Optional[float]
    fraction_above_half_mean: float
    fraction_sd: float


@dataclass
class ConcentrationReport:
    """Copy counts of a pattern across n, with the log-log slope of the mean"""

    pattern_f_vector: List[int]
    log_expectation: Optional[float]
    rows: List[ConcentrationRow]
    slope: Optional[float]
    fraction_non_decreasing: bool
    result: ExperimentResult = field(repr=False)


def _require_lower(config: ExperimentConfig, what: str) -> None:
    if config.model is not ModelKind.LOWER:
        raise ExperimentConfigError(f"{what} is defined for the lower model")


def subcount_concentration(
    pattern: PatternSpec,
    config: ExperimentConfig,
    workers: int = 1,
    suspensions: int = 0,
    silent: bool = True,
) -> ConcentrationReport:
    """
    Empirical copy counts of pattern against n^{log_expectation}.

    Per n: the mean and sd of the copy count, the exact expectation, and the
    fraction of trials with more than half the empirical mean. The slope is
    a least-squares fit of log(mean) against log(n).
    """
    _require_lower(config, "subcount_concentration")
    A = resolve_pattern(pattern, suspensions)
    m = Measurement(MeasurementKind.COPY_COUNT, pattern=A)
    result = run(replace(config, measurements=(m,), plant=None), workers=workers, silent=silent)

    log_e = log_expectation(A, config.params).value if config.params.uses_alphas else None
    rows: List[ConcentrationRow] = []
    for s in result.summary(m.label):
        above = [v > s.mean / 2 for v in s.values]
        frac = sum(above) / len(above) if above else math.nan
        rows.append(
            ConcentrationRow(
                n=s.n,
                trials=s.trials,
                censored=s.censored,
                mean=s.mean,
                sd=s.sd,
                expected=expected_copies(A, s.n, config.params),
                theoretical=float(s.n) ** log_e if log_e is not None else None,
                fraction_above_half_mean=frac,
                fraction_sd=math.sqrt(frac * (1 - frac) / len(above)) if above else math.nan,
            )
        )

    fit = [(math.log(r.n), math.log(r.mean)) for r in rows if r.mean > 0]
    slope = None
    if len(fit) >= 2:
        xs, ys = zip(*fit)
        slope = float(np.polyfit(xs, ys, 1)[0])
    fracs = [r.fraction_above_half_mean for r in rows]
    report = ConcentrationReport(
        pattern_f_vector=list(A.f_vector),
        log_expectation=log_e,
        rows=rows,
        slope=slope,
        fraction_non_decreasing=all(a <= b for a, b in zip(fracs, fracs[1:])),
        result=result,
    )
    logger.info(f"Subcount concentration: slope {slope}, expected exponent {log_e}")
    return report


@dataclass
class SweepRow:
    n: int
    trials: int
    censored: int
    distribution: Dict[int, int]
    fraction_at_most: float
    fraction_sd: float


@dataclass
class CupLengthSweep:
    """Distribution of the cup length per n; headline is the fraction at most ``at_most``"""

    field_name: str
    at_most: int
    rows: List[SweepRow]
    counterexamples: List[str]
    boundary_dimensions: List[int]
    result: ExperimentResult = field(repr=False)

    @property
    def headline(self) -> List[float]:
        return [r.fraction_at_most for r in self.rows]


def cup_length_sweep(
    config: ExperimentConfig,
    field_name: str = "q",
    at_most: int = 1,
    workers: int = 1,
    archive_dir: Optional[Union[str, Path]] = None,
    silent: bool = True,
) -> CupLengthSweep:
    """
    Cup length of lower-model samples across n.

    Complexes whose cup length exceeds ``at_most`` are archived when
    ``archive_dir`` is given.
    """
    _require_lower(config, "cup_length_sweep")
    boundary: List[int] = []
    if config.params.uses_alphas:
        for k in range(1, config.params.max_dim + 1):
            if fowler_thresholds(k, config.params).s1_boundary:
                boundary.append(k)
        if boundary:
            logger.warning(f"s1(k) = 1 for k in {boundary}; outside the cup-length hypothesis")
    m = Measurement(MeasurementKind.CUP_LENGTH, field=field_name, at_most=at_most, archive=True)
    result = run(
        replace(config, measurements=(m,)),
        workers=workers,
        archive_dir=archive_dir,
        silent=silent,
    )
    rows = []
    for s in result.summary(m.label):
        rows.append(
            SweepRow(
                n=s.n,
                trials=s.trials,
                censored=s.censored,
                distribution=dict(sorted(Counter(s.values).items())),
                fraction_at_most=s.success_fraction,
                fraction_sd=s.success_sd,
            )
        )
    return CupLengthSweep(field_name, at_most, rows, result.counterexamples, boundary, result)


@dataclass
class SteenrodRow:
    n: int
    trials: int
    censored: int
    fired_fraction: float
    fired_sd: float
    fired: List[int]
    target_components: Optional[List[int]]


@dataclass
class SteenrodSearch:
    """Per trial: whether Sq^i into degree d is nonzero, and target matches"""

    i: int
    d: int
    rows: List[SteenrodRow]
    target_f_vector: Optional[List[int]]
    target_log_expectation: Optional[float]
    result: ExperimentResult = field(repr=False)


def steenrod_search(
    config: ExperimentConfig,
    i: int,
    d: int,
    target: Optional[PatternSpec] = None,
    target_suspensions: int = 0,
    workers: int = 1,
    silent: bool = True,
) -> SteenrodSearch:
    """
    Look for nontrivial Sq^i: H^{d-i} -> H^d over F_2 in lower-model samples.

    With a target, each trial also counts its strong d-components isomorphic
    to it, and the report carries log_n of the target's expected count.
    """
    _require_lower(config, "steenrod_search")
    measurements = [Measurement(MeasurementKind.SQ, i=i, d=d)]
    A = None
    if target is not None:
        A = resolve_pattern(target, target_suspensions)
        measurements.append(Measurement(MeasurementKind.COMPONENTS, pattern=A, d=d))
    result = run(
        replace(config, measurements=tuple(measurements)), workers=workers, silent=silent
    )
    sq_rows = result.summary(measurements[0].label)
    comp_rows = result.summary(measurements[1].label) if A is not None else None
    rows = []
    for idx, s in enumerate(sq_rows):
        rows.append(
            SteenrodRow(
                n=s.n,
                trials=s.trials,
                censored=s.censored,
                fired_fraction=s.success_fraction,
                fired_sd=s.success_sd,
                fired=s.values,
                target_components=comp_rows[idx].values if comp_rows is not None else None,
            )
        )
    log_e = None
    if A is not None and config.params.uses_alphas:
        log_e = log_expectation(A, config.params).value
    return SteenrodSearch(
        i=i,
        d=d,
        rows=rows,
        target_f_vector=list(A.f_vector) if A is not None else None,
        target_log_expectation=log_e,
        result=result,
    )
