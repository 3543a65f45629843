"""
Monte Carlo runner: samples complexes per (n, trial), evaluates the configured
measurements and merges the results in a fixed order.
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..cohomology import (
    Field,
    betti,
    cup_length,
    sq_rank,
    steenrod_nontrivial_on_components,
)
from ..errors import SamplingResourceError
from ..sampling.models import sample_complex
from ..sampling.params import SampleSeed
from ..simplicial.collapse import collapse_to_dim
from ..simplicial.embeddings import count_subcomplex_copies
from ..simplicial.fileformat import save_complex
from ..simplicial.models import SimplicialComplex
from ..simplicial.operations import plant_subcomplex, strong_components
from ..simplicial.snapshot import build_complex_flatbuffer
from .config import ExperimentConfig, Measurement, MeasurementKind, resolve_pattern

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[float, str], None]


@dataclass(frozen=True)
class MeasurementRecord:
    """One measured value of one trial; value and success are None when censored"""

    label: str
    value: Optional[int]
    success: Optional[bool]


@dataclass
class TrialResult:
    n: int
    trial: int
    censored: bool
    f_vector: Tuple[int, ...]
    records: List[MeasurementRecord]
    # Complexes that failed an archived measurement, keyed by label
    failures: Dict[str, SimplicialComplex] = field(default_factory=dict, repr=False)


@dataclass
class MeasurementSummary:
    """Statistics of one measurement at one n"""

    n: int
    label: str
    trials: int
    censored: int
    mean: float
    sd: float
    success_fraction: float
    success_sd: float
    values: List[int]


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    trials: List[TrialResult]
    summaries: List[MeasurementSummary]
    counterexamples: List[str]
    metadata: Dict[str, Any]

    def summary(self, label: str) -> List[MeasurementSummary]:
        """Summaries of one measurement in ascending n"""
        rows = [s for s in self.summaries if s.label == label]
        if not rows:
            raise KeyError(f"No measurement labelled {label!r}")
        return rows

    def success_fractions(self, label: str) -> List[float]:
        return [s.success_fraction for s in self.summary(label)]

    def means(self, label: str) -> List[float]:
        return [s.mean for s in self.summary(label)]

    def is_non_decreasing(self, label: str) -> bool:
        f = self.success_fractions(label)
        return all(a <= b for a, b in zip(f, f[1:]))

    def is_non_increasing(self, label: str) -> bool:
        f = self.success_fractions(label)
        return all(a >= b for a, b in zip(f, f[1:]))

    def meets_bar(self, label: str) -> bool:
        """Success fraction at the largest n reaches the configured bar."""
        return self.success_fractions(label)[-1] >= self.config.success_bar


def derive_seed(master_seed: int, *keys: int) -> int:
    """Independent 64-bit seed for a (master, n, ...) key."""
    state = np.random.SeedSequence([master_seed, *keys]).generate_state(1, np.uint64)
    return int(state[0])


def trial_complex(config: ExperimentConfig, n: int, trial: int) -> SimplicialComplex:
    """The complex sampled for (n, trial); identical in every process."""
    seed = SampleSeed(derive_seed(config.master_seed, n), trial)
    K = sample_complex(config.model, n, config.params, seed, config.max_simplices)
    if config.plant is not None:
        K = plant_subcomplex(K, config.plant.complex(), config.plant.targets())
    return K


def matching_components(K: SimplicialComplex, target: SimplicialComplex, d: int) -> int:
    """Strong d-components of K isomorphic to target.

    A component with the target's f-vector that contains a copy of the
    target is isomorphic to it.
    """
    count = 0
    for comp in strong_components(K, d):
        if tuple(comp.f_vector) != tuple(target.f_vector):
            continue
        if count_subcomplex_copies(target, comp)[2] > 0:
            count += 1
    return count


def evaluate_measurement(
    K: SimplicialComplex,
    m: Measurement,
    config: ExperimentConfig,
    collapse_seed: int = 0,
) -> Tuple[int, bool]:
    """Measure one complex; returns (value, success)."""
    kind = m.kind
    if kind is MeasurementKind.BETTI:
        b = betti(K, Field.parse(m.field))
        value = b[m.degree] if m.degree < len(b) else 0
        return value, value > 0
    if kind is MeasurementKind.CUP_LENGTH:
        value = cup_length(K, Field.parse(m.field))
        return value, value <= m.at_most
    if kind is MeasurementKind.SQ:
        assert isinstance(m.d, int)
        fired = steenrod_nontrivial_on_components(K, m.i, m.d)
        return int(fired), fired
    if kind is MeasurementKind.SQ_RANK:
        assert isinstance(m.d, int)
        rank = sq_rank(K, m.i, m.d)
        return rank, rank > 0
    if kind is MeasurementKind.COLLAPSE:
        target = config.collapse_target(m)
        reached, ok = collapse_to_dim(K, target, seed=collapse_seed, restarts=config.restarts)
        return reached.dim, ok
    if kind is MeasurementKind.COPY_COUNT:
        assert m.pattern is not None
        copies = count_subcomplex_copies(resolve_pattern(m.pattern, m.suspensions), K)[2]
        return copies, copies > 0
    if kind is MeasurementKind.COMPONENTS:
        assert m.pattern is not None and isinstance(m.d, int)
        found = matching_components(K, resolve_pattern(m.pattern, m.suspensions), m.d)
        return found, found > 0
    return K.f_vector.euler_characteristic(), True


def run_trial(config: ExperimentConfig, n: int, trial: int) -> TrialResult:
    """Sample and measure a single trial (the unit of parallel work)."""
    try:
        K = trial_complex(config, n, trial)
    except SamplingResourceError as e:
        logger.warning(f"n={n} trial={trial} censored: {e}")
        records = [MeasurementRecord(m.label, None, None) for m in config.measurements]
        return TrialResult(n, trial, True, (), records)
    records = []
    failures: Dict[str, SimplicialComplex] = {}
    for m in config.measurements:
        value, success = evaluate_measurement(
            K, m, config, collapse_seed=derive_seed(config.master_seed, n, trial)
        )
        records.append(MeasurementRecord(m.label, value, success))
        if not success and m.archives_failures:
            failures[m.label] = K
    return TrialResult(n, trial, False, tuple(K.f_vector), records, failures)


def _run_trial_star(args: Tuple[ExperimentConfig, int, int]) -> TrialResult:
    return run_trial(*args)


def summarize(config: ExperimentConfig, trials: Sequence[TrialResult]) -> List[MeasurementSummary]:
    """Per (n, measurement) statistics; sd uses ddof=1 and is 0 for a single value."""
    out: List[MeasurementSummary] = []
    for n in config.n_values:
        at_n = [t for t in trials if t.n == n]
        censored = sum(1 for t in at_n if t.censored)
        for idx, m in enumerate(config.measurements):
            recs = [t.records[idx] for t in at_n if not t.censored]
            values = [r.value for r in recs if r.value is not None]
            successes = [bool(r.success) for r in recs]
            arr = np.asarray(values, dtype=float)
            mean = float(arr.mean()) if len(arr) else math.nan
            sd = float(arr.std(ddof=1)) if len(arr) > 1 else 0.0
            frac = sum(successes) / len(successes) if successes else math.nan
            frac_sd = math.sqrt(frac * (1 - frac) / len(successes)) if successes else math.nan
            out.append(
                MeasurementSummary(
                    n=n,
                    label=m.label,
                    trials=len(at_n),
                    censored=censored,
                    mean=mean,
                    sd=sd,
                    success_fraction=frac,
                    success_sd=frac_sd,
                    values=values,
                )
            )
    return out


class ExperimentRunner:
    """
    Runs an experiment, optionally across worker processes.

    Output is independent of the worker count: every trial draws from its
    own (master seed, n, trial) stream and results are merged in (n, trial)
    order by this process alone.
    """

    def __init__(
        self,
        config: ExperimentConfig,
        workers: int = 1,
        archive_dir: Optional[Union[str, Path]] = None,
        silent: bool = True,
    ):
        """
        Initialize the runner.

        Args:
            config: Experiment to run
            workers: Number of worker processes; 1 runs in-process
            archive_dir: Where failing complexes are written (.cplx and .fb)
            silent: Whether to suppress debug output
        """
        self.config = config
        self.workers = max(1, int(workers))
        self.archive_dir = Path(archive_dir) if archive_dir is not None else None
        self.silent = silent

        # Setup logging
        self.logger = logging.getLogger(f"pyrsc.experiments.runner.{config.name}")
        if silent:
            self.logger.setLevel(logging.WARNING)
        else:
            self.logger.setLevel(logging.DEBUG)

    def _work(self) -> List[Tuple[ExperimentConfig, int, int]]:
        config = self.config
        return [(config, n, t) for n in config.n_values for t in range(config.trials)]

    def _iter_results(self) -> Iterator[TrialResult]:
        work = self._work()
        if self.workers == 1:
            for item in work:
                yield _run_trial_star(item)
            return
        chunksize = max(1, len(work) // (self.workers * 8))
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            yield from pool.map(_run_trial_star, work, chunksize=chunksize)

    def _archive(self, trial: TrialResult) -> List[str]:
        written: List[str] = []
        if self.archive_dir is None or not trial.failures:
            return written
        self.archive_dir.mkdir(parents=True, exist_ok=True)
        for label, K in sorted(trial.failures.items()):
            safe = "".join(c if c.isalnum() else "_" for c in label).strip("_")
            stem = f"{self.config.name}_n{trial.n}_t{trial.trial}_{safe}"
            comment = f"{self.config.name}: {label} failed at n={trial.n}, trial={trial.trial}"
            save_complex(K, self.archive_dir / f"{stem}.cplx", comment)
            (self.archive_dir / f"{stem}.fb").write_bytes(build_complex_flatbuffer(K))
            written.append(f"{stem}.cplx")
            self.logger.warning(f"Counterexample archived: {stem}.cplx")
        return written

    def run(self, progress_callback: Optional[ProgressCallback] = None) -> ExperimentResult:
        """
        Run every trial and merge the results.

        Args:
            progress_callback: Optional callback(progress: float, stage: str)

        Returns:
            The merged result
        """
        started = datetime.now()
        t0 = time.perf_counter()
        total = len(self.config.n_values) * self.config.trials
        self.logger.info(f"Running {self.config.name}: {total} trials on {self.workers} worker(s)")
        trials: List[TrialResult] = []
        counterexamples: List[str] = []
        for done, result in enumerate(self._iter_results(), start=1):
            trials.append(result)
            counterexamples.extend(self._archive(result))
            self.logger.debug(
                f"n={result.n} trial={result.trial} f={result.f_vector} censored={result.censored}"
            )
            self._progress(progress_callback, done / total, f"n={result.n}")
        trials.sort(key=lambda t: (t.n, t.trial))
        summaries = summarize(self.config, trials)
        wall = time.perf_counter() - t0
        self.logger.info(f"Finished {self.config.name} in {wall:.2f}s")

        from .. import __version__

        metadata = {
            "started_at": started,
            "wall_time_s": wall,
            "workers": self.workers,
            "version": __version__,
            "total_trials": total,
            "censored_trials": sum(1 for t in trials if t.censored),
        }
        return ExperimentResult(self.config, trials, summaries, counterexamples, metadata)

    @staticmethod
    def _progress(cb: Optional[ProgressCallback], value: float, stage: str) -> None:
        if cb is None:
            return
        try:
            cb(max(0.0, min(1.0, value)), stage)
        except Exception:
            pass


def run(
    config: ExperimentConfig,
    workers: int = 1,
    archive_dir: Optional[Union[str, Path]] = None,
    silent: bool = True,
    progress_callback: Optional[ProgressCallback] = None,
) -> ExperimentResult:
    """
    Run an experiment.

    Args:
        config: Experiment to run
        workers: Number of worker processes
        archive_dir: Directory for counterexample complexes
        silent: Whether to suppress debug output
        progress_callback: Optional callback(progress: float, stage: str)

    Returns:
        Merged results with per-(n, measurement) statistics
    """
    runner = ExperimentRunner(config, workers=workers, archive_dir=archive_dir, silent=silent)
    return runner.run(progress_callback)
