"""
Experiment configuration: dataclasses and the JSON loader.

Schema (unknown keys are rejected)::

    {
      "name": "cup-length-clique",
      "model": "lower",                    # or "upper"
      "n_values": [20, 30, 40],            # strictly ascending
      "trials": 100,
      "master_seed": 1,
      "params": {"alphas": [0.6], "tail": "zero", "dim_cap": 2},
      "measurements": [{"kind": "cup_length", "field": "q", "at_most": 1}],
      "max_simplices": 200000,             # optional; larger samples are censored
      "restarts": 16,
      "success_bar": 0.95,
      "plant": {"pattern": "rp2", "suspensions": 1}   # optional
    }

``params`` takes ``probabilities`` instead of ``alphas`` for fixed p_k.
Measurement kinds and their keys:

- ``betti``: ``field``, ``degree``; success when b_degree > 0
- ``cup_length``: ``field``, ``at_most``; success when the cup length is at most that
- ``sq``: ``i``, ``d``; success when Sq^i into degree d is nonzero
- ``sq_rank``: ``i``, ``d``; success when the rank is positive
- ``collapse``: ``d`` (an integer or ``"l"``); success when the collapse is reached
- ``copy_count``: ``pattern``, ``suspensions``; success when a copy exists
- ``components``: ``pattern``, ``suspensions``, ``d``; strong d-components
  isomorphic to the pattern
- ``euler``: the Euler characteristic; always a success

Every measurement also takes ``archive`` (dump failing complexes); it
defaults to on for ``cup_length`` and ``collapse``.
"""

import json
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

from ..calculus.upper import fn_params
from ..cohomology.field import Field
from ..errors import ExperimentConfigError, PyrscError
from ..sampling.params import ModelKind, ParamVector, TailPolicy
from ..simplicial.fileformat import BUNDLED, load_bundled, load_complex
from ..simplicial.models import SimplicialComplex
from ..simplicial.operations import prime_suspension

logger = logging.getLogger(__name__)

DEFAULT_SUCCESS_BAR = 0.95
DEFAULT_RESTARTS = 16

PatternSpec = Union[str, SimplicialComplex]


class MeasurementKind(Enum):
    BETTI = "betti"
    CUP_LENGTH = "cup_length"
    SQ = "sq"
    SQ_RANK = "sq_rank"
    COLLAPSE = "collapse"
    COPY_COUNT = "copy_count"
    COMPONENTS = "components"
    EULER = "euler"


_KEYS: Dict[MeasurementKind, Tuple[str, ...]] = {
    MeasurementKind.BETTI: ("field", "degree"),
    MeasurementKind.CUP_LENGTH: ("field", "at_most"),
    MeasurementKind.SQ: ("i", "d"),
    MeasurementKind.SQ_RANK: ("i", "d"),
    MeasurementKind.COLLAPSE: ("d",),
    MeasurementKind.COPY_COUNT: ("pattern", "suspensions"),
    MeasurementKind.COMPONENTS: ("pattern", "suspensions", "d"),
    MeasurementKind.EULER: (),
}

_ARCHIVED_BY_DEFAULT = {MeasurementKind.CUP_LENGTH, MeasurementKind.COLLAPSE}


@lru_cache(maxsize=32)
def _load_pattern_file(spec: str) -> SimplicialComplex:
    if spec in BUNDLED:
        return load_bundled(spec)
    return load_complex(spec)


def resolve_pattern(spec: PatternSpec, suspensions: int = 0) -> SimplicialComplex:
    """Bundled name, file path or complex, prime-suspended ``suspensions`` times."""
    K = spec if isinstance(spec, SimplicialComplex) else _load_pattern_file(spec)
    return prime_suspension(K, suspensions) if suspensions else K


def _pattern_label(spec: Optional[PatternSpec], suspensions: int) -> str:
    if spec is None:
        name = "?"
    elif isinstance(spec, SimplicialComplex):
        name = f"complex{tuple(spec.f_vector)}"
    else:
        name = Path(spec).stem if spec not in BUNDLED else spec
    return f"S{suspensions}({name})" if suspensions else name


@dataclass(frozen=True)
class Measurement:
    """One quantity recorded for every sampled complex"""

    kind: MeasurementKind
    field: str = "q"
    degree: int = 1
    at_most: int = 1
    i: int = 1
    d: Union[int, str, None] = None
    pattern: Optional[PatternSpec] = None
    suspensions: int = 0
    archive: Optional[bool] = None

    def __post_init__(self) -> None:
        kind = self.kind
        if kind in (MeasurementKind.BETTI, MeasurementKind.CUP_LENGTH):
            try:
                Field.parse(self.field)
            except PyrscError as e:
                raise ExperimentConfigError(str(e)) from e
        if kind is MeasurementKind.BETTI and self.degree < 0:
            raise ExperimentConfigError(f"betti degree must be >= 0, got {self.degree}")
        if kind in (MeasurementKind.SQ, MeasurementKind.SQ_RANK):
            if not isinstance(self.d, int) or self.i < 0 or self.d < self.i:
                raise ExperimentConfigError(f"{kind.value} needs integers 0 <= i <= d")
        if kind is MeasurementKind.COLLAPSE:
            if not (self.d == "l" or (isinstance(self.d, int) and self.d >= 0)):
                raise ExperimentConfigError(f"collapse needs d >= 0 or 'l', got {self.d!r}")
        if kind in (MeasurementKind.COPY_COUNT, MeasurementKind.COMPONENTS):
            if self.pattern is None:
                raise ExperimentConfigError(f"{kind.value} needs a pattern")
            if self.suspensions < 0:
                raise ExperimentConfigError("suspensions must be >= 0")
        if kind is MeasurementKind.COMPONENTS and not (isinstance(self.d, int) and self.d >= 1):
            raise ExperimentConfigError("components needs an integer d >= 1")

    @property
    def label(self) -> str:
        kind = self.kind
        if kind is MeasurementKind.BETTI:
            return f"betti[{self.field},{self.degree}]"
        if kind is MeasurementKind.CUP_LENGTH:
            return f"cup_length[{self.field}]"
        if kind in (MeasurementKind.SQ, MeasurementKind.SQ_RANK):
            return f"{kind.value}[{self.i},{self.d}]"
        if kind is MeasurementKind.COLLAPSE:
            return f"collapse[{self.d}]"
        if kind is MeasurementKind.COPY_COUNT:
            return f"copy_count[{_pattern_label(self.pattern, self.suspensions)}]"
        if kind is MeasurementKind.COMPONENTS:
            return f"components[{_pattern_label(self.pattern, self.suspensions)},{self.d}]"
        return kind.value

    @property
    def archives_failures(self) -> bool:
        return self.kind in _ARCHIVED_BY_DEFAULT if self.archive is None else self.archive

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Measurement":
        if "kind" not in data:
            raise ExperimentConfigError(f"Measurement without a kind: {data}")
        try:
            kind = MeasurementKind(data["kind"])
        except ValueError:
            choices = [k.value for k in MeasurementKind]
            raise ExperimentConfigError(f"Unknown measurement {data['kind']!r}; use {choices}")
        allowed = {"kind", "archive", *_KEYS[kind]}
        unknown = set(data) - allowed
        if unknown:
            raise ExperimentConfigError(f"Unknown keys for {kind.value}: {sorted(unknown)}")
        kwargs = {k: v for k, v in data.items() if k != "kind"}
        return cls(kind=kind, **kwargs)


@dataclass(frozen=True)
class Plant:
    """A fixed subcomplex inserted into every sample (planted-instance runs)"""

    pattern: PatternSpec
    suspensions: int = 0
    vertices: Optional[Tuple[int, ...]] = None

    def complex(self) -> SimplicialComplex:
        return resolve_pattern(self.pattern, self.suspensions)

    def targets(self) -> Tuple[int, ...]:
        if self.vertices is not None:
            return self.vertices
        return tuple(range(len(self.complex().vertices)))


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Complete description of a Monte Carlo run.
    """

    name: str
    model: ModelKind
    n_values: Tuple[int, ...]
    trials: int
    master_seed: int
    params: ParamVector
    measurements: Tuple[Measurement, ...]
    max_simplices: Optional[int] = None
    restarts: int = DEFAULT_RESTARTS
    success_bar: float = DEFAULT_SUCCESS_BAR
    plant: Optional[Plant] = None

    def __post_init__(self) -> None:
        if not self.n_values:
            raise ExperimentConfigError("n_values must not be empty")
        if any(n < 1 for n in self.n_values):
            raise ExperimentConfigError(f"n_values must be positive, got {list(self.n_values)}")
        if any(a >= b for a, b in zip(self.n_values, self.n_values[1:])):
            raise ExperimentConfigError(
                f"n_values must be strictly ascending, got {list(self.n_values)}"
            )
        if self.trials < 1:
            raise ExperimentConfigError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.master_seed < 2**64:
            raise ExperimentConfigError(f"master_seed out of range: {self.master_seed}")
        if not self.measurements:
            raise ExperimentConfigError("At least one measurement is required")
        if self.restarts < 1:
            raise ExperimentConfigError(f"restarts must be >= 1, got {self.restarts}")
        if not 0.0 <= self.success_bar <= 1.0:
            raise ExperimentConfigError(f"success_bar must lie in [0, 1], got {self.success_bar}")
        if self.max_simplices is not None and self.max_simplices < 1:
            raise ExperimentConfigError("max_simplices must be positive")
        labels = [m.label for m in self.measurements]
        if len(set(labels)) != len(labels):
            raise ExperimentConfigError(f"Duplicate measurements: {labels}")

    def collapse_target(self, m: Measurement) -> int:
        """Collapse dimension of a collapse measurement; ``"l"`` is floor(beta)."""
        if isinstance(m.d, int):
            return m.d
        if not self.params.uses_alphas:
            raise ExperimentConfigError("collapse d='l' needs alphas, not probabilities")
        return fn_params(self.params, D=self.params.D).l

    def measurement(self, label: str) -> Measurement:
        for m in self.measurements:
            if m.label == label:
                return m
        raise KeyError(f"No measurement labelled {label!r}")


_TOP_KEYS = {
    "name",
    "model",
    "n_values",
    "trials",
    "master_seed",
    "params",
    "measurements",
    "max_simplices",
    "restarts",
    "success_bar",
    "plant",
}
_REQUIRED = ("model", "n_values", "trials", "master_seed", "params", "measurements")


def _params_from_dict(data: Dict[str, Any]) -> ParamVector:
    unknown = set(data) - {"alphas", "probabilities", "tail", "dim_cap"}
    if unknown:
        raise ExperimentConfigError(f"Unknown keys in params: {sorted(unknown)}")
    try:
        tail = TailPolicy(data.get("tail", "zero"))
        dim_cap = data.get("dim_cap")
        if "probabilities" in data:
            if "alphas" in data:
                raise ExperimentConfigError("params takes alphas or probabilities, not both")
            return ParamVector.from_probabilities(data["probabilities"], tail, dim_cap)
        if "alphas" not in data:
            raise ExperimentConfigError("params needs alphas or probabilities")
        alphas = [float("inf") if a in ("inf", None) else a for a in data["alphas"]]
        return ParamVector.from_alphas(alphas, tail, dim_cap)
    except (ValueError, TypeError) as e:
        if isinstance(e, ExperimentConfigError):
            raise
        raise ExperimentConfigError(f"Invalid params: {e}") from e


def config_from_dict(data: Dict[str, Any]) -> ExperimentConfig:
    """
    Build a config from parsed JSON.

    Raises:
        ExperimentConfigError: For unknown or missing keys and invalid values
    """
    if not isinstance(data, dict):
        raise ExperimentConfigError("Experiment config must be a JSON object")
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise ExperimentConfigError(f"Unknown config keys: {sorted(unknown)}")
    missing = [k for k in _REQUIRED if k not in data]
    if missing:
        raise ExperimentConfigError(f"Missing config keys: {missing}")
    try:
        model = ModelKind(data["model"])
    except ValueError:
        raise ExperimentConfigError(f"model must be 'lower' or 'upper', got {data['model']!r}")
    plant = None
    if data.get("plant") is not None:
        raw = dict(data["plant"])
        unknown = set(raw) - {"pattern", "suspensions", "vertices"}
        if unknown or "pattern" not in raw:
            raise ExperimentConfigError(f"plant needs a pattern; unknown keys {sorted(unknown)}")
        if raw.get("vertices") is not None:
            raw["vertices"] = tuple(int(v) for v in raw["vertices"])
        plant = Plant(**raw)
    try:
        return ExperimentConfig(
            name=str(data.get("name", "experiment")),
            model=model,
            n_values=tuple(int(n) for n in data["n_values"]),
            trials=int(data["trials"]),
            master_seed=int(data["master_seed"]),
            params=_params_from_dict(data["params"]),
            measurements=tuple(Measurement.from_dict(m) for m in data["measurements"]),
            max_simplices=data.get("max_simplices"),
            restarts=int(data.get("restarts", DEFAULT_RESTARTS)),
            success_bar=float(data.get("success_bar", DEFAULT_SUCCESS_BAR)),
            plant=plant,
        )
    except ExperimentConfigError:
        raise
    except (TypeError, ValueError) as e:
        raise ExperimentConfigError(f"Invalid experiment config: {e}") from e


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ExperimentConfigError(f"{path}:{e.lineno}: {e.msg}") from e
    logger.debug(f"Loaded experiment config from {path}")
    return config_from_dict(data)
