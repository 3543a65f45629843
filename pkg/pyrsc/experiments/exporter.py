"""
CSV and JSON export of experiment results.
"""

import csv
import io
import json
import math
from dataclasses import asdict, is_dataclass
from datetime import datetime
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO, Union

from ..simplicial.models import SimplicialComplex
from .runner import ExperimentResult

CSV_COLUMNS = ["n", "trial", "measurement", "value", "success", "censored"]


class ResultJSONEncoder(json.JSONEncoder):
    """Custom JSON encoder for pyrsc data types"""

    def default(self, obj: Any) -> Any:
        # Complexes are summarized; the .cplx format stores them in full
        if isinstance(obj, SimplicialComplex):
            return {"n_vertices": obj.n_vertices, "f_vector": list(obj.f_vector)}

        # Handle dataclasses
        if is_dataclass(obj):
            # mypy wants DataclassInstance; asdict accepts dataclass instances.
            return asdict(obj)  # type: ignore[arg-type]

        # Handle enums
        if isinstance(obj, Enum):
            return {"value": obj.value, "name": obj.name}

        # Handle datetime objects
        if isinstance(obj, datetime):
            return obj.isoformat()

        if isinstance(obj, Fraction):
            return str(obj)

        # Handle sets
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)

        # Handle other non-serializable types
        return str(obj)

    def iterencode(self, o: Any, _one_shot: bool = False) -> Any:
        return super().iterencode(_finite(o), _one_shot)


def _finite(obj: Any) -> Any:
    """Replace nan/inf floats with strings, since JSON has no spelling for them."""
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    if is_dataclass(obj) and not isinstance(obj, (type, SimplicialComplex)):
        return _finite(asdict(obj))  # type: ignore[arg-type]
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    return obj


def result_to_dict(result: ExperimentResult) -> Dict[str, Any]:
    """Summary of a run: config, per-(n, measurement) statistics, trends, metadata"""
    labels = [m.label for m in result.config.measurements]
    trends = {
        label: {
            "success_fractions": result.success_fractions(label),
            "non_decreasing": result.is_non_decreasing(label),
            "non_increasing": result.is_non_increasing(label),
            "meets_bar": result.meets_bar(label),
        }
        for label in labels
    }
    return {
        "config": asdict(result.config),
        "summaries": [asdict(s) for s in result.summaries],
        "trends": trends,
        "counterexamples": result.counterexamples,
        "_export_metadata": dict(result.metadata, exported_at=datetime.now()),
    }


def _format_row(
    n: int,
    trial: int,
    label: str,
    value: Optional[int],
    success: Optional[bool],
    censored: bool,
) -> List[str]:
    return [
        str(n),
        str(trial),
        label,
        "" if value is None else str(value),
        "" if success is None else str(int(success)),
        str(int(censored)),
    ]


def write_csv(result: ExperimentResult, stream: TextIO) -> None:
    """One row per (n, trial, measurement), in (n, trial) order."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for t in result.trials:
        for r in t.records:
            writer.writerow(_format_row(t.n, t.trial, r.label, r.value, r.success, t.censored))


def export_csv(result: ExperimentResult, output_path: Union[str, Path]) -> Path:
    output_path = Path(output_path)
    with open(output_path, "w", encoding="utf-8", newline="") as f:
        write_csv(result, f)
    return output_path


def csv_string(result: ExperimentResult) -> str:
    buf = io.StringIO()
    write_csv(result, buf)
    return buf.getvalue()


def export_summary_json(
    result: ExperimentResult, output_path: Union[str, Path], pretty: bool = True
) -> Path:
    """
    Write the summary JSON.

    Args:
        result: Experiment result
        output_path: Path to the output JSON file
        pretty: Whether to format JSON with indentation
    """
    output_path = Path(output_path)
    with open(output_path, "w", encoding="utf-8") as f:
        f.write(summary_json(result, pretty))
    return output_path


def summary_json(result: ExperimentResult, pretty: bool = True) -> str:
    data = result_to_dict(result)
    if pretty:
        return ResultJSONEncoder(indent=2, sort_keys=True).encode(data)
    return json.dumps(data, cls=ResultJSONEncoder, separators=(",", ":"))


def to_json(obj: Any, pretty: bool = True) -> str:
    """Encode any report or dataclass with ResultJSONEncoder."""
    if pretty:
        return ResultJSONEncoder(indent=2, sort_keys=True).encode(obj)
    return json.dumps(obj, cls=ResultJSONEncoder, separators=(",", ":"))
