"""Monte Carlo experiments over the random models"""

from .config import (
    DEFAULT_SUCCESS_BAR,
    MeasurementKind,
    Measurement,
    Plant,
    ExperimentConfig,
    config_from_dict,
    load_config,
    resolve_pattern,
)
from .runner import (
    MeasurementRecord,
    TrialResult,
    MeasurementSummary,
    ExperimentResult,
    ExperimentRunner,
    derive_seed,
    trial_complex,
    evaluate_measurement,
    matching_components,
    run_trial,
    run,
)
from .reports import (
    expected_copies,
    ConcentrationReport,
    subcount_concentration,
    CupLengthSweep,
    cup_length_sweep,
    SteenrodSearch,
    steenrod_search,
)
from .exporter import (
    ResultJSONEncoder,
    result_to_dict,
    write_csv,
    export_csv,
    csv_string,
    export_summary_json,
    summary_json,
    to_json,
)
from .plots import plot_trend, plot_all

__all__ = [
    # Config
    "DEFAULT_SUCCESS_BAR",
    "MeasurementKind",
    "Measurement",
    "Plant",
    "ExperimentConfig",
    "config_from_dict",
    "load_config",
    "resolve_pattern",
    # Runner
    "MeasurementRecord",
    "TrialResult",
    "MeasurementSummary",
    "ExperimentResult",
    "ExperimentRunner",
    "derive_seed",
    "trial_complex",
    "evaluate_measurement",
    "matching_components",
    "run_trial",
    "run",
    # Reports
    "expected_copies",
    "ConcentrationReport",
    "subcount_concentration",
    "CupLengthSweep",
    "cup_length_sweep",
    "SteenrodSearch",
    "steenrod_search",
    # Export
    "ResultJSONEncoder",
    "result_to_dict",
    "write_csv",
    "export_csv",
    "csv_string",
    "export_summary_json",
    "summary_json",
    "to_json",
    "plot_trend",
    "plot_all",
]
