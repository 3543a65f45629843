"""Threshold and expectation calculus for the multiparametric models"""

from .common import TOLERANCE
from .fowler import (
    FowlerRegion,
    FowlerThresholds,
    s1,
    s2,
    fowler_thresholds,
    fowler_region,
    fowler_table,
)
from .upper import (
    FarberNowikParams,
    fn_params,
    upper_simplex_log_expectation,
    upper_budget_cost,
)
from .budget import (
    LogExpectation,
    log_expectation,
    expansion_cost,
    vertex_bound,
    vertex_addition_cost,
    edge_addition_cost,
)

__all__ = [
    "TOLERANCE",
    "FowlerRegion",
    "FowlerThresholds",
    "s1",
    "s2",
    "fowler_thresholds",
    "fowler_region",
    "fowler_table",
    "FarberNowikParams",
    "fn_params",
    "upper_simplex_log_expectation",
    "upper_budget_cost",
    "LogExpectation",
    "log_expectation",
    "expansion_cost",
    "vertex_bound",
    "vertex_addition_cost",
    "edge_addition_cost",
]
