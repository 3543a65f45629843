"""Samplers for the lower and upper multiparametric random complexes"""

from .params import (
    TailPolicy,
    ModelKind,
    ParamVector,
    SampleSeed,
    alpha_to_p,
    clique_params,
    linial_meshulam_params,
)
from .coins import CoinStream, BLOCK_SIZE
from .models import (
    MAX_FACES_PER_DIMENSION,
    sample_hypergraph,
    lower_closure,
    upper_closure,
    sample_complex,
    expected_f_vector,
)

__all__ = [
    "TailPolicy",
    "ModelKind",
    "ParamVector",
    "SampleSeed",
    "alpha_to_p",
    "clique_params",
    "linial_meshulam_params",
    "CoinStream",
    "BLOCK_SIZE",
    "MAX_FACES_PER_DIMENSION",
    "sample_hypergraph",
    "lower_closure",
    "upper_closure",
    "sample_complex",
    "expected_f_vector",
]
