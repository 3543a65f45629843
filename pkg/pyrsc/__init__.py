"""
PyRSC - Random Simplicial Complexes in Python
==============================================

Sample multiparametric random simplicial complexes (lower and upper
models), compute their cohomology rings and Steenrod squares exactly over
Q and F_p, and check the asymptotic statements about them as finite-n
trends.

Usage:
    from pyrsc import ParamVector, lower_closure, betti, cup_length, Field

    params = ParamVector.from_alphas([0.6, 0.5])
    K = lower_closure(40, params, seed=1)

    print(f"f-vector: {K.f_vector}")
    print(f"Betti over Q: {betti(K, Field.rationals())}")
    print(f"Cup length: {cup_length(K, Field.rationals())}")
"""

from .errors import (
    PyrscError,
    ComplexInputError,
    ComplexParseError,
    SamplingResourceError,
    ParamError,
    BoundaryCaseError,
    CochainInputError,
    ExperimentConfigError,
)
from .simplicial import (
    SimplicialComplex,
    FVector,
    from_facets,
    skeleton,
    link,
    strong_components,
    free_faces,
    collapse_to_dim,
    prime_suspension,
    count_subcomplex_copies,
    load_complex,
    save_complex,
    load_bundled,
)
from .sampling import (
    TailPolicy,
    ModelKind,
    ParamVector,
    SampleSeed,
    lower_closure,
    upper_closure,
    sample_complex,
)
from .calculus import (
    s1,
    s2,
    fowler_thresholds,
    fn_params,
    log_expectation,
    expansion_cost,
    upper_budget_cost,
    vertex_bound,
)
from .cohomology import (
    Field,
    Cochain,
    CohomologyClass,
    coboundary,
    betti,
    cohomology_basis,
    reduce_to_cohomology,
    cup,
    cup_i,
    cup_length,
    sq,
    steenrod_nontrivial_on_components,
)

__version__ = "0.1.0"
__author__ = "mssc89"
__description__ = "Random simplicial complexes: sampling, cohomology and threshold experiments"
__url__ = "https://github.com/mssc89/pyrsc"

__all__ = [
    # Errors
    "PyrscError",
    "ComplexInputError",
    "ComplexParseError",
    "SamplingResourceError",
    "ParamError",
    "BoundaryCaseError",
    "CochainInputError",
    "ExperimentConfigError",
    # Complexes
    "SimplicialComplex",
    "FVector",
    "from_facets",
    "skeleton",
    "link",
    "strong_components",
    "free_faces",
    "collapse_to_dim",
    "prime_suspension",
    "count_subcomplex_copies",
    "load_complex",
    "save_complex",
    "load_bundled",
    # Sampling
    "TailPolicy",
    "ModelKind",
    "ParamVector",
    "SampleSeed",
    "lower_closure",
    "upper_closure",
    "sample_complex",
    # Calculus
    "s1",
    "s2",
    "fowler_thresholds",
    "fn_params",
    "log_expectation",
    "expansion_cost",
    "upper_budget_cost",
    "vertex_bound",
    # Cohomology
    "Field",
    "Cochain",
    "CohomologyClass",
    "coboundary",
    "betti",
    "cohomology_basis",
    "reduce_to_cohomology",
    "cup",
    "cup_i",
    "cup_length",
    "sq",
    "steenrod_nontrivial_on_components",
]
