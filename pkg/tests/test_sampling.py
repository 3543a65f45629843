"""Tests for the lower and upper random models"""

import math
from itertools import combinations
from math import comb

import numpy as np
import pytest

from pyrsc.errors import ParamError, SamplingResourceError
from pyrsc.sampling import (
    CoinStream,
    ModelKind,
    ParamVector,
    SampleSeed,
    TailPolicy,
    alpha_to_p,
    clique_params,
    expected_f_vector,
    linial_meshulam_params,
    lower_closure,
    sample_complex,
    sample_hypergraph,
    upper_closure,
)
from pyrsc.simplicial import codim_one_faces, face_rank, has_complete_skeleton


def test_alpha_to_p():
    assert alpha_to_p(100, 0.5) == pytest.approx(0.1)
    assert alpha_to_p(100, 0.0) == 1.0
    assert alpha_to_p(100, math.inf) == 0.0
    with pytest.raises(ParamError):
        alpha_to_p(100, -0.1)


def test_param_vector_tails():
    zero = ParamVector.from_alphas([0.5, 1.0])
    one = ParamVector.from_alphas([0.5, 1.0], TailPolicy.ONE, dim_cap=4)

    assert zero.D == 2
    assert zero.max_dim == 2
    assert zero.alpha(3) == math.inf
    assert zero.probability(100, 3) == 0.0
    assert one.alpha(3) == 0.0
    assert one.probability(100, 4) == 1.0
    assert one.probability(100, 5) == 0.0
    assert one.probabilities_for(100) == pytest.approx([0.1, 0.01, 1.0, 1.0])


@pytest.mark.parametrize(
    "kwargs",
    [
        {"alphas": (0.5,), "probabilities": (0.5,)},
        {"alphas": (-1.0,)},
        {"probabilities": (1.5,)},
        {"alphas": (0.5, 0.5), "tail": TailPolicy.ONE, "dim_cap": 1},
        {"alphas": (0.5,), "dim_cap": -1},
    ],
)
def test_param_vector_validation(kwargs):
    with pytest.raises(ParamError):
        ParamVector(**kwargs)


def test_fixed_probabilities_have_no_alphas():
    params = ParamVector.from_probabilities([0.3])

    assert not params.uses_alphas
    assert params.probability(10, 1) == 0.3
    with pytest.raises(ParamError):
        params.alpha(1)


def test_seed_validation():
    with pytest.raises(ParamError):
        SampleSeed(-1)
    with pytest.raises(ParamError):
        SampleSeed(2**64)
    with pytest.raises(ParamError):
        SampleSeed(1, trial=-1)


def test_coin_is_independent_of_visit_order():
    n = 30
    stream = CoinStream(n, SampleSeed(5, 2))
    face = (3, 11, 29)
    rank = face_rank(face, n)

    direct = stream.coin(2, face)
    stream.clear()
    bulk = stream.prefix(2, rank + 1)[rank]
    picked = stream.uniforms(2, np.array([rank, 0]))[0]

    assert direct == bulk == picked
    assert 0.0 <= direct < 1.0


def test_coins_differ_across_dimension_and_trial():
    a = CoinStream(20, SampleSeed(5, 0)).prefix(1, 50)
    b = CoinStream(20, SampleSeed(5, 1)).prefix(1, 50)
    c = CoinStream(20, SampleSeed(5, 0)).prefix(2, 50)

    assert not np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_samples_are_reproducible():
    params = ParamVector.from_alphas([0.5, 0.5])

    first = lower_closure(30, params, SampleSeed(9, 3))
    second = lower_closure(30, params, SampleSeed(9, 3))
    other = lower_closure(30, params, SampleSeed(9, 4))

    assert first == second
    assert first != other


@pytest.mark.parametrize("trial", range(5))
def test_lower_model_is_inside_upper_model(trial):
    """Both closures read the same coins, so the lower one is a subcomplex"""
    params = ParamVector.from_alphas([0.4, 0.8, 1.2])
    seed = SampleSeed(17, trial)

    lower = lower_closure(16, params, seed)
    upper = upper_closure(16, params, seed)
    marked = sample_hypergraph(16, params, seed)

    assert lower.is_subcomplex_of(upper)
    for k, faces in marked.items():
        assert set(lower.simplices_of_dim(k)) <= set(faces)
        assert set(faces) <= set(upper.simplices_of_dim(k))

@pytest.mark.slow
def test_lower_model_is_inside_upper_model_on_many_samples():
    params = ParamVector.from_alphas([0.4, 0.8, 1.2])

    for trial in range(1000):
        seed = SampleSeed(23, trial)

        assert lower_closure(8, params, seed).is_subcomplex_of(upper_closure(8, params, seed))


def test_samples_grow_with_the_probabilities():
    """Shared coins make both closures monotone in every p_k"""
    sparse = ParamVector.from_probabilities([0.3, 0.4, 0.5])
    dense = ParamVector.from_probabilities([0.5, 0.6, 0.5])

    for trial in range(200):
        seed = SampleSeed(29, trial)

        assert lower_closure(9, sparse, seed).is_subcomplex_of(lower_closure(9, dense, seed))
        assert upper_closure(9, sparse, seed).is_subcomplex_of(upper_closure(9, dense, seed))


def test_lower_closure_keeps_exactly_the_faces_with_low_coins():
    n = 10
    probabilities = [0.6, 0.7, 0.8]
    params = ParamVector.from_probabilities(probabilities)

    for trial in range(20):
        seed = SampleSeed(31, trial)
        K = lower_closure(n, params, seed)
        stream = CoinStream(n, seed)

        for k, p in enumerate(probabilities, start=1):
            below = set(K.simplices_of_dim(k - 1))
            for face in combinations(range(n), k + 1):
                if all(f in below for f in codim_one_faces(face)):
                    assert (face in K) == (stream.coin(k, face) < p)
                else:
                    assert face not in K


def test_upper_closure_facets_are_marked():
    n = 10
    probabilities = [0.3, 0.2, 0.1]
    params = ParamVector.from_probabilities(probabilities)

    for trial in range(20):
        seed = SampleSeed(37, trial)
        K = upper_closure(n, params, seed)
        stream = CoinStream(n, seed)

        for s in K.simplices:
            k = len(s) - 1
            if k >= 1 and not K.cofaces[s]:
                assert stream.coin(k, s) < probabilities[k - 1]



def test_all_vertices_are_present():
    empty = ParamVector.from_probabilities([0.0])

    for model in ModelKind:
        K = sample_complex(model, 12, empty, 0)
        assert tuple(K.f_vector) == (12,)


def test_certain_edges_give_the_complete_graph():
    params = ParamVector.from_probabilities([1.0, 0.0])

    lower = lower_closure(6, params, 0)
    upper = upper_closure(6, params, 0)

    assert tuple(lower.f_vector) == (6, 15)
    assert tuple(upper.f_vector) == (6, 15)


def test_clique_complex_of_a_complete_graph():
    K = lower_closure(6, clique_params(1.0, dim_cap=3), 0)

    assert tuple(K.f_vector) == (6, 15, 20, 15)


def test_linial_meshulam_has_complete_skeleton():
    K = lower_closure(9, linial_meshulam_params(2, 0.3), 4)

    assert has_complete_skeleton(K, 1)
    assert K.dim <= 2


def test_upper_model_closes_downward():
    params = ParamVector.from_probabilities([0.0, 0.0, 0.05])

    K = upper_closure(10, params, 2)

    assert K.is_downward_closed()
    assert len(K.simplices_of_dim(3)) == len(sample_hypergraph(10, params, 2)[3])


def test_lower_model_needs_every_face():
    """Without edges no triangle survives, however likely it is"""
    params = ParamVector.from_probabilities([0.0, 1.0])

    assert lower_closure(8, params, 1).dim == 0
    assert upper_closure(8, params, 1).dim == 2


def test_resource_bounds():
    params = ParamVector.from_probabilities([1.0, 1.0])

    with pytest.raises(SamplingResourceError) as excinfo:
        lower_closure(20, params, 0, max_simplices=50)
    assert excinfo.value.bound == 50
    with pytest.raises(SamplingResourceError):
        upper_closure(20, params, 0, max_faces=100)
    with pytest.raises(ParamError):
        lower_closure(0, params, 0)


def test_expected_f_vector():
    params = ParamVector.from_probabilities([0.5, 0.5])

    assert expected_f_vector(10, params) == pytest.approx([10, 22.5, 7.5])
    assert expected_f_vector(10, params, model="hypergraph") == pytest.approx([10, 22.5, 60])


def test_edge_count_matches_expectation():
    n, trials = 20, 200
    params = ParamVector.from_probabilities([0.3])

    samples = [lower_closure(n, params, SampleSeed(1, t)) for t in range(trials)]
    counts = [len(K.simplices_of_dim(1)) for K in samples]

    mean, p = comb(n, 2) * 0.3, 0.3
    sd_of_mean = math.sqrt(comb(n, 2) * p * (1 - p) / trials)
    assert abs(np.mean(counts) - mean) <= 3 * sd_of_mean


if __name__ == "__main__":
    pytest.main([__file__])
