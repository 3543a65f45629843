"""Tests for the threshold, budget and upper-model exponent calculus"""

import logging
import math

import numpy as np
import pytest

from pyrsc.calculus import (
    FowlerRegion,
    edge_addition_cost,
    expansion_cost,
    fn_params,
    fowler_region,
    fowler_table,
    fowler_thresholds,
    log_expectation,
    s1,
    s2,
    upper_budget_cost,
    upper_simplex_log_expectation,
    vertex_addition_cost,
    vertex_bound,
)
from pyrsc.errors import BoundaryCaseError, ComplexInputError, ParamError
from pyrsc.sampling import ParamVector, TailPolicy
from pyrsc.simplicial import boundary_of_simplex, from_facets, simplex_complex

ALPHAS = (0.3, 0.4)


def test_threshold_sums():
    alphas = [0.3, 0.2, 0.1]

    assert s1(1, alphas) == pytest.approx(0.8)
    assert s1(2, alphas) == pytest.approx(1.6)
    assert s2(1, alphas) == pytest.approx(0.9)
    assert s2(2, alphas) == pytest.approx(2.6)
    with pytest.raises(ParamError):
        s1(0, alphas)


def test_zero_tail_gives_infinite_sums():
    assert s1(2, [0.3]) == math.inf
    assert fowler_region(2, [0.3]) is FowlerRegion.VANISHES_Z


def test_one_tail_pads_with_zero():
    assert s1(1, [0.3], TailPolicy.ONE) == pytest.approx(0.6)
    assert fowler_region(1, [0.3], TailPolicy.ONE) is FowlerRegion.VANISHES_Q


@pytest.mark.parametrize(
    "k, alphas, region",
    [
        (1, (0.45, 0.2), FowlerRegion.NONVANISHING_Q),
        (1, (0.1, 0.1), FowlerRegion.VANISHES_Q),
        (1, (2.0,), FowlerRegion.VANISHES_Z),
        (2, (0.3, 0.2, 0.1), FowlerRegion.NONVANISHING_Q),
        (1, (0.0, 1.5), FowlerRegion.INDETERMINATE),
    ],
)
def test_fowler_regions(k, alphas, region):
    assert fowler_thresholds(k, alphas).region is region


def test_fowler_example_values():
    t = fowler_thresholds(1, (0.45, 0.2))

    assert t.s1 == pytest.approx(1.1)
    assert t.s2 == pytest.approx(1.35)
    assert not t.s1_boundary


def test_s1_on_the_threshold_is_flagged(caplog):
    with caplog.at_level(logging.WARNING, logger="pyrsc.calculus.fowler"):
        t = fowler_thresholds(1, (0.25, 0.5))

    assert t.s1_boundary
    assert t.region is FowlerRegion.NONVANISHING_Q
    assert "threshold" in caplog.text


def test_fowler_table_accepts_param_vectors():
    params = ParamVector.from_alphas([0.45, 0.2])

    table = fowler_table(params, 3)

    assert [row.k for row in table] == [1, 2, 3]
    assert table[0].region is FowlerRegion.NONVANISHING_Q
    with pytest.raises(ParamError):
        fowler_table(ParamVector.from_probabilities([0.5]), 2)


def test_fn_params():
    fn = fn_params((0.6, 0.5))

    assert fn.beta_i == pytest.approx((1.4, 2.5))
    assert fn.beta == pytest.approx(2.5)
    assert fn.l == 2
    assert fn.gamma_k == pytest.approx((2.5, 2.5))
    assert fn.nu_k == pytest.approx((4.0, 3.0))
    assert fn.e_k == pytest.approx((1.5, 0.5))
    assert fn.l_prime == 2
    assert not fn.boundary
    assert fn.e(3) == -math.inf
    assert fn.collapse_dimension == 2


def test_fn_params_gamma_is_a_suffix_maximum():
    fn = fn_params((0.2, 2.5))

    assert fn.gamma_k == pytest.approx((1.8, 0.5))
    assert fn.nu_k == pytest.approx((2.6, -1.0))
    assert fn.l == 1
    assert fn.l_prime == 1
    assert upper_simplex_log_expectation((0.2, 2.5), 2) == pytest.approx(0.5)


@pytest.mark.parametrize("alphas", [(0.6, 0.5), (1.5, 2.9, 0.2), (0.2, 2.5, 0.7, 3.1)])
def test_e_drops_by_at_least_one_per_dimension(alphas):
    fn = fn_params(alphas)

    for k in range(1, fn.D):
        assert fn.e(k + 1) <= fn.e(k) - 1 + 1e-12

def _random_alphas(rng, size):
    return tuple(float(a) for a in rng.uniform(0.05, 3.0, size=size))


def test_e_drops_by_at_least_one_on_random_vectors():
    rng = np.random.default_rng(31)

    for _ in range(1000):
        fn = fn_params(_random_alphas(rng, int(rng.integers(1, 6))))

        for k in range(1, fn.D):
            assert fn.e(k + 1) <= fn.e(k) - 1 + 1e-12


def test_threshold_sums_and_budgets_are_linear_in_alpha():
    rng = np.random.default_rng(32)
    sphere = boundary_of_simplex(3)

    for _ in range(200):
        a = _random_alphas(rng, 4)
        b = _random_alphas(rng, 4)
        t = float(rng.uniform())
        mixed = tuple(t * x + (1 - t) * y for x, y in zip(a, b))

        for k in (1, 2, 3):
            assert s1(k, mixed) == pytest.approx(t * s1(k, a) + (1 - t) * s1(k, b))
        for k in (1, 2, 3, 4):
            assert s2(k, mixed) == pytest.approx(t * s2(k, a) + (1 - t) * s2(k, b))
        assert log_expectation(sphere, mixed).value == pytest.approx(
            t * log_expectation(sphere, a).value + (1 - t) * log_expectation(sphere, b).value
        )


def test_edge_cost_is_bounded_below_past_the_threshold():
    """Where S1(k) >= 1, adding an edge inside an m-simplex with m > k costs at least 1/(k+1)"""
    rng = np.random.default_rng(33)
    checked = 0

    for _ in range(1000):
        alphas = _random_alphas(rng, 5)
        for k in range(1, 4):
            if s1(k, alphas) < 1.0:
                continue
            for m in range(k + 1, 6):
                assert edge_addition_cost(m, alphas) >= 1.0 / (k + 1) - 1e-12
                checked += 1

    assert checked > 0


def test_adding_faces_on_existing_vertices_has_positive_cost():
    rng = np.random.default_rng(34)
    full = simplex_complex(4)

    for _ in range(200):
        alphas = _random_alphas(rng, 4)
        facets = [s for s in full.simplices if len(s) >= 2 and rng.uniform() < 0.2]
        before = from_facets(facets + [(v,) for v in range(5)], 5)
        extra = sorted(int(v) for v in rng.choice(5, size=int(rng.integers(2, 6)), replace=False))
        after = before.union(from_facets([extra], 5))
        added = [a - b for a, b in zip(after.f_vector, list(before.f_vector) + [0] * 5)]

        cost = expansion_cost(before, after, alphas)

        assert cost == pytest.approx(sum(c * a for c, a in zip(added[1:], alphas)))
        if after != before:
            assert cost > 0



def test_one_tail_needs_explicit_dimension():
    with pytest.raises(ParamError):
        fn_params([0.5], tail=TailPolicy.ONE)

    fn = fn_params([0.5], D=3, tail=TailPolicy.ONE)
    assert fn.beta_i == pytest.approx((1.5, 3.0, 4.0))
    assert fn.boundary


def test_upper_budget_cost():
    alphas = (0.6, 0.5, 0.9, 2.0)

    assert fn_params(alphas).l == 3
    assert upper_budget_cost(alphas, None, m=4, v=0) == pytest.approx(2.0)
    assert upper_budget_cost(alphas, None, m=4, v=1) == pytest.approx(1.0)
    with pytest.raises(ParamError):
        upper_budget_cost(alphas, None, m=3, v=0)
    with pytest.raises(ParamError):
        upper_budget_cost(alphas, None, m=4, v=2)


def test_upper_budget_cost_refuses_integer_beta():
    with pytest.raises(BoundaryCaseError):
        upper_budget_cost((1.0,), None, m=2, v=0)


def test_log_expectation_of_the_sphere():
    a1, a2 = ALPHAS

    e = log_expectation(boundary_of_simplex(3), ALPHAS)

    assert e.value == pytest.approx(4 - 6 * a1 - 4 * a2)
    assert tuple(e.fvec) == (4, 6, 4)


def test_expansion_costs_match_the_formulas():
    a1, a2 = ALPHAS
    triangle = simplex_complex(2)
    two_triangles = from_facets([[0, 1, 2], [1, 2, 3]], 4)
    open_path = from_facets([[0, 1], [1, 2]], 3)
    hollow = from_facets([[0, 1], [0, 2], [1, 2]], 3)

    assert vertex_addition_cost(2, ALPHAS) == pytest.approx(2 * a1 + a2 - 1)
    assert expansion_cost(triangle, two_triangles, ALPHAS) == pytest.approx(2 * a1 + a2 - 1)
    assert edge_addition_cost(2, ALPHAS) == pytest.approx(a1 + a2)
    assert expansion_cost(open_path, triangle, ALPHAS) == pytest.approx(a1 + a2)
    assert expansion_cost(hollow, triangle, ALPHAS) == pytest.approx(a2)


def test_expansion_cost_needs_a_subcomplex():
    with pytest.raises(ComplexInputError):
        expansion_cost(simplex_complex(2), from_facets([[0, 1]], 3), ALPHAS)


def test_vertex_bound():
    assert [vertex_bound(k) for k in (2, 3, 4, 5)] == [9, 10, 11, 13]
    with pytest.raises(ParamError):
        vertex_bound(1)


if __name__ == "__main__":
    pytest.main([__file__])
