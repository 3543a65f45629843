"""Tests for fields, cochains, the coboundary and cochain-level products"""

from fractions import Fraction

import numpy as np
import pytest
from sympy.polys.matrices import DomainMatrix

from pyrsc.cohomology import (
    F2,
    Cochain,
    Field,
    coboundary,
    coboundary_matrix,
    cup,
    cup_i,
    extend_by_zero,
    restrict,
)
from pyrsc.errors import CochainInputError
from pyrsc.sampling import ParamVector, SampleSeed, lower_closure
from pyrsc.simplicial import simplex_complex, skeleton


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.mark.parametrize("name, characteristic", [("q", 0), ("Q", 0), ("f2", 2), ("F5", 5)])
def test_field_parse(name, characteristic):
    assert Field.parse(name).characteristic == characteristic


@pytest.mark.parametrize("bad", ["f4", "f1", "r", "f"])
def test_field_parse_rejects_non_fields(bad):
    with pytest.raises(CochainInputError):
        Field.parse(bad)


def test_field_elements():
    f3 = Field.prime(3)
    qq = Field.rationals()

    assert f3.to_python(f3.element(Fraction(1, 2))) == 2
    assert f3.to_python(f3.element(-1)) == 2
    assert qq.to_python(qq.element(Fraction(3, 6))) == Fraction(1, 2)
    assert qq.to_python(qq.element(4)) == 4
    assert str(qq) == "Q"
    assert str(f3) == "F3"
    assert F2.is_f2


def test_cochain_validation(torus, qq):
    with pytest.raises(CochainInputError):
        Cochain(torus, 1, qq, {(0, 1, 2): 1})
    with pytest.raises(CochainInputError):
        Cochain(torus, 3, qq, {(0, 1, 2, 3): 1})


def test_cochain_drops_zero_values(torus, qq):
    c = Cochain(torus, 1, qq, {(0, 1): 0, (0, 2): 3})

    assert c.support == [(0, 2)]
    assert qq.to_python(c((0, 2))) == 3
    assert c((1, 2)) == qq.zero


def test_cochain_arithmetic(torus, qq, rng):
    a = Cochain.random(torus, 1, qq, rng)
    b = Cochain.random(torus, 1, qq, rng)

    assert (a + b) - b == a
    assert (a - a).is_zero()
    assert a.scale(2) == a + a
    assert Cochain.from_vector(torus, 1, qq, a.to_vector()) == a


def test_cochains_must_agree_on_field(torus, qq):
    a = Cochain.indicator(torus, (0, 1), qq)
    b = Cochain.indicator(torus, (0, 1), F2)

    with pytest.raises(CochainInputError):
        a + b
    with pytest.raises(CochainInputError):
        cup(a, b)


def test_coboundary_signs(qq):
    K = simplex_complex(2)

    d = coboundary(Cochain.indicator(K, (0,), qq))

    assert {s: qq.to_python(v) for s, v in d} == {(0, 1): -1, (0, 2): -1}


def test_coboundary_agrees_with_matrix(torus, qq, rng):
    c = Cochain.random(torus, 1, qq, rng)

    matrix = coboundary_matrix(torus, 1, qq).to_dense()
    column = DomainMatrix.from_list([[x] for x in c.to_vector()], qq.domain)
    twice = coboundary_matrix(torus, 1, qq) * coboundary_matrix(torus, 0, qq)

    assert [row[0] for row in (matrix * column).to_list()] == coboundary(c).to_vector()
    assert twice.to_dense().to_list() == [[qq.zero] * 7 for _ in range(14)]


@pytest.mark.parametrize("field", [Field.rationals(), Field.prime(2), Field.prime(3)])
def test_coboundary_squares_to_zero(cp2, field, rng):
    for k in range(3):
        c = Cochain.random(cp2, k, field, rng)
        assert coboundary(coboundary(c)).is_zero()


@pytest.mark.parametrize("p, q", [(0, 1), (1, 1), (1, 2)])
def test_leibniz_rule(p, q, rng):
    K = simplex_complex(5)
    qq = Field.rationals()
    a = Cochain.random(K, p, qq, rng)
    b = Cochain.random(K, q, qq, rng)

    left = coboundary(cup(a, b))
    right = cup(coboundary(a), b) + cup(a, coboundary(b)).scale((-1) ** p)

    assert left == right


def test_cup_uses_front_and_back_faces(qq):
    K = simplex_complex(2)
    a = Cochain.indicator(K, (0, 1), qq)
    b = Cochain.indicator(K, (1, 2), qq)

    assert cup(a, b).support == [(0, 1, 2)]
    assert cup(b, a).is_zero()


def test_cup_zero_is_cup(rng):
    K = simplex_complex(4)
    a = Cochain.random(K, 1, F2, rng)
    b = Cochain.random(K, 2, F2, rng)

    assert cup_i(a, b, 0) == cup(a, b)


def test_top_cup_i_is_pointwise_product(rng):
    K = simplex_complex(3)
    a = Cochain.random(K, 2, F2, rng)
    b = Cochain.random(K, 2, F2, rng)

    product = cup_i(a, b, 2)

    assert product.degree == 2
    assert product.support == sorted(set(a.support) & set(b.support))


@pytest.mark.parametrize("p, q, i", [(1, 1, 1), (1, 2, 1), (2, 2, 1), (2, 2, 2), (2, 1, 1)])
def test_cup_i_coboundary_formula(p, q, i, rng):
    """d(a u_i b) = da u_i b + a u_i db + a u_{i-1} b + b u_{i-1} a over F2"""
    K = simplex_complex(5)
    a = Cochain.random(K, p, F2, rng)
    b = Cochain.random(K, q, F2, rng)

    left = coboundary(cup_i(a, b, i))
    right = (
        cup_i(coboundary(a), b, i)
        + cup_i(a, coboundary(b), i)
        + cup_i(a, b, i - 1)
        + cup_i(b, a, i - 1)
    )

    assert left == right

CUP_I_DEGREES = [(p, q, i) for p in (1, 2, 3) for q in (1, 2, 3) for i in range(1, min(p, q) + 1)]


@pytest.mark.slow
def test_cup_i_coboundary_formula_on_random_complexes():
    """The cup-i coboundary formula holds simplex by simplex on sampled complexes"""
    params = ParamVector.from_probabilities([1.0, 1.0, 0.9, 0.9, 0.9, 0.9])
    rng = np.random.default_rng(77)
    checked = 0

    for trial in range(30):
        K = lower_closure(9, params, seed=SampleSeed(5, trial))
        for p, q, i in CUP_I_DEGREES:
            a = Cochain.random(K, p, F2, rng)
            b = Cochain.random(K, q, F2, rng)

            left = coboundary(cup_i(a, b, i))
            right = (
                cup_i(coboundary(a), b, i)
                + cup_i(a, coboundary(b), i)
                + cup_i(a, b, i - 1)
                + cup_i(b, a, i - 1)
            )

            assert left == right, (trial, p, q, i)
            checked += len(K.simplices_of_dim(p + q - i + 1))

    assert checked >= 10_000



def test_cup_i_argument_checks(torus, qq, rng):
    a = Cochain.random(torus, 1, F2, rng)

    with pytest.raises(CochainInputError):
        cup_i(a, a, 2)
    with pytest.raises(CochainInputError):
        cup_i(Cochain.random(torus, 1, qq, rng), Cochain.random(torus, 1, qq, rng), 0)


def test_restrict_and_extend(torus, qq, rng):
    sub = skeleton(torus, 1)
    c = Cochain.random(torus, 1, qq, rng)

    down = restrict(c, sub)
    up = extend_by_zero(down, torus)

    assert down.complex is sub
    assert up == c
    with pytest.raises(CochainInputError):
        restrict(Cochain.random(torus, 0, qq, rng), simplex_complex(8))


if __name__ == "__main__":
    pytest.main([__file__])
