"""Tests for Betti numbers, cohomology bases and cup products"""

import numpy as np
import pytest

from pyrsc.cohomology import (
    F2,
    Cochain,
    Field,
    betti,
    class_of,
    coboundary,
    cohomology_basis,
    cup,
    cup_classes,
    cup_length,
    cup_length_by_degree,
    cup_product_matrix,
    is_cocycle,
    reduce_to_cohomology,
    zero_class,
)
from pyrsc.errors import CochainInputError
from pyrsc.simplicial import SimplicialComplex, disjoint_union, prime_suspension, simplex_complex

QQ_FIELD = Field.rationals()
F3 = Field.prime(3)


@pytest.mark.parametrize(
    "name, field, expected",
    [
        ("torus", QQ_FIELD, [1, 2, 1]),
        ("torus", F2, [1, 2, 1]),
        ("rp2", QQ_FIELD, [1, 0, 0]),
        ("rp2", F2, [1, 1, 1]),
        ("rp2", F3, [1, 0, 0]),
        ("klein_bottle", QQ_FIELD, [1, 1, 0]),
        ("klein_bottle", F2, [1, 2, 1]),
        ("dunce_hat", QQ_FIELD, [1, 0, 0]),
        ("dunce_hat", F2, [1, 0, 0]),
        ("cp2", QQ_FIELD, [1, 0, 1, 0, 1]),
        ("wedge", QQ_FIELD, [1, 2, 1]),
        ("empty_triangle", QQ_FIELD, [1, 1]),
    ],
)
def test_betti_numbers(name, field, expected, request):
    K = request.getfixturevalue(name)

    assert betti(K, field) == expected


def test_betti_of_degenerate_complexes():
    assert betti(SimplicialComplex(3), QQ_FIELD) == []
    assert betti(simplex_complex(3), QQ_FIELD) == [1, 0, 0, 0]
    assert betti(SimplicialComplex(3, frozenset({(0,), (2,)})), F2) == [2]


def test_betti_numbers_add_over_disjoint_unions(torus, rp2):
    assert betti(disjoint_union(torus, rp2), F2) == [2, 3, 2]


def test_suspension_shifts_cohomology(rp2, torus):
    assert betti(prime_suspension(rp2), F2) == [1, 0, 1, 6]
    assert betti(prime_suspension(rp2), QQ_FIELD) == [1, 0, 0, 5]
    susp = betti(prime_suspension(torus), QQ_FIELD)
    assert susp[:3] == [1, 0, 2]


@pytest.mark.parametrize("field", [QQ_FIELD, F2, F3])
def test_basis_dimension_matches_betti(klein_bottle, field):
    b = betti(klein_bottle, field)

    for k in range(klein_bottle.dim + 1):
        basis = cohomology_basis(klein_bottle, k, field)
        assert basis.dim == b[k]
        assert all(is_cocycle(z) for z in basis.representatives)


def test_representatives_have_unit_coordinates(torus):
    basis = cohomology_basis(torus, 1, QQ_FIELD)

    for i, z in enumerate(basis.representatives):
        coords = [QQ_FIELD.to_python(c) for c in class_of(z).coordinates]
        assert coords == [1 if j == i else 0 for j in range(basis.dim)]


def test_classes_ignore_coboundaries(torus):
    rng = np.random.default_rng(8)
    z = cohomology_basis(torus, 1, QQ_FIELD).representatives[0]
    y = Cochain.random(torus, 0, QQ_FIELD, rng)

    assert class_of(z + coboundary(y)) == class_of(z)
    assert class_of(coboundary(y)).is_zero()


def test_class_of_rejects_non_cocycles(torus):
    with pytest.raises(CochainInputError):
        class_of(Cochain.indicator(torus, (0, 1), QQ_FIELD))


def test_reduce_to_cohomology_checks_its_inputs(torus, rp2):
    z = cohomology_basis(torus, 1, F2).representatives[1]

    assert [F2.to_python(c) for c in reduce_to_cohomology(torus, z, F2)] == [0, 1]
    with pytest.raises(CochainInputError):
        reduce_to_cohomology(torus, z, QQ_FIELD)
    with pytest.raises(CochainInputError):
        reduce_to_cohomology(rp2, z, F2)


def test_basis_is_cached(torus):
    assert cohomology_basis(torus, 1, F2) is cohomology_basis(torus, 1, F2)
    assert cohomology_basis(torus, 1, F2) is not cohomology_basis(torus, 1, QQ_FIELD)


def test_zero_class(torus):
    zero = zero_class(torus, 2, QQ_FIELD)

    assert zero.is_zero()
    assert zero.degree == 2
    assert len(zero.coordinates) == 1


def test_cup_product_on_the_torus(torus):
    table = cup_product_matrix(torus, 1, 1, QQ_FIELD)

    assert table[0][0] == [0]
    assert table[1][1] == [0]
    assert table[0][1] != [0]
    assert table[0][1] == [-table[1][0][0]]


def test_square_of_the_projective_plane_class(rp2):
    (x,) = cohomology_basis(rp2, 1, F2).classes()

    assert not cup_classes(x, x).is_zero()


def test_cup_classes_need_a_common_field(torus):
    x = cohomology_basis(torus, 1, F2).class_at(0)
    y = cohomology_basis(torus, 1, QQ_FIELD).class_at(0)

    with pytest.raises(CochainInputError):
        cup_classes(x, y)


@pytest.mark.parametrize(
    "name, field, expected",
    [
        ("torus", QQ_FIELD, 2),
        ("torus", F2, 2),
        ("rp2", QQ_FIELD, 0),
        ("rp2", F2, 2),
        ("klein_bottle", F2, 2),
        ("wedge", QQ_FIELD, 1),
        ("dunce_hat", QQ_FIELD, 0),
        ("cp2", QQ_FIELD, 2),
        ("empty_triangle", QQ_FIELD, 1),
    ],
)
def test_cup_length(name, field, expected, request):
    K = request.getfixturevalue(name)

    assert cup_length(K, field) == expected


def test_cup_length_of_a_point_and_a_union(torus, wedge):
    assert cup_length(simplex_complex(0), QQ_FIELD) == 0
    assert cup_length(disjoint_union(wedge, torus), QQ_FIELD) == 2


def test_suspension_kills_products(torus):
    assert cup_length(prime_suspension(torus), QQ_FIELD) == 1


def test_nonzero_product_degrees(torus, cp2):
    assert cup_length_by_degree(torus, QQ_FIELD) == [(1, 1)]
    assert cup_length_by_degree(cp2, QQ_FIELD) == [(2, 2)]

@pytest.mark.parametrize("field", [QQ_FIELD, F2, F3, Field.prime(5)])
@pytest.mark.parametrize("name", ["torus", "rp2", "klein_bottle", "dunce_hat", "cp2", "wedge"])
def test_betti_numbers_give_the_euler_characteristic(name, field, request):
    K = request.getfixturevalue(name)
    euler = sum((-1) ** k * f for k, f in enumerate(K.f_vector))

    assert sum((-1) ** k * b for k, b in enumerate(betti(K, field))) == euler


@pytest.mark.parametrize(
    "name", ["torus", "cp2", "wedge", "dunce_hat", "empty_triangle", "rp2", "klein_bottle"]
)
def test_odd_characteristic_agrees_with_the_rationals(name, request):
    """None of the bundled complexes has odd torsion"""
    K = request.getfixturevalue(name)

    assert betti(K, Field.prime(5)) == betti(K, QQ_FIELD)
    assert betti(K, F3) == betti(K, QQ_FIELD)


@pytest.mark.parametrize("field", [QQ_FIELD, F3])
@pytest.mark.parametrize("name", ["torus", "cp2", "klein_bottle", "wedge"])
def test_products_are_graded_commutative(name, field, request):
    K = request.getfixturevalue(name)

    for p in range(1, K.dim):
        for q in range(1, K.dim - p + 1):
            for x in cohomology_basis(K, p, field).classes():
                for y in cohomology_basis(K, q, field).classes():
                    swapped = cup(y.representative, x.representative).scale((-1) ** (p * q))

                    assert cup_classes(x, y) == class_of(swapped)
                    assert reduce_to_cohomology(K, swapped, field) == cup_classes(x, y).coordinates


if __name__ == "__main__":
    pytest.main([__file__])
