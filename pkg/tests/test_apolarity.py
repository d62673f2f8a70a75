import pytest

from apolarity import (
    ann_graded_basis,
    catalecticant,
    contains_in_annihilator,
    dimension_of_graded_piece,
    generator_degrees,
    hilbert_function,
    ideal_degree,
)
from cubic_atlas import PlanePoint
from poly_core import (
    DualPolynomial,
    NotHomogeneousError,
    PrimalPolynomial,
    RingMismatchError,
    complete_symmetric,
    contract,
    monomial_count,
)


def X(n, i):
    return DualPolynomial.variable(n, i)


def x(n, i):
    return PrimalPolynomial.variable(n, i)


def test_hilbert_function_of_h34():
    hf = hilbert_function(complete_symmetric(3, 4))
    assert tuple(hf) == (1, 3, 6, 3, 1)
    assert hf.socle_degree == 4
    assert hf.length == 14
    assert hf.is_palindromic()


def test_hilbert_function_of_a_power():
    assert tuple(hilbert_function(X(3, 0) ** 3)) == (1, 1, 1, 1)


@pytest.mark.parametrize("n, e", [(n, e) for n in range(1, 6) for e in range(1, 7)])
def test_complete_symmetric_is_compressed(n, e):
    hf = hilbert_function(complete_symmetric(n, e))
    expected = tuple(min(monomial_count(n, i), monomial_count(n, e - i)) for i in range(e + 1))
    assert tuple(hf) == expected


def test_catalecticant_middle_is_symmetric():
    cat = catalecticant(complete_symmetric(3, 4), 2)
    assert cat.shape == (6, 6)
    assert cat.is_symmetric()
    assert cat.rank == 6


def test_catalecticant_degree_out_of_range():
    with pytest.raises(NotHomogeneousError):
        catalecticant(complete_symmetric(2, 2), 3)


def test_catalecticant_needs_dual_form():
    with pytest.raises(RingMismatchError):
        catalecticant(x(2, 0), 0)


def test_ann_basis_annihilates():
    F = complete_symmetric(3, 3)
    piece = ann_graded_basis(F, 2)
    assert piece.dimension == 6 - 3
    assert all(contract(g, F).is_zero() for g in piece.basis)


def test_ann_above_socle_is_everything():
    piece = ann_graded_basis(X(2, 0) * X(2, 1), 3)
    assert piece.dimension == dimension_of_graded_piece(2, 3) == 4


def test_generator_degrees_of_monomial():
    assert generator_degrees(X(2, 0) * X(2, 1)) == [(2, 2)]
    assert generator_degrees(X(3, 0) ** 3) == [(1, 2), (4, 1)]


def test_generator_degrees_of_a_power_of_a_linear_form():
    F = PlanePoint.of(1, 0, 0).form(3)
    assert generator_degrees(F) == [(1, 2), (4, 1)]


def test_generator_degrees_of_a_symmetric_cubic():
    degrees = dict(generator_degrees(PlanePoint.of(1, 1, 1).form(3)))
    assert 1 not in degrees
    assert degrees[2] == 3


def test_generator_degrees_of_nondegenerate_quadric():
    assert generator_degrees(complete_symmetric(3, 2)) == [(2, 5)]


def test_ideal_degree():
    assert ideal_degree(complete_symmetric(2, 2)) == 4


def test_contains_in_annihilator():
    F = X(2, 0) * X(2, 1)
    assert contains_in_annihilator([x(2, 0) ** 2, x(2, 1) ** 2], F)
    assert not contains_in_annihilator([x(2, 0) * x(2, 1)], F)
    with pytest.raises(NotHomogeneousError):
        contains_in_annihilator([x(2, 0) + x(2, 0) ** 2], F)
