from fractions import Fraction

import pytest

from poly_core import (
    ApolarityError,
    DualPolynomial,
    NotSymmetricError,
    PrimalPolynomial,
    QuadExtScalar,
    RingMismatchError,
    binomial,
    complete_symmetric,
    contract,
    expand_linear_power,
    format_rational,
    format_scalar,
    from_power_sum_basis,
    grlex_key,
    leading_key,
    monomials,
    pair,
    parse_rational,
    parse_scalar,
    partitions,
    phi,
    phi_inverse,
    power_sum,
    quadratic_form_matrix,
    sqrt_in_extension,
    sum_of_variables,
    symmetric_cubic,
    to_power_sum_basis,
)


def x(n, i):
    return PrimalPolynomial.variable(n, i)


def X(n, i):
    return DualPolynomial.variable(n, i)


def test_binomial_is_zero_outside_range():
    assert binomial(5, 2) == 10
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0


def test_parse_and_format_rational():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational(4) == Fraction(4)
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-2, 4)) == "-1/2"


@pytest.mark.parametrize("bad", ["abc", "1/0", True])
def test_parse_rational_rejects_garbage(bad):
    with pytest.raises(ApolarityError):
        parse_rational(bad)


def test_monomials_are_descending_grlex():
    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(monomials(3, 4)) == 15


def test_partitions_are_reverse_lexicographic():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_contraction_differentiates():
    n = 2
    F = X(n, 0) ** 2 * X(n, 1)
    assert contract(x(n, 0), F) == (X(n, 0) * X(n, 1)).scale(2)
    assert contract(x(n, 1) ** 2, F).is_zero()


def test_pair_of_monomials_is_exponent_factorial():
    assert pair(x(3, 0) ** 2 * x(3, 2), X(3, 0) ** 2 * X(3, 2)) == 2


def test_contract_rejects_swapped_rings():
    with pytest.raises(RingMismatchError):
        contract(X(2, 0), x(2, 0))


def test_mixing_rings_is_rejected():
    with pytest.raises(RingMismatchError):
        x(2, 0) + X(2, 0)


def test_phi_and_phi_inverse():
    f = x(2, 0) ** 3 + x(2, 0) * x(2, 1)
    assert phi(f) == (X(2, 0) ** 3).scale(6) + X(2, 0) * X(2, 1)
    assert phi_inverse(phi(f)) == f


def test_complete_symmetric_has_every_monomial_once():
    h = complete_symmetric(3, 3)
    assert len(h) == 10
    assert all(c == 1 for _, c in h.items())
    assert h.is_symmetric()


def test_expand_linear_power_matches_repeated_product():
    L = DualPolynomial.linear([1, 2, -1])
    assert expand_linear_power(L, 3) == L * L * L


def test_h3_in_power_sum_basis():
    coordinates = to_power_sum_basis(complete_symmetric(3, 3))
    assert coordinates == {(3,): Fraction(1, 3), (2, 1): Fraction(1, 2), (1, 1, 1): Fraction(1, 6)}
    assert from_power_sum_basis(3, coordinates) == complete_symmetric(3, 3)


def test_h4_in_power_sum_basis():
    coordinates = to_power_sum_basis(complete_symmetric(4, 4))
    assert coordinates == {
        (4,): Fraction(6, 24),
        (3, 1): Fraction(8, 24),
        (2, 2): Fraction(3, 24),
        (2, 1, 1): Fraction(6, 24),
        (1, 1, 1, 1): Fraction(1, 24),
    }


def test_power_sum_basis_needs_symmetry():
    with pytest.raises(NotSymmetricError):
        to_power_sum_basis(X(3, 0) ** 2)


def test_power_sum_basis_needs_enough_variables():
    with pytest.raises(ApolarityError):
        to_power_sum_basis(complete_symmetric(2, 3))


def test_symmetric_cubic_at_cusp_is_p1_cubed():
    p1 = power_sum(4, 1)
    assert symmetric_cubic(4, 1, 0, 0) == p1 * p1 * p1
    assert symmetric_cubic(4, 0, 0, 1) == power_sum(4, 3).scale(16)


def test_sum_of_variables_annihilates_differences():
    F = DualPolynomial.linear([1, -1, 0]) ** 3
    assert contract(sum_of_variables(3), F).is_zero()


def test_primitive_cube_root():
    xi = QuadExtScalar.primitive_cube_root()
    assert xi * xi + xi + 1 == 0
    assert xi ** 3 == 1
    assert not xi.is_rational
    assert xi.conjugate() == xi * xi


def test_sqrt_in_extension():
    assert sqrt_in_extension(Fraction(9, 4)) == Fraction(3, 2)
    t = sqrt_in_extension(-3)
    assert t * t == -3
    assert (1 / t) * t == 1


def test_extension_scalars_serialize():
    t = sqrt_in_extension(2)
    data = format_scalar(1 + t)
    assert data == {"a": "1/1", "b": "1/1", "minpoly": ["0/1", "-2/1"]}
    assert parse_scalar(data) == 1 + t
    assert parse_scalar("5/3") == Fraction(5, 3)


def test_polynomial_json_round_trip():
    F = symmetric_cubic(3, 1, -2, "1/3")
    assert DualPolynomial.from_json(3, F.to_json()) == F


def test_quadratic_form_matrix():
    Q = x(2, 0) ** 2 + (x(2, 0) * x(2, 1)).scale(4)
    assert quadratic_form_matrix(Q) == [[1, 2], [2, 0]]


def test_leading_key_picks_the_grlex_largest_exponent():
    exps = [(0, 1, 2), (1, 1, 1), (3, 0, 0), (0, 0, 3), (2, 0, 0)]
    assert min(exps, key=leading_key) == (3, 0, 0) == max(exps, key=grlex_key)
    assert sorted(exps, key=leading_key) == sorted(exps, key=grlex_key, reverse=True)
