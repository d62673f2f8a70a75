import random
from fractions import Fraction

import pytest
import sympy

from generic_rank import (
    JacobianCheck,
    OrbitMap,
    alexander_hirschowitz_rank,
    brute_force_coordinates,
    generic_rank_report,
    jacobian_closed_form,
    jacobian_det_check,
    orbit_map_coordinates,
    solve_h4_preimage,
    symbolic_jacobian,
    symmetric_dimension,
)
from poly_core import ApolarityError


def random_params(rng, count):
    return [Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 4)) for _ in range(count)]


def test_symmetric_dimension():
    assert symmetric_dimension(3) == (3, 2)
    assert symmetric_dimension(4) == (5, 4)
    assert symmetric_dimension(5) == (7, 6)
    with pytest.raises(ApolarityError):
        symmetric_dimension(0)


@pytest.mark.parametrize(
    "n, d, rank",
    [(3, 2, 3), (3, 3, 4), (3, 4, 6), (4, 4, 10), (5, 4, 15), (5, 3, 8), (14, 4, 170), (4, 3, 5)],
)
def test_alexander_hirschowitz(n, d, rank):
    assert alexander_hirschowitz_rank(n, d) == rank


def test_report_compares_h_decomposition_with_generic_rank():
    report = generic_rank_report(4, 14)
    assert report["h_decomposition_terms"] == 120
    assert report["generic_rank"] == 170
    assert report["orbit_terms"] == 1 + 14 + 91
    assert report["orbit_parameters"] == 5
    assert report["orbit_dominant_possible"]


def test_orbit_map_shape():
    orbit = OrbitMap(5, 6)
    assert orbit.parameter_count == 7
    assert orbit.parameter_names == ("c0", "a1", "a2", "a3", "a4", "a5", "a6")
    assert orbit.term_count == 1 + 6 + 15 + 6
    with pytest.raises(ApolarityError):
        OrbitMap(6, 3)
    with pytest.raises(ApolarityError):
        orbit.coordinates([1, 2, 3])


def test_cubic_orbit_coordinates():
    coordinates = orbit_map_coordinates(3, 3, [0, 0, 1])
    assert coordinates == {(3,): 1, (2, 1): 0, (1, 1, 1): 0}


def test_quartic_pair_block_coordinates():
    n = 6
    coordinates = orbit_map_coordinates(4, n, [0, 0, 0, 0, 1])
    assert coordinates[(4,)] == n - 8
    assert coordinates[(3, 1)] == 4
    assert coordinates[(2, 2)] == 3
    assert coordinates[(2, 1, 1)] == 0
    assert coordinates[(1, 1, 1, 1)] == 0


@pytest.mark.parametrize("d, n", [(3, 3), (3, 5), (4, 4), (4, 6), (5, 5)])
def test_orbit_coordinates_match_expansion(d, n):
    rng = random.Random(d * 100 + n)
    params = random_params(rng, OrbitMap(d, n).parameter_count)
    assert orbit_map_coordinates(d, n, params) == brute_force_coordinates(d, n, params)


def test_orbit_coordinates_accept_symbols():
    symbols = sympy.symbols("c0 a1 a2")
    coordinates = orbit_map_coordinates(3, 4, symbols)
    assert sympy.expand(coordinates[(3,)] - symbols[2] ** 3) == 0


def test_cubic_jacobian_at_ones():
    check = jacobian_det_check(3, 3, (1, 1, 1))
    assert check.determinant == -27
    assert check.closed_form == 27
    assert check.orientation == -1
    assert check.expected == -27
    assert check.sign == -1
    assert check.equal


def test_jacobian_flipped_sign_is_a_mismatch():
    check = JacobianCheck(3, 3, (Fraction(1),) * 3, Fraction(27), Fraction(27))
    assert not check.equal
    assert check.to_json()["orientation"] == -1
    assert JacobianCheck(4, 5, (Fraction(1),) * 5, Fraction(-6), Fraction(6)).equal is False


@pytest.mark.parametrize("d", [3, 4, 5])
@pytest.mark.parametrize("n", [3, 6])
def test_jacobian_matches_closed_form(d, n):
    rng = random.Random(7 * d + n)
    for _ in range(3):
        params = random_params(rng, OrbitMap(d, n).parameter_count)
        check = jacobian_det_check(d, n, params)
        assert check.equal, check.to_json()
        assert check.determinant == (-1 if d == 3 else 1) * check.closed_form


@pytest.mark.slow
@pytest.mark.parametrize("d, n", [(d, n) for d in (3, 4, 5) for n in range(d, 11)])
def test_jacobian_battery(d, n):
    rng = random.Random(1000 * d + n)
    for _ in range(20):
        params = random_params(rng, OrbitMap(d, n).parameter_count)
        check = jacobian_det_check(d, n, params)
        assert check.determinant == check.expected, check.to_json()


def test_jacobian_rows_are_parameters():
    symbols, matrix = symbolic_jacobian(4, 5)
    assert matrix.shape == (5, 5)
    assert len(symbols) == 5


def test_jacobian_vanishes_with_a_zero_parameter():
    params = (1, 1, 0, 1, 1)
    assert jacobian_closed_form(4, 5, params) == 0
    assert jacobian_det_check(4, 5, params).equal


def test_h4_preimage_at_13_recovers_the_exact_identity():
    report = solve_h4_preimage(13)
    assert report.solved and report.verified
    exact = [
        branch for branch in report.branches if abs(complex(branch.alpha3_seed)) < 1e-20
    ]
    assert exact
    c0, a1, a2, a3, a4 = (complex(v) for v in exact[0].params)
    assert c0 == pytest.approx(-16)
    assert a1 == pytest.approx(1)
    assert a2 == pytest.approx(1)
    assert abs(a3) < 1e-12
    assert a4 == 1


@pytest.mark.parametrize("n", [4, 8, 12])
def test_h4_preimage_solves_below_14(n):
    report = solve_h4_preimage(n)
    assert report.solved
    assert report.best_residual < 1e-9


@pytest.mark.parametrize("n", [5, 6])
def test_h4_preimage_polishes_to_working_precision(n):
    report = solve_h4_preimage(n)
    assert report.solved and report.verified
    assert report.best_residual < 1e-25


def test_h4_preimage_degenerates_at_14():
    report = solve_h4_preimage(14)
    assert report.degenerate
    assert report.verified
    assert not report.solved


def test_h4_preimage_needs_three_variables():
    with pytest.raises(ApolarityError):
        solve_h4_preimage(2)
