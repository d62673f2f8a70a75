from fractions import Fraction

import pytest

from cubic_atlas import (
    P,
    Q,
    OffCurveError,
    PlanePoint,
    UnsupportedCaseError,
    atlas_grid,
    betti_case,
    cactus_certificate,
    chart_coordinates,
    classify,
    curve_eval,
    curve_line_contacts,
    gamma,
    gamma_inverse,
    memberships,
    plot_atlas_svg,
    predicted_betti,
    quadric_diagonalize,
    rs_lower_bound,
    scheme_betti,
    waring_certificate,
)
from poly_core import ApolarityError, DualPolynomial, power_sum

# One representative point per stratum
ON_CURVE = PlanePoint.of(4, 3, 1)  # gamma(1, 1)
ON_L1 = PlanePoint.of(0, -3, 1)
ON_L2 = PlanePoint.of(1, 1, 0)
ON_L3 = PlanePoint.of(1, 1, -2)
GENERIC = PlanePoint.of(1, 1, 1)


def test_plane_point_normalization():
    assert PlanePoint.of("1/2", -1, 0) == PlanePoint.of(-1, 2, 0) == PlanePoint.parse("1, -2, 0")
    assert str(PlanePoint.of(-2, 4, 6)) == "(1:-2:-3)"
    with pytest.raises(ApolarityError):
        PlanePoint.of(0, 0, 0)
    with pytest.raises(ApolarityError):
        PlanePoint.parse("1,2")


def test_special_points():
    assert memberships(P)["isP"] and memberships(P)["onC"] and memberships(P)["onL2"]
    flags = memberships(Q)
    assert flags["isQ"] and flags["onC"] and flags["onL1"] and flags["onL3"]
    assert not flags["onL2"]


def test_gamma_parameterizes_the_curve():
    for alpha, beta in [(1, 1), (1, 2), (-1, 3), (2, -5)]:
        point = gamma(alpha, beta)
        assert curve_eval(point) == 0
        assert gamma(*gamma_inverse(point)) == point
    assert gamma(0, 1) == P
    assert gamma(1, -1) == Q


def test_gamma_inverse_off_curve():
    with pytest.raises(OffCurveError):
        gamma_inverse(GENERIC)


def test_curve_line_contacts():
    contacts = curve_line_contacts()
    assert contacts["l2"] == [{"point": P, "multiplicity": 3}]
    assert contacts["l3"] == [{"point": Q, "multiplicity": 3}]
    assert {c["point"]: c["multiplicity"] for c in contacts["l1"]} == {P: 2, Q: 1}


@pytest.mark.parametrize(
    "point, n, hf, wr, cr",
    [
        (P, 3, (1, 1, 1, 1), 1, 1),
        (P, 5, (1, 1, 1, 1), 1, 1),
        (Q, 3, (1, 2, 2, 1), 2, 2),
        (Q, 4, (1, 3, 3, 1), 4, 4),
        (ON_CURVE, 4, (1, 4, 4, 1), 4, 4),
        (ON_L1, 4, (1, 4, 4, 1), 5, 5),
        (ON_L2, 4, (1, 4, 4, 1), 6, 5),
        (ON_L3, 3, (1, 3, 3, 1), 4, 4),
        (GENERIC, 5, (1, 5, 5, 1), 6, 6),
    ],
)
def test_classify(point, n, hf, wr, cr):
    report = classify(n, point)
    assert tuple(report.hilbert) == hf
    assert report.hilbert_matches
    assert report.waring_rank == wr
    assert report.cactus_rank == cr
    assert report.verified


def test_classify_is_falsified_at_the_l1_point_without_sl_element(caplog):
    with caplog.at_level("WARNING", logger="lefschetz"):
        report = classify(3, ON_L1)
    assert tuple(report.hilbert) == (1, 3, 3, 1)
    assert report.hilbert_matches
    assert report.waring_rank == report.cactus_rank == 3
    assert report.sl_element is None
    assert report.verified is False
    assert report.to_json()["verified"] is False
    assert "No SL element" in caplog.text


def test_classify_keeps_an_sl_element_on_l1_away_from_the_exception():
    report = classify(3, PlanePoint.of(1, -3, 1))
    assert report.sl_element == "x1"
    assert report.verified


def test_q_discrepancy_fires_only_at_q_for_n_at_least_4():
    assert classify(4, Q).discrepancy_flags
    assert not classify(3, Q).discrepancy_flags
    assert not classify(4, ON_CURVE).discrepancy_flags


def test_classify_needs_three_variables():
    with pytest.raises(ApolarityError):
        classify(2, GENERIC)


@pytest.mark.parametrize(
    "point, n, label, terms",
    [
        (P, 4, "cusp", 1),
        (Q, 3, "cyclotomic", 2),
        (ON_L1, 3, "cyclotomic", 3),
        (ON_CURVE, 3, "curve", 3),
        (ON_CURVE, 5, "curve", 5),
        (Q, 4, "curve", 4),
        (ON_L1, 4, "cusp-line", 5),
        (ON_L2, 3, "tangent-line", 4),
        (ON_L2, 5, "tangent-line", 8),
        (PlanePoint.of(1, -1, 0), 4, "tangent-line", 6),
        (GENERIC, 4, "cusp-line", 5),
        (ON_L3, 6, "cusp-line", 7),
    ],
)
def test_waring_certificates_are_exact(point, n, label, terms):
    certificate = waring_certificate(n, tuple(point))
    assert certificate.label == label
    assert certificate.exact
    assert certificate.term_count == terms == classify(n, point).waring_rank


def test_cyclotomic_certificate_uses_cube_roots_of_unity():
    certificate = waring_certificate(3, tuple(ON_L1))
    assert not all(term.linear.is_rational() for term in certificate.terms)


def test_quadric_diagonalize_reconstructs():
    n = 4
    p1 = power_sum(n, 1)
    quadric = power_sum(n, 2).scale(n) - p1 * p1
    total = DualPolynomial.zero(n)
    for c, L in quadric_diagonalize(quadric):
        total = total + (L * L).scale(c)
    assert total == quadric


@pytest.mark.parametrize("n", [3, 4, 5])
def test_cactus_certificate_on_l2(n):
    certificate = cactus_certificate(n, tuple(ON_L2))
    assert certificate.verified
    assert certificate.scheme_length == n + 1
    assert certificate.rs_bound <= n + 1


def test_cactus_certificate_rejects_points_off_l2():
    with pytest.raises(UnsupportedCaseError):
        cactus_certificate(4, tuple(GENERIC))
    with pytest.raises(UnsupportedCaseError):
        cactus_certificate(4, tuple(P))


@pytest.mark.parametrize("point", [P, Q, ON_CURVE, ON_L1, ON_L2, GENERIC])
def test_rs_bound_below_cactus_rank(point):
    report = classify(4, point)
    assert rs_lower_bound(point.form(4)) <= report.cactus_rank <= report.waring_rank


def test_betti_cases():
    assert betti_case(3, memberships(P)) == "i"
    assert betti_case(3, memberships(Q)) == "ii"
    assert betti_case(4, memberships(Q)) == "iii"
    assert betti_case(3, memberships(ON_L1)) == "iv"
    assert betti_case(4, memberships(ON_L1)) == "v"
    assert betti_case(4, memberships(ON_CURVE)) == "vi"
    assert betti_case(4, memberships(ON_L2)) == "vii"
    assert betti_case(4, memberships(GENERIC)) == "viii"


def test_scheme_betti_case_availability():
    with pytest.raises(UnsupportedCaseError):
        scheme_betti(4, "ii")
    with pytest.raises(UnsupportedCaseError):
        scheme_betti(3, "v")
    with pytest.raises(UnsupportedCaseError):
        scheme_betti(3, "ix")


def test_predicted_betti_for_the_cusp():
    table = predicted_betti(3, "i")
    assert table.entries == {(0, 0): 1, (1, 1): 2, (1, 4): 1, (2, 2): 1, (2, 5): 2, (3, 6): 1}


def test_generic_table_is_gorenstein_symmetric():
    for n in (3, 4, 5, 6):
        assert predicted_betti(n, "viii").is_gorenstein_symmetric(3)


def test_chart_coordinates():
    assert chart_coordinates(Q) == (Fraction(-3, 2), Fraction(1, 2))
    assert chart_coordinates(PlanePoint.of(0, 1, 0)) is None


def test_atlas_grid_covers_every_stratum():
    grid = atlas_grid()
    assert len(grid) >= 200
    assert len(set(grid)) == len(grid)
    flags = [memberships(point) for point in grid]
    for key in ("onC", "isP", "isQ", "onL1", "onL2", "onL3"):
        assert any(f[key] for f in flags)


def test_atlas_svg_is_deterministic():
    first = plot_atlas_svg(4)
    assert first.startswith("<?xml")
    assert "<svg" in first
    assert first == plot_atlas_svg(4)


def test_atlas_svg_rejects_empty_viewport():
    with pytest.raises(ApolarityError):
        plot_atlas_svg(3, (1, 1, 0, 1))


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_atlas_sweep(n):
    grid = atlas_grid()
    assert len(grid) >= 200
    falsified = set()
    for point in grid:
        report = classify(n, point)
        assert report.hilbert_matches, point
        certificate = waring_certificate(n, tuple(point))
        assert certificate.exact, point
        assert certificate.term_count == report.waring_rank
        assert rs_lower_bound(point.form(n)) <= report.cactus_rank <= report.waring_rank
        assert bool(report.discrepancy_flags) == (point == Q and n >= 4)
        if not report.verified:
            assert report.sl_element is None
            falsified.add(point)
    assert falsified == {PlanePoint.of(-n * (n - 3), -3, 1)} & set(grid)
    if n in (3, 4):
        assert falsified
