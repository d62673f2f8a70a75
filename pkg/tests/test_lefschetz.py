import random
from fractions import Fraction

import pytest

from lefschetz import (
    has_slp,
    has_wlp,
    lefschetz_report,
    mq_det_check,
    mult_rank,
    sl_candidates,
    sl_candidates_report,
    sl_element_for_cubic,
)
from poly_core import (
    ApolarityError,
    DualPolynomial,
    PrimalPolynomial,
    complete_symmetric,
    sum_of_variables,
)


def x(n, i):
    return PrimalPolynomial.variable(n, i)


def test_report_for_h34():
    report = lefschetz_report(complete_symmetric(3, 4), sum_of_variables(3))
    assert report.slp and report.wlp
    assert report.hilbert == (1, 3, 6, 3, 1)
    assert report.rank(0, 4) == 1
    assert report.rank(1, 3) == 3
    assert report.to_json()["witness"] == ["1/1", "1/1", "1/1"]


@pytest.mark.parametrize("n, e", [(n, e) for n in range(1, 5) for e in range(1, 6)])
def test_complete_symmetric_has_slp(n, e):
    assert has_slp(complete_symmetric(n, e), sum_of_variables(n))


def test_wrong_witness_fails():
    F = DualPolynomial.variable(2, 0) ** 3
    assert has_slp(F, x(2, 0))
    assert not has_slp(F, x(2, 1))
    assert not has_wlp(F, x(2, 1))
    assert mult_rank(F, x(2, 1), 0, 3) == 0


def test_witness_must_be_linear():
    with pytest.raises(ApolarityError):
        has_slp(complete_symmetric(2, 2), x(2, 0) * x(2, 1))


def test_sl_candidates_order():
    names = [name for name, _ in sl_candidates(4)]
    assert names == ["sum", "x1", "n*x1-sum"]


@pytest.mark.parametrize("a", [(1, 0, 0), (2, -3, 1), (1, 1, 0), (1, 1, -2), (4, 3, 1), (1, 1, 1)])
@pytest.mark.parametrize("n", [3, 4])
def test_cubic_has_an_sl_element(n, a):
    assert sl_element_for_cubic(n, a) is not None


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_no_candidate_is_sl_on_l1_at_minus_n_n_minus_3(n, caplog):
    a = (-n * (n - 3), -3, 1)
    with caplog.at_level("WARNING", logger="lefschetz"):
        assert sl_element_for_cubic(n, a) is None
    assert "No SL element" in caplog.text
    assert [c["slp"] for c in sl_candidates_report(n, a)] == [False, False, False]


def test_x1_is_sl_elsewhere_on_l1():
    assert sl_element_for_cubic(4, (0, -3, 1)) == dict(sl_candidates(4))["x1"]
    candidates = {c["candidate"]: c["slp"] for c in sl_candidates_report(4, (0, -3, 1))}
    assert candidates == {"sum": False, "x1": True, "n*x1-sum": False}


def test_sum_fails_on_l3_and_another_candidate_works():
    candidates = {c["candidate"]: c["slp"] for c in sl_candidates_report(3, (1, 1, -2))}
    assert not candidates["sum"]
    assert candidates["x1"] or candidates["n*x1-sum"]


def test_mq_determinant_examples():
    assert mq_det_check(3, (1, 1, 1)).equal
    assert mq_det_check(4, (2, -3, 1)).determinant == 0


@pytest.mark.parametrize("seed", range(5))
def test_mq_determinant_random(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    a = [Fraction(rng.randint(-7, 7), rng.randint(1, 4)) for _ in range(3)]
    result = mq_det_check(n, a)
    assert result.q_matches
    assert result.equal


@pytest.mark.slow
@pytest.mark.parametrize("n", range(3, 9))
def test_mq_determinant_battery(n):
    rng = random.Random(100 + n)
    for _ in range(20):
        a = [Fraction(rng.randint(-7, 7), rng.randint(1, 4)) for _ in range(3)]
        result = mq_det_check(n, a)
        assert result.q_matches
        assert result.determinant == result.closed_form, result.to_json()


def test_mq_needs_two_variables():
    with pytest.raises(ApolarityError):
        mq_det_check(1, (1, 0, 0))
