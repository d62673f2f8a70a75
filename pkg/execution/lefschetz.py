#!/usr/bin/env python3
"""
Lefschetz properties of apolar algebras
Ranks of ×l^k between graded pieces of S/ann(F), realized as catalecticants of
l^k ∘ F, WLP/SLP verdicts and the M_q determinant analysis for symmetric cubics.
"""

import logging
from dataclasses import dataclass, field

from apolarity import catalecticant, hilbert_function
from exact_linalg import bareiss_determinant
from poly_core import (
    ApolarityError,
    DualPolynomial,
    NotHomogeneousError,
    PrimalPolynomial,
    contract,
    format_rational,
    parse_rational,
    power_sum,
    quadratic_form_matrix,
    sum_of_variables,
    symmetric_cubic,
)

logger = logging.getLogger(__name__)


def _check_linear(ell):
    if not isinstance(ell, PrimalPolynomial) or not ell.is_linear_form():
        raise NotHomogeneousError("The Lefschetz candidate must be a nonzero linear form in S")


def mult_rank(F, ell, i, j):
    """Rank of ×l^{j-i}: A_i -> A_j, as the rank of the catalecticant of l^{j-i} ∘ F in degree i"""
    _check_linear(ell)
    e = F.homogeneous_degree()
    if not 0 <= i <= j <= e:
        raise ApolarityError(f"Need 0 <= i <= j <= {e}, got i={i}, j={j}")
    reduced = contract(ell ** (j - i), F)
    if reduced.is_zero():
        return 0
    return catalecticant(reduced, i).rank


def has_slp(F, ell, hilbert=None):
    hilbert = hilbert or hilbert_function(F)
    e = hilbert.socle_degree
    return all(mult_rank(F, ell, i, e - i) == hilbert[i] for i in range(e // 2 + 1))


def has_wlp(F, ell, hilbert=None):
    hilbert = hilbert or hilbert_function(F)
    e = hilbert.socle_degree
    return all(
        mult_rank(F, ell, i, i + 1) == min(hilbert[i], hilbert[i + 1]) for i in range(e)
    )


@dataclass(frozen=True)
class LefschetzReport:
    form: DualPolynomial = field(repr=False)
    ell: PrimalPolynomial
    hilbert: tuple
    ranks: dict = field(repr=False)
    wlp: bool
    slp: bool

    def rank(self, i, j):
        return self.ranks[(i, j)]

    def to_json(self):
        return {
            "n": self.form.n,
            "witness": [format_rational(c) for c in self.ell.linear_coefficients()],
            "hf": list(self.hilbert),
            "ranks": [{"i": i, "j": j, "rank": r} for (i, j), r in sorted(self.ranks.items())],
            "wlp": self.wlp,
            "slp": self.slp,
        }


def lefschetz_report(F, ell):
    _check_linear(ell)
    hilbert = hilbert_function(F)
    e = hilbert.socle_degree
    ranks = {(i, j): mult_rank(F, ell, i, j) for i in range(e + 1) for j in range(i, e + 1)}
    slp = all(ranks[(i, e - i)] == hilbert[i] for i in range(e // 2 + 1))
    wlp = all(ranks[(i, i + 1)] == min(hilbert[i], hilbert[i + 1]) for i in range(e))
    logger.debug(f"📊 Lefschetz ranks for hf {tuple(hilbert)}: wlp={wlp} slp={slp}")
    return LefschetzReport(F, ell, tuple(hilbert), ranks, wlp, slp)


def sl_candidates(n):
    """Sum of x_i, then x1, then n·x1 - sum of x_i"""
    ell = sum_of_variables(n)
    x1 = PrimalPolynomial.variable(n, 0)
    return [("sum", ell), ("x1", x1), ("n*x1-sum", x1.scale(n) - ell)]


def _cubic(n, a):
    if n < 3:
        raise ApolarityError(f"Symmetric cubic analysis needs n >= 3, got {n}")
    return symmetric_cubic(n, *a)


def sl_candidates_report(n, a):
    F = _cubic(n, a)
    hilbert = hilbert_function(F)
    return [
        {"candidate": name, "slp": has_slp(F, ell, hilbert)} for name, ell in sl_candidates(n)
    ]


def sl_element_for_cubic(n, a):
    """First of the three candidate forms with the SLP, or None when all fail"""
    F = _cubic(n, a)
    hilbert = hilbert_function(F)
    for name, ell in sl_candidates(n):
        if has_slp(F, ell, hilbert):
            logger.debug(f"🔍 SL element for {tuple(a)}, n={n}: {name}")
            return ell
    logger.warning(f"❌ No SL element among the three candidates for {tuple(a)}, n={n}")
    return None


@dataclass(frozen=True)
class MqDeterminant:
    n: int
    point: tuple
    determinant: object
    closed_form: object
    q_matches: bool

    @property
    def equal(self):
        return self.q_matches and self.determinant == self.closed_form

    def to_json(self):
        return {
            "n": self.n,
            "point": [format_rational(x) for x in self.point],
            "determinant": format_rational(self.determinant),
            "closed_form": format_rational(self.closed_form),
            "q_matches": self.q_matches,
            "equal": self.equal,
        }


def mq_det_check(n, a):
    """det M_q for q = l ∘ F against 3·n^{2n}·(a1+3a2)^{n-1}·(a0+a1+a2)"""
    if n < 2:
        raise ApolarityError(f"M_q needs n >= 2, got {n}")
    a0, a1, a2 = (parse_rational(x) for x in a)
    F = symmetric_cubic(n, a0, a1, a2)
    q = contract(sum_of_variables(n), F)
    p1 = power_sum(n, 1)
    displayed = (p1 * p1).scale((3 * a0 + 2 * a1) * n) + power_sum(n, 2).scale((a1 + 3 * a2) * n * n)
    determinant = bareiss_determinant(quadratic_form_matrix(q))
    closed_form = 3 * n ** (2 * n) * (a1 + 3 * a2) ** (n - 1) * (a0 + a1 + a2)
    result = MqDeterminant(n, (a0, a1, a2), determinant, closed_form, q == displayed)
    if not result.equal:
        logger.warning(f"❌ det M_q mismatch at {(a0, a1, a2)}, n={n}: {determinant} vs {closed_form}")
    return result
