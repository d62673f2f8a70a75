#!/usr/bin/env python3
"""
Structure of complete symmetric forms
The forms F_a = prod (X_i - X_n)^{a_i}, their primal partners f_a, the spaces M_d,
the pairing on l^i·M_{d-i}, the annihilator of h_{n,e}, and exact power-sum
decompositions of h_{n,e}.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from apolarity import ann_graded_basis, contains_in_annihilator
from exact_linalg import EchelonBasis, bareiss_rank, is_zero_matrix
from poly_core import (
    ApolarityError,
    DualPolynomial,
    PrimalPolynomial,
    add_exponents,
    binomial,
    complete_symmetric,
    contract,
    expand_linear_power,
    exponent_factorial,
    format_scalar,
    leading_key,
    monomials,
    parse_scalar,
    phi,
    phi_inverse,
    sum_of_variables,
    unit_vector,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Power-sum certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PowerSumTerm:
    coef: object
    linear: DualPolynomial
    exponent: int

    def expand(self):
        return expand_linear_power(self.linear, self.exponent).scale(self.coef)

    def to_json(self):
        return {
            "coef": format_scalar(self.coef),
            "linear": [format_scalar(c) for c in self.linear.linear_coefficients()],
            "exp": self.exponent,
        }


@dataclass(frozen=True)
class PowerSumCertificate:
    """Sum of c_i·L_i^e checked against a target form"""

    EXACT = "exact-equal"
    RESIDUAL = "residual"

    target: DualPolynomial = field(repr=False)
    terms: tuple = field(repr=False)
    verdict: str
    residual: object
    label: str = ""

    @classmethod
    def certify(cls, target, terms, label=""):
        terms = tuple(terms)
        accumulated = {}
        for term in terms:
            for exp, coef in term.expand().items():
                accumulated[exp] = accumulated[exp] + coef if exp in accumulated else coef
        reconstruction = DualPolynomial(target.n, accumulated)
        difference = reconstruction - target
        if difference.is_zero():
            verdict, residual = cls.EXACT, Fraction(0)
        else:
            verdict, residual = cls.RESIDUAL, difference.max_abs_coefficient()
            logger.warning(f"❌ {label or 'power-sum certificate'}: residual {residual}")
        return cls(target, terms, verdict, residual, label)

    @property
    def exact(self):
        return self.verdict == self.EXACT

    @property
    def term_count(self):
        return len(self.terms)

    def support_points(self):
        """Points of P^{n-1} given by the linear forms"""
        return [term.linear.linear_coefficients() for term in self.terms]

    def without_term(self, index):
        kept = self.terms[:index] + self.terms[index + 1:]
        return PowerSumCertificate.certify(self.target, kept, self.label)

    @classmethod
    def from_json(cls, data):
        """Rebuild and re-certify a serialized certificate"""
        target = DualPolynomial.from_json(data["n"], data["target"])
        terms = [
            PowerSumTerm(
                parse_scalar(t["coef"]),
                DualPolynomial.linear([parse_scalar(c) for c in t["linear"]]),
                t["exp"],
            )
            for t in data["terms"]
        ]
        return cls.certify(target, terms, data.get("label", ""))

    def to_json(self):
        residual = self.residual
        if isinstance(residual, Fraction):
            residual = format_scalar(residual)
        else:
            residual = float(residual)
        return {
            "label": self.label,
            "n": self.target.n,
            "target": self.target.to_json(),
            "terms": [t.to_json() for t in self.terms],
            "term_count": self.term_count,
            "verdict": self.verdict,
            "residual": residual,
        }


# ---------------------------------------------------------------------------
# F_a, f_a and M_d
# ---------------------------------------------------------------------------

def _difference_form(n, i):
    """X_i - X_n"""
    coefficients = [0] * n
    coefficients[i] = 1
    coefficients[n - 1] = -1
    return DualPolynomial.linear(coefficients)


def build_Fa(a):
    a = tuple(a)
    n = len(a) + 1
    if n < 2:
        raise ApolarityError("F_a needs at least two variables")
    result = DualPolynomial.constant(n, 1)
    for i, power in enumerate(a):
        if power:
            result = result * expand_linear_power(_difference_form(n, i), power)
    return result


def build_fa(a):
    return phi_inverse(build_Fa(a))


def fa_pairing(a, b):
    """(f_a ∘ F_b, prod C(a_i+b_i, a_i))"""
    value = contract(build_fa(a), build_Fa(b)).coefficient((0,) * (len(a) + 1))
    expected = 1
    for ai, bi in zip(a, b):
        expected *= binomial(ai + bi, ai)
    return value, expected


@dataclass(frozen=True)
class MSpaceBasis:
    n: int
    degree: int
    exponents: tuple
    basis: tuple = field(repr=False)

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def expected_dimension(self):
        return binomial(self.n - 2 + self.degree, self.n - 2)


def m_space(n, d):
    """M_d = Phi^{-1}(span of F_a, |a| = d)"""
    if n < 2:
        raise ApolarityError("M_d needs at least two variables")
    exponents = monomials(n - 1, d)
    return MSpaceBasis(n, d, exponents, tuple(build_fa(a) for a in exponents))


@dataclass(frozen=True)
class FaContraction:
    a: tuple
    m: int
    value: DualPolynomial
    expected: DualPolynomial

    @property
    def matches(self):
        return self.value == self.expected


def g_form(m, a):
    """G_{m,a} = sum over |i| = m of prod_{k<n} C(a_k+i_k, i_k)·C(|a|+i_n, i_n)·X^i"""
    a = tuple(a)
    n = len(a) + 1
    total = sum(a)
    terms = {}
    for exp in monomials(n, m):
        coef = binomial(total + exp[-1], exp[-1])
        for ak, ik in zip(a, exp[:-1]):
            coef *= binomial(ak + ik, ik)
        terms[exp] = coef
    return DualPolynomial(n, terms)


def fa_contract_h(a, m):
    """f_a ∘ h_{n,2d+m} with the value predicted by the graded expansion of H"""
    a = tuple(a)
    n = len(a) + 1
    d = sum(a)
    if 2 * d + m < 0:
        raise ApolarityError(f"h of negative degree {2 * d + m}")
    value = contract(build_fa(a), complete_symmetric(n, 2 * d + m))
    if m < 0:
        expected = DualPolynomial.zero(n)
    elif m == 0:
        expected = build_Fa(a)
    else:
        expected = build_Fa(a) * g_form(m, a)
    return FaContraction(a, m, value, expected)


# ---------------------------------------------------------------------------
# Pairing on l^i·M_{d-i}
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairingGram:
    n: int
    d: int
    i: int
    j: int
    matrix: tuple = field(repr=False)

    @property
    def rank(self):
        return bareiss_rank(self.matrix)

    def is_zero(self):
        return is_zero_matrix(self.matrix)

    def is_nonsingular(self):
        size = len(self.matrix)
        return size == len(self.matrix[0]) and self.rank == size if size else True


def _pair_with(poly, G):
    """(poly ∘ G) for forms of equal degree, without building the contraction"""
    total = Fraction(0)
    for exp, coef in poly.items():
        g = G.coefficient(exp)
        if g:
            total += coef * g * exponent_factorial(exp)
    return total


def pairing_gram(n, d, i, j):
    """Gram matrix of (f·g) ∘ h_{n,2d} on l^i·M_{d-i} × l^j·M_{d-j}"""
    if not (0 <= i <= d and 0 <= j <= d):
        raise ApolarityError(f"Need 0 <= i, j <= d, got i={i}, j={j}, d={d}")
    ell = sum_of_variables(n)
    # (l^i f)(l^j g) ∘ h = (f g) ∘ (l^{i+j} ∘ h)
    reduced_h = contract(ell ** (i + j), complete_symmetric(n, 2 * d))
    rows = m_space(n, d - i).basis
    cols = m_space(n, d - j).basis
    matrix = tuple(tuple(_pair_with(f * g, reduced_h) for g in cols) for f in rows)
    return PairingGram(n, d, i, j, matrix)


# ---------------------------------------------------------------------------
# Annihilator of h_{n,e}
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AnnStructureReport:
    n: int
    e: int
    expected_generators: int
    generator_count: int
    direct_sum_rank: int
    ann_dimension: int
    generators_annihilate: bool
    degree_agreement: tuple

    @property
    def verified(self):
        return (
            self.generators_annihilate
            and self.generator_count == self.expected_generators
            and self.direct_sum_rank == self.expected_generators
            and self.ann_dimension == self.expected_generators
            and all(ideal == ann for _, ideal, ann in self.degree_agreement)
        )

    def to_json(self):
        return {
            "n": self.n,
            "e": self.e,
            "parity": "even" if self.e % 2 == 0 else "odd",
            "expected_generators": self.expected_generators,
            "generator_count": self.generator_count,
            "direct_sum_rank": self.direct_sum_rank,
            "ann_dimension": self.ann_dimension,
            "generators_annihilate": self.generators_annihilate,
            "degree_agreement": [
                {"degree": t, "ideal": ideal, "ann": ann} for t, ideal, ann in self.degree_agreement
            ],
            "verified": self.verified,
        }


def _ideal_agreement(generators, form, top):
    """dim I_t and dim [ann form]_t for t <= top, with I generated by the given forms"""
    n = form.n
    rows = []
    previous = EchelonBasis(key=leading_key)
    for t in range(0, top + 1):
        span = EchelonBasis(key=leading_key)
        ann_dim = ann_graded_basis(form, t).dimension
        shifted = (
            {add_exponents(m, unit_vector(n, s)): c for m, c in row.items()}
            for row in previous.rows().values()
            for s in range(n)
        )
        span.extend(shifted, stop_at=ann_dim)
        span.extend((dict(g.items()) for g in generators if g.degree == t), stop_at=ann_dim)
        rows.append((t, span.rank, ann_dim))
        previous = span
    return tuple(rows)


def ann_structure_check(n, e):
    """
    Even e = 2d: [ann h_{2d}]_{d+1} = M_{d+1} ⊕ l·M_d.
    Odd e = 2d+1: [ann h_{2d+1}]_{d+1} = M_{d+1}, and M_{d+1} ∪ l²·M_d generates ann.
    Both parities also compare the generated ideal with ann degree by degree through e+1.
    """
    if n < 2 or e < 2:
        raise ApolarityError(f"Need n >= 2 and e >= 2, got n={n}, e={e}")
    d = e // 2
    h = complete_symmetric(n, e)
    ell = sum_of_variables(n)
    top_space = m_space(n, d + 1).basis
    if e % 2 == 0:
        shifted = tuple(ell * f for f in m_space(n, d).basis)
        degree_generators = top_space + shifted
        ideal_generators = degree_generators
        expected = binomial(n + d - 1, n - 2) + binomial(n + d - 2, n - 2)
    else:
        degree_generators = top_space
        ideal_generators = top_space + tuple(ell * ell * f for f in m_space(n, d).basis)
        expected = binomial(n + d - 1, n - 2)

    span = EchelonBasis(key=leading_key)
    span.extend(dict(g.items()) for g in degree_generators)
    report = AnnStructureReport(
        n=n,
        e=e,
        expected_generators=expected,
        generator_count=len(degree_generators),
        direct_sum_rank=span.rank,
        ann_dimension=ann_graded_basis(h, d + 1).dimension,
        generators_annihilate=contains_in_annihilator(ideal_generators, h),
        degree_agreement=_ideal_agreement(ideal_generators, h, e + 1),
    )
    if report.verified:
        logger.info(f"✅ ann(h_{{{n},{e}}}) structure verified")
    else:
        logger.warning(f"❌ ann(h_{{{n},{e}}}) structure check failed")
    return report


# ---------------------------------------------------------------------------
# Power-sum decompositions of h_{n,e}
# ---------------------------------------------------------------------------

def _orbit_forms(n, k):
    """h1 + 2(X_{i1} + … + X_{ik}) over multisets i1 <= … <= ik"""
    for multiset in combinations_with_replacement(range(n), k):
        coefficients = [1] * n
        for i in multiset:
            coefficients[i] += 2
        yield DualPolynomial.linear(coefficients)


def orbit_power_sum(n, k, power):
    """S_{n,k,power}: sum of (h1 + 2·sum X_{i_j})^power over multisets of size k"""
    total = DualPolynomial.zero(n)
    for L in _orbit_forms(n, k):
        total = total + expand_linear_power(L, power)
    return total


def _odd_weight(n, d, k):
    return (-1) ** (d - k) * binomial(n + 2 * d, d - k)


def _even_weight(n, d, k):
    return (-1) ** (d - k) * (binomial(n + 2 * d - 1, d - k) - binomial(n + 2 * d - 1, d - k - 1))


def decomposition_terms(n, e):
    d = e // 2
    if e % 2:
        weight, scale = _odd_weight, Fraction(1, 4 ** d * exponent_factorial((2 * d + 1,)))
    else:
        weight, scale = _even_weight, Fraction(1, 4 ** d * exponent_factorial((2 * d,)))
    terms = []
    for k in range(d + 1):
        coef = weight(n, d, k) * scale
        for L in _orbit_forms(n, k):
            terms.append(PowerSumTerm(coef, L, e))
    return terms


def decompose_h(n, e):
    """Exact power-sum decomposition of h_{n,e} with C(n + e//2, e//2) terms"""
    if n < 1 or e < 1:
        raise ApolarityError(f"Need n >= 1 and e >= 1, got n={n}, e={e}")
    certificate = PowerSumCertificate.certify(
        complete_symmetric(n, e), decomposition_terms(n, e), label=f"h_{{{n},{e}}}"
    )
    if certificate.exact:
        logger.info(f"✅ h_{{{n},{e}}} decomposed exactly into {certificate.term_count} powers")
    return certificate


@dataclass(frozen=True)
class ABMSum:
    kind: str
    n: int
    d: int
    m: int
    value: DualPolynomial
    expected: DualPolynomial

    @property
    def matches(self):
        return self.value == self.expected


def abm_sum(n, d, m, kind="A"):
    """
    A_{n,d,m} = sum_k (-1)^{d-k} C(n+2d, d-k)·S_{n,k,2m+1}
    B_{n,d,m} = sum_k (-1)^{d-k} [C(n+2d-1, d-k) - C(n+2d-1, d-k-1)]·S_{n,k,2m}
    """
    if not 0 <= m <= d:
        raise ApolarityError(f"Need 0 <= m <= d, got m={m}, d={d}")
    if kind == "A":
        weight, power = _odd_weight, 2 * m + 1
    elif kind == "B":
        weight, power = _even_weight, 2 * m
    else:
        raise ApolarityError(f"Unknown sum kind {kind!r}")
    value = DualPolynomial.zero(n)
    for k in range(d + 1):
        value = value + orbit_power_sum(n, k, power).scale(weight(n, d, k))
    if m < d:
        expected = DualPolynomial.zero(n)
    else:
        expected = complete_symmetric(n, power).scale(4 ** d * exponent_factorial((power,)))
    return ABMSum(kind, n, d, m, value, expected)


def quartic_identity_13():
    """h_{13,4} = -(2/3)h1^4 + (1/24) sum (h1+X_i)^4 + (1/24) sum_{i<j} (X_i+X_j)^4"""
    n = 13
    terms = [PowerSumTerm(Fraction(-2, 3), DualPolynomial.linear([1] * n), 4)]
    for i in range(n):
        coefficients = [1] * n
        coefficients[i] = 2
        terms.append(PowerSumTerm(Fraction(1, 24), DualPolynomial.linear(coefficients), 4))
    for i, j in combinations(range(n), 2):
        coefficients = [0] * n
        coefficients[i] = coefficients[j] = 1
        terms.append(PowerSumTerm(Fraction(1, 24), DualPolynomial.linear(coefficients), 4))
    return PowerSumCertificate.certify(complete_symmetric(n, 4), terms, label="h_{13,4}")


def diffrestrict_zero_test(f):
    """f restricted to X_n = 0 vanishes and l ∘ f = 0"""
    if not isinstance(f, DualPolynomial):
        raise ApolarityError("diffrestrict_zero_test expects a DualPolynomial")
    if f.n == 0:
        return f.is_zero()
    restricted = f.restrict_to_zero(f.n - 1)
    return restricted.is_zero() and contract(sum_of_variables(f.n), f).is_zero()


def inverse_system_annihilated(f):
    """l ∘ Phi(f) = 0 for f in some M_d"""
    if not isinstance(f, PrimalPolynomial):
        raise ApolarityError("Expected a PrimalPolynomial")
    return contract(sum_of_variables(f.n), phi(f)).is_zero()
