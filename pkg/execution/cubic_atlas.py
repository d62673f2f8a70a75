#!/usr/bin/env python3
"""
Symmetric cubic atlas
Classification of F = a0·p1³ + a1·n·p1p2 + a2·n²·p3 by the point (a0:a1:a2) of
the plane: the cuspidal cubic C, the lines l1, l2, l3 and the points P, Q;
Hilbert functions, Waring and cactus ranks with certificates, predicted Betti
tables, and the atlas figure.
"""

import io
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

import matplotlib
import numpy as np
import sympy
from matplotlib.figure import Figure

import settings
from apolarity import (
    HilbertFunction,
    contains_in_annihilator,
    generator_degrees,
    hilbert_function,
    ideal_degree,
)
from betti import BettiTable, apolar_from_scheme
from exact_linalg import EchelonBasis
from lefschetz import sl_candidates, sl_element_for_cubic
from poly_core import (
    ApolarityError,
    DualPolynomial,
    PrimalPolynomial,
    QuadExtScalar,
    binomial,
    complete_symmetric,
    format_rational,
    parse_rational,
    power_sum,
    quadratic_form_matrix,
    sqrt_in_extension,
    symmetric_cubic,
)
from symstruct import PowerSumCertificate, PowerSumTerm

logger = logging.getLogger(__name__)


class OffCurveError(ApolarityError):
    """A point of the cuspidal cubic was required"""


class UnsupportedCaseError(ApolarityError):
    """The requested case does not exist for this n or this point"""


# ---------------------------------------------------------------------------
# Points of the plane
# ---------------------------------------------------------------------------

def _normalize(values):
    """Coprime integers, first nonzero entry positive"""
    values = [parse_rational(v) for v in values]
    if not any(values):
        raise ApolarityError("A projective point needs a nonzero coordinate")
    scale = lcm(*(v.denominator for v in values))
    integers = [int(v * scale) for v in values]
    divisor = 0
    for x in integers:
        divisor = gcd(divisor, x)
    sign = 1 if next(x for x in integers if x) > 0 else -1
    return tuple(Fraction(sign * x // divisor) for x in integers)


@dataclass(frozen=True)
class PlanePoint:
    a0: Fraction
    a1: Fraction
    a2: Fraction

    @classmethod
    def of(cls, a0, a1, a2):
        return cls(*_normalize((a0, a1, a2)))

    @classmethod
    def parse(cls, text):
        """ "a0,a1,a2" with integers or num/den """
        parts = [p.strip() for p in str(text).split(",")]
        if len(parts) != 3:
            raise ApolarityError(f"Expected three coordinates a0,a1,a2, got {text!r}")
        return cls.of(*parts)

    def __iter__(self):
        return iter((self.a0, self.a1, self.a2))

    def form(self, n):
        return symmetric_cubic(n, self.a0, self.a1, self.a2)

    def to_json(self):
        return [format_rational(x) for x in self]

    def __str__(self):
        return "(" + ":".join(str(x) for x in self) + ")"


P = PlanePoint.of(1, 0, 0)
Q = PlanePoint.of(2, -3, 1)


def _coefficients(a):
    return tuple(parse_rational(x) for x in a)


def curve_eval(a):
    """27·a0·a2² - 9·a1²·a2 - a1³"""
    a0, a1, a2 = _coefficients(a)
    return 27 * a0 * a2 * a2 - 9 * a1 * a1 * a2 - a1 ** 3


def memberships(a):
    a0, a1, a2 = _coefficients(a)
    is_p = a1 == 0 and a2 == 0
    is_q = a2 != 0 and a1 == -3 * a2 and a0 == 2 * a2
    return {
        "onC": curve_eval((a0, a1, a2)) == 0,
        "isP": is_p,
        "isQ": is_q,
        "onL1": a1 + 3 * a2 == 0,
        "onL2": a2 == 0,
        "onL3": a0 + a1 + a2 == 0,
    }


def gamma(alpha, beta):
    """(3αβ² + β³ : 3α²β : α³)"""
    alpha, beta = parse_rational(alpha), parse_rational(beta)
    return PlanePoint.of(3 * alpha * beta * beta + beta ** 3, 3 * alpha * alpha * beta, alpha ** 3)


def gamma_inverse(c):
    """(α:β) with gamma(α, β) = c, for c on the cuspidal cubic"""
    c0, c1, c2 = _coefficients(c)
    if curve_eval((c0, c1, c2)) != 0:
        raise OffCurveError(f"{tuple(c)} is not on the cuspidal cubic")
    if c1 == 0 and c2 == 0:
        return (Fraction(0), Fraction(1))
    return _normalize((3 * c2, c1))


LINES = {
    "l1": (0, 1, 3),
    "l2": (0, 0, 1),
    "l3": (1, 1, 1),
}


def curve_line_contacts():
    """Intersection points of each line with C, with multiplicities, through gamma"""
    alpha, beta = sympy.symbols("alpha beta")
    image = (3 * alpha * beta ** 2 + beta ** 3, 3 * alpha ** 2 * beta, alpha ** 3)
    contacts = {}
    for name, weights in LINES.items():
        restricted = sympy.expand(sum(w * c for w, c in zip(weights, image)))
        _, factors = sympy.factor_list(restricted, alpha, beta)
        points = []
        for factor, multiplicity in factors:
            poly = sympy.Poly(factor, alpha, beta)
            u = Fraction(str(poly.coeff_monomial(alpha)))
            v = Fraction(str(poly.coeff_monomial(beta)))
            points.append({"point": gamma(-v, u), "multiplicity": int(multiplicity)})
        contacts[name] = sorted(points, key=lambda item: tuple(item["point"]), reverse=True)
    return contacts


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

CASES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")


def expected_hilbert(n, flags):
    if flags["isP"]:
        return HilbertFunction((1, 1, 1, 1))
    if flags["isQ"]:
        return HilbertFunction((1, n - 1, n - 1, 1))
    return HilbertFunction((1, n, n, 1))


def expected_waring_rank(n, flags):
    if flags["isP"]:
        return 1
    if flags["isQ"] and n == 3:
        return 2
    if flags["onC"]:
        return n
    if n == 3 and flags["onL1"]:
        return n
    if flags["onL2"]:
        return 2 * (n - 1)
    return n + 1


def expected_cactus_rank(n, flags):
    """(rank, discrepancy flags)"""
    if flags["isP"]:
        return 1, []
    if flags["isQ"]:
        if n == 3:
            return 2, []
        return n, [
            "cactus rank at Q for n >= 4: the cactus-rank statement gives n+1, "
            "but wr(Q) = n and the ideal degree 2n force cr = n"
        ]
    if flags["onC"] or (n == 3 and flags["onL1"]):
        return n, []
    return n + 1, []


def betti_case(n, flags):
    if flags["isP"]:
        return "i"
    if flags["isQ"]:
        return "ii" if n == 3 else "iii"
    if flags["onL1"]:
        return "iv" if n == 3 else "v"
    if flags["onC"]:
        return "vi"
    if flags["onL2"]:
        return "vii"
    return "viii"


@dataclass(frozen=True)
class ClassificationReport:
    n: int
    point: PlanePoint
    flags: dict
    hilbert: HilbertFunction
    computed_hilbert: HilbertFunction
    waring_rank: int
    cactus_rank: int
    betti_case: str
    predicted_betti: BettiTable = field(repr=False)
    sl_element: str
    discrepancy_flags: tuple = ()

    @property
    def hilbert_matches(self):
        return self.hilbert == self.computed_hilbert

    @property
    def verified(self):
        return self.hilbert_matches and self.sl_element is not None and self.cactus_rank <= self.waring_rank

    def to_json(self):
        return {
            "n": self.n,
            "point": self.point.to_json(),
            "flags": dict(self.flags),
            "hf": self.hilbert.to_json(),
            "computed_hf": self.computed_hilbert.to_json(),
            "waring_rank": self.waring_rank,
            "cactus_rank": self.cactus_rank,
            "betti_case": self.betti_case,
            "predicted_betti": self.predicted_betti.to_json(),
            "sl_element": self.sl_element,
            "discrepancy_flags": list(self.discrepancy_flags),
            "verified": self.verified,
        }

    CSV_FIELDS = (
        "n", "a0", "a1", "a2", "onC", "isP", "isQ", "onL1", "onL2", "onL3",
        "hf", "waring_rank", "cactus_rank", "betti_case", "sl_element", "verified",
    )

    def csv_row(self):
        a0, a1, a2 = self.point.to_json()
        return {
            "n": self.n,
            "a0": a0,
            "a1": a1,
            "a2": a2,
            **{k: self.flags[k] for k in ("onC", "isP", "isQ", "onL1", "onL2", "onL3")},
            "hf": " ".join(str(h) for h in self.hilbert),
            "waring_rank": self.waring_rank,
            "cactus_rank": self.cactus_rank,
            "betti_case": self.betti_case,
            "sl_element": self.sl_element or "",
            "verified": self.verified,
        }


def classify(n, a):
    if n < 3:
        raise ApolarityError(f"The cubic atlas needs n >= 3, got {n}")
    point = a if isinstance(a, PlanePoint) else PlanePoint.of(*a)
    flags = memberships(point)
    hilbert = expected_hilbert(n, flags)
    computed = hilbert_function(point.form(n))
    cactus, discrepancies = expected_cactus_rank(n, flags)
    case = betti_case(n, flags)
    element = sl_element_for_cubic(n, tuple(point))
    element_name = None
    if element is not None:
        element_name = next(name for name, ell in sl_candidates(n) if ell == element)
    report = ClassificationReport(
        n=n,
        point=point,
        flags=flags,
        hilbert=hilbert,
        computed_hilbert=computed,
        waring_rank=expected_waring_rank(n, flags),
        cactus_rank=cactus,
        betti_case=case,
        predicted_betti=predicted_betti(n, case),
        sl_element=element_name,
        discrepancy_flags=tuple(discrepancies),
    )
    if not report.hilbert_matches:
        logger.warning(f"❌ Hilbert function mismatch at {point}, n={n}: {hilbert} vs {computed}")
    for flag in discrepancies:
        logger.warning(f"⚠️ {point}, n={n}: {flag}")
    return report


# ---------------------------------------------------------------------------
# Waring certificates
# ---------------------------------------------------------------------------

def _linear(coefficients):
    return DualPolynomial.linear(coefficients)


def _curve_terms(n, a1, a2):
    """(1/(27·n·a2²))·sum (3·a2·n·X_i + a1·p1)³"""
    coef = Fraction(1) / (27 * n * a2 * a2)
    terms = []
    for i in range(n):
        coefficients = [a1] * n
        coefficients[i] = a1 + 3 * a2 * n
        terms.append(PowerSumTerm(coef, _linear(coefficients), 3))
    return terms


def _cyclotomic_terms(a0, a2):
    """n = 3 on l1: a2·[(X1+ξX2+ξ²X3)³ + (X1+ξ²X2+ξX3)³] + (a0 - 2a2)·p1³"""
    xi = QuadExtScalar.primitive_cube_root()
    xi2 = xi * xi
    terms = [
        PowerSumTerm(a2, _linear([1, xi, xi2]), 3),
        PowerSumTerm(a2, _linear([1, xi2, xi]), 3),
    ]
    if a0 != 2 * a2:
        terms.append(PowerSumTerm(a0 - 2 * a2, _linear([1, 1, 1]), 3))
    return terms


def quadric_diagonalize(form):
    """Q = sum c_i·L_i² over the rationals, each L_i with leading coefficient 1"""
    n = form.n
    matrix = quadratic_form_matrix(form)
    ring = type(form)
    terms = []
    while True:
        w = None
        for i in range(n):
            if matrix[i][i]:
                w = [Fraction(int(k == i)) for k in range(n)]
                break
        if w is None:
            pair = next(((i, j) for i, j in combinations(range(n), 2) if matrix[i][j]), None)
            if pair is None:
                break
            w = [Fraction(int(k in pair)) for k in range(n)]
        u = [sum(matrix[r][c] * w[c] for c in range(n)) for r in range(n)]
        s = sum(w[r] * u[r] for r in range(n))
        lead = next(x for x in u if x)
        terms.append((lead * lead / s, ring.linear([x / lead for x in u])))
        matrix = [[matrix[r][c] - u[r] * u[c] / s for c in range(n)] for r in range(n)]
    return terms


def _line_two_terms(n, a0, a1):
    """
    a2 = 0: F = (a0+a1)·p1³ + p1·q' with q' = a1·n·(p2 - p1²/n) = sum w_k V_k².
    Pairs c_k(p1 + t_k V_k)³ + c_k(p1 - t_k V_k)³ give 2c_k p1³ + 6c_k t_k² p1 V_k².
    """
    p1 = power_sum(n, 1)
    quadric = power_sum(n, 2).scale(a1 * n) - (p1 * p1).scale(a1)
    diagonal = quadric_diagonalize(quadric)
    weights = [w for w, _ in diagonal]
    directions = [V for _, V in diagonal]
    if a0 + a1 != 0:
        D = sum(weights) / (3 * (a0 + a1))
        t = sqrt_in_extension(D)
        plan = [(w / (6 * D), t, V) for w, V in zip(weights, directions)]
    else:
        head = sum(weights[:-1])
        plan = [(w / 6, Fraction(1), V) for w, V in zip(weights[:-1], directions[:-1])]
        D = -weights[-1] / head
        plan.append((weights[-1] / (6 * D), sqrt_in_extension(D), directions[-1]))
    terms = []
    for c, t, V in plan:
        terms.append(PowerSumTerm(c, p1 + V.scale(t), 3))
        terms.append(PowerSumTerm(c, p1 - V.scale(t), 3))
    return terms


def waring_certificate(n, a):
    """Power-sum certificate of F(a) with as many terms as its Waring rank"""
    if n < 3:
        raise ApolarityError(f"The cubic atlas needs n >= 3, got {n}")
    a0, a1, a2 = _coefficients(a)
    if not (a0 or a1 or a2):
        raise ApolarityError("A projective point needs a nonzero coordinate")
    flags = memberships((a0, a1, a2))
    target = symmetric_cubic(n, a0, a1, a2)
    if flags["isP"]:
        terms, label = [PowerSumTerm(a0, power_sum(n, 1), 3)], "cusp"
    elif n == 3 and flags["onL1"]:
        terms, label = _cyclotomic_terms(a0, a2), "cyclotomic"
    elif flags["onL2"]:
        terms, label = _line_two_terms(n, a0, a1), "tangent-line"
    else:
        terms, label = _curve_terms(n, a1, a2), "curve"
        if not flags["onC"]:
            terms.append(PowerSumTerm(curve_eval((a0, a1, a2)) / (27 * a2 * a2), power_sum(n, 1), 3))
            label = "cusp-line"
    certificate = PowerSumCertificate.certify(target, terms, label=label)
    logger.debug(f"🔍 {label} certificate for {(a0, a1, a2)}, n={n}: {certificate.term_count} terms")
    return certificate


# ---------------------------------------------------------------------------
# Cactus certificates and the Ranestad–Schreyer bound
# ---------------------------------------------------------------------------

def rs_lower_bound(F):
    """ceil(deg ann(F) / largest generator degree)"""
    top = max(degree for degree, _ in generator_degrees(F))
    return -(-ideal_degree(F) // top)


def scheme_quadrics(n):
    """(x_i - x_j)(x_i + x_j - 2x_k) for i < j and k outside {i, j}"""
    generators = []
    for i, j in combinations(range(n), 2):
        for k in range(n):
            if k in (i, j):
                continue
            diff = [0] * n
            diff[i], diff[j] = 1, -1
            cone = [0] * n
            cone[i] = cone[j] = 1
            cone[k] = -2
            generators.append(PrimalPolynomial.linear(diff) * PrimalPolynomial.linear(cone))
    return generators


@dataclass(frozen=True)
class CactusCertificate:
    n: int
    point: tuple
    generators: tuple = field(repr=False)
    contained: bool
    span_dimension: int
    expected_span_dimension: int
    scheme_length: int
    quadric: PrimalPolynomial = field(repr=False)
    quadric_annihilates: bool
    quadric_at_vertex: Fraction
    expected_at_vertex: Fraction
    rs_bound: int

    @property
    def verified(self):
        return (
            self.contained
            and self.span_dimension == self.expected_span_dimension
            and self.scheme_length == self.n + 1
            and self.quadric_annihilates
            and self.quadric_at_vertex == self.expected_at_vertex != 0
            and self.rs_bound <= self.scheme_length
        )

    def to_json(self):
        return {
            "n": self.n,
            "point": [format_rational(x) for x in self.point],
            "generators": [g.to_json() for g in self.generators],
            "contained": self.contained,
            "span_dimension": self.span_dimension,
            "expected_span_dimension": self.expected_span_dimension,
            "scheme_length": self.scheme_length,
            "cone_vertex": ["1/1"] * self.n,
            "quadric": self.quadric.to_json(),
            "quadric_annihilates": self.quadric_annihilates,
            "quadric_at_vertex": format_rational(self.quadric_at_vertex),
            "expected_at_vertex": format_rational(self.expected_at_vertex),
            "rs_bound": self.rs_bound,
            "verified": self.verified,
        }


def cactus_certificate(n, a):
    """Scheme of length n+1 apolar to F for a point of l2 other than P"""
    if n < 3:
        raise ApolarityError(f"The cubic atlas needs n >= 3, got {n}")
    a0, a1, a2 = _coefficients(a)
    if a2 != 0 or a1 == 0:
        raise UnsupportedCaseError(f"{(a0, a1, a2)} is not on l2 away from P")
    F = symmetric_cubic(n, a0, a1, a2)
    generators = scheme_quadrics(n)
    span = EchelonBasis()
    span.extend(dict(g.items()) for g in generators)
    p1 = PrimalPolynomial.linear([1] * n)
    p2 = power_sum(n, 2, ring=PrimalPolynomial)
    quadric = (p1 * p1).scale(3 * a0 + (n + 2) * a1) - p2.scale(3 * n * (a0 + a1))
    certificate = CactusCertificate(
        n=n,
        point=(a0, a1, a2),
        generators=tuple(generators),
        contained=contains_in_annihilator(generators, F),
        span_dimension=span.rank,
        expected_span_dimension=binomial(n + 1, 2) - (n + 1),
        scheme_length=hilbert_function(complete_symmetric(n - 1, 2)).length,
        quadric=quadric,
        quadric_annihilates=contains_in_annihilator([quadric], F),
        quadric_at_vertex=quadric.evaluate([1] * n),
        expected_at_vertex=a1 * n * n * (n - 1),
        rs_bound=rs_lower_bound(F),
    )
    if certificate.verified:
        logger.info(f"✅ length {n + 1} scheme apolar to {(a0, a1, a2)}, n={n}")
    else:
        logger.warning(f"❌ cactus certificate failed at {(a0, a1, a2)}, n={n}")
    return certificate


# ---------------------------------------------------------------------------
# Betti tables
# ---------------------------------------------------------------------------

def _linear_strand(n, values):
    """beta_{0,0} = 1 plus beta_{i,i+1} for i >= 1"""
    entries = {(0, 0): 1}
    for i, b in values.items():
        entries[(i, i + 1)] = b
    return entries


def _generic_strand(n):
    return {
        i: Fraction(i * (n - 1 - i), n) * binomial(n + 1, i + 1) for i in range(1, n - 1)
    }


def scheme_betti(n, case):
    """beta(S/I_X) for the apolar scheme X of each case"""
    if case not in CASES:
        raise UnsupportedCaseError(f"Unknown case {case!r}")
    if n < 3:
        raise UnsupportedCaseError(f"Cases need n >= 3, got {n}")
    if case in ("ii", "iv") and n != 3:
        raise UnsupportedCaseError(f"Case ({case}) exists only for n = 3")
    if case in ("iii", "v") and n <= 3:
        raise UnsupportedCaseError(f"Case ({case}) exists only for n > 3")

    if case == "i":
        entries = {(i, i): binomial(n - 1, i) for i in range(n)}
    elif case == "ii":
        entries = {(0, 0): 1, (1, 1): 1, (1, 2): 1, (2, 3): 1}
    elif case == "iii":
        strand = {
            i: Fraction(i * (n - 2 - i), n - 1) * binomial(n, i + 1)
            + Fraction((i - 1) * (n - 1 - i), n - 1) * binomial(n, i)
            for i in range(1, n - 1)
        }
        entries = _linear_strand(n, strand)
        entries[(1, 1)] = 1
        entries[(n - 2, n)] = 1
        entries[(n - 1, n + 1)] = 1
    elif case == "iv":
        entries = {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    elif case == "vi":
        entries = _linear_strand(n, {i: i * binomial(n, i + 1) for i in range(1, n)})
    else:
        entries = _linear_strand(n, _generic_strand(n))
        entries[(n - 1, n + 1)] = 1
        if case == "v":
            entries[(n - 2, n)] = entries.get((n - 2, n), 0) + 1
            entries[(n - 1, n)] = entries.get((n - 1, n), 0) + 1
    for key, value in entries.items():
        if Fraction(value).denominator != 1:
            raise UnsupportedCaseError(f"Non-integral Betti number {value} at {key}")
    return BettiTable(n, {key: int(value) for key, value in entries.items()})


def predicted_betti(n, case):
    return apolar_from_scheme(scheme_betti(n, case), 3)


# ---------------------------------------------------------------------------
# Atlas figure
# ---------------------------------------------------------------------------

DEFAULT_VIEWPORT = (-3.0, 2.0, -1.5, 1.5)


def chart_coordinates(point):
    """(a1/a0, a2/a0) in the chart a0 = 1, or None on the line a0 = 0"""
    a0, a1, a2 = _coefficients(point)
    if a0 == 0:
        return None
    return (a1 / a0, a2 / a0)


def _curve_samples(viewport, samples):
    xmin, xmax, ymin, ymax = viewport
    t = np.linspace(-6.0, 6.0, samples)
    denominator = 3 * t + 1
    with np.errstate(divide="ignore", invalid="ignore"):
        x = 3 * t ** 2 / denominator
        y = t ** 3 / denominator
    margin = 4 * max(xmax - xmin, ymax - ymin)
    outside = (np.abs(denominator) < 1e-3) | (np.abs(x) > margin) | (np.abs(y) > margin)
    x[outside] = np.nan
    y[outside] = np.nan
    return x, y


def plot_atlas_svg(n, viewport=DEFAULT_VIEWPORT, samples=2001):
    """SVG of C, l1, l2, l3 with P and Q in the chart a0 = 1"""
    xmin, xmax, ymin, ymax = viewport
    if xmin >= xmax or ymin >= ymax:
        raise ApolarityError(f"Empty viewport {viewport}")
    with matplotlib.rc_context({"svg.hashsalt": settings.SVG_HASHSALT, "svg.fonttype": "none"}):
        fig = Figure(figsize=(6, 4.5))
        ax = fig.subplots()
        x, y = _curve_samples(viewport, samples)
        ax.plot(x, y, color="black", linewidth=1.5, label="C")
        xs = np.array([xmin, xmax])
        ax.plot(xs, -xs / 3, color="tab:blue", label="l1: a1 + 3a2 = 0")
        ax.plot(xs, 0 * xs, color="tab:green", label="l2: a2 = 0")
        ax.plot(xs, -1 - xs, color="tab:red", label="l3: a0 + a1 + a2 = 0")
        for name, point in (("P", P), ("Q", Q)):
            px, py = (float(v) for v in chart_coordinates(point))
            ax.plot([px], [py], "o", color="black")
            ax.annotate(name, (px, py), textcoords="offset points", xytext=(6, 6))
        ax.set_xlim(xmin, xmax)
        ax.set_ylim(ymin, ymax)
        ax.set_xlabel("a1 / a0")
        ax.set_ylabel("a2 / a0")
        ax.set_title(f"Symmetric cubics, n = {n}")
        ax.legend(loc="lower left", fontsize=8)
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


# ---------------------------------------------------------------------------
# Sweep grid
# ---------------------------------------------------------------------------

def atlas_grid(bound=4):
    """Special points, gamma samples, points on each line, then integer points |a_i| <= bound"""
    points = [P, Q, PlanePoint.of(0, 0, 1), PlanePoint.of(1, 1, 1), PlanePoint.of(1, 1, 0)]
    for alpha, beta in ((1, 1), (1, 2), (2, 1), (-1, 2), (1, -2), (3, -1), (1, 3)):
        points.append(gamma(alpha, beta))
    for t in range(-3, 4):
        points.append(PlanePoint.of(1, -3 * t, t) if t else PlanePoint.of(0, -3, 1))
        points.append(PlanePoint.of(1, t, 0) if t else PlanePoint.of(0, 1, 0))
        points.append(PlanePoint.of(t, 1, -1 - t))
    span = range(-bound, bound + 1)
    for a0 in span:
        for a1 in span:
            for a2 in span:
                if a0 or a1 or a2:
                    points.append(PlanePoint.of(a0, a1, a2))
    unique = []
    seen = set()
    for point in points:
        if point not in seen:
            seen.add(point)
            unique.append(point)
    return unique
