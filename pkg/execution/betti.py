#!/usr/bin/env python3
"""
Graded Betti numbers of artinian quotients
beta_{i,j} = dim Tor_i(S/I, k)_j from the Koszul complex on x1..xn tensored with
S/I, where S/I is either an apolar algebra S/ann(F) or S modulo a list of
homogeneous generators.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import settings
from apolarity import hilbert_function
from exact_linalg import EchelonBasis
from poly_core import (
    ApolarityError,
    DualPolynomial,
    PrimalPolynomial,
    add_exponents,
    binomial,
    contract,
    format_rational,
    leading_key,
    monomial_count,
    monomials,
    unit_vector,
)

logger = logging.getLogger(__name__)


class NotArtinianError(ApolarityError):
    """The quotient is not finite dimensional"""


class DeskScaleError(ApolarityError):
    """Too many variables for Koszul homology"""


@dataclass(frozen=True, eq=True)
class BettiTable:
    n: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), b in self.entries.items():
            if b < 0:
                raise ApolarityError(f"Negative Betti number at ({i}, {j})")
            if not 0 <= i <= self.n:
                raise ApolarityError(f"Homological degree {i} outside 0..{self.n}")
            if b:
                clean[(int(i), int(j))] = int(b)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def __iter__(self):
        return iter(self.entries.items())

    @property
    def degrees(self):
        return sorted({j for _, j in self.entries})

    @property
    def projective_dimension(self):
        return max((i for i, _ in self.entries), default=0)

    def is_gorenstein_symmetric(self, socle_degree):
        sigma = self.n + socle_degree
        return all(self.get(self.n - i, sigma - j) == b for (i, j), b in self.entries.items())

    def euler_characteristic(self):
        """j -> sum_i (-1)^i beta_{i,j}"""
        totals = {}
        for (i, j), b in self.entries.items():
            totals[j] = totals.get(j, 0) + (-1) ** i * b
        return {j: v for j, v in sorted(totals.items()) if v}

    def mismatches(self, other):
        cells = sorted(set(self.entries) | set(other.entries))
        return [
            {"i": i, "j": j, "computed": self.get(i, j), "predicted": other.get(i, j)}
            for i, j in cells
            if self.get(i, j) != other.get(i, j)
        ]

    def diagram(self):
        """Grid with rows i and columns j; zeros shown as dots"""
        if not self.entries:
            return "(empty)"
        degrees = range(min(self.degrees), max(self.degrees) + 1)
        width = max(len(str(b)) for b in self.entries.values())
        width = max(width, max(len(str(j)) for j in degrees))
        header = "i\\j " + " ".join(str(j).rjust(width) for j in degrees)
        lines = [header]
        for i in range(self.projective_dimension + 1):
            cells = (str(self.get(i, j)) if self.get(i, j) else "." for j in degrees)
            lines.append(f"{str(i).rjust(3)} " + " ".join(c.rjust(width) for c in cells))
        return "\n".join(lines)

    def to_json(self):
        return [{"i": i, "j": j, "b": b} for (i, j), b in self.entries.items()]

    @classmethod
    def from_json(cls, n, data):
        return cls(n, {(entry["i"], entry["j"]): entry["b"] for entry in data})


def apolar_from_scheme(scheme, socle_degree):
    """
    beta_{i,j}(S/ann F) = beta_{i,j}(S/I_X) + beta_{n-i, e+n-j}(S/I_X)
    for F of degree e apolar to the arithmetically Gorenstein scheme X.
    """
    n = scheme.n
    entries = {}
    for (i, j), b in scheme.entries.items():
        entries[(i, j)] = entries.get((i, j), 0) + b
        dual = (n - i, socle_degree + n - j)
        entries[dual] = entries.get(dual, 0) + b
    return BettiTable(n, entries)


class ApolarQuotient:
    """A = S/ann(F); an element f of S_d is represented by f ∘ F"""

    def __init__(self, form):
        if not isinstance(form, DualPolynomial):
            raise ApolarityError("ApolarQuotient expects a DualPolynomial")
        self.form = form
        self.n = form.n
        self.top_degree = form.homogeneous_degree()

    def image(self, exp):
        return dict(contract(PrimalPolynomial.monomial(exp), self.form).items())

    @lru_cache(maxsize=None)
    def basis(self, d):
        """Monomials of S_d whose images form a basis of A_d"""
        if d < 0 or d > self.top_degree:
            return ()
        span = EchelonBasis()
        return tuple(exp for exp in monomials(self.n, d) if span.add(self.image(exp)))

    def hilbert_values(self):
        return tuple(len(self.basis(d)) for d in range(self.top_degree + 1))


class IdealQuotient:
    """A = S/I for I generated by homogeneous forms; elements are normal forms modulo I_d"""

    def __init__(self, generators, n=None):
        generators = [g for g in generators if not g.is_zero()]
        if not generators and n is None:
            raise ApolarityError("IdealQuotient needs generators or n")
        for g in generators:
            if not isinstance(g, PrimalPolynomial):
                raise ApolarityError("Ideal generators must be PrimalPolynomials")
            if g.homogeneous_degree() == 0:
                raise NotArtinianError("The unit ideal has an empty quotient")
        self.n = n if n is not None else generators[0].n
        self.generators = generators
        self._pieces = {}
        delta = max((g.degree for g in generators), default=0)
        bound = self.n * (delta - 1) + 1
        if not generators or monomial_count(self.n, bound) != self._piece(bound).rank:
            raise NotArtinianError(f"S/I is not artinian (I_{bound} is a proper subspace)")
        self.top_degree = max(d for d in range(bound) if self._piece(d).rank < monomial_count(self.n, d))

    def _piece(self, d):
        if d not in self._pieces:
            span = EchelonBasis(key=leading_key)
            if d > 0:
                previous = self._piece(d - 1)
                span.extend(
                    {add_exponents(m, unit_vector(self.n, s)): c for m, c in row.items()}
                    for row in previous.rows().values()
                    for s in range(self.n)
                )
            span.extend(dict(g.items()) for g in self.generators if g.degree == d)
            self._pieces[d] = span
        return self._pieces[d]

    def image(self, exp):
        return self._piece(sum(exp)).reduce({exp: 1})

    @lru_cache(maxsize=None)
    def basis(self, d):
        if d < 0 or d > self.top_degree:
            return ()
        pivots = set(self._piece(d).rows())
        return tuple(exp for exp in monomials(self.n, d) if exp not in pivots)

    def hilbert_values(self):
        return tuple(len(self.basis(d)) for d in range(self.top_degree + 1))


def _differential_rank(quotient, i, j):
    """Rank of the Koszul differential K_i ⊗ A_{j-i} -> K_{i-1} ⊗ A_{j-i+1}"""
    n = quotient.n
    if i <= 0 or i > n:
        return 0
    source = quotient.basis(j - i)
    if not source or not quotient.basis(j - i + 1):
        return 0
    span = EchelonBasis()
    for subset in combinations(range(n), i):
        for exp in source:
            vector = {}
            for r, s in enumerate(subset):
                face = subset[:r] + subset[r + 1:]
                sign = -1 if r % 2 else 1
                for target, coef in quotient.image(add_exponents(exp, unit_vector(n, s))).items():
                    key = (face, target)
                    value = vector.get(key, 0) + sign * coef
                    if value:
                        vector[key] = value
                    else:
                        vector.pop(key, None)
            span.add(vector)
    return span.rank


def koszul_betti(source, n=None):
    """BettiTable of S/ann(F) for a DualPolynomial F, or of S/I for a list of generators of I"""
    if isinstance(source, DualPolynomial):
        quotient = ApolarQuotient(source)
    elif isinstance(source, (ApolarQuotient, IdealQuotient)):
        quotient = source
    else:
        quotient = IdealQuotient(list(source), n)
    n = quotient.n
    if n > settings.MAX_BETTI_VARIABLES:
        raise DeskScaleError(
            f"Koszul homology is capped at n <= {settings.MAX_BETTI_VARIABLES}, got n={n}"
        )
    entries = {}
    for j in range(quotient.top_degree + n + 1):
        for i in range(max(0, j - quotient.top_degree), min(n, j) + 1):
            chains = binomial(n, i) * len(quotient.basis(j - i))
            if not chains:
                continue
            b = chains - _differential_rank(quotient, i, j) - _differential_rank(quotient, i + 1, j)
            if b:
                entries[(i, j)] = b
    table = BettiTable(n, entries)
    logger.debug(f"📊 Koszul Betti table: {table.to_json()}")
    return table


def hilbert_numerator(hilbert_values, n):
    """Coefficients of (1-t)^n·sum h_d t^d"""
    coefficients = {}
    for d, h in enumerate(hilbert_values):
        for k in range(n + 1):
            coefficients[d + k] = coefficients.get(d + k, 0) + h * (-1) ** k * binomial(n, k)
    return {j: v for j, v in sorted(coefficients.items()) if v}


def euler_characteristic_check(table, hilbert_values, n):
    return table.euler_characteristic() == hilbert_numerator(hilbert_values, n)


@dataclass(frozen=True)
class BettiVerification:
    n: int
    point: tuple
    case: str
    computed: BettiTable
    predicted: BettiTable
    euler_ok: bool
    gorenstein_ok: bool

    @property
    def mismatches(self):
        return self.computed.mismatches(self.predicted)

    @property
    def verified(self):
        return not self.mismatches and self.euler_ok and self.gorenstein_ok

    def to_json(self):
        return {
            "n": self.n,
            "point": [format_rational(x) for x in self.point],
            "case": self.case,
            "computed": self.computed.to_json(),
            "predicted": self.predicted.to_json(),
            "mismatches": self.mismatches,
            "euler_ok": self.euler_ok,
            "gorenstein_ok": self.gorenstein_ok,
            "verified": self.verified,
        }


def verify_betti_formula(n, a):
    """Koszul homology of S/ann F against the predicted table of its classified case"""
    from cubic_atlas import PlanePoint, betti_case, memberships, predicted_betti

    if not 3 <= n <= settings.MAX_BETTI_VARIABLES:
        raise DeskScaleError(f"Betti verification runs for 3 <= n <= {settings.MAX_BETTI_VARIABLES}")
    point = a if isinstance(a, PlanePoint) else PlanePoint.of(*a)
    case = betti_case(n, memberships(point))
    F = point.form(n)
    computed = koszul_betti(F)
    predicted = predicted_betti(n, case)
    hilbert = tuple(hilbert_function(F))
    result = BettiVerification(
        n=n,
        point=tuple(point),
        case=case,
        computed=computed,
        predicted=predicted,
        euler_ok=euler_characteristic_check(computed, hilbert, n),
        gorenstein_ok=computed.is_gorenstein_symmetric(len(hilbert) - 1),
    )
    if result.verified:
        logger.info(f"✅ Betti table of {point} (case {case}, n={n}) matches the prediction")
    else:
        logger.warning(f"❌ Betti table of {point} (case {case}, n={n}): {result.mismatches}")
    return result
