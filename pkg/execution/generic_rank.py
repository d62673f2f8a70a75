#!/usr/bin/env python3
"""
Orbit parameterizations of symmetric forms
Power sums of S_n-orbits of linear forms in degrees 3, 4 and 5, their coordinates
in the p-monomial basis, Jacobian determinant identities, the h_{n,4} preimage
system and dimension counts.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
import sympy
from mpmath import mp

import settings
from poly_core import (
    ApolarityError,
    DualPolynomial,
    binomial,
    expand_linear_power,
    format_rational,
    parse_rational,
    partitions,
    to_power_sum_basis,
)

logger = logging.getLogger(__name__)

# (lead, h1 coefficient, X coefficient) per orbit block
ORBIT_BLOCKS = {
    3: (("single", 1, 2),),
    4: (("single", 1, 2), ("pair", 3, 4)),
    5: (("single", 1, 2), ("pair", 3, 4), ("single", 5, 6)),
}


# ---------------------------------------------------------------------------
# p-basis arithmetic
# ---------------------------------------------------------------------------

def _merge(a, b):
    return tuple(sorted(a + b, reverse=True))


def _p(k, n):
    """p_k with p_0 = n"""
    return {(): n} if k == 0 else {(k,): 1}


def _times(x, y):
    product = {}
    for pa, ca in x.items():
        for pb, cb in y.items():
            key = _merge(pa, pb)
            product[key] = product.get(key, 0) + ca * cb
    return product


@lru_cache(maxsize=None)
def _pair_power_sum(k, n):
    """T_k = sum_{i<j} (X_i + X_j)^k = (sum_m C(k,m) p_m p_{k-m} - 2^k p_k) / 2"""
    total = {}
    for m in range(k + 1):
        for key, c in _times(_p(m, n), _p(k - m, n)).items():
            total[key] = total.get(key, 0) + binomial(k, m) * c
    for key, c in _p(k, n).items():
        total[key] = total.get(key, 0) - 2 ** k * c
    return {key: c // 2 for key, c in total.items() if c}


def _accumulate(target, key, value):
    target[key] = target.get(key, 0) + value


def _orbit_block(kind, d, n, a, b, coordinates):
    """Add sum over the orbit of (a·h1 + b·X_i)^d, or of (a·h1 + b·(X_i+X_j))^d for pairs"""
    for k in range(d + 1):
        weight = binomial(d, k) * a ** (d - k) * b ** k
        inner = _p(k, n) if kind == "single" else _pair_power_sum(k, n)
        for key, c in inner.items():
            _accumulate(coordinates, _merge((1,) * (d - k), key), weight * c)


@dataclass(frozen=True)
class OrbitMap:
    """
    c0·h1^d (or a0^d·h1^d) + sum over orbit blocks, with parameters
    d=3: (lead, a1, a2); d=4: (lead, a1..a4); d=5: (lead, a1..a6).
    """

    degree: int
    n: int
    free_lead: bool = True

    def __post_init__(self):
        if self.degree not in ORBIT_BLOCKS:
            raise ApolarityError(f"Orbit maps exist for degrees 3, 4, 5, got {self.degree}")
        if self.n < 1:
            raise ApolarityError(f"Need n >= 1, got {self.n}")

    @property
    def parameter_count(self):
        return 1 + 2 * len(ORBIT_BLOCKS[self.degree])

    @property
    def parameter_names(self):
        lead = "c0" if self.free_lead else "a0"
        return (lead,) + tuple(f"a{i}" for i in range(1, self.parameter_count))

    @property
    def partitions(self):
        return partitions(self.degree)

    @property
    def term_count(self):
        count = 1
        for kind, _, _ in ORBIT_BLOCKS[self.degree]:
            count += self.n if kind == "single" else binomial(self.n, 2)
        return count

    def _check(self, params):
        params = list(params)
        if len(params) != self.parameter_count:
            raise ApolarityError(
                f"Degree {self.degree} orbit map takes {self.parameter_count} parameters, got {len(params)}"
            )
        return params

    def coordinates(self, params):
        """Coordinates in the p-monomial basis; works for rationals, sympy symbols and mpmath numbers"""
        params = self._check(params)
        d = self.degree
        lead = params[0] if self.free_lead else params[0] ** d
        coordinates = {(1,) * d: lead}
        for kind, i, j in ORBIT_BLOCKS[d]:
            _orbit_block(kind, d, self.n, params[i], params[j], coordinates)
        return {lam: coordinates.get(lam, 0) for lam in self.partitions}

    def form(self, params):
        """The orbit sum expanded as a DualPolynomial (rational parameters)"""
        params = [parse_rational(x) for x in self._check(params)]
        d, n = self.degree, self.n
        lead = params[0] if self.free_lead else params[0] ** d
        total = expand_linear_power(DualPolynomial.linear([1] * n), d).scale(lead)
        for kind, i, j in ORBIT_BLOCKS[d]:
            a, b = params[i], params[j]
            if kind == "single":
                supports = [(s,) for s in range(n)]
            else:
                supports = [(s, t) for s in range(n) for t in range(s + 1, n)]
            for support in supports:
                coefficients = [a] * n
                for s in support:
                    coefficients[s] = a + b
                total = total + expand_linear_power(DualPolynomial.linear(coefficients), d)
        return total


def orbit_map_coordinates(d, n, params, free_lead=True):
    return OrbitMap(d, n, free_lead).coordinates(params)


def brute_force_coordinates(d, n, params, free_lead=True):
    """Expand the orbit sums and convert to the p-basis"""
    if n < d:
        raise ApolarityError(f"p-monomials of degree {d} are dependent in {n} variables")
    return to_power_sum_basis(OrbitMap(d, n, free_lead).form(params))


# ---------------------------------------------------------------------------
# Jacobians
# ---------------------------------------------------------------------------

# det(Jacobian) = orientation · closed form, rows a0.. and columns in partition order
JACOBIAN_ORIENTATION = {3: -1, 4: 1, 5: 1}


def jacobian_closed_form(d, n, params):
    a = [parse_rational(x) for x in params]
    if d == 3:
        return 27 * a[0] ** 2 * a[2] ** 4
    if d == 4:
        return (
            2 ** 10 * 3 ** 2 * a[0] ** 3 * a[2] ** 5 * a[4] ** 5
            * ((n - 2) * a[2] * a[3] - (n - 4) * a[1] * a[4] + a[2] * a[4])
        )
    if d == 5:
        return (
            2 ** 3 * 3 * 5 ** 9 * a[0] ** 4 * a[2] ** 4 * a[4] ** 8 * a[6] ** 4
            * (a[1] * a[6] - a[2] * a[5]) ** 4
        )
    raise ApolarityError(f"No Jacobian closed form for degree {d}")


@lru_cache(maxsize=None)
def symbolic_jacobian(d, n):
    """Rows are parameters a0.., columns the partitions of d in canonical order"""
    orbit = OrbitMap(d, n, free_lead=False)
    symbols = sympy.symbols(f"a0:{orbit.parameter_count}")
    coordinates = orbit.coordinates(symbols)
    matrix = sympy.Matrix(
        [[sympy.diff(coordinates[lam], s) for lam in orbit.partitions] for s in symbols]
    )
    return symbols, matrix


@dataclass(frozen=True)
class JacobianCheck:
    degree: int
    n: int
    params: tuple
    determinant: Fraction
    closed_form: Fraction

    @property
    def orientation(self):
        return JACOBIAN_ORIENTATION[self.degree]

    @property
    def expected(self):
        return self.orientation * self.closed_form

    @property
    def sign(self):
        """Observed det / closed form; None when the closed form vanishes"""
        if self.closed_form == 0:
            return None
        return self.determinant / self.closed_form

    @property
    def equal(self):
        return self.determinant == self.expected

    def to_json(self):
        return {
            "degree": self.degree,
            "n": self.n,
            "params": [format_rational(x) for x in self.params],
            "determinant": format_rational(self.determinant),
            "closed_form": format_rational(self.closed_form),
            "orientation": self.orientation,
            "sign": None if self.sign is None else int(self.sign),
            "equal": self.equal,
        }


def jacobian_det_check(d, n, params):
    """Exact det of the coordinate Jacobian at params against the oriented closed form"""
    params = tuple(parse_rational(x) for x in params)
    symbols, matrix = symbolic_jacobian(d, n)
    if len(params) != len(symbols):
        raise ApolarityError(f"Degree {d} Jacobian takes {len(symbols)} parameters, got {len(params)}")
    values = {s: sympy.Rational(x.numerator, x.denominator) for s, x in zip(symbols, params)}
    determinant = Fraction(str(matrix.subs(values).det(method="bareiss")))
    check = JacobianCheck(d, n, params, determinant, jacobian_closed_form(d, n, params))
    if not check.equal:
        logger.warning(f"❌ Jacobian mismatch d={d}, n={n} at {params}: {determinant} vs {check.expected}")
    return check


# ---------------------------------------------------------------------------
# The h_{n,4} preimage system
# ---------------------------------------------------------------------------

H4_TARGET = {(4,): 6, (3, 1): 8, (2, 2): 3, (2, 1, 1): 6, (1, 1, 1, 1): 1}  # 24·h4


def _complex_json(z):
    z = mpmath.mpc(z)
    return {"re": mpmath.nstr(z.real, 20), "im": mpmath.nstr(z.imag, 20)}


@dataclass(frozen=True)
class H4Branch:
    alpha3_seed: object
    params: tuple
    residual: float
    converged: bool
    degenerate: bool

    def to_json(self):
        return {
            "alpha3_seed": _complex_json(self.alpha3_seed),
            "params": {name: _complex_json(v) for name, v in zip(("c0", "a1", "a2", "a3", "a4"), self.params)},
            "residual": self.residual,
            "converged": self.converged,
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class H4PreimageReport:
    n: int
    tolerance: float
    branches: tuple

    @property
    def degenerate(self):
        """a2 = 0 is forced and the remaining equations are inconsistent"""
        return bool(self.branches) and all(b.degenerate for b in self.branches)

    @property
    def best_residual(self):
        return min((b.residual for b in self.branches), default=float("inf"))

    @property
    def solved(self):
        return self.best_residual < self.tolerance

    @property
    def verified(self):
        return self.degenerate or self.solved

    def to_json(self):
        return {
            "n": self.n,
            "tolerance": self.tolerance,
            "branches": [b.to_json() for b in self.branches],
            "best_residual": self.best_residual,
            "solved": self.solved,
            "degenerate": self.degenerate,
            "verified": self.verified,
        }


def _h4_residuals(orbit, params):
    coordinates = orbit.coordinates(list(params) + [1])
    return {lam: coordinates[lam] - H4_TARGET[lam] for lam in orbit.partitions}


def solve_h4_preimage(n, tol=None):
    """
    Solve c0·h1^4 + sum (a1 h1 + a2 X_i)^4 + sum_{i<j} (a3 h1 + a4 (X_i+X_j))^4 = 24·h_{n,4}
    with a4 = 1. Seeds come from the elimination quadratic
    (8n-12)·a3² + (36-4n)·a3 + (n-13) = 0 and a2 = (14-n)^{1/4}.
    """
    if n < 3:
        raise ApolarityError(f"Need n >= 3, got {n}")
    tol = settings.NUMERIC_TOLERANCE if tol is None else tol
    orbit = OrbitMap(4, n, free_lead=True)
    unknowns = [lam for lam in orbit.partitions if lam != (2, 2)]
    branches = []
    with mp.workdps(settings.WORKING_DIGITS):
        a, b, c = 8 * n - 12, 36 - 4 * n, n - 13
        root = mpmath.sqrt(mpmath.mpc(b * b - 4 * a * c))
        seeds = [(-b + root) / (2 * a)]
        if root != 0:
            seeds.append((-b - root) / (2 * a))
        a2 = mpmath.root(mpmath.mpc(14 - n), 4)
        for a3 in seeds:
            if a2 == 0:
                a1 = mpmath.mpc(0)
                degenerate = True
            else:
                a1 = (1 - (n - 4) * a3) / a2 ** 3
                degenerate = False
            c0 = (
                1 - 4 * a1 ** 3 * a2 - n * a1 ** 4 - 6 * a3 ** 2
                - 4 * (n - 1) * a3 ** 3 - binomial(n, 2) * a3 ** 4
            )
            params = (c0, a1, a2, a3)
            converged = False
            if not degenerate:
                try:
                    solution = mpmath.findroot(
                        lambda *x: [_h4_residuals(orbit, x)[lam] for lam in unknowns], params
                    )
                    params = tuple(solution[i] for i in range(4))
                    converged = True
                except (ValueError, ZeroDivisionError) as e:
                    logger.warning(f"⚠️ Newton polish did not converge for n={n}, a3={a3}: {e}")
            residual = float(max(abs(v) for v in _h4_residuals(orbit, params).values()) / 24)
            branches.append(H4Branch(a3, params + (mpmath.mpc(1),), residual, converged, degenerate))
    report = H4PreimageReport(n, tol, tuple(branches))
    if report.degenerate:
        logger.info(f"⚠️ n={n}: a2 = 0 is forced and the preimage system has no solution")
    elif report.solved:
        logger.info(f"✅ h_{{{n},4}} preimage found, residual {report.best_residual:.3e}")
    else:
        logger.warning(f"❌ h_{{{n},4}} preimage residual {report.best_residual:.3e} above {tol}")
    return report


# ---------------------------------------------------------------------------
# Dimension counts
# ---------------------------------------------------------------------------

def symmetric_dimension(d):
    """(dimension of symmetric forms of degree d, its projectivization)"""
    if d < 1:
        raise ApolarityError(f"Need d >= 1, got {d}")
    count = len(partitions(d))
    return count, count - 1


AH_EXCEPTIONS = {(3, 4), (4, 4), (5, 4), (5, 3)}


def alexander_hirschowitz_rank(n, d):
    """Generic Waring rank of degree d forms in n variables"""
    if d == 2:
        return n
    rank = -(-binomial(n + d - 1, d) // n)
    return rank + 1 if (n, d) in AH_EXCEPTIONS else rank


def generic_rank_report(d, n):
    half = d // 2
    report = {
        "d": d,
        "n": n,
        "symmetric_dimension": list(symmetric_dimension(d)),
        "generic_rank": alexander_hirschowitz_rank(n, d),
        "h_decomposition_terms": binomial(n + half, half),
        "orbit_terms": OrbitMap(d, n).term_count if d in ORBIT_BLOCKS else None,
    }
    if d in ORBIT_BLOCKS:
        report["orbit_parameters"] = OrbitMap(d, n).parameter_count
        report["orbit_dominant_possible"] = report["orbit_parameters"] >= report["symmetric_dimension"][0]
    logger.debug(f"📊 generic rank report: {report}")
    return report
