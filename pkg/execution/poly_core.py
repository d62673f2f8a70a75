#!/usr/bin/env python3
"""
Exact polynomial core
Sparse multivariate polynomials over the rationals (and over one quadratic
extension) for the primal ring S = k[x1..xn] and its dual E = k[X1..Xn],
with the contraction action, the Phi map and the power-sum basis.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

from sympy.utilities.iterables import partitions as _sympy_partitions

from exact_linalg import solve_square

logger = logging.getLogger(__name__)

Rational = Fraction


class ApolarityError(ValueError):
    """Invalid algebraic input or violated operation contract"""


class RingMismatchError(ApolarityError):
    """Primal and dual polynomials were mixed in a ring operation"""


class NotHomogeneousError(ApolarityError):
    """A homogeneous form was required"""


class NotSymmetricError(ApolarityError):
    """A symmetric form was required"""


# ---------------------------------------------------------------------------
# Integers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def factorial(k):
    return math.factorial(k)


@lru_cache(maxsize=None)
def binomial(top, bottom):
    """Binomial coefficient, zero outside 0 <= bottom <= top"""
    if bottom < 0 or top < 0 or bottom > top:
        return 0
    return math.comb(top, bottom)


def exponent_factorial(exp):
    """i1!·i2!·…·in! for an exponent tuple"""
    result = 1
    for e in exp:
        result *= factorial(e)
    return result


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

def parse_rational(value):
    """Parse "num/den", an int or a decimal string into a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ApolarityError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ApolarityError(f"Not a rational number: {value!r}") from e


def format_rational(value):
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class QuadExtScalar:
    """
    Element a + b·t of k(t) where t² + p·t + q = 0.

    Only elements sharing the same (p, q) can be combined. Plain rationals
    coerce to b = 0.
    """

    __slots__ = ("a", "b", "p", "q")

    def __init__(self, a, b=0, p=1, q=1):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.p = Fraction(p)
        self.q = Fraction(q)

    @classmethod
    def generator(cls, p, q):
        return cls(0, 1, p, q)

    @classmethod
    def primitive_cube_root(cls):
        """xi with xi² + xi + 1 = 0"""
        return cls(0, 1, 1, 1)

    def _coerce(self, other):
        if isinstance(other, QuadExtScalar):
            if (other.p, other.q) != (self.p, self.q):
                if other.b == 0:
                    return QuadExtScalar(other.a, 0, self.p, self.q)
                if self.b == 0:
                    return None
                raise ApolarityError("Cannot combine elements of different quadratic extensions")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExtScalar(other, 0, self.p, self.q)
        return None

    def __add__(self, other):
        other_q = self._coerce(other)
        if other_q is None:
            if isinstance(other, QuadExtScalar):
                return other + self
            return NotImplemented
        return QuadExtScalar(self.a + other_q.a, self.b + other_q.b, self.p, self.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtScalar(-self.a, -self.b, self.p, self.q)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other_q = self._coerce(other)
        if other_q is None:
            if isinstance(other, QuadExtScalar):
                return other * self
            return NotImplemented
        a, b, c, d = self.a, self.b, other_q.a, other_q.b
        bd = b * d
        return QuadExtScalar(a * c - self.q * bd, a * d + b * c - self.p * bd, self.p, self.q)

    __rmul__ = __mul__

    def conjugate(self):
        """Image under t -> -p - t (swaps the two roots)"""
        return QuadExtScalar(self.a - self.b * self.p, -self.b, self.p, self.q)

    def norm(self):
        return self.a * self.a - self.p * self.a * self.b + self.q * self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("QuadExtScalar with zero norm has no inverse")
        c = self.conjugate()
        return QuadExtScalar(c.a / n, c.b / n, self.p, self.q)

    def __truediv__(self, other):
        other_q = self._coerce(other)
        if other_q is None:
            return NotImplemented
        return self * other_q.inverse()

    def __rtruediv__(self, other):
        other_q = self._coerce(other)
        if other_q is None:
            return NotImplemented
        return other_q * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadExtScalar(1, 0, self.p, self.q)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, QuadExtScalar):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return (self.a, self.b, self.p, self.q) == (other.a, other.b, other.p, other.q)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.p, self.q))

    @property
    def is_rational(self):
        return self.b == 0

    def root_value(self):
        """Numeric value of t (the root with nonnegative imaginary part, else the larger real root)"""
        disc = float(self.p * self.p - 4 * self.q)
        if disc >= 0:
            return (-float(self.p) + math.sqrt(disc)) / 2
        return complex(-float(self.p) / 2, math.sqrt(-disc) / 2)

    def to_complex(self):
        return complex(float(self.a) + float(self.b) * self.root_value())

    def __repr__(self):
        return f"QuadExtScalar({self.a}, {self.b}; t^2+({self.p})t+({self.q}))"


def sqrt_in_extension(value):
    """
    Square root of a rational: a Fraction when value is a rational square,
    otherwise the generator t of k(t), t² = value.
    """
    value = Fraction(value)
    if value >= 0:
        num_root = math.isqrt(value.numerator)
        den_root = math.isqrt(value.denominator)
        if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
            return Fraction(num_root, den_root)
    return QuadExtScalar.generator(0, -value)


def as_scalar(value):
    if isinstance(value, QuadExtScalar):
        return value
    return parse_rational(value)


def format_scalar(value):
    """JSON form of a scalar: "num/den" or an object for extension elements"""
    if isinstance(value, QuadExtScalar):
        if value.is_rational:
            return format_rational(value.a)
        return {
            "a": format_rational(value.a),
            "b": format_rational(value.b),
            "minpoly": [format_rational(value.p), format_rational(value.q)],
        }
    return format_rational(value)


def parse_scalar(data):
    if isinstance(data, dict):
        p, q = (parse_rational(v) for v in data["minpoly"])
        return QuadExtScalar(parse_rational(data["a"]), parse_rational(data["b"]), p, q)
    return parse_rational(data)


# ---------------------------------------------------------------------------
# Exponent tuples
# ---------------------------------------------------------------------------

def grlex_key(exp):
    """Sort key; sorting with reverse=True gives graded lex with x1 > … > xn"""
    return (sum(exp), exp)


def leading_key(exp):
    """Pivot key; min() under it picks the grlex-largest exponent"""
    return (-sum(exp), tuple(-x for x in exp))


@lru_cache(maxsize=None)
def monomials(n, d):
    """All exponent tuples of total degree d in n variables, in descending grlex order"""
    if n == 0:
        return ((),) if d == 0 else ()
    if n == 1:
        return ((d,),)
    result = []
    for first in range(d, -1, -1):
        for rest in monomials(n - 1, d - first):
            result.append((first,) + rest)
    return tuple(result)


def monomial_count(n, d):
    return binomial(n + d - 1, d) if n > 0 else int(d == 0)


def unit_vector(n, i, power=1):
    return tuple(power if k == i else 0 for k in range(n))


def add_exponents(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class _SparsePolynomial:
    """Shared arithmetic for both rings; never instantiated directly"""

    __slots__ = ("n", "_terms")
    RING = None
    VARIABLE = None

    def __init__(self, n, terms=None):
        if n < 0:
            raise ApolarityError(f"Variable count must be nonnegative, got {n}")
        clean = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != n or any(e < 0 for e in exp):
                raise ApolarityError(f"Exponent {exp} does not fit {n} variables")
            coef = as_scalar(coef)
            if coef:
                clean[exp] = clean[exp] + coef if exp in clean else coef
                if not clean[exp]:
                    del clean[exp]
        self.n = n
        self._terms = clean

    @classmethod
    def _raw(cls, n, terms):
        poly = cls.__new__(cls)
        poly.n = n
        poly._terms = terms
        return poly

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, n):
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n, value):
        value = as_scalar(value)
        return cls._raw(n, {(0,) * n: value} if value else {})

    @classmethod
    def variable(cls, n, i):
        if not 0 <= i < n:
            raise ApolarityError(f"Variable index {i} out of range for n={n}")
        return cls._raw(n, {unit_vector(n, i): Fraction(1)})

    @classmethod
    def monomial(cls, exp, coef=1):
        exp = tuple(exp)
        return cls(len(exp), {exp: coef})

    @classmethod
    def linear(cls, coefficients):
        """Sum of c_i times the i-th variable"""
        coefficients = list(coefficients)
        n = len(coefficients)
        terms = {}
        for i, c in enumerate(coefficients):
            c = as_scalar(c)
            if c:
                terms[unit_vector(n, i)] = c
        return cls._raw(n, terms)

    # -- inspection ----------------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def coefficient(self, exp):
        return self._terms.get(tuple(exp), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial"""
        if not self._terms:
            return -1
        return max(sum(exp) for exp in self._terms)

    def is_homogeneous(self):
        degrees = {sum(exp) for exp in self._terms}
        return len(degrees) <= 1

    def homogeneous_degree(self):
        """Degree of a nonzero homogeneous form"""
        if not self._terms:
            raise NotHomogeneousError("The zero polynomial has no degree")
        if not self.is_homogeneous():
            raise NotHomogeneousError("Polynomial is not homogeneous")
        return sum(next(iter(self._terms)))

    def is_linear_form(self):
        return bool(self._terms) and all(sum(exp) == 1 for exp in self._terms)

    def linear_coefficients(self):
        """Coefficient vector of a linear form"""
        if not self.is_linear_form():
            raise NotHomogeneousError("Expected a nonzero linear form")
        return [self.coefficient(unit_vector(self.n, i)) for i in range(self.n)]

    def homogeneous_component(self, d):
        return type(self)._raw(self.n, {e: c for e, c in self._terms.items() if sum(e) == d})

    def is_rational(self):
        return all(not isinstance(c, QuadExtScalar) or c.is_rational for c in self._terms.values())

    def max_abs_coefficient(self):
        """Largest coefficient modulus (numeric for extension coefficients)"""
        best = 0
        for c in self._terms.values():
            size = abs(c.to_complex()) if isinstance(c, QuadExtScalar) else abs(c)
            best = max(best, size)
        return best

    # -- arithmetic ----------------------------------------------------------

    def _check_same_ring(self, other):
        if not isinstance(other, _SparsePolynomial):
            return False
        if type(other) is not type(self):
            raise RingMismatchError(
                f"Cannot combine a polynomial in {self.RING} with one in {other.RING}"
            )
        if other.n != self.n:
            raise ApolarityError(f"Variable counts differ: {self.n} vs {other.n}")
        return True

    def _as_polynomial(self, other):
        if self._check_same_ring(other):
            return other
        if isinstance(other, (int, Fraction, QuadExtScalar)) and not isinstance(other, bool):
            return type(self).constant(self.n, other)
        return None

    def __add__(self, other):
        other = self._as_polynomial(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exp, coef in other._terms.items():
            value = terms[exp] + coef if exp in terms else coef
            if value:
                terms[exp] = value
            else:
                terms.pop(exp, None)
        return type(self)._raw(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._as_polynomial(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        factor = as_scalar(factor)
        if not factor:
            return type(self).zero(self.n)
        terms = {}
        for exp, coef in self._terms.items():
            value = coef * factor
            if value:
                terms[exp] = value
        return type(self)._raw(self.n, terms)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadExtScalar)) and not isinstance(other, bool):
            return self.scale(other)
        if not self._check_same_ring(other):
            return NotImplemented
        terms = {}
        for exp_a, coef_a in self._terms.items():
            for exp_b, coef_b in other._terms.items():
                exp = add_exponents(exp_a, exp_b)
                value = coef_a * coef_b
                terms[exp] = terms[exp] + value if exp in terms else value
        return type(self)._raw(self.n, {e: c for e, c in terms.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QuadExtScalar)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, QuadExtScalar)) and not isinstance(other, bool):
            return self.scale(1 / as_scalar(other))
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = type(self).constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, _SparsePolynomial):
            return type(other) is type(self) and other.n == self.n and other._terms == self._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == type(self).constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.RING, self.n, frozenset(self._terms.items())))

    # -- substitutions -------------------------------------------------------

    def restrict_to_zero(self, index):
        """Set the variable with the given index to zero"""
        return type(self)._raw(self.n, {e: c for e, c in self._terms.items() if e[index] == 0})

    def evaluate(self, values):
        values = list(values)
        if len(values) != self.n:
            raise ApolarityError(f"Expected {self.n} values, got {len(values)}")
        total = Fraction(0)
        for exp, coef in self._terms.items():
            term = coef
            for v, e in zip(values, exp):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def permute(self, permutation):
        """Substitute variable i by variable permutation[i]"""
        terms = {}
        for exp, coef in self._terms.items():
            new_exp = [0] * self.n
            for i, e in enumerate(exp):
                new_exp[permutation[i]] += e
            terms[tuple(new_exp)] = coef
        return type(self)._raw(self.n, terms)

    def is_symmetric(self):
        for i in range(self.n - 1):
            swap = list(range(self.n))
            swap[i], swap[i + 1] = swap[i + 1], swap[i]
            if self.permute(swap) != self:
                return False
        return True

    # -- serialization -------------------------------------------------------

    def to_json(self):
        return [{"exp": list(exp), "coef": format_scalar(coef)} for exp, coef in self.sorted_terms()]

    @classmethod
    def from_json(cls, n, data):
        terms = {}
        for entry in data:
            exp = tuple(entry["exp"])
            coef = parse_scalar(entry["coef"])
            terms[exp] = terms[exp] + coef if exp in terms else coef
        return cls(n, terms)

    def __repr__(self):
        if not self._terms:
            return f"{type(self).__name__}(n={self.n}, 0)"
        parts = []
        for exp, coef in self.sorted_terms():
            mono = "*".join(
                f"{self.VARIABLE}{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exp) if e
            )
            parts.append(f"({coef})" + (f"*{mono}" if mono else ""))
        return f"{type(self).__name__}(n={self.n}, " + " + ".join(parts) + ")"


class PrimalPolynomial(_SparsePolynomial):
    """Element of S = k[x1..xn], acting on the dual ring by differentiation"""

    __slots__ = ()
    RING = "S"
    VARIABLE = "x"


class DualPolynomial(_SparsePolynomial):
    """Element of the inverse system E = k[X1..Xn]"""

    __slots__ = ()
    RING = "E"
    VARIABLE = "X"


def ring_multiply(f, g):
    """Exact product of two polynomials of the same ring"""
    if not isinstance(f, _SparsePolynomial) or not isinstance(g, _SparsePolynomial):
        raise ApolarityError("ring_multiply expects two polynomials")
    return f * g


# ---------------------------------------------------------------------------
# Apolarity action and the Phi map
# ---------------------------------------------------------------------------

def contract_monomial(a, b):
    """Coefficient c with x^a ∘ X^b = c·X^(b-a), or 0 when a does not divide b"""
    coef = 1
    for ai, bi in zip(a, b):
        if ai > bi:
            return 0
        if ai:
            coef *= factorial(bi) // factorial(bi - ai)
    return coef


def contract(f, G):
    """f ∘ G: each x_i acts on the dual ring as d/dX_i"""
    if not isinstance(f, PrimalPolynomial) or not isinstance(G, DualPolynomial):
        raise RingMismatchError("contract expects a PrimalPolynomial acting on a DualPolynomial")
    if f.n != G.n:
        raise ApolarityError(f"Variable counts differ: {f.n} vs {G.n}")
    terms = {}
    for a, coef_a in f.items():
        for b, coef_b in G.items():
            c = contract_monomial(a, b)
            if c:
                exp = tuple(bi - ai for ai, bi in zip(a, b))
                value = coef_a * coef_b * c
                terms[exp] = terms[exp] + value if exp in terms else value
    return DualPolynomial._raw(G.n, {e: c for e, c in terms.items() if c})


def pair(f, G):
    """Scalar (f ∘ G) for forms of equal degree"""
    value = contract(f, G)
    return value.coefficient((0,) * G.n)


def phi(f):
    """x^i -> i!·X^i"""
    if not isinstance(f, PrimalPolynomial):
        raise RingMismatchError("phi expects a PrimalPolynomial")
    return DualPolynomial._raw(f.n, {e: c * exponent_factorial(e) for e, c in f.items()})


def phi_inverse(G):
    """X^i -> x^i / i!"""
    if not isinstance(G, DualPolynomial):
        raise RingMismatchError("phi_inverse expects a DualPolynomial")
    return PrimalPolynomial._raw(G.n, {e: c / exponent_factorial(e) for e, c in G.items()})


# ---------------------------------------------------------------------------
# Symmetric forms
# ---------------------------------------------------------------------------

COMPLETE = "complete"
POWER_SUM = "power_sum"


def symmetric_generators(n, d, kind=COMPLETE, ring=DualPolynomial):
    """Complete symmetric h_{n,d} or power sum p_d in n variables"""
    if n < 1 or d < 0:
        raise ApolarityError(f"Need n >= 1 and d >= 0, got n={n}, d={d}")
    if kind == COMPLETE:
        return ring._raw(n, {exp: Fraction(1) for exp in monomials(n, d)})
    if kind == POWER_SUM:
        if d == 0:
            return ring.constant(n, n)
        return ring._raw(n, {unit_vector(n, i, d): Fraction(1) for i in range(n)})
    raise ApolarityError(f"Unknown symmetric generator kind: {kind!r}")


def complete_symmetric(n, d, ring=DualPolynomial):
    return symmetric_generators(n, d, COMPLETE, ring)


def power_sum(n, d, ring=DualPolynomial):
    return symmetric_generators(n, d, POWER_SUM, ring)


def sum_of_variables(n, ring=PrimalPolynomial):
    """h1 = p1, the form l = x1 + … + xn in S by default"""
    return ring.linear([1] * n)


def expand_linear_power(L, d):
    """Multinomial expansion of L^d for a linear form L"""
    if d < 0:
        raise ApolarityError("Exponent must be nonnegative")
    if L.is_zero():
        return type(L).constant(L.n, 1) if d == 0 else type(L).zero(L.n)
    coefficients = L.linear_coefficients()
    support = [i for i, c in enumerate(coefficients) if c]
    d_fact = factorial(d)
    terms = {}
    for parts in _compositions(d, len(support)):
        coef = Fraction(d_fact, exponent_factorial(parts))
        for i, k in zip(support, parts):
            if k:
                coef = coef * coefficients[i] ** k
        if coef:
            exp = [0] * L.n
            for i, k in zip(support, parts):
                exp[i] = k
            terms[tuple(exp)] = coef
    return type(L)._raw(L.n, terms)


@lru_cache(maxsize=None)
def partitions(d):
    """Partitions of d as descending tuples, in reverse lexicographic order: (d), (d-1,1), …, (1,…,1)"""
    if d == 0:
        return ((),)
    result = []
    for part in _sympy_partitions(d):
        result.append(tuple(sorted((k for k, m in part.items() for _ in range(m) if k), reverse=True)))
    return tuple(sorted(result, reverse=True))


def power_sum_monomial(n, partition, ring=DualPolynomial):
    """p_lambda = p_{lambda_1}·p_{lambda_2}·…"""
    result = ring.constant(n, 1)
    for k in partition:
        result = result * power_sum(n, k, ring)
    return result


def from_power_sum_basis(n, coordinates, ring=DualPolynomial):
    """Evaluate sum of c_lambda·p_lambda in n variables"""
    result = ring.zero(n)
    for partition, coef in coordinates.items():
        coef = as_scalar(coef)
        if coef:
            result = result + power_sum_monomial(n, tuple(partition), ring).scale(coef)
    return result


def to_power_sum_basis(F):
    """
    Coordinates of a symmetric form in the p-monomial basis.

    Returns a dict partition -> Fraction in canonical partition order.
    """
    if not isinstance(F, DualPolynomial):
        raise RingMismatchError("to_power_sum_basis expects a DualPolynomial")
    if F.is_zero():
        raise NotHomogeneousError("The zero form has no degree")
    d = F.homogeneous_degree()
    if F.n < d:
        raise ApolarityError(f"p-monomials of degree {d} are dependent in {F.n} < {d} variables")
    if not F.is_symmetric():
        raise NotSymmetricError("Form is not symmetric")

    basis = partitions(d)
    # Coefficient of X^mu in p_lambda only involves the first len(mu) variables
    local = {lam: power_sum_monomial(d, lam) for lam in basis}
    matrix = []
    rhs = []
    for mu in basis:
        exp = mu + (0,) * (d - len(mu))
        matrix.append([local[lam].coefficient(exp) for lam in basis])
        rhs.append(F.coefficient(mu + (0,) * (F.n - len(mu))))
    solution = solve_square(matrix, rhs)
    coordinates = dict(zip(basis, solution))
    logger.debug(f"🔍 p-basis coordinates of degree {d} form: {coordinates}")
    return coordinates


def symmetric_cubic(n, a0, a1, a2):
    """F = a0·p1³ + a1·n·p1p2 + a2·n²·p3"""
    a0, a1, a2 = (parse_rational(v) for v in (a0, a1, a2))
    return from_power_sum_basis(n, {(1, 1, 1): a0, (2, 1): a1 * n, (3,): a2 * n * n})


def quadratic_form_matrix(Q):
    """Symmetric matrix M with Q = sum M_ij·v_i·v_j"""
    if Q.is_zero():
        return [[Fraction(0)] * Q.n for _ in range(Q.n)]
    if Q.homogeneous_degree() != 2:
        raise NotHomogeneousError("Expected a quadratic form")
    matrix = [[Fraction(0)] * Q.n for _ in range(Q.n)]
    for exp, coef in Q.items():
        support = [i for i, e in enumerate(exp) if e]
        if len(support) == 1:
            i = support[0]
            matrix[i][i] = coef
        else:
            i, j = support
            matrix[i][j] = coef / 2
            matrix[j][i] = coef / 2
    return matrix
