#!/usr/bin/env python3
"""
Apolar algebras S/ann(F)
Catalecticant matrices, Hilbert functions, graded pieces of the annihilator,
generator counts and annihilator containment.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property

from exact_linalg import EchelonBasis, bareiss_rank, nullspace, transpose
from poly_core import (
    DualPolynomial,
    NotHomogeneousError,
    PrimalPolynomial,
    RingMismatchError,
    add_exponents,
    contract,
    exponent_factorial,
    format_rational,
    leading_key,
    monomial_count,
    monomials,
    unit_vector,
)

logger = logging.getLogger(__name__)


def _form_degree(F):
    if not isinstance(F, DualPolynomial):
        raise RingMismatchError("Apolar algebras are defined by a DualPolynomial")
    return F.homogeneous_degree()


@dataclass(frozen=True)
class CatalecticantMatrix:
    """Matrix of (m_r·m_c) ∘ F over monomial bases of S_a and S_{e-a}"""

    form: DualPolynomial = field(repr=False)
    degree: int
    rows: tuple
    cols: tuple
    entries: tuple = field(repr=False)

    @cached_property
    def rank(self):
        return bareiss_rank(self.entries)

    @property
    def shape(self):
        return (len(self.rows), len(self.cols))

    def is_symmetric(self):
        if self.rows != self.cols:
            return False
        size = len(self.rows)
        return all(self.entries[i][j] == self.entries[j][i] for i in range(size) for j in range(i))

    def to_json(self):
        return {
            "degree": self.degree,
            "rows": [list(r) for r in self.rows],
            "cols": [list(c) for c in self.cols],
            "entries": [[format_rational(x) for x in row] for row in self.entries],
            "rank": self.rank,
        }


@dataclass(frozen=True)
class HilbertFunction:
    values: tuple

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __len__(self):
        return len(self.values)

    @property
    def socle_degree(self):
        return len(self.values) - 1

    @property
    def length(self):
        """Sum of the values (degree of the apolar scheme of S/ann F)"""
        return sum(self.values)

    def is_palindromic(self):
        return self.values == tuple(reversed(self.values))

    def to_json(self):
        return list(self.values)


@dataclass(frozen=True)
class GradedIdealPiece:
    degree: int
    basis: tuple
    ambient_dimension: int

    @property
    def dimension(self):
        return len(self.basis)

    def to_json(self):
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "basis": [g.to_json() for g in self.basis],
        }


def catalecticant(F, a):
    e = _form_degree(F)
    if not 0 <= a <= e:
        raise NotHomogeneousError(f"Catalecticant degree {a} outside 0..{e}")
    rows = monomials(F.n, a)
    cols = monomials(F.n, e - a)
    entries = []
    for r in rows:
        line = []
        for c in cols:
            m = add_exponents(r, c)
            line.append(F.coefficient(m) * exponent_factorial(m))
        entries.append(tuple(line))
    return CatalecticantMatrix(F, a, rows, cols, tuple(entries))


def hilbert_function(F):
    e = _form_degree(F)
    values = tuple(catalecticant(F, a).rank for a in range(e + 1))
    logger.debug(f"📊 Hilbert function of degree {e} form in {F.n} variables: {values}")
    return HilbertFunction(values)


def ann_graded_basis(F, a):
    """Canonical basis of [ann F]_a (reduced echelon form in descending grlex order)"""
    e = _form_degree(F)
    if a > e:
        basis = tuple(PrimalPolynomial.monomial(m) for m in monomials(F.n, a))
        return GradedIdealPiece(a, basis, len(basis))
    matrix = catalecticant(F, a)
    kernel = nullspace(transpose(matrix.entries), ncols=len(matrix.rows))
    basis = tuple(
        PrimalPolynomial(F.n, {m: v for m, v in zip(matrix.rows, vector) if v}) for vector in kernel
    )
    return GradedIdealPiece(a, basis, len(matrix.rows))


def _as_vector(poly):
    return dict(poly.items())


def generator_degrees(F):
    """
    Minimal generator counts of ann(F) per degree.

    beta_{1,j} = dim [ann F]_j - dim(S_1·[ann F]_{j-1}), for j = 1..e+1.
    """
    e = _form_degree(F)
    n = F.n
    counts = []
    previous = ()
    for j in range(1, e + 2):
        piece = ann_graded_basis(F, j)
        span = EchelonBasis(key=leading_key)
        products = (
            {add_exponents(m, unit_vector(n, s)): c for m, c in g.items()}
            for g in previous
            for s in range(n)
        )
        span.extend(products, stop_at=piece.dimension)
        count = piece.dimension - span.rank
        if count:
            counts.append((j, count))
        previous = piece.basis
    logger.debug(f"🔍 generator degrees: {counts}")
    return counts


def ideal_degree(F):
    return hilbert_function(F).length


def contains_in_annihilator(generators, F):
    for g in generators:
        if not g.is_zero() and not g.is_homogeneous():
            raise NotHomogeneousError("Generators must be homogeneous")
        if not contract(g, F).is_zero():
            return False
    return True


def dimension_of_graded_piece(n, a):
    return monomial_count(n, a)
