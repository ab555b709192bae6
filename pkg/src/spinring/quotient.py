"""Finite-dimensional graded quotient rings and exact linear algebra on them.

``build_quotient`` turns a Groebner basis into a quotient ring presented by
its standard monomials (the monomials outside the leading-term ideal),
grouped by weighted degree.  The quotient must be Artinian, i.e. finite
dimensional; that holds exactly when the leading-term ideal contains a pure
power of every variable, and the offending variable is named when it does
not.

Integration against a point normalization turns top-degree classes into
rational numbers: fix one witness monomial with a known value, then any
top-degree class integrates to its normal-form coordinate relative to the
witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .groebner import GroebnerBasis
from .poly import ContextMismatch, Exponents, Polynomial, RingError, monomial_divides


class NonArtinianError(RingError):
    """The quotient is infinite dimensional."""


class DegreeError(RingError):
    """An operation received a class of the wrong (or mixed) degree."""


@dataclass(frozen=True)
class PointNormalization:
    """A witness class of top degree together with its assigned rational value."""

    witness: Polynomial
    value: Fraction


@dataclass(frozen=True)
class QuotientRing:
    """Polynomial ring modulo an ideal, presented by its Groebner basis.

    ``standard_monomials[d]`` lists the degree-d monomial basis of the
    quotient in descending monomial order; degrees above ``top_degree`` are
    all zero.
    """

    basis: GroebnerBasis
    standard_monomials: tuple[tuple[Exponents, ...], ...]
    top_degree: int

    @property
    def context(self):
        return self.basis.context

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.context != self.context:
            raise ContextMismatch("class does not live in this quotient's ring")
        return self.basis.normal_form(f)

    def multiply(self, f: Polynomial, g: Polynomial) -> Polynomial:
        """Product in the quotient, expressed in standard monomials."""
        return self.reduce(f * g)

    def dimension(self, degree: int) -> int:
        if 0 <= degree <= self.top_degree:
            return len(self.standard_monomials[degree])
        return 0

    def coordinates(self, f: Polynomial, degree: int) -> list[Fraction]:
        """Coordinates of f's normal form in the degree-d standard basis."""
        reduced = self.reduce(f)
        stray = [d for d in reduced.degree_support() if d != degree]
        if stray:
            raise DegreeError(
                f"class has components in degrees {stray}, expected pure degree {degree}"
            )
        return [reduced.coefficient(m) for m in self.standard_monomials[degree]]


def build_quotient(basis: GroebnerBasis) -> QuotientRing:
    """Standard-monomial presentation of the quotient by ``basis``'s ideal."""
    ctx = basis.context
    leads = basis.leading_monomials()
    bounds = []
    for i, name in enumerate(ctx.variables):
        pure = [m[i] for m in leads if all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            raise NonArtinianError(
                f"no power of {name} lies in the leading-term ideal, quotient is infinite dimensional"
            )
        bounds.append(min(pure))
    by_degree: dict[int, list[Exponents]] = {}
    for exps in itertools.product(*(range(b) for b in bounds)):
        if not any(monomial_divides(m, exps) for m in leads):
            by_degree.setdefault(ctx.degree(exps), []).append(exps)
    if not by_degree:
        # the unit ideal leaves the zero ring behind
        return QuotientRing(basis=basis, standard_monomials=((),), top_degree=0)
    top = max(by_degree)
    layers = tuple(
        tuple(sorted(by_degree.get(d, ()), key=ctx.sort_key, reverse=True))
        for d in range(top + 1)
    )
    return QuotientRing(basis=basis, standard_monomials=layers, top_degree=top)


def hilbert_function(quotient: QuotientRing) -> list[int]:
    """Dimensions of the graded pieces from degree 0 through the top degree."""
    return [len(layer) for layer in quotient.standard_monomials]


def integrate(quotient: QuotientRing, f: Polynomial, normalization: PointNormalization) -> Fraction:
    """Rational value of a top-degree class, scaled so the witness hits its value.

    The top graded piece must be one dimensional.  Zero integrates to zero;
    anything whose normal form has a component outside the top degree is an
    error rather than silently truncated.
    """
    top = quotient.top_degree
    if quotient.dimension(top) != 1:
        raise RingError(
            f"integration needs a one-dimensional top piece, got dimension {quotient.dimension(top)}"
        )
    witness = quotient.reduce(normalization.witness)
    anchor = quotient.standard_monomials[top][0]
    scale = witness.coefficient(anchor)
    if witness.is_zero or not scale or witness.degree_support() != (top,):
        raise RingError("degenerate point normalization: witness does not span the top degree")
    reduced = quotient.reduce(f)
    if reduced.is_zero:
        return Fraction(0)
    if reduced.degree_support() != (top,):
        raise DegreeError(
            f"class of degrees {list(reduced.degree_support())} is not integrable, "
            f"top degree is {top}"
        )
    return reduced.coefficient(anchor) / scale * normalization.value


def multiplication_matrix(
    quotient: QuotientRing, multiplier: Polynomial, from_degree: int
) -> list[list[Fraction]]:
    """Matrix of multiplication by a homogeneous class on a graded piece.

    Columns run over the degree-``from_degree`` standard basis, rows over the
    target-degree basis, both in their stored order.  A target degree past
    the top yields a matrix with no rows.
    """
    if multiplier.is_zero or not multiplier.is_homogeneous:
        raise DegreeError("multiplier must be homogeneous and nonzero")
    if not 0 <= from_degree <= quotient.top_degree:
        raise DegreeError(f"no graded piece in degree {from_degree}")
    target = from_degree + multiplier.weighted_degree()
    columns = [
        quotient.coordinates(multiplier * quotient.context.monomial(1, m), target)
        if target <= quotient.top_degree
        else []
        for m in quotient.standard_monomials[from_degree]
    ]
    rows = quotient.dimension(target) if target <= quotient.top_degree else 0
    return [[col[r] for col in columns] for r in range(rows)]


def pairing_matrix(
    quotient: QuotientRing, normalization: PointNormalization, degree: int
) -> list[list[Fraction]]:
    """Multiplication pairing of degree d against the complementary degree.

    Entry (i, j) integrates the product of the i-th degree-d standard
    monomial with the j-th standard monomial of degree top - d.
    """
    ctx = quotient.context
    rows = quotient.standard_monomials[degree]
    cols = quotient.standard_monomials[quotient.top_degree - degree]
    return [
        [
            integrate(quotient, ctx.monomial(1, r) * ctx.monomial(1, c), normalization)
            for c in cols
        ]
        for r in rows
    ]


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank over the rationals by fraction-free Gaussian elimination.

    Rows are first scaled to integers, then eliminated Bareiss-style so the
    intermediate entries stay integral (each division below is exact), which
    keeps coefficient growth in check.
    """
    rows: list[list[int]] = []
    for row in matrix:
        cleared = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in cleared)) if cleared else 1
        rows.append([int(x * scale) for x in cleared])
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    if any(len(r) != n_cols for r in rows):
        raise RingError("ragged matrix")
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, n_rows):
            for j in range(c + 1, n_cols):
                rows[i][j] = (rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]) // prev
            rows[i][c] = 0
        prev = rows[r][c]
        r += 1
        if r == n_rows:
            break
    return r
