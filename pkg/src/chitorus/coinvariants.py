"""Graded Weyl character of the coinvariant algebra via fake degrees.

The graded trace of an element w on the coinvariant algebra (the
symmetric algebra of the character lattice modulo positive-degree
invariants) has the exact closed form

    P_w(q) = prod_i (1 - q^{d_i}) / det(I - q * M_w)

where the d_i are the invariant degrees.  Averaging the table over the
group gives the graded dimensions of the invariant subspace; each
lattice degree k sits in real (cohomological) degree 2k, so the
alternating Euler sum over real degrees reduces to the plain sum of
those dimensions.  That sum is the rank of the Euler characteristic of
the variety of maximal tori.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._intlinalg import char_rev_coeffs
from .errors import InexactDivision
from .intpoly import IntPolynomial
from .rootdata import RootDatum, WeylElement, WeylGroup, degrees, generate_weyl, length_poly


def _molien_numerator(degs) -> IntPolynomial:
    out = IntPolynomial.one()
    for d in degs:
        out = out * (IntPolynomial.one() - IntPolynomial.monomial(d))
    return out


def fake_degree(datum: RootDatum, degs, w: WeylElement) -> IntPolynomial:
    """Graded trace of w on the coinvariant algebra, as an exact quotient.

    Raises InexactDivision when the division leaves a remainder, which
    signals degrees inconsistent with the datum or a corrupted matrix.
    """
    numerator = _molien_numerator(degs)
    denominator = IntPolynomial(char_rev_coeffs(w.matrix))
    return numerator.exact_div(denominator)


@dataclass(frozen=True)
class FakeDegreeTable:
    """Fake-degree polynomial for every group element, in element order."""

    polys: tuple[IntPolynomial, ...]

    def __len__(self) -> int:
        return len(self.polys)


def fake_degree_table(datum: RootDatum, weyl: WeylGroup, degs) -> FakeDegreeTable:
    numerator = _molien_numerator(degs)
    polys = tuple(
        numerator.exact_div(IntPolynomial(char_rev_coeffs(el.matrix)))
        for el in weyl.elements
    )
    return FakeDegreeTable(polys=polys)


def graded_invariant_dims(datum: RootDatum, weyl: WeylGroup, degs) -> tuple[int, ...]:
    """Dimension of the degree-k invariants of the coinvariant algebra.

    Coefficientwise (1/|W|) sum of the fake-degree table, padded out to
    the top degree.  A coefficient sum not divisible by the group order
    raises InexactDivision.
    """
    table = fake_degree_table(datum, weyl, degs)
    width = weyl.longest_length + 1
    total = [0] * width
    for poly in table.polys:
        for k, c in enumerate(poly.coeffs):
            total[k] += c
    dims = []
    for k, c in enumerate(total):
        q, r = divmod(c, weyl.order)
        if r:
            raise InexactDivision(
                f"coefficient sum {c} in degree {k} not divisible by |W| = {weyl.order}"
            )
        dims.append(q)
    return tuple(dims)


def rank_euler(datum: RootDatum, weyl: WeylGroup | None = None, limit: int | None = None) -> int:
    """Euler-characteristic rank: total dimension of the graded invariants.

    Every invariant sits in even real degree, so no signs appear.
    """
    if weyl is None:
        weyl = generate_weyl(datum, limit)
    degs = degrees(datum, weyl)
    return sum(graded_invariant_dims(datum, weyl, degs))


def flag_euler(weyl: WeylGroup) -> tuple[int, int]:
    """Euler characteristic of the flag manifold and of its Weyl quotient.

    The flag value is length_poly at 1 (the number of cells); dividing by
    the covering degree |W| gives the quotient value.
    """
    flag = length_poly(weyl)(1)
    quotient, rem = divmod(flag, weyl.order)
    if rem:
        raise InexactDivision("cell count not divisible by the covering degree")
    return flag, quotient


@dataclass(frozen=True)
class CohomologyReport:
    """Graded invariant dimensions and the resulting Euler rank."""

    degrees: tuple[int, ...]
    poincare_poly: tuple[int, ...]
    graded_invariant_dims: tuple[int, ...]
    total_dim_coinvariants: int
    rank_euler: int

    def as_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "poincare_poly": list(self.poincare_poly),
            "invariant_dims": list(self.graded_invariant_dims),
            "rank_euler": self.rank_euler,
        }


def cohomology_report(
    datum: RootDatum, weyl: WeylGroup | None = None, limit: int | None = None
) -> CohomologyReport:
    if weyl is None:
        weyl = generate_weyl(datum, limit)
    degs = degrees(datum, weyl)
    dims = graded_invariant_dims(datum, weyl, degs)
    poincare = length_poly(weyl)
    return CohomologyReport(
        degrees=degs,
        poincare_poly=poincare.padded(weyl.longest_length + 1),
        graded_invariant_dims=dims,
        total_dim_coinvariants=poincare(1),
        rank_euler=sum(dims),
    )
