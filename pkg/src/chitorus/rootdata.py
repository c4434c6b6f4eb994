"""Root data from Cartan specifications and exact Weyl group generation.

Lattice conventions.  Simply-connected data live in the fundamental-weight
basis, where the simple coroots are the dual basis and simple root j has
coordinates given by column j of the Cartan matrix.  Adjoint data live in
the simple-root basis, where the simple roots are the standard basis and
coroot i has coordinates given by row i of the Cartan matrix.  Either way
the pairing of a lattice vector with a dual vector is the plain dot
product, Weyl matrices are integral, and row r of a matrix is the image
of basis vector r (matrices act on row vectors).

The Cartan matrix entry (i, j) is the pairing of simple root j against
simple coroot i, so for G2 the matrix reads [[2, -3], [-1, 2]].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from ._intlinalg import Matrix, identity, mat_mul
from .errors import FactorizationFailed, GroupTooLarge, IndexOutOfRange, InexactDivision, InvalidSpec
from .intpoly import IntPolynomial

#: Hard cap on generated elements; covers every rank <= 6 group
#: (E6 has 51840 elements) while rejecting E7 and E8.
DEFAULT_ELEMENT_LIMIT = 60_000

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_ISOGENY_ALIASES = {
    "sc": "sc",
    "simply-connected": "sc",
    "simply_connected": "sc",
    "adj": "adj",
    "adjoint": "adj",
}

_BASIS_TAG = {"sc": "fundamental-weight", "adj": "simple-root"}


@dataclass(frozen=True)
class CartanSpec:
    """Series/rank/isogeny triple plus extra central torus directions."""

    series: str
    rank: int
    isogeny: str = "sc"
    central_rank: int = 0

    def __post_init__(self):
        series = str(self.series).upper()
        object.__setattr__(self, "series", series)
        iso = _ISOGENY_ALIASES.get(str(self.isogeny).lower())
        if iso is None:
            raise InvalidSpec(f"unknown isogeny {self.isogeny!r}")
        object.__setattr__(self, "isogeny", iso)
        if series not in _RANK_RANGE:
            raise InvalidSpec(f"unknown series {self.series!r}")
        lo, hi = _RANK_RANGE[series]
        if not isinstance(self.rank, int) or self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidSpec(f"rank {self.rank} invalid for series {series}")
        if not isinstance(self.central_rank, int) or self.central_rank < 0:
            raise InvalidSpec(f"central_rank must be a non-negative integer")

    @property
    def label(self) -> str:
        tag = f"{self.series}{self.rank}{self.isogeny}"
        if self.central_rank:
            tag += f"+z{self.central_rank}"
        return tag

    def as_dict(self) -> dict:
        return {
            "series": self.series,
            "rank": self.rank,
            "isogeny": self.isogeny,
            "central_rank": self.central_rank,
        }


@dataclass(frozen=True)
class RootDatum:
    """Character lattice with simple roots, coroots, and their pairing."""

    spec: CartanSpec
    n: int
    simple_roots: tuple[tuple[int, ...], ...]
    simple_coroots: tuple[tuple[int, ...], ...]
    cartan_matrix: Matrix
    basis: str

    @property
    def semisimple_rank(self) -> int:
        return self.spec.rank

    def pairing(self, x: tuple[int, ...], coroot: tuple[int, ...]) -> int:
        return sum(a * b for a, b in zip(x, coroot))


@dataclass(frozen=True)
class WeylElement:
    """Integer matrix acting on the character lattice, with its length."""

    matrix: Matrix
    length: int


def cartan_matrix(series: str, rank: int) -> Matrix:
    """Standard Cartan matrix of the series, entry (i, j) = <alpha_j, alpha_i^v>."""
    r = rank
    c = [[2 if i == j else 0 for j in range(r)] for i in range(r)]

    def chain(i, j):
        c[i][j] = -1
        c[j][i] = -1

    if series in ("A", "B", "C"):
        for i in range(r - 1):
            chain(i, i + 1)
        if series == "B":
            c[r - 1][r - 2] = -2  # last simple root short
        elif series == "C":
            c[r - 2][r - 1] = -2  # last simple root long
    elif series == "D":
        for i in range(r - 2):
            chain(i, i + 1)
        chain(r - 3, r - 1)
    elif series == "E":
        # Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4.
        edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if r >= 7:
            edges.append((5, 6))
        if r == 8:
            edges.append((6, 7))
        for i, j in edges:
            chain(i, j)
    elif series == "F":
        for i in range(3):
            chain(i, i + 1)
        c[2][1] = -2  # roots 3,4 short
    elif series == "G":
        c[0][1] = -3  # root 1 short
        c[1][0] = -1
    else:
        raise InvalidSpec(f"unknown series {series!r}")
    return tuple(tuple(row) for row in c)


def weyl_order(series: str, rank: int) -> int:
    """Order of the Weyl group, used as the generation-limit estimate."""
    r = rank
    if series == "A":
        return factorial(r + 1)
    if series in ("B", "C"):
        return 2**r * factorial(r)
    if series == "D":
        return 2 ** (r - 1) * factorial(r)
    if series == "E":
        return {6: 51_840, 7: 2_903_040, 8: 696_729_600}[r]
    if series == "F":
        return 1152
    if series == "G":
        return 12
    raise InvalidSpec(f"unknown series {series!r}")


def build_root_datum(spec: CartanSpec) -> RootDatum:
    """Realize the spec on an explicit lattice with central zeros appended."""
    r = spec.rank
    z = spec.central_rank
    n = r + z
    cartan = cartan_matrix(spec.series, r)
    pad = (0,) * z
    if spec.isogeny == "sc":
        # Roots expand in fundamental weights via Cartan columns; the dual
        # basis of the weights is the coroots themselves.
        roots = tuple(tuple(cartan[i][j] for i in range(r)) + pad for j in range(r))
        coroots = tuple(
            tuple(1 if i == j else 0 for i in range(r)) + pad for j in range(r)
        )
    else:
        roots = tuple(
            tuple(1 if i == j else 0 for i in range(r)) + pad for j in range(r)
        )
        coroots = tuple(tuple(cartan[j][i] for i in range(r)) + pad for j in range(r))
    return RootDatum(
        spec=spec,
        n=n,
        simple_roots=roots,
        simple_coroots=coroots,
        cartan_matrix=cartan,
        basis=_BASIS_TAG[spec.isogeny],
    )


def simple_reflection(datum: RootDatum, i: int) -> WeylElement:
    """Reflection in simple root i (1-based): x -> x - <x, coroot_i> root_i."""
    if not 1 <= i <= datum.semisimple_rank:
        raise IndexOutOfRange(
            f"reflection index {i} outside 1..{datum.semisimple_rank}"
        )
    root = datum.simple_roots[i - 1]
    coroot = datum.simple_coroots[i - 1]
    n = datum.n
    matrix = tuple(
        tuple((1 if r == c else 0) - coroot[r] * root[c] for c in range(n))
        for r in range(n)
    )
    return WeylElement(matrix=matrix, length=1)


class WeylGroup:
    """Complete list of Weyl elements with exact lengths and inverses.

    Element order is deterministic: breadth-first layers from the
    identity, each layer sorted lexicographically by matrix.
    """

    def __init__(self, elements, longest_element, generator_indices, inverse_indices):
        self.elements: tuple[WeylElement, ...] = tuple(elements)
        self.order: int = len(self.elements)
        self.longest_element: int = longest_element
        self.generator_indices: tuple[int, ...] = tuple(generator_indices)
        self._inverse: tuple[int, ...] = tuple(inverse_indices)
        self._index: dict[Matrix, int] = {
            el.matrix: k for k, el in enumerate(self.elements)
        }

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, matrix: Matrix) -> bool:
        return matrix in self._index

    def index_of(self, matrix: Matrix) -> int:
        return self._index[matrix]

    def inverse_of(self, index: int) -> int:
        return self._inverse[index]

    @property
    def longest_length(self) -> int:
        return self.elements[self.longest_element].length

    def generators(self) -> tuple[Matrix, ...]:
        return tuple(self.elements[i].matrix for i in self.generator_indices)


def generate_weyl(datum: RootDatum, limit: int | None = None) -> WeylGroup:
    """Breadth-first closure of the simple reflections.

    Lengths are exact BFS distances from the identity.  Raises
    GroupTooLarge when the known order of the series exceeds the limit,
    or if closure would pass the limit.
    """
    if limit is None:
        limit = DEFAULT_ELEMENT_LIMIT
    estimate = weyl_order(datum.spec.series, datum.spec.rank)
    if estimate > limit:
        raise GroupTooLarge(
            f"|W({datum.spec.series}{datum.spec.rank})| = {estimate} "
            f"exceeds the element limit {limit}"
        )
    gens = [simple_reflection(datum, i).matrix for i in range(1, datum.semisimple_rank + 1)]
    ident = identity(datum.n)

    matrices: list[Matrix] = [ident]
    lengths: list[int] = [0]
    inverse_mats: list[Matrix] = [ident]
    seen: dict[Matrix, int] = {ident: 0}

    frontier = [0]
    depth = 0
    while frontier:
        depth += 1
        discovered: dict[Matrix, Matrix] = {}  # new matrix -> its inverse
        for idx in frontier:
            m = matrices[idx]
            m_inv = inverse_mats[idx]
            for g in gens:
                prod = mat_mul(m, g)
                if prod in seen or prod in discovered:
                    continue
                discovered[prod] = mat_mul(g, m_inv)
        if len(matrices) + len(discovered) > limit:
            raise GroupTooLarge(
                f"group closure passed the element limit {limit}"
            )
        frontier = []
        for prod in sorted(discovered):
            k = len(matrices)
            seen[prod] = k
            matrices.append(prod)
            lengths.append(depth)
            inverse_mats.append(discovered[prod])
            frontier.append(k)

    elements = [WeylElement(matrix=m, length=l) for m, l in zip(matrices, lengths)]
    max_length = lengths[-1]
    longest = [k for k, l in enumerate(lengths) if l == max_length]
    assert len(longest) == 1, "closure produced no unique longest element"
    inverse_indices = [seen[m] for m in inverse_mats]
    generator_indices = [seen[g] for g in gens]
    return WeylGroup(elements, longest[0], generator_indices, inverse_indices)


def length_poly(weyl: WeylGroup) -> IntPolynomial:
    """Poincare polynomial: sum over the group of q^length."""
    counts = [0] * (weyl.longest_length + 1)
    for el in weyl.elements:
        counts[el.length] += 1
    return IntPolynomial(counts)


def degrees(datum: RootDatum, weyl: WeylGroup) -> tuple[int, ...]:
    """Invariant degrees by greedy q-integer factorization of length_poly.

    Strips the largest q-integer [d]_q dividing the remaining polynomial
    until the constant 1 is reached, then appends one degree 1 per
    central direction.  A stuck factorization means the group data is
    corrupted and raises FactorizationFailed.
    """
    remaining = length_poly(weyl)
    degs: list[int] = []
    while remaining.degree > 0:
        for d in range(remaining.degree + 1, 1, -1):
            try:
                quotient = remaining.exact_div(IntPolynomial.q_integer(d))
            except InexactDivision:
                continue
            remaining = quotient
            degs.append(d)
            break
        else:
            raise FactorizationFailed(
                f"length polynomial stuck at {list(remaining.coeffs)}"
            )
    if remaining != IntPolynomial.one():
        raise FactorizationFailed("length polynomial did not reduce to 1")
    degs.extend([1] * datum.spec.central_rank)
    return tuple(sorted(degs))
