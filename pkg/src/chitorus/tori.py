"""Real tori as involution lattices and the signature of the Euler class.

A real torus is modeled by its character lattice together with the
Galois involution tau.  Every such lattice splits into copies of the
three indecomposables: split (tau fixes a coordinate), anisotropic
(tau negates one), and Weil restriction (tau swaps a pair).  The
compact rank is the dimension of the maximal compact subtorus of the
real points, which equals the multiplicity of the eigenvalue -1 of tau.

Candidate conjugacy classes of maximal tori of the split real form are
modeled by conjugacy classes of involutions in the Weyl group; the
class whose compact rank is maximal contributes 1 to the topological
Euler characteristic of the real points and every other class
contributes 0.  With a unique maximizer the total is 1, which is the
signature of the Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._intlinalg import (
    Matrix,
    identity,
    is_identity,
    mat_add,
    mat_mul,
    mat_neg,
    mat_sub,
    rank_mod2,
    rank_rational,
)
from .errors import NonUniqueMaximizer, NotInvolution
from .rootdata import RootDatum, WeylGroup, generate_weyl


@dataclass(frozen=True)
class GaloisTorus:
    """Character lattice of rank n with a Galois involution tau."""

    n: int
    tau: Matrix

    def __post_init__(self):
        if len(self.tau) != self.n or any(len(row) != self.n for row in self.tau):
            raise NotInvolution(f"tau is not {self.n} x {self.n}")
        if not is_identity(mat_mul(self.tau, self.tau)):
            raise NotInvolution("tau squared is not the identity")


@dataclass(frozen=True)
class TorusDecomposition:
    """Multiplicities of the three indecomposable involution lattices."""

    s: int  # split
    a: int  # anisotropic
    c: int  # Weil restriction

    @property
    def compact_rank(self) -> int:
        return self.a + self.c

    def as_dict(self) -> dict:
        return {"s": self.s, "a": self.a, "c": self.c}


def decompose_torus(torus: GaloisTorus) -> TorusDecomposition:
    """Split a torus into split/anisotropic/Weil-restriction parts.

    r+ and r- are the rational kernel ranks of tau -+ I; the number of
    swap blocks c is the mod-2 rank of tau + I, and s = r+ - c,
    a = r- - c.
    """
    eye = identity(torus.n)
    r_plus = torus.n - rank_rational(mat_sub(torus.tau, eye))
    r_minus = torus.n - rank_rational(mat_add(torus.tau, eye))
    c = rank_mod2(mat_add(torus.tau, eye))
    return TorusDecomposition(s=r_plus - c, a=r_minus - c, c=c)


def compact_rank(torus: GaloisTorus) -> int:
    """Dimension of the maximal compact torus of the real points."""
    d = decompose_torus(torus)
    return d.a + d.c


@dataclass(frozen=True)
class InvolutionClass:
    """Conjugacy class of involutions acting on the character lattice."""

    representative: Matrix
    class_size: int
    compact_rank: int
    decomposition: TorusDecomposition

    def as_dict(self) -> dict:
        return {
            "rep": [list(row) for row in self.representative],
            "size": self.class_size,
            "s": self.decomposition.s,
            "a": self.decomposition.a,
            "c": self.decomposition.c,
            "rk_c": self.compact_rank,
        }


def _conjugacy_orbit(matrix: Matrix, generators) -> set[Matrix]:
    orbit = {matrix}
    frontier = [matrix]
    while frontier:
        m = frontier.pop()
        for g in generators:
            conj = mat_mul(mat_mul(g, m), g)
            if conj not in orbit:
                orbit.add(conj)
                frontier.append(conj)
    return orbit


def involution_classes(
    weyl: WeylGroup, outer_twist: Matrix | None = None
) -> tuple[InvolutionClass, ...]:
    """Conjugacy classes of involutions, in deterministic element order.

    With an outer twist t (an involution normalizing the group), the
    candidates are the composites w-then-t that square to the identity,
    grouped up to conjugation by the group.  The default twist is the
    identity, the split inner form.
    """
    n = len(weyl.elements[0].matrix)
    gens = weyl.generators()
    if outer_twist is not None:
        if not is_identity(mat_mul(outer_twist, outer_twist)):
            raise NotInvolution("outer twist does not square to the identity")
        for g in gens:
            if mat_mul(mat_mul(outer_twist, g), outer_twist) not in weyl:
                raise ValueError("outer twist does not normalize the group")

    candidates = []
    for el in weyl.elements:
        composite = el.matrix if outer_twist is None else mat_mul(el.matrix, outer_twist)
        if is_identity(mat_mul(composite, composite)):
            candidates.append(composite)

    classes: list[InvolutionClass] = []
    assigned: set[Matrix] = set()
    for composite in candidates:
        if composite in assigned:
            continue
        orbit = _conjugacy_orbit(composite, gens)
        assigned |= orbit
        decomp = decompose_torus(GaloisTorus(n=n, tau=composite))
        classes.append(
            InvolutionClass(
                representative=composite,
                class_size=len(orbit),
                compact_rank=decomp.compact_rank,
                decomposition=decomp,
            )
        )
    return tuple(classes)


def orbit_chi(cls: InvolutionClass, rk_c_g: int) -> int:
    """Per-orbit Euler characteristic: 1 at maximal compact rank, else 0."""
    if cls.compact_rank > rk_c_g:
        raise ValueError("rk_c_g is not the maximum over the report")
    return 1 if cls.compact_rank == rk_c_g else 0


@dataclass(frozen=True)
class ToriReport:
    """Involution classes with compact ranks and per-orbit Euler values."""

    classes: tuple[InvolutionClass, ...]
    rk_c_g: int
    maximizer_count: int
    orbit_chis: tuple[int, ...]
    total_chi: int
    mode: str = "split"

    def as_dict(self) -> dict:
        return {
            "classes": [
                dict(cls.as_dict(), chi=chi)
                for cls, chi in zip(self.classes, self.orbit_chis)
            ],
            "rk_c_G": self.rk_c_g,
            "maximizer_count": self.maximizer_count,
            "total_chi": self.total_chi,
            "mode": self.mode,
        }


def tori_report(
    datum: RootDatum,
    weyl: WeylGroup | None = None,
    outer_twist: Matrix | None = None,
    mode: str = "split",
    limit: int | None = None,
) -> ToriReport:
    """Enumerate torus classes and their per-orbit Euler contributions.

    mode "compact" keeps the single class of -identity when it lies in
    the group, falling back to the maximizer class otherwise.
    """
    if mode not in ("split", "compact"):
        raise ValueError(f"unknown mode {mode!r}")
    if weyl is None:
        weyl = generate_weyl(datum, limit)
    classes = involution_classes(weyl, outer_twist)
    if mode == "compact":
        minus_eye = mat_neg(identity(datum.n))
        picked = [c for c in classes if c.representative == minus_eye]
        if not picked:
            top = max(c.compact_rank for c in classes)
            picked = [c for c in classes if c.compact_rank == top][:1]
        classes = tuple(picked)
    rk_c_g = max(c.compact_rank for c in classes)
    chis = tuple(orbit_chi(c, rk_c_g) for c in classes)
    return ToriReport(
        classes=classes,
        rk_c_g=rk_c_g,
        maximizer_count=sum(chis),
        orbit_chis=chis,
        total_chi=sum(chis),
        mode=mode,
    )


def sgn_euler(
    datum: RootDatum, weyl: WeylGroup | None = None, limit: int | None = None
) -> int:
    """Signature of the Euler characteristic: total chi over torus classes.

    Raises NonUniqueMaximizer when more than one class attains the
    maximal compact rank, which would contradict the conjugacy of
    maximally compact maximal tori.
    """
    report = tori_report(datum, weyl=weyl, limit=limit)
    if report.maximizer_count != 1:
        raise NonUniqueMaximizer(
            f"{report.maximizer_count} classes attain compact rank {report.rk_c_g}"
        )
    return report.total_chi
