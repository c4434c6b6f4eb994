"""End-to-end verification: rank, signature, and the unit verdict.

compute_report runs the whole certification for one group and base
field: generate the Weyl group, certify rank via the coinvariant
invariants, certify the signature via torus classes when the field is
formally real, rebuild the Euler class in the Grothendieck-Witt model,
and check invertibility.  Every certified invariant is re-checked here;
a violation raises InvariantViolation, which the CLI turns into a
nonzero exit code.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dataclass_field

from .coinvariants import cohomology_report, flag_euler, CohomologyReport
from .errors import InvariantViolation
from .gwring import (
    REAL_CLOSED,
    FieldDescriptor,
    GWElement,
    UnitVerdict,
    from_rank_sgn,
    invariants,
    is_unit,
)
from .rootdata import CartanSpec, build_root_datum, generate_weyl
from .tori import ToriReport, sgn_euler, tori_report

CLAUSE_CHAR0 = "char0"
CLAUSE_CHARP_INVERTED = "charp-inverted"
#: Never asserted by this tool: strong dualizability is a hypothesis it
#: cannot decide, so the clause only ever appears as conditional text.
CLAUSE_CHARP_DUALIZABLE = "charp-dualizable"

_CHARP_NOTE = (
    "with inverted-characteristic coefficients; the integral statement "
    "(charp-dualizable) holds conditionally on strong dualizability, "
    "which this tool does not decide"
)


@dataclass
class EulerReport:
    """Full verification record for one (group, base field) pair."""

    spec: CartanSpec
    field: FieldDescriptor
    rank_chi: int
    sgn_chi: int | None
    gw_element: GWElement
    is_unit: bool
    justification: str
    theorem_clause: str
    basis: str
    weyl_order: int
    cohomology: CohomologyReport
    tori: ToriReport | None
    flag_cover_chi: int
    splitting_principle: bool
    clause_note: str | None
    timings: dict = dataclass_field(default_factory=dict)

    def as_dict(self, include_timings: bool = False) -> dict:
        out = {
            "schema": 1,
            "spec": self.spec.as_dict(),
            "field": self.field.as_dict(),
            "basis": self.basis,
            "weyl_order": self.weyl_order,
            "rank_chi": self.rank_chi,
            "sgn_chi": self.sgn_chi,
            "gw_element": self.gw_element.as_dict(),
            "gw_invariants": invariants(self.gw_element).as_dict(),
            "is_unit": self.is_unit,
            "justification": self.justification,
            "theorem_clause": self.theorem_clause,
            "clause_note": self.clause_note,
            "splitting_principle": self.splitting_principle,
            "flag_cover_chi": self.flag_cover_chi,
            "cohomology": self.cohomology.as_dict(),
            "tori": self.tori.as_dict() if self.tori is not None else None,
        }
        if include_timings:
            out["timings"] = dict(self.timings)
        return out


def _require(condition: bool, message: str):
    if not condition:
        raise InvariantViolation(message)


def compute_report(
    spec: CartanSpec, field: FieldDescriptor, limit: int | None = None
) -> EulerReport:
    """Run the full certification for one group over one base field."""
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    datum = build_root_datum(spec)
    weyl = generate_weyl(datum, limit)
    timings["weyl"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    cohomology = cohomology_report(datum, weyl)
    rank_chi = cohomology.rank_euler
    timings["rank"] = time.perf_counter() - t0

    dims = cohomology.graded_invariant_dims
    _require(
        dims[0] == 1 and all(d == 0 for d in dims[1:]),
        f"graded invariants {list(dims)} differ from [1, 0, ..., 0]",
    )
    _require(rank_chi == 1, f"rank of the Euler class is {rank_chi}, not 1")
    flag_chi, cover_chi = flag_euler(weyl)
    _require(
        cover_chi == rank_chi,
        f"Weyl-cover Euler value {cover_chi} disagrees with rank {rank_chi}",
    )

    sgn_chi: int | None = None
    tori: ToriReport | None = None
    if field.is_formally_real:
        t0 = time.perf_counter()
        tori = tori_report(datum, weyl=weyl)
        sgn_chi = sgn_euler(datum, weyl=weyl)
        timings["tori"] = time.perf_counter() - t0
        _require(sgn_chi == 1, f"signature of the Euler class is {sgn_chi}, not 1")

    t0 = time.perf_counter()
    if sgn_chi is not None:
        gw = from_rank_sgn(field, rank_chi, sgn_chi)
    else:
        gw = rank_chi * GWElement.one(field)
    verdict: UnitVerdict = is_unit(gw)
    timings["gw"] = time.perf_counter() - t0

    if field.kind == REAL_CLOSED:
        _require(
            gw == GWElement.one(field),
            "Euler class over a real closed field is not the unit form <1>",
        )
    _require(verdict.unit, "Euler class is not a unit")

    if field.char == 0:
        clause = CLAUSE_CHAR0
        note = None
    else:
        clause = CLAUSE_CHARP_INVERTED
        note = _CHARP_NOTE

    return EulerReport(
        spec=spec,
        field=field,
        rank_chi=rank_chi,
        sgn_chi=sgn_chi,
        gw_element=gw,
        is_unit=verdict.unit,
        justification=verdict.justification,
        theorem_clause=clause,
        basis=datum.basis,
        weyl_order=weyl.order,
        cohomology=cohomology,
        tori=tori,
        flag_cover_chi=cover_chi,
        splitting_principle=verdict.unit,
        clause_note=note,
        timings=timings,
    )
