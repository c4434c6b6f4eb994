"""Deterministic command-line interface.

Subcommands: verify (full certification), weyl (group statistics),
coinv (fake-degree table and invariant dimensions), tori (torus-class
report), gw (ad-hoc Grothendieck-Witt arithmetic).  Output is JSON or a
stable tab-delimited text table, byte-for-byte reproducible for
identical inputs.  Exit codes: 0 success, 1 invariant violation,
2 usage error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coinvariants import cohomology_report, fake_degree_table
from .errors import ChiTorusError, GroupTooLarge, InvalidSpec, InvariantViolation
from .gwring import FieldDescriptor, invariants, is_unit, parse_form_expression
from .pipeline import compute_report
from .rootdata import (
    CartanSpec,
    DEFAULT_ELEMENT_LIMIT,
    build_root_datum,
    degrees,
    generate_weyl,
    length_poly,
)
from .tori import tori_report

LIMIT_ENV_VAR = "CHI_TORUS_LIMIT"

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def parse_field(text: str) -> FieldDescriptor:
    """Parse a field class: real-closed, rational, alg-closed[:p], finite:q."""
    name, _, param = text.partition(":")
    name = name.strip().lower()
    try:
        if name in ("real-closed", "real", "rational", "q"):
            if param:
                raise ValueError(f"field class {name!r} takes no parameter")
            if name in ("real-closed", "real"):
                return FieldDescriptor.real_closed()
            return FieldDescriptor.rational()
        if name in ("alg-closed", "algebraically-closed", "c"):
            return FieldDescriptor.alg_closed(int(param) if param else 0)
        if name in ("finite", "finite-odd", "f"):
            if not param:
                raise ValueError("finite field needs a size, e.g. finite:5")
            return FieldDescriptor.finite_odd(int(param))
    except ValueError as err:
        raise InvalidSpec(str(err)) from err
    raise InvalidSpec(f"unknown field class {text!r}")


def _load_config(path: str) -> dict:
    if path.endswith(".toml"):
        try:
            import tomllib as toml_reader  # py311+
        except ModuleNotFoundError:
            import tomli as toml_reader
        with open(path, "rb") as handle:
            return toml_reader.load(handle)
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _spec_from_args(args) -> CartanSpec:
    values = {"series": None, "rank": None, "isogeny": "sc", "central_rank": 0}
    if getattr(args, "config", None):
        config = _load_config(args.config)
        for key in values:
            if key in config:
                values[key] = config[key]
    if args.series is not None:
        values["series"] = args.series
    if args.rank is not None:
        values["rank"] = args.rank
    if args.isogeny is not None:
        values["isogeny"] = args.isogeny
    if args.central_rank is not None:
        values["central_rank"] = args.central_rank
    if values["series"] is None or values["rank"] is None:
        raise InvalidSpec("a series and a rank are required (flags or --config)")
    return CartanSpec(
        series=values["series"],
        rank=int(values["rank"]),
        isogeny=values["isogeny"],
        central_rank=int(values["central_rank"]),
    )


def _resolve_limit(args) -> int:
    if getattr(args, "limit", None) is not None:
        return args.limit
    env = os.environ.get(LIMIT_ENV_VAR)
    if env:
        try:
            return int(env)
        except ValueError as err:
            raise InvalidSpec(f"{LIMIT_ENV_VAR}={env!r} is not an integer") from err
    return DEFAULT_ELEMENT_LIMIT


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _text_lines(payload, prefix: str = "") -> list[str]:
    """Flatten a JSON payload into stable tab-delimited key/value lines."""
    lines: list[str] = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            path = f"{prefix}.{key}" if prefix else key
            if isinstance(value, (dict, list)):
                lines.extend(_text_lines(value, path))
            else:
                lines.append(f"{path}\t{value}")
    elif isinstance(payload, list):
        if all(not isinstance(v, (dict, list)) for v in payload):
            joined = "\t".join(str(v) for v in payload)
            lines.append(f"{prefix}\t{joined}")
        else:
            for k, value in enumerate(payload):
                lines.extend(_text_lines(value, f"{prefix}[{k}]"))
    else:
        lines.append(f"{prefix}\t{payload}")
    return lines


def _emit(payload: dict, args) -> None:
    if args.format == "json":
        text = _dump_json(payload)
    else:
        text = "\n".join(_text_lines(payload)) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _maybe_figures(kind: str, tag: str, payload: dict, args) -> None:
    if not getattr(args, "figures", None):
        return
    from . import figures

    written = figures.render_report_figures(kind, tag, payload, args.figures)
    for path in written:
        print(f"figure: {path}", file=sys.stderr)


def _cmd_verify(args) -> int:
    spec = _spec_from_args(args)
    field = parse_field(args.field)
    report = compute_report(spec, field, limit=_resolve_limit(args))
    payload = report.as_dict(include_timings=args.timings)
    _emit(payload, args)
    _maybe_figures("verify", spec.label, payload, args)
    return EXIT_OK


def _cmd_weyl(args) -> int:
    spec = _spec_from_args(args)
    datum = build_root_datum(spec)
    weyl = generate_weyl(datum, _resolve_limit(args))
    poincare = length_poly(weyl)
    payload = {
        "schema": 1,
        "spec": spec.as_dict(),
        "basis": datum.basis,
        "cartan_matrix": [list(row) for row in datum.cartan_matrix],
        "order": weyl.order,
        "longest_length": weyl.longest_length,
        "degrees": list(degrees(datum, weyl)),
        "poincare_poly": list(poincare.padded(weyl.longest_length + 1)),
    }
    _emit(payload, args)
    _maybe_figures("weyl", spec.label, payload, args)
    return EXIT_OK


def _cmd_coinv(args) -> int:
    spec = _spec_from_args(args)
    datum = build_root_datum(spec)
    weyl = generate_weyl(datum, _resolve_limit(args))
    degs = degrees(datum, weyl)
    table = fake_degree_table(datum, weyl, degs)
    report = cohomology_report(datum, weyl)
    payload = {
        "schema": 1,
        "spec": spec.as_dict(),
        "degrees": list(degs),
        "invariant_dims": list(report.graded_invariant_dims),
        "rank_euler": report.rank_euler,
        "fake_degrees": [
            {"index": k, "length": el.length, "coeffs": list(poly.coeffs)}
            for k, (el, poly) in enumerate(zip(weyl.elements, table.polys))
        ],
    }
    _emit(payload, args)
    _maybe_figures("coinv", spec.label, payload, args)
    return EXIT_OK


def _cmd_tori(args) -> int:
    spec = _spec_from_args(args)
    datum = build_root_datum(spec)
    weyl = generate_weyl(datum, _resolve_limit(args))
    mode = "compact" if args.compact_form else "split"
    report = tori_report(datum, weyl=weyl, mode=mode)
    payload = dict({"schema": 1, "spec": spec.as_dict()}, **report.as_dict())
    _emit(payload, args)
    _maybe_figures("tori", spec.label, payload, args)
    return EXIT_OK


def _cmd_gw(args) -> int:
    field = parse_field(args.field)
    try:
        element = parse_form_expression(field, args.expression)
    except ValueError as err:
        raise InvalidSpec(str(err)) from err
    verdict = is_unit(element)
    payload = {
        "schema": 1,
        "expression": args.expression,
        "element": element.as_dict(),
        "invariants": invariants(element).as_dict(),
        "is_unit": verdict.unit,
        "justification": verdict.justification,
    }
    _emit(payload, args)
    return EXIT_OK


def _add_group_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--series", choices=list("ABCDEFG"), help="Cartan series")
    parser.add_argument("--rank", type=int, help="semisimple rank")
    parser.add_argument(
        "--isogeny",
        choices=["sc", "simply-connected", "adj", "adjoint"],
        default=None,
        help="isogeny type (default sc)",
    )
    parser.add_argument(
        "--central-rank",
        dest="central_rank",
        type=int,
        default=None,
        help="extra central torus directions (default 0)",
    )
    parser.add_argument("--config", help="TOML/JSON file with the group spec")
    parser.add_argument(
        "--limit",
        type=int,
        default=None,
        help=f"Weyl element limit (default {DEFAULT_ELEMENT_LIMIT}; env {LIMIT_ENV_VAR})",
    )
    parser.add_argument(
        "--figures",
        metavar="DIR",
        help="also render matplotlib figures into DIR",
    )


def _add_output_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=["json", "text"], default="json")
    parser.add_argument("--out", metavar="FILE", help="write the report to FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chitorus",
        description=(
            "Exact certification that the Euler class of the variety of "
            "maximal tori is a unit in the Grothendieck-Witt ring."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="full rank/signature/unit certification")
    _add_group_flags(p_verify)
    _add_output_flags(p_verify)
    p_verify.add_argument(
        "--field",
        default="real-closed",
        help="base field class: real-closed | rational | alg-closed[:p] | finite:q",
    )
    p_verify.add_argument(
        "--timings", action="store_true", help="include wall-clock timings (non-reproducible)"
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_weyl = sub.add_parser("weyl", help="Weyl group statistics and Poincare polynomial")
    _add_group_flags(p_weyl)
    _add_output_flags(p_weyl)
    p_weyl.set_defaults(func=_cmd_weyl)

    p_coinv = sub.add_parser("coinv", help="fake-degree table and invariant dimensions")
    _add_group_flags(p_coinv)
    _add_output_flags(p_coinv)
    p_coinv.set_defaults(func=_cmd_coinv)

    p_tori = sub.add_parser("tori", help="involution classes and compact ranks")
    _add_group_flags(p_tori)
    _add_output_flags(p_tori)
    p_tori.add_argument(
        "--compact-form",
        action="store_true",
        help="report the compact-form torus class only",
    )
    p_tori.set_defaults(func=_cmd_tori)

    p_gw = sub.add_parser("gw", help="evaluate a Grothendieck-Witt form expression")
    p_gw.add_argument("expression", help="e.g. '<1,-1>*<2> + 3 - <6>'")
    p_gw.add_argument(
        "--field",
        default="rational",
        help="base field class: real-closed | rational | alg-closed[:p] | finite:q",
    )
    _add_output_flags(p_gw)
    p_gw.set_defaults(func=_cmd_gw)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GroupTooLarge as err:
        print(f"resource limit: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidSpec as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as err:
        print(f"INVARIANT VIOLATED: {err}", file=sys.stderr)
        return EXIT_INVARIANT
    except ChiTorusError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
