"""Command-line surface: validate structure files, lift skew braces, build
bosonizations, split and classify projections, run the roundtrip pipeline,
and browse the bundled catalog.

Exit codes: 0 all checks pass, 1 a mathematical identity fails (the report is
still emitted), 2 malformed input (parse or shape error).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, io
from .bosonize import NotBosonizable, bosonize, is_bosonizable, verify_yd_hopf_brace
from .brace import (
    InvalidSkewBrace,
    hopf_brace_from_skew_brace,
    verify_hopf_brace,
    verify_matched_pair,
    verify_skew_brace,
)
from .fields import FieldSpec
from .hopf import NotAProjection, verify_hopf_algebra
from .linalg import DimensionMismatch, FieldMismatch
from .projection import (
    ImagesDiffer,
    NotV4,
    aux_maps,
    classify,
    nu_roundtrip,
    split_projection,
    verify_projection,
)
from .report import Report

EXIT_OK = 0
EXIT_MATH_FAIL = 1
EXIT_BAD_INPUT = 2


def _load_document(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise io.SchemaError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise io.SchemaError(f"{path}: invalid JSON at line {exc.lineno}, "
                             f"column {exc.colno}: {exc.msg}") from exc


def _parse_field(value: str | None) -> FieldSpec | None:
    if value is None:
        return None
    return FieldSpec.parse(value)


def _emit(document: dict, report: Report | None, args) -> None:
    if args.format == "json":
        text = io.dumps(document)
    else:
        lines = [f"command: {document['command']}", f"ok: {document['ok']}"]
        if report is not None:
            lines.append(report.render_text())
        for key, value in document.items():
            if key in ("schema", "command", "ok", "report", "reports"):
                continue
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _document(command: str, ok: bool, **extra) -> dict:
    doc = {"schema": io.SCHEMA_VERSION, "command": command, "ok": ok}
    doc.update(extra)
    return doc


_VERIFIERS = {
    "skew_brace": verify_skew_brace,
    "hopf_algebra": verify_hopf_algebra,
    "brace": verify_hopf_brace,
    "yd_brace": verify_yd_hopf_brace,
    "matched_pair": verify_matched_pair,
    "projection": verify_projection,
}


def _cmd_validate(args) -> int:
    payload = _load_document(args.input)
    kind, obj = io.load_payload(payload, _parse_field(args.field))
    if kind == "group":
        order, table, ident = obj
        g = catalog.GroupTable.from_rows(table, ident)
        if g.order != order:
            raise io.SchemaError(f"group table is {g.order}x{g.order}, "
                                 f"declared order {order}")
        report = catalog.verify_group_table(g)
    else:
        report = _VERIFIERS[kind](obj)
    _emit(_document("validate", report.ok, kind=kind, report=report.to_json()),
          report, args)
    return EXIT_OK if report.ok else EXIT_MATH_FAIL


def _cmd_lift(args) -> int:
    payload = _load_document(args.input)
    field = _parse_field(args.field)
    if field is None:
        raise io.SchemaError("lift requires --field (skew brace files carry no field)")
    sb = io.skew_brace_from_json(payload)
    brace = hopf_brace_from_skew_brace(sb, field)
    report = verify_hopf_brace(brace)
    _emit(_document("lift", report.ok, report=report.to_json(),
                    result=io.brace_to_json(brace)), report, args)
    return EXIT_OK if report.ok else EXIT_MATH_FAIL


def _cmd_bosonize(args) -> int:
    payload = _load_document(args.input)
    A = io.yd_brace_from_json(payload, _parse_field(args.field))
    report = is_bosonizable(A)
    if not report.ok:
        _emit(_document("bosonize", False, report=report.to_json()), report, args)
        return EXIT_MATH_FAIL
    brace = bosonize(A)
    out_report = verify_hopf_brace(brace)
    report.extend(out_report)
    _emit(_document("bosonize", report.ok, report=report.to_json(),
                    result=io.brace_to_json(brace)), report, args)
    return EXIT_OK if report.ok else EXIT_MATH_FAIL


def _split_result(S) -> dict:
    maps = {name: io.matrix_to_json(getattr(S, name))
            for name in ("q1", "q2", "i", "p1", "p2")}
    coinv = {name: io.matrix_to_json(getattr(S.coinv, name))
             for name in ("unit", "mult1", "mult2", "counit", "comult",
                          "antipode1", "antipode2", "act1", "act2", "coact")}
    return {"rank": S.rank, **maps, "coinvariants": coinv}


def _cmd_split(args) -> int:
    payload = _load_document(args.input)
    P = io.projection_from_json(payload, _parse_field(args.field))
    S = split_projection(P)
    report = Report("split")
    report.add_bool("split.invariants", True, "all splitting invariants", "hold")
    aux = aux_maps(S)
    result = _split_result(S)
    result["r_d"] = io.matrix_to_json(aux["r_d"])
    _emit(_document("split", True, report=report.to_json(), result=result),
          report, args)
    return EXIT_OK


def _cmd_classify(args) -> int:
    payload = _load_document(args.input)
    P = io.projection_from_json(payload, _parse_field(args.field))
    S = split_projection(P)
    witnesses = None
    if args.witnesses:
        wpayload = _load_document(args.witnesses)
        witnesses = io.witnesses_from_json(wpayload, P.H)
    cls = classify(S, witnesses)
    reports = {name: rep.to_json() for name, rep in cls.reports.items()}
    doc = _document("classify", cls.projection_ok, level=cls.level,
                    verdicts=cls.verdicts, rank=S.rank, reports=reports)
    if args.format == "text":
        lines = [f"command: classify", f"level: {cls.level}", f"rank: {S.rank}"]
        for name, rep in cls.reports.items():
            lines.append(rep.render_text())
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        _emit(doc, None, args)
    return EXIT_OK if cls.projection_ok else EXIT_MATH_FAIL


def _cmd_roundtrip(args) -> int:
    payload = _load_document(args.input)
    P = io.projection_from_json(payload, _parse_field(args.field))
    S = split_projection(P)
    report = nu_roundtrip(S)
    _emit(_document("roundtrip", report.ok, rank=S.rank, report=report.to_json()),
          report, args)
    return EXIT_OK if report.ok else EXIT_MATH_FAIL


def _cmd_catalog(args) -> int:
    if args.action == "list":
        rows = []
        for name in catalog.list_names():
            kind = catalog._BUILDERS[name][0]
            note = catalog._BUILDERS[name][4]
            rows.append({"name": name, "kind": kind, "note": note})
        doc = _document("catalog", True, entries=rows)
        _emit(doc, None, args)
        return EXIT_OK
    # dump
    try:
        entry = catalog.builtin(args.name)
    except catalog.UnknownName:
        raise io.SchemaError(f"unknown catalog entry {args.name!r}")
    if args.format == "text":
        text = f"{entry.name} ({entry.kind}): {entry.note}\n" + io.dumps(entry.payload)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(io.dumps(entry.payload))
        else:
            sys.stdout.write(io.dumps(entry.payload))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfbrace",
        description="Exact verification toolkit for Hopf braces, bosonizations "
                    "and split projections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="path to a structure JSON file")
        p.add_argument("--field", default=None, metavar="Q|Fp:<p>",
                       help="reinterpret structure constants over this field")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", default=None, help="write output here instead of stdout")

    p = sub.add_parser("validate", help="run the verifier matching the file's kind")
    common(p)
    p = sub.add_parser("lift", help="lift a skew brace to a Hopf brace")
    common(p)
    p = sub.add_parser("bosonize", help="bosonize a Yetter-Drinfeld Hopf brace")
    common(p)
    p = sub.add_parser("split", help="split a Hopf brace projection")
    common(p)
    p = sub.add_parser("classify", help="classify a projection (strong/v1..v4)")
    common(p)
    p.add_argument("--witnesses", default=None,
                   help="path to a witness-module file for YD verification")
    p = sub.add_parser("roundtrip", help="check the coinvariant equivalence maps")
    common(p)
    p = sub.add_parser("catalog", help="browse bundled structures")
    pc = p.add_subparsers(dest="action", required=True)
    pl = pc.add_parser("list", help="list bundled entries")
    common(pl, needs_input=False)
    pd = pc.add_parser("dump", help="dump one bundled entry as JSON")
    pd.add_argument("name")
    common(pd, needs_input=False)
    return parser


_COMMANDS = {
    "validate": _cmd_validate,
    "lift": _cmd_lift,
    "bosonize": _cmd_bosonize,
    "split": _cmd_split,
    "classify": _cmd_classify,
    "roundtrip": _cmd_roundtrip,
    "catalog": _cmd_catalog,
}

_MATH_ERRORS = (NotBosonizable, NotAProjection, ImagesDiffer, NotV4, InvalidSkewBrace)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except io.SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (DimensionMismatch, FieldMismatch, ValueError) as exc:
        if isinstance(exc, _MATH_ERRORS):
            report = exc.args[0] if exc.args and isinstance(exc.args[0], Report) else None
            doc = _document(args.command, False,
                            failure=type(exc).__name__,
                            report=report.to_json() if report else None)
            _emit(doc, report, args)
            return EXIT_MATH_FAIL
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
