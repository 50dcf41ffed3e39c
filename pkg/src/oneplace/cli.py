"""Command-line interface: ``oneplace <subcommand> <file> [flags]``.

A curve file is JSON with exactly one of ``implicit`` (an expression in X, Y)
or ``parametric`` (``{"x": ..., "y": ...}`` in t), an optional ``extension``
(minimal polynomial in z), and optional ``label``, ``tags`` and ``expect``.
Output is JSON with sorted keys unless ``--text`` is given.

Exit codes: 0 success, 1 usage/parse error, 2 precondition failure,
3 invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import make_field, parse_minpoly, parse_polynomial
from .algebra.resultant import squarefree_decomposition
from .config import DEFAULT_MAX_DEGREE, RunConfig
from .curves import (
    NOT_APPLICABLE,
    NOT_QH,
    classify_mu_nu_gap_one,
    implicit_equation,
    invariant_report,
    synthesize_automorphism,
    tres,
)
from .diffvals import ParametricCurve
from .errors import (
    InsufficientTruncationError,
    InvariantViolation,
    OnePlaceError,
    ParseError,
    PreconditionError,
)
from .puiseux import expansion
from .semigroup import characteristic_data, enumerate_gaps, is_symmetric, semigroup_conductor, theta

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 1, 2, 3


@dataclass(frozen=True)
class CurveFile:
    curve: object  # Polynomial or ParametricCurve
    field: object
    label: str = ""
    tags: tuple = ()
    expect: str = "ok"
    raw: dict = field(default_factory=dict, compare=False)


def parse_curve_text(text: str, name: str = "<input>") -> CurveFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{name}: not valid JSON ({exc.msg})", exc.pos) from None
    if not isinstance(data, dict):
        raise ParseError(f"{name}: a curve file is a JSON object")
    if ("implicit" in data) == ("parametric" in data):
        raise ParseError(f"{name}: exactly one of 'implicit' and 'parametric' is required")
    ext = data.get("extension")
    fld = make_field(parse_minpoly(ext) if ext else None)
    if "implicit" in data:
        curve = parse_polynomial(data["implicit"], ("X", "Y"), fld)
    else:
        par = data["parametric"]
        if not isinstance(par, dict) or set(par) != {"x", "y"}:
            raise ParseError(f"{name}: 'parametric' needs exactly the keys 'x' and 'y'")
        x = parse_polynomial(par["x"], ("t",), fld)
        y = parse_polynomial(par["y"], ("t",), fld)
        curve = ParametricCurve.from_polynomials(x, y)
    expect = data.get("expect", "ok")
    if expect not in ("ok", "precondition"):
        raise ParseError(f"{name}: 'expect' must be 'ok' or 'precondition'")
    return CurveFile(curve, fld, data.get("label", ""), tuple(data.get("tags", ())), expect, data)


def load_curve(path) -> CurveFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_curve_text(text, path.name)


def _degree(curve) -> int:
    if isinstance(curve, ParametricCurve):
        return max(curve.n, curve.m)
    return curve.degree()


def _field_header(fld):
    return fld.describe()


# ---------------------------------------------------------------------------
# subcommands; each returns a JSON-able dict


def cmd_report(cf: CurveFile, args) -> dict:
    return invariant_report(cf.curve, args.truncation).to_json()


def cmd_semigroup(cf: CurveFile, args) -> dict:
    f = implicit_equation(cf.curve)
    cd = characteristic_data(f, truncation=args.truncation)
    return {
        **cd.to_json(),
        "theta": theta(cd),
        "conductor": semigroup_conductor(cd),
        "gaps": sorted(enumerate_gaps(cd)),
        "symmetric": is_symmetric(cd),
    }


def cmd_qh_test(cf: CurveFile, args) -> dict:
    synth = synthesize_automorphism(cf.curve)
    if synth is NOT_QH:
        return {"qh": False}
    return {"qh": True, **synth.to_json(cf.field)}


def cmd_classify(cf: CurveFile, args) -> dict:
    return {"situation": classify_mu_nu_gap_one(cf.curve)}


def cmd_tres(cf: CurveFile, args) -> dict:
    if not isinstance(cf.curve, ParametricCurve):
        raise PreconditionError("tres needs a parametric curve")
    p = tres(cf.curve)
    return {
        "tres": str(p),
        "degree": p.degree(),
        "squarefree": [{"factor": str(g), "multiplicity": k} for g, k in squarefree_decomposition(p)],
    }


COMMANDS = {
    "report": cmd_report,
    "semigroup": cmd_semigroup,
    "qh-test": cmd_qh_test,
    "classify": cmd_classify,
    "tres": cmd_tres,
}


def run_file(command, cf: CurveFile, args: RunConfig) -> dict:
    if _degree(cf.curve) > args.max_degree:
        raise PreconditionError(f"degree {_degree(cf.curve)} exceeds --max-degree {args.max_degree}")
    out = COMMANDS[command](cf, args)
    if cf.field.degree > 1:
        out["field"] = _field_header(cf.field)
    return out


# ---------------------------------------------------------------------------
# corpus


def check_corpus_curve(cf: CurveFile, truncation=None) -> dict:
    """Full pipeline for one corpus curve; raises on any failure."""
    report = invariant_report(cf.curve, truncation)
    f = implicit_equation(cf.curve)
    cd = characteristic_data(f, truncation=truncation)
    enumerate_gaps(cd)  # checks the gap count against the conductor
    if not is_symmetric(cd):
        raise InvariantViolation("semigroup symmetry", "asymmetric", "symmetric")
    expansion(f, truncation)
    row = {"mu_pencil": report.mu_pencil, "nu": report.nu, "delta": report.delta, "situation": report.situation}
    if report.kind == "parametric":
        row.update(C_f=report.C_f, Z=report.Z, inexact=report.inexact_count)
    for tag in cf.tags:
        if tag in ("S1", "S2", "S3") and report.situation != tag:
            raise InvariantViolation("tagged situation", report.situation, tag)
        if tag == "qh" and not report.qh:
            raise InvariantViolation("tagged quasihomogeneous", report.qh, True)
        if tag == "not-situation" and report.situation != NOT_APPLICABLE:
            raise InvariantViolation("tagged outside the mu = nu + 1 families", report.situation, NOT_APPLICABLE)
    return row


def _corpus_job(job):
    path, truncation = job
    name = Path(path).name
    try:
        cf = load_curve(path)
    except ParseError as exc:
        return {"file": name, "status": "parse", "detail": str(exc), "ok": False}
    try:
        row = check_corpus_curve(cf, truncation)
        status, detail = "ok", ""
    except InvariantViolation as exc:
        row, status, detail = {}, "violation", str(exc)
    except (PreconditionError, InsufficientTruncationError) as exc:
        row, status, detail = {}, "precondition", str(exc)
    ok = status == cf.expect
    return {"file": name, "label": cf.label, "status": status, "expect": cf.expect, "detail": detail, "ok": ok, **row}


def run_corpus(directory, truncation=None, jobs=1):
    paths = sorted(str(p) for p in Path(directory).glob("*.curve"))
    work = [(p, truncation) for p in paths]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_corpus_job, work))
    else:
        rows = [_corpus_job(w) for w in work]
    return sorted(rows, key=lambda r: r["file"])


def _corpus_table(rows) -> str:
    cols = ["file", "status", "mu_pencil", "nu", "delta", "C_f", "Z", "inexact", "situation"]
    cells = [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
    bad = [r for r in rows if not r["ok"]]
    lines.append(f"{len(rows) - len(bad)}/{len(rows)} curves as expected")
    for r in bad:
        lines.append(f"UNEXPECTED {r['file']}: {r['status']} (expected {r.get('expect', 'ok')}) {r['detail']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# entry point


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _text(obj, indent="") -> str:
    lines = []
    for key in sorted(obj):
        val = obj[key]
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_text(val, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {json.dumps(val, ensure_ascii=False) if not isinstance(val, str) else val}")
    return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--truncation", type=int, default=None, help="override the series truncation")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--text", dest="format", action="store_const", const="text", help="plain text output")
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, help="refuse curves of larger degree")
    common.set_defaults(format="json")

    parser = _Parser(prog="oneplace", description="Invariants of plane curves with one place at infinity.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file")
    p = sub.add_parser("corpus", parents=[common])
    p.add_argument("directory")
    p.add_argument("--jobs", type=int, default=1, help="process files in parallel")
    return parser


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        args = RunConfig.from_namespace(ns)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if ns.command == "corpus":
        if not Path(ns.directory).is_dir():
            print(f"error: {ns.directory} is not a directory", file=sys.stderr)
            return EXIT_USAGE
        rows = run_corpus(ns.directory, args.truncation, args.jobs)
        if args.format == "json":
            print(dumps({"curves": rows, "all_as_expected": all(r["ok"] for r in rows)}))
        else:
            print(_corpus_table(rows))
        return EXIT_OK if all(r["ok"] for r in rows) else EXIT_INVARIANT
    try:
        cf = load_curve(ns.file)
        out = run_file(ns.command, cf, args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (PreconditionError, InsufficientTruncationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OnePlaceError as exc:  # pragma: no cover - every subclass is handled above
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    print(dumps(out) if args.format == "json" else _text(out))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
