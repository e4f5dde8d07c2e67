"""Command line front end: ``python -m quasischur <command> ...``.

Exit codes: 0 success, 2 parse or validation error, 3 symmetry check
failed, 4 theta applied to a superstandard tableau.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .combinat import Composition, DomainError, Partition, ValidationError, raise_chain, straighten
from .expansions import (
    F_to_schur,
    SchurExpansion,
    expansion_poly,
    jacobi_trudi_poly,
    verified_convert,
)
from .parser import Expression, ParseError, Term, parse_expression
from .tableaux import (
    StandardTableau,
    cancellation_pairing,
    descent_data,
    enumerate_syt,
    is_superstandard,
    theta_trace,
)

EXIT_USAGE = 2
EXIT_NOT_SYMMETRIC = 3
EXIT_THETA_DOMAIN = 4


class CommandError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _ints(text: str) -> list[int]:
    text = text.strip().strip("()[]")
    if not text:
        return []
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise CommandError(f"expected comma-separated integers, got {text!r}") from None


def _composition(text: str) -> Composition:
    try:
        return Composition(_ints(text))
    except ValidationError as exc:
        raise CommandError(f"invalid composition {text!r}: {exc}") from None


def _partition(text: str) -> Partition:
    try:
        return Partition(_ints(text))
    except ValidationError as exc:
        raise CommandError(f"invalid partition {text!r}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _signed_json(value) -> list[dict]:
    if value.is_zero:
        return []
    return [{"basis": "s", "index": list(value.shape), "coeff": value.sign}]


def _expression_from_json(data) -> Expression:
    if not isinstance(data, list):
        raise CommandError("expansion JSON must be an array of terms")
    terms = []
    for n, item in enumerate(data):
        try:
            basis, index, coeff = item["basis"], item["index"], item["coeff"]
        except (TypeError, KeyError):
            raise CommandError(f"term {n}: needs basis, index and coeff") from None
        if basis not in ("F", "s") or not isinstance(coeff, int):
            raise CommandError(f"term {n}: bad basis or coefficient")
        try:
            terms.append(Term(coeff, basis, Composition(index), 0, 0))
        except (ValidationError, TypeError) as exc:
            raise CommandError(f"term {n}: {exc}") from None
    return Expression(tuple(terms))


def _read_expression(args) -> Expression:
    if args.input:
        try:
            with open(args.input, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise CommandError(f"cannot read {args.input}: {exc}") from None
        return _expression_from_json(data)
    try:
        return parse_expression(args.expression or "")
    except ParseError as exc:
        raise CommandError(f"parse error at {exc}") from None


def cmd_straighten(args, out) -> int:
    comp = _composition(args.composition)
    value = straighten(comp)
    if args.json:
        out.write(_dump(_signed_json(value)) + "\n")
        return 0
    if args.trace:
        chain = raise_chain(comp)
        for step in chain.steps:
            out.write(f"{step.before} -> {step.after}  (i={step.index}, sign flips)\n")
        if chain.fixed_index is not None:
            out.write(f"{chain.steps[-1].after if chain.steps else comp}"
                      f" is fixed by i={chain.fixed_index}, so s_L = 0\n")
    out.write(f"{value}\n")
    return 0


def cmd_convert(args, out) -> int:
    expr = _read_expression(args)
    f = expr.f_part()
    if args.check_symmetric:
        report = verified_convert(f)
        if not report.symmetric:
            if args.json:
                out.write(_dump({"symmetric": False,
                                 "first_mismatch": list(report.first_mismatch),
                                 "discrepancy": report.discrepancy.to_json()}) + "\n")
            raise CommandError(str(report), EXIT_NOT_SYMMETRIC)
        g = report.schur
    else:
        g = F_to_schur(f)
    result = g + expr.s_part()
    out.write((_dump(result.to_json()) if args.json else str(result)) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    shape = _partition(args.shape)
    report = cancellation_pairing(shape)
    total = SchurExpansion(report.total)
    if args.json:
        out.write(_dump({
            "shape": list(shape),
            "tableaux": [
                {"tableau": e.tableau.to_list(),
                 "composition": list(e.composition),
                 "value": _signed_json(e.value),
                 "status": e.status,
                 "partner": e.partner,
                 "raise_index": e.raise_index}
                for e in report.entries
            ],
            "sum": total.to_json(),
            "sum_ok": report.sum_ok,
            "theta_ok": report.theta_ok,
        }) + "\n")
        return 0 if report.sum_ok else 1
    counts = report.counts
    out.write(f"shape {shape}: {len(report.entries)} standard tableaux\n")
    for n, e in enumerate(report.entries, start=1):
        if e.status == "superstandard":
            tag = "SUPERSTANDARD"
        elif e.status == "fixed":
            tag = f"FIXED (i={e.raise_index})"
        elif e.status == "undefined":
            tag = "THETA UNDEFINED"
        else:
            tag = f"pairs with #{e.partner + 1} (i={e.raise_index})"
        out.write(f"#{n} {e.tableau}  C={e.composition}  {e.value}  {tag}\n")
    summary = (f"{counts['superstandard']} superstandard, {counts['fixed']} fixed, "
               f"{counts['paired'] // 2} cancelling pairs")
    if counts["undefined"]:
        summary += f", {counts['undefined']} with theta undefined"
    out.write(summary + "\n")
    verdict = "holds" if report.sum_ok else "FAILS"
    out.write(f"sum over T of s_C(T) = {total}; identity {verdict}\n")
    return 0 if report.sum_ok else 1


def cmd_theta(args, out) -> int:
    try:
        T = StandardTableau(json.loads(args.tableau))
    except (json.JSONDecodeError, TypeError, ValidationError) as exc:
        raise CommandError(f"invalid tableau: {exc}") from None
    if is_superstandard(T):
        raise CommandError("superstandard: theta undefined", EXIT_THETA_DOMAIN)
    try:
        res = theta_trace(T)
    except DomainError as exc:
        raise CommandError(str(exc), EXIT_THETA_DOMAIN) from None
    comp = descent_data(res.image).composition
    if args.json:
        out.write(_dump({"tableau": res.image.to_list(), "composition": list(comp),
                         "raise_index": res.raise_index}) + "\n")
    else:
        out.write(f"{res.image}, C={comp}, i={res.raise_index}\n")
    return 0


def cmd_expand(args, out) -> int:
    if args.vars < 0:
        raise CommandError("--vars must be >= 0")
    expr = _read_expression(args)
    # s atoms keep their composition index; the determinant handles the sign
    poly = expansion_poly(expr.f_part(), args.vars)
    s_terms = {}
    for t in expr.terms:
        if t.basis == "s":
            s_terms[t.index] = s_terms.get(t.index, 0) + t.coeff
    for index, c in s_terms.items():
        poly = poly + jacobi_trudi_poly(index, args.vars) * c
    out.write((_dump(poly.to_json()) if args.json else str(poly)) + "\n")
    return 0


def cmd_syt(args, out) -> int:
    shape = _partition(args.shape)
    tableaux = enumerate_syt(shape)
    if args.json:
        rows = []
        for T in tableaux:
            d = descent_data(T)
            rows.append({"tableau": T.to_list(), "descents": list(d.descents),
                         "composition": list(d.composition)})
        out.write(_dump(rows) + "\n")
        return 0
    for T in tableaux:
        d = descent_data(T)
        out.write(f"{T}  descents={{{','.join(map(str, d.descents))}}}  C={d.composition}\n")
    out.write(f"{len(tableaux)} standard tableaux of shape {shape}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasischur",
        description="Convert fundamental quasi-symmetric expansions to Schur expansions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("straighten", help="normal form of s_L for a composition L")
    p.add_argument("composition", help="comma-separated parts, e.g. 1,4")
    p.add_argument("--trace", action="store_true", help="show the raising chain")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("convert", help="rewrite an expression in the Schur basis")
    p.add_argument("expression", nargs="?", default="")
    p.add_argument("--input", help="JSON expansion file")
    p.add_argument("--check-symmetric", action="store_true")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", help="check the theta cancellation for one shape")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("theta", help="apply theta to a standard tableau")
    p.add_argument("--tableau", required=True, help='JSON rows, e.g. "[[1,2],[3]]"')
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("expand", help="expand an expression as a polynomial")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("expression", nargs="?", default="")
    p.add_argument("--input", help="JSON expansion file")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("syt", help="list standard tableaux of a shape")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_syt)

    for p in sub.choices.values():
        p.add_argument("--json", action="store_true", help="emit JSON")
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CommandError as exc:
        err.write(f"{exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
