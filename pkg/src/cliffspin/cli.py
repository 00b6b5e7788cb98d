"""Command line interface: ``cliffspin tables | rep | verify``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .algebra import (
    ParseError,
    Signature,
    all_signatures,
    blade_square,
    format_blade,
    parse_multivector,
    transposition,
)
from .idempotents import parse_factor_list, primitive_idempotent
from .spinor import (
    RepMatrix,
    RepPair,
    SpinorBasis,
    format_generic_entry,
    generic_rep_matrix,
    represent,
)
from .tables import regenerate, render
from .verify import examples_suite, props_suite, tables_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _signature(args: argparse.Namespace, positional: Sequence[str]) -> tuple[Signature | None, list[str]]:
    """Signature from --signature p,q or from two leading integers."""
    rest = list(positional)
    if args.signature:
        try:
            p, q = (int(x) for x in args.signature.split(","))
        except ValueError:
            raise UsageError(f"bad --signature {args.signature!r}, expected p,q") from None
        sig = Signature(p, q)
    elif len(rest) >= 2 and rest[0].isdigit() and rest[1].isdigit():
        sig = Signature(int(rest[0]), int(rest[1]))
        rest = rest[2:]
    else:
        return None, rest
    if sig.n > args.max_dim:
        raise UsageError(f"{sig} exceeds --max-dim {args.max_dim}")
    if sig.n == 0:
        raise UsageError("dimension must be at least 1")
    return sig, rest


def _basis(sig: Signature, idempotent: str | None) -> SpinorBasis:
    if idempotent:
        try:
            factors, signs = parse_factor_list(idempotent, sig)
            f = primitive_idempotent(sig, factors, signs)
        except ValueError as exc:
            raise UsageError(f"bad --idempotent: {exc}") from None
    else:
        f = primitive_idempotent(sig)
    return SpinorBasis(f)


# --- tables ---------------------------------------------------------------------

def cmd_tables(args: argparse.Namespace) -> int:
    which = args.which
    if which == "all":
        table = None
    elif which in {"1", "2", "3", "4", "5"}:
        table = int(which)
    else:
        raise UsageError(f"unknown table {which!r}, expected 1-5 or all")
    rows = [r for r in regenerate(table, args.source) if r.p + r.q <= args.max_dim]
    sys.stdout.write(render(rows, args.format))
    return EXIT_OK


# --- rep ------------------------------------------------------------------------------

def _matrix_cells(M: RepMatrix | RepPair) -> list[list[str]]:
    if isinstance(M, RepPair):
        return [[f"({a.format()}, {b.format()})" for a, b in zip(r, s)]
                for r, s in zip(M.first.rows, M.second.rows)]
    return [[x.format() for x in r] for r in M.rows]


def _grid(cells: list[list[str]]) -> str:
    width = max(len(c) for r in cells for c in r)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def _generic_cells(S: SpinorBasis, transpose: bool) -> list[list[str]]:
    names = S.K.names()
    sig = S.sig
    # T(u) = sum_b u_b e_b^2 e_b, so [T(u)] is [u] with u_b replaced by e_b^2 u_b
    signs = {pos: blade_square(b, sig) for pos, b in enumerate(sig.blades, start=1)}

    def forms(hat: bool):
        g = generic_rep_matrix(S, hat=hat)
        if transpose:
            g = [[[{p: c * signs[p] for p, c in form.items()} for form in entry] for entry in row] for row in g]
        return g

    first = forms(False)
    if S.structure.simple:
        return [[format_generic_entry(e, names) for e in r] for r in first]
    second = forms(True)
    return [[f"({format_generic_entry(a, names)}, {format_generic_entry(b, names)})" for a, b in zip(r, s)]
            for r, s in zip(first, second)]


def cmd_rep(args: argparse.Namespace) -> int:
    sig, rest = _signature(args, args.items)
    if sig is None:
        raise UsageError("rep needs a signature: rep P Q EXPR or --signature p,q EXPR")
    if len(rest) != 1:
        raise UsageError("rep needs exactly one expression (or 'generic')")
    expr = rest[0].strip()
    S = _basis(sig, args.idempotent)
    st = S.structure
    header = {
        "signature": [sig.p, sig.q],
        "algebra": st.describe(),
        "idempotent": str(S.f),
        "transversal": [format_blade(m, sig.n) for m in S.reps],
        "K": S.K.names(),
    }
    if expr == "generic":
        cells, tcells = _generic_cells(S, False), _generic_cells(S, True)
        verdict = None
        u_text = "u = " + " + ".join(f"u{i}*{format_blade(b, sig.n)}" if b else f"u{i}"
                                      for i, b in enumerate(sig.blades, start=1))
    else:
        try:
            u = parse_multivector(expr, sig)
        except ParseError as exc:
            raise UsageError(f"cannot parse {expr!r}: {exc}") from None
        M = represent(u, S)
        MT = represent(transposition(u), S)
        verdict = MT == M.adjoint()
        cells, tcells = _matrix_cells(M), _matrix_cells(MT)
        u_text = f"u = {u.format()}"
    if args.format == "json":
        out = dict(header, u=u_text[4:], matrix=cells, transposed_matrix=tcells)
        if verdict is not None:
            out["adjoint"] = verdict
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    else:
        print(f"{sig} = {header['algebra']}")
        print(f"f = {header['idempotent']}")
        print("transversal: " + ", ".join(header["transversal"]))
        print("K basis: " + ", ".join(header["K"]))
        print(u_text)
        print("[u] =")
        print(_grid(cells))
        print("[T(u)] =")
        print(_grid(tcells))
        if verdict is not None:
            kind = {1: "transpose", 2: "complex conjugate transpose", 4: "quaternionic conjugate transpose"}
            print(f"[T(u)] equals the {kind[S.K.dim]} of [u]: {'yes' if verdict else 'NO'}")
    return EXIT_OK if verdict in (None, True) else EXIT_FAIL


# --- verify ---------------------------------------------------------------------

SUITES = ("props", "tables", "examples")


def cmd_verify(args: argparse.Namespace) -> int:
    items = list(args.items)
    suite = args.suite
    if items and items[-1] in SUITES:
        if suite and suite != items[-1]:
            raise UsageError("conflicting suite names")
        suite = items.pop()
    suite = suite or "props"
    if items == ["all"]:
        sigs: list[Signature] | None = all_signatures(args.max_dim)
    else:
        sig, rest = _signature(args, items)
        if sig is None or rest:
            raise UsageError("verify needs P Q, --signature p,q or 'all'")
        sigs = [sig]
    failed = 0
    total = 0
    for sig in sigs:
        if suite == "props":
            checks = props_suite(sig, args.seed)
        elif suite == "tables":
            checks = tables_suite(sig)
        else:
            checks = examples_suite(sig, args.seed)
        if not checks:
            continue
        print(f"== {sig}")
        for c in checks:
            print("  " + c.line())
            total += 1
            failed += not c.passed
    print(f"{total - failed}/{total} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


# --- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-dim", type=int, default=9, help="largest n = p + q accepted (default 9)")

    parser = argparse.ArgumentParser(prog="cliffspin", description="Exact spinor representations of Cl(p,q).")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", parents=[common], help="regenerate the stabilizer tables")
    t.add_argument("which", nargs="?", default="all", help="table number 1-5 or 'all'")
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.add_argument("--source", choices=("reference", "search"), default="reference",
                   help="idempotent factors from the stored rows or from the engine's own search")
    t.set_defaults(func=cmd_tables)

    r = sub.add_parser("rep", parents=[common], help="matrices of u and T(u) in the spinor representation")
    r.add_argument("items", nargs="*", metavar="P Q EXPR", help="signature and an expression or 'generic'")
    r.add_argument("--signature", help="p,q (instead of positional P Q)")
    r.add_argument("--idempotent", help="factor list with signs, e.g. 'e13,-e24'")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_rep)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("items", nargs="*", metavar="P Q | all [SUITE]")
    v.add_argument("--signature", help="p,q (instead of positional P Q)")
    v.add_argument("--suite", choices=SUITES)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _protect_expressions(list(sys.argv[1:] if argv is None else argv))
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cliffspin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _protect_expressions(argv: list[str]) -> list[str]:
    """Keep expressions such as '-e1' or '-1/2*e3' from being read as options.

    A leading space is enough for argparse to treat the token as positional,
    and the expression parser ignores it.
    """
    if "--" in argv:
        return argv
    return [" " + a if a.startswith("-") and len(a) > 1 and (a[1].isdigit() or a[1] == "e") else a
            for a in argv]


if __name__ == "__main__":
    sys.exit(main())
