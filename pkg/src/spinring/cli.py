"""Command-line front end for the engine and the verification suite.

Every subcommand that works on a ring takes exactly one input source:
``--ring FILE`` (the block format documented in the parser module) or
``--builtin even|odd`` for the two hard-coded spin presentations.  Output is
deterministic; ``--format json`` switches to a versioned structured schema.

Exit codes: 0 success or pass, 1 verification failure or negative
membership, 2 parse or usage error, 3 engine error (non-Artinian quotient,
degree mismatch, and friends).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import spindomain
from .groebner import GroebnerBasis, buchberger
from .parser import ParseError, parse_polynomial, parse_ring_file
from .poly import RingError
from .quotient import (
    PointNormalization,
    build_quotient,
    hilbert_function,
    integrate,
    multiplication_matrix,
    rank,
)

SCHEMA_VERSION = "1"


class _ArgumentParser(argparse.ArgumentParser):
    # keep usage errors to the single diagnostic line the contract asks for
    def error(self, message):
        self.exit(2, f"{self.prog}: {message}\n")


def _emit(document: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(document, indent=2))
    else:
        print(text)


class _Source:
    """One resolved input ring: context, Groebner basis, optional normalization."""

    def __init__(self, args):
        if args.builtin:
            presentation = spindomain.builtin(args.builtin)
            self.name = f"builtin-{args.builtin}"
            self.context = presentation.context
            self.ideal = presentation.ideal
            self.normalization = presentation.point_normalization
            self.basis = spindomain.groebner_basis(args.builtin)
        else:
            try:
                text = Path(args.ring).read_text()
            except OSError as exc:
                raise ParseError(f"cannot read ring file: {exc}") from None
            ring_file = parse_ring_file(text)
            self.name = ring_file.name
            self.context = ring_file.context
            self.ideal = ring_file.ideal
            self.normalization = None
            self.basis = buchberger(self.ideal)

    def parse(self, text: str):
        return parse_polynomial(text, self.context)

    def quotient(self):
        return build_quotient(self.basis)


def _point_normalization(source: _Source, spec_text: str | None) -> PointNormalization:
    if spec_text is None:
        if source.normalization is None:
            raise ParseError("integration over a ring file needs --point \"WITNESS=VALUE\"")
        return source.normalization
    witness_text, separator, value_text = spec_text.partition("=")
    if not separator:
        raise ParseError("--point takes the form \"WITNESS=VALUE\"")
    try:
        value = Fraction(value_text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad point value {value_text.strip()!r}") from None
    return PointNormalization(witness=source.parse(witness_text), value=value)


def _cmd_gb(args) -> int:
    source = _Source(args)
    elements = [str(g) for g in source.basis]
    document = {
        "schema_version": SCHEMA_VERSION,
        "ring": source.name,
        "order": source.context.order,
        "elements": elements,
    }
    _emit(document, "\n".join(elements), args.format)
    return 0


def _cmd_nf(args) -> int:
    source = _Source(args)
    reduced = source.basis.normal_form(source.parse(args.expr))
    document = {
        "schema_version": SCHEMA_VERSION,
        "ring": source.name,
        "expr": args.expr,
        "normal_form": str(reduced),
    }
    _emit(document, str(reduced), args.format)
    return 0


def _cmd_member(args) -> int:
    source = _Source(args)
    inside = source.basis.contains(source.parse(args.expr))
    document = {
        "schema_version": SCHEMA_VERSION,
        "ring": source.name,
        "expr": args.expr,
        "member": inside,
    }
    _emit(document, "yes" if inside else "no", args.format)
    return 0 if inside else 1


def _cmd_hilbert(args) -> int:
    source = _Source(args)
    dimensions = hilbert_function(source.quotient())
    document = {
        "schema_version": SCHEMA_VERSION,
        "ring": source.name,
        "dimensions": dimensions,
    }
    _emit(document, " ".join(map(str, dimensions)), args.format)
    return 0


def _cmd_integrate(args) -> int:
    source = _Source(args)
    normalization = _point_normalization(source, args.point)
    value = integrate(source.quotient(), source.parse(args.expr), normalization)
    document = {
        "schema_version": SCHEMA_VERSION,
        "ring": source.name,
        "expr": args.expr,
        "integral": str(value),
    }
    _emit(document, str(value), args.format)
    return 0


def _cmd_lefschetz(args) -> int:
    source = _Source(args)
    quotient = source.quotient()
    matrix = multiplication_matrix(quotient, source.parse(args.multiplier), args.from_degree)
    matrix_rank = rank(matrix)
    rows = [" ".join(str(entry) for entry in row) for row in matrix]
    document = {
        "schema_version": SCHEMA_VERSION,
        "ring": source.name,
        "multiplier": args.multiplier,
        "from_degree": args.from_degree,
        "matrix": [[str(entry) for entry in row] for row in matrix],
        "rank": matrix_rank,
    }
    _emit(document, "\n".join(rows + [f"rank {matrix_rank}"]), args.format)
    return 0


def _cmd_verify(args) -> int:
    report = spindomain.verify(args.component)
    _emit(report.to_document(), report.to_text(), args.format)
    return 0 if report.passed else 1


def _cmd_strata(args) -> int:
    rows = spindomain.strata(graph=args.graph, component=args.component)
    lines = []
    for s in rows:
        line = f"{s.name:<4} {s.graph}  {s.component:<5} dim {s.dimension}  {s.description}"
        if s.note:
            line += f" ({s.note})"
        lines.append(line)
    document = {
        "schema_version": SCHEMA_VERSION,
        "strata": [
            {
                "name": s.name,
                "graph": s.graph,
                "component": s.component,
                "dimension": s.dimension,
                "description": s.description,
                "note": s.note,
            }
            for s in rows
        ],
    }
    _emit(document, "\n".join(lines), args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="spinring", description=__doc__.splitlines()[0])
    subparsers = parser.add_subparsers(dest="command", required=True)

    source = _ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group(required=True)
    group.add_argument("--ring", metavar="FILE", help="ring presentation file")
    group.add_argument("--builtin", choices=spindomain.COMPONENTS, help="built-in spin presentation")

    def add(name, handler, help_text, parents=()):
        sub = subparsers.add_parser(name, parents=list(parents), help=help_text)
        sub.add_argument("--format", choices=("text", "json"), default="text")
        sub.set_defaults(handler=handler)
        return sub

    add("gb", _cmd_gb, "print the reduced Groebner basis", [source])
    nf = add("nf", _cmd_nf, "normal form of an expression", [source])
    nf.add_argument("--expr", required=True)
    member = add("member", _cmd_member, "ideal membership test (yes/no)", [source])
    member.add_argument("--expr", required=True)
    add("hilbert", _cmd_hilbert, "graded dimensions of the quotient", [source])
    integrate_cmd = add("integrate", _cmd_integrate, "integrate a top-degree class", [source])
    integrate_cmd.add_argument("--expr", required=True)
    integrate_cmd.add_argument("--point", metavar="WITNESS=VALUE", help="point normalization for ring files")
    lefschetz = add("lefschetz", _cmd_lefschetz, "multiplication matrix and its rank", [source])
    lefschetz.add_argument("--class", dest="multiplier", required=True, metavar="EXPR")
    lefschetz.add_argument("--from-degree", type=int, required=True)
    verify = add("verify", _cmd_verify, "replay the recorded verification suite")
    verify.add_argument(
        "--component",
        choices=(spindomain.EVEN, spindomain.ODD, spindomain.ALL),
        default=spindomain.ALL,
    )
    strata = add("strata", _cmd_strata, "list the stable-graph strata")
    strata.add_argument("--graph", choices=spindomain.GRAPH_TYPES)
    strata.add_argument("--component", choices=spindomain.COMPONENTS)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"spinring: {exc}", file=sys.stderr)
        return 2
    except RingError as exc:
        print(f"spinring: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
