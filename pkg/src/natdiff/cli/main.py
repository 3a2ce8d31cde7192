"""Command line front end.

    natdiff COMMAND VARIETY [options]

VARIETY is a JSON variety file or the name of a catalog entry. Exit codes:
0 success, 1 a negative verdict of ``smooth`` or ``verify``, 2 unreadable
input, 3 a violated precondition (unit or zero-dimensional ideal, ideal not
prime).
"""

from __future__ import annotations

import argparse
import json
import sys

from ..dermod import Derivation, in_natural_submodule, is_derivation, natural_generators
from ..jacobi import is_smooth, jacobi_data, point_report
from ..quotient import NotPrimeError, PreconditionError
from ..relgen import apply_operator, presentation
from ..suites import SUITES, run_suites
from .catalog import CATALOG, load_variety
from .grammar import ParseError, format_polynomial, parse_polynomial, parse_polynomial_list, parse_rational, parse_word, split_top_level
from .serialize import presentation_to_json

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


def _fmt(a) -> str:
    return format_polynomial(a.lift() if hasattr(a, "lift") else a)


def _tup(t) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _derivation_str(delta: Derivation) -> str:
    parts = [f"({_fmt(c)})*d/d{v}" for v, c in zip(delta.ring.variables, delta.coefficients) if not c.is_zero()]
    return " + ".join(parts) or "0"


def cmd_info(A, args, out):
    d = jacobi_data(A)
    smooth = "true" if is_smooth(A) else "false"
    print(f"n={A.n} m={A.m} r={d.r} dim={A.dimension} smooth={smooth} generators={len(natural_generators(A))}", file=out)


def cmd_rank(A, args, out):
    d = jacobi_data(A)
    print(f"r={d.r}", file=out)
    print("I_r: " + " ".join(_tup(t) for t in d.I_r), file=out)
    print("J_r: " + " ".join(_tup(t) for t in d.J_r), file=out)
    print("J_r+1: " + " ".join(_tup(t) for t in d.J_r1), file=out)
    print(f"pivot: i={_tup(d.pivot[0])} j={_tup(d.pivot[1])} minor={_fmt(d.minor(*d.pivot))}", file=out)


def cmd_ideals(A, args, out):
    d = jacobi_data(A)
    ks = [args.k] if args.k is not None else range(1, d.r + 1)
    for k in ks:
        if not 1 <= k <= d.r:
            raise PreconditionError(f"k={k} out of range 1..{d.r}")
        ideal = d.jacobian_ideal(k)
        gens = ", ".join(_fmt(g) for g in ideal.generators)
        gb = ", ".join(_fmt(g) for g in ideal.gb.generators)
        print(f"a_{k}: minors [{gens}] gb [{gb}]", file=out)


def cmd_smooth(A, args, out):
    ok = is_smooth(A)
    print("smooth" if ok else "singular", file=out)
    return EXIT_OK if ok else EXIT_NO


def cmd_derivations(A, args, out):
    for i, j, delta in natural_generators(A):
        print(f"d[{','.join(map(str, i))};{','.join(map(str, j))}] = {_derivation_str(delta)}", file=out)


def cmd_relations(A, args, out):
    doc = presentation(A)
    for rel in doc.rd1:
        print(f"RD1: {_fmt(rel.polynomial)} = 0", file=out)
    for rel in doc.rd2:
        g = f"d[{','.join(map(str, rel.i))};{','.join(map(str, rel.j))}]"
        x = A.variables[rel.k - 1]
        print(f"RD2: {g}*{x} = {x}*{g} + {_fmt(rel.constant)}", file=out)
    for rel in doc.rd3:
        print(f"RD3: {rel.lhs} = {rel.rhs}", file=out)


def cmd_presentation(A, args, out):
    doc = presentation(A)
    if args.json:
        print(presentation_to_json(doc), file=out)
        return
    syms = " ".join(f"d[{','.join(map(str, i))};{','.join(map(str, j))}]" for i, j in doc.d_symbols)
    print(f"generators: {' '.join(doc.variables)} {syms}".rstrip(), file=out)
    cmd_relations(A, args, out)


def cmd_verify(A, args, out):
    names = [args.suite] if args.suite else None
    if args.suite and args.suite not in SUITES:
        raise PreconditionError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    results = run_suites(A, names)
    for res in results:
        print(str(res), file=out)
        for what in res.failures:
            print(f"  failed: {what}", file=out)
    bad = [res for res in results if not res.passed]
    noun = "suite" if len(results) == 1 else "suites"
    if not bad:
        print(f"all {len(results)} property {noun} passed", file=out)
        return EXIT_OK
    print(f"{len(bad)} of {len(results)} property {noun} failed", file=out)
    return EXIT_NO


def cmd_apply(A, args, out):
    e = parse_word(args.op, A)
    a = A.project(parse_polynomial(args.to, A.ring))
    print(_fmt(apply_operator(e, a)), file=out)


def cmd_member(A, args, out):
    coeffs = [A.project(p) for p in parse_polynomial_list(args.derivation, A.ring)]
    if len(coeffs) != A.n:
        raise ParseError(f"expected {A.n} coefficients, got {len(coeffs)}", args.derivation, 0)
    if not is_derivation(A, coeffs):
        print("derivation=false natural=false", file=out)
        return EXIT_OK
    natural = in_natural_submodule(Derivation(A, tuple(coeffs)))
    print(f"derivation=true natural={'true' if natural else 'false'}", file=out)


def cmd_point(A, args, out):
    c = [parse_rational(s) for s in split_top_level(args.at, ",")]
    if len(c) != A.n:
        raise ParseError(f"expected {A.n} coordinates, got {len(c)}", args.at, 0)
    rep = point_report(A, c)
    if not rep.on_variety:
        print("on_variety=false", file=out)
        return
    print(f"on_variety=true singular={'true' if rep.singular else 'false'} tangent_dim={rep.tangent_dim}", file=out)


def cmd_catalog(args, out):
    for name, entry in CATALOG.items():
        e = entry.expected
        gens = ", ".join(entry.variety.generators)
        print(
            f"{name}: [{gens}] in {','.join(entry.variety.variables)} "
            f"r={e['r']} dim={e['dim']} smooth={'true' if e['smooth'] else 'false'} generators={e['generator_count']}",
            file=out,
        )


COMMANDS = {
    "info": cmd_info,
    "rank": cmd_rank,
    "ideals": cmd_ideals,
    "smooth": cmd_smooth,
    "derivations": cmd_derivations,
    "relations": cmd_relations,
    "presentation": cmd_presentation,
    "verify": cmd_verify,
    "apply": cmd_apply,
    "member": cmd_member,
    "point": cmd_point,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="natdiff", description="Natural derivations and differential operators on affine varieties.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "info": "one-line summary",
        "rank": "rank of the Jacobi matrix and the non-singular index sets",
        "ideals": "Jacobian ideals",
        "smooth": "Jacobian criterion; exit 0 iff smooth",
        "derivations": "natural generators of der(A)",
        "relations": "defining relations",
        "presentation": "presentation of the ring of differential operators",
        "verify": "run the property suites",
        "apply": "apply an operator word to a polynomial",
        "member": "test a vector for Der(A) and der(A) membership",
        "point": "singularity and tangent dimension at a rational point",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("variety", help="variety JSON file or catalog name")
        if name == "ideals":
            p.add_argument("--k", type=int)
        elif name == "presentation":
            p.add_argument("--json", action="store_true")
        elif name == "verify":
            p.add_argument("--suite", choices=list(SUITES))
        elif name == "apply":
            p.add_argument("--op", required=True, help='word such as "d[1;1,2]*x"')
            p.add_argument("--to", required=True, help="polynomial")
        elif name == "member":
            p.add_argument("--derivation", required=True, help='coefficients "a1,...,an"')
        elif name == "point":
            p.add_argument("--at", required=True, help='coordinates "c1,...,cn"')
    sub.add_parser("catalog", help="list the builtin varieties")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    if args.command == "catalog":
        cmd_catalog(args, out)
        return EXIT_OK
    try:
        A = load_variety(args.variety).ring()
        code = COMMANDS[args.command](A, args, out)
    except NotPrimeError as exc:
        a, b = exc.witness
        print(f"error: {exc}; witness a={_fmt(a)} b={_fmt(b)}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ParseError, FileNotFoundError, json.JSONDecodeError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK if code is None else code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
