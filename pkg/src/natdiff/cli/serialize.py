"""JSON form of the presentation of D(A)."""

from __future__ import annotations

import json
from fractions import Fraction

from ..quotient import CoordinateRing
from ..relgen import Gen, Mul, OperatorExpr, PresentationDoc, Relation, RelationTerm
from .grammar import format_polynomial, parse_polynomial


def _poly(p) -> str:
    return format_polynomial(p.lift() if hasattr(p, "lift") else p)


def presentation_to_dict(doc: PresentationDoc) -> dict:
    return {
        "generators": {
            "variables": list(doc.variables),
            "d_symbols": [{"i": list(i), "j": list(j)} for i, j in doc.d_symbols],
        },
        "rd1": [_poly(rel.polynomial) for rel in doc.rd1],
        "rd2": [
            {"i": list(rel.i), "j": list(rel.j), "k": rel.k, "constant": _poly(rel.constant)}
            for rel in doc.rd2
        ],
        "rd3": [
            {
                "i": list(rel.i),
                "iprime": list(rel.iprime),
                "j": list(rel.j),
                "jprime": list(rel.jprime),
                "lhs_minor": _poly(rel.lhs_minor),
                "terms": [
                    {"sign": t.sign, "minor": _poly(t.minor), "target_j": list(t.target_j)}
                    for t in rel.terms
                ],
            }
            for rel in doc.rd3
        ],
    }


def presentation_to_json(doc: PresentationDoc) -> str:
    return json.dumps(presentation_to_dict(doc), indent=2)


def presentation_from_dict(data: dict, ring: CoordinateRing = None) -> PresentationDoc:
    """Rebuild a document; the ring defaults to the one cut out by ``rd1``."""
    variables = tuple(data["generators"]["variables"])
    gens = [parse_polynomial(s, variables) for s in data["rd1"]]
    if ring is None:
        ring = CoordinateRing(variables, gens, probe=False)
    P = ring.ring

    def res(s):
        return ring.project(parse_polynomial(s, P))

    rd1 = [
        Relation("RD1", OperatorExpr.word(Mul(ring.project(f))), OperatorExpr(), polynomial=f.in_ring(P))
        for f in gens
    ]
    syms = [(tuple(s["i"]), tuple(s["j"])) for s in data["generators"]["d_symbols"]]
    rd2 = []
    for e in data["rd2"]:
        i, j, k = tuple(e["i"]), tuple(e["j"]), int(e["k"])
        c = res(e["constant"])
        xk = Mul(ring.x(k))
        rd2.append(
            Relation(
                "RD2",
                OperatorExpr.word(Gen(i, j), xk),
                OperatorExpr.word(xk, Gen(i, j)) + OperatorExpr.word(Mul(c)),
                i=i, j=j, k=k, constant=c,
            )
        )
    rd3 = []
    for e in data["rd3"]:
        i, ip, j, jp = (tuple(e[key]) for key in ("i", "iprime", "j", "jprime"))
        lhs_minor = res(e["lhs_minor"])
        terms = [RelationTerm(int(t["sign"]), res(t["minor"]), tuple(t["target_j"])) for t in e["terms"]]
        rhs = OperatorExpr(
            tuple((Fraction(t.sign), (Mul(t.minor), Gen(i, t.target_j))) for t in terms)
        )
        rd3.append(
            Relation(
                "RD3", OperatorExpr.word(Mul(lhs_minor), Gen(ip, jp)), rhs,
                i=i, iprime=ip, j=j, jprime=jp, lhs_minor=lhs_minor, terms=terms,
            )
        )
    return PresentationDoc(variables, syms, rd1, rd2, rd3)


def presentation_from_json(text: str, ring: CoordinateRing = None) -> PresentationDoc:
    return presentation_from_dict(json.loads(text), ring)
