"""Defining relations of Der(A) and the presentation of D(A), verified by action.

Operators are linear combinations of words in two kinds of atoms,
multiplication by an element of A (:class:`Mul`) and a natural derivation
(:class:`Gen`). Words act right to left. Two operators of order at most i
are equal iff they agree on all monomials of degree at most i, so every
relation is checked on that finite set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .dermod import Derivation, apply, natural_derivation
from .jacobi import jacobi_data, sort_with_sign
from .polyring import Polynomial
from .quotient import CoordinateRing, LocalizedElement, Residue, localized_in_A

DEFAULT_ORDER_CAP = 4


@dataclass(frozen=True)
class Mul:
    a: Residue

    def __str__(self):
        return f"({self.a})"


@dataclass(frozen=True)
class Gen:
    i: tuple
    j: tuple

    def __str__(self):
        return f"d[{','.join(map(str, self.i))};{','.join(map(str, self.j))}]"


@dataclass(frozen=True)
class OperatorExpr:
    """sum of coefficient * word; a word is a tuple of atoms."""

    terms: tuple = ()

    @classmethod
    def word(cls, *atoms, coeff=1) -> "OperatorExpr":
        return cls(((Fraction(coeff), tuple(atoms)),))

    @property
    def order_bound(self) -> int:
        return max((sum(isinstance(a, Gen) for a in w) for _, w in self.terms), default=0)

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        return OperatorExpr(self.terms + other.terms)

    def __sub__(self, other: "OperatorExpr") -> "OperatorExpr":
        return self + other.scale(-1)

    def scale(self, c) -> "OperatorExpr":
        return OperatorExpr(tuple((Fraction(c) * k, w) for k, w in self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for c, w in self.terms:
            body = "*".join(str(a) for a in w) or "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


@dataclass
class RelationTerm:
    sign: int
    minor: Residue
    target_j: tuple


@dataclass
class Relation:
    kind: str  # DEREL, RD1, RD2 or RD3
    lhs: OperatorExpr
    rhs: OperatorExpr
    i: tuple = ()
    iprime: tuple = ()
    j: tuple = ()
    jprime: tuple = ()
    k: Optional[int] = None
    lhs_minor: Optional[Residue] = None
    terms: list = field(default_factory=list)
    constant: Optional[Residue] = None
    polynomial: Optional[Polynomial] = None

    def __str__(self):
        return f"{self.kind}: {self.lhs} = {self.rhs}"


def _derivation(ring: CoordinateRing, atom: Gen) -> Derivation:
    cache = ring.cache.setdefault("gen-derivations", {})
    key = (atom.i, atom.j)
    if key not in cache:
        cache[key] = natural_derivation(ring, atom.i, atom.j)
    return cache[key]


def apply_operator(e: OperatorExpr, a: Residue) -> Residue:
    ring = a.ring
    total = ring.zero
    for c, word in e.terms:
        v = a
        for atom in reversed(word):
            if isinstance(atom, Mul):
                if atom.a.ring is not ring and not ring.same_ideal(atom.a.ring):
                    raise ValueError("operator and element belong to different rings")
                v = atom.a * v
            else:
                v = apply(_derivation(ring, atom), v)
            if v.is_zero():
                break
        total = total + v * c
    return total


def operators_equal_up_to_order(ring: CoordinateRing, e1: OperatorExpr, e2: OperatorExpr, i: int) -> bool:
    """Compare two operators of order <= i on all monomials of degree <= i."""
    if e1.order_bound > i or e2.order_bound > i:
        raise ValueError(f"operator order exceeds the bound {i}")
    diff = e1 - e2
    return all(apply_operator(diff, ring.monomial(mono)).is_zero() for mono in ring.ring.monomials_up_to(i))


def rd2_constant(ring: CoordinateRing, i, j, k: int) -> Residue:
    """d_{i,j}(x_k): the signed minor with column k deleted, or zero."""
    d = jacobi_data(ring)
    i, j = tuple(i), tuple(j)
    if len(i) != d.r or len(j) != d.r + 1:
        raise ValueError(f"expected |i|={d.r}, |j|={d.r + 1}")
    if k not in j:
        return ring.zero
    s = j.index(k) + 1
    val = d.minor(i, j[: s - 1] + j[s:])
    return -val if (d.r + 1 + s) % 2 else val


def _derel(ring, i, ip, j, jp, kind="DEREL") -> Relation:
    d = jacobi_data(ring)
    r = d.r
    lhs_minor = d.minor(i, j)
    lhs = OperatorExpr.word(Mul(lhs_minor), Gen(ip, jp))
    terms = []
    rhs_terms = []
    for nu, col in enumerate(jp, start=1):
        if col in j:
            continue
        target, eps = sort_with_sign(j + (col,))
        sign = (-1) ** (r + 1 + nu) * eps
        mnr = d.minor(ip, jp[: nu - 1] + jp[nu:])
        terms.append(RelationTerm(sign, mnr, target))
        rhs_terms.append((Fraction(sign), (Mul(mnr), Gen(i, target))))
    return Relation(
        kind, lhs, OperatorExpr(tuple(rhs_terms)), i=i, iprime=ip, j=j, jprime=jp,
        lhs_minor=lhs_minor, terms=terms,
    )


def derel_instances(ring: CoordinateRing, kind: str = "DEREL") -> list:
    d = jacobi_data(ring)
    return [
        _derel(ring, i, ip, j, jp, kind)
        for i in d.I_r
        for ip in d.I_r
        for j in d.J_r
        for jp in d.J_r1
    ]


def verify_derel(ring: CoordinateRing, rel: Relation) -> bool:
    """Compare both sides as coefficient vectors in A^n."""
    if rel.kind not in ("DEREL", "RD3"):
        raise ValueError(f"not a derivation relation: {rel.kind}")
    lhs = rel.lhs_minor * natural_derivation(ring, rel.iprime, rel.jprime)
    acc = [ring.zero] * ring.n
    for t in rel.terms:
        rhs = natural_derivation(ring, rel.i, t.target_j)
        acc = [a + t.minor * c * t.sign for a, c in zip(acc, rhs.coefficients)]
    return tuple(acc) == lhs.coefficients


@dataclass
class PresentationDoc:
    variables: tuple
    d_symbols: list  # (i, j) pairs
    rd1: list  # Relations of kind RD1
    rd2: list
    rd3: list


def presentation(ring: CoordinateRing) -> PresentationDoc:
    d = jacobi_data(ring)
    rd1 = []
    for f in ring.generators:
        rd1.append(Relation("RD1", OperatorExpr.word(Mul(ring.project(f))), OperatorExpr(), polynomial=f))
    syms = [(i, j) for i in d.I_r for j in d.J_r1]
    rd2 = []
    for i, j in syms:
        for k in range(1, ring.n + 1):
            xk = Mul(ring.x(k))
            c = rd2_constant(ring, i, j, k)
            rd2.append(
                Relation(
                    "RD2",
                    OperatorExpr.word(Gen(i, j), xk),
                    OperatorExpr.word(xk, Gen(i, j)) + OperatorExpr.word(Mul(c)),
                    i=i, j=j, k=k, constant=c,
                )
            )
    return PresentationDoc(tuple(ring.variables), syms, rd1, rd2, derel_instances(ring, "RD3"))


@dataclass
class PresentationReport:
    rd1_ok: bool
    rd2_ok: bool
    rd3_ok: bool
    failures: list

    @property
    def ok(self) -> bool:
        return self.rd1_ok and self.rd2_ok and self.rd3_ok


def verify_presentation(ring: CoordinateRing, doc: Optional[PresentationDoc] = None) -> PresentationReport:
    doc = doc or presentation(ring)
    failures = []
    rd1_ok = True
    for rel in doc.rd1:
        if not ring.project(rel.polynomial).is_zero():
            rd1_ok = False
            failures.append(rel)
    xs = [ring.x(k) for k in range(1, ring.n + 1)]
    for a in xs:
        for b in xs:
            if a * b != b * a:
                rd1_ok = False
    rd2_ok = True
    for rel in doc.rd2:
        if not operators_equal_up_to_order(ring, rel.lhs, rel.rhs, 1):
            rd2_ok = False
            failures.append(rel)
    rd3_ok = True
    for rel in doc.rd3:
        by_action = operators_equal_up_to_order(ring, rel.lhs, rel.rhs, 1)
        by_vector = verify_derel(ring, rel)
        if not (by_action and by_vector):
            rd3_ok = False
            failures.append(rel)
    return PresentationReport(rd1_ok, rd2_ok, rd3_ok, failures)


# --------------------------------------------------------------------------
# Order filtration membership over the localization at a pivot minor.


def _normalize_alpha(alpha, size: int) -> tuple:
    if isinstance(alpha, int):
        alpha = (alpha,)
    alpha = tuple(alpha)
    if len(alpha) != size or any(a < 0 for a in alpha):
        raise ValueError(f"multi-index {alpha} must have {size} non-negative entries")
    return alpha


class LocalPartials:
    """The commuting derivations Delta^-1 d_{i; j, j_k} of A_Delta."""

    def __init__(self, ring: CoordinateRing, i, j):
        d = jacobi_data(ring)
        i, j = tuple(i), tuple(j)
        if i not in d.I_r or j not in d.J_r:
            raise ValueError(f"pivot ({i}, {j}) is not non-singular")
        self.ring = ring
        self.delta = d.minor(i, j)
        self.complement = [k for k in range(1, ring.n + 1) if k not in j]
        # unsorted column tuple (j, j_k): its value on x_{j_k} is exactly Delta
        self.derivations = [natural_derivation(ring, i, j + (k,)) for k in self.complement]
        self._ddelta = [apply(D, self.delta) for D in self.derivations]

    def apply(self, idx: int, e: LocalizedElement) -> LocalizedElement:
        """Apply the idx-th local partial to numerator / Delta^t."""
        D = self.derivations[idx]
        a, t = e.numerator, e.power
        if e.delta != self.delta:
            raise ValueError("element is not over the pivot minor")
        num = apply(D, a) * self.delta
        if t:
            num = num - a * self._ddelta[idx] * t
        return LocalizedElement(num, self.delta, t + 2)

    def apply_multi(self, alpha: tuple, e: LocalizedElement) -> LocalizedElement:
        for idx, times in enumerate(alpha):
            for _ in range(times):
                e = self.apply(idx, e)
        return e


def _as_localized(ring, delta, c) -> LocalizedElement:
    if isinstance(c, LocalizedElement):
        return c
    if not isinstance(c, Residue):
        c = ring.project(c)
    return LocalizedElement(c, delta, 0)


def apply_localized_operator(partials: LocalPartials, candidate: Sequence, a: Residue) -> LocalizedElement:
    ring = partials.ring
    size = len(partials.complement)
    total = LocalizedElement(ring.zero, partials.delta, 0)
    base = LocalizedElement(a, partials.delta, 0)
    for coeff, alpha in candidate:
        alpha = _normalize_alpha(alpha, size)
        v = partials.apply_multi(alpha, base)
        total = total + _as_localized(ring, partials.delta, coeff) * v
    return total


def order_i_membership(
    ring: CoordinateRing,
    pivot,
    candidate: Sequence,
    i_bound: int,
    cap: int = DEFAULT_ORDER_CAP,
) -> bool:
    """Decide whether sum coeff * partial^alpha maps A into A.

    ``candidate`` is a list of ``(coeff, alpha)`` with coefficients in A or
    A_Delta and alpha a multi-index over the columns complementary to the
    pivot's column tuple. By the induction on order it suffices to check
    monomials x^beta with |beta| <= i_bound.
    """
    if i_bound > cap:
        raise ValueError(f"i_bound={i_bound} exceeds the cap {cap}")
    partials = LocalPartials(ring, *pivot)
    size = len(partials.complement)
    for _, alpha in candidate:
        if sum(_normalize_alpha(alpha, size)) > i_bound:
            raise ValueError(f"term of order {sum(_normalize_alpha(alpha, size))} exceeds i_bound={i_bound}")
    for mono in ring.ring.monomials_up_to(i_bound):
        value = apply_localized_operator(partials, candidate, ring.monomial(mono))
        ok, _ = localized_in_A(value, witness=False)
        if not ok:
            return False
    return True
