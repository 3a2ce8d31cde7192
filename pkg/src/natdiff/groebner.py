"""Buchberger's algorithm for ideals of Q[x] and submodules of Q[x]^s."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .polyring import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
)

UNIT_IDEAL_DIMENSION = -1


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    ring: PolyRing
    reduced: bool = True

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.generators)

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def leading_monomials(self) -> list:
        return [g.leading_monomial() for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _reduce_dict(terms: dict, basis: Sequence[Polynomial], key, full=True) -> dict:
    """Divide a term dict by ``basis``; returns the remainder as a dict."""
    p = dict(terms)
    rem = {}
    lead = [(g.leading_monomial(), g.leading_coefficient(), g) for g in basis]
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, lc, g in lead:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                f = c / lc
                for gm, gc in g._terms.items():
                    t = tuple(a + b for a, b in zip(gm, q))
                    v = p.get(t, 0) - f * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
            if not full:
                rem.update(p)
                break
    return rem


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of p modulo the basis."""
    if p.ring.n != gb.ring.n:
        raise ValueError("polynomial and basis live in different rings")
    if not gb.generators or p.is_zero():
        return p.in_ring(gb.ring) if p.ring != gb.ring else p
    rem = _reduce_dict(p._terms, gb.generators, gb.ring._key)
    return Polynomial._raw(gb.ring, rem)


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = mono_lcm(lf, lg)
    return f.mul_term(mono_div(l, lf), 1 / f.leading_coefficient()) - g.mul_term(
        mono_div(l, lg), 1 / g.leading_coefficient()
    )


def _interreduce(basis: list, ring: PolyRing) -> list:
    key = ring._key
    # drop elements whose leading monomial is divisible by another's
    basis = sorted(basis, key=lambda g: key(g.leading_monomial()))
    minimal = []
    for g in basis:
        lm = g.leading_monomial()
        if not any(mono_divides(h.leading_monomial(), lm) for h in minimal):
            minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = Polynomial._raw(ring, _reduce_dict(g._terms, others, key))
        out.append(r.monic())
    out.sort(key=lambda g: key(g.leading_monomial()), reverse=True)
    return out


def buchberger(gens: Sequence[Polynomial], order=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are selected by smallest lcm (normal strategy); pairs with coprime
    leading monomials and pairs covered by the chain criterion are skipped.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one generator (ring unknown)")
    ring = gens[0].ring
    if order is not None:
        ring = ring.with_order(order)
    for g in gens:
        if g.ring.n != ring.n:
            raise ValueError("generators live in different rings")
    key = ring._key
    G = [g.in_ring(ring).monic() for g in gens if not g.is_zero()]
    if not G:
        return GroebnerBasis((), ring)
    if any(g.is_constant() for g in G):
        return GroebnerBasis((ring.one,), ring)

    pairs = set(combinations(range(len(G)), 2))
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (key(mono_lcm(G[ij[0]].leading_monomial(), G[ij[1]].leading_monomial())), ij),
        )
        pairs.discard((i, j))
        li, lj = G[i].leading_monomial(), G[j].leading_monomial()
        lij = mono_lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        if _chain_criterion(G, pairs, i, j, lij):
            continue
        s = _spoly(G[i], G[j])
        r = _reduce_dict(s._terms, G, key)
        if not r:
            continue
        h = Polynomial._raw(ring, r).monic()
        if h.is_constant():
            return GroebnerBasis((ring.one,), ring)
        G.append(h)
        t = len(G) - 1
        pairs.update((k, t) for k in range(t))
    return GroebnerBasis(tuple(_interreduce(G, ring)), ring)


def _chain_criterion(G, pairs, i, j, lij) -> bool:
    for k in range(len(G)):
        if k in (i, j):
            continue
        if not mono_divides(G[k].leading_monomial(), lij):
            continue
        if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
            continue
        return True
    return False


def ideal_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    if a.order != b.order:
        raise ValueError("cannot compare bases computed for different monomial orders")
    return a.generators == b.generators


def ideal_contains(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    """True iff the ideal of b is contained in the ideal of a."""
    return all(a.contains(g) for g in b.generators)


def krull_dimension(gb: GroebnerBasis) -> int:
    """Dimension of Q[x]/I from the leading-term ideal.

    The dimension is the size of a largest set U of variables such that no
    leading monomial is supported inside U. Returns ``UNIT_IDEAL_DIMENSION``
    (-1) for the unit ideal.
    """
    if gb.is_unit():
        return UNIT_IDEAL_DIMENSION
    n = gb.ring.n
    supports = [frozenset(t for t, e in enumerate(m) if e) for m in gb.leading_monomials()]
    for size in range(n, -1, -1):
        for U in combinations(range(n), size):
            Uset = set(U)
            if not any(s <= Uset for s in supports):
                return size
    return 0


# --------------------------------------------------------------------------
# Modules: elements of Q[x]^s as dicts {(position, monomial): coeff}, with a
# position-over-term order in which position 0 is the largest.


class ModuleVector:
    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring: PolyRing, rank: int, terms: dict):
        self.ring = ring
        self.rank = rank
        self.terms = terms

    @classmethod
    def from_polys(cls, polys: Sequence[Polynomial], ring: Optional[PolyRing] = None):
        ring = ring or polys[0].ring
        terms = {}
        for pos, p in enumerate(polys):
            for m, c in p._terms.items():
                terms[(pos, m)] = c
        return cls(ring, len(polys), terms)

    def to_polys(self) -> list:
        comps = [dict() for _ in range(self.rank)]
        for (pos, m), c in self.terms.items():
            comps[pos][m] = c
        return [Polynomial._raw(self.ring, d) for d in comps]

    def is_zero(self) -> bool:
        return not self.terms


def _module_key(ring):
    key = ring._key
    return lambda t: (-t[0], key(t[1]))


def _module_lead(terms: dict, mkey):
    lt = max(terms, key=mkey)
    return lt, terms[lt]


def _module_reduce(terms: dict, basis: list, mkey, full=True) -> dict:
    p = dict(terms)
    rem = {}
    while p:
        lt = max(p, key=mkey)
        c = p[lt]
        pos, m = lt
        for (gpos, glm), glc, g in basis:
            if gpos == pos and mono_divides(glm, m):
                q = mono_div(m, glm)
                f = c / glc
                for (tp, tm), tc in g.items():
                    t = (tp, tuple(a + b for a, b in zip(tm, q)))
                    v = p.get(t, 0) - f * tc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[lt] = c
            del p[lt]
            if not full:
                rem.update(p)
                break
    return rem


@dataclass(frozen=True)
class ModuleBasis:
    generators: tuple  # of term dicts
    ring: PolyRing
    rank: int

    def _lead_table(self):
        mkey = _module_key(self.ring)
        table = []
        for g in self.generators:
            lt, lc = _module_lead(g, mkey)
            table.append((lt, lc, g))
        return table, mkey

    def vectors(self) -> list:
        return [ModuleVector(self.ring, self.rank, g).to_polys() for g in self.generators]


def module_buchberger(vectors: Sequence[Sequence[Polynomial]], ring: Optional[PolyRing] = None) -> ModuleBasis:
    """Groebner basis of the submodule of Q[x]^s spanned by ``vectors``."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        raise ValueError("module_buchberger needs at least one vector")
    rank = len(vectors[0])
    if any(len(v) != rank for v in vectors):
        raise ValueError("vectors of different lengths")
    ring = ring or vectors[0][0].ring
    mkey = _module_key(ring)
    G = []
    for v in vectors:
        t = ModuleVector.from_polys(v, ring).terms
        if t:
            G.append(t)

    def add(g):
        lt, lc = _module_lead(g, mkey)
        g = {k: c / lc for k, c in g.items()}
        G_table.append((lt, Fraction(1), g))

    G_table: list = []
    for g in G:
        add(g)
    pairs = {
        (i, j)
        for i, j in combinations(range(len(G_table)), 2)
        if G_table[i][0][0] == G_table[j][0][0]
    }
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (
                ring._key(mono_lcm(G_table[ij[0]][0][1], G_table[ij[1]][0][1])),
                ij,
            ),
        )
        pairs.discard((i, j))
        (pos, li), _, gi = G_table[i]
        (_, lj), _, gj = G_table[j]
        l = mono_lcm(li, lj)
        if _module_chain(G_table, pairs, i, j, pos, l):
            continue
        qi, qj = mono_div(l, li), mono_div(l, lj)
        s = {}
        for (tp, tm), c in gi.items():
            s[(tp, tuple(a + b for a, b in zip(tm, qi)))] = c
        for (tp, tm), c in gj.items():
            t = (tp, tuple(a + b for a, b in zip(tm, qj)))
            v = s.get(t, 0) - c
            if v:
                s[t] = v
            else:
                s.pop(t, None)
        r = _module_reduce(s, G_table, mkey)
        if not r:
            continue
        add(r)
        t = len(G_table) - 1
        npos = G_table[t][0][0]
        pairs.update((k, t) for k in range(t) if G_table[k][0][0] == npos)
    # minimalize
    keep = []
    for idx, (lt, _, g) in enumerate(G_table):
        pos, m = lt
        dominated = False
        for jdx, (lt2, _, _) in enumerate(G_table):
            if jdx == idx or lt2[0] != pos or not mono_divides(lt2[1], m):
                continue
            if lt2[1] != m or jdx < idx:
                dominated = True
                break
        if not dominated:
            keep.append(g)
    return ModuleBasis(tuple(keep), ring, rank)


def _module_chain(G_table, pairs, i, j, pos, l) -> bool:
    for k, ((kp, km), _, _) in enumerate(G_table):
        if k in (i, j) or kp != pos or not mono_divides(km, l):
            continue
        if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
            continue
        return True
    return False


def module_normal_form(v: Sequence[Polynomial], mb: ModuleBasis) -> list:
    if len(v) != mb.rank:
        raise ValueError(f"vector of length {len(v)} vs module rank {mb.rank}")
    table, mkey = mb._lead_table()
    terms = ModuleVector.from_polys(list(v), mb.ring).terms
    rem = _module_reduce(terms, table, mkey)
    return ModuleVector(mb.ring, mb.rank, rem).to_polys()


def module_member(v: Sequence[Polynomial], mb: ModuleBasis) -> bool:
    return all(p.is_zero() for p in module_normal_form(v, mb))


def lift_cofactors(p: Polynomial, gens: Sequence[Polynomial]) -> Optional[list]:
    """Cofactors c with p = sum c_k gens_k, or None when p is not in the ideal.

    Uses the module spanned by (g_k | e_k) in Q[x]^(1+K) under the
    position-over-term order: reducing (p | 0) leaves (0 | -c) exactly
    when p lies in the ideal.
    """
    ring = p.ring
    K = len(gens)
    zero = ring.zero
    vecs = []
    for k, g in enumerate(gens):
        row = [g] + [zero] * K
        row[1 + k] = ring.one
        vecs.append(row)
    mb = module_buchberger(vecs, ring)
    rem = module_normal_form([p] + [zero] * K, mb)
    if not rem[0].is_zero():
        return None
    return [-c for c in rem[1:]]
