"""The property suites behind ``natdiff verify``.

Each suite runs a family of exact checks on one coordinate ring and
returns a :class:`SuiteResult`. Failures are collected, never raised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations

from .dermod import (
    apply,
    generator_transform_check,
    higher_image_ideal,
    higher_natural_derivation,
    higher_natural_module_basis,
    image_ideal,
    in_natural_submodule,
    is_derivation,
    natural_derivation,
    natural_generators,
    natural_module_basis,
    reconstruct,
)
from .groebner import buchberger, ideal_contains, ideal_equal, module_member
from .jacobi import jacobi_data, localized_matmul, sort_with_sign, tuples, verify_minor_identity
from .quotient import CoordinateRing, LocalizedElement, random_polynomial
from .relgen import LocalPartials, derel_instances, verify_derel, verify_presentation

INVARIANCE_SAMPLES = 5
RECONSTRUCTION_SAMPLES = 5


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str):
        self.checks += 1
        if not ok:
            self.failures.append(what)

    def __str__(self):
        verdict = "ok" if self.passed else f"FAILED ({len(self.failures)})"
        return f"{self.name}: {self.checks} checks {verdict}"


def rank_sets(A: CoordinateRing, res: SuiteResult, rng):
    d = jacobi_data(A)
    r = d.r
    Iset, Jset = set(d.I_r), set(d.J_r)
    for i in tuples(A.m, r):
        for j in tuples(A.n, r):
            nonzero = not d.minor(i, j).is_zero()
            res.check(nonzero == (i in Iset and j in Jset), f"minor ({i}, {j}) disagrees with I_r x J_r")
    for i in tuples(A.m, r + 1):
        for j in tuples(A.n, r + 1):
            res.check(d.minor(i, j).is_zero(), f"({r + 1})-minor ({i}, {j}) is nonzero")
    for jp in d.J_r1:
        dels = [jp[:k] + jp[k + 1:] for k in range(r + 1)]
        res.check(any(t in Jset for t in dels), f"{jp} has no deletion in J_r")
    res.check(r < A.n and r <= A.m, "rank out of bounds")


def natural_derivations(A: CoordinateRing, res: SuiteResult, rng):
    d = jacobi_data(A)
    r = d.r
    I1, J1 = set(d.I_r), set(d.J_r1)
    for i in tuples(A.m, r):
        for j in tuples(A.n, r + 1):
            delta = natural_derivation(A, i, j)
            for k, f in enumerate(A.generators, start=1):
                res.check(apply(delta, f).is_zero(), f"d[{i};{j}] does not kill f_{k}")
            res.check((not delta.is_zero()) == (i in I1 and j in J1), f"d[{i};{j}] support")
            res.check(is_derivation(A, delta.coefficients), f"d[{i};{j}] fails the Jacobi condition")
    for i, j, delta in natural_generators(A):
        for perm in permutations(j):
            _, eps = sort_with_sign(perm)
            res.check(natural_derivation(A, i, perm) == eps * delta, f"antisymmetry of d[{i};{perm}]")
        for _ in range(3):
            a, b = A.random_residue(rng, 2, 3), A.random_residue(rng, 2, 3)
            res.check(delta(a * b) == delta(a) * b + a * delta(b), f"Leibniz for d[{i};{j}]")


def image_ideals(A: CoordinateRing, res: SuiteResult, rng):
    d = jacobi_data(A)
    res.check(ideal_equal(image_ideal(A), d.ideal_gb(d.r)), "image of der(A) differs from a_r")
    for s in range(1, d.r):
        res.check(ideal_equal(higher_image_ideal(A, s), d.ideal_gb(s)), f"level-{s} image differs from a_{s}")
    for i, j, delta in natural_generators(A) if d.r else ():
        h = higher_natural_derivation(A, d.r, i, j)
        res.check(list(h.coefficients) == delta.lift(), f"top-level d[{i};{j}] differs from the natural one")


def jacobian_chain(A: CoordinateRing, res: SuiteResult, rng):
    d = jacobi_data(A)
    r = d.r
    for k in range(1, r):
        res.check(ideal_contains(d.ideal_gb(k), d.ideal_gb(k + 1)), f"a_{k} does not contain a_{k + 1}")
    res.check(not ideal_equal(d.ideal_gb(r), A.gb), "a_r is zero")
    res.check(d.ideal_gb(0).is_unit(), "a_0 is not A")
    for a in range(1, r + 1):
        for b in range(a, r + 1 - a):
            ga = [g.lift() for g in d.jacobian_ideal(a).generators if not g.is_zero()]
            gb_ = [g.lift() for g in d.jacobian_ideal(b).generators if not g.is_zero()]
            prod = buchberger([x * y for x in ga for y in gb_] + list(A.gb.generators))
            target = d.jacobian_ideal(a + b).gb
            res.check(ideal_contains(prod, target), f"a_{a} a_{b} does not contain a_{a + b}")


def dimension(A: CoordinateRing, res: SuiteResult, rng):
    d = jacobi_data(A)
    res.check(d.r == A.n - A.dimension, f"r={d.r} but n - dim = {A.n - A.dimension}")


def minor_identities(A: CoordinateRing, res: SuiteResult, rng):
    d = jacobi_data(A)
    r = d.r
    for i in d.I_r:
        for ip in d.I_r:
            for j in d.J_r:
                for jp in d.J_r:
                    res.check(verify_minor_identity(d, i, ip, j, jp), f"minor identity ({i},{ip},{j},{jp})")
    i = d.I_r[0]
    E = [[LocalizedElement(A.one if a == b else A.zero, d.minor(i, d.J_r[0]), 0) for b in range(r)] for a in range(r)]
    for j in d.J_r:
        H = d.change_of_basis_H(i, j, j)
        res.check(_mat_eq(H, E), f"H({j},{j}) is not the identity")
        for jp in d.J_r:
            Hjj = d.change_of_basis_H(i, j, jp)
            lhs = localized_matmul(_localize(d.submatrix(i, j), d.minor(i, j)), Hjj)
            res.check(_mat_eq(lhs, _localize(d.submatrix(i, jp), d.minor(i, j))), f"J(i,{j}) H = J(i,{jp})")
            res.check(_mat_eq(localized_matmul(Hjj, d.change_of_basis_H(i, jp, j)), E), f"H({j},{jp}) inverse")
            for ip in d.I_r:
                res.check(_mat_eq(Hjj, d.change_of_basis_H(ip, j, jp)), f"H({j},{jp}) depends on i")
            for jpp in d.J_r:
                lhs = localized_matmul(Hjj, d.change_of_basis_H(i, jp, jpp))
                res.check(_mat_eq(lhs, d.change_of_basis_H(i, j, jpp)), f"H cocycle ({j},{jp},{jpp})")


def _localize(M, delta):
    return [[LocalizedElement(e, delta, 0) for e in row] for row in M]


def _mat_eq(X, Y) -> bool:
    return all(a == b for rx, ry in zip(X, Y) for a, b in zip(rx, ry))


def relations(A: CoordinateRing, res: SuiteResult, rng):
    report = verify_presentation(A)
    res.check(report.rd1_ok, "RD1 fails")
    res.check(report.rd2_ok, "RD2 fails")
    res.check(report.rd3_ok, "RD3 fails")
    for rel in derel_instances(A):
        res.check(verify_derel(A, rel), f"DEREL ({rel.i},{rel.iprime},{rel.j},{rel.jprime})")


def invariance(A: CoordinateRing, res: SuiteResult, rng, samples: int = INVARIANCE_SAMPLES):
    d = jacobi_data(A)
    P = A.ring
    for _ in range(samples):
        u = random_polynomial(P, rng, 2, 3)
        f1 = A.generators[0]
        B = A.with_generators(list(A.generators) + [u * f1], name=f"{A.name}+u*f1")
        db = jacobi_data(B)
        res.check(db.r == d.r, "rank changed")
        for k in range(1, d.r + 1):
            res.check(ideal_equal(d.ideal_gb(k), db.ideal_gb(k)), f"a_{k} changed under u = {u}")
        _mutual(res, natural_module_basis(A), natural_module_basis(B), f"der(A) changed under u = {u}")
        b = [[P.one if a == c else P.zero for c in range(A.m)] for a in range(A.m)]
        b.append([u] + [P.zero] * (A.m - 1))
        res.check(generator_transform_check(A, B, b), f"generator transform fails for u = {u}")
        for s in range(1, d.r):
            _mutual(
                res, higher_natural_module_basis(A, s), higher_natural_module_basis(B, s),
                f"level-{s} natural derivations changed under u = {u}",
            )


def _mutual(res, ma, mb, what):
    res.check(all(module_member(v, mb) for v in ma.vectors()), what)
    res.check(all(module_member(v, ma) for v in mb.vectors()), what)


def reconstruction(A: CoordinateRing, res: SuiteResult, rng, samples: int = RECONSTRUCTION_SAMPLES):
    d = jacobi_data(A)
    smooth = d.ideal_gb(d.r).is_unit()
    for j in d.J_r:
        i = d.I_r[0]
        delta = d.minor(i, j)
        comp = [k for k in range(1, A.n + 1) if k not in j]
        lp = LocalPartials(A, i, j)
        for a, k in enumerate(comp):
            for b, l in enumerate(comp):
                v = lp.apply(a, LocalizedElement(A.x(l), delta, 0))
                res.check(v == (1 if a == b else 0), f"local partial {k} on x_{l}")
            res.check(
                [lp.derivations[a].coefficients[l - 1] for l in comp] == [delta if l == k else A.zero for l in comp],
                f"d[{i};{j + (k,)}] is not Delta times a coordinate vector",
            )
        for _, _, gen in natural_generators(A):
            got = reconstruct(A, i, j, {k: gen(A.x(k)) for k in comp})
            res.check(got == gen, f"natural generator not reconstructed from pivot ({i},{j})")
        for _ in range(samples):
            values = {k: delta * A.random_residue(rng, 2, 3) for k in comp}
            dd = reconstruct(A, i, j, values)
            res.check(is_derivation(A, dd.coefficients), "reconstruction is not a derivation")
            for ip in d.I_r[1:]:
                res.check(reconstruct(A, ip, j, values) == dd, f"reconstruction depends on i ({ip})")
            res.check(in_natural_submodule(delta * dd), "Delta * d is not in der(A)")
            if smooth:
                res.check(in_natural_submodule(dd), "Der(A) != der(A) on a smooth variety")


SUITES = {
    "rank_sets": rank_sets,
    "natural_derivations": natural_derivations,
    "image_ideals": image_ideals,
    "jacobian_chain": jacobian_chain,
    "dimension": dimension,
    "minor_identities": minor_identities,
    "relations": relations,
    "invariance": invariance,
    "reconstruction": reconstruction,
}


def run_suites(A: CoordinateRing, names=None, seed: int = 0) -> list:
    """Run the named suites (all by default) and return their results."""
    names = list(SUITES) if names is None else list(names)
    out = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
        res = SuiteResult(name)
        SUITES[name](A, res, random.Random(seed))
        out.append(res)
    return out


__all__ = ["SUITES", "SuiteResult", "run_suites"]
