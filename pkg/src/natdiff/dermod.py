"""Natural derivations, membership in Der(A) and der(A), reconstruction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .groebner import (
    GroebnerBasis,
    ModuleBasis,
    buchberger,
    module_buchberger,
    module_member,
    normal_form,
)
from .jacobi import JacobiData, jacobi_data, tuples
from .polyring import Polynomial, partial
from .quotient import CoordinateRing, LocalizedElement, Residue, localized_in_A


class NotADerivationError(ValueError):
    pass


class InclusionError(ValueError):
    """Prescribed values extend to no derivation of A."""

    def __init__(self, nu: int, column: int, element: LocalizedElement):
        super().__init__(
            f"coefficient of d/d{element.ring.variables[column - 1]} (nu={nu}) is "
            f"{element}, which is not in A"
        )
        self.nu = nu
        self.column = column
        self.element = element


@dataclass(frozen=True, eq=False)
class Derivation:
    """sum_k coefficients[k] * d/dx_k with coefficients in A."""

    ring: CoordinateRing
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != self.ring.n:
            raise ValueError(f"expected {self.ring.n} coefficients, got {len(self.coefficients)}")

    def __call__(self, a) -> Residue:
        return apply(self, a)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def lift(self) -> list:
        return [c.lift() for c in self.coefficients]

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.coefficients == other.coefficients

    __hash__ = None

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.ring, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.ring, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self):
        return Derivation(self.ring, tuple(-a for a in self.coefficients))

    def __rmul__(self, a) -> "Derivation":
        return Derivation(self.ring, tuple(a * c for c in self.coefficients))

    def __str__(self):
        parts = []
        for name, c in zip(self.ring.variables, self.coefficients):
            if c.is_zero():
                continue
            parts.append(f"({c})*d/d{name}")
        return " + ".join(parts) or "0"

    def __repr__(self):
        return f"Derivation({self})"


def _check_sizes(d: JacobiData, i, j, s=None):
    s = d.r if s is None else s
    if len(i) != s or len(j) != s + 1:
        raise ValueError(f"expected |i|={s} and |j|={s + 1}, got {len(i)} and {len(j)}")


def _signed_minor_coefficients(d: JacobiData, i, j) -> dict:
    """Cofactor expansion of the bordered determinant along its last row."""
    s = len(i)
    coeffs: dict = {}
    for k, col in enumerate(j, start=1):
        rest = tuple(j[: k - 1]) + tuple(j[k:])
        val = d.minor(i, rest)
        if (s + 1 + k) % 2:
            val = -val
        coeffs[col] = coeffs[col] + val if col in coeffs else val
    return coeffs


def natural_derivation(ring: CoordinateRing, i: Sequence[int], j: Sequence[int]) -> Derivation:
    """The determinant derivation for row tuple i (size r) and columns j (size r+1).

    ``j`` may be in any order; permuting it multiplies the result by the
    sign of the permutation.
    """
    d = jacobi_data(ring)
    i, j = tuple(i), tuple(j)
    _check_sizes(d, i, j)
    coeffs = _signed_minor_coefficients(d, i, j)
    return Derivation(ring, tuple(coeffs.get(k, ring.zero) for k in range(1, ring.n + 1)))


def natural_generators(ring: CoordinateRing) -> list:
    d = jacobi_data(ring)
    return [(i, j, natural_derivation(ring, i, j)) for i in d.I_r for j in d.J_r1]


def apply(delta: Derivation, a) -> Residue:
    A = delta.ring
    if isinstance(a, Residue):
        if a.ring is not A and not A.same_ideal(a.ring):
            raise ValueError("derivation and element belong to different rings")
        p = a.lift()
    elif isinstance(a, Polynomial):
        p = a
    else:
        p = A.ring.constant(a)
    total = A.ring.zero
    for k, c in enumerate(delta.coefficients, start=1):
        if c.is_zero():
            continue
        dp = partial(p, k)
        if not dp.is_zero():
            total = total + c.lift() * dp
    return A.project(total)


def is_derivation(ring: CoordinateRing, a: Sequence[Residue]) -> bool:
    if len(a) != ring.n:
        raise ValueError(f"expected {ring.n} coefficients, got {len(a)}")
    d = jacobi_data(ring)
    a = [ring.project(x) if not isinstance(x, Residue) else x for x in a]
    for row in d.matrix:
        acc = ring.zero
        for e, c in zip(row, a):
            acc = acc + e * c
        if not acc.is_zero():
            return False
    return True


def natural_module_basis(ring: CoordinateRing) -> ModuleBasis:
    """Module GB of the lifted natural generators plus I * e_k inside P_n^n."""
    mb = ring.cache.get("der-module")
    if mb is None:
        P = ring.ring
        vecs = [delta.lift() for _, _, delta in natural_generators(ring)]
        vecs = [v for v in vecs if any(not p.is_zero() for p in v)]
        for g in ring.gb.generators:
            for k in range(ring.n):
                v = [P.zero] * ring.n
                v[k] = g
                vecs.append(v)
        if not vecs:
            vecs = [[P.zero] * ring.n]
        mb = ring.cache["der-module"] = module_buchberger(vecs, P)
    return mb


def in_natural_submodule(delta: Derivation) -> bool:
    if not is_derivation(delta.ring, delta.coefficients):
        raise NotADerivationError(f"{delta} does not preserve the ideal")
    return module_member(delta.lift(), natural_module_basis(delta.ring))


def reconstruct(ring: CoordinateRing, i, j, values: Mapping[int, Residue]) -> Derivation:
    """The derivation taking x_k to values[k] on the complement of j.

    Raises :class:`InclusionError` when the forced coefficient of some
    d/dx_{j_nu} is not in A.
    """
    d = jacobi_data(ring)
    i, j = tuple(i), tuple(j)
    if i not in d.I_r or j not in d.J_r:
        raise ValueError(f"pivot ({i}, {j}) is not non-singular")
    comp = [k for k in range(1, ring.n + 1) if k not in j]
    if set(values) != set(comp):
        raise ValueError(f"values must be given exactly on the columns {comp}")
    vals = {k: values[k] if isinstance(values[k], Residue) else ring.project(values[k]) for k in comp}
    delta = d.minor(i, j)
    coeffs = {k: vals[k] for k in comp}
    for nu in range(d.r):
        num = ring.zero
        for k in comp:
            if not vals[k].is_zero():
                num = num + d.minor(i, d.replaced(j, nu, k)) * vals[k]
        e = LocalizedElement(-num, delta, 1)
        ok, w = localized_in_A(e)
        if not ok:
            raise InclusionError(nu + 1, j[nu], e)
        coeffs[j[nu]] = w
    out = Derivation(ring, tuple(coeffs[k] for k in range(1, ring.n + 1)))
    if not is_derivation(ring, out.coefficients):
        raise AssertionError("reconstructed vector fails the Jacobi condition")  # pragma: no cover
    return out


@dataclass(frozen=True, eq=False)
class HigherDerivation:
    """A derivation A -> A/a_{s+1}; coefficients are normal forms mod I + a_{s+1}."""

    ring: CoordinateRing
    s: int
    coefficients: tuple
    gb: GroebnerBasis

    def __eq__(self, other):
        if not isinstance(other, HigherDerivation):
            return NotImplemented
        return self.s == other.s and self.coefficients == other.coefficients

    __hash__ = None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def __call__(self, a) -> Polynomial:
        p = a.lift() if isinstance(a, Residue) else a
        total = self.ring.ring.zero
        for k, c in enumerate(self.coefficients, start=1):
            total = total + c * partial(p, k)
        return normal_form(total, self.gb)


def higher_natural_derivation(ring: CoordinateRing, s: int, i, j) -> HigherDerivation:
    d = jacobi_data(ring)
    if not 1 <= s <= d.r:
        raise ValueError(f"level s={s} out of range 1..{d.r}")
    i, j = tuple(i), tuple(j)
    _check_sizes(d, i, j, s)
    gb = d.ideal_gb(s + 1)
    coeffs = _signed_minor_coefficients(d, i, j)
    P = ring.ring
    out = tuple(
        normal_form(coeffs[k].lift(), gb) if k in coeffs else P.zero for k in range(1, ring.n + 1)
    )
    return HigherDerivation(ring, s, out, gb)


def image_ideal(ring: CoordinateRing) -> GroebnerBasis:
    """GB of the ideal generated by all values of natural derivations on A."""
    return higher_image_ideal(ring, jacobi_data(ring).r)


def higher_image_ideal(ring: CoordinateRing, s: int) -> GroebnerBasis:
    """GB of I + a_{s+1} + (values of level-s natural derivations on x_1..x_n)."""
    d = jacobi_data(ring)
    if s == 0:
        return buchberger([ring.ring.one])
    gb = d.ideal_gb(s + 1)
    gens = list(gb.generators)
    for i in tuples(ring.m, s):
        for j in tuples(ring.n, s + 1):
            for c in _signed_minor_coefficients(d, i, j).values():
                if not c.is_zero():
                    gens.append(c.lift())
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis((), ring.ring)
    return buchberger(gens)


def generator_transform_check(old: CoordinateRing, new: CoordinateRing, b: Sequence[Sequence[Polynomial]]) -> bool:
    """Check d'_{i',j} = sum_i det(b[i', i]) d_{i,j} for g = b f.

    ``new`` has generators g_k = sum_l b[k][l] f_l over the same ideal.
    Every (i', j) with i' an r-subset of new rows and j an (r+1)-subset of
    the columns is checked.
    """
    from .polyring import determinant

    d_old, d_new = jacobi_data(old), jacobi_data(new)
    r = d_old.r
    if d_new.r != r:
        return False
    P = old.ring
    for ip in tuples(new.m, r):
        for j in tuples(old.n, r + 1):
            lhs = natural_derivation(new, ip, j)
            acc = [old.zero] * old.n
            for i in tuples(old.m, r):
                sub = [[b[a - 1][c - 1] for c in i] for a in ip]
                coef = old.project(determinant(sub, one=P.one))
                if coef.is_zero():
                    continue
                rhs = natural_derivation(old, i, j)
                acc = [x + coef * y for x, y in zip(acc, rhs.coefficients)]
            if tuple(acc) != lhs.coefficients:
                return False
    return True


def higher_natural_module_basis(ring: CoordinateRing, s: int) -> ModuleBasis:
    """Module GB of lifted level-s natural derivations plus (I + a_{s+1}) * e_k."""
    key = ("higher-der-module", s)
    mb = ring.cache.get(key)
    if mb is None:
        d = jacobi_data(ring)
        P = ring.ring
        vecs = []
        for i in tuples(ring.m, s):
            for j in tuples(ring.n, s + 1):
                h = higher_natural_derivation(ring, s, i, j)
                if not h.is_zero():
                    vecs.append(list(h.coefficients))
        for g in d.ideal_gb(s + 1).generators:
            for k in range(ring.n):
                v = [P.zero] * ring.n
                v[k] = g
                vecs.append(v)
        mb = ring.cache[key] = module_buchberger(vecs or [[P.zero] * ring.n], P)
    return mb
