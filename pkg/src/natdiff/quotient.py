"""The coordinate ring A = Q[x]/I, its residues, and localizations A_D."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

from .groebner import (
    GroebnerBasis,
    buchberger,
    krull_dimension,
    lift_cofactors,
    normal_form,
)
from .polyring import PolyRing, Polynomial

PROBE_PAIRS = 20
PROBE_DEGREE = 3


class PreconditionError(ValueError):
    """The ideal violates a standing assumption (proper, non-maximal, prime)."""


class NotPrimeError(PreconditionError):
    def __init__(self, a: "Residue", b: "Residue"):
        super().__init__(f"zero divisors found: ({a}) * ({b}) = 0 in A")
        self.witness = (a, b)


class CoordinateRing:
    """A = P_n / (f_1..f_m) for a prime, non-maximal ideal.

    ``generators`` are kept verbatim because generator indices label the
    rows of the Jacobi matrix. Construction computes the reduced Groebner
    basis, rejects unit and zero-dimensional ideals, and runs a zero-divisor
    probe on monomial pairs and random pairs (disable with ``probe=False``).
    """

    def __init__(
        self,
        variables: Sequence[str],
        generators: Sequence[Polynomial],
        order="degrevlex",
        name: Optional[str] = None,
        probe: bool = True,
        seed: int = 0,
    ):
        self.ring = PolyRing(variables, order)
        self.name = name or "A"
        self.generators = tuple(g.in_ring(self.ring) for g in generators)
        for g in self.generators:
            if g.ring.n != self.ring.n:
                raise ValueError("generator in the wrong number of variables")
        nonzero = [g for g in self.generators if not g.is_zero()]
        self.gb = buchberger(nonzero) if nonzero else GroebnerBasis((), self.ring)
        if self.gb.is_unit():
            raise PreconditionError("the ideal is the unit ideal")
        self.dimension = krull_dimension(self.gb)
        if self.dimension < 1:
            raise PreconditionError("the ideal is maximal (A has Krull dimension 0)")
        # filled lazily by other modules (jacobi data, module bases, ...)
        self.cache: dict = {}
        if probe:
            self._probe_domain(seed)

    # -- basic data --------------------------------------------------------
    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def m(self) -> int:
        return len(self.generators)

    @property
    def variables(self) -> tuple:
        return self.ring.names

    @property
    def order(self):
        return self.ring.order

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"CoordinateRing({self.name}: Q[{', '.join(self.variables)}]/({gens}))"

    # -- elements ----------------------------------------------------------
    def project(self, p) -> "Residue":
        if isinstance(p, (int, Fraction)):
            p = self.ring.constant(p)
        if p.ring.n != self.n:
            raise ValueError("polynomial lives in a different ring")
        return Residue(self, normal_form(p.in_ring(self.ring), self.gb), _reduced=True)

    __call__ = project

    @property
    def zero(self) -> "Residue":
        return Residue(self, self.ring.zero, _reduced=True)

    @property
    def one(self) -> "Residue":
        return self.project(self.ring.one)

    def x(self, k: int) -> "Residue":
        """Residue of the k-th coordinate (1-based)."""
        return self.project(self.ring.gen(k))

    def monomial(self, exps) -> "Residue":
        return self.project(self.ring.monomial(exps))

    def same_ideal(self, other: "CoordinateRing") -> bool:
        return self.ring == other.ring and self.gb.generators == other.gb.generators

    def with_generators(self, generators: Sequence[Polynomial], name=None) -> "CoordinateRing":
        """Same variables and order, another generator list (the ideal may differ)."""
        return CoordinateRing(
            self.variables, generators, self.order, name=name or self.name, probe=False
        )

    def random_residue(self, rng: random.Random, degree: int = PROBE_DEGREE, terms: int = 4) -> "Residue":
        return self.project(random_polynomial(self.ring, rng, degree, terms))

    def _probe_domain(self, seed: int):
        # monomial pairs first: catches (x*y) and the like deterministically
        monos = [self.monomial(e) for e in self.ring.monomials_up_to(2) if sum(e)]
        for k, a in enumerate(monos):
            for b in monos[k:]:
                if not a.is_zero() and not b.is_zero() and (a * b).is_zero():
                    raise NotPrimeError(a, b)
        rng = random.Random(seed)
        for _ in range(PROBE_PAIRS):
            a = self.random_residue(rng)
            b = self.random_residue(rng)
            if not a.is_zero() and not b.is_zero() and (a * b).is_zero():
                raise NotPrimeError(a, b)


def random_polynomial(ring: PolyRing, rng: random.Random, degree: int = 3, terms: int = 4) -> Polynomial:
    monos = ring.monomials_up_to(degree)
    out = {}
    for _ in range(terms):
        m = rng.choice(monos)
        out[m] = out.get(m, 0) + Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Polynomial(ring, out)


class Residue:
    """Element of A stored as its normal form modulo the Groebner basis."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: CoordinateRing, rep: Polynomial, _reduced: bool = False):
        self.ring = ring
        self.rep = rep if _reduced else normal_form(rep, ring.gb)

    def lift(self) -> Polynomial:
        return self.rep

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.ring is not self.ring and not self.ring.same_ideal(other.ring):
                raise ValueError("residues from different coordinate rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.project(other)
        if isinstance(other, Polynomial):
            return self.ring.project(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # sums of normal forms are normal forms
        return Residue(self.ring, self.rep + other.rep, _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        return Residue(self.ring, -self.rep, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(self.ring, self.rep - other.rep, _reduced=True)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Residue(self.ring, self.rep * other, _reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue(self.ring, self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial, Residue)):
            try:
                other = self._coerce(other)
            except ValueError:
                return False
            return self.rep == other.rep
        return NotImplemented

    def __hash__(self):
        return hash(self.rep)

    def __repr__(self):
        return f"Residue({self.rep})"

    def __str__(self):
        return str(self.rep)


def project(p: Polynomial, ring: CoordinateRing) -> Residue:
    return ring.project(p)


def is_zero(a: Residue) -> bool:
    return a.is_zero()


class LocalizedElement:
    """numerator / delta^power in A_delta.

    Not normalized; equality is decided by cross-multiplication, which is
    valid because A is a domain.
    """

    __slots__ = ("delta", "numerator", "power")

    def __init__(self, numerator: Residue, delta: Residue, power: int = 0):
        if delta.is_zero():
            raise ValueError("cannot localize at zero")
        if power < 0:
            raise ValueError("power must be non-negative")
        self.numerator = numerator
        self.delta = delta
        self.power = power

    @property
    def ring(self) -> CoordinateRing:
        return self.numerator.ring

    @property
    def denominator(self) -> Residue:
        return self.delta**self.power

    def _combine(self, other):
        if isinstance(other, (int, Fraction, Residue)):
            other = LocalizedElement(self.ring.project(other) if not isinstance(other, Residue) else other, self.delta, 0)
        return other

    def _common(self, other: "LocalizedElement"):
        """Rewrite both over a shared (delta, power)."""
        if self.delta == other.delta:
            t = max(self.power, other.power)
            a = self.numerator * self.delta ** (t - self.power)
            b = other.numerator * other.delta ** (t - other.power)
            return a, b, self.delta, t
        if other.power == 0:
            return self.numerator, other.numerator * self.denominator, self.delta, self.power
        if self.power == 0:
            return self.numerator * other.denominator, other.numerator, other.delta, other.power
        d = self.denominator * other.denominator
        return self.numerator * other.denominator, other.numerator * self.denominator, d, 1

    def __add__(self, other):
        other = self._combine(other)
        a, b, d, t = self._common(other)
        return LocalizedElement(a + b, d, t)

    __radd__ = __add__

    def __neg__(self):
        return LocalizedElement(-self.numerator, self.delta, self.power)

    def __sub__(self, other):
        return self + (-self._combine(other))

    def __rsub__(self, other):
        return self._combine(other) - self

    def __mul__(self, other):
        other = self._combine(other)
        if self.delta == other.delta:
            return LocalizedElement(self.numerator * other.numerator, self.delta, self.power + other.power)
        if other.power == 0:
            return LocalizedElement(self.numerator * other.numerator, self.delta, self.power)
        if self.power == 0:
            return LocalizedElement(self.numerator * other.numerator, other.delta, other.power)
        return LocalizedElement(
            self.numerator * other.numerator, self.denominator * other.denominator, 1
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Residue)):
            other = self._combine(other)
        if not isinstance(other, LocalizedElement):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def __repr__(self):
        if self.power == 0:
            return f"LocalizedElement({self.numerator})"
        return f"LocalizedElement(({self.numerator}) / ({self.delta})^{self.power})"


def localized_in_A(e: LocalizedElement, witness: bool = True):
    """Decide whether numerator / delta^t lies in A.

    Returns ``(True, w)`` with ``w * delta^t == numerator`` in A, or
    ``(False, None)``. With ``witness=False`` the cofactor computation is
    skipped and ``w`` is None.
    """
    A = e.ring
    if e.power == 0 or e.numerator.is_zero():
        return True, e.numerator
    den = e.denominator
    key = ("principal-gb", den.rep)
    gb = A.cache.get(key)
    if gb is None:
        gb = A.cache[key] = buchberger([den.lift()] + list(A.gb.generators))
    if not gb.contains(e.numerator.lift()):
        return False, None
    if not witness:
        return True, None
    cof = lift_cofactors(e.numerator.lift(), [den.lift()] + list(A.gb.generators))
    w = A.project(cof[0])
    if w * den != e.numerator:
        raise AssertionError("witness check failed")  # pragma: no cover
    return True, w
