"""Exact multivariate polynomials over the rationals.

Monomials are exponent tuples, coefficients are :class:`fractions.Fraction`.
Variable indices in the public API are 1-based, matching the tuple
conventions used everywhere else in the package (``partial(p, 1)`` is the
derivative with respect to the first variable).
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple  # tuple[int, ...] of exponents
Scalar = Union[int, Fraction]

DEFAULT_DET_BOUND = 8


class MonomialOrder(enum.Enum):
    DEGREVLEX = "degrevlex"
    DEGLEX = "deglex"
    LEX = "lex"

    @classmethod
    def coerce(cls, order) -> "MonomialOrder":
        if isinstance(order, cls):
            return order
        try:
            return cls(str(order).lower())
        except ValueError:
            raise ValueError(f"unknown monomial order {order!r}") from None

    def key(self, mono: Monomial):
        """Sort key: larger key means larger monomial."""
        if self is MonomialOrder.LEX:
            return mono
        if self is MonomialOrder.DEGLEX:
            return (sum(mono), mono)
        return (sum(mono), tuple(-e for e in reversed(mono)))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class PolyRing:
    """The ambient ring Q[x_1..x_n] with a fixed monomial order."""

    def __init__(self, names: Sequence[str], order="degrevlex"):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self.n = len(names)
        self.order = MonomialOrder.coerce(order)
        self._key = self.order.key

    def __repr__(self):
        return f"PolyRing({list(self.names)}, {self.order.value!r})"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.names, self.order))

    def with_order(self, order) -> "PolyRing":
        order = MonomialOrder.coerce(order)
        return self if order == self.order else PolyRing(self.names, order)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Scalar) -> "Polynomial":
        return Polynomial(self, {(0,) * self.n: Fraction(c)})

    def gen(self, k: int) -> "Polynomial":
        """The k-th variable (1-based)."""
        if not 1 <= k <= self.n:
            raise IndexError(f"variable index {k} out of range 1..{self.n}")
        mono = tuple(1 if t == k - 1 else 0 for t in range(self.n))
        return Polynomial(self, {mono: Fraction(1)})

    @property
    def gens(self) -> tuple:
        return tuple(self.gen(k) for k in range(1, self.n + 1))

    def monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.n or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps} for {self.n} variables")
        return Polynomial(self, {exps: Fraction(coeff)})

    def monomials_up_to(self, degree: int) -> list:
        """All exponent tuples of total degree <= degree, ascending in the order."""
        out = []

        def rec(prefix, left, slots):
            if slots == 0:
                out.append(tuple(prefix))
                return
            for e in range(left + 1):
                rec(prefix + [e], left - e, slots - 1)

        rec([], degree, self.n)
        out.sort(key=self._key)
        return out


class Polynomial:
    """Immutable polynomial; ``terms`` maps exponent tuples to nonzero Fractions."""

    __slots__ = ("ring", "_terms", "_lm", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, Scalar]):
        self.ring = ring
        self._terms = {m: Fraction(c) for m, c in terms.items() if c != 0}
        self._lm = None
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        # terms already cleaned: Fraction values, no zeros
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._lm = None
        p._hash = None
        return p

    # -- structure ---------------------------------------------------------
    @property
    def n(self) -> int:
        return self.ring.n

    def terms(self) -> list:
        """(monomial, coefficient) pairs sorted descending by the ring order."""
        key = self.ring._key
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=True)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        zero = (0,) * self.n
        return all(m == zero for m in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def leading_monomial(self) -> Monomial:
        if self._lm is None:
            if not self._terms:
                raise ValueError("zero polynomial has no leading monomial")
            self._lm = max(self._terms, key=self.ring._key)
        return self._lm

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def monic(self) -> "Polynomial":
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return Polynomial._raw(self.ring, {m: c / lc for m, c in self._terms.items()})

    def in_ring(self, ring: PolyRing) -> "Polynomial":
        """Re-home into a ring with the same variables (e.g. another order)."""
        if ring.names != self.ring.names:
            raise ValueError("variable lists differ")
        return Polynomial._raw(ring, self._terms)

    # -- arithmetic --------------------------------------------------------
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring.n != self.ring.n:
                raise ValueError(
                    f"mismatched variable counts: {self.ring.n} vs {other.ring.n}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero
            c0 = Fraction(other)
            return Polynomial._raw(self.ring, {m: c * c0 for m, c in self._terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def mul_term(self, mono: Monomial, coeff: Fraction) -> "Polynomial":
        if coeff == 0:
            return self.ring.zero
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self._terms.items()},
        )

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.n == other.ring.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus / evaluation --------------------------------------------
    def partial(self, k: int) -> "Polynomial":
        return partial(self, k)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.n:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.n}")
        point = [Fraction(c) for c in point]
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_terms(self.terms(), self.ring.names)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms: Iterable, names: Sequence[str]) -> str:
    """Render sorted terms as ``2*x^2*y - 3/2*z + 1`` (parseable by the CLI grammar)."""
    pieces = []
    for mono, c in terms:
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def partial(p: Polynomial, k: int) -> Polynomial:
    """Formal partial derivative with respect to the k-th variable (1-based)."""
    if not 1 <= k <= p.n:
        raise IndexError(f"variable index {k} out of range 1..{p.n}")
    t = k - 1
    out = {}
    for m, c in p._terms.items():
        e = m[t]
        if e:
            out[m[:t] + (e - 1,) + m[t + 1:]] = c * e
    return Polynomial._raw(p.ring, out)


def determinant(matrix: Sequence[Sequence], one=None, bound: int = DEFAULT_DET_BOUND):
    """Exact determinant of a square matrix of ring elements.

    Laplace expansion memoized over the set of already-used columns, so
    the cost is O(2^k * k) ring operations for a k x k matrix. Entries may
    be Polynomials, Residues or Fractions; ``one`` is returned for the
    empty matrix (defaults to Fraction(1)).
    """
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if k > bound:
        raise ValueError(f"matrix size {k} exceeds determinant bound {bound}")
    if k == 0:
        return Fraction(1) if one is None else one
    # dp maps a bitmask of used columns to the signed partial sum over the
    # first popcount(mask) rows.
    dp = {0: None}
    for row in matrix:
        nxt: dict = {}
        for mask, acc in dp.items():
            for c in range(k):
                bit = 1 << c
                if mask & bit:
                    continue
                entry = row[c]
                if _is_zero(entry):
                    continue
                inversions = bin(mask >> (c + 1)).count("1")
                term = entry if acc is None else acc * entry
                if inversions % 2:
                    term = -term
                key = mask | bit
                nxt[key] = term if key not in nxt else nxt[key] + term
        dp = nxt
        if not dp:
            break
    full = (1 << k) - 1
    if full in dp:
        return dp[full]
    # every expansion path hit a zero entry
    sample = matrix[0][0]
    return sample * 0


def _is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()
