"""Jacobi matrix, minors, rank, non-singular index sets and Jacobian ideals.

Index tuples are 1-based tuples of row (generator) or column (variable)
indices. Minors accept tuples in any order: the columns are taken in the
order given, so ``minor(i, (2, 1)) == -minor(i, (1, 2))`` and repeated
indices give zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .groebner import GroebnerBasis, buchberger
from .polyring import determinant, partial
from .quotient import CoordinateRing, LocalizedElement, Residue

IndexTuple = tuple


class SingularTupleError(ValueError):
    pass


def sort_with_sign(t: Sequence[int]):
    """Sorted copy of t and the sign of the sorting permutation (0 on repeats)."""
    t = list(t)
    if len(set(t)) != len(t):
        return tuple(sorted(t)), 0
    sign = 1
    for a in range(len(t)):
        for b in range(a + 1, len(t)):
            if t[a] > t[b]:
                sign = -sign
    return tuple(sorted(t)), sign


def tuples(bound: int, size: int) -> list:
    return list(combinations(range(1, bound + 1), size))


class JacobiData:
    """Jacobi matrix of a coordinate ring with cached minors and rank data."""

    def __init__(self, ring: CoordinateRing):
        self.ring = ring
        P = ring.ring
        self.lifted = [
            [partial(f, j) for j in range(1, ring.n + 1)] for f in ring.generators
        ]
        self.matrix = [[ring.project(e) for e in row] for row in self.lifted]
        self._minors: dict = {}
        self._ideals: dict = {}
        self._one = P.one
        self._compute_rank()

    @property
    def m(self) -> int:
        return self.ring.m

    @property
    def n(self) -> int:
        return self.ring.n

    # -- minors ------------------------------------------------------------
    def minor(self, i: Sequence[int], j: Sequence[int]) -> Residue:
        """Delta(i, j) as a residue in A; Delta((), ()) = 1."""
        if len(i) != len(j):
            raise ValueError(f"row tuple {tuple(i)} and column tuple {tuple(j)} differ in size")
        for a in i:
            if not 1 <= a <= self.m:
                raise IndexError(f"row index {a} out of range 1..{self.m}")
        for b in j:
            if not 1 <= b <= self.n:
                raise IndexError(f"column index {b} out of range 1..{self.n}")
        si, sgn_i = sort_with_sign(i)
        sj, sgn_j = sort_with_sign(j)
        if sgn_i == 0 or sgn_j == 0:
            return self.ring.zero
        key = (si, sj)
        val = self._minors.get(key)
        if val is None:
            sub = [[self.lifted[a - 1][b - 1] for b in sj] for a in si]
            val = self.ring.project(determinant(sub, one=self._one))
            self._minors[key] = val
        return val if sgn_i * sgn_j == 1 else -val

    def submatrix(self, i: Sequence[int], j: Sequence[int]) -> list:
        return [[self.matrix[a - 1][b - 1] for b in j] for a in i]

    # -- rank and index sets -----------------------------------------------
    def _compute_rank(self):
        # Grow a nonzero minor one row and column at a time; fall back to a
        # full search at the next size when no bordering minor is nonzero.
        i, j = (), ()
        while True:
            grown = self._extend(i, j)
            if grown is None:
                grown = self._search(len(i) + 1)
            if grown is None:
                break
            i, j = grown
        self.r = len(i)
        r = self.r
        if r >= self.n:
            raise ValueError("Jacobi matrix has full column rank; A would be a field")
        self._seed = (i, j)
        self.J_r = [jj for jj in tuples(self.n, r) if not self.minor(i, jj).is_zero()]
        self.I_r = [ii for ii in tuples(self.m, r) if not self.minor(ii, self.J_r[0]).is_zero()]
        Jset = set(self.J_r)
        self.J_r1 = [
            jj
            for jj in tuples(self.n, r + 1)
            if any(jj[:k] + jj[k + 1:] in Jset for k in range(r + 1))
        ]
        self.pivot = (self.I_r[0], self.J_r[0])

    def _extend(self, i, j):
        for a in range(1, self.m + 1):
            if a in i:
                continue
            for b in range(1, self.n + 1):
                if b in j:
                    continue
                ii, jj = tuple(sorted(i + (a,))), tuple(sorted(j + (b,)))
                if not self.minor(ii, jj).is_zero():
                    return ii, jj
        return None

    def _search(self, k):
        if k > min(self.m, self.n):
            return None
        for ii in tuples(self.m, k):
            for jj in tuples(self.n, k):
                if not self.minor(ii, jj).is_zero():
                    return ii, jj
        return None

    @property
    def critical_set(self) -> list:
        return self.J_r1

    def is_nonsingular_row(self, i) -> bool:
        return tuple(i) in set(self.I_r)

    def is_nonsingular_col(self, j) -> bool:
        return tuple(j) in set(self.J_r)

    # -- Jacobian ideals ---------------------------------------------------
    def jacobian_ideal(self, k: int) -> "JacobianIdeal":
        if not 0 <= k <= self.r + 1:
            raise ValueError(f"k={k} out of range 0..{self.r + 1}")
        if k in self._ideals:
            return self._ideals[k]
        A = self.ring
        if k == 0:
            gens = [A.one]
        else:
            gens = [self.minor(ii, jj) for ii in tuples(self.m, k) for jj in tuples(self.n, k)]
        lifts = [g.lift() for g in gens] + list(A.gb.generators)
        lifts = [p for p in lifts if not p.is_zero()]
        gb = buchberger(lifts) if lifts else GroebnerBasis((), A.ring)
        ideal = JacobianIdeal(k, tuple(gens), gb)
        self._ideals[k] = ideal
        return ideal

    def ideal_gb(self, k: int) -> GroebnerBasis:
        """GB of lift(a_k) + I; a_{r+1} is I itself."""
        if k > self.r:
            return self.ring.gb
        return self.jacobian_ideal(k).gb

    # -- change of basis matrices -----------------------------------------
    def replaced(self, j: Sequence[int], nu: int, new: int) -> tuple:
        """j with its nu-th entry (0-based) replaced, order kept."""
        j = tuple(j)
        return j[:nu] + (new,) + j[nu + 1:]

    def change_of_basis_H(self, i, j, jp) -> list:
        """H(j, j') over A_Delta, Delta = Delta(i, j)."""
        i, j, jp = tuple(i), tuple(j), tuple(jp)
        if i not in self.I_r:
            raise SingularTupleError(f"row tuple {i} is singular")
        for t in (j, jp):
            if t not in self.J_r:
                raise SingularTupleError(f"column tuple {t} is singular")
        delta = self.minor(i, j)
        r = self.r
        return [
            [LocalizedElement(self.minor(i, self.replaced(j, nu, jp[mu])), delta, 1) for mu in range(r)]
            for nu in range(r)
        ]


@dataclass(frozen=True)
class JacobianIdeal:
    k: int
    generators: tuple
    gb: GroebnerBasis

    def is_unit(self) -> bool:
        return self.gb.is_unit()


def jacobi_data(ring: CoordinateRing) -> JacobiData:
    data = ring.cache.get("jacobi")
    if data is None:
        data = ring.cache["jacobi"] = JacobiData(ring)
    return data


def jacobi_matrix(ring: CoordinateRing) -> list:
    return jacobi_data(ring).matrix


def minor(d: JacobiData, i, j) -> Residue:
    return d.minor(i, j)


def rank(d: JacobiData) -> int:
    return d.r


def jacobian_ideal(d: JacobiData, k: int) -> JacobianIdeal:
    if not 1 <= k <= d.r:
        raise ValueError(f"k={k} out of range 1..{d.r}")
    return d.jacobian_ideal(k)


def is_smooth(ring: CoordinateRing) -> bool:
    d = jacobi_data(ring)
    return d.jacobian_ideal(d.r).is_unit()


@dataclass(frozen=True)
class PointReport:
    on_variety: bool
    singular: bool | None = None
    tangent_dim: int | None = None


def scalar_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    M = [list(map(Fraction, row)) for row in rows]
    if not M:
        return 0
    rank_ = 0
    cols = len(M[0])
    for c in range(cols):
        pivot = next((rr for rr in range(rank_, len(M)) if M[rr][c] != 0), None)
        if pivot is None:
            continue
        M[rank_], M[pivot] = M[pivot], M[rank_]
        for rr in range(len(M)):
            if rr != rank_ and M[rr][c] != 0:
                f = M[rr][c] / M[rank_][c]
                M[rr] = [a - f * b for a, b in zip(M[rr], M[rank_])]
        rank_ += 1
    return rank_


def point_report(ring: CoordinateRing, c: Sequence) -> PointReport:
    if len(c) != ring.n:
        raise ValueError(f"point has {len(c)} coordinates, expected {ring.n}")
    c = [Fraction(v) for v in c]
    if any(f.evaluate(c) != 0 for f in ring.generators):
        return PointReport(on_variety=False)
    d = jacobi_data(ring)
    a_r = d.jacobian_ideal(d.r)
    singular = all(g.lift().evaluate(c) == 0 for g in a_r.generators)
    J = [[e.evaluate(c) for e in row] for row in d.lifted]
    return PointReport(True, singular, ring.n - scalar_rank(J))


def verify_minor_identity(d: JacobiData, i, ip, j, jp) -> bool:
    """Delta(i', j') Delta(i, j) == Delta(i', j) Delta(i, j') in A."""
    for t in (i, ip):
        if tuple(t) not in d.I_r:
            raise SingularTupleError(f"row tuple {tuple(t)} is singular")
    for t in (j, jp):
        if tuple(t) not in d.J_r:
            raise SingularTupleError(f"column tuple {tuple(t)} is singular")
    return d.minor(ip, jp) * d.minor(i, j) == d.minor(ip, j) * d.minor(i, jp)


def change_of_basis_H(d: JacobiData, i, j, jp) -> list:
    return d.change_of_basis_H(i, j, jp)


def localized_matmul(X: list, Y: list) -> list:
    rows, inner, cols = len(X), len(Y), len(Y[0]) if Y else 0
    out = []
    for a in range(rows):
        row = []
        for b in range(cols):
            acc = None
            for t in range(inner):
                term = X[a][t] * Y[t][b]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return out
