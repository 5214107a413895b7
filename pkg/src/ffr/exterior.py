"""Exterior algebra of a free module A^n.

Multivectors map p-subsets of {1..n} (sorted index tuples) to ring
elements.  One subset enumerator - colexicographic - is shared by every
consumer (exterior powers of matrices, Cayley factorization, Taylor bases)
so that matrix layouts line up.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .algebra import FPAlgebra
from .ring import Poly, PolyRing, RingMismatchError


@lru_cache(maxsize=None)
def subsets_colex(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of {1..n} in colexicographic order."""
    subs = sorted(combinations(range(1, n + 1), k),
                  key=lambda s: tuple(reversed(s)))
    return tuple(subs)


@lru_cache(maxsize=None)
def subset_index(n: int, k: int) -> dict:
    return {s: i for i, s in enumerate(subsets_colex(n, k))}


def eps_sign(I: Sequence[int], J: Sequence[int]) -> int:
    """(-1)^r with r = #{(i, j) in I x J : i > j}."""
    r = sum(1 for i in I for j in J if i > j)
    return -1 if r % 2 else 1


def complement(I: Sequence[int], n: int) -> tuple[int, ...]:
    s = set(I)
    return tuple(i for i in range(1, n + 1) if i not in s)


# ---------------------------------------------------------------------------
# determinants of polynomial matrices (Laplace expansion, memoized per call)

def poly_det(rows: Sequence[Sequence[Poly]], ring: PolyRing) -> Poly:
    """Determinant of a square matrix of polynomials."""
    m = len(rows)
    if any(len(r) != m for r in rows):
        raise ValueError("matrix is not square")
    if m == 0:
        return ring.one()
    memo: dict = {}

    def rec(rset: tuple[int, ...], cset: tuple[int, ...]) -> Poly:
        if len(rset) == 1:
            return rows[rset[0]][cset[0]]
        key = (rset, cset)
        got = memo.get(key)
        if got is not None:
            return got
        c0 = cset[0]
        acc = ring.zero()
        for pos, r in enumerate(rset):
            entry = rows[r][c0]
            if entry.is_zero:
                continue
            sub = rec(rset[:pos] + rset[pos + 1:], cset[1:])
            term = entry * sub
            acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    return rec(tuple(range(m)), tuple(range(m)))


def matrix_minor(rows: Sequence[Sequence[Poly]], ring: PolyRing,
                 rset: Sequence[int], cset: Sequence[int]) -> Poly:
    """Minor on row indices rset and column indices cset (0-based)."""
    return poly_det([[rows[i][j] for j in cset] for i in rset], ring)


@dataclass(frozen=True)
class MultiVector:
    """An element of Lambda^p(A^n): sorted index tuples -> coefficients."""

    algebra: FPAlgebra
    n: int
    grade: int
    coords: tuple  # tuple of (subset, Poly) pairs, colex order, zeros dropped

    @classmethod
    def from_dict(cls, algebra: FPAlgebra, n: int, grade: int,
                  coords: dict) -> "MultiVector":
        index = subset_index(n, grade)
        items = []
        for s in subsets_colex(n, grade):
            c = coords.get(s)
            if c is not None:
                c = algebra.nf(c)
                if not c.is_zero:
                    items.append((s, c))
        for s in coords:
            if s not in index:
                raise ValueError(f"bad subset {s} for grade {grade}, n={n}")
        return cls(algebra, n, grade, tuple(items))

    @classmethod
    def zero(cls, algebra: FPAlgebra, n: int, grade: int) -> "MultiVector":
        return cls(algebra, n, grade, ())

    @classmethod
    def basis(cls, algebra: FPAlgebra, n: int, I: Sequence[int]) -> "MultiVector":
        I = tuple(I)
        return cls.from_dict(algebra, n, len(I), {I: algebra.ring.one()})

    @classmethod
    def scalar(cls, algebra: FPAlgebra, n: int, c: Poly) -> "MultiVector":
        return cls.from_dict(algebra, n, 0, {(): c})

    @classmethod
    def vector(cls, algebra: FPAlgebra, coords: Sequence[Poly]) -> "MultiVector":
        return cls.from_dict(algebra, len(coords), 1,
                             {(i + 1,): c for i, c in enumerate(coords)})

    def as_dict(self) -> dict:
        return dict(self.coords)

    def coeff(self, I: Sequence[int]) -> Poly:
        d = self.as_dict()
        return d.get(tuple(I), self.algebra.ring.zero())

    def coord_list(self) -> list[Poly]:
        """Coordinates over the colex basis of p-subsets, dense."""
        d = self.as_dict()
        zero = self.algebra.ring.zero()
        return [d.get(s, zero) for s in subsets_colex(self.n, self.grade)]

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def _check(self, other: "MultiVector"):
        if self.algebra != other.algebra or self.n != other.n:
            raise RingMismatchError("multivectors over different modules")

    def __add__(self, other: "MultiVector") -> "MultiVector":
        self._check(other)
        if self.grade != other.grade:
            raise ValueError("grades differ")
        d = self.as_dict()
        for s, c in other.coords:
            d[s] = d.get(s, self.algebra.ring.zero()) + c
        return MultiVector.from_dict(self.algebra, self.n, self.grade, d)

    def __sub__(self, other: "MultiVector") -> "MultiVector":
        return self + other.scale(-self.algebra.ring.one())

    def scale(self, c: Poly) -> "MultiVector":
        return MultiVector.from_dict(self.algebra, self.n, self.grade,
                                     {s: c * v for s, v in self.coords})

    def __repr__(self):
        if self.is_zero:
            return "<0>"
        parts = [f"({v})e{''.join(map(str, s)) if s else '_'}"
                 for s, v in self.coords]
        return "<" + " + ".join(parts) + ">"


def wedge(x: MultiVector, y: MultiVector) -> MultiVector:
    """Graded product: e_I ^ e_J = eps_{I,J} e_{I u J}, zero on overlap."""
    x._check(y)
    A = x.algebra
    out: dict = {}
    for I, cI in x.coords:
        setI = set(I)
        for J, cJ in y.coords:
            if setI & set(J):
                continue
            K = tuple(sorted(I + J))
            c = cI * cJ
            if eps_sign(I, J) < 0:
                c = -c
            out[K] = out.get(K, A.ring.zero()) + c
    return MultiVector.from_dict(A, x.n, x.grade + y.grade, out)


def decomposable(algebra: FPAlgebra, columns: Sequence[Sequence[Poly]],
                 n: int | None = None) -> MultiVector:
    """u_1 ^ ... ^ u_k for the columns of an n x k matrix.

    The I-coordinate is the k x k minor on rows I.
    """
    k = len(columns)
    if n is None:
        if not columns:
            raise ValueError("need n for the empty wedge")
        n = len(columns[0])
    if any(len(c) != n for c in columns):
        raise ValueError("ragged columns")
    if k > n:
        raise ValueError("more columns than the ambient rank")
    rows = [[columns[j][i] for j in range(k)] for i in range(n)]
    coords = {}
    for I in subsets_colex(n, k):
        coords[I] = matrix_minor(rows, algebra.ring, [i - 1 for i in I],
                                 list(range(k)))
    return MultiVector.from_dict(algebra, n, k, coords)


def pairing(u: MultiVector, v: MultiVector) -> Poly:
    """<u | v> = sum_I u_I v_I; equals det(tU V) on decomposables."""
    u._check(v)
    if u.grade != v.grade:
        raise ValueError("grades differ")
    dv = v.as_dict()
    acc = u.algebra.ring.zero()
    for s, c in u.coords:
        w = dv.get(s)
        if w is not None:
            acc = acc + c * w
    return u.algebra.nf(acc)


def hodge_right(x: MultiVector) -> MultiVector:
    """x* with coordinates <x*, e_J> = [x ^ e_J]; e_J* = eps_{J,Jc} e_Jc."""
    A = x.algebra
    n = x.n
    out: dict = {}
    for I, c in x.coords:
        J = complement(I, n)
        out[J] = c if eps_sign(I, J) > 0 else -c
    return MultiVector.from_dict(A, n, n - x.grade, out)


def hodge_left(x: MultiVector) -> MultiVector:
    """Left companion determined by Hl(e_J) ^ e_J = e_{1..n}; tests only."""
    A = x.algebra
    n = x.n
    out: dict = {}
    for I, c in x.coords:
        J = complement(I, n)
        out[J] = c if eps_sign(J, I) > 0 else -c
    return MultiVector.from_dict(A, n, n - x.grade, out)


def interior_right(x: MultiVector, u: MultiVector) -> MultiVector:
    """Right interior product by a grade-1 vector; a left antiderivation.

    On basis elements: e_I |_ e_j = (-1)^(pos-1) e_{I minus j} when j is the
    pos-th index of I, zero when j is not in I.
    """
    if u.grade != 1:
        raise ValueError("contraction direction must have grade 1")
    x._check(u)
    A = x.algebra
    if x.grade == 0:
        return MultiVector.zero(A, x.n, 0)
    du = u.as_dict()
    out: dict = {}
    for I, c in x.coords:
        for pos, j in enumerate(I):
            w = du.get((j,))
            if w is None:
                continue
            K = I[:pos] + I[pos + 1:]
            term = c * w
            if pos % 2:
                term = -term
            out[K] = out.get(K, A.ring.zero()) + term
    return MultiVector.from_dict(A, x.n, x.grade - 1, out)


def sylvester_plucker(algebra: FPAlgebra, x_list: Sequence[Sequence[Poly]],
                      z_list: Sequence[Sequence[Poly]]):
    """Both sides of the Sylvester-Pluecker expansion, plus their equality.

    LHS: [x_1 ^ .. ^ x_n] * (z_1 ^ .. ^ z_p); RHS: the sum over p-subsets K
    of [x with the K-entries replaced by z] * wedge of the kept x_k.
    """
    n = len(x_list)
    p = len(z_list)
    if any(len(v) != n for v in x_list) or any(len(v) != n for v in z_list):
        raise ValueError("vectors must live in A^n")
    if p > n:
        raise ValueError("too many replacement vectors")
    R = algebra.ring
    det_x = poly_det([[x_list[j][i] for j in range(n)] for i in range(n)], R)
    lhs = decomposable(algebra, z_list, n).scale(det_x)
    rhs = MultiVector.zero(algebra, n, p)
    for K in subsets_colex(n, p):
        replaced = list(x_list)
        for idx, k in enumerate(K):
            replaced[k - 1] = z_list[idx]
        coeff = poly_det([[replaced[j][i] for j in range(n)]
                          for i in range(n)], R)
        kept = [x_list[k - 1] for k in K]
        rhs = rhs + decomposable(algebra, kept, n).scale(coeff)
    return lhs, rhs, lhs == rhs


def are_proportional(u: MultiVector, v: MultiVector) -> bool:
    """True iff all 2x2 coordinate cross products vanish in the algebra."""
    u._check(v)
    if u.grade != v.grade:
        raise ValueError("grades differ")
    A = u.algebra
    du, dv = u.as_dict(), v.as_dict()
    subs = subsets_colex(u.n, u.grade)
    zero = A.ring.zero()
    for a in range(len(subs)):
        for b in range(a + 1, len(subs)):
            I, J = subs[a], subs[b]
            cross = (du.get(I, zero) * dv.get(J, zero)
                     - du.get(J, zero) * dv.get(I, zero))
            if not A.nf(cross).is_zero:
                return False
    return True


def exterior_power_matrix(entries: Sequence[Sequence[Poly]], ring: PolyRing,
                          r: int) -> list[list[Poly]]:
    """Matrix of Lambda^r of a map, rows/columns indexed colex.

    Entry (I, J) is the r x r minor of the underlying matrix on rows I and
    columns J.
    """
    nrows = len(entries)
    ncols = len(entries[0]) if entries else 0
    if r == 0:
        return [[ring.one()]]
    rows_idx = subsets_colex(nrows, r)
    cols_idx = subsets_colex(ncols, r)
    out = []
    for I in rows_idx:
        line = []
        for J in cols_idx:
            line.append(matrix_minor(entries, ring, [i - 1 for i in I],
                                     [j - 1 for j in J]))
        out.append(line)
    return out
