"""Bounded complexes of free modules with expected stable ranks.

Carries the determinantal/Fitting ideal machinery, stable rank, the McCoy
injectivity test, characteristic ideals and the exactness certification
(depth of the k-th characteristic ideal at least k, for every k), plus the
Koszul and pfaffian constructors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import groebner as gb
from .algebra import AIdeal, AModule, FPAlgebra, is_faithful_ideal
from .depth import DepthCertificate, depth_at_least
from .exterior import (exterior_power_matrix, matrix_minor, poly_det,
                       subsets_colex)
from .ring import FFRError, Poly, RingMismatchError


class RankObstructionError(FFRError):
    """A negative expected rank: the shape would force the trivial ring."""


class RingMatrix:
    """A rows x cols matrix over an FPAlgebra, entries reduced mod J."""

    __slots__ = ("algebra", "rows", "cols", "entries")

    def __init__(self, algebra: FPAlgebra, entries: Sequence[Sequence[Poly]],
                 rows: Optional[int] = None, cols: Optional[int] = None):
        ents = [tuple(algebra.nf(p) for p in row) for row in entries]
        if rows is None:
            rows = len(ents)
        if cols is None:
            cols = len(ents[0]) if ents else 0
        if len(ents) != rows or any(len(r) != cols for r in ents):
            raise ValueError("matrix shape mismatch")
        self.algebra = algebra
        self.rows = rows
        self.cols = cols
        self.entries = tuple(ents)

    @classmethod
    def from_strings(cls, algebra: FPAlgebra,
                     rows: Sequence[Sequence[str]]) -> "RingMatrix":
        return cls(algebra, [[algebra.parse(s) for s in row] for row in rows])

    @classmethod
    def zero(cls, algebra: FPAlgebra, rows: int, cols: int) -> "RingMatrix":
        z = algebra.ring.zero()
        return cls(algebra, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, algebra: FPAlgebra, n: int) -> "RingMatrix":
        one, zero = algebra.ring.one(), algebra.ring.zero()
        return cls(algebra, [[one if i == j else zero for j in range(n)]
                             for i in range(n)], n, n)

    def entry(self, i: int, j: int) -> Poly:
        return self.entries[i][j]

    def column(self, j: int) -> list[Poly]:
        return [self.entries[i][j] for i in range(self.rows)]

    def columns(self) -> list[list[Poly]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "RingMatrix":
        return RingMatrix(self.algebra,
                          [[self.entries[i][j] for i in range(self.rows)]
                           for j in range(self.cols)], self.cols, self.rows)

    def mul(self, other: "RingMatrix") -> "RingMatrix":
        if self.algebra != other.algebra:
            raise RingMismatchError("matrices over different algebras")
        if self.cols != other.rows:
            raise ValueError("inner dimensions disagree")
        zero = self.algebra.ring.zero()
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return RingMatrix(self.algebra, out, self.rows, other.cols)

    def is_zero(self) -> bool:
        return all(p.is_zero for row in self.entries for p in row)

    def det(self) -> Poly:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return self.algebra.nf(poly_det([list(r) for r in self.entries],
                                        self.algebra.ring))

    def minor(self, rset: Sequence[int], cset: Sequence[int]) -> Poly:
        return self.algebra.nf(matrix_minor([list(r) for r in self.entries],
                                            self.algebra.ring, rset, cset))

    def exterior_power(self, r: int) -> "RingMatrix":
        ents = exterior_power_matrix([list(r_) for r_ in self.entries],
                                     self.algebra.ring, r)
        return RingMatrix(self.algebra, ents)

    def __eq__(self, other):
        return (isinstance(other, RingMatrix) and self.algebra == other.algebra
                and self.entries == other.entries)

    def __repr__(self):
        return f"<{self.rows}x{self.cols} matrix over {self.algebra!r}>"


def determinantal_ideal(M: RingMatrix, k: int) -> AIdeal:
    """D_k(M): the k x k minors; <1> for k <= 0, <0> past the format."""
    A = M.algebra
    if k <= 0:
        return AIdeal(A, [A.ring.one()])
    if k > min(M.rows, M.cols):
        return AIdeal(A, [])
    gens = []
    for rset in subsets_colex(M.rows, k):
        for cset in subsets_colex(M.cols, k):
            gens.append(M.minor([i - 1 for i in rset], [j - 1 for j in cset]))
    return AIdeal(A, gens)


def presentation_matrix(E: AModule) -> RingMatrix:
    rows = [list(r) for r in E.presentation]
    if not rows:
        return RingMatrix.zero(E.algebra, E.rank, 0)
    return RingMatrix(E.algebra, rows, E.rank, E.ncols)


def fitting_ideal(E: AModule, n: int) -> AIdeal:
    """F_n(E) = D_(q-n) of a q-row presentation matrix."""
    return determinantal_ideal(presentation_matrix(E), E.rank - n)


def stable_rank_at_least(M: RingMatrix, r: int) -> bool:
    """D_r(M) is faithful."""
    return is_faithful_ideal(M.algebra, determinantal_ideal(M, r))


def is_stable_rank(M: RingMatrix, r: int) -> bool:
    """D_r(M) faithful and D_(r+1)(M) = 0."""
    if not stable_rank_at_least(M, r):
        return False
    return all(g.is_zero for g in determinantal_ideal(M, r + 1).gens)


def mccoy_injective(M: RingMatrix) -> bool:
    """Injectivity of M : A^cols -> A^rows iff D_cols(M) is faithful."""
    return is_faithful_ideal(M.algebra, determinantal_ideal(M, M.cols))


def kernel_generators(M: RingMatrix) -> list[list[Poly]]:
    """Normal-form generators of ker(M : A^cols -> A^rows); test oracle.

    Works over the quotient: a kernel element is a syzygy of the columns
    modulo J, read off the extended-basis run with the relation columns
    adjoined.
    """
    A = M.algebra
    R = A.ring
    cols = M.columns()
    extra = []
    zero = R.zero()
    for rel in A.relations.gens:
        for t in range(M.rows):
            v = [zero] * M.rows
            v[t] = rel
            extra.append(v)
    if not cols:
        return []
    syz = gb.syzygy_module(cols + extra)
    jgb = A.relations_gb()
    out = []
    for s in syz:
        c = [jgb.normal_form(p) for p in s[:M.cols]]
        if any(not p.is_zero for p in c) and c not in out:
            out.append(c)
    return out


# ---------------------------------------------------------------------------
# free complexes

class FreeComplex:
    """0 -> L_m -> ... -> L_1 -> L_0 with d.d = 0 checked at construction.

    `matrices[k-1]` is A_k : L_k -> L_{k-1} (so A_1 comes first); expected
    stable ranks r_0..r_{m+1} are computed from the sizes unless supplied.
    """

    __slots__ = ("algebra", "matrices", "sizes", "ranks")

    def __init__(self, algebra: FPAlgebra, matrices: Sequence[RingMatrix],
                 expected_ranks: Optional[Sequence[int]] = None):
        for M in matrices:
            if M.algebra != algebra:
                raise RingMismatchError("matrix over a different algebra")
        m = len(matrices)
        sizes = []
        if m:
            sizes.append(matrices[0].rows)
            for k in range(m):
                sizes.append(matrices[k].cols)
                if k + 1 < m and matrices[k + 1].rows != matrices[k].cols:
                    raise ValueError(f"size mismatch between A_{k+1} and A_{k+2}")
        else:
            sizes = [0]
        for k in range(m - 1):
            if not matrices[k].mul(matrices[k + 1]).is_zero():
                raise ValueError(f"A_{k+1} A_{k+2} != 0: not a complex")
        if expected_ranks is None:
            ranks = [0] * (m + 2)
            for k in range(m, -1, -1):
                ranks[k] = sizes[k] - ranks[k + 1]
                if ranks[k] < 0:
                    raise RankObstructionError(
                        f"expected rank r_{k} = {ranks[k]} is negative: "
                        "this shape forces the trivial ring")
        else:
            ranks = list(expected_ranks)
            if len(ranks) == m + 1:
                ranks = ranks + [0]
            if len(ranks) != m + 2 or ranks[m + 1] != 0:
                raise ValueError("expected_ranks must be r_0..r_m(+1) with "
                                 "r_{m+1} = 0")
            if any(r < 0 for r in ranks):
                raise RankObstructionError("negative expected rank")
            for k in range(m + 1):
                if sizes[k] != ranks[k] + ranks[k + 1]:
                    raise ValueError(f"p_{k} != r_{k} + r_{k+1}")
        self.algebra = algebra
        self.matrices = tuple(matrices)
        self.sizes = tuple(sizes)
        self.ranks = tuple(ranks)

    @property
    def length(self) -> int:
        return len(self.matrices)

    def matrix(self, k: int) -> RingMatrix:
        """A_k for 1 <= k <= m."""
        return self.matrices[k - 1]

    def __repr__(self):
        shape = " <- ".join(f"A^{p}" for p in self.sizes)
        return f"<complex {shape}>"


def euler_characteristic(C: FreeComplex) -> int:
    """chi = sum (-1)^k p_k = r_0."""
    return C.ranks[0]


def expected_ranks(C: FreeComplex) -> list[int]:
    return list(C.ranks)


def characteristic_ideal(C: FreeComplex, k: int, shift: int = 0) -> AIdeal:
    """D_k := D_(r_k)(A_k); D_(k,l) with shift l; <1> past the length."""
    if k > C.length:
        return AIdeal(C.algebra, [C.algebra.ring.one()])
    return determinantal_ideal(C.matrix(k), C.ranks[k] - shift)


def characteristic_ideals(C: FreeComplex) -> list[AIdeal]:
    return [characteristic_ideal(C, k) for k in range(1, C.length + 1)]


@dataclass(frozen=True)
class ExactnessCondition:
    level: int
    ideal: AIdeal
    required_depth: int
    certificate: Optional[DepthCertificate]

    @property
    def holds(self) -> Optional[bool]:
        return None if self.certificate is None else self.certificate.holds


@dataclass(frozen=True)
class ExactnessReport:
    """Per-level depth conditions; exact iff all of them hold."""

    conditions: tuple[ExactnessCondition, ...]

    @property
    def exact(self) -> bool:
        return all(c.holds for c in self.conditions if c.certificate is not None) \
            and all(c.certificate is not None for c in self.conditions)

    @property
    def failing_level(self) -> Optional[int]:
        for c in self.conditions:
            if c.certificate is not None and not c.holds:
                return c.level
        return None


def certify_exact(C: FreeComplex) -> ExactnessReport:
    """Exactness iff Gr(D_l) >= l for every l; cheapest level first."""
    A = C.algebra
    E = AModule.free(A, 1)
    ideals = characteristic_ideals(C)
    conditions = []
    failed = False
    for level, ideal in enumerate(ideals, start=1):
        if failed:
            conditions.append(ExactnessCondition(level, ideal, level, None))
            continue
        cert = depth_at_least(ideal, E, level)
        conditions.append(ExactnessCondition(level, ideal, level, cert))
        if not cert.holds:
            failed = True
    return ExactnessReport(tuple(conditions))


def elementary_modification(C: FreeComplex, k: int, s: int) -> FreeComplex:
    """Add a trivial A^s summand between L_k and L_{k+1} (1 <= k <= m-1).

    The characteristic ideals are unchanged; only r_{k+1} grows by s.
    """
    m = C.length
    if not 1 <= k <= m - 1:
        raise ValueError("k must be an inner index")
    if s < 0:
        raise ValueError("negative added rank")
    if s == 0:
        return C
    A = C.algebra
    zero = A.ring.zero()
    one = A.ring.one()
    mats = [C.matrix(i) for i in range(1, m + 1)]

    old_k = mats[k - 1]        # A_k : L_k -> L_{k-1}
    new_k = RingMatrix(A, [list(row) + [zero] * s for row in old_k.entries],
                       old_k.rows, old_k.cols + s)

    old_k1 = mats[k]           # A_{k+1} : L_{k+1} -> L_k
    rows = [list(row) + [zero] * s for row in old_k1.entries]
    for i in range(s):
        pad = [zero] * old_k1.cols + [one if j == i else zero for j in range(s)]
        rows.append(pad)
    new_k1 = RingMatrix(A, rows, old_k1.rows + s, old_k1.cols + s)

    mats[k - 1] = new_k
    mats[k] = new_k1
    if k + 1 < m:
        old_k2 = mats[k + 1]   # A_{k+2} : L_{k+2} -> L_{k+1}
        rows2 = [list(row) for row in old_k2.entries]
        for _ in range(s):
            rows2.append([zero] * old_k2.cols)
        mats[k + 1] = RingMatrix(A, rows2, old_k2.rows + s, old_k2.cols)
    ranks = list(C.ranks)
    ranks[k + 1] += s
    return FreeComplex(A, mats, ranks)


def koszul_complex(algebra: FPAlgebra, seq: Sequence[Poly]) -> FreeComplex:
    """The descending Koszul complex of a sequence.

    d_k(e_J) = sum over i in J of (-1)^(pos-1) a_i e_(J minus i), with pos
    the position of i inside J; bases of the exterior powers are colex.
    """
    n = len(seq)
    seq = [algebra.nf(p) for p in seq]
    zero = algebra.ring.zero()
    mats = []
    for k in range(1, n + 1):
        rows_idx = subsets_colex(n, k - 1)
        cols_idx = subsets_colex(n, k)
        row_pos = {s: i for i, s in enumerate(rows_idx)}
        ents = [[zero] * len(cols_idx) for _ in rows_idx]
        for j, J in enumerate(cols_idx):
            for pos, i in enumerate(J):
                K = J[:pos] + J[pos + 1:]
                coeff = seq[i - 1]
                if pos % 2:
                    coeff = -coeff
                ents[row_pos[K]][j] = coeff
        mats.append(RingMatrix(algebra, ents))
    return FreeComplex(algebra, mats)


def pfaffian(entries: Sequence[Sequence[Poly]], ring) -> Poly:
    """Pfaffian of an antisymmetric even-size matrix (Laplace-style)."""
    m = len(entries)
    if m == 0:
        return ring.one()
    if m % 2:
        return ring.zero()

    def rec(idx: tuple[int, ...]) -> Poly:
        if not idx:
            return ring.one()
        i0 = idx[0]
        acc = ring.zero()
        for pos in range(1, len(idx)):
            j = idx[pos]
            a = entries[i0][j]
            if a.is_zero:
                continue
            rest = tuple(t for t in idx if t != i0 and t != j)
            term = a * rec(rest)
            acc = acc - term if pos % 2 == 0 else acc + term
        return acc

    return rec(tuple(range(m)))


@dataclass(frozen=True)
class PfaffianData:
    """Q row, the 4-term complex, and its polynomial-identity re-checks."""

    Q: RingMatrix
    complex: FreeComplex
    qx_is_zero: bool
    adjugate_identity: bool


def adjugate(M: RingMatrix) -> RingMatrix:
    n = M.rows
    ents = [list(r) for r in M.entries]
    A = M.algebra
    out = [[A.ring.zero()] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rset = [r for r in range(n) if r != j]
            cset = [c for c in range(n) if c != i]
            cof = matrix_minor(ents, A.ring, rset, cset)
            if (i + j) % 2:
                cof = -cof
            out[i][j] = cof
    return RingMatrix(A, out, n, n)


def pfaffian_data(X: RingMatrix) -> PfaffianData:
    """q_i = (-1)^i pf(X minus row/col i); complex A -> A^n -> A^n -> A."""
    A = X.algebra
    n = X.rows
    if X.cols != n or n % 2 == 0:
        raise ValueError("need an odd-size square matrix")
    for i in range(n):
        for j in range(n):
            if not A.nf(X.entries[i][j] + X.entries[j][i]).is_zero:
                raise ValueError("matrix is not antisymmetric")
    ents = [list(r) for r in X.entries]
    qs = []
    for i in range(1, n + 1):
        keep = [t for t in range(n) if t != i - 1]
        sub = [[ents[a][b] for b in keep] for a in keep]
        p = pfaffian(sub, A.ring)
        qs.append(-p if i % 2 else p)
    Q = RingMatrix(A, [qs], 1, n)
    qx = Q.mul(X).is_zero()
    adj = adjugate(X)
    tQQ = Q.transpose().mul(Q)
    adj_ok = all(A.nf(adj.entries[i][j] - tQQ.entries[i][j]).is_zero
                 for i in range(n) for j in range(n))
    cplx = FreeComplex(A, [Q, X, Q.transpose()])
    return PfaffianData(Q, cplx, qx, adj_ok)
