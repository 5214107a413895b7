"""Finitely presented algebras A = k[X]/J and finitely presented A-modules.

Every A-level decision is performed in k[X] with the relation ideal J
adjoined; no quotient-ring arithmetic type exists.  A module is the
cokernel of a presentation matrix: M = A^q / (column span + J A^q).
"""

from __future__ import annotations

from typing import Optional, Sequence

from . import groebner as gb
from .ring import Poly, PolyRing, RingMismatchError, embed_append, parse_poly


class FPAlgebra:
    """A base ring k[X1..Xn]/J given by ring and relation ideal J."""

    __slots__ = ("ring", "relations", "_gb")

    def __init__(self, ring: PolyRing, relations: Sequence[Poly] = ()):
        for r in relations:
            if r.ring != ring:
                raise RingMismatchError("relation in a different ring")
        self.ring = ring
        self.relations = gb.IdealGens(ring, relations)
        self._gb = None

    @classmethod
    def polynomial(cls, ring: PolyRing) -> "FPAlgebra":
        return cls(ring, ())

    def relations_gb(self) -> gb.GroebnerBasis:
        if self._gb is None:
            self._gb = self.relations.groebner()
        return self._gb

    def nf(self, p: Poly) -> Poly:
        """Canonical representative of p modulo J."""
        return self.relations_gb().normal_form(p)

    def parse(self, src: str) -> Poly:
        return parse_poly(src, self.ring)

    def is_polynomial_ring(self) -> bool:
        return not self.relations.gens

    def extend_append(self, names: Sequence[str]) -> "FPAlgebra":
        """A[T1..Tk]: free polynomial extension, relations carried over."""
        ext = self.ring.extend_append(names)
        return FPAlgebra(ext, [embed_append(r, ext) for r in self.relations.gens])

    def __eq__(self, other):
        return (isinstance(other, FPAlgebra) and self.ring == other.ring
                and self.relations.gens == other.relations.gens)

    def __hash__(self):
        return hash((self.ring, self.relations.gens))

    def __repr__(self):
        if self.is_polynomial_ring():
            return f"<algebra {self.ring}>"
        rel = ", ".join(map(str, self.relations.gens))
        return f"<algebra {self.ring}/({rel})>"


class AIdeal:
    """A finitely generated ideal of A, stored by representatives mod J."""

    __slots__ = ("algebra", "gens")

    def __init__(self, algebra: FPAlgebra, gens: Sequence[Poly]):
        normalized = []
        for g in gens:
            if g.ring != algebra.ring:
                raise RingMismatchError("generator in a different ring")
            r = algebra.nf(g)
            if r.is_zero:
                continue
            if any(r == h or r == -h for h in normalized):
                continue
            normalized.append(r)
        self.algebra = algebra
        self.gens = tuple(normalized)

    def lifted(self) -> gb.IdealGens:
        """The preimage ideal <gens> + J in k[X]."""
        return gb.IdealGens(self.algebra.ring,
                            list(self.gens) + list(self.algebra.relations.gens))

    def __repr__(self):
        return f"<AIdeal ({', '.join(map(str, self.gens))})>"


class AModule:
    """M = A^q / (column span of the presentation + J A^q)."""

    __slots__ = ("algebra", "rank", "presentation")

    def __init__(self, algebra: FPAlgebra, rank: int,
                 presentation: Sequence[Sequence[Poly]] = ()):
        if rank < 0:
            raise ValueError("negative rank")
        rows = [tuple(algebra.nf(p) for p in row) for row in presentation]
        if rows and len(rows) != rank:
            raise ValueError("presentation must have `rank` rows")
        if len({len(r) for r in rows}) > 1:
            raise ValueError("ragged presentation matrix")
        self.algebra = algebra
        self.rank = rank
        self.presentation = tuple(rows)

    @classmethod
    def free(cls, algebra: FPAlgebra, rank: int) -> "AModule":
        return cls(algebra, rank, ())

    @classmethod
    def quotient_by_ideal(cls, a: AIdeal) -> "AModule":
        """A/a as a rank-1 module."""
        return cls(a.algebra, 1, [list(a.gens)])

    @property
    def ncols(self) -> int:
        return len(self.presentation[0]) if self.presentation else 0

    def relation_columns(self) -> list[list[Poly]]:
        return [[self.presentation[i][j] for i in range(self.rank)]
                for j in range(self.ncols)]

    def base_vectors(self) -> list[list[Poly]]:
        """Presentation columns plus J e_t: the submodule W with M = A^q/W."""
        R = self.algebra.ring
        zero = R.zero()
        vs = self.relation_columns()
        for rel in self.algebra.relations.gens:
            for t in range(self.rank):
                v = [zero] * self.rank
                v[t] = rel
                vs.append(v)
        return vs

    def transport(self, algebra: FPAlgebra) -> "AModule":
        """Reinterpret over a free polynomial extension of the base algebra."""
        ext = algebra.ring
        rows = [[embed_append(p, ext) for p in row] for row in self.presentation]
        return AModule(algebra, self.rank, rows)

    def __repr__(self):
        return f"<AModule rank {self.rank}, {self.ncols} relations>"


# ---------------------------------------------------------------------------
# submodule machinery (internal, shared with depth)

def submodule_basis(vectors: Sequence[Sequence[Poly]], rank: int,
                    ring: PolyRing) -> gb.ModuleBasis:
    return gb.module_gb(list(vectors), rank=rank, ring=ring)


def module_colon_scalar(vectors: Sequence[Sequence[Poly]], f: Poly, rank: int,
                        ring: PolyRing) -> list[list[Poly]]:
    """Generators of (W : f) = {x in R^rank : f x in W}."""
    if rank == 1:
        I = gb.IdealGens(ring, [v[0] for v in vectors])
        if f.is_zero:
            return [[ring.one()]]
        colon = gb.ideal_colon_poly(I, f)
        return [[g] for g in colon.gens]
    zero = ring.zero()
    mains = []
    for t in range(rank):
        v = [zero] * rank
        v[t] = f
        mains.append(v)
    syz = gb.syzygy_module(mains + list(vectors))
    result = []
    for s in syz:
        x = s[:rank]
        if any(not p.is_zero for p in x):
            result.append(list(x))
    return result


def module_colon_ideal(vectors: Sequence[Sequence[Poly]],
                       ideal_gens: Sequence[Poly], rank: int,
                       ring: PolyRing) -> list[list[Poly]]:
    """Generators of (W : a) = {x : g x in W for every generator g of a}."""
    gens = [g for g in ideal_gens if not g.is_zero]
    if not gens:
        # (W : 0) is everything
        out = []
        for t in range(rank):
            v = [ring.zero()] * rank
            v[t] = ring.one()
            out.append(v)
        return out
    k = len(gens)
    zero = ring.zero()
    mains = []
    for t in range(rank):
        v = [zero] * (rank * k)
        for i, g in enumerate(gens):
            v[i * rank + t] = g
        mains.append(v)
    stacked = []
    for i in range(k):
        for w in vectors:
            v = [zero] * (rank * k)
            v[i * rank:(i + 1) * rank] = list(w)
            stacked.append(v)
    syz = gb.syzygy_module(mains + stacked)
    result = []
    for s in syz:
        x = s[:rank]
        if any(not p.is_zero for p in x):
            result.append(list(x))
    return result


# ---------------------------------------------------------------------------
# public operations

def is_trivial(A: FPAlgebra) -> bool:
    """True iff 1 in J."""
    return A.relations_gb().is_unit_ideal()


def is_regular_element(A: FPAlgebra, f: Poly) -> bool:
    """f is a non-zero-divisor of A, i.e. (J : f) = J in k[X]."""
    J = A.relations
    colon = gb.ideal_colon_poly(gb.IdealGens(A.ring, J.gens), A.nf(f))
    jgb = A.relations_gb()
    return all(jgb.contains(g) for g in colon.gens)


def is_faithful_ideal(A: FPAlgebra, a: AIdeal) -> bool:
    """Ann_A(a) = 0, i.e. (J : <gens>) = J in k[X]."""
    if not a.gens:
        return is_trivial(A)
    J = gb.IdealGens(A.ring, A.relations.gens)
    colon = gb.ideal_colon(J, gb.IdealGens(A.ring, a.gens))
    jgb = A.relations_gb()
    return all(jgb.contains(g) for g in colon.gens)


def module_colon_element(E: AModule, f: Poly) -> list[list[Poly]]:
    """Generators of (0 :_E f), as normal-form representatives in A^q."""
    if E.rank == 0:
        return []
    R = E.algebra.ring
    W = E.base_vectors()
    basis = submodule_basis(W, E.rank, R)
    gens = module_colon_scalar(W, E.algebra.nf(f), E.rank, R)
    out = []
    for g in gens:
        r = basis.normal_form(g)
        if any(not p.is_zero for p in r) and r not in out:
            out.append(r)
    return out


def ideal_times_module_is_module(a: AIdeal, E: AModule) -> bool:
    """True iff a E = E, tested on the images of the basis vectors."""
    if E.rank == 0:
        return True
    R = E.algebra.ring
    zero = R.zero()
    span = E.base_vectors()
    for g in a.gens:
        for t in range(E.rank):
            v = [zero] * E.rank
            v[t] = g
            span.append(v)
    basis = submodule_basis(span, E.rank, R)
    for t in range(E.rank):
        v = [zero] * E.rank
        v[t] = R.one()
        if not basis.contains(v):
            return False
    return True


def annihilator(E: AModule) -> AIdeal:
    """Ann(E), as the intersection over t of (W : e_t)."""
    A = E.algebra
    if E.rank == 0:
        return AIdeal(A, [A.ring.one()])
    R = A.ring
    W = E.base_vectors()
    zero = R.zero()
    result: Optional[gb.IdealGens] = None
    for t in range(E.rank):
        e_t = [zero] * E.rank
        e_t[t] = R.one()
        syz = gb.syzygy_module([e_t] + W)
        colon = gb.IdealGens(R, [s[0] for s in syz])
        result = colon if result is None else gb.ideal_intersection(result, colon)
    return AIdeal(A, list(result.gens))


def algebra_membership(v: Sequence[Poly], gens: Sequence[Sequence[Poly]],
                       algebra: FPAlgebra) -> Optional[list[Poly]]:
    """Lift of v over span(gens) + J A^rank; coefficients for gens only."""
    rank = len(v)
    zero = algebra.ring.zero()
    aug = [list(g) for g in gens]
    for rel in algebra.relations.gens:
        for t in range(rank):
            col = [zero] * rank
            col[t] = rel
            aug.append(col)
    lift = gb.module_membership(list(v), aug)
    return None if lift is None else lift[:len(gens)]


def quotient_dimension(A: FPAlgebra, a: Optional[AIdeal] = None) -> int:
    """Krull dimension of A/a (of A itself when a is omitted)."""
    gens = list(A.relations.gens)
    if a is not None:
        gens += list(a.gens)
    return gb.krull_dimension(gb.IdealGens(A.ring, gens))
