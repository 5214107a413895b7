"""Purely combinatorial monomial-ideal layer: monomial syzygies, the
Taylor resolution on the subset lattice with its explicit contracting
homotopy, and the minimality test for that resolution.

Elements of the Taylor modules L_k are dicts {k-subset: coefficient}; the
subset bases are the shared colexicographic enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import FPAlgebra
from .complexes import FreeComplex, RingMatrix
from .exterior import subsets_colex
from .ring import Poly, PolyRing, mono_div, mono_divides, mono_gcd, mono_lcm


@dataclass(frozen=True)
class MonomialList:
    """m_1..m_r as exponent vectors over a polynomial ring."""

    ring: PolyRing
    monomials: tuple[tuple[int, ...], ...]

    @classmethod
    def parse(cls, ring: PolyRing, sources: Sequence[str]) -> "MonomialList":
        from .ring import parse_poly
        monos = []
        for s in sources:
            p = parse_poly(s, ring)
            if len(p.terms) != 1:
                raise ValueError(f"{s!r} is not a monomial")
            ((m, c),) = p.terms.items()
            if c != ring.field.one():
                raise ValueError(f"{s!r} has a nontrivial coefficient")
            monos.append(m)
        return cls(ring, tuple(monos))

    @property
    def r(self) -> int:
        return len(self.monomials)

    def poly(self, i: int) -> Poly:
        """m_i as a polynomial (1-based)."""
        return Poly(self.ring, {self.monomials[i - 1]: self.ring.field.one()})

    def lcm_of(self, J: Sequence[int]) -> tuple[int, ...]:
        acc = (0,) * self.ring.n
        for j in J:
            acc = mono_lcm(acc, self.monomials[j - 1])
        return acc


def monomial_syzygies(m: MonomialList) -> list[list[Poly]]:
    """The generators m_ij e_i - m_ji e_j (i < j) of the syzygy module."""
    R = m.ring
    one = R.field.one()
    zero = R.zero()
    out = []
    for i in range(1, m.r + 1):
        for j in range(i + 1, m.r + 1):
            mi, mj = m.monomials[i - 1], m.monomials[j - 1]
            g = mono_gcd(mi, mj)
            vec = [zero] * m.r
            vec[i - 1] = Poly(R, {mono_div(mj, g): one})
            vec[j - 1] = -Poly(R, {mono_div(mi, g): one})
            out.append(vec)
    return out


Elem = dict  # {subset: Poly}


def _elem_add(a: Elem, b: Elem, ring: PolyRing) -> Elem:
    out = dict(a)
    for J, c in b.items():
        s = out.get(J, ring.zero()) + c
        if s.is_zero:
            out.pop(J, None)
        else:
            out[J] = s
    return out


@dataclass(frozen=True)
class TaylorComplex:
    """The Taylor resolution: L_k free on the k-subsets of {1..r}."""

    monomials: MonomialList
    complex: FreeComplex

    def basis(self, k: int) -> tuple[tuple[int, ...], ...]:
        return subsets_colex(self.monomials.r, k)

    def differential(self, elem: Elem, k: int) -> Elem:
        """d applied to an element of L_k given as {k-subset: Poly}."""
        m = self.monomials
        R = m.ring
        one = R.field.one()
        out: Elem = {}
        for J, c in elem.items():
            if len(J) != k:
                raise ValueError("subset of the wrong grade")
            lcm_J = m.lcm_of(J)
            for pos, j in enumerate(J):
                K = J[:pos] + J[pos + 1:]
                quot = Poly(R, {mono_div(lcm_J, m.lcm_of(K)): one})
                term = c * quot
                if pos % 2:
                    term = -term
                s = out.get(K, R.zero()) + term
                if s.is_zero:
                    out.pop(K, None)
                else:
                    out[K] = s
        return out


def taylor_complex(m: MonomialList) -> TaylorComplex:
    """The full complex with d(e_J) weighted by lcm ratios; d.d = 0 is
    checked by the FreeComplex constructor."""
    R = m.ring
    algebra = FPAlgebra.polynomial(R)
    one = R.field.one()
    zero = R.zero()
    mats = []
    for k in range(1, m.r + 1):
        rows = subsets_colex(m.r, k - 1)
        cols = subsets_colex(m.r, k)
        row_pos = {s: i for i, s in enumerate(rows)}
        ents = [[zero] * len(cols) for _ in rows]
        for cj, J in enumerate(cols):
            lcm_J = m.lcm_of(J)
            for pos, j in enumerate(J):
                K = J[:pos] + J[pos + 1:]
                coeff = Poly(R, {mono_div(lcm_J, m.lcm_of(K)): one})
                if pos % 2:
                    coeff = -coeff
                ents[row_pos[K]][cj] = coeff
        mats.append(RingMatrix(algebra, ents))
    return TaylorComplex(m, FreeComplex(algebra, mats))


def taylor_homotopy(m: MonomialList, p: tuple[int, ...],
                    J: Sequence[int]) -> Elem:
    """h(p e_J) for a monomial multiplier p.

    With i the least index such that m_i divides lcm(m_J) p: the value is
    (lcm(m_J) p / lcm(m_J')) e_J' for J' = J + {i} when i exists outside J,
    and 0 otherwise (for J empty the index may not exist at all).
    """
    J = tuple(J)
    R = m.ring
    lcm_J = m.lcm_of(J)
    target = tuple(a + b for a, b in zip(lcm_J, p))
    found = None
    for i in range(1, m.r + 1):
        if mono_divides(m.monomials[i - 1], target):
            found = i
            break
    if found is None or found in J:
        return {}
    Jp = tuple(sorted(J + (found,)))
    quot = mono_div(target, m.lcm_of(Jp))
    return {Jp: Poly(R, {quot: R.field.one()})}


def _homotopy_elem(m: MonomialList, elem: Elem) -> Elem:
    """h extended to polynomial coefficients, term by term."""
    R = m.ring
    out: Elem = {}
    for J, c in elem.items():
        for mono, coeff in c.terms.items():
            part = taylor_homotopy(m, mono, J)
            scaled = {K: v.scale(coeff) for K, v in part.items()}
            out = _elem_add(out, scaled, R)
    return out


def homotopy_identity_check(m: MonomialList,
                            samples: Sequence[tuple[tuple[int, ...],
                                                    Sequence[int]]]) -> bool:
    """(d h + h d)(p e_J) = p e_J on each (p, J) sample.

    At grade 0 the identity is asserted on the image of the ideal only:
    samples (p, ()) with p outside <m_1..m_r> are vacuous (the complex
    augments to the quotient there) and are skipped.
    """
    T = taylor_complex(m)
    R = m.ring
    one = R.field.one()
    for p, J in samples:
        J = tuple(J)
        if not J and not any(mono_divides(mi, p) for mi in m.monomials):
            continue
        elem: Elem = {J: Poly(R, {p: one})}
        h_elem = _homotopy_elem(m, elem)
        dh = T.differential(h_elem, len(J) + 1) if h_elem else {}
        hd: Elem = {}
        if J:
            d_elem = T.differential(elem, len(J))
            hd = _homotopy_elem(m, d_elem)
        total = _elem_add(dh, hd, R)
        if total != elem:
            return False
    return True


def is_taylor_minimal(m: MonomialList) -> bool:
    """No m_j divides lcm(m_(J minus j)), over all subsets J and j in J."""
    for k in range(1, m.r + 1):
        for J in subsets_colex(m.r, k):
            lcm_J = m.lcm_of(J)
            for pos, j in enumerate(J):
                K = J[:pos] + J[pos + 1:]
                if m.lcm_of(K) == lcm_J:
                    return False
    return True
