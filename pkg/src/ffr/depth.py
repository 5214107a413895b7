"""Depth calculus: Kronecker sequences and the decision procedure for
Gr(a, E) >= k, completely secant and singular sequences, the Wiebe checker
and the depth-dimension identity over polynomial rings.

Depth is exposed only through the decidable predicate "at least k" plus a
value search bounded by the generator count: with k generators, depth >= k+1
already forces a E = E (the infinite-depth case), so the search terminates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import groebner as gb
from .algebra import (AIdeal, AModule, FPAlgebra, ideal_times_module_is_module,
                      module_colon_ideal, module_colon_scalar,
                      quotient_dimension, submodule_basis)
from .exterior import poly_det
from .ring import Poly, VerificationError, embed_append, mono_divides

INFINITY = math.inf


@dataclass(frozen=True)
class KroneckerSequence:
    """k polynomials on disjoint fresh blocks, each with content ideal a."""

    base: AIdeal
    length: int
    extended_algebra: FPAlgebra
    block_vars: tuple[tuple[str, ...], ...]
    polys: tuple[Poly, ...]


@dataclass(frozen=True)
class DepthCertificate:
    """Verdict of a depth / regular-sequence query.

    `fail_stage` is 1-based; the witness is a nonzero normal-form element w
    of the stage quotient with f_j w = 0 there, re-verified on construction.
    """

    kind: str
    k: int
    holds: bool
    fail_stage: Optional[int] = None
    witness: Optional[tuple[Poly, ...]] = None
    sequence: tuple[Poly, ...] = ()
    algebra: Optional[FPAlgebra] = None

    def describe(self) -> str:
        if self.holds:
            return f"at least {self.k}"
        w = ", ".join(str(p) for p in self.witness) if self.witness else "?"
        return f"fails at {self.fail_stage} (witness [{w}])"


def _block_shape(count: int) -> int:
    """Fewest block variables fitting `count` monomials within degree 7."""
    b = 1
    while math.comb(b + 7, b) < count:
        b += 1
    return b


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _block_monomials(b: int, count: int) -> list[tuple[int, ...]]:
    """First `count` exponent vectors over b variables, graded then lex.

    For b = 1 this is 1, T, T^2, ...: the canonical Kronecker weights.
    """
    out: list[tuple[int, ...]] = []
    d = 0
    while len(out) < count:
        for m in sorted(_compositions(d, b)):
            out.append(m)
            if len(out) == count:
                return out
        d += 1
    return out


def kronecker_sequence(a: AIdeal, k: int) -> KroneckerSequence:
    """k Kronecker polynomials for a, on disjoint fresh variable blocks.

    Each generator is weighted by one monomial of its block.  Small
    generator lists get a single-variable block, giving the canonical
    shape a_1 + a_2 T + ... + a_n T^(n-1); larger lists get wider blocks
    so the degree in the fresh variables stays low.  Any such choice is a
    Kronecker sequence for a, and the depth verdict is independent of it.
    """
    if k < 0:
        raise ValueError("negative length")
    A = a.algebra
    s = len(a.gens)
    b = _block_shape(max(s, 1))
    names = A.ring.fresh_names(b * k)
    ext = A.extend_append(names)
    R = ext.ring
    gens = [embed_append(g, R) for g in a.gens]
    weights = _block_monomials(b, s)
    base_n = A.ring.n
    one = R.field.one()
    polys = []
    for i in range(k):
        f = R.zero()
        for g, mu in zip(gens, weights):
            expt = [0] * R.n
            for t, e in enumerate(mu):
                expt[base_n + i * b + t] = e
            f = f + g.mul_term(one, tuple(expt))
        polys.append(f)
    blocks = tuple(tuple(names[i * b:(i + 1) * b]) for i in range(k))
    return KroneckerSequence(a, k, ext, blocks, tuple(polys))


def is_E_regular_sequence(seq: Sequence[Poly], E: AModule) -> DepthCertificate:
    """Stage-by-stage regularity of seq on E.

    Stage j tests (W_{j-1} : a_j) = W_{j-1} where W_{j-1} adds a_1..a_{j-1}
    times the basis vectors to the presentation; the first failing stage
    returns its index and a witness.
    """
    A = E.algebra
    R = A.ring
    q = E.rank
    seq = tuple(A.nf(p) for p in seq)
    if q == 0:
        return DepthCertificate("regular-sequence", len(seq), True,
                                sequence=seq, algebra=A)
    W = E.base_vectors()
    zero = R.zero()
    for j, a_j in enumerate(seq, start=1):
        basis = submodule_basis(W, q, R)
        colon = module_colon_scalar(W, a_j, q, R)
        witness = None
        for g in colon:
            r = basis.normal_form(g)
            if any(not p.is_zero for p in r):
                witness = r
                break
        if witness is not None:
            scaled = [a_j * p for p in witness]
            if gb.module_membership(scaled, W) is None:
                raise VerificationError("witness does not re-verify")
            return DepthCertificate("regular-sequence", len(seq), False,
                                    fail_stage=j, witness=tuple(witness),
                                    sequence=seq, algebra=A)
        for t in range(q):
            v = [zero] * q
            v[t] = a_j
            W.append(v)
    return DepthCertificate("regular-sequence", len(seq), True,
                            sequence=seq, algebra=A)


def same_depth_generators(a: AIdeal) -> AIdeal:
    """A generator substitution that preserves every depth verdict.

    The list is replaced by the reduced basis of the lifted ideal (the same
    ideal, canonical and usually smaller).  When every generator is then a
    monomial, the minimal squarefree parts generate an ideal with the same
    radical; equal-radical finitely generated ideals have equal depth on
    every module (the product lemma), so the substitution is sound and cuts
    the monomial case down from e.g. the cube of the maximal ideal to the
    maximal ideal itself.
    """
    A = a.algebra
    gens = [g for g in (A.nf(p) for p in a.lifted().groebner().basis)
            if not g.is_zero]
    if gens and all(len(g.terms) == 1 for g in gens):
        seen: list[tuple] = []
        for g in gens:
            (m, _), = g.terms.items()
            sm = tuple(1 if e else 0 for e in m)
            if sm not in seen:
                seen.append(sm)
        minimal = [m for m in seen
                   if not any(q != m and mono_divides(q, m) for q in seen)]
        one = A.ring.field.one()
        gens = [Poly(A.ring, {m: one}) for m in sorted(minimal)]
    return AIdeal(A, gens)


def depth_at_least(a: AIdeal, E: AModule, k: int) -> DepthCertificate:
    """Gr(a, E) >= k, decided on a Kronecker sequence of length k."""
    if k < 0:
        raise ValueError("negative depth bound")
    if k == 0:
        return DepthCertificate("depth", 0, True, algebra=a.algebra)
    ks = kronecker_sequence(same_depth_generators(a), k)
    cert = is_E_regular_sequence(ks.polys, E.transport(ks.extended_algebra))
    return DepthCertificate("depth", k, cert.holds, cert.fail_stage,
                            cert.witness, cert.sequence,
                            ks.extended_algebra)


def depth_value(a: AIdeal, E: AModule):
    """Gr(a, E) as an integer, or INFINITY when a E = E.

    Finite values need a single Kronecker run: a prefix of a Kronecker
    sequence is again a Kronecker sequence, so the first failing stage j
    pins the depth at j - 1.
    """
    if ideal_times_module_is_module(a, E):
        return INFINITY
    if not a.gens:
        return 0
    reduced = same_depth_generators(a)
    # the depth is bounded by both generator counts (else a E = E)
    k = min(len(a.gens), len(reduced.gens)) if reduced.gens else 0
    if k == 0:
        return 0
    ks = kronecker_sequence(reduced, k)
    cert = is_E_regular_sequence(ks.polys, E.transport(ks.extended_algebra))
    return k if cert.holds else cert.fail_stage - 1


@dataclass(frozen=True)
class TriangularRegularization:
    """b = U a with U unitriangular over A[X1..Xl]; carries its re-checks."""

    matrix: tuple[tuple[Poly, ...], ...]
    polys: tuple[Poly, ...]
    extended_algebra: FPAlgebra
    ideal_preserved: bool
    regularity: DepthCertificate

    @property
    def ok(self) -> bool:
        return self.ideal_preserved and self.regularity.holds


def triangular_regularization(a: AIdeal, level: int,
                              E: AModule) -> TriangularRegularization:
    """Replace the first `level` generators by an E-regular sequence.

    Row i (i <= level) of U carries the powers 1, X_i, X_i^2, ... so that
    b_i = a_i + a_{i+1} X_i + ... + a_k X_i^(k-i); the remaining rows are
    identity.  <b_1..b_level, a_{level+1}..a_k> = <a> holds in the extension
    and is re-verified, as is E-regularity of (b_1..b_level).
    """
    k = len(a.gens)
    if not 1 <= level <= k:
        raise ValueError("level must be between 1 and the generator count")
    A = a.algebra
    names = A.ring.fresh_names(level)
    ext = A.extend_append(names)
    R = ext.ring
    gens = [embed_append(g, R) for g in a.gens]
    U: list[list[Poly]] = []
    for i in range(k):
        row = [R.zero()] * k
        if i < level:
            x = R.var(A.ring.n + i)
            power = R.one()
            for j in range(i, k):
                row[j] = power
                power = power * x
        else:
            row[i] = R.one()
        U.append(row)
    b = []
    for i in range(k):
        acc = R.zero()
        for j in range(k):
            acc = acc + U[i][j] * gens[j]
        b.append(acc)
    new_gens = b[:level] + gens[level:]
    lifted_a = AIdeal(ext, gens).lifted()
    lifted_b = AIdeal(ext, new_gens).lifted()
    preserved = gb.ideal_equal(lifted_a, lifted_b)
    cert = is_E_regular_sequence(b[:level], E.transport(ext))
    return TriangularRegularization(tuple(tuple(r) for r in U), tuple(b),
                                    ext, preserved, cert)


def is_completely_secant(seq: Sequence[Poly], E: AModule) -> bool:
    """Gr(<seq>, E) >= len(seq); order-independent by construction."""
    if not seq:
        return True
    a = AIdeal(E.algebra, list(seq))
    return depth_at_least(a, E, len(seq)).holds


def is_singular_sequence(seq: Sequence[Poly], A: FPAlgebra) -> bool:
    """Membership of 1 in the iterated boundary ideal of the sequence.

    The chain I_{-1} = J, I_i = (I_{i-1} : x_i^inf) + <x_i> unfolds the
    nested identity x_0^{m_0}( ... (1 + a_k x_k) ... ) = 0 one nesting level
    per step (saturation absorbs x_i^{m_i}, the sum absorbs the a_i x_i term).
    """
    R = A.ring
    current = gb.IdealGens(R, A.relations.gens)
    for x in seq:
        x = A.nf(x)
        sat = gb.saturation(current, x)
        current = gb.IdealGens(R, list(sat.gens) + [x])
    return current.groebner().is_unit_ideal()


@dataclass(frozen=True)
class WiebeReport:
    """Re-checkable record of the two Wiebe colon equalities."""

    delta: Poly
    inclusion_certified: bool
    completely_secant: DepthCertificate
    colon_delta_equals_a: bool
    colon_ideal_equals_delta_plus_c: bool
    counterexamples: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return (self.inclusion_certified and self.completely_secant.holds
                and self.colon_delta_equals_a
                and self.colon_ideal_equals_delta_plus_c)


def _module_with(E: AModule, extra_scalars: Sequence[Poly]) -> list[list[Poly]]:
    R = E.algebra.ring
    zero = R.zero()
    W = E.base_vectors()
    for s in extra_scalars:
        for t in range(E.rank):
            v = [zero] * E.rank
            v[t] = s
            W.append(v)
    return W


def wiebe_check(c_seq: Sequence[Poly], a_seq: Sequence[Poly],
                U: Sequence[Sequence[Poly]], E: AModule) -> WiebeReport:
    """Check (cE : Delta) = aE and (cE : a) = (<Delta> + c)E.

    U certifies the inclusion <c> subseteq <a> via t(c) = U t(a);
    Delta = det U; (c) must be completely E-secant.
    """
    A = E.algebra
    R = A.ring
    n = len(c_seq)
    if len(a_seq) != n or len(U) != n or any(len(row) != n for row in U):
        raise ValueError("sequence/matrix sizes disagree")
    counterexamples: dict = {}

    inclusion = True
    for i in range(n):
        acc = R.zero()
        for j in range(n):
            acc = acc + U[i][j] * a_seq[j]
        if not A.nf(acc - c_seq[i]).is_zero:
            inclusion = False
            counterexamples["inclusion"] = [c_seq[i]]
            break

    delta = poly_det([list(row) for row in U], R)
    secant = depth_at_least(AIdeal(A, list(c_seq)), E, n)

    Wc = _module_with(E, c_seq)
    Wa = _module_with(E, a_seq)
    Wdc = _module_with(E, [delta] + list(c_seq))
    basis_a = submodule_basis(Wa, E.rank, R) if E.rank else None
    basis_dc = submodule_basis(Wdc, E.rank, R) if E.rank else None
    basis_c = submodule_basis(Wc, E.rank, R) if E.rank else None

    eq1 = True
    eq2 = True
    if E.rank:
        # (cE : Delta) subseteq aE, and conversely Delta aE subseteq cE
        for g in module_colon_scalar(Wc, A.nf(delta), E.rank, R):
            if not basis_a.contains(g):
                eq1 = False
                counterexamples.setdefault("colon_delta", []).append(
                    tuple(basis_a.normal_form(g)))
                break
        if eq1:
            for v in Wa:
                if not basis_c.contains([delta * p for p in v]):
                    eq1 = False
                    counterexamples.setdefault("colon_delta", []).append(tuple(v))
                    break
        # (cE : a) subseteq (<Delta> + c)E, and conversely
        for g in module_colon_ideal(Wc, list(a_seq), E.rank, R):
            if not basis_dc.contains(g):
                eq2 = False
                counterexamples.setdefault("colon_ideal", []).append(
                    tuple(basis_dc.normal_form(g)))
                break
        if eq2:
            for v in Wdc:
                ok = all(basis_c.contains([a * p for p in v]) for a in a_seq)
                if not ok:
                    eq2 = False
                    counterexamples.setdefault("colon_ideal", []).append(tuple(v))
                    break
    return WiebeReport(delta, inclusion, secant, eq1, eq2, counterexamples)


@dataclass(frozen=True)
class DepthDimReport:
    """Certificates for depth + dimension = ring dimension over k[X]."""

    n: int
    quotient_dim: int
    expected_depth: Optional[int]
    unit_ideal: bool
    lower: Optional[DepthCertificate]
    upper: Optional[DepthCertificate]

    @property
    def holds(self) -> bool:
        if self.unit_ideal:
            return True
        if self.lower is None or not self.lower.holds:
            return False
        return self.upper is None or not self.upper.holds


def depth_dim_identity(a: AIdeal) -> DepthDimReport:
    """Certify Gr(a) = n - Kdim(A/a) over a pure polynomial ring."""
    A = a.algebra
    if not A.is_polynomial_ring():
        raise ValueError("identity applies over a polynomial ring only")
    n = A.ring.n
    r = quotient_dimension(A, a)
    E = AModule.free(A, 1)
    if r == -1:
        return DepthDimReport(n, r, None, True, None, None)
    q = n - r
    lower = depth_at_least(a, E, q)
    upper = depth_at_least(a, E, q + 1)
    return DepthDimReport(n, r, q, False, lower, upper)
