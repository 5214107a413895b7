"""Exact sparse multivariate polynomial arithmetic over Q and F_p.

Monomials are exponent tuples, polynomials are dicts mapping monomials to
nonzero coefficients.  Everything is immutable after construction and all
arithmetic is exact: Fraction coefficients over Q, canonical residues over
a prime field.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

RESERVED_PREFIX = "#k"

_ORDERS = ("grevlex", "lex", "grlex")


class FFRError(Exception):
    """Base class for all library errors."""


class ParseError(FFRError):
    """Malformed polynomial text."""


class RingMismatchError(FFRError):
    """Operands live in different rings (or module ranks disagree)."""


class VerificationError(FFRError):
    """A produced certificate failed its own re-check; indicates a bug."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    # deterministic Miller-Rabin, valid far beyond any sensible modulus here
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class CoefField:
    """The rationals (p == 0) or the prime field F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    # -- arithmetic on raw coefficients (Fraction over Q, int residue over F_p)

    def zero(self):
        return 0 if self.p else Fraction(0)

    def one(self):
        return 1 if self.p else Fraction(1)

    def from_int(self, n: int):
        return n % self.p if self.p else Fraction(n)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def coeff_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, CoefField) and self.p == other.p

    def __hash__(self):
        return hash(("CoefField", self.p))

    def __repr__(self):
        return "Q" if not self.p else f"F{self.p}"


QQ = CoefField(0)


# ---------------------------------------------------------------------------
# monomials: plain exponent tuples

def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: tuple, b: tuple) -> tuple:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_deg(a: tuple) -> int:
    return sum(a)


def _key_grevlex(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _key_lex(m):
    return m


def _key_grlex(m):
    return (sum(m), m)


_KEYS = {"grevlex": _key_grevlex, "lex": _key_lex, "grlex": _key_grlex}


class PolyRing:
    """k[x_1..x_n] with a fixed monomial order.

    `elim` marks the first `elim` variables as an elimination block: the
    block is compared first (grevlex within the block), so any monomial
    touching a block variable is larger than every block-free monomial.
    User-facing rings always have elim == 0; extensions used for colon,
    saturation and radical-membership computations set it internally.
    """

    __slots__ = ("field", "vars", "order", "elim", "_key", "_vindex")

    def __init__(self, field: CoefField, vars: Sequence[str],
                 order: str = "grevlex", elim: int = 0,
                 _allow_reserved: bool = False):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError("variable names must be distinct")
        if order not in _ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        if not _allow_reserved:
            for v in vars:
                if v.startswith(RESERVED_PREFIX):
                    raise ValueError(
                        f"variable name {v!r} uses the reserved prefix {RESERVED_PREFIX!r}")
        if not 0 <= elim <= len(vars):
            raise ValueError("bad elimination block size")
        self.field = field
        self.vars = vars
        self.order = order
        self.elim = elim
        self._vindex = {v: i for i, v in enumerate(vars)}
        base = _KEYS[order]
        if elim:
            k = elim
            self._key = lambda m: (_key_grevlex(m[:k]), base(m[k:]))
        else:
            self._key = base

    @property
    def n(self) -> int:
        return len(self.vars)

    def mono_key(self, m: tuple):
        return self._key(m)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.field.from_int(c) if isinstance(c, int) else c
        if self.field.p:
            c = c % self.field.p
        if not c:
            return Poly(self, {})
        return Poly(self, {(0,) * self.n: c})

    def var(self, name_or_index) -> "Poly":
        i = (self._vindex[name_or_index]
             if isinstance(name_or_index, str) else name_or_index)
        m = [0] * self.n
        m[i] = 1
        return Poly(self, {tuple(m): self.field.one()})

    def gens(self) -> list["Poly"]:
        return [self.var(i) for i in range(self.n)]

    def extend_append(self, names: Iterable[str]) -> "PolyRing":
        """Same order, new variables appended at the end."""
        return PolyRing(self.field, self.vars + tuple(names), self.order,
                        self.elim, _allow_reserved=True)

    def extend_front_elim(self, names: Iterable[str]) -> "PolyRing":
        """New variables prepended and merged into the elimination block."""
        names = tuple(names)
        return PolyRing(self.field, names + self.vars, self.order,
                        self.elim + len(names), _allow_reserved=True)

    def fresh_names(self, count: int, tag: str = "") -> list[str]:
        names, i = [], 0
        taken = set(self.vars)
        while len(names) < count:
            cand = f"{RESERVED_PREFIX}{tag}{i}"
            if cand not in taken:
                names.append(cand)
                taken.add(cand)
            i += 1
        return names

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.vars == other.vars and self.order == other.order
                and self.elim == other.elim)

    def __hash__(self):
        return hash((self.field, self.vars, self.order, self.elim))

    def __repr__(self):
        base = f"{self.field}[{','.join(self.vars)}]"
        return base + (f"<{self.order},elim={self.elim}>" if self.elim
                       else f"<{self.order}>")


class Poly:
    """Immutable sparse polynomial: dict {exponent tuple: nonzero coeff}."""

    __slots__ = ("ring", "terms", "_lt")

    def __init__(self, ring: PolyRing, terms: dict, _trusted: bool = False):
        self.ring = ring
        if _trusted:
            self.terms = terms
        else:
            self.terms = {m: c for m, c in terms.items() if c}
        self._lt = None

    # -- basics

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def lt(self):
        """Leading (monomial, coefficient) in the ring order, or None."""
        if self._lt is None and self.terms:
            m = max(self.terms, key=self.ring._key)
            self._lt = (m, self.terms[m])
        return self._lt

    def lm(self):
        t = self.lt()
        return t[0] if t else None

    def lc(self):
        t = self.lt()
        return t[1] if t else None

    def monic(self) -> "Poly":
        t = self.lt()
        if t is None:
            return self
        c = t[1]
        if c == self.ring.field.one():
            return self
        inv = self.ring.field.inv(c)
        mul = self.ring.field.mul
        return Poly(self.ring, {m: mul(v, inv) for m, v in self.terms.items()},
                    _trusted=True)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def sorted_terms(self) -> list:
        """Terms sorted descending in the ring order."""
        return sorted(self.terms.items(), key=lambda t: self.ring._key(t[0]),
                      reverse=True)

    # -- arithmetic

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        add = self.ring.field.add
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = add(res.get(m, 0), c)
            if s:
                res[m] = s
            elif m in res:
                del res[m]
        return Poly(self.ring, res, _trusted=True)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        sub = self.ring.field.sub
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = sub(res.get(m, 0), c)
            if s:
                res[m] = s
            elif m in res:
                del res[m]
        return Poly(self.ring, res, _trusted=True)

    def __neg__(self) -> "Poly":
        neg = self.ring.field.neg
        return Poly(self.ring, {m: neg(c) for m, c in self.terms.items()},
                    _trusted=True)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(self.ring.field.from_int(other)
                              if isinstance(other, int) else other)
        self._check(other)
        mul = self.ring.field.mul
        add = self.ring.field.add
        res: dict = {}
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                s = add(res.get(m, 0), mul(c1, c2))
                if s:
                    res[m] = s
                elif m in res:
                    del res[m]
        return Poly(self.ring, res, _trusted=True)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        if not c:
            return Poly(self.ring, {}, _trusted=True)
        mul = self.ring.field.mul
        return Poly(self.ring, {m: mul(v, c) for m, v in self.terms.items()},
                    _trusted=True)

    def mul_term(self, c, m: tuple) -> "Poly":
        """Multiply by the single term c * X^m."""
        if not c:
            return Poly(self.ring, {}, _trusted=True)
        mul = self.ring.field.mul
        return Poly(self.ring,
                    {mono_mul(m0, m): mul(c0, c) for m0, c0 in self.terms.items()},
                    _trusted=True)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"<{format_poly(self)}>"


# ---------------------------------------------------------------------------
# transport between rings

def map_vars(p: Poly, target: PolyRing, index_map: Sequence[int]) -> Poly:
    """Reinterpret p in `target`, sending variable i to index_map[i]."""
    res: dict = {}
    for m, c in p.terms.items():
        mm = [0] * target.n
        for i, e in enumerate(m):
            if e:
                mm[index_map[i]] = e
        if target.field.p:
            c = c % target.field.p
        res[tuple(mm)] = c
    return Poly(target, res)


def embed_append(p: Poly, target: PolyRing) -> Poly:
    """Embed into a ring obtained by appending variables."""
    return map_vars(p, target, list(range(p.ring.n)))


def embed_shift(p: Poly, target: PolyRing, k: int) -> Poly:
    """Embed into a ring obtained by prepending k variables."""
    return map_vars(p, target, [i + k for i in range(p.ring.n)])


def project_drop_front(p: Poly, target: PolyRing, k: int) -> Poly:
    """Drop the first k variables; requires p not to involve them."""
    res: dict = {}
    for m, c in p.terms.items():
        if any(m[:k]):
            raise ValueError("polynomial involves an eliminated variable")
        res[m[k:]] = c
    return Poly(target, res)


# ---------------------------------------------------------------------------
# parsing / printing

_TOKEN_CHARS = set("+-*^/() \t\n")


def _tokenize(src: str):
    tokens = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch in " \t\n":
            i += 1
        elif ch in "+-*^/()":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(("num", int(src[i:j])))
            i = j
        elif ch.isalpha() or ch == "_" or ch == "#":
            j = i
            while j < n and (src[j].isalpha() or src[j].isdigit()
                             or src[j] in "_#"):
                j += 1
            tokens.append(("name", src[i:j]))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r} at position {i}")
    return tokens


class _Parser:
    def __init__(self, tokens, ring: PolyRing):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def expr(self) -> Poly:
        sign = 1
        t = self.peek()
        if t in ("+", "-"):
            self.next()
            sign = -1 if t == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek() in ("+", "-"):
            op = self.next()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.peek() == "*":
            self.next()
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        sign = 1
        while self.peek() == "-":
            self.next()
            sign = -sign
        p = self.primary()
        if self.peek() == "^":
            self.next()
            t = self.next()
            if not (isinstance(t, tuple) and t[0] == "num"):
                raise ParseError("malformed exponent")
            p = p ** t[1]
        return p if sign > 0 else -p

    def primary(self) -> Poly:
        t = self.next()
        if t is None:
            raise ParseError("unexpected end of input")
        if t == "(":
            p = self.expr()
            if self.next() != ")":
                raise ParseError("missing ')'")
            return p
        if isinstance(t, tuple) and t[0] == "num":
            num = t[1]
            if self.peek() == "/":
                self.next()
                d = self.next()
                if not (isinstance(d, tuple) and d[0] == "num"):
                    raise ParseError("malformed rational literal")
                den = d[1]
                field = self.ring.field
                if field.p:
                    if den % field.p == 0:
                        raise ParseError(
                            f"denominator {den} is zero in characteristic {field.p}")
                    return self.ring.const(field.div(field.from_int(num),
                                                     field.from_int(den)))
                return self.ring.const(Fraction(num, den))
            return self.ring.const(num)
        if isinstance(t, tuple) and t[0] == "name":
            name = t[1]
            if name not in self.ring._vindex:
                raise ParseError(f"unknown variable {name!r}")
            return self.ring.var(name)
        raise ParseError(f"unexpected token {t!r}")


def parse_poly(src: str, ring: PolyRing) -> Poly:
    """Parse `+ - * ^` syntax with integer (or int/int) coefficients."""
    tokens = _tokenize(src)
    if not tokens:
        raise ParseError("empty input")
    parser = _Parser(tokens, ring)
    p = parser.expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input at token {parser.peek()!r}")
    return p


def _mono_str(m: tuple, ring: PolyRing) -> str:
    parts = []
    for v, e in zip(ring.vars, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical text form: terms descending in the ring order."""
    if p.is_zero:
        return "0"
    field = p.ring.field
    chunks = []
    for m, c in p.sorted_terms():
        mono = _mono_str(m, p.ring)
        negative = (not field.p) and c < 0
        mag = -c if negative else c
        if not mono:
            body = field.coeff_str(mag)
        elif mag == field.one():
            body = mono
        else:
            body = f"{field.coeff_str(mag)}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(chunks)


# ---------------------------------------------------------------------------
# content ideals and Kronecker polynomials

def content_ideal(f: Poly) -> list:
    """The nonzero coefficients of f, leading coefficient first."""
    return [c for _, c in f.sorted_terms()]


def coefficients_in(f: Poly, var_index: int) -> dict[int, Poly]:
    """f as a polynomial in one variable: degree -> coefficient polynomial.

    The coefficients still live in the full ring (with that variable unused).
    """
    out: dict[int, dict] = {}
    for m, c in f.terms.items():
        e = m[var_index]
        rest = m[:var_index] + (0,) + m[var_index + 1:]
        out.setdefault(e, {})[rest] = c
    return {e: Poly(f.ring, t, _trusted=True) for e, t in out.items()}


def kronecker_poly(gens: Sequence[Poly], fresh_var: str,
                   ring: PolyRing | None = None) -> Poly:
    """a_1 + a_2 T + ... + a_n T^(n-1) in the ring extended by T.

    The content ideal of the result equals <gens>.
    """
    if gens:
        ring = gens[0].ring
        for g in gens[1:]:
            if g.ring != ring:
                raise RingMismatchError("generators in different rings")
    elif ring is None:
        raise ValueError("empty generator list needs an explicit ring")
    if fresh_var in ring.vars:
        raise ValueError(f"variable {fresh_var!r} collides with the ring")
    ext = ring.extend_append([fresh_var])
    t = ext.var(ext.n - 1)
    result = ext.zero()
    tpow = ext.one()
    for g in gens:
        result = result + embed_append(g, ext) * tpow
        tpow = tpow * t
    return result
