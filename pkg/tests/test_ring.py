import random

from fractions import Fraction

import pytest

from ffr.ring import (CoefField, ParseError, Poly, PolyRing, QQ, content_ideal,
                      format_poly, kronecker_poly, parse_poly)


def ring_qq(*vars, order="grevlex"):
    return PolyRing(QQ, vars, order)


def test_parse_zero():
    R = ring_qq("x", "y")
    assert parse_poly("0", R).is_zero


def test_parse_basic():
    R = ring_qq("x", "y")
    p = parse_poly("x^2*y - 2", R)
    assert p.terms == {(2, 1): Fraction(1), (0, 0): Fraction(-2)}


def test_parse_mod_p_collapse():
    R = PolyRing(CoefField(3), ["x"])
    assert parse_poly("3*x", R).is_zero


def test_parse_parens_and_unary_minus():
    R = ring_qq("x", "y")
    assert parse_poly("x*(y-1)", R) == parse_poly("x*y - x", R)
    assert parse_poly("-x^2", R) == -parse_poly("x^2", R)
    assert parse_poly("(x+y)^2", R) == parse_poly("x^2+2*x*y+y^2", R)


def test_parse_errors():
    R = ring_qq("x")
    with pytest.raises(ParseError):
        parse_poly("z + 1", R)
    with pytest.raises(ParseError):
        parse_poly("x^", R)
    with pytest.raises(ParseError):
        parse_poly("1/3", PolyRing(CoefField(3), ["x"]))


def test_reserved_prefix_rejected():
    with pytest.raises(ValueError):
        PolyRing(QQ, ["#k0"])


def test_print_parse_round_trip():
    rng = random.Random(7)
    R = ring_qq("x", "y", "z")
    for _ in range(60):
        terms = {}
        for _ in range(rng.randint(0, 6)):
            m = tuple(rng.randint(0, 3) for _ in range(3))
            terms[m] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        p = Poly(R, terms)
        assert parse_poly(format_poly(p), R) == p


def test_round_trip_mod_p():
    rng = random.Random(8)
    R = PolyRing(CoefField(7), ["x", "y"])
    for _ in range(40):
        terms = {tuple(rng.randint(0, 3) for _ in range(2)): rng.randint(1, 6)
                 for _ in range(rng.randint(0, 5))}
        p = Poly(R, terms)
        assert parse_poly(format_poly(p), R) == p


def test_arithmetic_examples():
    R = ring_qq("x", "y")
    x, y = R.gens()
    assert (x + y) * (x - y) == parse_poly("x^2 - y^2", R)
    f = parse_poly("x^3*y - 2*x + 1", R)
    assert (f * R.zero()).is_zero
    lhs = parse_poly("x+2*y", R) * parse_poly("x^2+x*y+y^2", R)
    assert lhs == parse_poly("x^3+3*x^2*y+3*x*y^2+2*y^3", R)


def test_ring_axioms_random():
    rng = random.Random(11)
    R = PolyRing(CoefField(5), ["x", "y"])

    def rand_poly():
        return Poly(R, {tuple(rng.randint(0, 2) for _ in range(2)):
                        rng.randint(1, 4) for _ in range(rng.randint(0, 4))})

    for _ in range(50):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a


def _mono_poly(R, m):
    return Poly(R, {m: R.field.one()})


@pytest.mark.parametrize("order", ["grevlex", "lex", "grlex"])
def test_monomial_order_axioms(order):
    # totality and multiplicativity on 200 random triples
    rng = random.Random(order)
    R = PolyRing(QQ, ["x", "y", "z"], order)
    key = R.mono_key
    for _ in range(200):
        a, b, c = (tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(3))
        assert (key(a) < key(b)) or (key(b) < key(a)) or a == b
        if key(a) <= key(b):
            assert key(mono_mul_(a, c)) <= key(mono_mul_(b, c))
        one = (0, 0, 0)
        assert key(one) <= key(a)


def mono_mul_(a, b):
    return tuple(x + y for x, y in zip(a, b))


def test_order_leading_terms_differ():
    R_lex = ring_qq("x", "y", order="lex")
    p = parse_poly("x + y^3", R_lex)
    assert p.lm() == (1, 0)
    R_grevlex = ring_qq("x", "y")
    q = parse_poly("x + y^3", R_grevlex)
    assert q.lm() == (0, 3)


def test_grevlex_tie_break():
    R = ring_qq("x", "y", "z")
    # same degree: grevlex prefers the monomial with less of the last variable
    a = parse_poly("x*z", R)
    b = parse_poly("y^2", R)
    assert (a + b).lm() == (0, 2, 0)


def test_content_ideal():
    R = ring_qq("x", "y")
    f = parse_poly("3*x^2 + 2*x*y", R)
    assert sorted(content_ideal(f)) == [Fraction(2), Fraction(3)]
    assert content_ideal(R.zero()) == []


def test_dedekind_mertens_and_content_containment():
    # c(f)^(m+1) c(g) = c(f)^m c(fg) with m = deg_T g, and c(fg) <= c(f)c(g),
    # for univariate-in-T polynomials over Q[x,y]
    from ffr.groebner import IdealGens, ideal_equal, ideal_product, buchberger
    from ffr.ring import coefficients_in

    rng = random.Random(13)
    R = PolyRing(QQ, ["x", "y", "t"])
    xy_monos = [(a, b, 0) for a in range(2) for b in range(2)]

    def rand_in_t(deg):
        terms = {}
        for k in range(deg + 1):
            if rng.random() < 0.75:
                a, b, _ = rng.choice(xy_monos)
                terms[(a, b, k)] = Fraction(rng.randint(-2, 2))
        return Poly(R, terms)

    def content(p):
        return IdealGens(R, list(coefficients_in(p, 2).values()))

    checked = 0
    for _ in range(20):
        f = rand_in_t(rng.randint(0, 2))
        g = rand_in_t(rng.randint(0, 2))
        if f.is_zero or g.is_zero:
            continue
        m = max(e for (_, _, e) in g.terms)
        cf, cg, cfg = content(f), content(g), content(f * g)
        # containment c(fg) <= c(f) c(g)
        prod = ideal_product(cf, cg)
        gb_prod = buchberger(prod)
        assert all(gb_prod.contains(h) for h in cfg.gens)
        # Dedekind-Mertens equality
        lhs = ideal_product(cg, cf)
        rhs = cfg
        for _ in range(m):
            lhs = ideal_product(lhs, cf)
            rhs = ideal_product(rhs, cf)
        assert ideal_equal(lhs, rhs)
        checked += 1
    assert checked >= 8


def test_kronecker_poly():
    R = ring_qq("x", "y")
    x, y = R.gens()
    f = kronecker_poly([x, y], "t")
    ext = f.ring
    assert ext.vars == ("x", "y", "t")
    assert f == parse_poly("x + y*t", ext)
    assert sorted(map(str, content_ideal(f))) == ["1", "1"]

    g = kronecker_poly([x], "t")
    assert format_poly(g) == "x"

    z = kronecker_poly([], "t", ring=R)
    assert z.is_zero

    with pytest.raises(ValueError):
        kronecker_poly([x], "y")
