"""Polynomial ring over GF(3^m): division, xgcd, CRT, factorization, roots
in residue fields, square and cube root machinery."""

import pytest
from hypothesis import given, settings, strategies as st

from cubicff.errors import DomainError
from cubicff.ff import Fq, GF3
from cubicff.polyring import (
    NEG_INF,
    Poly,
    crt,
    crt2_general,
    cube_root_mod,
    cubic_residue_factor,
    exact_div,
    factor,
    gcd,
    invmod,
    is_irreducible,
    modexp,
    poly_roots,
    poly_sqrt,
    squarefree_decomposition,
    valuation,
    xgcd,
)

from conftest import alpha_code, rand_poly, seeded


def x_one(F):
    return Poly.x(F), Poly.one(F)


def test_divmod_basic(gf3):
    x, one = x_one(gf3)
    q, r = divmod(x * x + one, x)
    assert q == x and r == one
    assert (x * x + one) % Poly.one(gf3) == Poly.zero(gf3)
    with pytest.raises(DomainError):
        divmod(x, Poly.zero(gf3))


def test_mul_example(gf3):
    x, one = x_one(gf3)
    assert (x + one) * (x + Poly.const(gf3, 2)) == x * x + Poly.const(gf3, 2)


def test_zero_degree_sentinel(gf3):
    z = Poly.zero(gf3)
    assert z.deg == NEG_INF
    assert z.deg < 0 and z.deg < -10**9
    assert max(z.deg, 3) == 3


def test_xgcd_examples(gf3):
    x, one = x_one(gf3)
    f = x * x - one
    d, s, t = xgcd(f, Poly.zero(gf3))
    assert d == f.monic() and t.is_zero() and s * f == d
    d, s, t = xgcd(x * x - one, x - one)
    assert d == (x + Poly.const(gf3, 2))
    assert s * (x * x - one) + t * (x - one) == d


def test_xgcd_bezout_fuzz(gf3, gf9):
    rng = seeded(3)
    for F in (gf3, gf9):
        for _ in range(120):
            f = rand_poly(rng, F, 6)
            g = rand_poly(rng, F, 6)
            if f.is_zero() and g.is_zero():
                continue
            d, s, t = xgcd(f, g)
            assert s * f + t * g == d
            assert d.is_monic()
            if not f.is_zero():
                assert (f % d).is_zero() if d.deg >= 1 else True


def test_derivative(gf3, f310):
    x, one = x_one(gf3)
    assert (x ** 3).derivative().is_zero()
    assert Poly.const(gf3, 2).derivative().is_zero()
    xF = Poly.x(f310)
    B = xF ** 4 + Poly.const(f310, alpha_code(f310, 0, 1))
    assert B.derivative() == xF ** 3  # 4 = 1 mod 3


def test_crt(gf3):
    x, one = x_one(gf3)
    two = Poly.const(gf3, 2)
    sol = crt([(one, x), (two, x + one)])
    assert sol % x == one and sol % (x + one) == two
    assert crt([(one, x)]) == one
    assert crt([(Poly.zero(gf3), x), (Poly.zero(gf3), x + one)]).is_zero()
    with pytest.raises(DomainError):
        crt([(one, x), (two, x)])


def test_crt2_general(gf3):
    x, one = x_one(gf3)
    # consistent overlapping congruences
    r, m = crt2_general(one, x * x, one + x * x, x * x * (x + one))
    assert (r - one) % (x * x) == Poly.zero(gf3)


def test_modexp(gf3):
    x, one = x_one(gf3)
    f = x ** 3 + x + one
    assert modexp(x, 1, f) == x
    cub = x ** 3 - x
    assert modexp(x, 3, cub) == x % cub
    # naive cross-check
    rng = seeded(5)
    for _ in range(25):
        g = rand_poly(rng, gf3, 2)
        e = rng.randrange(0, 27)
        naive = Poly.one(gf3)
        for _ in range(e):
            naive = (naive * g) % f
        assert modexp(g, e, f) == naive


def test_factor_examples(gf3):
    x, one = x_one(gf3)
    fs = factor(x * x - one)
    assert fs == [(x + one, 1), (x + Poly.const(gf3, 2), 1)]
    assert factor(x ** 3) == [(x, 3)]
    # the two quadratics of the singular example curve
    A = Poly.from_ints(gf3, [2, 1, 0, 1, 1])
    fs = factor(A)
    assert len(fs) == 2 and all(e == 1 and p.deg == 2 for p, e in fs)
    assert all(is_irreducible(p) for p, _ in fs)
    with pytest.raises(DomainError):
        factor(one)


def test_factor_roundtrip_fuzz(gf3, gf9):
    rng = seeded(9)
    for F in (gf3, gf9):
        for trial in range(80):
            f = rand_poly(rng, F, 9, nonzero=True)
            if f.deg < 1:
                continue
            prod = Poly.const(F, f.lc())
            for p, e in factor(f, seed=trial):
                assert p.is_monic() and is_irreducible(p)
                prod = prod * p ** e
            assert prod == f


def test_cube_polynomials(gf9):
    # f with f' = 0 is the cube of its cube-root substitution
    rng = seeded(2)
    for _ in range(40):
        g = rand_poly(rng, gf9, 4, nonzero=True)
        f = g * g * g
        assert f.derivative().is_zero()
        assert f.cube_root() == g
        assert f.cube_root() ** 3 == f


def test_squarefree_decomposition(gf3):
    x, one = x_one(gf3)
    f = (x ** 3) * (x + one) ** 2 * (x * x + one)
    parts = squarefree_decomposition(f)
    prod = Poly.one(gf3)
    for g, e in parts:
        prod = prod * g ** e
    assert prod == f.monic()


def test_poly_sqrt(gf3):
    x, one = x_one(gf3)
    assert poly_sqrt((x + one) * (x + one)) == x + one
    assert poly_sqrt(x) is None
    assert poly_sqrt(Poly.const(gf3, 2) * x * x) is None  # 2 non-square
    assert poly_sqrt(Poly.one(gf3)) == Poly.one(gf3)


def test_cube_root_mod(gf3):
    x, one = x_one(gf3)
    P = x * x + one
    assert cube_root_mod(Poly.zero(gf3), P).is_zero()
    assert cube_root_mod(Poly.const(gf3, 2), x) == Poly.const(gf3, 2)
    r = cube_root_mod(x % P, P)
    assert (r * r * r - x) % P == Poly.zero(gf3)
    rng = seeded(4)
    for _ in range(30):
        c = rand_poly(rng, gf3, 1)
        r = cube_root_mod(c, P)
        assert (r * r * r - c) % P == Poly.zero(gf3)


def test_cubic_residue_factor(gf3):
    x, one = x_one(gf3)
    # curve T^3 - T + x at P = x: full split with roots {0, 1, 2}
    d, roots, quad = cubic_residue_factor(one, x, x)
    assert d == 3 and sorted(r.c for r in roots) == [(), (1,), (2,)]
    # at P = x - 1: T^3 - T + 1 has no roots
    d, roots, quad = cubic_residue_factor(one, x, x - one)
    assert d == 0 and roots == [] and quad is None
    # degenerate T^3: single root 0 with the (M, W) = (0, -a) cofactor data
    d, roots, quad = cubic_residue_factor(Poly.zero(gf3), Poly.zero(gf3), x)
    assert d == 1 and roots == [Poly.zero(gf3)]
    # a case with inertia-2 data: verify the quadratic reassembles the cubic
    P = x + one
    for a, b in [(one, x % P), (x % P, one)]:
        d, roots, quad = cubic_residue_factor(a, b, P)
        if d == 1:
            M, W = quad
            r = roots[0]
            # (T - r)(T^2 - M T + W) = T^3 - a T + b mod P
            assert (M + r) % P == Poly.zero(gf3)
            assert (W - (r * r - a)) % P == Poly.zero(gf3)


def test_cubic_residue_factor_gf9_quadratic_place(gf9):
    x = Poly.x(gf9)
    P = x * x + Poly.const(gf9, gf9.encode([0, 1]))  # irreducible over GF(9)?
    if not is_irreducible(P):
        P = x * x + x + Poly.const(gf9, gf9.encode([0, 1]))
    assert is_irreducible(P)
    one = Poly.one(gf9)
    d, roots, quad = cubic_residue_factor(one, x % P, P)
    assert d in (0, 1, 3)
    for r in roots:
        val = (r * r * r - r + x) % P
        assert val.is_zero()


def test_valuation_and_invmod(gf3):
    x, one = x_one(gf3)
    assert valuation(x ** 3 * (x + one), x) == 3
    assert valuation(one, x) == 0
    inv = invmod(x + one, x * x)
    assert (inv * (x + one)) % (x * x) == one
    assert exact_div(x * x - one, x - one) == (x + one).monic()
