"""Triangular ideal arithmetic against the brute-force oracle."""

import pytest

from cubicff.errors import DomainError
from cubicff.ff import GF3
from cubicff.polyring import Poly
from cubicff.curve import Curve
from cubicff.order import compute_order_data, Element
from cubicff.places import prime_basis, prime_power_basis, split_finite
from cubicff.ideals import (
    ideal_member,
    ideal_validate,
    make_ideal,
    principal_ideal,
    unit_ideal,
)
from cubicff.idealarith import (
    ideal_contains,
    ideal_divide,
    ideal_divide_nonprimitive,
    ideal_invert,
    ideal_mul,
    ideal_mul_coprime,
    ideal_mul_primitive,
    ideal_norm,
    ideal_split_conjugate,
    type_factor,
)
from cubicff.oracle import oracle_ideal_mul

from conftest import rand_ideal, seeded


def full(D, J):
    return make_ideal(D * J.d, J.s, J.sp, J.spp, J.u, J.w, J.v)


def s13_I1(s13):
    od = s13["od"]
    x = Poly.x(od.ctx)
    st = split_finite(x, od)
    key = next(p.key for p in st.primes if p.root == s13["root"])
    return prime_basis(x, st, key, od)


def test_ideal_norm_examples(s13):
    od = s13["od"]
    F = od.ctx
    x = Poly.x(F)
    assert ideal_norm(unit_ideal(F)).is_one()
    I1 = s13_I1(s13)
    assert ideal_norm(I1) == x
    _, I2 = ideal_mul(I1, I1, od)
    _, I3 = ideal_mul(I2, I1, od)
    _, I6 = ideal_mul(I3, I3, od)
    assert ideal_norm(I6) == x ** 6


def test_contains_examples(s13):
    od = s13["od"]
    F = od.ctx
    I1 = s13_I1(s13)
    _, I2 = ideal_mul(I1, I1, od)
    _, I3 = ideal_mul(I2, I1, od)
    _, I6 = ideal_mul(I3, I3, od)
    assert ideal_contains(I1, I1)
    assert ideal_contains(I1, unit_ideal(F))
    assert not ideal_contains(I1, I6)
    assert ideal_contains(I6, I1)


def test_contains_matches_membership(zoo3):
    rng = seeded(41)
    for c in zoo3:
        od = compute_order_data(c)
        for _ in range(25):
            J1 = rand_ideal(rng, od, cap=5)
            J2 = rand_ideal(rng, od, cap=5)
            member_all = all(ideal_member(J2, e) for e in J1.basis())
            assert ideal_contains(J1, J2) == member_all


def test_type_factor(zoo3, ex62):
    rng = seeded(43)
    curves = list(zoo3)
    for c in curves:
        od = compute_order_data(c)
        for _ in range(15):
            J = rand_ideal(rng, od, cap=6)
            parts = type_factor(J, od)
            acc = unit_ideal(od.ctx)
            for p in parts:
                if not p.is_unit():
                    acc = ideal_mul_coprime(acc, p)
            assert acc == J
    # the worked-example ideals have all mass in the unramified part
    _, od62 = ex62
    s13_like = rand_ideal(seeded(1), od62, cap=4)
    parts = type_factor(s13_like, od62)
    assert all(p.is_primitive() for p in parts)


def test_invert_examples(s13):
    od = s13["od"]
    F = od.ctx
    x = Poly.x(F)
    assert ideal_invert(unit_ideal(F), od).is_unit()
    I1 = s13_I1(s13)
    _, I2 = ideal_mul(I1, I1, od)
    _, I3 = ideal_mul(I2, I1, od)
    _, I6 = ideal_mul(I3, I3, od)
    inv = ideal_invert(I6, od)
    assert inv.s == x ** 6 and inv.sp == x ** 6
    # w = -u2 and v = E - v2 (the omega-line congruences)
    assert inv.w == (-I6.u) % (x ** 6)
    assert inv.v == (od.E - I6.v) % (x ** 6)
    prod = oracle_ideal_mul(I6, inv, od)
    assert prod.primitive_part().is_unit() and prod.d == x ** 6


def test_invert_fuzz(zoo3, zoo9):
    rng = seeded(47)
    for zoo in (zoo3, zoo9):
        for c in zoo:
            od = compute_order_data(c)
            for _ in range(12):
                J = rand_ideal(rng, od, cap=5)
                bar = ideal_invert(J, od)
                ideal_validate(bar, od)
                prod = oracle_ideal_mul(J, bar, od)
                assert prod.primitive_part().is_unit() and prod.d == J.s


def test_split_conjugate(gf3, zoo3):
    od = compute_order_data(Curve(Poly.one(gf3), Poly.x(gf3)))
    x = Poly.x(gf3)
    st = split_finite(x, od)
    k1, k2 = st.primes[0].key, st.primes[1].key
    for i in (1, 2, 3):
        pq_i = prime_power_basis(x, od, {k1: i, k2: i})
        p_i = prime_power_basis(x, od, {k1: i})
        q_i = prime_power_basis(x, od, {k2: i})
        got = ideal_split_conjugate(pq_i, p_i, od)
        assert got == q_i, i
    # class III identity: [s, rho, s omega] / [s, rho, omega] = [s, rho, omega]
    od3 = compute_order_data(zoo3[2])
    st3 = split_finite(x, od3)
    p1 = prime_basis(x, st3, "p", od3)
    p2 = prime_power_basis(x, od3, {"p": 2})
    assert ideal_split_conjugate(p2, p1, od3) == p1
    # trivial s = 1
    u = unit_ideal(gf3)
    assert ideal_split_conjugate(u, u, od).is_unit()
    # class IV shapes: pq / q = p, pq / p = q, q^2 / q = q
    od4 = compute_order_data(zoo3[3])
    st4 = split_finite(x, od4)
    p = prime_basis(x, st4, "p", od4)
    q = prime_basis(x, st4, "q", od4)
    pq = prime_power_basis(x, od4, {"p": 1, "q": 1}, st4)
    q2 = prime_power_basis(x, od4, {"q": 2}, st4)
    assert ideal_split_conjugate(pq, q, od4) == p
    assert ideal_split_conjugate(pq, p, od4) == q
    assert ideal_split_conjugate(q2, q, od4) == q


def test_divide_examples(s13):
    od = s13["od"]
    F = od.ctx
    I1 = s13_I1(s13)
    assert ideal_divide(I1, unit_ideal(F), od) == I1
    assert ideal_divide(I1, I1, od).is_unit()
    with pytest.raises(DomainError):
        ideal_divide(unit_ideal(F), I1, od)  # containment fails


def test_divide_fuzz_roundtrip(zoo3, zoo9):
    rng = seeded(53)
    for zoo in (zoo3, zoo9):
        for c in zoo:
            od = compute_order_data(c)
            for _ in range(12):
                J1 = rand_ideal(rng, od, cap=4)
                J2 = rand_ideal(rng, od, cap=4)
                D, P3 = ideal_mul(J1, J2, od)
                if not D.is_one():
                    continue
                assert ideal_divide(P3, J1, od) == J2
                assert ideal_divide(P3, J2, od) == J1


def test_divide_nonprimitive(s13, zoo3):
    od = s13["od"]
    F = od.ctx
    x = Poly.x(F)
    I1 = s13_I1(s13)
    # d = 1 reduces to plain division
    _, I2 = ideal_mul(I1, I1, od)
    c0, q0 = ideal_divide_nonprimitive(Poly.one(F), I2, I1, od)
    assert c0.is_one() and q0 == I1
    # fuzzed identity <c> q * I1 = <d> I2
    rng = seeded(59)
    for c in zoo3:
        odc = compute_order_data(c)
        for _ in range(8):
            J1 = rand_ideal(rng, odc, cap=3)
            J2 = rand_ideal(rng, odc, cap=3)
            D, P3 = ideal_mul(J1, J2, odc)
            dd = (J1.s * D).monic()
            cc, qq = ideal_divide_nonprimitive(dd, P3, J1, odc)
            lhs_c, lhs = ideal_mul(qq, J1, odc)
            assert full((cc * lhs_c).monic(), lhs) == full(dd, P3)


def test_mul_coprime(s13):
    od = s13["od"]
    F = od.ctx
    I1 = s13_I1(s13)
    assert ideal_mul_coprime(I1, unit_ideal(F)) == I1
    with pytest.raises(DomainError):
        ideal_mul_coprime(I1, I1)


def test_mul_examples(s13, zoo3):
    od = s13["od"]
    F = od.ctx
    x = Poly.x(F)
    I1 = s13_I1(s13)
    # the worked-example squares equal the oracle and the printed shape
    sq = ideal_mul_primitive(I1, I1, od)
    assert sq == oracle_ideal_mul(I1, I1, od)
    assert sq.s == x * x and sq.u == s13_I1(s13).u and sq.v == s13["v1"]
    # J * its inverse = <s> * unit
    D, out = ideal_mul(I1, ideal_invert(I1, od), od)
    assert D == I1.s and out.is_unit()
    # class II: p * p^2 = <P>
    od2 = compute_order_data(zoo3[1])
    xg = Poly.x(GF3)
    p1 = prime_power_basis(xg, od2, {"p": 1})
    p2 = prime_power_basis(xg, od2, {"p": 2})
    D, out = ideal_mul(p1, p2, od2)
    assert D == xg and out.is_unit()


def test_mul_oracle_fuzz(zoo3, zoo9):
    rng = seeded(61)
    for zoo in (zoo3, zoo9):
        for c in zoo:
            od = compute_order_data(c)
            for _ in range(15):
                J1 = rand_ideal(rng, od, cap=5)
                J2 = rand_ideal(rng, od, cap=5)
                D, P3 = ideal_mul(J1, J2, od)
                ideal_validate(P3, od)
                assert full(D, P3) == oracle_ideal_mul(J1, J2, od)
                assert ideal_norm(full(D, P3)) == (
                    ideal_norm(J1) * ideal_norm(J2)
                ).monic()


def test_mul_oracle_gf27(gf27):
    from conftest import curve_zoo

    rng = seeded(63)
    for c in curve_zoo(gf27)[:3]:
        od = compute_order_data(c)
        for _ in range(5):
            J1 = rand_ideal(rng, od, cap=6)
            J2 = rand_ideal(rng, od, cap=6)
            D, P3 = ideal_mul(J1, J2, od)
            assert full(D, P3) == oracle_ideal_mul(J1, J2, od)
            bar = ideal_invert(J1, od)
            prod = oracle_ideal_mul(J1, bar, od)
            assert prod.primitive_part().is_unit() and prod.d == J1.s


def test_principal_ideal_contents():
    F = GF3
    x = Poly.x(F)
    J = principal_ideal(x * x + x)
    assert J.d == x * x + x and J.primitive_part().is_unit()
