"""Base field GF(3^m): arithmetic, inverse Frobenius, modulus validation."""

import pytest
from hypothesis import given, settings, strategies as st

from cubicff.errors import DomainError
from cubicff.ff import Fq, FieldElement, GF3

from conftest import alpha_code


def test_prime_field_basics(gf3):
    assert gf3.add(1, 1) == 2
    assert gf3.mul(2, 2) == 1
    assert gf3.inv(1) == 1
    assert gf3.inv(2) == 2
    assert gf3.neg(1) == 2


def test_gf9_inverse_and_cube_root(gf9):
    t = gf9.encode([0, 1])
    assert gf9.inv(t) == gf9.encode([0, 2])  # t * 2t = 2t^2 = 1
    assert gf9.cube_root(t) == gf9.encode([0, 2])  # (2t)^3 = t
    assert gf9.mul(t, gf9.inv(t)) == 1


def test_section13_field_reduction(f310):
    # alpha * alpha^9 reduces through the degree-10 modulus
    a = f310.encode([0, 1] + [0] * 8)
    prod = f310.mul(a, f310.pow(a, 9))
    assert prod == alpha_code(f310, 1, -1, 0, 0, 1, 1, 1)


def test_pow_conventions(gf9):
    t = gf9.encode([0, 1])
    assert gf9.pow(t, 0) == 1
    assert gf9.pow(0, 0) == 1
    assert gf9.pow(t, gf9.q) == t  # a^(3^m) = a for all a
    assert GF3.pow(2, 2) == 1


def test_cube_root_trivia(gf3):
    assert gf3.cube_root(0) == 0
    for c in range(3):
        assert gf3.cube_root(c) == c  # c^3 = c in GF(3)


@pytest.mark.parametrize("m,mod", [(1, [0, 1]), (2, [1, 0, 1]), (3, [1, 2, 0, 1])])
def test_cube_root_bijection_and_inverse_exhaustive(m, mod):
    F = Fq(m, mod)
    seen = set()
    for a in range(F.q):
        r = F.cube_root(a)
        assert F.mul(F.mul(r, r), r) == a
        assert F.cube_root(F.mul(F.mul(a, a), a)) == a
        seen.add(r)
        if a:
            assert F.mul(a, F.inv(a)) == 1
    assert len(seen) == F.q


def test_zero_inverse_raises(gf9):
    with pytest.raises(ZeroDivisionError):
        gf9.inv(0)


def test_modulus_validation():
    with pytest.raises(DomainError):
        Fq(2, [0, 0, 1])  # t^2 reducible
    with pytest.raises(DomainError):
        Fq(2, [2, 0, 1])  # t^2 - 1 = (t-1)(t+1)
    with pytest.raises(DomainError):
        Fq(2, [1, 0, 2])  # not monic
    with pytest.raises(DomainError):
        Fq(3, [1, 0, 1])  # wrong digit count


def test_context_mismatch(gf3, gf9):
    a = FieldElement(gf3, 1)
    b = FieldElement(gf9, 1)
    with pytest.raises(ValueError):
        a + b


def test_sqrt(gf3, gf9, gf27):
    assert gf3.sqrt(2) is None  # non-square in GF(3)
    for F in (gf3, gf9, gf27):
        for a in range(F.q):
            s = F.sqrt(a)
            if s is not None:
                assert F.mul(s, s) == a
        squares = {F.mul(a, a) for a in range(F.q)}
        assert all(F.sqrt(a) is not None for a in squares)
        assert all(F.sqrt(a) is None for a in range(F.q) if a not in squares)


@settings(max_examples=200, derandomize=True)
@given(st.integers(0, 26), st.integers(0, 26), st.integers(0, 26))
def test_field_axioms_gf27(a, b, c):
    F = Fq(3, [1, 2, 0, 1])
    assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
    assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(a, b) == F.mul(b, a)


def test_element_operators(gf9):
    t = gf9.element([0, 1])
    one = gf9.element(1)
    assert (t * t) + one == gf9.element(0)  # t^2 = -1
    assert t / t == one
    assert (-t) + t == gf9.element(0)
    assert (t ** 3).cube_root() == t
    assert t.coords == (0, 1)
