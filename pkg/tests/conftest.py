"""Shared fixtures: small fields, a curve zoo covering all four prime
classes, the worked-example field, and random generators for polynomials and
canonical primitive ideals."""

import random

import pytest

from cubicff.ff import Fq, GF3
from cubicff.polyring import Poly
from cubicff.curve import Curve, standardize
from cubicff.order import Element, compute_order_data
from cubicff.classgroup import can_basis


@pytest.fixture(scope="session")
def gf3():
    return GF3


@pytest.fixture(scope="session")
def gf9():
    return Fq(2, [1, 0, 1])  # t^2 + 1


@pytest.fixture(scope="session")
def gf27():
    return Fq(3, [1, 2, 0, 1])  # t^3 + 2t^2 + 1 (irreducible over GF(3))


@pytest.fixture(scope="session")
def f310():
    # the worked-example field: a^10 - a^6 - a^5 - a^4 + a - 1
    return Fq(10, [2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1])


def alpha_code(F, *signed):
    """Encode a field constant from signed digits, alpha^0 first."""
    return F.encode([d % 3 for d in signed] + [0] * (F.m - len(signed)))


@pytest.fixture(scope="session")
def s13(f310):
    """Worked-example curve, order data, and golden constants."""
    F = f310
    x = Poly.x(F)
    B = x ** 4 + Poly.const(F, alpha_code(F, 0, 1))
    curve = Curve(Poly.one(F), B)
    od = compute_order_data(curve)
    u1 = Poly.const(F, alpha_code(F, 0, 0, 0, -1, -1, 1, 1, 1, -1, -1))
    r = -u1
    v1 = Poly.one(F) - r * r
    return {
        "F": F,
        "curve": curve,
        "od": od,
        "u1": u1,
        "root": r,
        "v1": v1,
        # printed step-3 constants (these match the source table verbatim)
        "a3": Poly.const(F, alpha_code(F, -1, 0, 1, -1, 1, -1, -1, 0, 1)),
        "b3": Poly.const(F, alpha_code(F, 0, 0, 0, 1, 1, -1, -1, -1, 1, 1)),
    }


def example62_curve():
    F = GF3
    A = Poly.from_ints(F, [2, 1, 0, 1, 1])  # (x^2+x-1)(x^2+1)
    B = Poly.from_ints(F, [1, 0, 1, 0, 1, 1, 1, 0, 2])  # -x^8+x^6+x^5+x^4+x^2+1
    return Curve(A, B)


@pytest.fixture(scope="session")
def ex62():
    c = example62_curve()
    return c, compute_order_data(c)


def curve_zoo(F):
    """Standard-form curves over F hitting all four prime classes at x."""
    x = Poly.x(F)
    one = Poly.one(F)
    two = Poly.const(F, 2)
    zoo = [
        Curve(one, x),                 # unramified-rich, genus 0
        Curve(x, x + one),             # class II at x (wild, no index)
        Curve(x * x, one + x * x),     # class III at x (wild index)
        # class IV at x (v_x(A) = 1, x | I since v_x(B) = 2 with i0 = 0),
        # and class II at x + 1
        Curve(x * x + x, x ** 3 + two * x * x),
    ]
    if F.m == 1:
        zoo.append(example62_curve())
    return [standardize(c)[0] for c in zoo]


@pytest.fixture(scope="session")
def zoo3():
    return curve_zoo(GF3)


@pytest.fixture(scope="session")
def zoo9(gf9):
    return curve_zoo(gf9)


@pytest.fixture(scope="session")
def dist3():
    """A distinguished-setting curve over GF(3) with genus 3."""
    F = GF3
    x = Poly.x(F)
    c = Curve(Poly.one(F), x ** 4 + x + Poly.const(F, 2))
    return c, compute_order_data(c)


def rand_poly(rng, F, maxdeg, nonzero=False, monic=False):
    d = rng.randrange(0, maxdeg + 1)
    c = [rng.randrange(F.q) for _ in range(d)]
    c.append(1 if monic else rng.randrange(F.q))
    p = Poly(F, c)
    if (nonzero or monic) and p.is_zero():
        return rand_poly(rng, F, maxdeg, nonzero, monic)
    return p


def rand_ideal(rng, od, maxdeg=2, cap=6):
    """Canonical primitive ideal: the primitive part of a random principal
    ideal (guaranteed valid by construction)."""
    F = od.ctx
    for _ in range(20000):
        el = Element(
            rand_poly(rng, F, maxdeg),
            rand_poly(rng, F, maxdeg),
            rand_poly(rng, F, maxdeg),
        )
        if el.is_zero():
            continue
        J = can_basis(el, od).primitive_part()
        if J.s.deg <= cap:
            return J
    raise RuntimeError("rand_ideal cap is unreachable for this field")


def seeded(n):
    return random.Random(n)
