"""Splitting of places and triangular bases of primes and their powers.

Finite places P are classified by v_P(discriminant) and, in the unramified
case, by the number of residue roots of the minimal cubic of rho:

    v_P(Delta) > 2   totally ramified   (P) = p^3
    v_P(Delta) = 1   split ramified     (P) = p q^2
    otherwise        unramified, with 0 / 1 / 3 residue roots giving
                     inert / partially split / completely split.

The infinite place follows the degree criteria: wild models are totally
ramified; tame models split according to the constant cubic
Y^3 - a_{2n} Y + b_{3n} built from the leading coefficients.

Prime-power bases are produced from the defining congruences of each local
shape.  The only machinery needed is Newton lifting of a simple root of the
minimal cubic of rho (derivative -A, usable when P does not divide A) or of
omega (derivative -E*Z, usable at the ramified-index primes where the rho
cubic degenerates), plus the exact identities rho*omega = -F*I and
omega = (rho^2 - A)/I that convert between the two root towers.  Each
construction is closed-form in the lifted root; the recurrences these replace
compute the same Hensel digits step by step.
"""

import enum
import functools
from dataclasses import dataclass

from .errors import DomainError, InvariantError
from .ideals import make_ideal, principal_ideal, unit_ideal
from .polyring import (
    Poly,
    cube_root_mod,
    is_irreducible,
    cubic_residue_factor,
    exact_div,
    invmod,
    poly_roots,
    valuation,
)


class SplitTag(enum.Enum):
    TOTALLY_RAMIFIED = "totally_ramified"
    PARTIALLY_RAMIFIED = "partially_ramified"
    INERT = "inert"
    PARTIALLY_SPLIT = "partially_split"
    COMPLETELY_SPLIT = "completely_split"


@dataclass(frozen=True)
class PrimeAbove:
    e: int
    f: int
    key: str
    root: Poly | None = None  # rho-cubic residue root for f = 1 unramified
    quad: tuple | None = None  # (M, W) cofactor for the inertia-2 prime


@dataclass(frozen=True)
class SplittingType:
    tag: SplitTag
    primes: tuple
    index_divides: bool = False  # totally ramified: distinguishes p | I

    def __post_init__(self):
        if sum(p.e * p.f for p in self.primes) != 3:
            raise InvariantError("splitting must satisfy sum(e*f) = 3")

    def prime(self, key):
        for p in self.primes:
            if p.key == key:
                return p
        raise DomainError(f"no prime with key {key!r} above this place")


def poly_pow(P, k):
    acc = Poly.one(P.ctx)
    for _ in range(k):
        acc = acc * P
    return acc


@functools.lru_cache(maxsize=65536)
def split_finite(P, od):
    """Splitting of the finite place P (monic irreducible).

    Classification is deterministic, so results are memoized; ideal
    arithmetic re-classifies the same places constantly.
    """
    if not P.is_monic() or P.deg < 1 or not is_irreducible(P):
        raise DomainError("finite places are monic irreducibles")
    v = valuation(od.delta, P)
    if v > 2:
        div = valuation(od.I, P) == 1
        return SplittingType(
            SplitTag.TOTALLY_RAMIFIED,
            (PrimeAbove(3, 1, "p"),),
            index_divides=div,
        )
    if v == 1:
        return SplittingType(
            SplitTag.PARTIALLY_RAMIFIED,
            (PrimeAbove(1, 1, "p"), PrimeAbove(2, 1, "q")),
        )
    a = od.A % P
    b = od.FI2 % P
    ddeg, roots, quad = cubic_residue_factor(a, b, P)
    if ddeg == 0:
        return SplittingType(SplitTag.INERT, (PrimeAbove(1, 3, "inert"),))
    if ddeg == 1:
        return SplittingType(
            SplitTag.PARTIALLY_SPLIT,
            (
                PrimeAbove(1, 1, "p1", root=roots[0]),
                PrimeAbove(1, 2, "q", quad=quad),
            ),
        )
    primes = tuple(
        PrimeAbove(1, 1, f"p{k + 1}", root=r) for k, r in enumerate(roots)
    )
    return SplittingType(SplitTag.COMPLETELY_SPLIT, primes)


def split_infinite(c):
    """Splitting of the place at infinity of a standard model."""
    if c.criterion_wild() == c.criterion_tame():
        raise DomainError("curve is not in standard form")
    F = c.ctx
    if c.criterion_wild():
        return SplittingType(SplitTag.TOTALLY_RAMIFIED, (PrimeAbove(3, 1, "p"),))
    if c.A.deg % 2 == 1:
        return SplittingType(
            SplitTag.PARTIALLY_RAMIFIED,
            (PrimeAbove(1, 1, "p"), PrimeAbove(2, 1, "q")),
        )
    n = c.A.deg // 2
    a2n = c.A.lc()
    b3n = c.B.coeff(3 * n)
    cubic = Poly(F, (b3n, F.neg(a2n), 0, 1))
    roots = poly_roots(cubic)
    if len(roots) == 0:
        return SplittingType(SplitTag.INERT, (PrimeAbove(1, 3, "inert"),))
    if len(roots) == 1:
        return SplittingType(
            SplitTag.PARTIALLY_SPLIT,
            (
                PrimeAbove(1, 1, "p1", root=Poly.const(F, roots[0])),
                PrimeAbove(1, 2, "q"),
            ),
        )
    if len(roots) != 3:
        raise InvariantError("separable cubic with two roots")
    primes = tuple(
        PrimeAbove(1, 1, f"p{k + 1}", root=Poly.const(F, r))
        for k, r in enumerate(roots)
    )
    return SplittingType(SplitTag.COMPLETELY_SPLIT, primes)


# --- Newton lifts in the completions ---


def lift_rho_root(od, P, r0, k):
    """Root of T^3 - A*T + FI^2 mod P^k from a simple residue root r0.

    The derivative is the constant -A, so this needs P not dividing A
    (every unramified P qualifies).
    """
    Pk = poly_pow(P, k)
    inv_dg = invmod(-od.A % Pk if Pk.deg >= 1 else -od.A, Pk)
    fi2 = od.FI2
    r = r0 % Pk
    for _ in range(64):
        val = (r * r * r - od.A * r + fi2) % Pk
        if val.is_zero():
            return r
        r = (r - val * inv_dg) % Pk
    raise InvariantError("rho-root lift failed to converge")


def lift_omega_root(od, P, z0, k):
    """Root of T^3 + E*T^2 - F^2*I mod P^k from a simple residue root z0.

    The derivative at Z is -E*Z; usable when E and z0 are units mod P, which
    holds for the unramified branch above the split-ramified primes (z0 = -E)
    and at unramified P whenever z0 != 0.
    """
    Pk = poly_pow(P, k)
    f2i = od.F2I
    z = z0 % Pk
    for _ in range(64):
        val = (z * z * z + od.E * z * z - f2i) % Pk
        if val.is_zero():
            return z
        dg = (-(od.E * z)) % Pk
        z = (z - val * invmod(dg, Pk)) % Pk
    raise InvariantError("omega-root lift failed to converge")


def omega_from_rho(od, P, r, k):
    """omega = (rho^2 - A)/I at an unramified prime (P does not divide I)."""
    Pk = poly_pow(P, k)
    return ((r * r - od.A) * invmod(od.I % Pk if Pk.deg >= 1 else od.I, Pk)) % Pk


def rho_from_omega(od, P, z, k):
    """rho = -F*I/omega, from rho*omega = -F*I (needs z a unit mod P)."""
    Pk = poly_pow(P, k)
    return (-(od.FI * invmod(z, Pk))) % Pk


# --- local bases of primitive prime-power products ---


def _one_zero(ctx):
    return Poly.one(ctx), Poly.zero(ctx)


def basis_f1_power(od, P, r0, i):
    """p^i for an unramified prime of inertia degree 1 with residue root r0."""
    one, zero = _one_zero(od.ctx)
    if i == 0:
        return unit_ideal(od.ctx)
    r = lift_rho_root(od, P, r0, i)
    Pi = poly_pow(P, i)
    o = omega_from_rho(od, P, r, i)
    return make_ideal(one, Pi, one, one, (-r) % Pi, zero, (-o) % Pi)


def basis_f1_pair_power(od, P, r_low, e_low, r_high, e_high):
    """p^e_low q^e_high over a completely split P, 1 <= e_low <= e_high,
    where p, q are the inertia-1 primes with residue roots r_low, r_high."""
    one, zero = _one_zero(od.ctx)
    k = e_high
    rl = lift_rho_root(od, P, r_low, k)
    rh = lift_rho_root(od, P, r_high, k)
    ol = omega_from_rho(od, P, rl, k)
    oh = omega_from_rho(od, P, rh, k)
    Plow = poly_pow(P, e_low)
    Phigh = poly_pow(P, e_high)
    diff = poly_pow(P, e_high - e_low)
    u = (-rh) % diff if diff.deg >= 1 else zero
    g = ((oh - ol) * invmod(rl - rh, Plow)) % Plow if Plow.deg >= 1 else zero
    h = (-(g * rh) - oh) % Phigh
    return make_ideal(one, Phigh, Plow, one, u, g, h)


def basis_f2_power(od, P, linear_root, j):
    """q^j for the inertia-2 prime over a partially split P; linear_root is
    the residue root of the other (inertia-1) prime."""
    one, zero = _one_zero(od.ctx)
    if j == 0:
        return unit_ideal(od.ctx)
    r = lift_rho_root(od, P, linear_root, j)
    Pj = poly_pow(P, j)
    iv = invmod(od.I % Pj, Pj)
    return make_ideal(one, Pj, Pj, one, zero, (iv * r) % Pj, (iv * r * r) % Pj)


def basis_typeII_power(od, P, i):
    """p^i above a totally ramified P not dividing the index: the cube-root
    basis, with (P) = p^3 peeled off as content."""
    one, zero = _one_zero(od.ctx)
    content = poly_pow(P, i // 3)
    r = i % 3
    if r == 0:
        return make_ideal(content, one, one, one, zero, zero, zero)
    f = cube_root_mod(od.FI2, P)
    iv = invmod(od.I % P, P)
    if r == 1:
        return make_ideal(
            content, P, one, one, f % P, zero, (-(iv * f * f)) % P
        )
    return make_ideal(
        content, P, P, one, zero, (-(iv * f)) % P, (iv * (f * f + od.A)) % P
    )


def basis_typeIII_power(od, P, i):
    one, zero = _one_zero(od.ctx)
    content = poly_pow(P, i // 3)
    r = i % 3
    if r == 0:
        return make_ideal(content, one, one, one, zero, zero, zero)
    if r == 1:
        return make_ideal(content, P, one, one, zero, zero, zero)
    return make_ideal(content, P, one, P, zero, zero, zero)


def basis_typeIV_power(od, P, i, j):
    """p^i q^j above a split-ramified P ((P) = p q^2), contents peeled."""
    one, zero = _one_zero(od.ctx)
    m = min(i, j // 2)
    content = poly_pow(P, m)
    i, j = i - m, j - 2 * m
    if i and j >= 2:
        raise InvariantError("type IV exponent reduction failed")
    if i == 0 and j == 0:
        return make_ideal(content, one, one, one, zero, zero, zero)
    prec = max(i, (j + 1) // 2) + 3
    z = lift_omega_root(od, P, (-od.E) % P, prec)
    if i and j == 0:
        Pi = poly_pow(P, i)
        u = (od.FI * invmod(z % Pi, Pi)) % Pi
        return make_ideal(content, Pi, one, one, u, zero, (-z) % Pi)
    if i == 0:
        # q^j: s = P^ceil(j/2), sp = P^floor(j/2); the rho value at the
        # unramified branch is r = -F*I/Z, divisible by P exactly once.
        kc, kf = (j + 1) // 2, j // 2
        Pc, Pf = poly_pow(P, kc), poly_pow(P, kf)
        Phigh = poly_pow(P, kc + 1)
        r = (-(od.FI * invmod(z % Phigh, Phigh))) % Phigh
        r1 = exact_div(r, P)
        ip = exact_div(od.I, P)
        ivp = invmod(ip % Phigh if Phigh.deg >= 1 else ip, Phigh)
        w = (r1 * ivp) % Pf if Pf.deg >= 1 else zero
        v = (P * r1 * r1 * ivp) % Pc
        return make_ideal(content, Pc, Pf, one, zero, w, v)
    # p^i q with i >= 1, j = 1
    Pi = poly_pow(P, i)
    r = (-(od.FI * invmod(z % Pi, Pi))) % Pi
    u = (-r) % Pi
    if i >= 2:
        Pim = poly_pow(P, i - 1)
        v = (-z) % Pim
    else:
        v = zero
    return make_ideal(content, Pi, one, P, u, zero, v)


def prime_basis(P, st, which, od):
    """Triangular basis of one prime above P, selected by its key."""
    pr = st.prime(which)
    one, zero = _one_zero(od.ctx)
    if st.tag is SplitTag.TOTALLY_RAMIFIED:
        if st.index_divides:
            return basis_typeIII_power(od, P, 1)
        return basis_typeII_power(od, P, 1)
    if st.tag is SplitTag.PARTIALLY_RAMIFIED:
        if pr.e == 2:
            return make_ideal(one, P, one, one, zero, zero, zero)
        return make_ideal(one, P, one, one, zero, zero, od.E % P)
    if st.tag is SplitTag.INERT:
        return principal_ideal(P)
    if pr.f == 2:
        other = st.prime("p1")
        return basis_f2_power(od, P, other.root, 1)
    return basis_f1_power(od, P, pr.root, 1)


def prime_power_basis(P, od, powers, st=None):
    """Basis of prod(selected prime^exponent) above a single P.

    `powers` maps prime keys (as in split_finite(P, od)) to nonnegative
    exponents.  The result carries any principal content as d.
    """
    if st is None:
        st = split_finite(P, od)
    exps = {p.key: 0 for p in st.primes}
    for key, e in dict(powers).items():
        if key not in exps:
            raise DomainError(f"unknown prime key {key!r}")
        if e < 0:
            raise DomainError("negative exponent")
        exps[key] = e
    return _basis_from_exponents(P, od, st, exps)


def _basis_from_exponents(P, od, st, exps):
    one, zero = _one_zero(od.ctx)
    if st.tag is SplitTag.TOTALLY_RAMIFIED:
        i = exps["p"]
        if st.index_divides:
            return basis_typeIII_power(od, P, i)
        return basis_typeII_power(od, P, i)
    if st.tag is SplitTag.PARTIALLY_RAMIFIED:
        return basis_typeIV_power(od, P, exps["p"], exps["q"])
    if st.tag is SplitTag.INERT:
        return make_ideal(
            poly_pow(P, exps["inert"]), one, one, one, zero, zero, zero
        )
    if st.tag is SplitTag.PARTIALLY_SPLIT:
        a, b = exps["p1"], exps["q"]
        m = min(a, b)
        content = poly_pow(P, m)
        a, b = a - m, b - m
        if a and b:
            raise InvariantError("partial-split exponent reduction failed")
        root = st.prime("p1").root
        if b == 0:
            J = basis_f1_power(od, P, root, a)
        else:
            J = basis_f2_power(od, P, root, b)
        return make_ideal(content * J.d, J.s, J.sp, J.spp, J.u, J.w, J.v)
    # completely split
    keys = [p.key for p in st.primes]
    vals = [exps[k] for k in keys]
    m = min(vals)
    content = poly_pow(P, m)
    vals = [v - m for v in vals]
    pos = [(st.prime(k).root, v) for k, v in zip(keys, vals) if v > 0]
    if len(pos) == 0:
        J = unit_ideal(od.ctx)
    elif len(pos) == 1:
        J = basis_f1_power(od, P, pos[0][0], pos[0][1])
    elif len(pos) == 2:
        (ra, ea), (rb, eb) = pos
        if ea <= eb:
            J = basis_f1_pair_power(od, P, ra, ea, rb, eb)
        else:
            J = basis_f1_pair_power(od, P, rb, eb, ra, ea)
    else:
        raise InvariantError("three positive exponents survived content removal")
    return make_ideal(content * J.d, J.s, J.sp, J.spp, J.u, J.w, J.v)


# --- local exponent reader: the inverse of the constructions above ---


def local_exponents(P, od, st, J):
    """Exponent of each prime above P in the primitive ideal J, read from
    the canonical data restricted to P."""
    vs = valuation(J.s, P) if not J.s.is_const() else 0
    vsp = valuation(J.sp, P) if not J.sp.is_const() else 0
    vspp = valuation(J.spp, P) if not J.spp.is_const() else 0
    total = vs + vsp + vspp
    if total == 0:
        return {p.key: 0 for p in st.primes}
    if st.tag is SplitTag.TOTALLY_RAMIFIED:
        return {"p": total}
    if st.tag is SplitTag.INERT:
        raise InvariantError("inert prime inside a primitive ideal")
    if st.tag is SplitTag.PARTIALLY_RAMIFIED:
        prec = total + 3
        z = lift_omega_root(od, P, (-od.E) % P, prec)
        r = rho_from_omega(od, P, z, prec)
        vp = _member_valuation(J, r, z, P, total + 1)
        vq = total - vp
        if vq < 0:
            raise InvariantError("type IV valuation reader out of range")
        return {"p": vp, "q": vq}
    cap = total + 1
    out = {}
    if st.tag is SplitTag.COMPLETELY_SPLIT:
        acc = 0
        for p in st.primes:
            r = lift_rho_root(od, P, p.root, cap)
            o = omega_from_rho(od, P, r, cap)
            out[p.key] = _member_valuation(J, r, o, P, cap)
            acc += out[p.key]
        if acc != total:
            raise InvariantError("split valuations do not add up")
        return out
    # partially split: p1 (f=1) and q (f=2)
    p1 = st.prime("p1")
    r = lift_rho_root(od, P, p1.root, cap)
    o = omega_from_rho(od, P, r, cap)
    vp = _member_valuation(J, r, o, P, cap)
    vq = (total - vp) // 2
    if 2 * vq + vp != total:
        raise InvariantError("partial-split valuations do not add up")
    return {"p1": vp, "q": vq}


def _member_valuation(J, rho_val, omega_val, P, cap):
    """min over the basis of v_P(a + b*rho_val + c*omega_val), capped."""
    Pc = poly_pow(P, cap)
    best = cap
    for e in J.basis():
        a, b, c = e.coords()
        img = (a + b * rho_val + c * omega_val) % Pc
        if img.is_zero():
            continue
        best = min(best, valuation(img, P))
        if best == 0:
            return 0
    if best >= cap:
        raise InvariantError("valuation reader hit its cap")
    return best
