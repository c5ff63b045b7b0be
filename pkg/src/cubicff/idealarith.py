"""Ideal arithmetic in canonical triangular form.

Operations dispatch on the four prime classes of the underlying place:

  type I    unramified
  type II   totally ramified, prime to the index
  type III  totally ramified, dividing the index
  type IV   split ramified

Mixed-support ideals are first split into their four homogeneous parts
(`type_factor`); the parts are processed by the per-class rules and
recombined by the coprime CRT multiplication.  Inversion always returns the
primitive ideal <s> * J^(-1).

Class I multiplication follows the global formulas (gcd extraction of the
non-primitive mass, a CRT lift for the rho-line, and an incremental xgcd over
the omega coefficients of basis cross products to land the third basis
element).  Class II and IV products are assembled prime by prime from the
local power bases in `places`; the global closed forms for these classes
couple their congruences in ways that do not survive mixed local shapes, and
the prime-by-prime route is exactly how their correctness proofs proceed.

Every k-lift and congruence solve is verified on the spot (norm divisibility
of the rho-line, exact divisibility before divisions); a failure raises
InvariantError rather than returning a plausible-looking ideal.
"""

from .errors import DomainError, InvariantError
from .ideals import (
    Ideal,
    divides,
    ideal_contains,
    ideal_norm,
    make_ideal,
    principal_ideal,
    unit_ideal,
)
from .order import element_mul as _emul
from .places import (
    SplitTag,
    basis_typeII_power,
    basis_typeIV_power,
    local_exponents,
    poly_pow,
    split_finite,
)
from .polyring import (
    Poly,
    crt,
    crt2_general,
    exact_div,
    factor,
    g_or,
    gcd_many,
    invmod,
)

__all__ = [
    "Ideal",
    "ideal_norm",
    "ideal_contains",
    "type_factor",
    "ideal_invert",
    "ideal_split_conjugate",
    "ideal_divide",
    "ideal_divide_nonprimitive",
    "ideal_mul_coprime",
    "ideal_mul_primitive",
    "ideal_mul",
    "unit_ideal",
    "principal_ideal",
]

_T12, _T3, _T4 = 0, 1, 2


def _class_of(P, od):
    st = split_finite(P, od)
    if st.tag is SplitTag.TOTALLY_RAMIFIED:
        return _T3 if st.index_divides else _T12
    if st.tag is SplitTag.PARTIALLY_RAMIFIED:
        return _T4
    return _T12


def _support(J):
    if J.s.is_const():
        return []
    return [p for p, _ in factor(J.s)]


def _part_for_primes(J, primes):
    """Restriction of the primitive ideal J to the listed support primes."""
    from .polyring import valuation

    F = J.ctx
    s = Poly.one(F)
    sp = Poly.one(F)
    spp = Poly.one(F)
    for P in primes:
        s = s * poly_pow(P, valuation(J.s, P))
        if not J.sp.is_const():
            sp = sp * poly_pow(P, valuation(J.sp, P))
        if not J.spp.is_const():
            spp = spp * poly_pow(P, valuation(J.spp, P))
    return make_ideal(Poly.one(F), s, sp, spp, J.u, J.w, J.v)


def _split_parts(J, od):
    """Split a primitive ideal into its (I+II, III, IV) homogeneous parts."""
    groups = {_T12: [], _T3: [], _T4: []}
    for P in _support(J):
        groups[_class_of(P, od)].append(P)
    return tuple(_part_for_primes(J, groups[g]) for g in (_T12, _T3, _T4))


def type_factor(J, od):
    """(J1, J2, J3, J4): unramified, wild non-index, wild index, split
    ramified parts; their product (coprime CRT) reproduces J."""
    if not J.is_primitive():
        raise DomainError("type_factor expects a primitive ideal")
    g1, g2, g3, g4 = [], [], [], []
    for P in _support(J):
        st = split_finite(P, od)
        if st.tag is SplitTag.TOTALLY_RAMIFIED:
            (g3 if st.index_divides else g2).append(P)
        elif st.tag is SplitTag.PARTIALLY_RAMIFIED:
            g4.append(P)
        else:
            g1.append(P)
    return tuple(_part_for_primes(J, g) for g in (g1, g2, g3, g4))


# --- inversion ---


def _invert12(J, od):
    """<s> J^(-1) for ideals of class I/II shape (spp = 1)."""
    F = J.ctx
    one = Poly.one(F)
    S = J.s
    Sp = exact_div(J.s, J.sp)
    U = (-(od.I * J.w)) % J.sp if J.sp.deg >= 1 else Poly.zero(F)
    W = (-(J.u * invmod(od.I % Sp, Sp))) % Sp if Sp.deg >= 1 else Poly.zero(F)
    V = (od.E - J.v - W * od.I * J.w) % S if S.deg >= 1 else Poly.zero(F)
    return make_ideal(one, S, Sp, one, U, W, V)


def _invert3(J):
    F = J.ctx
    one = Poly.one(F)
    z = Poly.zero(F)
    return make_ideal(one, J.s, one, exact_div(J.s, J.spp), z, z, z)


def _invert4(J, od):
    """<s> J^(-1) for a class IV part, prime by prime: if J has local
    exponents p^i q^j and a = v_P(s), the inverse part is p^(a-i) q^(2a-j)
    (since <P> = p q^2), rebuilt from the power bases."""
    from .polyring import valuation

    F = J.ctx
    acc = unit_ideal(F)
    for P in _support(J):
        st = split_finite(P, od)
        exps = local_exponents(P, od, st, _part_for_primes(J, [P]))
        a = valuation(J.s, P)
        i, j = a - exps["p"], 2 * a - exps["q"]
        if i < 0 or j < 0:
            raise InvariantError("class IV inversion exponents out of range")
        part = basis_typeIV_power(od, P, i, j)
        if not part.d.is_one():
            raise InvariantError("class IV inverse part is not primitive")
        if not part.is_unit():
            acc = ideal_mul_coprime(acc, part)
    return acc


def ideal_invert(J, od):
    """The primitive ideal <s> * J^(-1) (written J-bar)."""
    if not J.is_primitive():
        raise DomainError("ideal_invert expects a primitive ideal")
    p12, p3, p4 = _split_parts(J, od)
    out = []
    if not p12.is_unit():
        out.append(_invert12(p12, od))
    if not p3.is_unit():
        out.append(_invert3(p3))
    if not p4.is_unit():
        out.append(_invert4(p4, od))
    if not out:
        return unit_ideal(J.ctx)
    acc = out[0]
    for part in out[1:]:
        acc = ideal_mul_coprime(acc, part)
    return acc


# --- conjugate splitting identities ---


def ideal_split_conjugate(I2, I1, od):
    """I2 * I1^(-1) for the matched conjugate shapes: I2 = [s, s rho, ...]
    against I1 = [s, u + rho, v + omega] (class I/II), and the class III/IV
    analogues.  I2 must be contained in I1 and the support must be
    class-homogeneous (class III and IV shapes are indistinguishable by the
    triangular data alone, so the dispatch goes by the place class)."""
    F = I2.ctx
    one = Poly.one(F)
    z = Poly.zero(F)
    if not ideal_contains(I2, I1):
        raise DomainError("conjugate splitting needs I2 inside I1")
    if I2.is_unit() and I1.is_unit():
        return unit_ideal(F)
    if I2.s != I1.s:
        raise DomainError("conjugate splitting needs matching s")
    s = I2.s
    classes = {_class_of(P, od) for P in _support(I2)}
    if len(classes) != 1:
        raise DomainError("conjugate splitting needs a homogeneous class")
    cls = classes.pop()
    if cls == _T3:
        # [s, rho, s omega] / [s, rho, omega] = [s, rho, omega]
        if not (I2.spp == s and I2.sp.is_one() and I1.sp.is_one()
                and I1.spp.is_one() and I2.v.is_zero() and I1.v.is_zero()):
            raise DomainError("class III splitting shape mismatch")
        return make_ideal(one, s, one, one, z, z, z)
    if cls == _T4:
        # I2 = [sp*spp, sp rho, spp(v2 + w2 rho + omega)],
        # I1 = [sp*spp, rho, v1 + omega]
        if not (I1.sp.is_one() and I1.spp.is_one() and I1.w.is_zero()
                and s == I2.sp * I2.spp):
            raise DomainError("class IV splitting shape mismatch")
        dd = g_or(I2.spp, I1.v)
        res = []
        if dd.deg >= 1:
            res.append((od.E % dd, dd))
        rest = exact_div(s, dd)
        if rest.deg >= 1:
            res.append((z, rest))
        V = crt(res) if res else z
        return make_ideal(one, s, one, one, z, z, V)
    if not (I2.spp.is_one() and I2.sp == s and I1.sp.is_one()
            and I1.spp.is_one()):
        raise DomainError("class I/II splitting shape mismatch")
    U = (od.I * I2.w - I1.u) % s
    V = (I2.v - od.I * I2.w * I2.w + I1.u * I2.w) % s
    return make_ideal(one, s, one, one, U, z, V)


# --- division ---


def _divide12(I2, I1, od):
    F = I2.ctx
    one = Poly.one(F)
    z = Poly.zero(F)
    m2 = exact_div(I2.s, I2.sp)
    m1 = exact_div(I1.s, I1.sp)
    d = gcd_many([m2, m1, I1.u - I2.u])
    S = exact_div(I2.s, I1.sp * d)
    Sp = exact_div(I2.sp * d, I1.s)
    mod1 = exact_div(m1, d)
    mod2 = exact_div(m2, d)
    r1 = (od.I * I2.w - I1.u) % mod1 if mod1.deg >= 1 else z
    r2 = I2.u % mod2 if mod2.deg >= 1 else z
    if mod1.deg >= 1 or mod2.deg >= 1:
        U, lcm = crt2_general(r1, mod1, r2, mod2)
    else:
        U, lcm = z, one
    U = _complete_rho_line(U, lcm, exact_div(S, Sp), od)
    W = I2.w % Sp if Sp.deg >= 1 else z
    V = ((W - I2.w) * U + I2.v) % S if S.deg >= 1 else z
    return make_ideal(one, S, Sp, one, U, W, V)


def _complete_rho_line(u0, known, target, od):
    """Lift u0 (correct mod `known`) to U with target | N(U + rho).

    The congruence formulas pin the rho line only up to the lcm of their
    moduli; the missing digits are recovered by Newton on
    G(T) = T^3 - A*T + F*I^2 (derivative -A), exactly the device the
    primitive-multiplication lift uses.  Only unramified prime powers can be
    missing, so the wild part of `target` (where A is not invertible) must
    already be known; that is asserted rather than assumed.
    """
    if target.deg < 1:
        return Poly.zero(od.ctx)
    if divides(target, known):
        return u0 % target
    t_wild = gcd_many([target, od.A ** max(1, target.deg)])
    t1 = exact_div(target, t_wild)
    if not divides(t_wild, known):
        raise InvariantError("wild part of the rho line is underdetermined")
    fi2 = od.FI2
    if t1.deg >= 1:
        inv = invmod((-od.A) % t1, t1)
        U = u0 % t1
        for _ in range(64):
            val = (U * U * U - od.A * U - fi2) % t1
            if val.is_zero():
                break
            U = (U - val * inv) % t1
        else:
            raise InvariantError("rho-line completion failed to converge")
        if t_wild.deg >= 1:
            U = crt([(U, t1), (u0 % t_wild, t_wild)])
    else:
        U = u0 % t_wild
    chk = (U * U * U - od.A * U - fi2) % target
    if not chk.is_zero():
        raise InvariantError("completed rho line fails the norm divisibility")
    return U % target


def _divide3(I2, I1):
    F = I2.ctx
    one = Poly.one(F)
    z = Poly.zero(F)
    d = g_or(exact_div(I1.s, I1.spp), exact_div(I2.s, I2.spp))
    S = exact_div(I2.s, I1.spp * d)
    Spp = exact_div(I2.spp * d, I1.s)
    return make_ideal(one, S, one, Spp, z, z, z)


def _divide4(I2, I1, od):
    """Class IV quotient, prime by prime: subtract local (p, q) exponents and
    rebuild from the split-ramified power bases."""
    F = I2.ctx
    loc2 = _locals_by_prime(I2, od)
    loc1 = _locals_by_prime(I1, od)
    acc = unit_ideal(F)
    for P in sorted(set(loc2) | set(loc1), key=lambda p: (p.deg, p.c)):
        st = (loc2.get(P) or loc1.get(P))[0]
        e2 = loc2[P][1] if P in loc2 else {k.key: 0 for k in st.primes}
        e1 = loc1[P][1] if P in loc1 else {k.key: 0 for k in st.primes}
        i = e2["p"] - e1["p"]
        j = e2["q"] - e1["q"]
        if i < 0 or j < 0:
            raise DomainError("class IV division without containment")
        J = basis_typeIV_power(od, P, i, j)
        if not J.d.is_one():
            raise InvariantError("class IV quotient is not primitive")
        if not J.is_unit():
            acc = ideal_mul_coprime(acc, J)
    return acc


def ideal_divide(I2, I1, od):
    """The exact integral quotient I2 * I1^(-1); needs I2 inside I1."""
    if not (I2.is_primitive() and I1.is_primitive()):
        raise DomainError("ideal_divide expects primitive ideals")
    if not ideal_contains(I2, I1):
        raise DomainError("division needs I2 contained in I1")
    a12, a3, a4 = _split_parts(I2, od)
    b12, b3, b4 = _split_parts(I1, od)
    parts = []
    if not (a12.is_unit() and b12.is_unit()):
        parts.append(_divide12(a12, b12, od))
    if not (a3.is_unit() and b3.is_unit()):
        parts.append(_divide3(a3, b3))
    if not (a4.is_unit() and b4.is_unit()):
        parts.append(_divide4(a4, b4, od))
    acc = unit_ideal(I2.ctx)
    for p in parts:
        acc = ideal_mul_coprime(acc, p)
    return acc


def ideal_divide_nonprimitive(dd, I2, I1, od):
    """(<dd> * I2) * I1^(-1) for primitive I2, I1 with <dd> I2 inside I1.

    Returns (content, primitive ideal)."""
    F = I2.ctx
    dd = dd.monic()
    if not (I2.is_primitive() and I1.is_primitive()):
        raise DomainError("nonprimitive division expects primitive I2, I1")
    scaled = make_ideal(dd, I2.s, I2.sp, I2.spp, I2.u, I2.w, I2.v)
    if not ideal_contains(scaled, I1):
        raise DomainError("nonprimitive division containment failed")
    b12, b3, b4 = _split_parts(I1, od)
    # route dd's primes by the class of their place
    d_parts = {_T12: Poly.one(F), _T3: Poly.one(F), _T4: Poly.one(F)}
    if dd.deg >= 1:
        for P, e in factor(dd):
            d_parts[_class_of(P, od)] = d_parts[_class_of(P, od)] * poly_pow(P, e)
    a12, a3, a4 = _split_parts(I2, od)
    content = Poly.one(F)
    acc = unit_ideal(F)

    def combine(c, J):
        nonlocal content, acc
        content = content * c
        acc = ideal_mul_coprime(acc, J) if not J.is_unit() else acc

    # class I/II
    d0 = d_parts[_T12]
    if not (a12.is_unit() and b12.is_unit() and d0.is_one()):
        D1 = g_or(b12.sp, d0)
        D2 = g_or(exact_div(b12.s, b12.sp), exact_div(d0, D1))
        D3 = exact_div(d0, D1 * D2)
        keep = make_ideal(
            Poly.one(F),
            exact_div(b12.s, D1 * D2),
            exact_div(b12.sp, D1),
            Poly.one(F),
            b12.u,
            b12.w,
            b12.v,
        )
        Id = _divide12(a12, keep, od)
        Im = _invert12(
            make_ideal(Poly.one(F), D1 * D2, D1, Poly.one(F), b12.u, b12.w, b12.v),
            od,
        )
        cm, Jm = ideal_mul(Id, Im, od)
        combine(D3 * cm, Jm)
    # class III
    d0 = d_parts[_T3]
    if not (a3.is_unit() and b3.is_unit() and d0.is_one()):
        D1 = g_or(b3.spp, d0)
        D2 = g_or(exact_div(b3.s, b3.spp), exact_div(d0, D1))
        D3 = exact_div(d0, D1 * D2)
        keep = make_ideal(
            Poly.one(F),
            exact_div(b3.s, D1 * D2),
            Poly.one(F),
            exact_div(b3.spp, D1),
            b3.u,
            b3.w,
            b3.v,
        )
        Id = _divide3(a3, keep)
        Im = _invert3(
            make_ideal(Poly.one(F), D1 * D2, Poly.one(F), D1, b3.u, b3.w, b3.v)
        )
        cm, Jm = ideal_mul(Id, Im, od)
        combine(D3 * cm, Jm)
    # class IV
    d0 = d_parts[_T4]
    if not (a4.is_unit() and b4.is_unit() and d0.is_one()):
        D1 = g_or(b4.sp, d0)
        D2 = g_or(b4.spp, d0)
        D3 = g_or(exact_div(b4.s, b4.sp * b4.spp), exact_div(d0, D1 * D2))
        D4 = exact_div(d0, D1 * D2 * D3)
        keep = make_ideal(
            Poly.one(F),
            exact_div(b4.s, D1 * D2 * D3),
            exact_div(b4.sp, D1),
            exact_div(b4.spp, D2),
            b4.u,
            b4.w,
            b4.v,
        )
        Id = _divide4(a4, keep, od)
        Im = _invert4(
            make_ideal(Poly.one(F), D1 * D2 * D3, D1, D2, b4.u, b4.w, b4.v), od
        )
        cm, Jm = ideal_mul(Id, Im, od)
        combine(D4 * cm, Jm)
    return content, acc


# --- multiplication ---


def ideal_mul_coprime(I1, I2):
    """CRT product for gcd(s1, s2) = 1 (contents multiply through)."""
    F = I1.ctx
    z = Poly.zero(F)
    if not g_or(I1.s, I2.s).is_one():
        raise DomainError("ideal_mul_coprime needs coprime s parts")
    s3 = I1.s * I2.s
    sp3 = I1.sp * I2.sp
    spp3 = I1.spp * I2.spp
    m1 = exact_div(I1.s, I1.sp)
    m2 = exact_div(I2.s, I2.sp)
    u3 = crt([(I1.u, m1), (I2.u, m2)]) if (m1.deg >= 1 or m2.deg >= 1) else z
    w3 = (
        crt([(I1.w, I1.sp), (I2.w, I2.sp)])
        if (I1.sp.deg >= 1 or I2.sp.deg >= 1)
        else z
    )
    k1 = exact_div(I1.s, I1.spp)
    k2 = exact_div(I2.s, I2.spp)
    v3 = (
        crt(
            [
                ((I1.v + I1.u * (w3 - I1.w)) % k1 if k1.deg >= 1 else z, k1),
                ((I2.v + I2.u * (w3 - I2.w)) % k2 if k2.deg >= 1 else z, k2),
            ]
        )
        if (k1.deg >= 1 or k2.deg >= 1)
        else z
    )
    return make_ideal(I1.d * I2.d, s3, sp3, spp3, u3, w3, v3)


def _omega_line(I1, I2, od):
    """An element v3 + w3*rho + omega of I1*I2 via the incremental xgcd over
    the omega coefficients of basis cross products.  Raises if the gcd never
    reaches 1 (the product was not primitive)."""
    from .polyring import xgcd

    e1, e2, e3 = I1.basis()
    f1, f2, f3 = I2.basis()
    pairs = ((e3, f1), (e1, f3), (e2, f2), (e2, f3), (e3, f2), (e3, f3))
    g = None
    combo = None
    for a, b in pairs:
        prod = _emul(a, b, od)
        if prod.c.is_zero():
            continue
        if g is None:
            lead = prod.c.lc()
            g = prod.c.monic()
            combo = prod.scale(Poly.const(prod.c.ctx, prod.c.ctx.inv(lead)))
        else:
            gn, sco, tco = xgcd(g, prod.c)
            if gn.deg < g.deg:
                combo = combo.scale(sco) + prod.scale(tco)
                g = gn
        if g.is_one():
            break
    if g is None or not g.is_one():
        raise InvariantError(
            "omega-coefficient gcd is not 1: product is not primitive"
        )
    return combo.a, combo.b


def _mul_primitive_12(I1, I2, od):
    """Class I/II-shape primitive product via the global gcd/CRT formulas."""
    F = I1.ctx
    one = Poly.one(F)
    z = Poly.zero(F)
    m1 = exact_div(I1.s, I1.sp)
    m2 = exact_div(I2.s, I2.sp)
    d = g_or(m1, m2)
    d1 = g_or(d, I1.u - I2.u) if d.deg >= 1 else one
    S = exact_div(I1.s * I2.s * d1, d)
    Sp = exact_div(I1.sp * I2.sp * d, d1)
    mod1 = exact_div(m1 * d1, d)
    mod2 = exact_div(m2 * d1, d)
    if mod1.deg >= 1 or mod2.deg >= 1:
        u3, lcm = crt2_general(I1.u % mod1 if mod1.deg >= 1 else z, mod1,
                               I2.u % mod2 if mod2.deg >= 1 else z, mod2)
    else:
        u3, lcm = z, one
    S_over_Sp = exact_div(S, Sp)
    if not d1.is_one():
        # Hensel lift along the rho line: S/Sp must divide N(U + rho)
        L = exact_div(S_over_Sp, d1)
        Q = exact_div(u3 * u3 * u3 - u3 * od.A - od.FI2, L)
        k = (Q * invmod(od.A % d1, d1)) % d1
        U = (u3 + k * L) % S_over_Sp
    else:
        U = u3 % S_over_Sp if S_over_Sp.deg >= 1 else z
    if S_over_Sp.deg >= 1:
        chk = (U * U * U - U * od.A - od.FI2) % S_over_Sp
        if not chk.is_zero():
            raise InvariantError("rho-line lift failed the norm divisibility")
    v3, w3 = _omega_line(I1, I2, od)
    if Sp.deg >= 1:
        c, W = divmod(w3, Sp)
    else:
        c, W = w3, z
    V = (v3 - c * Sp * U) % S if S.deg >= 1 else z
    return make_ideal(one, S, Sp, one, U, W, V)


def _mul_primitive_3(I1, I2):
    F = I1.ctx
    one = Poly.one(F)
    z = Poly.zero(F)
    d = g_or(exact_div(I1.s, I1.spp), exact_div(I2.s, I2.spp))
    return make_ideal(
        one, exact_div(I1.s * I2.s, d), one, I1.spp * I2.spp * d, z, z, z
    )


def _locals_by_prime(J, od):
    """{P: exponents-dict} over the support of the primitive ideal J."""
    out = {}
    for P in _support(J):
        st = split_finite(P, od)
        out[P] = (st, local_exponents(P, od, st, _part_for_primes(J, [P])))
    return out


def _mul_by_primes(I1, I2, od, builder):
    """Per-prime product for class II / IV parts: read local exponents, add,
    rebuild through `builder(P, st, exps) -> Ideal-with-content`."""
    F = I1.ctx
    loc1 = _locals_by_prime(I1, od)
    loc2 = _locals_by_prime(I2, od)
    content = Poly.one(F)
    acc = unit_ideal(F)
    for P in sorted(set(loc1) | set(loc2), key=lambda p: (p.deg, p.c)):
        st = (loc1.get(P) or loc2.get(P))[0]
        exps = {pr.key: 0 for pr in st.primes}
        for loc in (loc1.get(P), loc2.get(P)):
            if loc:
                for k, e in loc[1].items():
                    exps[k] += e
        J = builder(P, st, exps)
        content = content * J.d
        if not J.primitive_part().is_unit():
            acc = ideal_mul_coprime(acc, J.primitive_part())
    return content, acc


def ideal_mul_primitive(I1, I2, od):
    """Product of two primitive ideals of one homogeneous class whose product
    is known to be primitive."""
    cls = {_class_of(P, od) for P in _support(I1)} | {
        _class_of(P, od) for P in _support(I2)
    }
    if len(cls) > 1:
        raise DomainError("ideal_mul_primitive needs a homogeneous class")
    if not cls:
        return unit_ideal(I1.ctx)
    c = cls.pop()
    if c == _T3:
        return _mul_primitive_3(I1, I2)
    if c == _T4:
        cont, J = _mul_by_primes(
            I1, I2, od,
            lambda P, st, e: basis_typeIV_power(od, P, e["p"], e["q"]),
        )
        if not cont.is_one():
            raise InvariantError("type IV primitive product produced content")
        return J
    # class I/II share the spp = 1 shape; wild class II primes still need the
    # cube-root local basis when both operands meet at the same P
    if _has_shared_wild(I1, I2, od):
        cont, J = _mul_by_primes(I1, I2, od, _builder_12(od))
        if not cont.is_one():
            raise InvariantError("class II primitive product produced content")
        return J
    return _mul_primitive_12(I1, I2, od)


def _has_shared_wild(I1, I2, od):
    shared = g_or(I1.s, I2.s)
    if shared.is_const():
        return False
    for P, _ in factor(shared):
        st = split_finite(P, od)
        if st.tag is SplitTag.TOTALLY_RAMIFIED:
            return True
    return False


def _builder_12(od):
    def build(P, st, exps):
        if st.tag is SplitTag.TOTALLY_RAMIFIED:
            return basis_typeII_power(od, P, exps["p"])
        from .places import _basis_from_exponents

        return _basis_from_exponents(P, od, st, exps)

    return build


def _mul_general_12(I1, I2, od):
    """Class I/II product with non-primitive mass extracted first."""
    F = I1.ctx
    one = Poly.one(F)
    if _has_shared_wild(I1, I2, od):
        return _mul_by_primes(I1, I2, od, _builder_12(od))
    D1 = gcd_many([I2.sp, exact_div(I1.s, I1.sp), I1.u + od.I * I2.w])
    D2 = gcd_many([I1.sp, exact_div(I2.s, I2.sp), I2.u + od.I * I1.w])
    g = g_or(exact_div(I1.sp, D2), exact_div(I2.sp, D1))
    D3 = exact_div(g, gcd_many([g, I1.w - I2.w]))
    I1p = make_ideal(
        one,
        exact_div(I1.s, D1 * D2 * D3),
        exact_div(I1.sp, D2 * D3),
        one,
        I1.u,
        I1.w,
        I1.v,
    )
    I2p = make_ideal(
        one,
        exact_div(I2.s, D1 * D2 * D3),
        exact_div(I2.sp, D1 * D3),
        one,
        I2.u,
        I2.w,
        I2.v,
    )
    if D3.is_one():
        Jpart = unit_ideal(F)
        cJ = one
    else:
        b1 = _invert12(make_ideal(one, D3, D3, one, I1.u, I1.w, I1.v), od)
        b2 = _invert12(make_ideal(one, D3, D3, one, I2.u, I2.w, I2.v), od)
        bp = _mul_primitive_12(b1, b2, od)
        cJ, Jpart = ideal_divide_nonprimitive(D3, unit_ideal(F), bp, od)
    out = _mul_primitive_12(I1p, I2p, od)
    if not Jpart.is_unit():
        out = _mul_primitive_12(out, Jpart, od)
    return D1 * D2 * D3 * cJ, out


def _mul_general_3(I1, I2):
    F = I1.ctx
    one = Poly.one(F)
    D1 = g_or(exact_div(I1.s, I1.spp), I2.spp)
    D2 = g_or(exact_div(I2.s, I2.spp), I1.spp)
    D3 = g_or(I1.spp, I2.spp)
    I1p = make_ideal(
        one, exact_div(I1.s, D1 * D2 * D3), one,
        exact_div(I1.spp, D2 * D3), I1.u, I1.w, I1.v,
    )
    I2p = make_ideal(
        one, exact_div(I2.s, D1 * D2 * D3), one,
        exact_div(I2.spp, D1 * D3), I2.u, I2.w, I2.v,
    )
    z = Poly.zero(F)
    J = make_ideal(one, D3, one, one, z, z, z) if not D3.is_one() else unit_ideal(F)
    out = _mul_primitive_3(I1p, I2p)
    if not J.is_unit():
        out = _mul_primitive_3(out, J)
    return D1 * D2 * D3, out


def ideal_mul(I1, I2, od):
    """General product: returns (content D, primitive I3) with
    <D> * I3 = I1 * I2.  Contents of the operands pass straight through."""
    F = I1.ctx
    carried = I1.d * I2.d
    I1, I2 = I1.primitive_part(), I2.primitive_part()
    if I1.is_unit() or I2.is_unit():
        other = I2 if I1.is_unit() else I1
        return carried.monic(), other
    if g_or(I1.s, I2.s).is_one():
        return carried.monic(), ideal_mul_coprime(I1, I2)
    a12, a3, a4 = _split_parts(I1, od)
    b12, b3, b4 = _split_parts(I2, od)
    content = carried
    acc = unit_ideal(F)

    def push(c, J):
        nonlocal content, acc
        content = content * c
        if not J.is_unit():
            acc = ideal_mul_coprime(acc, J)

    if not (a12.is_unit() and b12.is_unit()):
        if a12.is_unit() or b12.is_unit() or g_or(a12.s, b12.s).is_one():
            push(Poly.one(F), ideal_mul_coprime(a12, b12))
        else:
            c, J = _mul_general_12(a12, b12, od)
            push(c, J)
    if not (a3.is_unit() and b3.is_unit()):
        if g_or(a3.s, b3.s).is_one():
            push(Poly.one(F), ideal_mul_coprime(a3, b3))
        else:
            c, J = _mul_general_3(a3, b3)
            push(c, J)
    if not (a4.is_unit() and b4.is_unit()):
        if g_or(a4.s, b4.s).is_one():
            push(Poly.one(F), ideal_mul_coprime(a4, b4))
        else:
            c, J = _mul_by_primes(
                a4, b4, od,
                lambda P, st, e: basis_typeIV_power(od, P, e["p"], e["q"]),
            )
            push(c, J)
    return content.monic(), acc
