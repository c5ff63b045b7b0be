"""Univariate polynomials over GF(3^m), plus the number theory the rest of
the package runs on: xgcd, CRT, modular exponentiation, factorization
(squarefree / distinct-degree / equal-degree), square and cube root tests,
and root finding in residue fields F_q[x]/(P).

Representation: dense tuple of field element codes, constant term first, no
trailing zeros.  The zero polynomial is the empty tuple; its degree is the
float -inf sentinel, which compares below every integer, so max() and degree
comparisons need no special cases.

gcds are always returned monic; equal-degree splitting is randomized but
takes an explicit seed, so every caller is reproducible.
"""

import functools
import random

from .errors import DomainError, InvariantError
from .ff import FieldElement

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("ctx", "c")

    def __init__(self, ctx, codes):
        cs = list(codes)
        while cs and cs[-1] == 0:
            cs.pop()
        self.ctx = ctx
        self.c = tuple(cs)

    # --- constructors ---

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls(ctx, (1,))

    @classmethod
    def x(cls, ctx):
        return cls(ctx, (0, 1))

    @classmethod
    def const(cls, ctx, code):
        return cls(ctx, (code,))

    @classmethod
    def from_elements(cls, ctx, elems):
        codes = []
        for e in elems:
            if isinstance(e, FieldElement):
                if e.ctx != ctx:
                    raise ValueError("field context mismatch")
                codes.append(e.code)
            else:
                codes.append(ctx.encode(e))
        return cls(ctx, codes)

    @classmethod
    def from_ints(cls, ctx, ints):
        """Prime-field coefficients given as plain integers (signed ok)."""
        return cls(ctx, ((n % 3) for n in ints))

    @classmethod
    def monomial(cls, ctx, deg, code=1):
        return cls(ctx, (0,) * deg + (code,))

    # --- basic queries ---

    @property
    def deg(self):
        return len(self.c) - 1 if self.c else NEG_INF

    def is_zero(self):
        return not self.c

    def is_one(self):
        return self.c == (1,)

    def is_const(self):
        return len(self.c) <= 1

    def lc(self):
        """Leading coefficient code (0 for the zero polynomial)."""
        return self.c[-1] if self.c else 0

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else 0

    def coeffs(self):
        return tuple(FieldElement(self.ctx, c) for c in self.c)

    def is_monic(self):
        return bool(self.c) and self.c[-1] == 1

    # --- ring operations ---

    def __add__(self, other):
        F = self.ctx
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = F.add
        for i, cb in enumerate(b):
            out[i] = add(out[i], cb)
        return Poly(F, out)

    def __neg__(self):
        F = self.ctx
        neg = F.neg
        return Poly(F, tuple(neg(c) for c in self.c))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.ctx
        a, b = self.c, other.c
        if not a or not b:
            return Poly(F, ())
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] = add(out[i + j], mul(ca, cb))
        return Poly(F, out)

    def scale(self, code):
        if code == 0:
            return Poly(self.ctx, ())
        mul = self.ctx.mul
        return Poly(self.ctx, tuple(mul(c, code) for c in self.c))

    def shift(self, k):
        """Multiply by x^k."""
        if not self.c:
            return self
        return Poly(self.ctx, (0,) * k + self.c)

    def __divmod__(self, other):
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        F = self.ctx
        a = list(self.c)
        b = other.c
        db = len(b) - 1
        if len(a) - 1 < db:
            return Poly(F, ()), self
        inv_lead = F.inv(b[-1])
        q = [0] * (len(a) - db)
        add, mul, neg = F.add, F.mul, F.neg
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                f = mul(c, inv_lead)
                q[i - db] = f
                nf = neg(f)
                for j in range(db + 1):
                    a[i - db + j] = add(a[i - db + j], mul(nf, b[j]))
        return Poly(F, q), Poly(F, a)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        if other.is_const():
            if other.is_zero():
                raise DomainError("division by the zero polynomial")
            return Poly(self.ctx, ())
        return divmod(self, other)[1]

    def __pow__(self, e):
        if e < 0:
            raise DomainError("negative polynomial power")
        acc = Poly.one(self.ctx)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def monic(self):
        if not self.c:
            return self
        if self.c[-1] == 1:
            return self
        return self.scale(self.ctx.inv(self.c[-1]))

    def derivative(self):
        """Formal derivative; k*c_k with k reduced mod 3."""
        F = self.ctx
        out = []
        for k in range(1, len(self.c)):
            r = k % 3
            if r == 0:
                out.append(0)
            elif r == 1:
                out.append(self.c[k])
            else:
                out.append(F.neg(self.c[k]))
        return Poly(F, out)

    def eval(self, code):
        """Evaluate at a field element code (Horner)."""
        F = self.ctx
        acc = 0
        add, mul = F.add, F.mul
        for c in reversed(self.c):
            acc = add(mul(acc, code), c)
        return acc

    def compose_x_cube(self):
        """Substitute x -> x^3."""
        out = []
        for c in self.c:
            out.append(c)
            out.extend((0, 0))
        return Poly(self.ctx, out[: max(0, 3 * len(self.c) - 2)])

    def cube_root(self):
        """For f with f' = 0 (so f = g(x^3)): the g with g^3 = f."""
        F = self.ctx
        out = []
        for k, c in enumerate(self.c):
            if k % 3 == 0:
                out.append(F.cube_root(c))
            elif c != 0:
                raise InvariantError("cube_root of a polynomial that is not a cube")
        return Poly(F, out)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ctx == other.ctx and self.c == other.c

    def __hash__(self):
        return hash((self.ctx, self.c))

    def __repr__(self):
        return f"Poly[{poly_str(self)}]"


def poly_str(f):
    """Human form like 'x^4 + (0,1)' with digits ascending in alpha."""
    if f.is_zero():
        return "0"
    parts = []
    for k in range(len(f.c) - 1, -1, -1):
        c = f.c[k]
        if c == 0:
            continue
        if f.ctx.m == 1:
            cs = str(c)
        else:
            cs = "(" + ",".join(str(d) for d in f.ctx.decode(c)) + ")"
        if k == 0:
            parts.append(cs)
        else:
            xs = "x" if k == 1 else f"x^{k}"
            parts.append(xs if cs == "1" else f"{cs}*{xs}")
    return " + ".join(parts)


# --- gcd machinery ---


def xgcd(f, g):
    """(d, s, t) with d = gcd(f, g) monic and s*f + t*g = d."""
    if f.is_zero() and g.is_zero():
        raise DomainError("xgcd of two zero polynomials")
    F = f.ctx
    r0, r1 = f, g
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lead = r0.lc()
    if lead != 1:
        il = F.inv(lead)
        r0, s0, t0 = r0.scale(il), s0.scale(il), t0.scale(il)
    return r0, s0, t0


def gcd(f, g):
    while not g.is_zero():
        f, g = g, f % g
    if f.is_zero():
        raise DomainError("gcd of two zero polynomials")
    return f.monic()


def gcd_many(polys):
    acc = None
    for p in polys:
        acc = p if acc is None else g_or(acc, p)
        if not acc.is_zero() and acc.is_one():
            return acc
    if acc is None or acc.is_zero():
        raise DomainError("gcd of an empty or all-zero family")
    return acc.monic()


def g_or(f, g):
    """gcd allowing one argument to be zero."""
    if f.is_zero():
        return g.monic() if not g.is_zero() else f
    if g.is_zero():
        return f.monic()
    return gcd(f, g)


def invmod(f, m):
    """Inverse of f modulo m; raises InvariantError if gcd(f, m) != 1."""
    d, s, _ = xgcd(f % m if m.deg >= 1 else f, m)
    if not d.is_one():
        raise InvariantError(f"non-invertible element mod {poly_str(m)}")
    return s % m if m.deg >= 1 else s


def exact_div(f, g):
    """f / g asserting zero remainder."""
    q, r = divmod(f, g)
    if not r.is_zero():
        raise InvariantError("exact division has a remainder")
    return q


def valuation(f, P):
    """v_P(f) for f != 0 and P of positive degree."""
    if f.is_zero():
        raise DomainError("valuation of the zero polynomial")
    v = 0
    while True:
        q, r = divmod(f, P)
        if not r.is_zero():
            return v
        v += 1
        f = q


def crt(residues):
    """CRT for pairwise coprime moduli: [(r_i, m_i)] -> x mod prod(m_i)."""
    if not residues:
        raise DomainError("empty CRT input")
    x, m = residues[0]
    x = x % m if m.deg >= 1 else Poly.zero(x.ctx)
    for r, mi in residues[1:]:
        d, s, t = xgcd(m, mi)
        if not d.is_one():
            raise DomainError("CRT moduli are not coprime")
        # x' = x + m*s*(r - x) == r mod mi, == x mod m
        x = x + m * (s * (r - x) % mi)
        m = m * mi
        x = x % m
    return x


def crt2_general(r1, m1, r2, m2):
    """CRT with possibly non-coprime moduli; raises if inconsistent."""
    d, s, _ = xgcd(m1, m2)
    diff = r2 - r1
    q, rem = divmod(diff, d)
    if not rem.is_zero():
        raise InvariantError("inconsistent congruences in general CRT")
    lcm = m1 * exact_div(m2, d)
    x = (r1 + m1 * (s * q % exact_div(m2, d))) % lcm
    return x, lcm


def modexp(base, e, mod):
    if mod.is_zero() or mod.deg < 1:
        raise DomainError("modexp needs a modulus of degree >= 1")
    acc = Poly.one(base.ctx)
    base = base % mod
    while e:
        if e & 1:
            acc = (acc * base) % mod
        base = (base * base) % mod
        e >>= 1
    return acc


# --- factorization ---


def squarefree_decomposition(f):
    """Monic squarefree decomposition in characteristic 3.

    Returns [(g_i, e_i)] with f = lc * prod g_i^e_i, the g_i squarefree,
    pairwise coprime, non-constant.  Handles f' = 0 by the x -> x^(1/3)
    cube-root substitution.
    """
    F = f.ctx
    if f.deg < 1:
        return []
    f = f.monic()
    out = []

    def rec(g, mult):
        if g.deg < 1:
            return
        gp = g.derivative()
        if gp.is_zero():
            rec(g.cube_root(), 3 * mult)
            return
        c = gcd(g, gp)
        w = exact_div(g, c)  # product of factors with mult not divisible by 3
        i = 1
        while not w.is_one():
            y = g_or(w, c)
            z = exact_div(w, y)
            if z.deg >= 1:
                out.append((z, i * mult))
            w = y
            c = exact_div(c, y)
            i += 1
        if c.deg >= 1:
            rec(c.cube_root(), 3 * mult)

    rec(f, 1)
    out.sort(key=lambda ge: (ge[1], ge[0].deg, ge[0].c))
    return out


def _distinct_degree(f):
    """f monic squarefree -> [(product of irreducible factors of degree d, d)]."""
    F = f.ctx
    q = F.q
    out = []
    x = Poly.x(F)
    h = x % f
    d = 0
    rest = f
    while rest.deg >= 1:
        d += 1
        if 2 * d > rest.deg:
            out.append((rest, rest.deg))
            break
        h = modexp(h, q, rest)
        g = g_or(h - x % rest, rest)
        if g.deg >= 1:
            out.append((g, d))
            rest = exact_div(rest, g)
            h = h % rest
    return out


def _equal_degree_split(f, d, rng):
    """Cantor-Zassenhaus split of monic squarefree f, all factors of degree d."""
    F = f.ctx
    q = F.q
    n = f.deg
    if n == d:
        return [f]
    e = (q**d - 1) // 2
    while True:
        h = Poly(F, [rng.randrange(q) for _ in range(n)])
        if h.deg < 1:
            continue
        g = g_or(h, f)
        if 1 <= g.deg < n:
            pass
        else:
            t = modexp(h, e, f) - Poly.one(F)
            if t.is_zero():
                continue
            g = g_or(t, f)
            if not (1 <= g.deg < n):
                continue
        left = _equal_degree_split(g, d, rng)
        right = _equal_degree_split(exact_div(f, g), d, rng)
        return left + right


def factor(f, seed=0):
    """Monic irreducible factors with multiplicities, canonically sorted.

    lc(f) * prod(p_i^e_i) reassembles f exactly.
    """
    if f.is_zero() or f.deg < 1:
        raise DomainError("factor needs a non-constant polynomial")
    rng = random.Random(seed)
    out = []
    for g, e in squarefree_decomposition(f):
        if g.deg <= 3:
            # dominant small case: peel roots directly
            parts = _factor_small(g, rng)
        else:
            parts = []
            for h, d in _distinct_degree(g):
                parts.extend(_equal_degree_split(h, d, rng))
        out.extend((p, e) for p in parts)
    out.sort(key=lambda pe: (pe[0].deg, pe[0].c, pe[1]))
    return out


def _factor_small(g, rng):
    """Factor a monic squarefree polynomial of degree <= 3 by root search."""
    F = g.ctx
    roots = poly_roots(g)
    parts = []
    rest = g
    x = Poly.x(F)
    for r in roots:
        lin = x - Poly.const(F, r)
        parts.append(lin)
        rest = exact_div(rest, lin)
    if rest.deg >= 1:
        parts.append(rest.monic())
    return parts


def poly_roots(f):
    """All roots of f in the coefficient field, sorted by code."""
    F = f.ctx
    if f.is_zero():
        raise DomainError("roots of the zero polynomial")
    # gcd with x^q - x isolates the linear part
    x = Poly.x(F)
    if f.deg >= 2:
        lin = g_or(modexp(x, F.q, f) - x % f, f)
    else:
        lin = f.monic() if f.deg == 1 else Poly.one(F)
    roots = []
    rest = lin
    while rest.deg >= 1:
        if rest.deg == 1:
            roots.append(F.neg(F.mul(rest.c[0], F.inv(rest.c[1]))))
            break
        # split by exhaustive scan only for tiny fields, else CZ on linears
        if F.q <= 81:
            roots.extend(a for a in range(F.q) if rest.eval(a) == 0)
            break
        rng = random.Random(hash(rest.c))
        for p in _equal_degree_split(rest, 1, rng):
            roots.append(F.neg(F.mul(p.c[0], F.inv(p.c[1]))))
        break
    roots.sort()
    return roots


@functools.lru_cache(maxsize=65536)
def is_irreducible(P):
    if P.deg < 1:
        return False
    if P.deg == 1:
        return True
    fs = factor(P)
    return len(fs) == 1 and fs[0][1] == 1


def poly_sqrt(f):
    """g with g^2 = f, or None when f is not a square in F_q[x]."""
    if f.is_zero():
        raise DomainError("sqrt of the zero polynomial")
    F = f.ctx
    s = F.sqrt(f.lc())
    if s is None:
        return None
    if f.deg == 0:
        return Poly.const(F, s)
    if f.deg % 2:
        return None
    g = Poly.const(F, s)
    for p, e in factor(f):
        if e % 2:
            return None
        for _ in range(e // 2):
            g = g * p
    return g


def cube_root_mod(c, P):
    """The unique f with f^3 = c (mod P), P irreducible: inverse Frobenius
    in the residue field of size 3^(m deg P)."""
    F = c.ctx
    k = P.deg
    if k < 1:
        raise DomainError("cube_root_mod needs deg P >= 1")
    e = 3 ** (F.m * k - 1)
    c = c % P
    if c.is_zero():
        return c
    tab = _residue_tables(P)
    if tab is not None:
        r = tab.unpack(tab.pow(tab.pack(c), e))
    else:
        r = modexp(c, e, P)
    if (r * r * r - c) % P != Poly.zero(F):
        raise DomainError("modulus is not irreducible (cube root failed)")
    return r


# --- fast tables for small residue fields F_q[x]/(P) ---
#
# Residue elements are packed into integers with one 3-bit slot per trit, so
# addition is carry-free bit fiddling; multiplication goes through log/exp
# tables built once per P and reused across curves.  Fields above 3^8 fall
# back to the generic Poly path.

_PK_LIMIT = 3**8
_pk_cache = {}


class _ResidueTables:
    def __init__(self, P):
        F = P.ctx
        k = P.deg
        self.P = P
        self.k = k
        self.n = F.m * k
        self.q1 = F.q**k
        n = self.n
        self.ones = int("001" * n, 2)
        self.highs = self.ones << 2
        self.threes = self.ones * 3
        # enumerate residues as Polys, find a generator, build exp/log
        elems = []
        for code in range(self.q1):
            cs, cc = [], code
            for _ in range(k):
                cs.append(cc % F.q)
                cc //= F.q
            elems.append(Poly(F, cs))
        self._elems = elems
        order = self.q1 - 1
        rng = random.Random(0x5EED ^ self.q1)
        while True:
            g = elems[rng.randrange(1, self.q1)]
            exp = []
            cur = Poly.one(F)
            seen = True
            for _ in range(order):
                exp.append(self.pack(cur))
                cur = (cur * g) % P
            if self.pack(cur) == exp[0] and len(set(exp)) == order:
                break
        self.exp = exp
        self.log = {e: i for i, e in enumerate(exp)}
        self.zero = 0
        self.one = exp[0]

    def pack(self, f):
        F = self.P.ctx
        v = 0
        shift = 0
        for j in range(self.k):
            for d in F.decode(f.coeff(j)):
                v |= d << shift
                shift += 3
        return v

    def unpack(self, v):
        F = self.P.ctx
        coeffs = []
        for _ in range(self.k):
            digs = []
            for _ in range(F.m):
                digs.append(v & 7)
                v >>= 3
            coeffs.append(F.encode(digs))
        return Poly(F, coeffs)

    def norm3(self, s):
        m = (s + self.ones) & self.highs
        return s - (m >> 2) * 3

    def add(self, a, b):
        return self.norm3(a + b)

    def neg(self, a):
        return self.norm3(self.threes - a)

    def sub(self, a, b):
        return self.norm3(a + self.norm3(self.threes - b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q1 - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("residue inverse of zero")
        return self.exp[(-self.log[a]) % (self.q1 - 1)]

    def pow(self, a, e):
        if a == 0:
            return 0 if e else self.one
        return self.exp[(self.log[a] * e) % (self.q1 - 1)]


def _residue_tables(P):
    if P.ctx.q ** P.deg > _PK_LIMIT:
        return None
    key = (P.ctx, P.c)
    tab = _pk_cache.get(key)
    if tab is None:
        tab = _ResidueTables(P)
        _pk_cache[key] = tab
    return tab


def _pk_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _pk_divmod(R, f, g):
    f = list(f)
    dg = len(g) - 1
    ginv = R.inv(g[-1])
    q = [0] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        c = R.mul(f[-1], ginv)
        shift = len(f) - 1 - dg
        q[shift] = c
        for j in range(dg + 1):
            f[shift + j] = R.sub(f[shift + j], R.mul(c, g[j]))
        _pk_trim(f)
    return q, f


def _pk_mul(R, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = R.add(out[i + j], R.mul(a, b))
    return _pk_trim(out)


def _pk_gcd(R, f, g):
    f, g = list(f), list(g)
    while g:
        f, g = g, _pk_divmod(R, f, g)[1]
    inv = R.inv(f[-1])
    return [R.mul(c, inv) for c in f]


def _pk_modexp(R, base, e, mod):
    acc = [R.one]
    base = _pk_divmod(R, base, mod)[1]
    while e:
        if e & 1:
            acc = _pk_divmod(R, _pk_mul(R, acc, base), mod)[1]
        base = _pk_divmod(R, _pk_mul(R, base, base), mod)[1]
        e >>= 1
    return acc


def _pk_split_linears(R, f, seed):
    rng = random.Random(seed)
    out = []
    e = (R.q1 - 1) // 2

    def rec(g):
        if len(g) - 1 == 1:
            out.append(R.mul(R.neg(g[0]), R.inv(g[1])))
            return
        while True:
            h = _pk_trim([R.exp[rng.randrange(R.q1 - 1)]
                          if rng.randrange(R.q1) else 0
                          for _ in range(len(g) - 1)])
            if not h:
                continue
            t = list(_pk_modexp(R, h, e, g))
            if not t:
                continue
            t[0] = R.sub(t[0], R.one)
            _pk_trim(t)
            if not t:
                continue
            d = _pk_gcd(R, t, g)
            if 1 <= len(d) - 1 < len(g) - 1:
                rec(d)
                rec(_pk_divmod(R, g, d)[0])
                return

    rec(f)
    return out


# --- arithmetic in F_q[x]/(P) and for polynomials in T over it ---
#
# T-polynomials are plain lists of Poly, constant term first, used for the
# cubic residue classification.  Everything stays reduced mod P.


class ResidueField:
    """F_q[x]/(P) for irreducible P; elements are reduced Poly values."""

    def __init__(self, P):
        self.P = P
        self.ctx = P.ctx
        self.size = P.ctx.q ** P.deg

    def red(self, f):
        return f % self.P

    def mul(self, a, b):
        return (a * b) % self.P

    def inv(self, a):
        return invmod(a, self.P)

    def pow(self, a, e):
        return modexp(a, e, self.P) if e else Poly.one(self.ctx)


def _tp_trim(f):
    while f and f[-1].is_zero():
        f.pop()
    return f


def _tp_divmod(R, f, g):
    f = list(f)
    dg = len(g) - 1
    ginv = R.inv(g[-1])
    q = [Poly.zero(R.ctx)] * max(0, len(f) - dg)
    while len(f) - 1 >= dg and f:
        c = R.mul(f[-1], ginv)
        shift = len(f) - 1 - dg
        q[shift] = c
        for j in range(dg + 1):
            f[shift + j] = R.red(f[shift + j] - c * g[j])
        _tp_trim(f)
    return q, f


def _tp_mul(R, f, g):
    if not f or not g:
        return []
    out = [Poly.zero(R.ctx) for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        if not a.is_zero():
            for j, b in enumerate(g):
                out[i + j] = R.red(out[i + j] + a * b)
    return _tp_trim(out)


def _tp_gcd(R, f, g):
    f, g = list(f), list(g)
    while g:
        f, g = g, _tp_divmod(R, f, g)[1]
    if not f:
        raise DomainError("gcd of zero T-polynomials")
    inv = R.inv(f[-1])
    return [R.mul(c, inv) for c in f]


def _tp_modexp(R, base, e, mod):
    acc = [Poly.one(R.ctx)]
    base = _tp_divmod(R, base, mod)[1]
    while e:
        if e & 1:
            acc = _tp_divmod(R, _tp_mul(R, acc, base), mod)[1]
        base = _tp_divmod(R, _tp_mul(R, base, base), mod)[1]
        e >>= 1
    return acc


def _tp_split_linears(R, f, seed):
    """Roots of a monic T-polynomial that is a product of distinct linears."""
    rng = random.Random(seed)
    out = []

    def rec(g):
        if len(g) - 1 == 0:
            return
        if len(g) - 1 == 1:
            out.append(R.red(-g[0] * R.inv(g[1])))
            return
        e = (R.size - 1) // 2
        while True:
            h = [Poly(R.ctx, [rng.randrange(R.ctx.q) for _ in range(R.P.deg)])
                 for _ in range(len(g) - 1)]
            _tp_trim(h)
            if not h:
                continue
            t = _tp_modexp(R, h, e, g)
            if not t:
                continue
            t = list(t)
            t[0] = R.red(t[0] - Poly.one(R.ctx))
            _tp_trim(t)
            if not t:
                continue
            d = _tp_gcd(R, t, g)
            if 1 <= len(d) - 1 < len(g) - 1:
                rec(d)
                rec(_tp_divmod(R, g, d)[0])
                return

    rec(f)
    out.sort(key=lambda r: r.c)
    return out


def cubic_residue_factor(a, b, P, seed=0):
    """Classify T^3 - a T + b over the residue field F_q[x]/(P).

    Returns (gcd_degree, roots, quad) where gcd_degree is the degree of
    gcd(T^size - T, cubic) in {0, 1, 3}, roots are the residue-field roots
    sorted canonically, and quad = (M, W) gives the irreducible quadratic
    cofactor T^2 - M T + W when exactly one root exists (otherwise None).
    """
    tab = _residue_tables(P)
    if tab is not None:
        return _cubic_residue_factor_packed(tab, a, b, P, seed)
    R = ResidueField(P)
    F = P.ctx
    a, b = a % P, b % P
    cubic = [b, -a, Poly.zero(F), Poly.one(F)]
    tq = _tp_modexp(R, [Poly.zero(F), Poly.one(F)], R.size, cubic)
    tq = list(tq) + [Poly.zero(F)] * (2 - len(tq))
    tq[1] = R.red(tq[1] - Poly.one(F))
    _tp_trim(tq)
    if not tq:
        d = cubic[:]  # T^q = T identically: every residue is a root
    else:
        d = _tp_gcd(R, tq, cubic)
    ddeg = len(d) - 1
    if ddeg == 0:
        return 0, [], None
    if ddeg == 1:
        root = R.red(-d[0] * R.inv(d[1]))
        # cubic = (T - root)(T^2 + root T + (root^2 - a))
        M = R.red(-root)
        W = R.red(root * root - a)
        return 1, [root], (M, W)
    if ddeg == 2:
        raise InvariantError("cubic with exactly two roots over a field")
    roots = _tp_split_linears(R, d, seed)
    if len(roots) != 3:
        raise InvariantError("degree-3 gcd must split into three roots")
    return 3, roots, None


def _cubic_residue_factor_packed(R, a, b, P, seed):
    ap = R.pack(a % P)
    bp = R.pack(b % P)
    cubic = _pk_trim([bp, R.neg(ap), 0, R.one])
    tq = _pk_modexp(R, [0, R.one], R.q1, cubic)
    tq = list(tq) + [0] * (2 - len(tq))
    tq[1] = R.sub(tq[1], R.one)
    _pk_trim(tq)
    if not tq:
        d = cubic[:]
    else:
        d = _pk_gcd(R, tq, cubic)
    ddeg = len(d) - 1
    if ddeg == 0:
        return 0, [], None
    if ddeg == 1:
        root = R.mul(R.neg(d[0]), R.inv(d[1]))
        rootp = R.unpack(root)
        M = R.unpack(R.neg(root))
        W = R.unpack(R.sub(R.mul(root, root), ap))
        return 1, [rootp], (M, W)
    if ddeg == 2:
        raise InvariantError("cubic with exactly two roots over a field")
    roots = sorted((R.unpack(r) for r in _pk_split_linears(R, d, seed)),
                   key=lambda p: p.c)
    if len(roots) != 3:
        raise InvariantError("degree-3 gcd must split into three roots")
    return 3, roots, None
