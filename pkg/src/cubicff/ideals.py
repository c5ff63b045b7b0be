"""Canonical triangular representation of integral ideals.

A nonzero integral ideal of the maximal order is stored as

    d * [ s,  sp*(u + rho),  spp*(v + w*rho + omega) ]

with d, s, sp, spp monic, sp | s, spp | s, and gcd(sp, spp) = 1 (which holds
for every ideal of these orders; it is asserted, not assumed silently).  The
ideal is primitive exactly when d = 1.  Reduction ranges making the form
unique:

    deg u < deg(s/sp),   deg w < deg sp,   deg v < deg(s/spp).

The v-range is deliberately tighter than "deg v < deg s": multiples of s/spp
can be absorbed into v while keeping the triangular shape, so reducing v
modulo s/spp (not merely s) is what makes equality a plain field-by-field
comparison.

The norm of the ideal is d^3 * s * sp * spp.
"""

from dataclasses import dataclass

from .errors import DomainError, InvariantError
from .polyring import Poly, exact_div, g_or
from .order import Element, element_mul


@dataclass(frozen=True)
class Ideal:
    d: Poly
    s: Poly
    sp: Poly
    spp: Poly
    u: Poly
    w: Poly
    v: Poly

    @property
    def ctx(self):
        return self.s.ctx

    def is_primitive(self):
        return self.d.is_one()

    def is_unit(self):
        return (
            self.d.is_one()
            and self.s.is_one()
            and self.sp.is_one()
            and self.spp.is_one()
        )

    def primitive_part(self):
        if self.d.is_one():
            return self
        return Ideal(Poly.one(self.ctx), self.s, self.sp, self.spp,
                     self.u, self.w, self.v)

    def basis(self):
        """The three basis elements as order elements."""
        F = self.ctx
        z = Poly.zero(F)
        ds = self.d * self.s
        dsp = self.d * self.sp
        dspp = self.d * self.spp
        return (
            Element(ds, z, z),
            Element(dsp * self.u, dsp, z),
            Element(dspp * self.v, dspp * self.w, dspp),
        )

    def __repr__(self):
        from .polyring import poly_str

        core = (
            f"[{poly_str(self.s)}, {poly_str(self.sp)}({poly_str(self.u)}+rho), "
            f"{poly_str(self.spp)}({poly_str(self.v)}+{poly_str(self.w)}rho+omega)]"
        )
        if self.d.is_one():
            return core
        return f"<{poly_str(self.d)}>" + core


def make_ideal(d, s, sp, spp, u, w, v):
    """Normalize raw triangular data into the canonical form."""
    F = s.ctx
    if d.is_zero() or s.is_zero() or sp.is_zero() or spp.is_zero():
        raise DomainError("degenerate triangular data")
    d, s, sp, spp = d.monic(), s.monic(), sp.monic(), spp.monic()
    s_over_sp = exact_div(s, sp)
    s_over_spp = exact_div(s, spp)
    if not g_or(sp, spp).is_one():
        raise InvariantError("triangular diagonal with gcd(sp, spp) != 1")
    u = u % s_over_sp if s_over_sp.deg >= 1 else Poly.zero(F)
    k, w = divmod(w, sp)
    v = v - k * sp * u
    v = v % s_over_spp if s_over_spp.deg >= 1 else Poly.zero(F)
    return Ideal(d=d, s=s, sp=sp, spp=spp, u=u, w=w, v=v)


def unit_ideal(ctx):
    one = Poly.one(ctx)
    z = Poly.zero(ctx)
    return Ideal(one, one, one, one, z, z, z)


def principal_ideal(f):
    """The ideal f * O for a nonzero polynomial f."""
    if f.is_zero():
        raise DomainError("principal ideal of zero")
    one = Poly.one(f.ctx)
    z = Poly.zero(f.ctx)
    return Ideal(f.monic(), one, one, one, z, z, z)


def ideal_norm(J):
    return J.d * J.d * J.d * J.s * J.sp * J.spp


def ideal_contains(J1, J2):
    """True iff J1 is a subset of J2, by the six divisibility/congruence
    conditions on the scaled triangular data."""
    s1, sp1, spp1 = J1.d * J1.s, J1.d * J1.sp, J1.d * J1.spp
    s2, sp2, spp2 = J2.d * J2.s, J2.d * J2.sp, J2.d * J2.spp
    for big, small in ((s1, s2), (sp1, sp2), (spp1, spp2)):
        if not divides(small, big):
            return False
    if not congruent(sp1 * J1.u, sp1 * J2.u, s2):
        return False
    if not congruent(spp1 * J1.w, spp1 * J2.w, sp2):
        return False
    rhs = J2.v + J2.u * (J1.w - J2.w)
    if not congruent(spp1 * J1.v, spp1 * rhs, s2):
        return False
    return True


def divides(a, b):
    if a.is_const():
        return True
    return divmod(b, a)[1].is_zero()


def congruent(a, b, m):
    if m.is_const():
        return True
    return divmod(a - b, m)[1].is_zero()


def ideal_member(J, elem):
    """Exact membership of an order element in the ideal."""
    a, b, c = elem.coords()
    dspp = J.d * J.spp
    q, r = divmod(c, dspp)
    if not r.is_zero():
        return False
    a = a - q * dspp * J.v
    b = b - q * dspp * J.w
    dsp = J.d * J.sp
    q, r = divmod(b, dsp)
    if not r.is_zero():
        return False
    a = a - q * dsp * J.u
    return divmod(a, J.d * J.s)[1].is_zero()


def ideal_validate(J, od):
    """Full structural check: canonical ranges plus closure under
    multiplication by rho and omega.  Raises InvariantError on failure."""
    F = J.ctx
    for p in (J.d, J.s, J.sp, J.spp):
        if not p.is_monic():
            raise InvariantError("non-monic diagonal entry")
    if not divides(J.sp, J.s) or not divides(J.spp, J.s):
        raise InvariantError("diagonal divisibility broken")
    if not g_or(J.sp, J.spp).is_one():
        raise InvariantError("gcd(sp, spp) != 1 violated")
    if J.u.deg >= exact_div(J.s, J.sp).deg and not J.u.is_zero():
        raise InvariantError("u out of canonical range")
    if J.w.deg >= J.sp.deg and not J.w.is_zero():
        raise InvariantError("w out of canonical range")
    if J.v.deg >= exact_div(J.s, J.spp).deg and not J.v.is_zero():
        raise InvariantError("v out of canonical range")
    rho = Element(Poly.zero(F), Poly.one(F), Poly.zero(F))
    omega = Element(Poly.zero(F), Poly.zero(F), Poly.one(F))
    for e in J.basis():
        for g in (rho, omega):
            if not ideal_member(J, element_mul(e, g, od)):
                raise InvariantError("triangular data is not an ideal (closure)")
    return True
