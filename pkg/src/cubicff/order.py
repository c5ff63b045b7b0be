"""The maximal order of a standard-form cubic function field.

For a standard model T^3 - A*T + B the maximal order has the triangular basis
{1, rho, omega} with rho = y - i and omega = (y^2 + i*y + i^2 - A)/I, where
the index I = ind(y) is monic squarefree, i is the shift determined modulo I,
and

    A = E*I,    F*I^2 = i^3 - i*A + B,    Delta = A^3 / I^2.

Products of basis elements reduce through the three identities

    rho^2 = I*omega + A,   omega^2 = -E*omega - F*rho,   rho*omega = -F*I,

which drive all element and ideal arithmetic downstream.  Element norms are
computed as the determinant of the multiplication-by-alpha matrix in this
basis; expanding that determinant (char 3, so the a*b*c cross term vanishes)
gives

    N(a + b*rho + c*omega) = a^3 - a^2*c*E - a*b^2*A - b^3*F*I^2
                             + b^2*c*A*E - b*c^2*A*F - b*c^2*E*F*I + c^3*F^2*I.

In particular N(rho) = -F*I^2 and N(omega) = F^2*I, matching the minimal
polynomials rho^3 - A*rho + F*I^2 = 0 and omega^3 + E*omega^2 - F^2*I = 0.

A curve is *distinguished-friendly* (`distinguished_ok`) when the wild
criterion holds and 3 does not divide deg(F*I^2); then the norm degree obeys
deg N = max(3 deg a, 3 deg b + deg FI^2, 3 deg c + deg F^2I) with the three
offsets in distinct residue classes mod 3, and every ideal class contains a
unique distinguished representative.
"""

from dataclasses import dataclass

from .errors import ApplicabilityError, DomainError, InvariantError
from .polyring import NEG_INF, Poly, crt, cube_root_mod, exact_div, factor, valuation
from .curve import Curve, detect_singularity


@dataclass(frozen=True)
class OrderData:
    A: Poly
    B: Poly
    i: Poly
    I: Poly
    E: Poly
    F: Poly
    delta: Poly
    genus: int
    infinite: "SplittingType"  # noqa: F821 - see places.SplittingType
    distinguished_ok: bool

    @property
    def ctx(self):
        return self.A.ctx

    @property
    def FI(self):
        return self.F * self.I

    @property
    def FI2(self):
        return self.F * self.I * self.I

    @property
    def F2I(self):
        return self.F * self.F * self.I

    @property
    def deg_fi2(self):
        return self.FI2.deg

    @property
    def deg_f2i(self):
        return self.F2I.deg

    def curve(self):
        return Curve(self.A, self.B)


@dataclass(frozen=True)
class Element:
    """a + b*rho + c*omega with polynomial coordinates."""

    a: Poly
    b: Poly
    c: Poly

    def coords(self):
        return (self.a, self.b, self.c)

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero() and self.c.is_zero()

    def __add__(self, other):
        return Element(self.a + other.a, self.b + other.b, self.c + other.c)

    def __sub__(self, other):
        return Element(self.a - other.a, self.b - other.b, self.c - other.c)

    def scale(self, poly):
        return Element(self.a * poly, self.b * poly, self.c * poly)


def element_one(ctx):
    return Element(Poly.one(ctx), Poly.zero(ctx), Poly.zero(ctx))


def element_mul(u, v, od):
    """Product in the order via the basis identities."""
    a1, b1, c1 = u.coords()
    a2, b2, c2 = v.coords()
    FI = od.FI
    a = a1 * a2 + b1 * b2 * od.A - (b1 * c2 + b2 * c1) * FI
    b = a1 * b2 + a2 * b1 - c1 * c2 * od.F
    c = a1 * c2 + a2 * c1 + b1 * b2 * od.I - c1 * c2 * od.E
    return Element(a, b, c)


def element_norm(u, od):
    """Determinant of multiplication by u in the basis (1, rho, omega)."""
    rho = Element(Poly.zero(od.ctx), Poly.one(od.ctx), Poly.zero(od.ctx))
    omega = Element(Poly.zero(od.ctx), Poly.zero(od.ctx), Poly.one(od.ctx))
    c0 = u.coords()
    c1 = element_mul(u, rho, od).coords()
    c2 = element_mul(u, omega, od).coords()
    return (
        c0[0] * (c1[1] * c2[2] - c1[2] * c2[1])
        - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
        + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1])
    )


def norm_weight(poly, position, od):
    """Weight of one coordinate: 3*deg + offset; -inf for zero coordinates."""
    if poly.is_zero():
        return NEG_INF
    return 3 * poly.deg + (0, od.deg_fi2, od.deg_f2i)[position]


def norm_degree_parts(u, od):
    """(3 deg a, 3 deg b + deg FI^2, 3 deg c + deg F^2I); needs the maximum
    rule, hence distinguished_ok."""
    if not od.distinguished_ok:
        raise ApplicabilityError(
            "norm degree decomposition requires the distinguished-ideal setting"
        )
    return tuple(norm_weight(p, k, od) for k, p in enumerate(u.coords()))


def compute_order_data(c):
    """Derive (i, I, E, F, Delta, genus, infinite signature) for a standard
    model.

    A candidate prime P (irreducible factor of gcd(A, A'^3 B + B'^3)) divides
    the index iff the cube root i0 of -B mod P satisfies
    v_P(i0^3 - i0*A + B) >= 2; the shift i is the CRT patch of the i0, reduced
    mod I.
    """
    from .places import split_infinite  # local: places builds on this module

    _assert_standard(c)
    F = c.ctx
    d, _ = detect_singularity(c)
    index_primes = []
    shifts = []
    if d.deg >= 1:
        for P, _e in factor(d):
            i0 = cube_root_mod(-c.B, P)
            val = i0 * i0 * i0 - i0 * c.A + c.B
            if val.is_zero():
                raise DomainError("cubic is reducible (i0 is a root)")
            if valuation(val, P) >= 2:
                index_primes.append(P)
                shifts.append(i0 % P)
    if index_primes:
        I = index_primes[0]
        for P in index_primes[1:]:
            I = I * P
        ish = crt(list(zip(shifts, index_primes))) % I
    else:
        I = Poly.one(F)
        ish = Poly.zero(F)
    E = exact_div(c.A, I)
    fi2 = ish * ish * ish - ish * c.A + c.B
    if fi2.is_zero():
        raise DomainError("cubic is reducible (shift is a root)")
    Ff = exact_div(fi2, I * I)
    delta = exact_div(c.A * c.A * c.A, I * I)
    infinite = split_infinite(c)
    g = _genus_from(c, I, infinite)
    dist = c.criterion_wild() and fi2.deg % 3 != 0
    return OrderData(
        A=c.A,
        B=c.B,
        i=ish,
        I=I,
        E=E,
        F=Ff,
        delta=delta,
        genus=g,
        infinite=infinite,
        distinguished_ok=dist,
    )


def _genus_from(c, I, infinite):
    from .places import SplitTag

    if infinite.tag is SplitTag.TOTALLY_RAMIFIED:
        g = c.B.deg - I.deg - 1
    else:
        dinf = c.A.deg % 2
        num = 3 * c.A.deg - 2 * I.deg + dinf - 4
        if num % 2:
            raise InvariantError("genus formula produced a half-integer")
        g = num // 2
    if g < 0:
        raise InvariantError("negative genus; upstream invariant broken")
    return g


def genus(od):
    return od.genus


def _assert_standard(c):
    if c.criterion_wild() == c.criterion_tame():
        raise DomainError("curve is not in standard form (criteria)")
    from .curve import remove_singular_factor

    if remove_singular_factor(c) is not None:
        raise DomainError("curve is not in standard form (removable factor)")
