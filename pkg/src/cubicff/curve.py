"""Standard models of cubic curves in characteristic three.

A general cubic S*T^3 + U*T^2 + V*T + W (with SW != 0, not both U = V = 0) is
converted to the two-parameter depressed shape T^3 - A*T + B.  A curve in that
shape is a *standard model* once

  * no irreducible Q admits a shift witness i with Q^2 | A and
    Q^3 | (i^3 - i*A + B), and
  * exactly one of the degree criteria holds:
      (wild)  3 does not divide deg B and 2 deg B > 3 deg A, or
      (tame)  2 deg B <= 3 deg A.

The transformations used, with their root relations:
  depress, U = 0:        y' = S y                   (A, B) = (-S V, S^2 W)
  depress, U != 0:       y' = N / (U y - V),        N = S V^3 - U^2 V^2 + U^3 W,
                         (A, B) = (-N U^2, S N^2)
  singular removal:      y' = (y - i)/Q             (A, B) = (A/Q^2, (i^3 - iA + B)/Q^3)
  degree reduction:      y' = y + c x^n, c^3 = lc(B), deg B = 3n
                         B' = B - c^3 x^(3n) + A c x^n

The U != 0 depression (eliminate the linear term by a shift, then take the
monic integral reciprocal) is derived from scratch here; it is fuzz-checked by
verifying the stated root relation as a polynomial identity.
"""

from dataclasses import dataclass

from .errors import DomainError, InvariantError
from .polyring import (
    Poly,
    cube_root_mod,
    exact_div,
    factor,
    g_or,
    poly_sqrt,
    valuation,
)


@dataclass(frozen=True)
class GeneralCubic:
    S: Poly
    U: Poly
    V: Poly
    W: Poly

    def __post_init__(self):
        if self.S.is_zero() or self.W.is_zero():
            raise DomainError("general cubic needs S != 0 and W != 0")
        if self.U.is_zero() and self.V.is_zero():
            raise DomainError(
                "U = V = 0 gives a purely inseparable (degenerate) curve"
            )

    @property
    def ctx(self):
        return self.S.ctx


@dataclass(frozen=True)
class Curve:
    """T^3 - A*T + B over F_q[x]; B != 0 (else T divides), A != 0 (else
    inseparable)."""

    A: Poly
    B: Poly

    def __post_init__(self):
        if self.B.is_zero():
            raise DomainError("B = 0 makes the cubic reducible")
        if self.A.is_zero():
            raise DomainError("A = 0 gives a purely inseparable curve")

    @property
    def ctx(self):
        return self.A.ctx

    def criterion_wild(self):
        """3 does not divide deg B and 2 deg B > 3 deg A."""
        return self.B.deg % 3 != 0 and 2 * self.B.deg > 3 * self.A.deg

    def criterion_tame(self):
        return 2 * self.B.deg <= 3 * self.A.deg


def depress(g):
    """Convert a general cubic to T^3 - A*T + B; returns (Curve, record)."""
    F = g.ctx
    if g.U.is_zero():
        A = -(g.S * g.V)
        B = g.S * g.S * g.W
        return Curve(A, B), ("depress_u0", g.S)
    n = g.S * g.V * g.V * g.V - g.U * g.U * g.V * g.V + g.U * g.U * g.U * g.W
    if n.is_zero():
        raise DomainError("degenerate general cubic: the shifted curve is reducible")
    A = -(n * g.U * g.U)
    B = g.S * n * n
    return Curve(A, B), ("depress", n)


def singular_removal_candidates(c):
    """Irreducible P with P^2 | A, those dividing the singularity gcd first."""
    if c.A.deg < 2:
        return []
    d = detect_singularity(c)[0]
    d_first = []
    rest = []
    for p, e in factor(c.A):
        if e >= 2:
            if not (d % p).is_zero():
                rest.append(p)
            else:
                d_first.append(p)
    return d_first + rest


def remove_singular_factor(c):
    """One singular-factor removal step, or None when no factor is removable.

    For each candidate P the only shift residue that matters is the cube root
    i0 of -B mod P; the removal applies when i0^3 - i0*A + B = 0 mod P^3.
    """
    F = c.ctx
    for P in singular_removal_candidates(c):
        i0 = cube_root_mod(-c.B, P)
        val = i0 * i0 * i0 - i0 * c.A + c.B
        if val.is_zero() or valuation(val, P) >= 3:
            newA = exact_div(c.A, P * P)
            newB = exact_div(val, P * P * P)
            if newB.is_zero():
                raise DomainError("curve is reducible (B vanished in removal)")
            return Curve(newA, newB), P, i0
    return None


def reduce_b_degree(c):
    """Drain leading cubes from B while 3 | deg B and 2 deg B > 3 deg A."""
    F = c.ctx
    A, B = c.A, c.B
    records = []
    while B.deg >= 0 and B.deg % 3 == 0 and 2 * B.deg > 3 * A.deg:
        n = B.deg // 3
        lead = B.lc()
        croot = F.cube_root(lead)
        B = B - Poly.monomial(F, 3 * n, lead) + A * Poly.monomial(F, n, croot)
        records.append(("frobshift", Poly.const(F, croot), n))
        if B.is_zero():
            raise DomainError("curve is reducible (B reduced to zero)")
    return Curve(A, B), records


def standardize(obj):
    """Full conversion to a standard model; returns (Curve, transcript).

    The transcript is the ordered list of transformation records:
    ("depress_u0", S) | ("depress", N) | ("remove", Q, i) |
    ("frobshift", c, n).
    """
    transcript = []
    if isinstance(obj, GeneralCubic):
        c, rec = depress(obj)
        transcript.append(rec)
    else:
        c = obj
    while True:
        step = remove_singular_factor(c)
        if step is not None:
            c, Q, i = step
            transcript.append(("remove", Q, i))
            continue
        c2, recs = reduce_b_degree(c)
        if recs:
            transcript.extend(recs)
            c = c2
            continue
        break
    if c.criterion_wild() == c.criterion_tame():
        raise InvariantError("standard form must satisfy exactly one criterion")
    if c.criterion_tame():
        _reject_polynomial_root(c)
    return c, transcript


def _reject_polynomial_root(c):
    """Reducibility check: T^3 - A T + B has a root r in F_q[x] only when the
    tame criterion holds, and then r = u*d with d | B monic, 2 deg d <= deg A,
    and u a scalar."""
    from .polyring import poly_roots

    F = c.ctx
    bound = c.A.deg // 2
    divisors = [Poly.one(F)]
    for p, e in factor(c.B):
        new = []
        for d in divisors:
            for pk in _powers(p, e):
                nd = d * pk
                if nd.deg <= bound:
                    new.append(nd)
        divisors = new
        if len(divisors) > 4096:
            raise InvariantError("root search blew up; unexpected input shape")
    for d in divisors:
        # r = u*d solves the cubic iff u^3 d^3 - u A d + B = 0; pin u from the
        # top coefficient index where anything survives, then verify fully.
        d3 = d * d * d
        ad = c.A * d
        top = max(d3.deg, ad.deg, c.B.deg)
        for j in range(int(top), -1, -1):
            c3, c1, c0 = d3.coeff(j), ad.coeff(j), c.B.coeff(j)
            if c3 or c1:
                uc = Poly(F, (c0, F.neg(c1), 0, c3))
                for u in poly_roots(uc):
                    if u == 0:
                        continue
                    r = d.scale(u)
                    if (r * r * r - c.A * r + c.B).is_zero():
                        raise DomainError(
                            "cubic is reducible: it has a polynomial root"
                        )
                break


def _powers(p, e):
    out = [Poly.one(p.ctx)]
    acc = Poly.one(p.ctx)
    for _ in range(e):
        acc = acc * p
        out.append(acc)
    return out


def detect_singularity(c):
    """(d, nonsingular) with d = monic gcd(A, A'^3 B + B'^3)."""
    ap = c.A.derivative()
    bp = c.B.derivative()
    rhs = ap * ap * ap * c.B + bp * bp * bp
    d = g_or(c.A, rhs)
    if d.is_zero():
        raise InvariantError("singularity gcd degenerated")
    return d, d.deg == 0


def is_artin_schreier(c):
    """Galois cubic test: the extension is Artin-Schreier iff A is a square."""
    return poly_sqrt(c.A) is not None
