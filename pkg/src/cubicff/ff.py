"""Arithmetic in GF(3^m).

Elements are vectors of m trits (coefficients of powers of the generator
alpha), packed little-endian into a single integer code in base 3: the code
sum(d_k * 3^k) stands for sum(d_k * alpha^k).  All digits live in {0, 1, 2};
signed notation (-1) is normalised to 2 on input.  The zero element is code 0
and the one element is code 1, independent of m.

A context (`Fq`) owns the modulus and, for small fields, full lookup tables so
that the polynomial layer above runs on plain integer codes.  Contexts are
immutable after construction and safe to share across threads.
"""

from .errors import DomainError, InvariantError

# Full add/mul/inv tables are built when q <= 3**TABLE_EXP.  Above that,
# arithmetic unpacks digit vectors per operation (only the one-shot large
# fields pay this).
TABLE_EXP = 5

# --- GF(3)[t] helpers on plain digit lists, used only for modulus checks ---


def _p3_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _p3_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % 3
    return _p3_trim(out)


def _p3_mod(f, g):
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, 3)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        c = (f[-1] * inv_lead) % 3
        for j, b in enumerate(g):
            f[shift + j] = (f[shift + j] - c * b) % 3
        _p3_trim(f)
    return f


def _p3_gcd(f, g):
    f, g = list(f), list(g)
    while g:
        f, g = g, _p3_mod(f, g)
    return f


def _p3_modexp_x(e, modulus):
    """x^e mod modulus over GF(3), square-and-multiply."""
    base = _p3_mod([0, 1], modulus)
    acc = [1]
    while e:
        if e & 1:
            acc = _p3_mod(_p3_mul(acc, base), modulus)
        base = _p3_mod(_p3_mul(base, base), modulus)
        e >>= 1
    return acc


def _p3_is_irreducible(modulus):
    """Rabin test: x^(3^m) == x mod f and gcd(x^(3^(m/p)) - x, f) = 1."""
    m = len(modulus) - 1
    if m < 1:
        return False
    xq = _p3_modexp_x(3**m, modulus)
    x = _p3_mod([0, 1], modulus)
    if xq != x:
        return False
    for p in _prime_divisors(m):
        h = _p3_modexp_x(3 ** (m // p), modulus)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % 3
        _p3_trim(diff)
        if len(_p3_gcd(diff, modulus)) != 1:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Fq:
    """The field GF(3^m) = GF(3)[alpha]/(modulus).

    `modulus` is a list of m+1 digits, constant term first, leading digit 1.
    Irreducibility is verified at construction; a reducible modulus is
    rejected rather than trusted.
    """

    def __init__(self, m, modulus):
        modulus = [d % 3 for d in modulus]
        if m < 1 or len(modulus) != m + 1:
            raise DomainError("modulus must have m+1 digits")
        if modulus[-1] != 1:
            raise DomainError("modulus must be monic")
        if not _p3_is_irreducible(modulus):
            raise DomainError("modulus is reducible over GF(3)")
        self.m = m
        self.q = 3**m
        self.modulus = tuple(modulus)
        self.zero = 0
        self.one = 1
        # reduction table: alpha^k as digit vectors for k in [m, 2m-2];
        # alpha^m = -sum(modulus[k] alpha^k) since the modulus is monic
        base = [(-modulus[k]) % 3 for k in range(m)]
        red = [tuple(base)]
        cur = base
        for _ in range(m - 2):
            nxt = [0] + cur[: m - 1]
            top = cur[m - 1]
            if top:
                nxt = [(nxt[k] + top * base[k]) % 3 for k in range(m)]
            red.append(tuple(nxt))
            cur = nxt
        self._red = red
        self._tables = None
        self._dec = {}
        if self.q <= 3**TABLE_EXP:
            self._build_tables()

    # --- packing ---

    def encode(self, digits):
        code = 0
        p = 1
        for d in digits:
            code += (d % 3) * p
            p *= 3
        return code

    def decode(self, code):
        cached = self._dec.get(code)
        if cached is not None:
            return cached
        out = []
        c = code
        for _ in range(self.m):
            out.append(c % 3)
            c //= 3
        out = tuple(out)
        self._dec[code] = out
        return out

    # --- raw arithmetic on digit vectors (large-field path) ---

    def _add_codes(self, a, b):
        da, db = self.decode(a), self.decode(b)
        return self.encode((x + y) % 3 for x, y in zip(da, db))

    def _neg_code(self, a):
        return self.encode((-x) % 3 for x in self.decode(a))

    def _mul_codes(self, a, b):
        if a == 0 or b == 0:
            return 0
        m = self.m
        da, db = self.decode(a), self.decode(b)
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] = (conv[i + j] + x * y) % 3
        out = conv[:m]
        for k in range(m, 2 * m - 1):
            c = conv[k]
            if c:
                row = self._red[k - m]
                for t in range(m):
                    out[t] = (out[t] + c * row[t]) % 3
        return self.encode(out)

    def _pow_code(self, a, e):
        if e == 0:
            return 1
        acc = 1
        base = a
        while e:
            if e & 1:
                acc = self._mul_codes(acc, base)
            base = self._mul_codes(base, base)
            e >>= 1
        return acc

    def _build_tables(self):
        q = self.q
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                s = self._add_codes(a, b)
                add[a][b] = s
                add[b][a] = s
                p = self._mul_codes(a, b)
                mul[a][b] = p
                mul[b][a] = p
        neg = [self._neg_code(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._pow_code(a, q - 2)
        croot = [self._pow_code(a, 3 ** (self.m - 1)) for a in range(q)]
        self._tables = (add, mul, neg, inv, croot)

    # --- public code-level ops ---

    def add(self, a, b):
        if self._tables:
            return self._tables[0][a][b]
        return self._add_codes(a, b)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self._tables:
            return self._tables[2][a]
        return self._neg_code(a)

    def mul(self, a, b):
        if self._tables:
            return self._tables[1][a][b]
        return self._mul_codes(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self._tables:
            return self._tables[3][a]
        return self._pow_code(a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        if e == 0:
            return 1
        if self._tables:
            acc, base = 1, a
            mul = self._tables[1]
            while e:
                if e & 1:
                    acc = mul[acc][base]
                base = mul[base][base]
                e >>= 1
            return acc
        return self._pow_code(a, e)

    def cube_root(self, a):
        """Inverse Frobenius: the unique b with b^3 = a (GF(3^m) is perfect)."""
        if self._tables:
            return self._tables[4][a]
        return self._pow_code(a, 3 ** (self.m - 1))

    def is_square(self, a):
        if a == 0:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def sqrt(self, a):
        """A square root of a, or None if a is a non-square (Tonelli-Shanks)."""
        if a == 0:
            return 0
        if not self.is_square(a):
            return None
        q = self.q
        if q % 4 == 3:
            return self.pow(a, (q + 1) // 4)
        # q = 1 mod 4: Tonelli-Shanks
        s, t = 0, q - 1
        while t % 2 == 0:
            s += 1
            t //= 2
        n = 2
        while self.is_square(n):
            n += 1
            if n >= q:  # pragma: no cover - every field has a non-square
                raise InvariantError("no non-square found")
        z = self.pow(n, t)
        x = self.pow(a, (t + 1) // 2)
        b = self.pow(a, t)
        m_ord = s
        while b != 1:
            k = 0
            bb = b
            while bb != 1:
                bb = self.mul(bb, bb)
                k += 1
            g = z
            for _ in range(m_ord - k - 1):
                g = self.mul(g, g)
            x = self.mul(x, g)
            z = self.mul(g, g)
            b = self.mul(b, z)
            m_ord = k
        return x

    def element(self, spec):
        """Build a FieldElement from digits (iterable) or an integer code."""
        if isinstance(spec, FieldElement):
            if spec.ctx is not self:
                raise ValueError("field context mismatch")
            return spec
        if isinstance(spec, int):
            return FieldElement(self, spec % 3 if self.m == 1 else spec)
        return FieldElement(self, self.encode(spec))

    def from_int(self, n):
        """The prime-field constant n (image of the integer n)."""
        return FieldElement(self, n % 3)

    def __repr__(self):
        return f"Fq(3^{self.m})"

    def __eq__(self, other):
        return (
            isinstance(other, Fq)
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.m, self.modulus))


GF3 = Fq(1, [0, 1])  # handy shared GF(3): modulus is just x (alpha = 0)


class FieldElement:
    """A value in some Fq; thin immutable wrapper over an integer code."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx, code):
        self.ctx = ctx
        self.code = code

    @property
    def coords(self):
        return self.ctx.decode(self.code)

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.ctx != self.ctx:
            raise ValueError("field context mismatch")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.add(self.code, other.code))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.sub(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.mul(self.code, other.code))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.ctx, self.ctx.mul(self.code, self.ctx.inv(other.code)))

    def __pow__(self, e):
        return FieldElement(self.ctx, self.ctx.pow(self.code, e))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.code))

    def cube_root(self):
        return FieldElement(self.ctx, self.ctx.cube_root(self.code))

    def is_zero(self):
        return self.code == 0

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and other.ctx == self.ctx
            and other.code == self.code
        )

    def __hash__(self):
        return hash((self.ctx, self.code))

    def __repr__(self):
        if self.ctx.m == 1:
            return str(self.code)
        return "(" + ",".join(str(d) for d in self.coords) + ")"
