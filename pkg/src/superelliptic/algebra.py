"""Exact arithmetic substrate: prime fields, rationals, dense univariate
polynomials, homogeneous binary forms, and the covariant operations
(transvectant, linear substitution, discriminant) everything else consumes.

Scalars are either ``fractions.Fraction`` (field ``QQ``) or ``GFElement``
(field ``GF(p)``, p an odd prime).  All values are immutable; every
operation is a pure function, so values can be shared freely.
"""

from fractions import Fraction
from math import factorial, gcd, isqrt

from .errors import CharacteristicError, DomainError

# ---------------------------------------------------------------------------
# integer helpers


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond anything we factor."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n):
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")  # pragma: no cover


def factorize(n):
    """Prime factorization of n >= 1 as a dict {p: exponent}."""
    if n < 1:
        raise DomainError("factorize expects a positive integer")
    out = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = m
        while d == m:
            d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def valuation(n, p):
    """Largest e with p^e | n; n must be nonzero."""
    if n == 0:
        raise DomainError("valuation of 0 is infinite")
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


def integer_nth_root(n, k):
    """(r, exact) with r = floor(n^(1/k)) for n >= 0."""
    if n < 0:
        raise DomainError("negative radicand")
    if n == 0:
        return 0, True
    if k == 1:
        return n, True
    if k == 2:
        r = isqrt(n)
        return r, r * r == n
    r = int(round(n ** (1.0 / k)))
    while r > 0 and r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r, r**k == n


def fraction_nth_roots(q, k):
    """All rational k-th roots of a Fraction q, as a list."""
    q = Fraction(q)
    if q == 0:
        return [Fraction(0)]
    neg = q < 0
    if neg and k % 2 == 0:
        return []
    rn, okn = integer_nth_root(abs(q.numerator), k)
    rd, okd = integer_nth_root(q.denominator, k)
    if not (okn and okd):
        return []
    r = Fraction(rn, rd)
    if neg:
        return [-r]
    return [r, -r] if k % 2 == 0 else [r]


def ext_gcd(a, b):
    """(g, x, y) with x*a + y*b = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def bezout_combination(ws, k):
    """Integer coefficients c_i with sum c_i * ws[i] = k = gcd(ws)."""
    g = ws[0]
    coeffs = [1] + [0] * (len(ws) - 1)
    for i in range(1, len(ws)):
        g2, x, y = ext_gcd(g, ws[i])
        coeffs = [c * x for c in coeffs]
        coeffs[i] = y
        g = g2
    assert g == k
    return coeffs


# ---------------------------------------------------------------------------
# fields


class GFElement:
    """Element of GF(p).  Residues are kept in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise DomainError("mixed prime fields")
            return other
        if isinstance(other, int):
            return GFElement(other, self.p)
        if isinstance(other, Fraction):
            if other.denominator % self.p == 0:
                raise CharacteristicError(
                    f"denominator {other.denominator} not invertible mod {self.p}"
                )
            return GFElement(
                other.numerator * pow(other.denominator, -1, self.p), self.p
            )
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GFElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GFElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GFElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else GFElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return GFElement(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else o / self

    def __pow__(self, e):
        if e < 0:
            if self.value == 0:
                raise ZeroDivisionError("inverse of zero in GF(p)")
            return GFElement(pow(self.value, e, self.p), self.p)
        return GFElement(pow(self.value, e, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, Fraction):
            return other.denominator % self.p != 0 and self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF({self.p})({self.value})"


class RationalField:
    """The rationals, with Fraction as the element type."""

    characteristic = 0

    def of(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, (int, str)):
            return Fraction(v)
        raise DomainError(f"cannot coerce {v!r} into QQ")

    def from_fraction(self, q):
        return Fraction(q)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for an odd prime p."""

    def __init__(self, p):
        if not is_prime(p) or p == 2:
            raise DomainError(f"GF({p}): p must be an odd prime")
        self.p = p

    @property
    def characteristic(self):
        return self.p

    def of(self, v):
        if isinstance(v, GFElement):
            if v.p != self.p:
                raise DomainError("mixed prime fields")
            return v
        if isinstance(v, int):
            return GFElement(v, self.p)
        if isinstance(v, str):
            return self.from_fraction(Fraction(v))
        if isinstance(v, Fraction):
            return self.from_fraction(v)
        raise DomainError(f"cannot coerce {v!r} into GF({self.p})")

    def from_fraction(self, q):
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise CharacteristicError(
                f"denominator {q.denominator} not invertible mod {self.p}"
            )
        return GFElement(q.numerator * pow(q.denominator, -1, self.p), self.p)

    @property
    def zero(self):
        return GFElement(0, self.p)

    @property
    def one(self):
        return GFElement(1, self.p)

    def elements(self):
        return (GFElement(v, self.p) for v in range(self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p):
    return PrimeField(p)


# ---------------------------------------------------------------------------
# dense univariate polynomials


def _trim(coeffs):
    n = len(coeffs)
    while n > 0 and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense univariate polynomial; coefficients ascending by degree."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = _trim([field.of(c) for c in coeffs])

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @property
    def degree(self):
        """Degree, with deg 0 = -1 by convention."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self):
        if self.is_zero:
            raise DomainError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.field, [self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly.zero(self.field)
            out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(self.field, out)
        c = self.field.of(other)
        return Poly(self.field, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, e):
        out = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise DomainError("mixed coefficient fields")
            return other
        return Poly(self.field, [other])

    def divmod(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        r = list(self.coeffs)
        d, lc = other.degree, other.lc
        if len(r) - 1 < d:
            return Poly.zero(field), self
        q = [field.zero] * (len(r) - d)
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if c:
                c = c / lc
                q[k - d] = c
                for i in range(d + 1):
                    r[k - d + i] = r[k - d + i] - c * other.coeffs[i]
        return Poly(field, q), Poly(field, r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero:
            raise DomainError("division is not exact")
        return q

    def monic(self):
        if self.is_zero:
            return self
        inv = self.field.one / self.lc
        return Poly(self.field, [c * inv for c in self.coeffs])

    def gcd(self, other):
        a, b = self, self._coerce(other)
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    def xgcd(self, other):
        """(g, s, t) with s*self + t*other = g, g monic (or zero)."""
        field = self.field
        a, b = self, self._coerce(other)
        s0, s1 = Poly.one(field), Poly.zero(field)
        t0, t1 = Poly.zero(field), Poly.one(field)
        while not b.is_zero:
            q, r = a.divmod(b)
            a, b = b, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if a.is_zero:
            return a, s0, t0
        inv = field.one / a.lc
        return a.monic(), s0 * inv, t0 * inv

    def derivative(self):
        return Poly(
            self.field, [i * self.field.of(c) for i, c in enumerate(self.coeffs)][1:]
        )

    def __call__(self, x):
        acc = self.field.zero
        x = self.field.of(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_compose(self, scale):
        """p(scale * x) for a scalar."""
        s = self.field.of(scale)
        out, power = [], self.field.one
        for c in self.coeffs:
            out.append(c * power)
            power = power * s
        return Poly(self.field, out)

    def is_squarefree(self):
        return self.gcd(self.derivative()).degree <= 0

    def squarefree_multiplicities(self):
        """Maximal root multiplicity over the algebraic closure.

        Valid in characteristic 0 or p > deg.  Returns 0 for constants.
        """
        if self.degree <= 0:
            return 0
        p, m = self, 0
        g = self.gcd(self.derivative())
        while p.degree > 0:
            m += 1
            if g.degree == 0:
                break
            p, g = g, g.gcd(g.derivative())
        return m

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        terms = [
            f"{c}*x^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs) if c
        ]
        return "Poly(" + " + ".join(terms) + ")"


def lagrange_interpolate(field, xs, ys):
    """The unique polynomial of degree < len(xs) through the given points."""
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation needs distinct x-coordinates")
    out = Poly.zero(field)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = Poly.one(field)
        den = field.one
        for j, xj in enumerate(xs):
            if i == j:
                continue
            num = num * Poly(field, [-xj, 1])
            den = den * (xi - xj)
        out = out + num * (yi / den)
    return out


def resultant(f, g):
    """Resultant of two polynomials over their common field."""
    if f.field != g.field:
        raise DomainError("mixed coefficient fields")
    field = f.field
    if f.is_zero or g.is_zero:
        return field.zero
    acc = field.one
    a, b = f, g
    while True:
        da, db = a.degree, b.degree
        if da == 0:
            return acc * a.coeffs[0] ** db
        if db == 0:
            return acc * b.coeffs[0] ** da
        if da < db:
            if (da * db) % 2 == 1:
                acc = -acc
            a, b = b, a
            continue
        r = a % b
        if r.is_zero:
            return field.zero
        if (da * db) % 2 == 1:
            acc = -acc
        acc = acc * b.lc ** (da - r.degree)
        a, b = b, r


# ---------------------------------------------------------------------------
# binary forms


class Mat2:
    """2x2 matrix with nonzero determinant, acting on binary forms."""

    __slots__ = ("field", "a", "b", "c", "d")

    def __init__(self, field, a, b, c, d):
        self.field = field
        self.a, self.b = field.of(a), field.of(b)
        self.c, self.d = field.of(c), field.of(d)
        if not self.det:
            raise DomainError("singular matrix")

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def __mul__(self, other):
        if not isinstance(other, Mat2) or other.field != self.field:
            raise DomainError("can only compose Mat2 over the same field")
        return Mat2(
            self.field,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __repr__(self):
        return f"Mat2[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


class BinaryForm:
    """Homogeneous form of declared degree d; coeffs[i] goes with X^(d-i) Y^i."""

    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree, coeffs):
        coeffs = [field.of(c) for c in coeffs]
        if len(coeffs) != degree + 1:
            raise DomainError(f"degree {degree} form needs {degree + 1} coefficients")
        if not any(coeffs):
            raise DomainError("the zero form is not a valid BinaryForm")
        self.field = field
        self.degree = degree
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_poly(cls, poly, degree=None):
        """Homogenize f(x) to F(X, Y) = Y^d f(X/Y) of declared degree d."""
        d = poly.degree if degree is None else degree
        if poly.degree > d:
            raise DomainError("declared degree below polynomial degree")
        return cls(
            poly.field, d, [poly[d - i] for i in range(d + 1)]
        )

    def to_poly(self):
        """Dehomogenize: f(x) = F(x, 1)."""
        return Poly(self.field, list(reversed(self.coeffs)))

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.field == other.field
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.degree, self.coeffs))

    def __add__(self, other):
        if self.degree != other.degree:
            raise DomainError("can only add forms of equal degree")
        return BinaryForm(
            self.field,
            self.degree,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
        )

    def scale(self, c):
        return BinaryForm(self.field, self.degree, [self.field.of(c) * a for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        d = self.degree + other.degree
        out = [self.field.zero] * (d + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return BinaryForm(self.field, d, out)

    def diff_xy(self, i, j):
        """Mixed partial derivative d^(i+j) f / dX^i dY^j, exact."""
        d = self.degree
        if i + j > d:
            return None
        nd = d - i - j
        out = []
        for k in range(nd + 1):
            # source monomial X^(d-(k+j)) Y^(k+j): X-exponent d-k-j, Y-exponent k+j
            c = self.coeffs[k + j]
            xe, ye = d - k - j, k + j
            m = 1
            for t in range(i):
                m *= xe - t
            for t in range(j):
                m *= ye - t
            out.append(c * m)
        if not any(out):
            return None
        return BinaryForm(self.field, nd, out)

    def substitute(self, M):
        """f(aX + bY, cX + dY) for M = [[a, b], [c, d]]."""
        if not isinstance(M, Mat2) or M.field != self.field:
            raise DomainError("substitute needs a Mat2 over the same field")
        field = self.field
        d = self.degree

        # work on coefficient lists indexed by Y-exponent
        def mul(u, v):
            out = [field.zero] * (len(u) + len(v) - 1)
            for i, a in enumerate(u):
                if not a:
                    continue
                for j, b in enumerate(v):
                    out[i + j] = out[i + j] + a * b
            return out

        lin1 = [M.a, M.b]  # aX + bY
        lin2 = [M.c, M.d]  # cX + dY
        # powers of the two linear forms
        pow1 = [[field.one]]
        pow2 = [[field.one]]
        for _ in range(d):
            pow1.append(mul(pow1[-1], lin1))
            pow2.append(mul(pow2[-1], lin2))
        acc = [field.zero] * (d + 1)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            term = mul(pow1[d - i], pow2[i])
            for k, t in enumerate(term):
                acc[k] = acc[k] + c * t
        return BinaryForm(field, d, acc)

    def __repr__(self):
        d = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*X^{d - i}*Y^{i}")
        return "BinaryForm(" + " + ".join(parts) + ")"


def transvectant(f, g, r):
    """r-th transvectant (f, g)^r of two binary forms.

    Uses the factorial prefactor (m-r)!(n-r)!/(n! m!) computed in QQ and
    mapped into the coefficient field; degree-0 results come back as a
    scalar.
    """
    if not isinstance(f, BinaryForm) or not isinstance(g, BinaryForm):
        raise DomainError("transvectant expects binary forms")
    if f.field != g.field:
        raise DomainError("mixed coefficient fields")
    n, m = f.degree, g.degree
    if r < 0 or r > min(n, m):
        raise DomainError(f"transvection order {r} exceeds min degree")
    field = f.field
    pref = Fraction(factorial(m - r) * factorial(n - r), factorial(n) * factorial(m))
    out_deg = n + m - 2 * r
    acc = [field.zero] * (out_deg + 1)
    for k in range(r + 1):
        df = f.diff_xy(r - k, k)
        dg = g.diff_xy(k, r - k)
        if df is None or dg is None:
            continue
        sign = -1 if k % 2 else 1
        c = sign * _binom(r, k)
        prod = df * dg
        for idx, v in enumerate(prod.coeffs):
            acc[idx] = acc[idx] + v * c
    scale = field.from_fraction(pref)  # CharacteristicError if p divides denom
    acc = [a * scale for a in acc]
    if out_deg == 0:
        return acc[0]
    if not any(acc):
        # transvectants can vanish identically; keep form semantics by
        # returning the scalar zero in that case as well
        return field.zero
    return BinaryForm(field, out_deg, acc)


def _binom(n, k):
    return factorial(n) // (factorial(k) * factorial(n - k))


def discriminant(form):
    """Projective discriminant, normalized so disc(X^2 - Y^2) = 4.

    Equals lc^(2d-2) * prod_(i<j) (root_i - root_j)^2 and scales by
    (det M)^(d(d-1)) under substitution.
    """
    if form.degree < 2:
        raise DomainError("discriminant needs degree >= 2")
    field = form.field
    d = form.degree
    f = form
    if not f.coeffs[0]:
        # move roots away from (1:0) with the unimodular X -> X, Y -> cX + Y,
        # which leaves the discriminant unchanged
        for c in range(1, d + 2):
            if isinstance(field, PrimeField) and c >= field.p:
                raise CharacteristicError(
                    f"GF({field.p}) too small to renormalize a degree {d} form"
                )
            cand = f.substitute(Mat2(field, 1, 0, c, 1))
            if cand.coeffs[0]:
                f = cand
                break
        else:
            raise DomainError("could not move roots off infinity")  # pragma: no cover
    p = f.to_poly()
    res = resultant(p, p.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return field.of(sign) * res / p.lc


def kth_roots_in_field(value, k, field):
    """All k-th roots of a scalar in QQ or GF(p)."""
    if field.characteristic == 0:
        return fraction_nth_roots(Fraction(value), k)
    p = field.p
    if not value:
        return [field.zero]
    if p <= 20000:
        return [e for e in field.elements() if e and e**k == value]
    d = gcd(k, p - 1)
    if d == 1:
        return [value ** pow(k, -1, p - 1)]
    raise DomainError(f"k-th roots with gcd(k, p-1) > 1 unsupported for large p = {p}")


def match_weighted_scale(values_lhs, values_rhs, weights, field):
    """Scalars r with values_lhs[i] = r^weights[i] * values_rhs[i] for all i.

    Zero patterns must agree; the root is pinned down through a Bezout
    combination of the weights present in the common support.
    """
    support = []
    for vf, vg, w in zip(values_lhs, values_rhs, weights):
        zf, zg = not vf, not vg
        if zf != zg:
            return []
        if not zf:
            support.append((vf / vg, w))
    if not support:
        return []
    k = 0
    for _, w in support:
        k = gcd(k, w)
    coeffs = bezout_combination([w for _, w in support], k)
    target = field.one
    for (ratio, _), c in zip(support, coeffs):
        target = target * ratio**c
    out = []
    for r in kth_roots_in_field(target, k, field):
        if not r:
            continue
        if all(
            vf == r**w * vg
            for (vf, vg, w) in zip(values_lhs, values_rhs, weights)
            if vg
        ):
            out.append(r)
    return out
