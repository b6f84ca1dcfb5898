"""Exact univariate computer algebra over arbitrary-precision rationals.

Polynomials and rational functions in one variable x, gauge-carrying
rational functions of the form e^(c*x^2/2)*R(x) that are closed under
differentiation, exact determinants (fraction-free for polynomial
matrices), Wronskians, and Sturm-chain real-root counting.

Every value is immutable and every operation is a pure function, so
everything here is safe to share across threads.  There is no floating
point anywhere; long determinant computations run in pure Python and can
be interrupted with the usual KeyboardInterrupt.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

if os.environ.get("OSCEXT_PURE_PYTHON"):
    QQ = Fraction
else:
    try:
        from gmpy2 import mpq as QQ  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - exercised via OSCEXT_PURE_PYTHON
        QQ = Fraction

_SCALAR_TYPES = (int, Fraction, type(QQ(0)))


def _scalar(value) -> QQ:
    """Coerce ints, Fractions and 'p/q' strings to the working rational type."""
    if isinstance(value, str):
        return QQ(Fraction(value))
    return QQ(value)


class Polynomial:
    """Dense univariate polynomial; ``coeffs[i]`` multiplies x^i.

    Trailing zero coefficients are stripped; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _make(cls, cs):
        # internal fast path: cs entries are already scalars
        n = len(cs)
        while n and not cs[n - 1]:
            n -= 1
        p = object.__new__(cls)
        p.coeffs = tuple(cs[:n])
        return p

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else QQ(0)

    def coefficient(self, power: int):
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return QQ(0)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, _SCALAR_TYPES):
            return Polynomial._make([_scalar(other)])
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._make(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._make([-c for c in self.coeffs])

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return ZERO
            out = [QQ(0)] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if not ca:
                    continue
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
            return Polynomial._make(out)
        if isinstance(other, _SCALAR_TYPES):
            s = _scalar(other)
            if not s:
                return ZERO
            return Polynomial._make([c * s for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        dd = other.degree
        if self.degree < dd:
            return ZERO, self
        rem = list(self.coeffs)
        lc = other.coeffs[-1]
        quo = [QQ(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            c = c / lc
            quo[i - dd] = c
            for j, oc in enumerate(other.coeffs):
                rem[i - dd + j] -= c * oc
        return Polynomial._make(quo), Polynomial._make(rem[:dd])

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("inexact polynomial division")
        return q

    def derivative(self) -> "Polynomial":
        return Polynomial._make(
            [i * c for i, c in enumerate(self.coeffs)][1:]
        )

    def evaluate(self, point):
        v = _scalar(point)
        acc = QQ(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return Polynomial._make([c / lc for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, _SCALAR_TYPES):
            return self == Polynomial._make([_scalar(other)])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            if power == 0:
                parts.append(str(c))
            else:
                xs = "x" if power == 1 else f"x^{power}"
                if c == 1:
                    parts.append(xs)
                elif c == -1:
                    parts.append(f"-{xs}")
                else:
                    parts.append(f"{c}*{xs}")
        text = parts[0]
        for term in parts[1:]:
            text += term if term.startswith("-") else "+" + term
        return text

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        return cls(data)


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def _primitive(p: Polynomial) -> Polynomial:
    """Rescale by a positive rational so coefficients are coprime integers."""
    if p.is_zero:
        return p
    den_lcm = 1
    num_gcd = 0
    for c in p.coeffs:
        den_lcm = math.lcm(den_lcm, c.denominator)
        num_gcd = math.gcd(num_gcd, c.numerator)
    factor = QQ(den_lcm, num_gcd)
    if factor == 1:
        return p
    return Polynomial._make([c * factor for c in p.coeffs])


def _integer_coeffs(p: Polynomial) -> list:
    """Ascending integer coefficient list with content stripped out."""
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = math.lcm(den_lcm, c.denominator)
    out = [c.numerator * (den_lcm // c.denominator) for c in p.coeffs]
    g = 0
    for c in out:
        g = math.gcd(g, c)
    if g > 1:
        out = [c // g for c in out]
    return out


def _int_primitive(cs: list) -> list:
    g = 0
    for c in cs:
        g = math.gcd(g, c)
    if g > 1:
        return [c // g for c in cs]
    return list(cs)


def _int_prem(a: list, b: list) -> list:
    """Canonical pseudo-remainder lc(b)^(da-db+1) * a mod b over the
    integers; coefficient lists ascending, deg a >= deg b >= 0."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    scale_left = len(a) - len(b) + 1
    while len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * e for e in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        scale_left -= 1
        while r and not r[-1]:
            r.pop()
        if not r:
            break
    if scale_left > 0 and r:
        factor = lb ** scale_left
        r = [factor * e for e in r]
    return r


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor via the subresultant pseudo-remainder
    sequence over the integers: known scale factors keep coefficient
    growth linear with no content extraction inside the loop."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    # with a large degree gap, one plain remainder step is far cheaper
    # than letting the pseudo-remainder scale through the whole gap
    if a.degree > b.degree + 4:
        a = divmod(a, b)[1]
        if a.is_zero:
            return b.monic()
    elif b.degree > a.degree + 4:
        b = divmod(b, a)[1]
        if b.is_zero:
            return a.monic()
    ca = _integer_coeffs(a)
    cb = _integer_coeffs(b)
    if len(ca) < len(cb):
        ca, cb = cb, ca
    if len(cb) == 1:
        return ONE
    g = 1
    h = 1
    while True:
        delta = len(ca) - len(cb)
        rem = _int_prem(ca, cb)
        if not rem:
            break
        if len(rem) == 1:
            return ONE
        divisor = g * h ** delta
        ca, cb = cb, [c // divisor for c in rem]
        g = ca[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g ** delta // h ** (delta - 1)
    final = _int_primitive(cb)
    lc = final[-1]
    return Polynomial._make([QQ(c, lc) for c in final])


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero or b.is_zero:
        return ZERO
    return (a * b.exact_div(poly_gcd(a, b))).monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.is_zero:
        raise ValueError("zero polynomial has no square-free part")
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g)


def sturm_real_roots(p: Polynomial) -> int:
    """Number of distinct real roots, exactly.

    Uses the signed-remainder Sturm chain p0 = f, p1 = f',
    p_{i+1} = -rem(p_{i-1}, p_i) on the square-free part f, and counts the
    drop in sign variations between -infinity and +infinity.  Remainders
    are rescaled by positive rationals only, which leaves the chain valid.
    """
    if p.is_zero:
        raise ValueError("root count of the zero polynomial is undefined")
    f = squarefree_part(p)
    if f.degree <= 0:
        return 0
    chain = [f, f.derivative()]
    while chain[-1].degree > 0:
        rem = divmod(chain[-2], chain[-1])[1]
        if rem.is_zero:
            break
        chain.append(_primitive(-rem))

    def variations(signs):
        count = 0
        prev = None
        for s in signs:
            if s == 0:
                continue
            if prev is not None and s != prev:
                count += 1
            prev = s
        return count

    at_pos = [1 if q.leading_coefficient > 0 else -1 for q in chain]
    at_neg = [
        s if q.degree % 2 == 0 else -s for q, s in zip(chain, at_pos)
    ]
    return variations(at_neg) - variations(at_pos)


def _det_small(m, n):
    if n == 0:
        return ONE
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        a * (e * i - f * h)
        - b * (d * i - f * g)
        + c * (d * h - e * g)
    )


def det_poly(rows) -> Polynomial:
    """Exact determinant of a square polynomial matrix.

    Small sizes expand directly; from 4x4 up a fraction-free Bareiss
    elimination keeps intermediate entries polynomial.
    """
    m = [[e if isinstance(e, Polynomial) else Polynomial.constant(e) for e in r]
         for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant requires a square matrix")
    if n <= 3:
        return _det_small(m, n)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, n):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            head = row_i[k]
            for j in range(k + 1, n):
                e = pivot * row_i[j] - head * m[k][j]
                if k:
                    e = e.exact_div(prev)
                row_i[j] = e
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


class RationalFunction:
    """Quotient of polynomials in normal form: monic denominator, coprime."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RationalFunction) and den is None:
            self.num, self.den = num.num, num.den
            return
        n = num if isinstance(num, Polynomial) else Polynomial.constant(num)
        if den is None:
            d = ONE
        else:
            d = den if isinstance(den, Polynomial) else Polynomial.constant(den)
        self.num, self.den = self._normalized(n, d)

    @staticmethod
    def _normalized(n: Polynomial, d: Polynomial):
        if d.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if n.is_zero:
            return ZERO, ONE
        if d.degree > 0:
            g = poly_gcd(n, d)
            if g.degree > 0:
                n = n.exact_div(g)
                d = d.exact_div(g)
        lc = d.leading_coefficient
        if lc != 1:
            inv = 1 / lc
            n = n * inv
            d = d * inv
        return n, d

    @classmethod
    def _make(cls, n: Polynomial, d: Polynomial) -> "RationalFunction":
        r = object.__new__(cls)
        r.num, r.den = cls._normalized(n, d)
        return r

    @classmethod
    def _raw(cls, n: Polynomial, d: Polynomial) -> "RationalFunction":
        # internal fast path: n, d known coprime and d nonzero
        if n.is_zero:
            return RF_ZERO
        lc = d.leading_coefficient
        if lc != 1:
            inv = 1 / lc
            n = n * inv
            d = d * inv
        r = object.__new__(cls)
        r.num, r.den = n, d
        return r

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == ONE

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial:
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Polynomial, *_SCALAR_TYPES)):
            return RationalFunction(other)
        return None

    def __add__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if self.is_zero:
            return q
        if q.is_zero:
            return self
        d1, d2 = self.den, q.den
        if d1 == d2:
            return RationalFunction._make(self.num + q.num, d1)
        if d1 == ONE:
            return RationalFunction._raw(self.num * d2 + q.num, d2)
        if d2 == ONE:
            return RationalFunction._raw(self.num + q.num * d1, d1)
        # Henrici: only the common part of the denominators can cancel
        g = poly_gcd(d1, d2)
        if g == ONE:
            return RationalFunction._raw(
                self.num * d2 + q.num * d1, d1 * d2
            )
        d1r = d1.exact_div(g)
        d2r = d2.exact_div(g)
        t = self.num * d2r + q.num * d1r
        if t.is_zero:
            return RF_ZERO
        g2 = poly_gcd(t, g)
        if g2 == ONE:
            return RationalFunction._raw(t, d1 * d2r)
        return RationalFunction._raw(
            t.exact_div(g2), d1.exact_div(g2) * d2r
        )

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RationalFunction)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if self.is_zero or q.is_zero:
            return RF_ZERO
        # cross-reduce; the product of the reduced parts is already coprime
        n1, d1, n2, d2 = self.num, self.den, q.num, q.den
        if d2.degree > 0 and n1.degree > 0:
            g = poly_gcd(n1, d2)
            if g.degree > 0:
                n1 = n1.exact_div(g)
                d2 = d2.exact_div(g)
        if d1.degree > 0 and n2.degree > 0:
            g = poly_gcd(n2, d1)
            if g.degree > 0:
                n2 = n2.exact_div(g)
                d1 = d1.exact_div(g)
        return RationalFunction._raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if q.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return self * RationalFunction._raw(q.den, q.num)

    def __rtruediv__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q / self

    def derivative(self) -> "RationalFunction":
        if self.is_polynomial:
            return RationalFunction._raw(self.num.derivative(), ONE)
        n, d = self.num, self.den
        t = n.derivative() * d - n * d.derivative()
        if t.is_zero:
            return RF_ZERO
        # common factors of t and d^2 are the repeated factors of d, and
        # they appear in t with multiplicity one lower than in d, so
        # gcd(t, d^2) = gcd(t, d) and dividing it out reduces fully
        g = poly_gcd(t, d)
        if g.degree > 0:
            return RationalFunction._raw(t.exact_div(g), d * d.exact_div(g))
        return RationalFunction._raw(t, d * d)

    def evaluate(self, point):
        bottom = self.den.evaluate(point)
        if not bottom:
            raise ZeroDivisionError(f"pole at {point}")
        return self.num.evaluate(point) / bottom

    def __eq__(self, other):
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self.num == q.num and self.den == q.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        return cls(Polynomial(data["num"]), Polynomial(data["den"]))


RF_ZERO = RationalFunction(0)
RF_ONE = RationalFunction(1)


def det_ratfunc(rows) -> RationalFunction:
    """Exact determinant of a square matrix of rational functions.

    Each row is cleared to a common polynomial denominator, the polynomial
    determinant is taken fraction-free, and the row factors are divided
    back out.
    """
    m = [[e if isinstance(e, RationalFunction) else RationalFunction(e)
          for e in r] for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return RF_ONE
    if all(e.is_polynomial for r in m for e in r):
        return RationalFunction(det_poly([[e.num for e in r] for r in m]))
    cleared = []
    scale = ONE
    for r in m:
        common = ONE
        for e in r:
            common = poly_lcm(common, e.den)
        cleared.append([e.num * common.exact_div(e.den) for e in r])
        scale = scale * common
    return RationalFunction(det_poly(cleared), scale)


class GaugedRational:
    """A function e^(gauge*x^2/2) * body with integer gauge and rational body.

    The class is closed under d/dx: the derivative of (c, R) is
    (c, c*x*R + R').  The zero function is stored with gauge 0.
    """

    __slots__ = ("gauge", "body")

    def __init__(self, gauge: int, body):
        b = body if isinstance(body, RationalFunction) else RationalFunction(body)
        if b.is_zero:
            gauge = 0
        self.gauge = int(gauge)
        self.body = b

    @property
    def is_zero(self) -> bool:
        return self.body.is_zero

    def derivative(self) -> "GaugedRational":
        c = self.gauge
        b = self.body
        new_body = b.derivative()
        if c:
            new_body = new_body + b * (X * c)
        return GaugedRational(c, new_body)

    def __mul__(self, other):
        if isinstance(other, GaugedRational):
            return GaugedRational(self.gauge + other.gauge, self.body * other.body)
        if isinstance(other, (RationalFunction, Polynomial, *_SCALAR_TYPES)):
            return GaugedRational(self.gauge, self.body * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, GaugedRational):
            if other.is_zero:
                raise ZeroDivisionError("division by the zero gauged rational")
            return GaugedRational(self.gauge - other.gauge, self.body / other.body)
        if isinstance(other, (RationalFunction, Polynomial, *_SCALAR_TYPES)):
            return GaugedRational(self.gauge, self.body / other)
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, GaugedRational):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.gauge != other.gauge:
            raise ValueError(
                f"cannot add gauged rationals with gauges "
                f"{self.gauge} and {other.gauge}"
            )
        return GaugedRational(self.gauge, self.body + other.body)

    def __sub__(self, other):
        if not isinstance(other, GaugedRational):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return GaugedRational(self.gauge, -self.body)

    def __eq__(self, other):
        if not isinstance(other, GaugedRational):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.gauge == other.gauge and self.body == other.body

    def __hash__(self):
        return hash((self.gauge, self.body))

    def __str__(self):
        if self.gauge == 0:
            return str(self.body)
        return f"exp({self.gauge}*x^2/2)*({self.body})"

    def __repr__(self):
        return f"GaugedRational({self.gauge}, {self.body!r})"

    def to_json(self) -> dict:
        return {"gauge": self.gauge, "body": self.body.to_json()}


GR_ZERO = GaugedRational(0, RF_ZERO)
GR_ONE = GaugedRational(0, RF_ONE)


def wronskian(functions) -> GaugedRational:
    """Wronskian determinant of gauged rationals, computed exactly.

    The empty Wronskian is the unit (gauge 0, body 1).  The gauge of the
    result is the sum of the input gauges, since each column of the
    derivative matrix carries its function's gauge factor.
    """
    fs = list(functions)
    if not fs:
        return GR_ONE
    n = len(fs)
    gauge = sum(f.gauge for f in fs)
    columns = []
    for f in fs:
        chain = [f.body]
        shear = X * f.gauge
        for _ in range(n - 1):
            prev = chain[-1]
            d = prev.derivative()
            if f.gauge:
                d = d + prev * shear
            chain.append(d)
        columns.append(chain)
    rows = [[columns[j][i] for j in range(n)] for i in range(n)]
    return GaugedRational(gauge, det_ratfunc(rows))
