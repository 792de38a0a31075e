"""Exact scalar arithmetic: rationals, dense polynomials over Q, rational
functions of one variable, and truncated Laurent series at z = 0.

All coefficients are ``fractions.Fraction``; nothing in this package ever
rounds. Laurent series carry an explicit validity window and refuse to hand
out coefficients beyond it -- an operation that would need an unavailable
coefficient fails loudly instead of returning a silent zero.
"""

from __future__ import annotations

import re
from fractions import Fraction

#: The scalar field of the whole package.
Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class LaurentWindowError(ArithmeticError):
    """A coefficient beyond a series' validity window was requested."""


def as_rational(x) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject anything inexact."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def rat_str(q) -> str:
    """Serialize as ``p/q`` (or ``p`` when q = 1), sign on the numerator."""
    return str(as_rational(q))


def parse_rational(s: str) -> Fraction:
    """Parse the ``p/q`` wire format. Rejects decimals and floats."""
    s = s.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a p/q rational: {s!r}")
    return Fraction(s)


def rat_arith(a, b, op: str) -> Fraction:
    """Exact rational arithmetic; op is one of ``+ - * /``."""
    a, b = as_rational(a), as_rational(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        if b == 0:
            raise ZeroDivisionError("exact division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


class Poly:
    """Dense univariate polynomial over Q.

    Coefficient i is the coefficient of the i-th power of the variable.
    The zero polynomial has degree -1 (the distinguished sentinel).

    >>> p = Poly([Fraction(1, 6), -1, 1])   # x^2 - x + 1/6
    >>> p(Fraction(2))
    Fraction(13, 6)
    >>> p.degree
    2
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((as_rational(c),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else -as_rational(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_rational(other)
            return Poly(tuple(c * q for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x):
        """Evaluate by Horner's rule. Works for Fraction and Poly arguments."""
        acc = Poly.zero() if isinstance(x, Poly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = self.degree, other.degree
        if dn < dd:
            return Poly.zero(), self
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * (dn - dd + 1)
        for i in range(dn - dd, -1, -1):
            c = rem[i + dd] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Poly(tuple(quot)), Poly(tuple(rem[:dd]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    @staticmethod
    def gcd(a: "Poly", b: "Poly") -> "Poly":
        """Monic greatest common divisor (Euclid)."""
        while not b.is_zero:
            a, b = b, a % b
        if a.is_zero:
            return a
        return a * (1 / a.coeffs[-1])

    @classmethod
    def interpolate(cls, points) -> "Poly":
        """Lagrange interpolation through ``[(x_i, y_i), ...]`` (distinct x_i)."""
        points = [(as_rational(x), as_rational(y)) for x, y in points]
        xs = [x for x, _ in points]
        if len(set(xs)) != len(xs):
            raise ValueError("interpolation nodes must be distinct")
        total = cls.zero()
        for i, (xi, yi) in enumerate(points):
            if yi == 0:
                continue
            num = cls.one()
            den = Fraction(1)
            for j, (xj, _) in enumerate(points):
                if j == i:
                    continue
                num = num * cls((-xj, 1))
                den *= xi - xj
            total = total + num * (yi / den)
        return total

    def to_str(self, var: str = "z") -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{var}" if i == 1 else f"{head}{var}^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self.to_str()})"


class RationalFunction:
    """Quotient of two polynomials, reduced, with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = num if isinstance(num, Poly) else Poly.constant(num)
        den = den if isinstance(den, Poly) else Poly.constant(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num, self.den = Poly.zero(), Poly.one()
            return
        g = Poly.gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.coeffs[-1]
        if lead != 1:
            inv = 1 / lead
            num, den = num * inv, den * inv
        self.num, self.den = num, den

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(Poly.constant(c))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other)
        if isinstance(other, Poly):
            return RationalFunction(other)
        if isinstance(other, RationalFunction):
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of the zero function")
            return RationalFunction(self.den, self.num) ** (-n)
        out = RationalFunction.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, x) -> Fraction:
        x = as_rational(x)
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of the rational function at {x}")
        return self.num(x) / d

    def valuation_at_zero(self) -> int:
        """Order of vanishing at z = 0 (negative for a pole)."""
        if self.is_zero:
            raise ValueError("the zero function has no valuation")

        def val(p: Poly) -> int:
            for i, c in enumerate(p.coeffs):
                if c != 0:
                    return i
            raise AssertionError

        return val(self.num) - val(self.den)

    def pole_order_at_zero(self) -> int:
        if self.is_zero:
            return 0
        return max(0, -self.valuation_at_zero())

    def laurent_expand(self, order: int) -> "LaurentSeries":
        """Laurent series at z = 0, valid through z**order."""
        return laurent_expand(self, order)

    def to_str(self, var: str = "z") -> str:
        if self.den == Poly.one():
            return self.num.to_str(var)
        return f"({self.num.to_str(var)}) / ({self.den.to_str(var)})"

    def __repr__(self):
        return f"RationalFunction({self.to_str()})"


class LaurentSeries:
    """Finite window of a Laurent expansion at z = 0.

    ``coeffs[i]`` is the coefficient of z**(min_exponent + i) and the
    expansion is trusted through z**order inclusive. ``order=None`` marks an
    exact Laurent polynomial (every higher coefficient is genuinely zero).
    Requesting a coefficient past ``order`` raises :class:`LaurentWindowError`.
    """

    __slots__ = ("min_exponent", "coeffs", "order")

    def __init__(self, min_exponent: int, coeffs, order: int | None):
        cs = [as_rational(c) for c in coeffs]
        if order is not None and cs and min_exponent + len(cs) - 1 > order:
            raise ValueError("coefficients extend beyond the validity order")
        while cs and cs[0] == 0:
            cs.pop(0)
            min_exponent += 1
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            min_exponent = 0 if order is None else order + 1
        self.min_exponent = min_exponent
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def zero(cls, order: int | None = None) -> "LaurentSeries":
        return cls(0, (), order)

    @classmethod
    def constant(cls, c, order: int | None = None) -> "LaurentSeries":
        return cls(0, (as_rational(c),), order)

    @classmethod
    def from_term(cls, c, exponent: int, order: int | None = None) -> "LaurentSeries":
        return cls(exponent, (as_rational(c),), order)

    @property
    def is_zero(self) -> bool:
        """True when every stored coefficient vanishes (on the window)."""
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        if self.order is not None and k > self.order:
            raise LaurentWindowError(
                f"coefficient of z^{k} requested; expansion only valid through z^{self.order}"
            )
        i = k - self.min_exponent
        if i < 0 or i >= len(self.coeffs):
            return Fraction(0)
        return self.coeffs[i]

    def residue(self) -> Fraction:
        return self.coefficient(-1)

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def pole_order(self) -> int:
        return max(0, -self.min_exponent) if self.coeffs else 0

    @staticmethod
    def _min_order(a: int | None, b: int | None):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        order = self._min_order(self.order, other.order)
        if not self.coeffs:
            return LaurentSeries(other.min_exponent, other.coeffs, order)
        if not other.coeffs:
            return LaurentSeries(self.min_exponent, self.coeffs, order)
        lo = min(self.min_exponent, other.min_exponent)
        hi = max(
            self.min_exponent + len(self.coeffs),
            other.min_exponent + len(other.coeffs),
        )
        if order is not None:
            hi = min(hi, order + 1)
        cs = [
            (self.coefficient(k) if self._stored(k) else 0)
            + (other.coefficient(k) if other._stored(k) else 0)
            for k in range(lo, hi)
        ]
        return LaurentSeries(lo, cs, order)

    __radd__ = __add__

    def _stored(self, k: int) -> bool:
        return self.min_exponent <= k < self.min_exponent + len(self.coeffs)

    def __neg__(self):
        return LaurentSeries(self.min_exponent, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_rational(other)
            return LaurentSeries(
                self.min_exponent, tuple(c * q for c in self.coeffs), self.order
            )
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return laurent_mul(self, other)

    __rmul__ = __mul__

    def pole_part(self) -> "LaurentSeries":
        """The z^{<0} part. Exact: finitely many terms, valid everywhere."""
        neg = [
            (k, self.coefficient(k)) for k in range(self.min_exponent, 0) if self._stored(k)
        ]
        if not neg:
            return LaurentSeries.zero(None)
        lo = neg[0][0]
        cs = [Fraction(0)] * (0 - lo)
        for k, c in neg:
            cs[k - lo] = c
        return LaurentSeries(lo, cs, None)

    def holomorphic_part(self) -> "LaurentSeries":
        """Everything from z^0 on, keeping the validity window."""
        if not self.coeffs:
            return LaurentSeries.zero(self.order)
        lo = max(0, self.min_exponent)
        hi = self.min_exponent + len(self.coeffs)
        return LaurentSeries(lo, [self.coefficient(k) for k in range(lo, hi)], self.order)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentSeries.constant(other, self.order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.min_exponent == other.min_exponent
            and self.coeffs == other.coeffs
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.min_exponent, self.coeffs, self.order))

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Coefficient-wise equality on the overlap of the two windows."""
        hi = self._min_order(self.order, other.order)
        lo = min(self.min_exponent, other.min_exponent)
        if hi is None:
            hi = max(
                self.min_exponent + len(self.coeffs),
                other.min_exponent + len(other.coeffs),
            )
        return all(self.coefficient(k) == other.coefficient(k) for k in range(lo, hi + 1))

    def to_str(self, var: str = "z") -> str:
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for i, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                k = self.min_exponent + i
                if k == 0:
                    body = str(abs(c))
                else:
                    mag = "" if abs(c) == 1 else f"{abs(c)}*"
                    body = f"{mag}{var}" if k == 1 else f"{mag}{var}^{k}"
                if not parts:
                    parts.append(body if c > 0 else f"-{body}")
                else:
                    parts.append(f"+ {body}" if c > 0 else f"- {body}")
            body = " ".join(parts)
        if self.order is None:
            return body
        return f"{body} + O({var}^{self.order + 1})"

    def __repr__(self):
        return f"LaurentSeries({self.to_str()})"


def laurent_expand(f: RationalFunction, order: int) -> LaurentSeries:
    """Expand a rational function at z = 0, valid through z**order.

    The pole order at 0 equals the multiplicity of z in the (reduced)
    denominator.

    >>> laurent_expand(RationalFunction(1, Poly((1, -1))), 2)   # 1/(1-z)
    LaurentSeries(1 + z + z^2 + O(z^3))
    """
    if f.is_zero:
        return LaurentSeries.zero(order)

    def split_z_power(p: Poly):
        k = 0
        while p.coefficient(k) == 0:
            k += 1
        return k, Poly(p.coeffs[k:])

    kn, num = split_z_power(f.num)
    kd, den = split_z_power(f.den)
    shift = kn - kd  # valuation of f at 0
    # invert the unit part of the denominator as a power series
    length = order - shift + 1
    if length <= 0:
        return LaurentSeries.zero(order)
    inv = [Fraction(0)] * length
    d0 = den.coeffs[0]
    inv[0] = 1 / d0
    for n in range(1, length):
        s = Fraction(0)
        for j in range(1, min(n, den.degree) + 1):
            s += den.coefficient(j) * inv[n - j]
        inv[n] = -s / d0
    out = [Fraction(0)] * length
    for i in range(length):
        a = num.coefficient(i)
        if a == 0:
            continue
        for j in range(length - i):
            out[i + j] += a * inv[j]
    return LaurentSeries(shift, out, order)


def laurent_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Cauchy product; the validity order is reduced to what both operands
    actually determine.

    A zero-on-window series has min_exponent = order + 1 by normalization,
    which makes the plain window rule below correct for it too.
    """
    if (a.is_zero and a.order is None) or (b.is_zero and b.order is None):
        return LaurentSeries.zero(None)  # an exactly-zero factor
    candidates = []
    if a.order is not None:
        candidates.append(a.order + b.min_exponent)
    if b.order is not None:
        candidates.append(b.order + a.min_exponent)
    order = min(candidates) if candidates else None
    if a.is_zero or b.is_zero:
        return LaurentSeries.zero(order)
    lo = a.min_exponent + b.min_exponent
    hi = a.min_exponent + len(a.coeffs) - 1 + b.min_exponent + len(b.coeffs) - 1
    if order is not None:
        hi = min(hi, order)
    out = [Fraction(0)] * (hi - lo + 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        ka = a.min_exponent + i
        for j, cb in enumerate(b.coeffs):
            if cb == 0:
                continue
            k = ka + b.min_exponent + j
            if k <= hi:
                out[k - lo] += ca * cb
    return LaurentSeries(lo, out, order)
