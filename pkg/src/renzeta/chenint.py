"""Exact continuous side: the power-log symbol algebra on [1, oo), cut-off
integrals, the integration operator from the lower bound 1, the Laurent-valued
multiplicative character on tensor words of symbols, its minimal-subtraction
(Birkhoff) factorisation, and the renormalised iterated-integral zeta analog.

A symbol is a finite sum of terms q(z) * t^(b - c z) * (log t)^m with
rational-function coefficients q. The lower integration bound is fixed at 1
so every boundary value stays inside Q(z).
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .combinat import shuffles
from .exactnum import (
    LaurentSeries,
    LaurentWindowError,
    Poly,
    RationalFunction,
    as_rational,
)


class InsufficientOrder(LaurentWindowError):
    """A Birkhoff product needed Laurent coefficients beyond the window the
    character was expanded to."""


class PowerLogTerm(NamedTuple):
    b: int
    c: Fraction
    m: int
    coeff: RationalFunction


def _rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Poly):
        return RationalFunction(x)
    return RationalFunction.constant(as_rational(x))


class PowerLogExpr:
    """Normalized finite sum of power-log terms; immutable and hashable.

    Closed under products and under integration from 1.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        merged: dict[tuple[int, Fraction, int], RationalFunction] = {}
        for t in terms:
            b, c, m, coeff = int(t[0]), as_rational(t[1]), int(t[2]), _rf(t[3])
            if m < 0:
                raise ValueError("log power must be nonnegative")
            if coeff.is_zero:
                continue
            key = (b, c, m)
            acc = merged.get(key)
            merged[key] = coeff if acc is None else acc + coeff
        self.terms = tuple(
            PowerLogTerm(b, c, m, coeff)
            for (b, c, m), coeff in sorted(merged.items())
            if not coeff.is_zero
        )

    @classmethod
    def zero(cls) -> "PowerLogExpr":
        return cls(())

    @classmethod
    def constant(cls, q) -> "PowerLogExpr":
        return cls(((0, Fraction(0), 0, _rf(q)),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, PowerLogExpr):
            return NotImplemented
        return PowerLogExpr(self.terms + other.terms)

    def __neg__(self):
        return PowerLogExpr(tuple((b, c, m, -q) for b, c, m, q in self.terms))

    def __sub__(self, other):
        if not isinstance(other, PowerLogExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly, RationalFunction)):
            q = _rf(other)
            return PowerLogExpr(tuple((b, c, m, cf * q) for b, c, m, cf in self.terms))
        if not isinstance(other, PowerLogExpr):
            return NotImplemented
        out = []
        for b1, c1, m1, q1 in self.terms:
            for b2, c2, m2, q2 in other.terms:
                out.append((b1 + b2, c1 + c2, m1 + m2, q1 * q2))
        return PowerLogExpr(tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerLogExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        if not self.terms:
            return "PowerLogExpr(0)"
        bits = []
        for b, c, m, q in self.terms:
            exp = f"{b}" if c == 0 else f"{b}-{c}z"
            s = f"({q.to_str()})*t^({exp})"
            if m:
                s += f"*log^{m}(t)"
            bits.append(s)
        return "PowerLogExpr(" + " + ".join(bits) + ")"


def power_symbol(b: int, c=0, m: int = 0, coeff=1) -> PowerLogExpr:
    """The single-term symbol coeff * t^(b - c z) * (log t)^m."""
    return PowerLogExpr(((b, as_rational(c), m, _rf(coeff)),))


def zeta_symbol(s: int) -> PowerLogExpr:
    """The slot symbol t^(-s - z) of the continuous zeta analog."""
    return power_symbol(-int(s), 1)


def _alpha_plus_one(b: int, c: Fraction) -> Poly:
    """alpha(z) + 1 = (b+1) - c z for the term t^(b - c z)."""
    return Poly((Fraction(b + 1), -c))


def cutoff_integral(e: PowerLogExpr) -> RationalFunction:
    """Finite part of the integral over [1, oo) as an exact rational function
    of z.

    A term with exponent alpha(z) = b - cz not identically -1 contributes
    coeff * (-1)^(m+1) m! / (alpha+1)^(m+1); pure log growth (alpha = -1
    identically) has zero finite part.

    >>> cutoff_integral(power_symbol(-3))
    RationalFunction(1/2)
    """
    total = RationalFunction.constant(0)
    for b, c, m, q in e.terms:
        if b == -1 and c == 0:
            continue
        denom = _alpha_plus_one(b, c) ** (m + 1)
        total = total + q * RationalFunction(
            Poly.constant(Fraction((-1) ** (m + 1)) * _factorial(m)), denom
        )
    return total


def _factorial(m: int) -> int:
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def ptilde(e: PowerLogExpr) -> PowerLogExpr:
    """Integration from 1: the exact antiderivative vanishing at t = 1.

    Raises the log filtration by at most one and stays inside the algebra.

    >>> ptilde(PowerLogExpr.constant(1)).terms == (power_symbol(1) - PowerLogExpr.constant(1)).terms
    True
    """
    out: list[tuple] = []
    for b, c, m, q in e.terms:
        if b == -1 and c == 0:
            # pure t^{-1} log^m: antiderivative log^{m+1} t / (m+1), zero at 1
            out.append((0, Fraction(0), m + 1, q * Fraction(1, m + 1)))
            continue
        inv = RationalFunction(Poly.one(), _alpha_plus_one(b, c))
        # t^{alpha+1} sum_i (-1)^i [m]_i / (alpha+1)^(i+1) log^(m-i) t
        fall = 1
        for i in range(m + 1):
            if i > 0:
                fall *= m - i + 1
            out.append((b + 1, c, m - i, q * Fraction((-1) ** i * fall) * inv ** (i + 1)))
        # boundary value at t = 1: only the log-free part survives
        out.append((0, Fraction(0), 0, q * Fraction((-1) ** (m + 1) * _factorial(m)) * inv ** (m + 1)))
    return PowerLogExpr(tuple(out))


def chen_character_exact(word) -> RationalFunction:
    """The nested cut-off integral of a tensor word of symbols as an exact
    rational function of z: integrate from the innermost slot outwards, then
    take the cut-off integral of the outermost.

    >>> chen_character_exact((zeta_symbol(1),))
    RationalFunction((1) / (z))
    """
    word = tuple(word)
    if not word:
        return RationalFunction.constant(1)
    acc = None
    for symbol in reversed(word):
        acc = symbol if acc is None else symbol * ptilde(acc)
    return cutoff_integral(acc)


def chen_character(word, order: int) -> LaurentSeries:
    """Laurent expansion of :func:`chen_character_exact` valid through
    z**order. The pole order is at most the word's depth."""
    return chen_character_exact(word).laurent_expand(order)


class BirkhoffFactorization:
    """Minimal-subtraction factorisation of a Laurent-valued character with
    respect to the deconcatenation coproduct.

    ``phi`` maps nonempty words (tuples of hashable letters) to
    LaurentSeries. ``minus`` is the pole-part character, an exact Laurent
    polynomial in 1/z; ``plus`` is holomorphic at 0 and its value there is
    the renormalised evaluation.
    """

    def __init__(self, phi):
        self._phi = phi
        self._minus: dict[tuple, LaurentSeries] = {}
        self._bar: dict[tuple, LaurentSeries] = {}

    def _phi_of(self, w) -> LaurentSeries:
        out = self._phi(w)
        if not isinstance(out, LaurentSeries):
            raise TypeError("the character must produce LaurentSeries values")
        return out

    def bar(self, w) -> LaurentSeries:
        """phi(w) + sum over proper splits of minus(prefix) * phi(suffix)."""
        w = tuple(w)
        hit = self._bar.get(w)
        if hit is not None:
            return hit
        try:
            total = self._phi_of(w)
            for i in range(1, len(w)):
                total = total + self.minus(w[:i]) * self._phi_of(w[i:])
        except LaurentWindowError as exc:
            raise InsufficientOrder(str(exc)) from exc
        self._bar[w] = total
        return total

    def minus(self, w) -> LaurentSeries:
        w = tuple(w)
        if not w:
            raise ValueError("the unit word is not in the augmentation ideal")
        hit = self._minus.get(w)
        if hit is not None:
            return hit
        bar = self.bar(w)
        if bar.order is not None and bar.order < -1:
            raise InsufficientOrder("window too small to read the pole part")
        out = -bar.pole_part()
        self._minus[w] = out
        return out

    def plus(self, w) -> LaurentSeries:
        w = tuple(w)
        if not w:
            return LaurentSeries.constant(1, None)
        return self.bar(w) + self.minus(w)

    def plus_at_zero(self, w) -> Fraction:
        try:
            return self.plus(w).constant_term()
        except LaurentWindowError as exc:
            raise InsufficientOrder(str(exc)) from exc


def bir_factorize(phi, w) -> tuple:
    """Factorise the character at the word w: returns (phi_minus, phi_plus)
    as callables on subwords of w (and anything else phi can evaluate)."""
    bf = BirkhoffFactorization(phi)
    bf.plus(w)  # force the recursion so errors surface here
    return bf.minus, bf.plus


def zeta_tilde_renorm(s) -> Fraction:
    """Renormalised continuous zeta analog at positive integer arguments:
    the holomorphic Birkhoff factor of the word t^(-s_1 - z) x ... x
    t^(-s_k - z), evaluated at z = 0. Coincides with the convergent nested
    integral when s_1 + ... + s_m > m for every m.

    >>> zeta_tilde_renorm((3, 2))
    Fraction(1, 6)
    >>> zeta_tilde_renorm((1, 1))
    Fraction(0, 1)
    """
    s = tuple(int(x) for x in s)
    if any(x < 1 for x in s):
        raise ValueError("continuous zeta arguments must be positive integers")
    word = tuple(zeta_symbol(x) for x in s)
    order = max(1, len(word))
    memo: dict[tuple, LaurentSeries] = {}

    def phi(w):
        w = tuple(w)
        hit = memo.get(w)
        if hit is None:
            hit = memo[w] = chen_character(w, order)
        return hit

    bf = BirkhoffFactorization(phi)
    return bf.plus_at_zero(word)


def shuffle_chen_words(u, w) -> dict[tuple, int]:
    """Shuffle product of two tensor words of symbols: word -> multiplicity."""
    u, w = tuple(u), tuple(w)
    if not u:
        return {w: 1}
    if not w:
        return {u: 1}
    out: dict[tuple, int] = {}
    for pattern in shuffles(len(u), len(w)):
        it_u, it_w = iter(u), iter(w)
        word = tuple(next(it_u) if side == 0 else next(it_w) for side in pattern)
        out[word] = out.get(word, 0) + 1
    return out


def pure_power_nested_integral(exponents, lo, hi) -> Fraction:
    """Nested integral of t^(e_1) x ... x t^(e_k) over
    lo <= t_k <= ... <= t_1 <= hi, by exact antiderivatives in the algebra of
    terms t^p log^m t. The value is rational for rational bounds as long as
    no log power survives at a bound other than 1 (log 1 = 0). ``hi=None``
    means the improper integral to infinity, which requires every surviving
    power negative."""

    def antiderivative(poly: dict) -> dict:
        out: dict[tuple[int, int], Fraction] = {}

        def bump(key, val):
            out[key] = out.get(key, Fraction(0)) + val

        for (p, m), cf in poly.items():
            if p == -1:
                bump((0, m + 1), cf / (m + 1))
                continue
            fall = Fraction(1)
            for i in range(m + 1):
                if i > 0:
                    fall *= m - i + 1
                bump((p + 1, m - i), cf * (-1) ** i * fall / Fraction(p + 1) ** (i + 1))
        return {k: v for k, v in out.items() if v != 0}

    def value_at(poly: dict, t: Fraction) -> Fraction:
        total = Fraction(0)
        for (p, m), cf in poly.items():
            if m > 0:
                if t == 1:
                    continue  # log 1 = 0
                raise ValueError(f"log power survives at t={t}; value not rational")
            total += cf * t**p
        return total

    exps = tuple(int(e) for e in exponents)
    lo = as_rational(lo)
    if lo <= 0:
        raise ValueError("lower bound must be positive")
    poly: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    for j, e in enumerate(reversed(exps)):
        outermost = j == len(exps) - 1
        lifted = antiderivative({(p + e, m): cf for (p, m), cf in poly.items()})
        if not outermost:
            boundary = value_at(lifted, lo)
            lifted[(0, 0)] = lifted.get((0, 0), Fraction(0)) - boundary
            poly = {k: v for k, v in lifted.items() if v != 0}
        else:
            poly = lifted
    if hi is None:
        if any(p > 0 or (p == 0 and m > 0) for (p, m) in poly):
            raise ValueError("divergent nested integral")
        upper = poly.get((0, 0), Fraction(0))
    else:
        upper = value_at(poly, as_rational(hi))
    return upper - value_at(poly, lo)


def convergent_nested_integral(s) -> Fraction:
    """Direct evaluation of the convergent continuous zeta analog (no
    regularisation, no Laurent series): the oracle for the convergent case."""
    s = tuple(int(x) for x in s)
    partial = 0
    for i, x in enumerate(s, start=1):
        partial += x
        if partial <= i:
            raise ValueError("not in the convergence region")
    return pure_power_nested_integral(tuple(-x for x in s), 1, None)
