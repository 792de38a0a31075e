"""Exact (residue, finite-part) data at z = 0 for cut-off nested sums

    sum_{1 <= n_l < ... < n_1} (n_1+v)^(b_1 - c_1 z) ... (n_l+v)^(b_l - c_l z)

computed by a depth recursion: the innermost sum is replaced by its
interpolated summation expansion, which peels the last slot into a family of
local germs (three Laurent coefficients each) against depth-(l-1) sums.

The regularisation direction gamma(z) = z is hard-wired: the residue and
finite part used here depend only on gamma'(0) = 1.

Two structural facts are enforced at runtime rather than assumed:

* holomorphy -- whenever the last exponent is a nonnegative integer the
  residue must vanish and the finite part must be rational;
* the cancellation argument -- a non-rational finite part may only ever be
  multiplied by an exactly-zero coefficient. The NONRATIONAL sentinel raises
  :class:`RationalityLeak` if anything else touches it.
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from typing import NamedTuple

from .combinat import bernoulli, bernoulli_poly
from .exactnum import Poly, as_rational

_FACT_CACHE = [1, 1]


def _fact(n: int) -> int:
    while len(_FACT_CACHE) <= n:
        _FACT_CACHE.append(_FACT_CACHE[-1] * len(_FACT_CACHE))
    return _FACT_CACHE[n]


class StructuralViolation(ValueError):
    """An exponent list breaks the recursion's structural invariant
    (a slot other than the last has negative b, or c <= 0, or v <= -1)."""


class RationalityLeak(ArithmeticError):
    """A NONRATIONAL finite part was about to enter a result through a
    provably nonzero coefficient. Must never fire."""


class InterpolationMismatch(ArithmeticError):
    """Interpolated polynomial failed verification at a fresh node."""


class _NonRational:
    """Absorbing sentinel for finite parts that are not rational numbers.

    Addition absorbs; multiplication by exact zero gives exact zero, anything
    else raises RationalityLeak.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Fraction(0)
            raise RationalityLeak(
                "non-rational finite part multiplied by nonzero coefficient"
            )
        if other is self:
            raise RationalityLeak("product of two non-rational finite parts")
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) or other is self:
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NONRATIONAL")

    def __repr__(self):
        return "NONRATIONAL"


#: Finite parts that exist but are not rational numbers (last exponent <= -1).
NONRATIONAL = _NonRational()


class AffineExponent(NamedTuple):
    """One nested-sum slot (n+v)^(b - c z); c must be a positive rational."""

    b: int
    c: Fraction


class LaurentData(NamedTuple):
    """The z^{-1} and z^0 coefficients of a nested sum at z = 0."""

    res: Fraction
    fp: object  # Fraction or NONRATIONAL


class LocalGerm(NamedTuple):
    """z^{-1}, z^0, z^1 coefficients of a peeled-slot factor."""

    h_m1: Fraction
    h_0: Fraction
    h_1: Fraction


_germ_cache: dict = {}
_ZERO = Fraction(0)


def germ_H(j: int, b: int, c) -> LocalGerm:
    """Local germ of the j-th interpolated-summation factor for the slot
    (b, c): (B_j/j!) [b - c z]_{j-1}, expanded to three coefficients at z=0.

    >>> germ_H(0, -1, Fraction(2))
    LocalGerm(h_m1=Fraction(-1, 2), h_0=Fraction(0, 1), h_1=Fraction(0, 1))
    """
    if j < 0:
        raise ValueError("germ index must be nonnegative")
    c = as_rational(c)
    key = (j, b, c)
    hit = _germ_cache.get(key)
    if hit is not None:
        return hit
    if j == 0:
        # [beta]_{-1} = 1/(b+1-cz): simple pole iff b = -1
        if b == -1:
            germ = LocalGerm(-1 / c, _ZERO, _ZERO)
        else:
            d = Fraction(b + 1)
            germ = LocalGerm(_ZERO, 1 / d, c / d**2)
    else:
        Bj = bernoulli(j)
        if Bj == 0:
            germ = LocalGerm(_ZERO, _ZERO, _ZERO)
        else:
            # first two coefficients of prod_i (b - i - c z), i = 0..j-2
            p0, p1 = 1, _ZERO
            for i in range(j - 1):
                p1 = p1 * (b - i) - c * p0
                p0 *= b - i
            scale = Bj / _fact(j)
            germ = LocalGerm(_ZERO, scale * p0, scale * p1)
    _germ_cache[key] = germ
    return germ


def _falling_int(b: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= b - i
        if out == 0:
            return 0
    return out


_boundary_cache: dict = {}


def _boundary_k0(b: int, two_j: int, v: Fraction) -> Fraction:
    """z^0 coefficient of the peeled boundary factor for a last slot with
    b >= 0: minus the sum over germs of (B_j/j!) [b]_{j-1} (1+v)^(b-j+1)."""
    key = (b, two_j, v)
    hit = _boundary_cache.get(key)
    if hit is not None:
        return hit
    base = 1 + v
    power = base ** (b + 1)
    total = -power / (b + 1)  # j = 0 term: [b]_{-1} = 1/(b+1)
    for j in range(1, two_j + 1):
        power /= base
        if j > 1 and j % 2 == 1:
            continue
        f = _falling_int(b, j - 1)
        if f:
            total -= bernoulli(j) * f * power / _fact(j)
    _boundary_cache[key] = total
    return total


def j_truncation(exponents) -> int:
    """Number of germ pairs kept when peeling the last slot: germs run
    j = 0 .. 2J. Chosen so that every merged exponent the recursion can
    request is covered, with one unit of safety margin."""
    exps = _normalize(exponents)
    total = sum(max(b, 0) for b, _ in exps) + len(exps)
    return max(1, -((-total) // 2) + 1)


def _normalize(exponents) -> tuple[AffineExponent, ...]:
    out = []
    for e in exponents:
        b, c = e
        if b != int(b):
            raise StructuralViolation(f"exponent b must be an integer, got {b!r}")
        c = as_rational(c)
        if c <= 0:
            raise StructuralViolation(f"perturbation coefficient must be > 0, got {c}")
        out.append(AffineExponent(int(b), c))
    return tuple(out)


_cache: dict = {}
_cache_limit = int(os.environ.get("MZV_CACHE_SIZE", "0") or "0")


def set_cache_limit(n: int) -> None:
    """Cap the engine memo at n entries (0 = unlimited)."""
    global _cache_limit
    _cache_limit = n


def clear_cache() -> None:
    _cache.clear()


def _memoize(key, value: LaurentData) -> LaurentData:
    if _cache_limit and len(_cache) >= _cache_limit:
        _cache.pop(next(iter(_cache)))
    _cache[key] = value
    return value


def _key(exps, v: Fraction, bump: int) -> tuple:
    flat = [bump, v.numerator, v.denominator]
    for b, c in exps:
        flat.append(b)
        flat.append(c.numerator)
        flat.append(c.denominator)
    return tuple(flat)


def nested_fp_res(exponents, v, j_bump: int = 0) -> LaurentData:
    """Residue and finite part at z = 0 of the depth-l cut-off nested sum.

    All slots but the last must have b >= 0; v must be a rational > -1.
    ``j_bump`` widens every germ truncation by that amount (the result must
    not depend on it; the robustness suite checks this).

    >>> nested_fp_res([(1, 1)], 0)
    LaurentData(res=Fraction(0, 1), fp=Fraction(-1, 12))
    >>> nested_fp_res([(0, 1), (0, 1)], 0).fp
    Fraction(3, 8)
    """
    exps = _normalize(exponents)
    if not exps:
        raise StructuralViolation("empty exponent list")
    v = as_rational(v)
    if v <= -1:
        raise StructuralViolation(f"Hurwitz shift must satisfy v > -1, got {v}")
    for b, _ in exps[:-1]:
        if b < 0:
            raise StructuralViolation(
                f"non-last slot with negative exponent {b}: the recursion only "
                "peels the deepest slot"
            )
    return _nested(exps, v, j_bump)


def _nested(exps, v: Fraction, bump: int) -> LaurentData:
    key = _key(exps, v, bump)
    hit = _cache.get(key)
    if hit is not None:
        return hit

    b_last, c_last = exps[-1]
    if len(exps) == 1:
        if b_last >= 0:
            fp = -bernoulli_shifted(b_last + 1, v) / (b_last + 1)
            data = LaurentData(_ZERO, fp)
        elif b_last == -1:
            data = LaurentData(1 / c_last, NONRATIONAL)
        else:
            data = LaurentData(_ZERO, NONRATIONAL)
        return _memoize(key, data)

    b_prev, c_prev = exps[-2]
    prefix = exps[:-2]
    total = sum(max(b, 0) for b, _ in exps) + len(exps)
    two_j = 2 * (max(1, -((-total) // 2) + 1) + bump)
    fp_known = b_last >= 0
    c_merged = c_prev + c_last

    res_total = _ZERO
    fp_total = _ZERO
    for j in range(two_j + 1):
        if j > 1 and j % 2 == 1:
            continue  # odd Bernoulli numbers vanish
        germ = germ_H(j, b_last, c_last)
        merged = AffineExponent(b_prev + b_last + 1 - j, c_merged)
        sub = _nested(prefix + (merged,), v, bump)
        res_total += germ.h_m1 * sub.fp + germ.h_0 * sub.res
        if fp_known:
            fp_total += germ.h_0 * sub.fp + germ.h_1 * sub.res

    sub_k = _nested(exps[:-1], v, bump)
    # every slot of the boundary subsum has b >= 0, so it is pole-free; its
    # residue is the only partner the dropped z^1 boundary pieces ever meet
    if sub_k.res != 0:
        raise RationalityLeak("boundary subsum with nonnegative exponents has a pole")
    if b_last == -1:
        res_total += (1 / c_last) * sub_k.fp
    if fp_known:
        fp_total += _boundary_k0(b_last, two_j, v) * sub_k.fp

    if b_last >= 0 and res_total != 0:
        raise RationalityLeak(
            f"nested sum with nonnegative last exponent has residue {res_total}"
        )
    data = LaurentData(res_total, fp_total if fp_known else NONRATIONAL)
    return _memoize(key, data)


def bernoulli_shifted(k: int, v) -> Fraction:
    """B_k(1+v) as an exact rational."""
    return bernoulli_poly(k, 1 + as_rational(v))


def poly_in_v(exponents, degree_bound: int) -> Poly:
    """Recover v -> finite part as an exact polynomial by Lagrange
    interpolation through degree_bound+1 integer nodes, then verify at two
    fresh non-integer nodes.

    Requires the last exponent's b >= 0 (rational finite part). Raises
    :class:`InterpolationMismatch` if the verification nodes disagree, which
    signals either a bug or a genuinely non-polynomial dependence (e.g. a
    degree bound below the true degree).
    """
    exps = _normalize(exponents)
    if exps[-1].b < 0:
        raise ValueError("finite part is only polynomial in v when the last b >= 0")
    if degree_bound < len(exps):
        raise ValueError("degree bound below the depth")
    nodes = [Fraction(i) for i in range(degree_bound + 1)]
    poly = Poly.interpolate([(x, nested_fp_res(exps, x).fp) for x in nodes])
    for x in (Fraction(1, 2), Fraction(3, 2)):
        if poly(x) != nested_fp_res(exps, x).fp:
            raise InterpolationMismatch(
                f"interpolated polynomial disagrees with the engine at v = {x}"
            )
    return poly


def safe_degree_bound(exponents) -> int:
    """Degree bound sum(max(b_i,0)+1) that always dominates the true degree."""
    return sum(max(b, 0) + 1 for b, _ in _normalize(exponents))


_C_PALETTE = (
    Fraction(1),
    Fraction(2),
    Fraction(3),
    Fraction(1, 2),
    Fraction(3, 2),
    Fraction(5, 2),
    Fraction(1, 3),
)


def random_exponent_lists(count: int, seed: int, max_depth: int = 4, max_abs_b: int = 4):
    """Deterministic pseudo-random exponent lists satisfying the structural
    invariant, for robustness suites. Returns [(exponents, v), ...]."""
    rng = random.Random(seed)
    out = []
    v_choices = (Fraction(0), Fraction(1, 2), Fraction(1, 3))
    for _ in range(count):
        depth = rng.randint(1, max_depth)
        exps = []
        for i in range(depth):
            lo = -max_abs_b if i == depth - 1 else 0
            exps.append((rng.randint(lo, max_abs_b), rng.choice(_C_PALETTE)))
        out.append((tuple(exps), rng.choice(v_choices)))
    return out
