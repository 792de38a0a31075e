"""Renormalised multiple (Hurwitz) zeta values at nonpositive integer
arguments, in three variants:

* ``strict``  -- strict-inequality nested sums, regularisation twisted so
  that the values satisfy the unsigned stuffle relations;
* ``weak``    -- weak-inequality version (signed stuffle relations), obtained
  from the strict values by the composition-sum conversion;
* ``alt``     -- the diagonal limit zeta(-a_1+z, ..., -a_k+z; v) at z -> 0,
  which satisfies the Hurwitz shift/derivative identities but not the
  stuffle relations. It coincides with ``strict`` in depths 1 and 2.

An argument list is given as the tuple of nonnegative exponents
(a_1, ..., a_k): the value computed is zeta(-a_1, ..., -a_k; v).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import comb, prod

from .combinat import bernoulli, bernoulli_poly, compositions, packet_sums
from .emsum import _fact, nested_fp_res
from .exactnum import Poly, as_rational, rat_str
from .words import stuffle

VARIANTS = ("strict", "weak", "alt")


class HolomorphyViolation(ArithmeticError):
    """A composition term of the renormalised pipeline had a nonzero
    residue. Must never fire: every term is individually pole-free."""


@dataclass
class ZetaValue:
    value: Fraction
    as_poly_in_v: Poly | None = None

    def __iter__(self):  # allow tuple-unpacking in callers
        yield self.value
        yield self.as_poly_in_v


@dataclass
class Report:
    """Machine-readable outcome of one verification suite."""

    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, description: str, lhs=None, rhs=None):
        self.cases += 1
        if not ok:
            entry = {"case": description}
            if lhs is not None:
                entry["lhs"] = rat_str(lhs)
            if rhs is not None:
                entry["rhs"] = rat_str(rhs)
            self.failures.append(entry)

    def merged_with(self, other: "Report") -> "Report":
        return Report(
            suite=f"{self.suite}+{other.suite}" if self.suite else other.suite,
            cases=self.cases + other.cases,
            failures=self.failures + other.failures,
            seconds=self.seconds + other.seconds,
        )


def _validate_args(a) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a):
        raise ValueError("arguments must be nonpositive integers: exponents a_i >= 0")
    return a


@lru_cache(maxsize=None)
def _composition_structures(k: int):
    """Slot structures and rational weights of the twisted-regularisation
    expansion at depth k.

    The outer sum runs over compositions I of the depth k with weight
    (-1)^(k-r)/(i_1...i_r); each contracted word is then re-expanded over
    compositions J of r with weight 1/(c_1!...c_l!), a J-packet of size c
    becoming one slot whose exponent is the packet sum of the original
    letters and whose perturbation multiplicity is c. Structures depend only
    on k; a slot is stored as (start, end, c) over letter indices.
    """
    grouped: dict[tuple, Fraction] = {}
    for parts_i in compositions(k):
        r = len(parts_i)
        coeff_i = Fraction((-1) ** (k - r), prod(parts_i))
        bounds = [0]
        for p in parts_i:
            bounds.append(bounds[-1] + p)
        for parts_j in compositions(r):
            coeff = coeff_i / prod(_fact(c) for c in parts_j)
            slots = []
            start = 0
            for c in parts_j:
                slots.append((bounds[start], bounds[start + c], c))
                start += c
            key = tuple(slots)
            grouped[key] = grouped.get(key, Fraction(0)) + coeff
    return tuple(sorted(grouped.items()))


@lru_cache(maxsize=None)
def _composition_terms(a: tuple[int, ...]):
    """Exponent lists (with integer perturbation multiplicities) and their
    weights for the argument word ``a``, grouped by exponent list."""
    psum = [0]
    for x in a:
        psum.append(psum[-1] + x)
    grouped: dict[tuple, Fraction] = {}
    for slots, coeff in _composition_structures(len(a)):
        exps = tuple((psum[e] - psum[s], c) for s, e, c in slots)
        acc = grouped.get(exps)
        grouped[exps] = coeff if acc is None else acc + coeff
    return tuple(sorted(grouped.items()))


def _engine_fp(exps, v) -> Fraction:
    data = nested_fp_res(exps, v)
    if data.res != 0:
        raise HolomorphyViolation(
            f"composition term {exps} at v={v} has residue {data.res}"
        )
    return data.fp


@lru_cache(maxsize=None)
def _zeta_strict(a: tuple[int, ...], v: Fraction) -> Fraction:
    if not a:
        return Fraction(1)
    total = Fraction(0)
    for exps, coeff in _composition_terms(a):
        total += coeff * _engine_fp(exps, v)
    return total


@lru_cache(maxsize=None)
def _zeta_weak(a: tuple[int, ...], v: Fraction) -> Fraction:
    if not a:
        return Fraction(1)
    return sum(
        _zeta_strict(packet_sums(a, parts), v) for parts in compositions(len(a))
    )


def strict_from_weak(a, v=0) -> Fraction:
    """Inverse conversion: recovers the strict value from weak values."""
    a = _validate_args(a)
    v = as_rational(v)
    if not a:
        return Fraction(1)
    k = len(a)
    return sum(
        Fraction(-1) ** (k - len(parts)) * _zeta_weak(packet_sums(a, parts), v)
        for parts in compositions(k)
    )


@lru_cache(maxsize=None)
def _zeta_alt(a: tuple[int, ...], v: Fraction) -> Fraction:
    if not a:
        return Fraction(1)
    exps = tuple((x, Fraction(1)) for x in a)
    return _engine_fp(exps, v)


_DISPATCH = {"strict": _zeta_strict, "weak": _zeta_weak, "alt": _zeta_alt}


def zeta_value(a, v=0, variant: str = "strict") -> Fraction:
    """The renormalised value zeta_variant(-a_1, ..., -a_k; v) as a Fraction."""
    if variant not in _DISPATCH:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    return _DISPATCH[variant](_validate_args(a), as_rational(v))


def poly_degree_bound(a) -> int:
    """Safe degree bound for v -> zeta(-a; v): sum (a_i + 1)."""
    return sum(x + 1 for x in a)


def zeta_poly_in_v(a, variant: str = "strict", degree_bound: int | None = None) -> Poly:
    """The value as an exact polynomial in the Hurwitz shift v, recovered by
    interpolation through integer nodes and verified at two fresh nodes."""
    a = _validate_args(a)
    if degree_bound is None:
        degree_bound = poly_degree_bound(a)
    nodes = [Fraction(i) for i in range(degree_bound + 1)]
    poly = Poly.interpolate([(x, zeta_value(a, x, variant)) for x in nodes])
    from .emsum import InterpolationMismatch

    for x in (Fraction(1, 2), Fraction(3, 2)):
        if poly(x) != zeta_value(a, x, variant):
            raise InterpolationMismatch(
                f"zeta{a} ({variant}) is not a degree-{degree_bound} polynomial in v"
            )
    return poly


def _zeta_result(a, v, variant, with_poly) -> ZetaValue:
    value = zeta_value(a, v, variant)
    poly = zeta_poly_in_v(a, variant) if with_poly else None
    return ZetaValue(value, poly)


def zeta_renorm(a, v=0, with_poly: bool = False) -> ZetaValue:
    """Strict-inequality renormalised multiple Hurwitz zeta value.

    >>> zeta_renorm((0, 0)).value
    Fraction(3, 8)
    >>> zeta_renorm((1, 1)).value
    Fraction(1, 288)
    """
    return _zeta_result(a, v, "strict", with_poly)


def zeta_weak_renorm(a, v=0, with_poly: bool = False) -> ZetaValue:
    """Weak-inequality version: the composition sum of strict values.

    >>> zeta_weak_renorm((0, 0)).value
    Fraction(-1, 8)
    """
    return _zeta_result(a, v, "weak", with_poly)


def zeta_alt(a, v=0, with_poly: bool = False) -> ZetaValue:
    """Diagonal-limit renormalisation: one shared perturbation per slot."""
    return _zeta_result(a, v, "alt", with_poly)


def zeta_depth1(a: int) -> Fraction:
    """zeta(-a) for a >= 0: equals -B_{a+1}/(a+1) for a >= 1 and -1/2 at
    a = 0 (the polynomial value B_{a+1}(1) handles both uniformly)."""
    if a < 0:
        raise ValueError("depth-1 closed form needs a >= 0")
    return -bernoulli_poly(a + 1, Fraction(1)) / (a + 1)


def zeta2_closed(a: int, b: int) -> Fraction:
    """Independent closed formula for zeta(-a, -b) at v = 0 (two Bernoulli
    convolutions plus a binomial tail); a second code path against the
    composition/engine pipeline.

    >>> zeta2_closed(0, 0)
    Fraction(3, 8)
    >>> zeta2_closed(2, 1)
    Fraction(-1, 240)
    """
    if a < 0 or b < 0:
        raise ValueError("closed depth-2 formula needs a, b >= 0")
    s1 = sum(
        comb(b + 1, s) * bernoulli(s) * zeta_depth1(a + b - s + 1)
        for s in range(b + 2)
    )
    tail = (
        Fraction((-1) ** (a + 1))
        * _fact(a)
        * _fact(b)
        * bernoulli(a + b + 2)
        / (2 * _fact(a + b + 2))
    )
    return Fraction(s1, b + 1) + zeta_depth1(a) * zeta_depth1(b) + tail


#: Known double-zeta values zeta(-a, -b) for 0 <= a, b <= 6, keyed (a, b);
#: the cross-check corpus reproduced by ``cmd_table`` and the table suite.
DEPTH2_REFERENCE = {}


def _fill_reference():
    rows = {
        0: ("3/8", "1/12", "7/720", "-1/120", "-11/2520", "1/252", "1/224"),
        1: ("1/24", "1/288", "-1/240", "-19/10080", "1/504", "41/20160", "-1/480"),
        2: ("-7/720", "-1/240", "0", "1/504", "113/151200", "-1/480", "-307/166320"),
        3: ("-1/240", "1/840", "1/504", "1/28800", "-1/480", "-281/332640", "1/264"),
        4: ("11/2520", "1/504", "-113/151200", "-1/480", "0", "1/264", "117977/75675600"),
        5: ("1/504", "-103/60480", "-1/480", "1/1232", "1/264", "1/127008", "-691/65520"),
        6: ("-1/224", "-1/480", "307/166320", "1/264", "-117977/75675600", "-691/65520", "0"),
    }
    for b, row in rows.items():
        for a, cell in enumerate(row):
            DEPTH2_REFERENCE[(a, b)] = Fraction(cell)


_fill_reference()


def words_up_to(max_depth: int, max_weight: int):
    """All words with 1..max_depth nonnegative letters and letter sum
    <= max_weight, in deterministic (depth, lexicographic) order."""
    out = []
    for depth in range(1, max_depth + 1):
        def rec(prefix, budget):
            if len(prefix) == depth:
                out.append(tuple(prefix))
                return
            for x in range(budget + 1):
                rec(prefix + [x], budget - x)

        rec([], max_weight)
    return out


def verify_stuffle(max_weight: int, v=0, variant: str = "strict", max_depth: int = 3) -> Report:
    """Check zeta(u * u'; v) = zeta(u; v) zeta(u'; v) for all ordered word
    pairs with per-word depth <= max_depth and combined weight <= max_weight.

    ``strict`` uses the unsigned stuffle, ``weak`` the signed one. Failures
    are returned as data, not raised.
    """
    if variant not in ("strict", "weak"):
        raise ValueError("stuffle suite runs on the strict or weak variant")
    v = as_rational(v)
    t0 = time.monotonic()
    report = Report(suite=f"stuffle-{variant}")
    words = words_up_to(max_depth, max_weight)
    value = lambda w: zeta_value(w, v, variant)
    for u in words:
        wu = sum(u)
        for w in words:
            if wu + sum(w) > max_weight:
                continue
            expansion = stuffle(u, w, "strict" if variant == "strict" else "weak")
            lhs = expansion.apply(value)
            rhs = value(u) * value(w)
            report.record(
                lhs == rhs,
                f"{variant}: ({','.join(map(str, u))}) * ({','.join(map(str, w))}) at v={v}",
                lhs,
                rhs,
            )
    report.seconds = time.monotonic() - t0
    return report


def verify_hurwitz_identities(a, v=0, variant: str = "strict") -> Report:
    """Check the two Hurwitz-parameter identities on renormalised values:

    (i)  zeta(-a_1..-a_k; v+1) = zeta(-a_1..-a_k; v)
                                  - (v+1)^{a_k} zeta(-a_1..-a_{k-1}; v+1)
    (ii) d/dv zeta(-a_1..-a_k; v) = sum_j a_j zeta(..., -a_j+1, ...; v)
         (all a_j >= 1; derivative taken on the interpolated polynomial)
    """
    a = _validate_args(a)
    v = as_rational(v)
    t0 = time.monotonic()
    report = Report(suite="hurwitz")
    lhs = zeta_value(a, v + 1, variant)
    rhs = zeta_value(a, v, variant) - (1 + v) ** a[-1] * zeta_value(a[:-1], v + 1, variant)
    report.record(lhs == rhs, f"shift identity at a={a}, v={v} ({variant})", lhs, rhs)
    if all(x >= 1 for x in a):
        poly = zeta_poly_in_v(a, variant)
        lhs = poly.derivative()(v)
        rhs = sum(
            a[j] * zeta_value(a[:j] + (a[j] - 1,) + a[j + 1 :], v, variant)
            for j in range(len(a))
        )
        report.record(
            lhs == rhs, f"derivative identity at a={a}, v={v} ({variant})", lhs, rhs
        )
    report.seconds = time.monotonic() - t0
    return report


def sup_sphere_count_coeffs(n: int) -> dict[int, int]:
    """Coefficients of the sup-norm sphere point count (2t+1)^n - (2t-1)^n
    as a polynomial in t: degree m -> integer coefficient."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return {
        n - 2 * j - 1: 2 ** (n - 2 * j) * comb(n, 2 * j + 1)
        for j in range(0, (n - 1) // 2 + 1)
    }


def _sphere_coeffs_shifted(n: int, v: Fraction) -> dict[int, Fraction]:
    """Same polynomial written in the variable (t+v): degree q -> coefficient
    (a polynomial expression in v, evaluated exactly)."""
    out: dict[int, Fraction] = {}
    for m, coeff in sup_sphere_count_coeffs(n).items():
        for q in range(m + 1):
            out[q] = out.get(q, Fraction(0)) + coeff * comb(m, q) * (-v) ** (m - q)
    return {q: c for q, c in out.items() if c != 0}


@lru_cache(maxsize=None)
def _hdim_value(n: int, a: tuple[int, ...], v: Fraction) -> Fraction:
    shifted = sorted(_sphere_coeffs_shifted(n, v).items())
    total = Fraction(0)
    for combo in iproduct(shifted, repeat=len(a)):
        coeff = prod(c for _, c in combo)
        args = tuple(x + q for x, (q, _) in zip(a, combo))
        total += coeff * _zeta_strict(args, v)
    return total


def hdim_zeta(n: int, a, v=0, with_poly: bool = False) -> ZetaValue:
    """Higher-dimensional renormalised value: nested sums over integer points
    of R^n ordered by the supremum norm, reduced to a Q[v]-combination of
    one-dimensional values through the sphere point-count polynomial.

    >>> hdim_zeta(2, (0,)).value
    Fraction(-2, 3)
    >>> hdim_zeta(3, (0,)).value
    Fraction(-1, 1)
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    a = _validate_args(a)
    v = as_rational(v)
    value = _hdim_value(n, a, v)
    poly = None
    if with_poly:
        bound = len(a) * n + sum(a)
        nodes = [Fraction(i) for i in range(bound + 1)]
        poly = Poly.interpolate([(x, _hdim_value(n, a, x)) for x in nodes])
        from .emsum import InterpolationMismatch

        for x in (Fraction(1, 2), Fraction(3, 2)):
            if poly(x) != _hdim_value(n, a, x):
                raise InterpolationMismatch(
                    f"hdim zeta_{n}{a} is not polynomial of degree {bound} in v"
                )
    return ZetaValue(value, poly)
