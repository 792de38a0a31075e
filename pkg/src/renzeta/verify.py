"""Verification suites: executable identities behind the renormalised
values. Each suite returns a :class:`renzeta.mzv.Report`; failures are data,
not exceptions, so the CLI can serialize them.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import product as iproduct

from . import chenint, mzv
from .emsum import nested_fp_res, random_exponent_lists
from .exactnum import Poly, as_rational
from .mzv import Report

ENGINE_SEED = 20260810


def suite_table() -> Report:
    """Depth-2 pipeline vs the reference table vs the closed formula."""
    t0 = time.monotonic()
    report = Report(suite="table")
    for (a, b), expected in sorted(mzv.DEPTH2_REFERENCE.items()):
        got = mzv.zeta_value((a, b), 0, "strict")
        report.record(got == expected, f"pipeline table entry (a={a}, b={b})", got, expected)
        closed = mzv.zeta2_closed(a, b)
        report.record(closed == expected, f"closed-formula entry (a={a}, b={b})", closed, expected)
    report.seconds = time.monotonic() - t0
    return report


def suite_stuffle(max_weight: int = 8, vs=(Fraction(0), Fraction(1, 2))) -> Report:
    """Stuffle relations for both sign conventions at each Hurwitz shift."""
    report = Report(suite="stuffle")
    for v in vs:
        for variant in ("strict", "weak"):
            report = report.merged_with(mzv.verify_stuffle(max_weight, v, variant))
    report.suite = "stuffle"
    return report


def _arg_lists(max_depth: int, max_entry: int):
    out = []
    for depth in range(1, max_depth + 1):
        out.extend(iproduct(range(max_entry + 1), repeat=depth))
    return out


def suite_hurwitz(max_depth: int = 3, max_entry: int = 3,
                  vs=(Fraction(0), Fraction(1, 2), Fraction(3, 4))) -> Report:
    """Hurwitz shift and derivative identities across small argument lists."""
    report = Report(suite="hurwitz")
    t0 = time.monotonic()
    for a in _arg_lists(max_depth, max_entry):
        for v in vs:
            report = report.merged_with(mzv.verify_hurwitz_identities(a, v))
    report.suite = "hurwitz"
    report.seconds = time.monotonic() - t0
    return report


def brute_truncated_nested_sum(bs, v, n_top: int) -> Fraction:
    """sum over 0 < n_k < ... < n_1 <= N of prod (n_i + v)^(b_i), by direct
    dynamic programming; the independent oracle for cut-off sum facts."""
    v = as_rational(v)
    bs = tuple(int(b) for b in bs)
    # inner[n] = nested sum over chains strictly below n for the tail slots
    inner = [Fraction(1)] * (n_top + 2)
    for b in reversed(bs[1:]):
        acc = Fraction(0)
        new = [Fraction(0)] * (n_top + 2)
        for n in range(1, n_top + 2):
            new[n] = acc
            acc += (n + v) ** b * inner[n]
        inner = new
    return sum((n + v) ** bs[0] * inner[n] for n in range(1, n_top + 1))


def suite_engine(count: int = 200) -> Report:
    """Engine robustness: germ-truncation stability, holomorphy, the
    finite-part vanishing oracle, and the depth-2 closed formula."""
    t0 = time.monotonic()
    report = Report(suite="engine")

    for exps, v in random_exponent_lists(count, ENGINE_SEED):
        base = nested_fp_res(exps, v)
        for bump in (1, 2):
            again = nested_fp_res(exps, v, j_bump=bump)
            report.record(
                base == again,
                f"truncation stability {exps} v={v} bump={bump}",
            )

    for a in range(7):
        for b in range(7):
            lhs = mzv.zeta_value((a, b), 0, "strict")
            rhs = mzv.zeta2_closed(a, b)
            report.record(lhs == rhs, f"two-path depth-2 ({a},{b})", lhs, rhs)

    # holomorphy: residue vanishes whenever every exponent is nonnegative
    cs = (Fraction(1), Fraction(2), Fraction(3))
    for b1 in range(5):
        for b2 in range(5):
            for c1 in cs:
                for c2 in cs:
                    for v in (Fraction(0), Fraction(1, 3)):
                        data = nested_fp_res(((b1, c1), (b2, c2)), v)
                        report.record(
                            data.res == 0 and isinstance(data.fp, Fraction),
                            f"holomorphy (({b1},{c1}),({b2},{c2})) v={v}",
                        )

    # finite-part vanishing: the N-polynomial of a pure power chain has
    # zero constant term
    for depth in (1, 2, 3):
        for bs in iproduct(range(4), repeat=depth):
            for v in (Fraction(0), Fraction(1, 4)):
                degree = sum(b + 1 for b in bs)
                pts = [
                    (Fraction(n), brute_truncated_nested_sum(bs, v, n))
                    for n in range(degree + 1)
                ]
                poly = Poly.interpolate(pts)
                extra = Fraction(degree + 1)
                ok = poly(extra) == brute_truncated_nested_sum(bs, v, degree + 1)
                ok = ok and poly.coefficient(0) == 0
                report.record(ok, f"cut-off vanishing b={bs} v={v}")

    report.seconds = time.monotonic() - t0
    return report


def _chen_words(max_len: int, letters=(1, 2, 3)):
    out = []
    for ln in range(1, max_len + 1):
        out.extend(iproduct(letters, repeat=ln))
    return out


def suite_shuffle_cont() -> Report:
    """Continuous side: character multiplicativity under the shuffle,
    renormalised shuffle relations after factorisation, the splitting
    identity at finite bounds, and spot values."""
    t0 = time.monotonic()
    report = Report(suite="shuffle-cont")

    exact: dict[tuple, object] = {}

    def char(word_s):
        hit = exact.get(word_s)
        if hit is None:
            hit = exact[word_s] = chenint.chen_character_exact(
                tuple(chenint.zeta_symbol(s) for s in word_s)
            )
        return hit

    words = _chen_words(3)
    for u in words:
        for w in words:
            if len(u) + len(w) > 4:
                continue
            combined = chenint.shuffle_chen_words(u, w)
            lhs = sum(
                (char(word) * mult for word, mult in sorted(combined.items())),
                start=chenint.RationalFunction.constant(0),
            )
            rhs = char(u) * char(w)
            ok = lhs == rhs
            report.record(ok, f"character shuffle {u} x {w}")

    # renormalised (post-factorisation) shuffle relations
    series_memo: dict[tuple, object] = {}

    def phi(word):
        word = tuple(word)
        hit = series_memo.get(word)
        if hit is None:
            hit = series_memo[word] = chenint.chen_character(word, 4)
        return hit

    bf = chenint.BirkhoffFactorization(phi)

    def renval(word_s):
        return bf.plus_at_zero(tuple(chenint.zeta_symbol(s) for s in word_s))

    for u in words:
        for w in words:
            if len(u) + len(w) > 3:
                continue
            combined = chenint.shuffle_chen_words(u, w)
            lhs = sum(mult * renval(word) for word, mult in sorted(combined.items()))
            rhs = renval(u) * renval(w)
            report.record(lhs == rhs, f"renormalised shuffle {u} x {w}", lhs, rhs)

    spot = {
        (3, 2): Fraction(1, 6),
        (1,): Fraction(0),
        (1, 1): Fraction(0),
    }
    for word_s, expected in sorted(spot.items()):
        got = chenint.zeta_tilde_renorm(word_s)
        report.record(got == expected, f"renormalised value at {word_s}", got, expected)

    # convergent region: factorised value equals the direct nested integral
    for word_s in ((2,), (3,), (3, 2), (4, 1), (2, 2, 2)):
        direct = chenint.convergent_nested_integral(word_s)
        got = chenint.zeta_tilde_renorm(word_s)
        report.record(got == direct, f"convergent agreement at {word_s}", got, direct)

    # splitting of the integration domain at an intermediate radius
    lam, top = Fraction(3, 2), Fraction(7, 2)
    for e1 in (-2, -3, -4):
        for e2 in (-2, -3, -4):
            whole = chenint.pure_power_nested_integral((e1, e2), 1, top)
            inner = chenint.pure_power_nested_integral((e1, e2), 1, lam)
            outer = chenint.pure_power_nested_integral((e1, e2), lam, top)
            cross = chenint.pure_power_nested_integral(
                (e1,), lam, top
            ) * chenint.pure_power_nested_integral((e2,), 1, lam)
            lhs = inner + outer + cross
            report.record(lhs == whole, f"domain splitting ({e1},{e2})", lhs, whole)

    report.seconds = time.monotonic() - t0
    return report


def run_suite(name: str, max_weight: int = 8, v=Fraction(0)) -> Report:
    v = as_rational(v)
    if name == "table":
        return suite_table()
    if name == "stuffle":
        vs = (Fraction(0), Fraction(1, 2))
        if v not in vs:
            vs = vs + (v,)
        return suite_stuffle(max_weight, vs)
    if name == "hurwitz":
        vs = (Fraction(0), Fraction(1, 2), Fraction(3, 4))
        if v not in vs:
            vs = vs + (v,)
        return suite_hurwitz(vs=vs)
    if name == "engine":
        return suite_engine()
    if name == "shuffle-cont":
        return suite_shuffle_cont()
    if name == "all":
        merged = Report(suite="all")
        for part in ("table", "engine", "stuffle", "hurwitz", "shuffle-cont"):
            merged = merged.merged_with(run_suite(part, max_weight, v))
        merged.suite = "all"
        return merged
    raise ValueError(f"unknown suite {name!r}")
