import random
from fractions import Fraction
from itertools import product as iproduct

import pytest

import renzeta.emsum as emsum
from renzeta.emsum import (
    NONRATIONAL,
    InterpolationMismatch,
    LaurentData,
    RationalityLeak,
    StructuralViolation,
    germ_H,
    j_truncation,
    nested_fp_res,
    poly_in_v,
    random_exponent_lists,
    safe_degree_bound,
)
from renzeta.exactnum import Poly


class TestNonRationalSentinel:
    def test_absorbing_addition(self):
        assert NONRATIONAL + Fraction(3) is NONRATIONAL
        assert Fraction(3) + NONRATIONAL is NONRATIONAL
        assert -NONRATIONAL is NONRATIONAL

    def test_zero_annihilates(self):
        assert Fraction(0) * NONRATIONAL == 0
        assert NONRATIONAL * 0 == 0

    def test_leak_raises(self):
        with pytest.raises(RationalityLeak):
            Fraction(1, 2) * NONRATIONAL
        with pytest.raises(RationalityLeak):
            NONRATIONAL * NONRATIONAL


class TestGerms:
    def test_examples(self):
        g = germ_H(0, -1, Fraction(2))
        assert (g.h_m1, g.h_0, g.h_1) == (Fraction(-1, 2), 0, 0)
        g = germ_H(1, 5, Fraction(1))
        assert (g.h_m1, g.h_0, g.h_1) == (0, Fraction(-1, 2), 0)
        g = germ_H(3, 0, Fraction(1))
        assert (g.h_m1, g.h_0, g.h_1) == (0, 0, 0)

    def test_regular_j0(self):
        g = germ_H(0, 2, Fraction(3))
        assert (g.h_m1, g.h_0, g.h_1) == (0, Fraction(1, 3), Fraction(1, 3))

    def test_j2(self):
        # (B_2/2!)(b - cz): constant b/12, slope -c/12
        g = germ_H(2, 4, Fraction(2))
        assert (g.h_m1, g.h_0, g.h_1) == (0, Fraction(1, 3), Fraction(-1, 6))


class TestJTruncation:
    def test_examples(self):
        assert j_truncation([(0, 1), (0, 1)]) == 2
        assert j_truncation([(2, 1), (1, 1)]) == 4

    def test_negative_b_ignored(self):
        assert j_truncation([(3, 1), (-5, 2)]) == j_truncation([(3, 1), (0, 2)])


class TestEngineDepth1:
    def test_nonnegative(self):
        assert nested_fp_res([(1, 1)], 0) == LaurentData(Fraction(0), Fraction(-1, 12))
        assert nested_fp_res([(0, 2)], 0).fp == Fraction(-1, 2)
        # value is independent of the perturbation multiplicity
        assert nested_fp_res([(3, 1)], 0).fp == nested_fp_res([(3, 7)], 0).fp

    def test_pole(self):
        data = nested_fp_res([(-1, 3)], Fraction(1, 2))
        assert data.res == Fraction(1, 3)
        assert data.fp is NONRATIONAL
        # the residue does not depend on v
        assert nested_fp_res([(-1, 3)], Fraction(2, 3)).res == Fraction(1, 3)

    def test_deep_negative(self):
        data = nested_fp_res([(-2, 1)], 0)
        assert data.res == 0 and data.fp is NONRATIONAL


class TestEngineDeeper:
    def test_table_identifications(self):
        assert nested_fp_res([(0, 1), (0, 1)], 0).fp == Fraction(3, 8)
        assert nested_fp_res([(2, 1), (1, 1)], 0).fp == Fraction(-1, 240)
        assert nested_fp_res([(1, 1), (1, 1)], 0).fp == Fraction(1, 288)

    def test_structural_violation(self):
        with pytest.raises(StructuralViolation):
            nested_fp_res([(-1, 1), (0, 1)], 0)
        with pytest.raises(StructuralViolation):
            nested_fp_res([(1, 0)], 0)
        with pytest.raises(StructuralViolation):
            nested_fp_res([(1, 1)], Fraction(-3, 2))
        with pytest.raises(StructuralViolation):
            nested_fp_res([], 0)

    def test_holomorphy_all_nonnegative(self):
        cs = (Fraction(1), Fraction(2), Fraction(3))
        rng = random.Random(2)
        cases = []
        for depth in (1, 2):
            cases.extend(
                tuple(zip(bs, css))
                for bs in iproduct(range(3), repeat=depth)
                for css in iproduct(cs[:2], repeat=depth)
            )
        for depth in (3, 4):
            for _ in range(40):
                cases.append(
                    tuple(
                        (rng.randint(0, 4), rng.choice(cs)) for _ in range(depth)
                    )
                )
        for exps in cases:
            for v in (Fraction(0), Fraction(1, 3)):
                data = nested_fp_res(exps, v)
                assert data.res == 0
                assert isinstance(data.fp, Fraction)

    def test_j_stability_sample(self):
        for exps, v in random_exponent_lists(40, seed=99):
            base = nested_fp_res(exps, v)
            assert nested_fp_res(exps, v, j_bump=1) == base
            assert nested_fp_res(exps, v, j_bump=2) == base

    def test_regularised_stuffle_equal_perturbation(self):
        # fp of the depth-1 product expansion: the meromorphic stuffle
        # identity evaluated at 0 on a pole-free family
        for v in (Fraction(0), Fraction(1, 2)):
            for a in range(6):
                for b in range(6):
                    lhs = nested_fp_res([(a, 1)], v).fp * nested_fp_res([(b, 1)], v).fp
                    rhs = (
                        nested_fp_res([(a, 1), (b, 1)], v).fp
                        + nested_fp_res([(b, 1), (a, 1)], v).fp
                        + nested_fp_res([(a + b, 2)], v).fp
                    )
                    assert lhs == rhs

    def test_negative_last_slot_residue(self):
        # depth 2 with a pole: residue rational, finite part withheld
        data = nested_fp_res([(1, 1), (-1, 1)], 0)
        assert isinstance(data.res, Fraction)
        assert data.fp is NONRATIONAL


class TestPolyInV:
    def test_depth1_quadratic(self):
        poly = poly_in_v([(1, 1)], 2)
        assert poly == Poly((Fraction(-1, 12), Fraction(-1, 2), Fraction(-1, 2)))

    def test_bound_too_small_is_detected(self):
        with pytest.raises(InterpolationMismatch):
            poly_in_v([(1, 1)], 1)

    def test_constant_term_is_table_entry(self):
        poly = poly_in_v([(0, 1), (0, 1)], safe_degree_bound([(0, 1), (0, 1)]))
        assert poly(Fraction(0)) == Fraction(3, 8)

    def test_zero_polynomial(self):
        # depth-1 even zeta zeros: zeta(-2; v) is not zero, so use a crafted
        # zero combination instead: fp([(a,1)]) - fp([(a,2)]) vanishes in v
        vals = [
            nested_fp_res([(2, 1)], Fraction(i)).fp - nested_fp_res([(2, 2)], Fraction(i)).fp
            for i in range(4)
        ]
        assert all(x == 0 for x in vals)

    def test_requires_nonnegative_last(self):
        with pytest.raises(ValueError):
            poly_in_v([(-1, 1)], 3)


class TestMemo:
    def test_cache_cap(self):
        emsum.clear_cache()
        emsum.set_cache_limit(16)
        try:
            for a in range(6):
                nested_fp_res([(a, 1), (a, 1)], 0)
            assert len(emsum._cache) <= 16
            # results stay correct under eviction
            assert nested_fp_res([(0, 1), (0, 1)], 0).fp == Fraction(3, 8)
        finally:
            emsum.set_cache_limit(0)
            emsum.clear_cache()

    def test_deterministic_results(self):
        emsum.clear_cache()
        first = nested_fp_res([(2, 1), (2, 1), (2, 1)], Fraction(1, 2))
        emsum.clear_cache()
        second = nested_fp_res([(2, 1), (2, 1), (2, 1)], Fraction(1, 2))
        assert first == second
