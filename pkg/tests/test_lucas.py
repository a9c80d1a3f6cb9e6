import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucas_squares.lucas import (
    LucasParams,
    ParamRejection,
    coprime_pairs,
    is_degenerate,
    lucas_u,
    lucas_u_doubling,
    search_square_terms,
    search_zero_terms,
    square_root_if_square,
    theorem2_family,
)


def naive_u(p, q, n):
    # independent oracle: unrolled recurrence, no shared code path
    seq = [0, 1]
    while len(seq) <= n:
        seq.append(p * seq[-1] - q * seq[-2])
    return seq[n]


class TestLucasU:
    def test_fibonacci_u12(self):
        assert lucas_u(LucasParams(1, -1), 12) == 144

    def test_base_cases(self):
        for params in (LucasParams(5, 3), LucasParams(-7, 2)):
            assert lucas_u(params, 0) == 0
            assert lucas_u(params, 1) == 1

    def test_u9_of_n_sequence(self):
        assert lucas_u(LucasParams(2, 1), 9) == 9

    def test_u6_of_3_1(self):
        # 0, 1, 3, 8, 21, 55, 144 by hand
        assert [naive_u(3, 1, k) for k in range(7)] == [0, 1, 3, 8, 21, 55, 144]
        assert lucas_u(LucasParams(3, 1), 6) == 144

    @settings(max_examples=500)
    @given(
        st.integers(min_value=-40, max_value=40).filter(lambda v: v != 0),
        st.integers(min_value=-40, max_value=40).filter(lambda v: v != 0),
        st.integers(min_value=0, max_value=200),
    )
    def test_recurrence_and_doubling_agree(self, p, q, n):
        if math.gcd(p, q) != 1:
            p, q = 1, q  # coerce into the domain instead of discarding
        params = LucasParams(p, q)
        assert lucas_u(params, n) == lucas_u_doubling(params, n) == naive_u(p, q, n)


class TestSquareWitness:
    def test_square(self):
        w = square_root_if_square(144)
        assert w.root == 12 and w.is_nonzero_square

    def test_nonsquare(self):
        assert square_root_if_square(143).root is None

    def test_zero_is_flagged(self):
        w = square_root_if_square(0)
        assert w.root == 0 and not w.is_nonzero_square

    def test_negative(self):
        assert square_root_if_square(-4).root is None

    def test_huge_exact(self):
        n = (10**50 + 7) ** 2
        assert square_root_if_square(n).root == 10**50 + 7
        assert square_root_if_square(n - 1).root is None


class TestDegeneracy:
    @pytest.mark.parametrize(
        "p,q,expected",
        [(1, 1, True), (2, 1, True), (-2, 1, True), (1, -1, False), (3, 1, False), (-1, 1, True)],
    )
    def test_examples(self, p, q, expected):
        assert is_degenerate(LucasParams(p, q)) is expected


class TestParams:
    def test_rejects_zero(self):
        with pytest.raises(ParamRejection):
            LucasParams(0, 5)
        with pytest.raises(ParamRejection):
            LucasParams(5, 0)

    def test_rejects_common_factor(self):
        with pytest.raises(ParamRejection):
            LucasParams(6, 9)


class TestSearch:
    def test_u12_box_50(self):
        assert search_square_terms(12, 50) == [(LucasParams(1, -1), 12)]

    def test_u9_box_50(self):
        assert search_square_terms(9, 50) == [
            (LucasParams(-2, 1), 3),
            (LucasParams(2, 1), 3),
        ]

    def test_u12_invariant_under_bound(self):
        expected = [(LucasParams(1, -1), 12)]
        for bound in (10, 50, 100):
            assert search_square_terms(12, bound) == expected

    def test_u2_hits_are_square_p(self):
        hits = {params for params, _ in search_square_terms(2, 10)}
        assert all(params.p in (1, 4, 9) for params in hits)
        assert (LucasParams(4, 3), 2) in search_square_terms(2, 10)

    def test_zero_terms_reported_separately(self):
        zeros = search_zero_terms(12, 3)
        assert LucasParams(1, 1) in zeros
        assert all(lucas_u(z, 12) == 0 for z in zeros)
        squares = {params for params, _ in search_square_terms(12, 3)}
        assert squares.isdisjoint(zeros)

    def test_lexicographic_order(self):
        pairs = list(coprime_pairs(3))
        assert pairs == sorted(pairs)


class TestFactorIdentities:
    def test_u12_product_formula(self):
        for params in coprime_pairs(30):
            p, q = params.p, params.q
            product = (
                p
                * (p * p - 3 * q)
                * (p * p - 2 * q)
                * (p * p - q)
                * (p**4 - 4 * p * p * q + q * q)
            )
            assert product == lucas_u(params, 12)

    def test_u9_product_formula(self):
        for params in coprime_pairs(30):
            p, q = params.p, params.q
            product = (p * p - q) * (p**6 - 6 * p**4 * q + 9 * p * p * q * q - q**3)
            assert product == lucas_u(params, 9)

    def test_u2_u3_closed_forms(self):
        for params in coprime_pairs(15):
            assert lucas_u(params, 2) == params.p
            assert lucas_u(params, 3) == params.p**2 - params.q


class TestTheorem2Families:
    def test_u6_unit_case(self):
        params = theorem2_family("u6", 1, 1)
        assert params == LucasParams(3, 1)
        assert square_root_if_square(lucas_u(params, 6)).root == 12

    def test_u3_case(self):
        params = theorem2_family("u3", 2, 1)
        assert params == LucasParams(2, 3)
        assert lucas_u(params, 3) == 1

    def test_u6_even_a_rejected(self):
        with pytest.raises(ParamRejection, match="not an integer"):
            theorem2_family("u6", 2, 1)

    def test_random_families_give_squares(self):
        rng = random.Random(20240811)
        produced = 0
        while produced < 100:
            a = rng.randrange(-15, 16)
            b = rng.randrange(-15, 16)
            kind = rng.choice(["u3", "u6"])
            try:
                params = theorem2_family(kind, a, b)
            except (ParamRejection, ValueError):
                continue
            produced += 1
            if kind == "u3":
                assert lucas_u(params, 3) == b * b
            else:
                assert square_root_if_square(lucas_u(params, 6)).root is not None
