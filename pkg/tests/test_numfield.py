import math
import random
from fractions import Fraction

import pytest

from lucas_squares.numfield import (
    NumberField,
    PadicNfElement,
    PrecisionError,
    ResidueField,
    field_k,
    field_l,
    is_inert,
    lambda_candidates,
    load_fields,
    norm_equation_sign_constraints,
    positivity_filter,
)

K = field_k()
L = field_l()


def random_element(field, rng, span=9):
    return field.element(
        [Fraction(rng.randrange(-span, span + 1), rng.randrange(1, 4)) for _ in range(field.degree)]
    )


class TestArithmetic:
    def test_cubic_reduction(self):
        a = L.alpha
        assert a * (a * a) == L.element([1, 3, 0])

    def test_inverse_exists_for_unit(self):
        e2 = L.element([1, 1, 0])
        assert e2.norm() == -1
        assert e2 * (L.one / e2) == L.one

    def test_quadratic_unit(self):
        s3 = K.alpha
        assert (2 + s3) * (2 - s3) == K.one

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            L.one / L.zero

    def test_pow_negative(self):
        a = L.alpha
        assert a**-1 == L.one / a
        assert a**-1 == L.element([-3, 0, 1])  # 1/alpha = alpha^2 - 3


class TestNorms:
    def test_unit_norms(self):
        assert L.alpha.norm() == 1
        assert L.element([1, 1, 0]).norm() == -1

    def test_linear_norm_is_minpoly_value(self):
        assert L.element([1, -1, 0]).norm() == -3  # Norm(1 - alpha) = f(1)

    def test_multiplicativity(self):
        rng = random.Random(7)
        for _ in range(500):
            a = random_element(L, rng)
            b = random_element(L, rng)
            assert (a * b).norm() == a.norm() * b.norm()

    def test_matrix_norm_equals_resultant_norm(self):
        rng = random.Random(11)
        for field in (K, L):
            for _ in range(100):
                a = random_element(field, rng)
                assert field.norm(a) == field.norm_via_resultant(a)

    def test_norm_is_product_of_embeddings(self):
        rng = random.Random(13)
        a = random_element(L, rng)
        exact = a.norm()
        width = Fraction(1, 10**8)
        lo, hi = Fraction(1), Fraction(1)
        for i in range(3):
            ilo, ihi = L.embedding_interval(a, i, width)
            pairs = [lo * ilo, lo * ihi, hi * ilo, hi * ihi]
            lo, hi = min(pairs), max(pairs)
        assert lo <= exact <= hi


class TestGalois:
    def test_sigma_alpha(self):
        assert L.sigma(L.alpha) == L.element([-2, -1, 1])

    def test_sigma_on_norm_form_coefficient(self):
        assert L.sigma(L.element([-5, 1, 1])) == L.element([-5, -2, 1])

    def test_sigma_fixes_rationals(self):
        assert L.sigma(L.from_int(1)) == L.one
        assert L.sigma(L.from_int(-7)) == L.from_int(-7)

    def test_sigma_is_ring_homomorphism_of_order_3(self):
        rng = random.Random(17)
        for _ in range(200):
            a = random_element(L, rng)
            b = random_element(L, rng)
            assert L.sigma(a + b) == L.sigma(a) + L.sigma(b)
            assert L.sigma(a * b) == L.sigma(a) * L.sigma(b)
            assert L.sigma(L.sigma(L.sigma(a))) == a

    def test_sigma_unsupported_on_k(self):
        with pytest.raises(ValueError, match="Galois"):
            K.sigma(K.alpha)


class TestEmbeddings:
    def test_norm_form_coefficient_positive_at_top_root(self):
        c = L.element([-5, 1, 1])
        lo, hi = L.embedding_interval(c, 2, Fraction(1, 10**6))
        assert Fraction(41147, 10**5) < lo < hi < Fraction(41148, 10**5)

    def test_negated_unit_negative(self):
        assert L.embedding_sign(-(L.one + L.alpha), 2) == -1

    def test_rational_constant(self):
        seven = L.from_int(7)
        for i in range(3):
            lo, hi = L.embedding_interval(seven, i, Fraction(1, 100))
            assert lo == hi == 7

    def test_zero_sign(self):
        assert L.embedding_sign(L.zero, 0) == 0

    def test_roots_sorted_and_correct(self):
        mids = [r.midpoint() for r in L.real_roots()]
        assert mids == sorted(mids)
        # alpha_0 = 1.8793852415... is the largest root
        L.real_roots()[2].refine(10)
        r = L.real_roots()[2]
        assert Fraction(18793, 10**4) < r.midpoint() < Fraction(18795, 10**4)


class TestLambdaFilter:
    def test_four_candidates_norm_one(self):
        cands = lambda_candidates(L)
        assert len(cands) == 4
        assert all(c.norm() == 1 for c in cands)
        assert L.one in cands

    def test_plus_p2_constraints_leave_one_and_alpha(self):
        c = L.element([-5, 1, 1])
        survivors = positivity_filter(
            lambda_candidates(L), norm_equation_sign_constraints(L, 1, c)
        )
        assert survivors == [L.one, L.alpha]

    def test_minus_p2_constraints_leave_alpha(self):
        c = L.element([-5, 1, 1])
        survivors = positivity_filter(
            lambda_candidates(L), norm_equation_sign_constraints(L, -1, c)
        )
        assert survivors == [L.alpha]

    def test_empty_candidates(self):
        assert positivity_filter([], [(2, 1)]) == []

    def test_lambda_epsilon1_witness(self):
        # lambda = alpha admits (P, R, U) = (0, 1, 4 - alpha^2):
        # -5 + alpha + alpha^2 = alpha * (4 - alpha^2)^2
        u = L.element([4, 0, -1])
        assert L.alpha * u * u == L.element([-5, 1, 1])


class TestPadic:
    def test_inertness_certificates(self):
        assert is_inert(K.min_poly, 7)
        assert is_inert(L.min_poly, 2)
        assert not is_inert(K.min_poly, 11)  # 3 is a QR mod 11 (5^2 = 25)

    def test_lift_refuses_split_prime(self):
        with pytest.raises(ValueError, match="not inert"):
            K.lift(K.alpha, 11, 5)

    def test_lift_refuses_bad_denominator(self):
        with pytest.raises(ValueError, match="p-integral"):
            K.lift(K.element([Fraction(1, 7), 0]), 7, 5)

    def test_beta_lift_is_unit(self):
        beta = K.element([Fraction(1, 8), Fraction(-1, 24)])
        assert beta == (K.from_int(3) - K.alpha) / 24
        lifted = K.lift(beta, 7, 12)
        assert lifted.is_unit()
        assert lifted * lifted.unit_inverse() == K.lift(K.one, 7, 12)

    def test_valuations(self):
        assert K.lift(7 * K.alpha, 7, 10).valuation() == 1
        assert K.lift(K.zero, 7, 10).valuation() == math.inf
        assert K.lift(K.from_int(7 * 94), 7, 10).valuation() == 1

    def test_lift_is_ring_homomorphism(self):
        rng = random.Random(23)
        for _ in range(200):
            a = random_element(L, rng)
            b = random_element(L, rng)
            if any(c.denominator % 2 == 0 for c in (a.coords + b.coords)):
                continue
            la, lb = L.lift(a, 2, 16), L.lift(b, 2, 16)
            assert la + lb == L.lift(a + b, 2, 16)
            assert la * lb == L.lift(a * b, 2, 16)

    def test_precision_tracks_minimum(self):
        a = K.lift(K.alpha, 7, 10)
        b = K.lift(K.one, 7, 6)
        assert (a * b).precision == 6
        assert (a + b).precision == 6

    def test_scale_down(self):
        a = K.lift(49 * K.alpha, 7, 10)
        assert a.scale_down(2).valuation() == 0
        assert a.scale_down(2).precision == 8
        with pytest.raises(ValueError):
            K.lift(K.alpha, 7, 10).scale_down(1)

    def test_element_valuation_matches_lift(self):
        rng = random.Random(29)
        for _ in range(100):
            a = random_element(L, rng)
            if a.is_zero() or any(c.denominator % 2 == 0 for c in a.coords):
                continue
            v = a.valuation(2)
            if 0 <= v < 10:
                assert L.lift(a, 2, 10).valuation() == v


class TestResidueField:
    def test_gf49_square_detection(self):
        rf = ResidueField(K, 7)
        squares = {c.coords for e in rf.all_elements() if not e.is_zero() for c in [e * e]}
        for e in rf.all_elements():
            if e.is_zero():
                continue
            assert rf.is_square(e) == (e.coords in squares)

    def test_gf8_inverse(self):
        rf = ResidueField(L, 2)
        for e in rf.all_elements():
            if e.is_zero():
                continue
            assert e * rf.inverse(e) == rf.one

    def test_field_size(self):
        assert len(list(ResidueField(L, 2).all_elements())) == 8


class TestLoadedSpecs:
    def test_versioned_load(self):
        fields = load_fields()
        assert set(fields) == {"K", "L"}

    def test_trusted_annotations_verifiable_parts(self):
        # discriminant of x^3 + px + q is -4p^3 - 27q^2
        assert -4 * (-3) ** 3 - 27 * (-1) ** 2 == 81 == L.trusted["discriminant"]
        # (-1 + alpha)^3 is 3 times a unit, and Norm(-1 + alpha) = -3
        pi = L.element([-1, 1, 0])
        assert pi.norm() == -3
        cubed = pi * pi * pi
        ratio = cubed / 3
        assert ratio.norm() in (1, -1)

    def test_reducible_poly_rejected(self):
        with pytest.raises(ValueError, match="reducible"):
            NumberField("bad", (-4, 0, 1))  # x^2 - 4
