import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclicquad.exactnum import (
    ApproxScalar,
    IncompatibleRadicands,
    NegativeRadicand,
    Surd,
    approx,
    normalize_surd,
    render_decimal,
    square_free_split,
    surd_add,
    surd_cmp,
    surd_mul,
    to_exact,
)


class TestNormalize:
    def test_extracts_square_factors(self):
        s = normalize_surd(1, 19800)
        assert s.coefficient == 30 and s.radicand == 22

    def test_perfect_square(self):
        s = normalize_surd(1, 9)
        assert s.coefficient == 3 and s.radicand == 1

    def test_zero_coefficient_absorbs_radicand(self):
        s = normalize_surd(0, 7)
        assert s.coefficient == 0 and s.radicand == 1

    def test_zero_radicand_gives_zero(self):
        s = Surd(5, 0)
        assert s.coefficient == 0 and s.radicand == 1

    def test_negative_radicand_rejected(self):
        with pytest.raises(NegativeRadicand):
            Surd(1, -2)

    def test_idempotent(self):
        rng = random.Random(7)
        for _ in range(200):
            s = Surd(Fraction(rng.randint(-50, 50), rng.randint(1, 50)), rng.randint(1, 10**6))
            again = Surd(s.coefficient, s.radicand)
            assert again.coefficient == s.coefficient
            assert again.radicand == s.radicand

    @given(st.integers(min_value=1, max_value=10**12))
    def test_square_free_split_reconstructs(self, n):
        outer, core = square_free_split(n)
        assert outer * outer * core == n
        # core has no square divisor
        assert square_free_split(core) == (1, core)


class TestArithmetic:
    def test_mul_examples(self):
        assert surd_mul(Surd(30, 22), Surd(30, 22)) == 19800
        assert surd_mul(Surd(1, 2), Surd(1, 2)) == 2
        assert surd_mul(Surd(Fraction(1, 2), 3), Surd(4, 12)) == 12

    def test_add_examples(self):
        assert surd_add(Surd(2, 5), Surd(3, 5)) == Surd(5, 5)
        assert surd_add(Surd(2, 5), Surd(0)) == Surd(2, 5)
        with pytest.raises(IncompatibleRadicands):
            surd_add(Surd(2, 5), Surd(1, 3))

    def test_division_closed(self):
        assert Surd(1, 6) / Surd(1, 2) == Surd(1, 3)
        assert Surd(3, 5) / 3 == Surd(1, 5)
        assert 10 / Surd(1, 2) == Surd(5, 2)

    def test_mul_commutative_associative(self):
        rng = random.Random(11)
        for _ in range(1000):
            a, b, c = (
                Surd(Fraction(rng.randint(-20, 20), rng.randint(1, 20)), rng.randint(1, 500))
                for _ in range(3)
            )
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    def test_binomial_square_same_radicand(self):
        rng = random.Random(13)
        for _ in range(1000):
            r = rng.randint(1, 300)
            a = Surd(Fraction(rng.randint(-30, 30), rng.randint(1, 30)), r)
            b = Surd(Fraction(rng.randint(-30, 30), rng.randint(1, 30)), r)
            lhs = (a + b) * (a + b)
            rhs = a * a + 2 * a * b + b * b
            assert lhs == rhs


class TestComparison:
    def test_lilavati_bracket(self):
        assert surd_cmp(Surd(30, 22), 141) < 0
        assert surd_cmp(Surd(30, 22), 138) > 0

    def test_equal_normalized_forms(self):
        assert surd_cmp(Surd(2, 2), Surd(1, 8)) == 0

    def test_cmp_agrees_with_high_precision_approx(self):
        rng = random.Random(17)
        for _ in range(300):
            a = Surd(Fraction(rng.randint(-40, 40), rng.randint(1, 40)), rng.randint(1, 400))
            b = Surd(Fraction(rng.randint(-40, 40), rng.randint(1, 40)), rng.randint(1, 400))
            gap = a.approx(60).value - b.approx(60).value
            if abs(gap) > Fraction(1, 10**55):
                assert surd_cmp(a, b) == (1 if gap > 0 else -1)


class TestApprox:
    def test_root_19800(self):
        got = Surd(30, 22).approx(7)
        assert abs(got.value - Fraction("140.7124")) < Fraction(5, 10**4)

    def test_rational_value(self):
        assert approx(5, 3).decimal() == "5.00"

    def test_root_two(self):
        assert Surd(1, 2).approx(5).decimal() == "1.4142"

    def test_error_bound(self):
        # squared approximation must straddle the radicand tightly
        for digits in (10, 30, 50):
            v = Surd(1, 7).approx(digits).value
            assert abs(v * v - 7) < Fraction(1, 10 ** (digits - 2))


class TestRendering:
    def test_fixed_point_format(self):
        assert render_decimal(Fraction(575, 4), 10) == "143.7500000"
        assert render_decimal(Fraction(-3, 2), 4) == "-1.500"
        assert render_decimal(Fraction(0), 5) == "0.0000"

    def test_no_exponent_large_values(self):
        text = render_decimal(Fraction(10**30), 5)
        assert "e" not in text and "E" not in text

    def test_approx_scalar_ops(self):
        a = ApproxScalar(Fraction(2), 40)
        b = ApproxScalar(Fraction(1, 3), 20)
        assert (a + b).digits == 20
        assert (a * b).value == Fraction(2, 3)
        root = a.sqrt()
        assert abs(root.value * root.value - 2) < Fraction(1, 10**38)


def test_to_exact_collapses_rational_surd():
    assert to_exact(Surd(Fraction(3, 2), 1)) == Fraction(3, 2)
    assert isinstance(to_exact(Surd(Fraction(3, 2), 1)), Fraction)
    assert isinstance(to_exact(Surd(1, 2)), Surd)
