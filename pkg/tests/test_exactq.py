"""Arithmetic substrate: Gaussian integers, Laurent polynomials in x, fractions."""

import random

import pytest

from shadowcalc.exactq import (GAUSS_I, GAUSS_ONE, GAUSS_ZERO, INFINITE_ORDER,
                               GaussInt, QPoly, QRat, ord_at_i,
                               render_canonical)


def rand_poly(rng, span=6, terms=4):
    out = {}
    for _ in range(terms):
        out[rng.randint(-span, span)] = (rng.randint(-5, 5), rng.randint(-5, 5))
    return QPoly(out)


class TestGaussInt:
    def test_ring_ops(self):
        a = GaussInt(2, 3)
        b = GaussInt(4, -1)
        assert a + b == GaussInt(6, 2)
        assert a - b == GaussInt(-2, 4)
        assert a * b == GaussInt(11, 10)
        assert -a == GaussInt(-2, -3)
        assert a * 0 == GAUSS_ZERO
        assert GAUSS_I * GAUSS_I == GaussInt(-1, 0)

    def test_int_coercion(self):
        assert GaussInt(1, 1) + 2 == GaussInt(3, 1)
        assert 3 - GaussInt(1, 1) == GaussInt(2, -1)

    def test_pow(self):
        assert GAUSS_I ** 4 == GAUSS_ONE
        assert GaussInt(1, 1) ** 2 == GaussInt(0, 2)

    def test_conjugate_norm(self):
        z = GaussInt(3, -4)
        assert z.conjugate() == GaussInt(3, 4)
        assert z.norm() == 25

    def test_exact_div(self):
        # (2+i)(2-i) = 5
        assert GaussInt(5, 0).exact_div(GaussInt(2, 1)) == GaussInt(2, -1)
        assert GaussInt(5, 0).exact_div(GaussInt(3, 0)) is None
        rng = random.Random(7)
        for _ in range(50):
            a = GaussInt(rng.randint(-9, 9), rng.randint(-9, 9))
            b = GaussInt(rng.randint(-9, 9), rng.randint(-9, 9))
            if not b:
                continue
            assert (a * b).exact_div(b) == a


class TestQPoly:
    def test_normalization_drops_zeros(self):
        assert QPoly({3: 0, 1: (0, 0)}) == QPoly.zero()
        assert not QPoly.zero()
        assert QPoly.one().is_zero is False

    def test_grids(self):
        # q lives at x^4, A at x^2
        assert QPoly.from_q({1: 1}) == QPoly.monomial(4)
        assert QPoly.from_a({1: 1}) == QPoly.monomial(2)
        assert QPoly.from_q({2: 1, -1: 3}).on_q_grid()
        assert not QPoly.from_a({1: 1}).on_q_grid()

    def test_ring_ops(self):
        x = QPoly.monomial(1)
        one = QPoly.one()
        assert (x + one) * (x - one) == x * x - one
        assert (x + one) - (x + one) == QPoly.zero()
        assert -(x - one) == one - x
        assert x ** 5 == QPoly.monomial(5)
        assert x.shifted(3) == QPoly.monomial(4)
        assert x.scaled(GAUSS_I) == QPoly.monomial(1, (0, 1))

    def test_negative_pow_rejected(self):
        with pytest.raises(ValueError):
            QPoly.monomial(1) ** -1

    def test_exponent_range(self):
        p = QPoly({5: 1, -2: (0, 3)})
        assert p.min_exp() == -2
        assert p.max_exp() == 5
        assert len(p) == 2
        assert p.coefficient(5) == GAUSS_ONE
        assert p.coefficient(0) == GAUSS_ZERO

    def test_eval_at_q_i(self):
        # x^4 goes to i, so q^2+1 vanishes there
        assert QPoly.from_q({2: 1, 0: 1}).eval_at_q_i() == GAUSS_ZERO
        assert QPoly.from_q({1: 1}).eval_at_q_i() == GAUSS_I
        assert QPoly.monomial(4).eval_at_q_i() == GAUSS_I

    def test_coefficient_sum(self):
        assert QPoly.from_q({3: 2, -1: (0, 1)}).coefficient_sum() == GaussInt(2, 1)

    def test_i_multiplicity(self):
        root = QPoly.from_q({1: 1}) - GAUSS_I  # x^4 - i
        p = root ** 3 * QPoly.from_q({2: 1, 1: 1, 0: 5})
        count, rest = p.i_multiplicity()
        assert count == 3
        assert rest.eval_at_q_i() != GAUSS_ZERO
        assert rest * root ** 3 == p

    def test_exact_div_roundtrip(self):
        rng = random.Random(11)
        done = 0
        while done < 60:
            p = rand_poly(rng)
            d = rand_poly(rng)
            if d.is_zero or len(d) < 2:
                continue
            assert (p * d).exact_div(d) == p
            done += 1

    def test_exact_div_detects_remainder(self):
        d = QPoly.from_q({1: 1, 0: 1})
        p = d * QPoly.from_q({2: 3}) + QPoly.one()
        assert p.exact_div(d) is None
        with pytest.raises(ZeroDivisionError):
            p.exact_div(QPoly.zero())

    def test_exact_div_needs_gaussian_quotient(self):
        assert QPoly.from_q({1: 5}).exact_div(QPoly.from_q({0: 2})) is None
        assert QPoly.from_q({1: 5}).exact_div(QPoly.from_q({0: (2, 1)})) == \
            QPoly.from_q({1: (2, -1)})


class TestQRat:
    def test_constructor_reduces_exact_quotients(self):
        num = QPoly.from_q({3: 1, 1: -2, 0: 4})
        den = QPoly.from_q({1: 1, 0: 1})
        r = QRat(num * den, den)
        assert r.den == QPoly.one()
        assert r.num == num

    def test_monomial_normalization(self):
        # common x powers never survive the constructor
        r = QRat(QPoly.monomial(7), QPoly.monomial(3))
        assert r == QRat(QPoly.monomial(4))
        assert QRat(QPoly.zero(), QPoly.monomial(2)).is_zero

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            QRat(QPoly.one(), QPoly.zero())

    def test_equality_cross_multiplies(self):
        two = QPoly.from_q({0: 2})
        a = QRat(QPoly.from_q({1: 2}), two)
        b = QRat(QPoly.from_q({1: 1}))
        assert a == b

    def test_field_ops(self):
        d = QPoly.from_q({1: 1, 0: 1})
        half = QRat(QPoly.one(), d)
        assert half + half == QRat(QPoly.from_q({0: 2}), d)
        assert half - half == QRat.zero()
        assert half * QRat(d) == QRat.one()
        assert QRat(d) / QRat(d) == QRat.one()
        assert (half ** -2) == QRat(d * d)
        with pytest.raises(ZeroDivisionError):
            QRat.one() / QRat.zero()

    def test_pow_inverse_identity(self):
        rng = random.Random(3)
        for _ in range(20):
            num = rand_poly(rng)
            den = rand_poly(rng)
            if num.is_zero or den.is_zero:
                continue
            r = QRat(num, den)
            assert r ** 3 * r ** -3 == QRat.one()


class TestOrdAtI:
    def test_zero_is_infinite(self):
        assert ord_at_i(QRat.zero()) == INFINITE_ORDER
        assert ord_at_i(QPoly.zero()) == INFINITE_ORDER

    def test_simple_zero_and_pole(self):
        delta = QPoly.from_q({1: -1, -1: -1})
        assert ord_at_i(delta) == 1
        assert ord_at_i(QRat(delta) ** 2) == 2
        assert ord_at_i(QRat(QPoly.one(), delta)) == -1
        assert ord_at_i(QRat.one()) == 0

    def test_unit_shift_invariance(self):
        rng = random.Random(5)
        for _ in range(20):
            p = rand_poly(rng)
            if p.is_zero:
                continue
            k = rng.randint(-6, 6)
            assert ord_at_i(p.shifted(k)) == ord_at_i(p)

    def test_additive_over_products(self):
        rng = random.Random(9)
        for _ in range(20):
            a, b = rand_poly(rng), rand_poly(rng)
            if a.is_zero or b.is_zero:
                continue
            assert ord_at_i(a * b) == ord_at_i(a) + ord_at_i(b)


class TestRender:
    def test_frozen_strings(self):
        delta = QRat(QPoly.from_a({2: -1, -2: -1}))
        assert render_canonical(delta) == "-q - q^-1"
        assert render_canonical(QRat.one()) == "1"
        assert render_canonical(QRat.zero()) == "0"
        assert render_canonical(QRat(QPoly.from_q({1: (0, 1), 0: (2, -3)}))) == \
            "i*q + (2-3i)"

    def test_x_mode_legend(self):
        s = render_canonical(QRat(QPoly.monomial(1)))
        assert s == "x  [x = q^(1/4)]"

    def test_unit_monomial_denominator_folds(self):
        # delta arrives from the state sum as (-q^2 - 1)/q before rendering
        raw = QRat(QPoly.from_q({2: -1, 0: -1}), QPoly.from_q({1: 1}))
        assert render_canonical(raw) == "-q - q^-1"

    def test_vanishing_factor_stripped_from_fractions(self):
        delta = QPoly.from_q({1: 1, -1: 1})
        r = QRat(QPoly.from_q({2: 1, 0: 1}), delta * delta)
        # num carries one factor of x^4 - i, den two; one pair cancels
        assert ord_at_i(r) == -1
        assert "/" in render_canonical(r)
