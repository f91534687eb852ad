import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sieveforest.qseries import (NotPolynomial, PoleAtRoot, QPolynomial,
                                 QProductExpr, cyclotomic,
                                 eval_at_primitive_root, eval_expr_at_root,
                                 q_binomial, q_int, q_multinomial,
                                 shape_predicates, to_polynomial)


class TestQPolynomial:
    def test_trailing_zeros_stripped(self):
        assert QPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert QPolynomial((0, 0)).coeffs == ()

    def test_arithmetic(self):
        p = QPolynomial((1, 1))
        assert (p * p).coeffs == (1, 2, 1)
        assert (p + p).coeffs == (2, 2)
        assert (p - p).is_zero

    def test_exact_division(self):
        num = q_int(6) * q_int(4)
        quo = num // q_int(2)
        assert quo * q_int(2) == num

    def test_division_remainder(self):
        q, r = divmod(QPolynomial((0, 0, 1)), QPolynomial((1, 1)))
        assert q * QPolynomial((1, 1)) + r == QPolynomial((0, 0, 1))

    def test_str_ascending(self):
        assert str(QPolynomial((1, 0, 2, 1))) == "1 + 2q^2 + q^3"
        assert str(QPolynomial(())) == "0"

    def test_json_round_trip(self):
        p = QPolynomial((10**30, -1, 7))
        assert QPolynomial.from_json(p.to_json()) == p
        assert json.loads(p.to_json())["coeffs"][0] == str(10**30)

    def test_at_one(self):
        assert q_int(7).at_one() == 7

    @given(st.lists(st.integers(-9, 9), max_size=6),
           st.lists(st.integers(-9, 9), max_size=6))
    def test_product_at_one_commutes(self, a, b):
        p, q = QPolynomial(a), QPolynomial(b)
        assert (p * q).at_one() == p.at_one() * q.at_one()


class TestCyclotomic:
    def test_small_values(self):
        assert cyclotomic(1).coeffs == (-1, 1)
        assert cyclotomic(2).coeffs == (1, 1)
        assert cyclotomic(4).coeffs == (1, 0, 1)
        assert cyclotomic(6).coeffs == (1, -1, 1)
        assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)

    def test_product_over_divisors(self):
        for m in range(1, 13):
            prod = QPolynomial((1,))
            for d in range(1, m + 1):
                if m % d == 0:
                    prod = prod * cyclotomic(d)
            target = QPolynomial((-1,) + (0,) * (m - 1) + (1,))
            assert prod == target


class TestQIntegers:
    def test_q_int(self):
        assert q_int(4).coeffs == (1, 1, 1, 1)

    def test_q_binomial_42(self):
        assert to_polynomial(q_binomial(4, 2)).coeffs == (1, 1, 2, 1, 1)

    def test_q_multinomial_matches_binomial_product(self):
        lhs = to_polynomial(q_multinomial(5, (2, 2, 1)))
        rhs = to_polynomial(q_binomial(5, 2) * q_binomial(3, 2))
        assert lhs == rhs

    def test_expr_at_one(self):
        assert q_binomial(6, 3).at_one() == Fraction(20)

    def test_expr_json_round_trip(self):
        e = QProductExpr(3, (5, 2), (3,), Fraction(7, 2))
        assert QProductExpr.from_json(e.to_json()) == e


class TestEvaluation:
    def test_ord3_example(self):
        expr = q_binomial(6, 3) * QProductExpr(den=(4,))
        poly = to_polynomial(expr)
        assert poly.coeffs == (1, 0, 1, 1, 1, 0, 1)
        values = [eval_at_primitive_root(poly, 6 // __import__("math").gcd(e, 6))
                  if e else poly.at_one() for e in range(6)]
        assert values == [5, 0, 2, 3, 2, 0]

    def test_expr_route_matches_polynomial_route(self):
        expr = q_binomial(6, 3) * QProductExpr(den=(4,))
        poly = to_polynomial(expr)
        for d in (1, 2, 3, 6):
            assert eval_expr_at_root(expr, d) == eval_at_primitive_root(poly, d)

    def test_pole_detected(self):
        with pytest.raises(PoleAtRoot):
            eval_expr_at_root(QProductExpr(den=(2,)), 2)

    def test_not_polynomial(self):
        with pytest.raises(NotPolynomial):
            to_polynomial(QProductExpr(num=(2,), den=(3,)))

    @settings(deadline=None, max_examples=60)
    @given(st.integers(1, 7), st.integers(1, 7), st.data())
    def test_binomial_expr_eval_agrees(self, k, extra, data):
        # integrality at a d-th root of unity is guaranteed when d | m
        m = k + extra
        d = data.draw(st.sampled_from([p for p in range(1, m + 1) if m % p == 0]))
        expr = q_binomial(m, k)
        poly = to_polynomial(expr)
        assert eval_expr_at_root(expr, d) == eval_at_primitive_root(poly, d)

    def test_evaluation_at_one_is_coefficient_sum(self):
        poly = QPolynomial((3, -1, 4))
        assert eval_at_primitive_root(poly, 1) == 6


class TestShapePredicates:
    def test_reciprocal_and_unimodal(self):
        shapes = shape_predicates(to_polynomial(q_binomial(4, 2)))
        assert shapes == {"is_reciprocal": True, "is_unimodal": True,
                          "nonneg": True}

    def test_one_plus_q_cubed_not_unimodal(self):
        # single-peak reading: the interior zero between the two ones breaks it
        shapes = shape_predicates(QPolynomial((1, 0, 0, 1)))
        assert shapes["is_reciprocal"] is True
        assert shapes["is_unimodal"] is False

    def test_negative_coefficient(self):
        assert shape_predicates(QPolynomial((1, -1)))["nonneg"] is False
