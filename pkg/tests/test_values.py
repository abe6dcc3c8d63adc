from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetakit.shared_types import ErrorCode, FunctionId, Unsupported, UnsupportedReason, UnsupportedValueError
from zetakit.values import (
    FUNCTION_REGISTRY,
    BetaFunction,
    PiValue,
    beta_functional_check,
    beta_neg_alternating,
    beta_neg_bernoulli,
    beta_neg_euler,
    beta_odd_bernoulli,
    beta_odd_euler,
    eta_even,
    eta_even_recurrence,
    eta_neg,
    evaluate,
    evaluate_or_raise,
    function_from_id,
    lambda_even,
    lambda_even_cosine,
    lambda_neg,
    zeta_even,
    zeta_even_euler,
    zeta_neg,
)


def pi(power, coeff):
    return PiValue.pi_power(power, coeff)


def test_pi_value_arithmetic():
    a = PiValue({2: Fraction(1, 3), 0: 1})
    b = PiValue([(2, Fraction(-1, 3)), (4, 2)])
    assert a + b == PiValue({0: 1, 4: 2})
    assert (a - a).is_zero
    assert a * b == PiValue({2: Fraction(-1, 3), 4: Fraction(17, 9), 6: Fraction(2, 3)})
    assert 3 * a == a.scale(3)
    assert list(b) == [(2, Fraction(-1, 3)), (4, 2)]
    assert PiValue({0: 0, 2: 0}).is_zero
    assert PiValue.rational(Fraction(-1, 12)).as_rational() == Fraction(-1, 12)
    with pytest.raises(ValueError):
        pi(2, 1).as_rational()
    with pytest.raises(ValueError):
        PiValue({-1: 1})


def test_pi_value_text():
    assert PiValue.zero().to_text() == "0"
    assert PiValue.rational(Fraction(-1, 12)).to_text() == "-1/12"
    assert PiValue.rational(3).to_text() == "3"
    assert pi(2, Fraction(1, 12)).to_text() == "(1/12)*pi^2"
    assert PiValue({0: Fraction(1, 2), 1: Fraction(1, 4)}).to_text() == "1/2 + (1/4)*pi^1"


def test_eta_even_examples():
    assert eta_even(1) == pi(2, Fraction(1, 12))
    assert eta_even(2) == pi(4, Fraction(7, 720))
    assert eta_even(3) == pi(6, Fraction(31, 30240))


def test_eta_recurrence_examples():
    assert eta_even_recurrence(1) == pi(2, Fraction(1, 12))
    assert eta_even_recurrence(2) == pi(4, Fraction(7, 720))


def test_zeta_and_lambda_even_examples():
    assert zeta_even(1) == pi(2, Fraction(1, 6))
    assert zeta_even(2) == pi(4, Fraction(1, 90))
    assert zeta_even(3) == pi(6, Fraction(1, 945))
    assert lambda_even(1) == pi(2, Fraction(1, 8))
    assert lambda_even(2) == pi(4, Fraction(1, 96))


def test_printed_euler_formula_has_opposite_sign():
    for k in range(1, 21):
        assert zeta_even_euler(k) == -zeta_even(k)


def test_negative_arguments():
    assert zeta_neg(1) == PiValue.rational(Fraction(-1, 12))
    assert zeta_neg(2).is_zero
    assert zeta_neg(3) == PiValue.rational(Fraction(1, 120))
    assert zeta_neg(0) == PiValue.rational(Fraction(-1, 2))
    assert eta_neg(0) == PiValue.rational(Fraction(1, 2))
    assert eta_neg(1) == PiValue.rational(Fraction(1, 4))
    assert lambda_neg(1) == PiValue.rational(Fraction(1, 12))
    assert lambda_neg(0).is_zero


def test_beta_examples():
    assert beta_neg_bernoulli(1) == PiValue.rational(Fraction(1, 2))
    assert beta_neg_bernoulli(2).is_zero
    assert beta_neg_bernoulli(3) == PiValue.rational(Fraction(-1, 2))
    assert beta_neg_euler(0) == PiValue.rational(Fraction(1, 2))
    assert beta_neg_euler(1).is_zero
    assert beta_neg_euler(2) == PiValue.rational(Fraction(-1, 2))
    assert beta_odd_bernoulli(0) == pi(1, Fraction(1, 4))
    assert beta_odd_bernoulli(1) == pi(3, Fraction(1, 32))
    assert beta_odd_bernoulli(2) == pi(5, Fraction(5, 1536))
    assert beta_odd_euler(0) == pi(1, Fraction(1, 4))
    assert beta_odd_euler(1) == pi(3, Fraction(1, 32))


def test_cross_routes():
    for k in range(1, 61):
        assert eta_even(k) == eta_even_recurrence(k)
        assert beta_neg_bernoulli(k) == beta_neg_euler(k - 1)
    for k in range(0, 61):
        assert beta_odd_bernoulli(k) == beta_odd_euler(k)


def test_supplementary_routes():
    for k in range(1, 41):
        assert lambda_even_cosine(k) == lambda_even(k)
        assert beta_neg_alternating(k) == beta_neg_euler(k - 1)


def test_functional_equation():
    assert all(beta_functional_check(k) for k in range(1, 41))


def test_relation_identities():
    points = list(range(-20, 1)) + list(range(2, 41, 2))
    for s in points:
        z = evaluate(FunctionId.ZETA, s)
        e = evaluate(FunctionId.ETA, s)
        lam = evaluate(FunctionId.LAMBDA, s)
        assert z + e == lam.scale(2)
        assert e == z.scale(1 - Fraction(2) ** (1 - s))
        assert lam == z.scale(1 - Fraction(2) ** (-s))


def test_trivial_zeros_through_evaluate():
    for k in range(1, 51):
        assert evaluate("zeta", -2 * k).is_zero


def test_coefficients_are_positive():
    for k in range(1, 41):
        assert eta_even(k).coefficient(2 * k) > 0
        assert zeta_even(k).coefficient(2 * k) > 0


def test_evaluate_examples():
    assert evaluate(FunctionId.ZETA, -1) == PiValue.rational(Fraction(-1, 12))
    assert evaluate("eta", 2) == pi(2, Fraction(1, 12))
    assert evaluate("beta", 3) == pi(3, Fraction(1, 32))
    assert evaluate("beta", -2) == PiValue.rational(Fraction(-1, 2))


@pytest.mark.parametrize(
    "fn, s, reason",
    [
        ("zeta", 1, UnsupportedReason.POLE),
        ("lambda", 1, UnsupportedReason.POLE),
        ("eta", 1, UnsupportedReason.NO_CLOSED_FORM),
        ("zeta", 3, UnsupportedReason.NO_CLOSED_FORM),
        ("eta", 5, UnsupportedReason.NO_CLOSED_FORM),
        ("beta", 2, UnsupportedReason.NO_CLOSED_FORM),
        ("beta", 10, UnsupportedReason.NO_CLOSED_FORM),
    ],
)
def test_unsupported_arguments(fn, s, reason):
    result = evaluate(fn, s)
    assert isinstance(result, Unsupported)
    assert result.reason is reason
    assert result.s == s


def test_evaluate_or_raise():
    with pytest.raises(UnsupportedValueError) as exc:
        evaluate_or_raise("zeta", 1)
    assert exc.value.error_code is ErrorCode.POLE_AT_ONE
    assert "Catalan" in evaluate("beta", 2).detail
    assert evaluate_or_raise("zeta", 2) == pi(2, Fraction(1, 6))


def test_registry():
    assert set(FUNCTION_REGISTRY) == set(FunctionId)
    assert isinstance(function_from_id("beta"), BetaFunction)
    with pytest.raises(ValueError, match="Unsupported function: gamma"):
        function_from_id("gamma")


@given(st.integers(min_value=-60, max_value=60))
def test_evaluate_results_have_one_term(s):
    result = evaluate("zeta", s)
    if isinstance(result, Unsupported):
        assert s == 1 or s % 2 == 1
    else:
        power, _ = result.single_term()
        assert power == (s if s > 0 else 0)
