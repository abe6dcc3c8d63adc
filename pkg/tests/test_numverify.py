import asyncio
import math
from fractions import Fraction

import pytest

from zetakit.numverify import (
    PI_DECIMALS,
    NumericConfig,
    SuiteName,
    TrigSeriesVariant,
    VerificationReport,
    pi_to_rational,
    run_suite,
    run_suite_async,
    sum_alternating,
    sum_direct,
    to_float,
    verify_sine_identity,
    verify_value,
)
from zetakit.shared_types import ErrorCode, FunctionId, ZetaKitError
from zetakit.values import PiValue


def test_pi_to_rational():
    assert pi_to_rational(2) == Fraction(157, 50)
    assert pi_to_rational(6) == Fraction(3141592, 10 ** 6)
    assert pi_to_rational(100) == Fraction(int("3" + PI_DECIMALS), 10 ** 100)
    assert len(PI_DECIMALS) == 100
    for digits in (0, 101):
        with pytest.raises(ZetaKitError) as exc:
            pi_to_rational(digits)
        assert exc.value.error_code is ErrorCode.DIGITS_OUT_OF_RANGE


def test_to_float():
    assert to_float(PiValue.pi_power(2, Fraction(1, 12)), 30) == pytest.approx(math.pi ** 2 / 12, abs=1e-12)
    assert to_float(PiValue.rational(Fraction(-1, 12))) == pytest.approx(-1 / 12, abs=1e-15)
    assert to_float(PiValue.zero()) == 0.0


def test_numeric_config_validation():
    for kwargs in ({"tolerance": 0}, {"max_terms": 0}, {"acceleration_depth": -1}, {"pi_digits": 101}):
        with pytest.raises(ZetaKitError) as exc:
            NumericConfig(**kwargs)
        assert exc.value.error_code is ErrorCode.INVALID_CONFIG
    cfg = NumericConfig().with_overrides(tolerance=1e-6, max_terms=None)
    assert cfg.tolerance == 1e-6
    assert cfg.max_terms == 100_000


def test_report_passed_is_derived():
    report = VerificationReport("x", 1.0, 1.5, 0.5, 1.0, 10)
    assert report.passed
    assert not VerificationReport("y", 1.0, 3.0, 2.0, 1.0, 10).passed
    assert report.to_dict()["passed"] is True


def test_sum_alternating():
    est = sum_alternating(lambda u: (-1) ** (u - 1) / u ** 2)
    assert abs(est.value - math.pi ** 2 / 12) < 1e-10
    est = sum_alternating(lambda u: (-1) ** (u - 1) / (2 * u - 1))
    assert est.value == pytest.approx(math.pi / 4, abs=1e-9)
    cfg = NumericConfig()
    assert abs(est.value - est.raw_partial_sum) <= est.remainder_bound + cfg.tolerance
    assert sum_alternating(lambda u: 0.0).value == 0.0


def test_sum_alternating_rejects_constant_sign():
    with pytest.raises(ZetaKitError) as exc:
        sum_alternating(lambda u: 1 / u ** 2)
    assert exc.value.error_code is ErrorCode.NON_ALTERNATING


def test_sum_direct():
    est = sum_direct(1, 0, 2)
    assert est.value == pytest.approx(math.pi ** 2 / 6, abs=1e-12)
    assert est.terms_used == 100_000
    est = sum_direct(2, -1, 2)
    assert est.value == pytest.approx(math.pi ** 2 / 8, abs=1e-12)
    with pytest.raises(ZetaKitError):
        sum_direct(1, 0, 1)


@pytest.mark.parametrize("fn, s", [(FunctionId.ETA, 2), (FunctionId.BETA, 3), (FunctionId.ZETA, 4), (FunctionId.BETA, 1)])
def test_verify_value_examples(fn, s):
    report = verify_value(fn, s)
    assert report.passed
    assert report.deviation <= 1e-9


def test_verify_value_errors():
    with pytest.raises(ZetaKitError) as exc:
        verify_value("zeta", 3)
    assert exc.value.error_code is ErrorCode.UNSUPPORTED
    with pytest.raises(ZetaKitError) as exc:
        verify_value("zeta", -2)
    assert exc.value.error_code is ErrorCode.DOMAIN_VIOLATION


def test_refinement_does_not_hurt():
    for fn, s in [("eta", 4), ("zeta", 2), ("lambda", 6), ("beta", 5)]:
        coarse = verify_value(fn, s, NumericConfig(max_terms=1_000))
        fine = verify_value(fn, s, NumericConfig(max_terms=2_000))
        assert fine.deviation <= coarse.deviation + coarse.tolerance


def test_sine_identity_at_half_pi():
    report = verify_sine_identity(1, math.pi / 2, TrigSeriesVariant.SINE)
    assert report.rhs == pytest.approx(math.pi ** 3 / 32, abs=1e-12)
    assert report.lhs == pytest.approx(0.968946146, abs=1e-8)
    assert report.deviation <= 1e-8


def test_sine_identity_trivial_points():
    report = verify_sine_identity(0, 0.0, TrigSeriesVariant.ALTERNATING_SINE)
    assert report.lhs == 0.0
    assert report.rhs == 0.0
    report = verify_sine_identity(2, math.pi, "alternating-sine")
    assert report.rhs == pytest.approx(0.0, abs=1e-12)
    assert report.passed


@pytest.mark.parametrize("variant", list(TrigSeriesVariant))
def test_sine_identity_variants(variant):
    lo, hi = variant.interval
    for k in range(max(variant.min_k, 1), 4):
        for j in range(1, 8):
            x = lo + (hi - lo) * j / 8
            assert verify_sine_identity(k, x, variant).deviation <= 1e-8


def test_sine_identity_domain():
    cases = [
        (1, 4.0, TrigSeriesVariant.ALTERNATING_SINE),
        (1, -0.1, TrigSeriesVariant.SINE),
        (7, 1.0, TrigSeriesVariant.ALTERNATING_SINE),
        (0, 1.0, TrigSeriesVariant.SINE),
        (1, 1.0, TrigSeriesVariant.ALTERNATING_COSINE),
    ]
    for k, x, variant in cases:
        with pytest.raises(ZetaKitError) as exc:
            verify_sine_identity(k, x, variant)
        assert exc.value.error_code is ErrorCode.DOMAIN_VIOLATION


def test_values_suite():
    reports = run_suite("values")
    assert len(reports) == 20
    assert all(r.passed for r in reports)
    names = [r.name for r in reports]
    assert names == sorted(names)
    assert len(set(names)) == len(names)


def test_identities_suite():
    reports = run_suite(SuiteName.IDENTITIES)
    assert len(reports) >= 20
    assert all(r.passed for r in reports), [r.name for r in reports if not r.passed]
    assert any("sine k=1 x=1.5707963268" in r.name for r in reports)


def test_exact_suites():
    functional = run_suite("functional-equation")
    assert len(functional) == 40
    assert all(r.passed and r.deviation == 0 for r in functional)
    cross = run_suite("cross-routes")
    assert all(r.passed and r.deviation == 0 for r in cross)


def test_all_suite_combines_the_others():
    reports = asyncio.run(run_suite_async("all"))
    expected = sum(len(run_suite(name)) for name in ("values", "identities", "functional-equation", "cross-routes"))
    assert len(reports) == expected


def test_unknown_suite():
    with pytest.raises(ZetaKitError) as exc:
        run_suite("nosuch")
    assert exc.value.error_code is ErrorCode.UNKNOWN_SUITE


@pytest.mark.parametrize("variant", [TrigSeriesVariant.ALTERNATING_SINE, TrigSeriesVariant.ALTERNATING_SINE_BERNOULLI])
@pytest.mark.parametrize("x", [1.0, math.pi / 2, -2.5])
def test_sine_identity_k0(variant, x):
    report = verify_sine_identity(0, x, variant)
    assert report.rhs == pytest.approx(x / 2, abs=1e-15)
    assert report.passed, report.deviation


def test_sine_identity_k0_rejects_jump():
    for x in (math.pi, -math.pi):
        with pytest.raises(ZetaKitError) as exc:
            verify_sine_identity(0, x, TrigSeriesVariant.ALTERNATING_SINE)
        assert exc.value.error_code is ErrorCode.DOMAIN_VIOLATION


def test_to_float_beyond_range():
    assert to_float(PiValue.rational(Fraction(10) ** 400)) == math.inf
    assert to_float(PiValue.rational(-Fraction(10) ** 400)) == -math.inf
