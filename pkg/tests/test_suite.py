import math

import pytest
from hypothesis import given, strategies as st

from ccbench.argument import SignedComplex
from ccbench.errors import CapabilityError, SuiteRunError
from ccbench.fpcore import Precision, copy_sign, format_params, sign_bit
from ccbench.provider import BuiltinProvider
from ccbench.suite import (
    UNSUPPORTED_SYMBOL,
    AnyFinite,
    ExactSigned,
    LowerBoundedFinite,
    ProviderCapabilities,
    SignedInf,
    SignedZero,
    SubnormalExpected,
    TestCase,
    build_suite,
    classify_case,
    classify_component,
    run_suite,
)

B32, B64 = Precision.BINARY32, Precision.BINARY64
CAPS = ProviderCapabilities(True, frozenset({B32, B64}))
CAPS_NO_SUBNORMAL = ProviderCapabilities(False, frozenset({B32, B64}))

EXPECTED_COUNTS = {
    "log": 6,
    "sqrt": 8,
    "asin": 8,
    "acos": 8,
    "atan": 12,
    "asinh": 8,
    "acosh": 8,
    "atanh": 12,
}


class TestBuildSuite:
    def test_seventy_cases(self, prec):
        assert len(build_suite(prec)) == 70

    def test_per_function_counts(self, prec):
        cases = build_suite(prec)
        for fn, n in EXPECTED_COUNTS.items():
            assert sum(1 for c in cases if c.function == fn) == n, fn

    def test_ids_unique_and_stable(self, prec):
        first = [c.case_id for c in build_suite(prec)]
        second = [c.case_id for c in build_suite(prec)]
        assert first == second
        assert len(set(first)) == 70

    def test_deterministic(self, prec):
        assert build_suite(prec) == build_suite(prec)

    def test_known_ids_present(self):
        ids = {c.case_id for c in build_suite(B64)}
        for cid in (
            "atan/+0+ih",
            "atan/-0-i(1+eps)",
            "log/-h+i0",
            "sqrt/+0-i0",
            "acosh/-h-i0",
            "atanh/(1+eps)+i0",
            "asinh/-0-ih",
        ):
            assert cid in ids

    def test_acosh_points_follow_test_design_text(self):
        # -h, -1, 0 and 1, on both sides of the real axis
        inputs = {(c.input.re, sign_bit(c.input.im)) for c in build_suite(B64) if c.function == "acosh"}
        h = format_params(B64).h
        assert inputs == {
            (-h, False), (-1.0, False), (0.0, False), (1.0, False),
            (-h, True), (-1.0, True), (0.0, True), (1.0, True),
        }

    def test_expectation_shapes(self):
        by_id = {c.case_id: c for c in build_suite(B64)}
        c = by_id["atan/+0+ih"]
        assert isinstance(c.expect_re, ExactSigned) and c.expect_re.value == math.pi / 2
        assert isinstance(c.expect_im, SubnormalExpected) and not c.expect_im.negative
        c = by_id["atan/-0+i1"]
        assert isinstance(c.expect_re, AnyFinite)
        assert c.expect_im == SignedInf(False)
        c = by_id["asin/-h-i0"]
        assert isinstance(c.expect_re, ExactSigned) and c.expect_re.negative
        assert c.expect_im == LowerBoundedFinite(710.0, True)
        c = by_id["log/-1+i0"]
        assert c.expect_re == SignedZero(None)
        assert isinstance(c.expect_im, ExactSigned) and c.expect_im.value == math.pi
        c = by_id["acosh/1-i0"]
        assert c.expect_re == SignedZero(None)
        assert c.expect_im == SignedZero(True)
        c = by_id["sqrt/+0-i0"]
        assert c.expect_re == SignedZero(None) and c.expect_im == SignedZero(True)
        c = by_id["atanh/-1+i0"]
        assert c.expect_re == SignedInf(True) and isinstance(c.expect_im, AnyFinite)

    def test_unsupported_precision(self):
        with pytest.raises(CapabilityError):
            build_suite(Precision.BINARY128)


class TestClassifyComponent:
    def test_lower_bounded_overflow(self):
        got = classify_component(LowerBoundedFinite(710.0, False), math.inf, CAPS)
        assert got == {"o"}

    def test_subnormal_without_support_is_d(self):
        expect = SubnormalExpected(False, 5.562684646268003e-309)
        got = classify_component(expect, 5.562684646268003e-309, CAPS_NO_SUBNORMAL)
        assert got == {"d"}

    def test_subnormal_without_support_zero_ok(self):
        expect = SubnormalExpected(False, 5.562684646268003e-309)
        assert classify_component(expect, 0.0, CAPS_NO_SUBNORMAL) == set()
        assert classify_component(expect, -0.0, CAPS_NO_SUBNORMAL) == {"s"}

    def test_wrong_sign(self):
        got = classify_component(ExactSigned(math.pi / 2), -math.pi / 2, CAPS)
        assert got == {"s"}

    def test_inf_expected_zero_returned(self):
        assert classify_component(SignedInf(False), 0.0, CAPS) == {"z"}

    def test_inf_expected_finite_returned(self):
        assert classify_component(SignedInf(False), 42.0, CAPS) == {"m"}

    def test_nan_always_n(self):
        for expect in (
            ExactSigned(1.0),
            SignedZero(None),
            SignedInf(True),
            LowerBoundedFinite(89.0, False),
            SubnormalExpected(False, 1e-310),
            AnyFinite(),
        ):
            assert classify_component(expect, math.nan, CAPS) == {"n"}

    def test_zero_expected_nonzero_is_p(self):
        assert classify_component(SignedZero(False), 1.0, CAPS) == {"p"}
        assert classify_component(SignedZero(None), -3e-320, CAPS) == {"p"}

    def test_zero_sign_checks(self):
        assert classify_component(SignedZero(True), -0.0, CAPS) == set()
        assert classify_component(SignedZero(True), 0.0, CAPS) == {"s"}
        assert classify_component(SignedZero(None), -0.0, CAPS) == set()

    def test_exact_magnitude_strict_vs_paper(self):
        expect = ExactSigned(math.pi)
        wrong = 3.0  # right sign, wrong magnitude
        assert classify_component(expect, wrong, CAPS, B64, "paper") == set()
        assert classify_component(expect, wrong, CAPS, B64, "strict") == {"m"}

    def test_lower_bound_applies_in_both_modes(self):
        expect = LowerBoundedFinite(710.0, False)
        assert classify_component(expect, 709.0, CAPS, B64, "paper") == {"m"}
        assert classify_component(expect, 711.0, CAPS, B64, "paper") == set()
        assert classify_component(expect, 1500.0, CAPS, B64, "strict") == {"m"}
        assert classify_component(expect, 1500.0, CAPS, B64, "paper") == set()

    def test_any_finite(self):
        assert classify_component(AnyFinite(), 123.0, CAPS) == set()
        assert classify_component(AnyFinite(), 0.0, CAPS) == set()
        assert classify_component(AnyFinite(), math.inf, CAPS) == {"o"}

    @given(
        st.floats(allow_nan=True, allow_infinity=True),
        st.sampled_from(["exact", "zero", "inf", "lower", "subnormal", "subnormal-nosub", "any"]),
    )
    def test_total_and_within_alphabet(self, actual, kind):
        expect = {
            "exact": ExactSigned(2.5),
            "zero": SignedZero(False),
            "inf": SignedInf(False),
            "lower": LowerBoundedFinite(710.0, False),
            "subnormal": SubnormalExpected(False, 1e-310),
            "subnormal-nosub": SubnormalExpected(False, 1e-310),
            "any": AnyFinite(),
        }[kind]
        caps = CAPS_NO_SUBNORMAL if kind == "subnormal-nosub" else CAPS
        for mode in ("paper", "strict"):
            letters = classify_component(expect, actual, caps, B64, mode)
            assert letters <= {"d", "m", "n", "o", "p", "s", "z"}
            assert not ({"p", "z"} <= letters)


class TestClassifyCase:
    def _case(self):
        return TestCase(
            "log/-h+i0",
            "log",
            SignedComplex(-format_params(B64).h, 0.0),
            ExactSigned(709.782712893384),
            ExactSigned(math.pi),
        )

    def test_unsupported_marker(self):
        result = classify_case(self._case(), None, CAPS)
        assert result.failures == {UNSUPPORTED_SYMBOL}
        assert result.symbol == UNSUPPORTED_SYMBOL

    def test_pass_renders_dot(self):
        result = classify_case(self._case(), SignedComplex(709.782712893384, math.pi), CAPS)
        assert result.passed and result.symbol == "·"

    def test_union_of_component_letters(self):
        result = classify_case(self._case(), SignedComplex(math.inf, -0.0), CAPS)
        assert result.failures == {"o", "z"}
        assert result.symbol == "oz"

    def test_symbol_renders_letters_sorted(self):
        from ccbench.suite import CaseResult

        r = CaseResult("x/y", "x", SignedComplex(0.0, 0.0), SignedComplex(0.0, 0.0), frozenset({"z", "s", "o"}))
        assert r.symbol == "osz"


def _correct_answers(prec):
    provider = BuiltinProvider()
    return {c.case_id: provider.eval(c.function, prec, c.input) for c in build_suite(prec)}


class TestPerturbationInvariants:
    def test_sign_flip_gives_exactly_s(self, prec):
        answers = _correct_answers(prec)
        for case in build_suite(prec):
            w = answers[case.case_id]
            for comp, expect in (("re", case.expect_re), ("im", case.expect_im)):
                flipped = (
                    SignedComplex(-w.re, w.im) if comp == "re" else SignedComplex(w.re, -w.im)
                )
                result = classify_case(case, flipped, CAPS, prec, "paper")
                sign_checked = not isinstance(expect, AnyFinite) and not (
                    isinstance(expect, SignedZero) and expect.negative is None
                )
                expected = {"s"} if sign_checked else set()
                assert result.failures == frozenset(expected), (case.case_id, comp)

    def test_replacements_on_finite_nonzero_components(self, prec):
        answers = _correct_answers(prec)
        for case in build_suite(prec):
            w = answers[case.case_id]
            for comp, expect in (("re", case.expect_re), ("im", case.expect_im)):
                if not isinstance(expect, (ExactSigned, LowerBoundedFinite, SubnormalExpected)):
                    continue
                original = w.re if comp == "re" else w.im

                def with_value(v):
                    return SignedComplex(v, w.im) if comp == "re" else SignedComplex(w.re, v)

                assert classify_case(case, with_value(math.inf), CAPS, prec).failures == {"o"}
                assert classify_case(case, with_value(math.nan), CAPS, prec).failures == {"n"}
                zero = copy_sign(0.0, original)
                assert classify_case(case, with_value(zero), CAPS, prec).failures == {"z"}


class TestRunSuite:
    def test_builtin_all_pass(self, prec):
        for mode in ("paper", "strict"):
            run = run_suite(BuiltinProvider(), prec, mode)
            assert run.pass_rate == (70, 70), [r.case_id for r in run.results if not r.passed]

    def test_unadvertised_precision(self):
        with pytest.raises(CapabilityError):
            run_suite(BuiltinProvider(), Precision.BINARY128)

    def test_function_dropping_reduces_denominator(self):
        class NoHyperbolics(BuiltinProvider):
            name = "no-hyperbolics"

            def eval(self, function, prec, z):
                if function in ("asinh", "acosh", "atanh"):
                    return None
                return super().eval(function, prec, z)

        run = run_suite(NoHyperbolics(), B64)
        assert run.denominator == 42
        assert run.passed == 42
        crosses = [r for r in run.results if r.actual is None]
        assert len(crosses) == 28
        assert all(r.symbol == UNSUPPORTED_SYMBOL for r in crosses)

    def test_partial_unsupported_counts_in_denominator(self):
        class FlakyAsin(BuiltinProvider):
            name = "flaky-asin"

            def eval(self, function, prec, z):
                if function == "asin" and z.re > 0:
                    return None
                return super().eval(function, prec, z)

        run = run_suite(FlakyAsin(), B64)
        assert run.denominator == 70
        assert run.passed == 66

    def test_flush_to_zero_provider_gets_d(self):
        class ClaimsNoSubnormals(BuiltinProvider):
            name = "ftz-claimed"

            def capabilities(self):
                return CAPS_NO_SUBNORMAL

        run = run_suite(ClaimsNoSubnormals(), B64)
        flagged = [r for r in run.results if r.failures == {"d"}]
        assert len(flagged) == 8  # atan at +-0+-ih, atanh at +-h+-i0
        assert run.pass_rate == (62, 70)

    def test_provider_crash_carries_partial_results(self):
        class Crashes(BuiltinProvider):
            name = "crashes"
            calls = 0

            def eval(self, function, prec, z):
                type(self).calls += 1
                if type(self).calls > 10:
                    raise OSError("boom")
                return super().eval(function, prec, z)

        with pytest.raises(SuiteRunError) as info:
            run_suite(Crashes(), B64)
        assert len(info.value.partial_results) == 10
