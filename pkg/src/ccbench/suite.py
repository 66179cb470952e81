"""The 70-point branch-cut conformance suite.

``build_suite`` enumerates the test points for the eight functions
(log 6, sqrt 8, asin 8, acos 8, atan 12, asinh 8, acosh 8, atanh 12)
with per-component expectations; ``classify_component`` maps an actual
value to the failure-letter taxonomy:

====== =========================================================
symbol failure
====== =========================================================
x      function not implemented with this argument (rendered ``×``)
d      subnormal returned, but subnormals are unsupported
m      wrong magnitude of a finite nonzero part
n      NaN where the correct value is finite or infinite
o      unwarranted overflow: the correct value is finite
p      normal finite nonzero where the correct value is zero
s      wrong sign of a part
z      zero where the correct value is nonzero
====== =========================================================

Two checking modes: "paper" verifies IEEE class, signs, finiteness and
the log2h lower bound; "strict" additionally requires agreement with
the built-in reference values to a small ulp tolerance and imposes
2*log2h as an upper magnitude bound on lower-bounded components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, Union

from . import refmath
from .argument import SignedComplex
from .errors import CapabilityError, SuiteRunError
from .fpcore import (
    FloatClass,
    Precision,
    classify,
    copy_sign,
    format_params,
    round_to,
    sign_bit,
    supports,
    ulp_distance,
)

__all__ = [
    "UNSUPPORTED_SYMBOL",
    "FAILURE_LETTERS",
    "ExactSigned",
    "SignedZero",
    "SignedInf",
    "LowerBoundedFinite",
    "SubnormalExpected",
    "AnyFinite",
    "ComponentExpectation",
    "TestCase",
    "CaseResult",
    "ProviderCapabilities",
    "SuiteRun",
    "Mode",
    "build_suite",
    "classify_component",
    "classify_case",
    "run_suite",
]

UNSUPPORTED_SYMBOL = "×"  # ×
FAILURE_LETTERS = ("d", "m", "n", "o", "p", "s", "z")

Mode = Literal["paper", "strict"]

DEFAULT_MAX_ULPS = 4


@dataclass(frozen=True)
class ExactSigned:
    """Finite nonzero target; sign always checked, magnitude in strict mode."""

    value: float
    max_ulps: int = DEFAULT_MAX_ULPS

    @property
    def negative(self) -> bool:
        return sign_bit(self.value)


@dataclass(frozen=True)
class SignedZero:
    """Zero target; negative=None means the zero's sign is immaterial."""

    negative: bool | None


@dataclass(frozen=True)
class SignedInf:
    negative: bool


@dataclass(frozen=True)
class LowerBoundedFinite:
    """Finite nonzero target whose magnitude must exceed ``bound`` (log2h)."""

    bound: float
    negative: bool


@dataclass(frozen=True)
class SubnormalExpected:
    """Signed subnormal target; demoted to a signed zero when the provider
    does not support subnormals (then a subnormal answer is failure d)."""

    negative: bool
    oracle: float
    max_ulps: int = DEFAULT_MAX_ULPS


@dataclass(frozen=True)
class AnyFinite:
    """Any finite value passes; only NaN and infinity fail."""


ComponentExpectation = Union[
    ExactSigned, SignedZero, SignedInf, LowerBoundedFinite, SubnormalExpected, AnyFinite
]


@dataclass(frozen=True)
class TestCase:
    __test__ = False  # not a pytest class

    case_id: str
    function: str
    input: SignedComplex
    expect_re: ComponentExpectation
    expect_im: ComponentExpectation


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    function: str
    input: SignedComplex
    actual: SignedComplex | None  # None: not implemented with this argument
    failures: frozenset[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def symbol(self) -> str:
        """"·" for a pass, else the sorted failure letters."""
        if not self.failures:
            return "·"
        return "".join(sorted(self.failures))


@dataclass(frozen=True)
class ProviderCapabilities:
    subnormal_support: bool
    precisions: frozenset[Precision]


@dataclass
class SuiteRun:
    provider_name: str
    precision: Precision
    mode: Mode
    results: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def denominator(self) -> int:
        """Cases counted: whole functions answering only ``×`` are excluded,
        matching the paper's reduced-denominator convention."""
        dropped: set[str] = set()
        by_function: dict[str, list[CaseResult]] = {}
        for r in self.results:
            by_function.setdefault(r.function, []).append(r)
        for fn, rows in by_function.items():
            if all(r.actual is None for r in rows):
                dropped.add(fn)
        return sum(1 for r in self.results if r.function not in dropped)

    @property
    def pass_rate(self) -> tuple[int, int]:
        return self.passed, self.denominator


def _label(mag: str, negative: bool, imaginary: bool) -> str:
    disp = f"({mag})" if "+" in mag else mag
    if imaginary:
        return ("-" if negative else "+") + "i" + disp
    if negative:
        return f"-{disp}"
    return "+0" if mag == "0" else disp


def _case(
    fn: str,
    x: float,
    x_mag: str,
    y: float,
    y_mag: str,
    expect_re: ComponentExpectation,
    expect_im: ComponentExpectation,
) -> TestCase:
    cid = f"{fn}/{_label(x_mag, sign_bit(x), False)}{_label(y_mag, sign_bit(y), True)}"
    return TestCase(cid, fn, SignedComplex(x, y), expect_re, expect_im)


def build_suite(prec: Precision = Precision.BINARY64) -> list[TestCase]:
    """The 70 cases for one precision, in the paper's row order."""
    if not supports(prec):
        raise CapabilityError(f"cannot build suite for {prec.value}")
    params = format_params(prec)
    h, t, eps, log2h = params.h, params.t, params.eps, params.log2h
    one_eps = 1.0 + eps

    pi = round_to(prec, math.pi)
    pi_half = round_to(prec, math.pi / 2)
    log_h = round_to(prec, math.log(h))
    log_t = round_to(prec, math.log(t))
    sqrt_h = round_to(prec, math.sqrt(h))
    sqrt_t = round_to(prec, math.sqrt(t))
    c_h = refmath.helper_c(h, prec)  # positive subnormal
    c_1eps = refmath.helper_c(one_eps, prec)

    cases: list[TestCase] = []

    def sz(neg: bool | None) -> SignedZero:
        return SignedZero(neg)

    # log: 6 points on the cut, top side then bottom.
    for x, mag in ((-h, "h"), (-1.0, "1"), (-t, "t")):
        lg = log_h if mag == "h" else log_t if mag == "t" else None
        re_exp = sz(None) if lg is None else ExactSigned(lg)
        cases.append(_case("log", x, mag, 0.0, "0", re_exp, ExactSigned(pi)))
    for x, mag in ((-t, "t"), (-1.0, "1"), (-h, "h")):
        lg = log_h if mag == "h" else log_t if mag == "t" else None
        re_exp = sz(None) if lg is None else ExactSigned(lg)
        cases.append(_case("log", x, mag, -0.0, "0", re_exp, ExactSigned(-pi)))

    # sqrt: 8 points including the signed-zero origin.
    for x, mag, y in (
        (-h, "h", 0.0),
        (-1.0, "1", 0.0),
        (-t, "t", 0.0),
        (0.0, "0", 0.0),
        (0.0, "0", -0.0),
        (-t, "t", -0.0),
        (-1.0, "1", -0.0),
        (-h, "h", -0.0),
    ):
        if mag == "0":
            im_exp: ComponentExpectation = sz(sign_bit(y))
        else:
            val = {"h": sqrt_h, "1": 1.0, "t": sqrt_t}[mag]
            im_exp = ExactSigned(copy_sign(val, y))
        cases.append(_case("sqrt", x, mag, y, "0", sz(None), im_exp))

    # asin: cuts |x| >= 1; real part +-pi/2 from x, imaginary from y.
    for x, mag, y in (
        (-h, "h", 0.0),
        (-1.0, "1", 0.0),
        (-1.0, "1", -0.0),
        (-h, "h", -0.0),
        (h, "h", 0.0),
        (1.0, "1", 0.0),
        (1.0, "1", -0.0),
        (h, "h", -0.0),
    ):
        re_exp = ExactSigned(copy_sign(pi_half, x))
        if mag == "h":
            im_exp = LowerBoundedFinite(log2h, sign_bit(y))
        else:
            im_exp = sz(sign_bit(y))
        cases.append(_case("asin", x, mag, y, "0", re_exp, im_exp))

    # acos: same points; imaginary sign opposite y, real pi / zero.
    for x, mag, y in (
        (-h, "h", 0.0),
        (-1.0, "1", 0.0),
        (-1.0, "1", -0.0),
        (-h, "h", -0.0),
        (h, "h", 0.0),
        (1.0, "1", 0.0),
        (1.0, "1", -0.0),
        (h, "h", -0.0),
    ):
        re_exp = ExactSigned(pi) if x < 0 else sz(None)
        if mag == "h":
            im_exp = LowerBoundedFinite(log2h, not sign_bit(y))
        else:
            im_exp = sz(not sign_bit(y))
        cases.append(_case("acos", x, mag, y, "0", re_exp, im_exp))

    # atan: cuts |y| >= 1 on the imaginary axis; 12 points.
    def atan_expect(x: float, y: float, mag: str) -> tuple[ComponentExpectation, ComponentExpectation]:
        if mag == "1":
            return AnyFinite(), SignedInf(sign_bit(y))
        re_exp = ExactSigned(copy_sign(pi_half, x))
        if mag == "h":
            return re_exp, SubnormalExpected(sign_bit(y), copy_sign(c_h, y))
        return re_exp, ExactSigned(copy_sign(c_1eps, y))

    for x, y, mag in (
        (0.0, h, "h"),
        (0.0, one_eps, "1+eps"),
        (0.0, 1.0, "1"),
        (-0.0, 1.0, "1"),
        (-0.0, one_eps, "1+eps"),
        (-0.0, h, "h"),
        (-0.0, -h, "h"),
        (-0.0, -one_eps, "1+eps"),
        (-0.0, -1.0, "1"),
        (0.0, -1.0, "1"),
        (0.0, -one_eps, "1+eps"),
        (0.0, -h, "h"),
    ):
        re_exp, im_exp = atan_expect(x, y, mag)
        cases.append(_case("atan", x, "0", y, mag, re_exp, im_exp))

    # asinh: cuts |y| >= 1; real part +-b from x, imaginary +-pi/2 from y.
    for x, y, mag in (
        (0.0, h, "h"),
        (0.0, 1.0, "1"),
        (-0.0, 1.0, "1"),
        (-0.0, h, "h"),
        (0.0, -h, "h"),
        (0.0, -1.0, "1"),
        (-0.0, -1.0, "1"),
        (-0.0, -h, "h"),
    ):
        if mag == "h":
            re_exp = LowerBoundedFinite(log2h, sign_bit(x))
        else:
            re_exp = sz(sign_bit(x))
        cases.append(_case("asinh", x, "0", y, mag, re_exp, ExactSigned(copy_sign(pi_half, y))))

    # acosh: single cut x <= 1; checked at -h, -1, 0, 1 on both sides.
    for x, mag, y in (
        (-h, "h", 0.0),
        (-1.0, "1", 0.0),
        (0.0, "0", 0.0),
        (1.0, "1", 0.0),
        (1.0, "1", -0.0),
        (0.0, "0", -0.0),
        (-1.0, "1", -0.0),
        (-h, "h", -0.0),
    ):
        if x == -h:
            re_exp: ComponentExpectation = LowerBoundedFinite(log2h, False)
            im_exp = ExactSigned(copy_sign(pi, y))
        elif x == -1.0:
            re_exp = sz(None)
            im_exp = ExactSigned(copy_sign(pi, y))
        elif x == 0.0:
            re_exp = sz(None)
            im_exp = ExactSigned(copy_sign(pi_half, y))
        else:  # x == 1
            re_exp = sz(None)
            im_exp = sz(sign_bit(y))
        cases.append(_case("acosh", x, mag, y, "0", re_exp, im_exp))

    # atanh: cuts |x| >= 1; mirrors atan with the roles of parts swapped.
    def atanh_expect(x: float, y: float, mag: str) -> tuple[ComponentExpectation, ComponentExpectation]:
        if mag == "1":
            return SignedInf(sign_bit(x)), AnyFinite()
        im_exp = ExactSigned(copy_sign(pi_half, y))
        if mag == "h":
            return SubnormalExpected(sign_bit(x), copy_sign(c_h, x)), im_exp
        return ExactSigned(copy_sign(c_1eps, x)), im_exp

    for x, mag, y in (
        (h, "h", 0.0),
        (one_eps, "1+eps", 0.0),
        (1.0, "1", 0.0),
        (1.0, "1", -0.0),
        (one_eps, "1+eps", -0.0),
        (h, "h", -0.0),
        (-h, "h", 0.0),
        (-one_eps, "1+eps", 0.0),
        (-1.0, "1", 0.0),
        (-1.0, "1", -0.0),
        (-one_eps, "1+eps", -0.0),
        (-h, "h", -0.0),
    ):
        re_exp, im_exp = atanh_expect(x, y, mag)
        cases.append(_case("atanh", x, mag, y, "0", re_exp, im_exp))

    assert len(cases) == 70
    return cases


def _sign_of(expect: ComponentExpectation) -> bool | None:
    if isinstance(expect, ExactSigned):
        return expect.negative
    if isinstance(expect, (SignedInf, LowerBoundedFinite, SubnormalExpected)):
        return expect.negative
    if isinstance(expect, SignedZero):
        return expect.negative
    return None


def classify_component(
    expect: ComponentExpectation,
    actual: float,
    caps: ProviderCapabilities,
    prec: Precision = Precision.BINARY64,
    mode: Mode = "paper",
) -> set[str]:
    """Failure letters earned by one component.  Total: never raises."""
    cls = classify(actual, prec)
    if cls is FloatClass.NAN:
        return {"n"}

    if isinstance(expect, AnyFinite):
        return {"o"} if cls.infinite else set()

    if isinstance(expect, SignedInf):
        if cls.infinite:
            return {"s"} if cls.negative != expect.negative else set()
        if cls.zero:
            return {"z"}
        return {"m"}

    if isinstance(expect, SubnormalExpected) and not caps.subnormal_support:
        # Flush-to-zero provider: correct answer is the signed zero, and a
        # subnormal is its own failure kind.
        if cls.subnormal:
            return {"d"}
        expect = SignedZero(expect.negative)

    if isinstance(expect, SignedZero):
        if cls.infinite:
            return {"o"}
        if not cls.zero:
            return {"p"}
        if expect.negative is not None and cls.negative != expect.negative:
            return {"s"}
        return set()

    if isinstance(expect, SubnormalExpected):
        if cls.infinite:
            return {"o"}
        if cls.zero:
            return {"z"}
        if not cls.subnormal:
            return {"m"}
        letters: set[str] = set()
        if cls.negative != expect.negative:
            letters.add("s")
        if mode == "strict" and ulp_distance(abs(actual), abs(expect.oracle), prec) > expect.max_ulps:
            letters.add("m")
        return letters

    # Finite nonzero targets: ExactSigned and LowerBoundedFinite.
    if cls.infinite:
        return {"o"}
    if cls.zero:
        return {"z"}
    letters = set()
    if isinstance(expect, ExactSigned):
        if cls.negative != expect.negative:
            letters.add("s")
        if mode == "strict" and ulp_distance(abs(actual), abs(expect.value), prec) > expect.max_ulps:
            letters.add("m")
    else:
        assert isinstance(expect, LowerBoundedFinite)
        if cls.negative != expect.negative:
            letters.add("s")
        if not abs(actual) > expect.bound:
            letters.add("m")
        elif mode == "strict" and abs(actual) > 2.0 * expect.bound:
            letters.add("m")
    return letters


def classify_case(
    case: TestCase,
    actual: SignedComplex | None,
    caps: ProviderCapabilities,
    prec: Precision = Precision.BINARY64,
    mode: Mode = "paper",
) -> CaseResult:
    if actual is None:
        return CaseResult(case.case_id, case.function, case.input, None, frozenset({UNSUPPORTED_SYMBOL}))
    letters = classify_component(case.expect_re, actual.re, caps, prec, mode)
    letters |= classify_component(case.expect_im, actual.im, caps, prec, mode)
    return CaseResult(case.case_id, case.function, case.input, actual, frozenset(letters))


def run_suite(provider, prec: Precision = Precision.BINARY64, mode: Mode = "paper") -> SuiteRun:
    """Evaluate all 70 cases against a provider.

    The provider exposes ``name``, ``capabilities()`` and
    ``eval(function, precision, z) -> SignedComplex | None`` (None means
    not implemented with this argument).  Channel-level failures abort
    the run with SuiteRunError carrying the partial results.
    """
    caps = provider.capabilities()
    if prec not in caps.precisions:
        raise CapabilityError(f"provider {provider.name!r} does not advertise {prec.value}")
    run = SuiteRun(provider.name, prec, mode)
    for case in build_suite(prec):
        try:
            actual = provider.eval(case.function, prec, case.input)
        except Exception as exc:
            raise SuiteRunError(
                f"provider failed on {case.case_id}: {exc}", run.results
            ) from exc
        run.results.append(classify_case(case, actual, caps, prec, mode))
    return run
