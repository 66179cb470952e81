"""Reference complex elementary functions with exact branch-cut behavior.

Eight functions (log, sqrt, asin, acos, atan, asinh, acosh, atanh) plus
the Joukowski pair and the cross map.  Points on a branch cut (a signed
zero component in the cut region) are routed through closed forms so the
result classes and zero/infinity signs are exact; generic off-cut inputs
get principal values through overflow-safe formulas.  All arithmetic runs
in binary64 and results are rounded once to the requested format.

The three cut-magnitude helpers never overflow for arguments up to the
format's largest finite value:

* ``helper_b``: log(a + sqrt(a^2-1)) for a >= 1, via log(a) + log1p(...)
* ``helper_c``: 0.5*log((a+1)/(a-1)) for a >= 1, via 0.5*log1p(2/(a-1)),
  giving +inf at a == 1 and a subnormal at the format's maximum
* ``helper_d``: 2*arctan(sqrt((1-a)/(1+a))) for a in [-1, 1], via atan2

Inputs with NaN or infinite components are rejected; nothing here
implements the C-style special-value algebra for them.
"""

from __future__ import annotations

import math
import sys

from .argument import SignedComplex, principal_arg
from .errors import DomainError, NonFiniteInputError, PoleError
from .fpcore import Precision, copy_sign, round_to

__all__ = [
    "helper_b",
    "helper_c",
    "helper_d",
    "clog",
    "csqrt",
    "casin",
    "cacos",
    "catan",
    "catanh",
    "casinh",
    "cacosh",
    "cexp",
    "joukowski",
    "joukowski_inverse",
    "cross_map",
]

_INF = math.inf
_LN2 = math.log(2.0)
# Generic formulas square moduli; beyond this, switch to log(2|z|) asymptotics.
_GUARD = math.sqrt(sys.float_info.max) / 4.0
_TAYLOR = 2.0 ** -27
_HUGE_SQUARE = 2.0 ** 500  # z*z would overflow past here


def _check_input(z: SignedComplex, prec: Precision) -> None:
    for v in (z.re, z.im):
        if math.isnan(v):
            raise NonFiniteInputError("NaN component")
        if math.isinf(v):
            raise NonFiniteInputError("infinite component")
    if prec is not Precision.BINARY64:
        if round_to(prec, z.re) != z.re or round_to(prec, z.im) != z.im:
            raise DomainError(f"{z} is not exact in {prec.value}")


def _check_helper_arg(a: float, prec: Precision) -> None:
    if math.isnan(a):
        raise DomainError("argument is NaN")
    if math.isinf(a):
        raise DomainError("argument must be finite")
    if prec is not Precision.BINARY64 and round_to(prec, a) != a:
        raise DomainError(f"{a!r} is not exact in {prec.value}")


def _clamp(v: float, lo: float, hi: float) -> float:
    return lo if v < lo else hi if v > hi else v


def _b64(a: float) -> float:
    # log(a + sqrt(a^2-1)) without forming a^2.
    return math.log(a) + math.log1p(math.sqrt((1.0 - 1.0 / a) * (1.0 + 1.0 / a)))


def _c64(a: float) -> float:
    d = a - 1.0
    if d == 0.0:
        return _INF  # IEEE 2/+0; Python division raises, so branch here
    return 0.5 * math.log1p(2.0 / d)


def _d64(a: float) -> float:
    return 2.0 * math.atan2(math.sqrt(1.0 - a), math.sqrt(1.0 + a))


def helper_b(a: float, prec: Precision = Precision.BINARY64) -> float:
    """Cut magnitude of asin/acos/asinh/acosh: log(a + sqrt(a^2-1)), a >= 1."""
    _check_helper_arg(a, prec)
    if a < 1.0:
        raise DomainError("helper_b requires a >= 1")
    return round_to(prec, _b64(a))


def helper_c(a: float, prec: Precision = Precision.BINARY64) -> float:
    """Cut magnitude of atan/atanh: 0.5*log((a+1)/(a-1)), a >= 1.

    +inf at a == 1; a positive subnormal at the format's largest finite.
    """
    _check_helper_arg(a, prec)
    if a < 1.0:
        raise DomainError("helper_c requires a >= 1")
    return round_to(prec, _c64(a))


def helper_d(a: float, prec: Precision = Precision.BINARY64) -> float:
    """acosh imaginary magnitude on -1 <= a <= 1: 2*arctan(sqrt((1-a)/(1+a)))."""
    _check_helper_arg(a, prec)
    if not -1.0 <= a <= 1.0:
        raise DomainError("helper_d requires -1 <= a <= 1")
    return round_to(prec, _d64(a))


def _log_abs(x: float, y: float) -> float:
    """log(hypot(x, y)) without overflow in the modulus."""
    ax, ay = abs(x), abs(y)
    m, n = (ax, ay) if ax >= ay else (ay, ax)
    if m == 0.0:
        return -_INF
    r = n / m
    return math.log(m) + 0.5 * math.log1p(r * r)


def _alpha_beta(x: float, y: float) -> tuple[float, float]:
    """Ellipse coordinates for asin/acos: alpha >= 1, beta in [-1, 1].

    beta carries the sign of x exactly (r - s has the sign of 4x), which
    cancellation and x = +-0 would otherwise lose.
    """
    r = math.hypot(x + 1.0, y)
    s = math.hypot(x - 1.0, y)
    alpha = 0.5 * (r + s)
    beta = copy_sign(_clamp(abs(0.5 * (r - s)), 0.0, 1.0), x)
    return (alpha if alpha > 1.0 else 1.0), beta


def _beta_large(x: float, y: float) -> float:
    m = max(abs(x), abs(y))
    xs, ys = x / m, y / m
    return _clamp(xs / math.hypot(xs, ys), -1.0, 1.0)


def clog(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """Principal log; on the cut (x < 0, y = +-0) the imaginary part is
    the format's pi with y's sign.  log(+-0 +- i0) = (-inf, +-pi): the
    zero-argument extension with q = pi is always enabled."""
    _check_input(z, prec)
    x, y = z.re, z.im
    if y == 0.0:
        if x == 0.0:
            return SignedComplex(-_INF, copy_sign(round_to(prec, math.pi), y))
        if x < 0.0:
            return SignedComplex(
                round_to(prec, math.log(-x)), copy_sign(round_to(prec, math.pi), y)
            )
    return SignedComplex(round_to(prec, _log_abs(x, y)), principal_arg(z, prec))


def _csqrt64(x: float, y: float) -> tuple[float, float]:
    if y == 0.0:
        if x == 0.0:
            return 0.0, copy_sign(0.0, y)
        if x < 0.0:
            return 0.0, copy_sign(math.sqrt(-x), y)
        return math.sqrt(x), copy_sign(0.0, y)
    m = max(abs(x), abs(y))
    k = -512 if m >= 2.0**510 else 512 if m <= 2.0**-510 else 0
    xs, ys = math.ldexp(x, k), math.ldexp(y, k)
    u = math.sqrt(0.5 * (math.hypot(xs, ys) + abs(xs)))
    if xs >= 0.0:
        re, im = u, ys / (2.0 * u)
    else:
        re, im = abs(ys) / (2.0 * u), copy_sign(u, ys)
    half = -k // 2
    return math.ldexp(re, half), math.ldexp(im, half)


def csqrt(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """Principal square root, |Arg| <= pi/2.  On the cut (x <= 0, y = +-0)
    the result is (+0, +-sqrt|x|) with the imaginary sign taken from y;
    never overflows for |x| up to the format's largest finite."""
    _check_input(z, prec)
    re, im = _csqrt64(z.re, z.im)
    return SignedComplex(round_to(prec, re), round_to(prec, im))


def casin(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """Principal arcsine.  Cuts on the real axis, |x| >= 1: the result is
    (+-pi/2, +-b) with the real sign from x and the imaginary sign from y,
    b == +0 at |x| == 1."""
    _check_input(z, prec)
    x, y = z.re, z.im
    if y == 0.0:
        ax = abs(x)
        if ax >= 1.0:
            re = copy_sign(round_to(prec, math.pi / 2), x)
            im = copy_sign(round_to(prec, _b64(ax)), y)
        else:
            re = round_to(prec, math.asin(x))
            im = copy_sign(0.0, y)
        return SignedComplex(re, im)
    m = max(abs(x), abs(y))
    if m < _TAYLOR:
        # asin(z) ~ z + z^3/6; the generic route loses tiny imaginaries.
        re = x * (1.0 + (x * x - 3.0 * y * y) / 6.0)
        im_mag = abs(y * (1.0 + (3.0 * x * x - y * y) / 6.0))
    elif m > _GUARD:
        re = math.asin(_beta_large(x, y))
        im_mag = _LN2 + _log_abs(x, y)
    else:
        alpha, beta = _alpha_beta(x, y)
        re = math.asin(beta)
        im_mag = _b64(alpha)
    return SignedComplex(round_to(prec, re), copy_sign(round_to(prec, im_mag), y))


def cacos(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """Principal arccosine.  Cuts on the real axis, |x| >= 1: the result
    is (pi, -+b) for x <= -1 and (+0, -+b) for x >= 1, the imaginary sign
    opposite y's sign bit."""
    _check_input(z, prec)
    x, y = z.re, z.im
    if y == 0.0:
        if x <= -1.0:
            return SignedComplex(
                round_to(prec, math.pi), copy_sign(round_to(prec, _b64(-x)), -y)
            )
        if x >= 1.0:
            return SignedComplex(0.0, copy_sign(round_to(prec, _b64(x)), -y))
        return SignedComplex(round_to(prec, math.acos(x)), copy_sign(0.0, -y))
    if max(abs(x), abs(y)) > _GUARD:
        re = math.acos(_beta_large(x, y))
        im_mag = _LN2 + _log_abs(x, y)
    else:
        alpha, beta = _alpha_beta(x, y)
        re = math.acos(beta)
        im_mag = _b64(alpha)
    return SignedComplex(round_to(prec, re), copy_sign(round_to(prec, im_mag), -y))


def _catanh64(x: float, y: float) -> tuple[float, float]:
    if y == 0.0:
        ax = abs(x)
        if ax >= 1.0:
            return copy_sign(_c64(ax), x), copy_sign(math.pi / 2, y)
        return math.atanh(x), copy_sign(0.0, y)
    if x == 0.0:
        # atanh(iy) = i*atan(y); the real zero keeps x's sign.
        return copy_sign(0.0, x), math.atan(y)
    negated = x < 0.0
    if negated:
        x, y = -x, -y
    m = max(x, abs(y))
    if m < _TAYLOR:
        re = x * (1.0 + (x * x - 3.0 * y * y) / 3.0)
        im = y * (1.0 + (3.0 * x * x - y * y) / 3.0)
    elif m > _GUARD:
        xs, ys = x / m, y / m
        re = (xs / (xs * xs + ys * ys)) / m
        im = copy_sign(math.pi / 2, y)
    else:
        re = 0.5 * (_log_abs(1.0 + x, y) - _log_abs(1.0 - x, y))
        im = 0.5 * math.atan2(2.0 * y, (1.0 - x) * (1.0 + x) - y * y)
    return (-re, -im) if negated else (re, im)


def catanh(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """Principal inverse hyperbolic tangent.  Cuts on the real axis,
    |x| >= 1: (+-c, +-pi/2) with the real sign from x and the imaginary
    from y; the real part is +-inf at |x| == 1 and a signed subnormal at
    the format's largest finite."""
    _check_input(z, prec)
    re, im = _catanh64(z.re, z.im)
    return SignedComplex(round_to(prec, re), round_to(prec, im))


def catan(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """Principal arctangent via atan(z) = -i*atanh(iz).  Cuts on the
    imaginary axis, |y| >= 1: (+-pi/2, +-c) with the real sign from x's
    sign bit and the imaginary sign from y's."""
    _check_input(z, prec)
    re, im = _catanh64(-z.im, z.re)  # iz
    return SignedComplex(round_to(prec, im), round_to(prec, -re))


def casinh(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """Principal inverse hyperbolic sine via asinh(z) = i*asin(-iz).
    Cuts on the imaginary axis, |y| >= 1: (+-b, +-pi/2), real sign from
    x (b == +0 at |y| == 1), imaginary sign from y."""
    _check_input(z, prec)
    w = casin(SignedComplex(z.im, -z.re), prec)  # -iz
    return SignedComplex(-w.im, w.re)


def cacosh(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """Principal inverse hyperbolic cosine.  Single cut x <= 1, y = +-0:
    (b, +-pi) for x <= -1 and (+0, +-d) for -1 <= x <= 1, the imaginary
    sign taken from y."""
    _check_input(z, prec)
    x, y = z.re, z.im
    if y == 0.0:
        if x <= -1.0:
            return SignedComplex(
                round_to(prec, _b64(-x)), copy_sign(round_to(prec, math.pi), y)
            )
        if x <= 1.0:
            return SignedComplex(0.0, copy_sign(round_to(prec, _d64(x)), y))
        return SignedComplex(round_to(prec, _b64(x)), copy_sign(0.0, y))
    if max(abs(x), abs(y)) > _GUARD:
        re = _LN2 + _log_abs(x, y)
        im = math.acos(_beta_large(x, y))
    else:
        alpha, beta = _alpha_beta(x, y)
        re = _b64(alpha)
        im = math.acos(beta)
    return SignedComplex(round_to(prec, re), copy_sign(round_to(prec, im), y))


def cexp(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """Complex exponential.  Accepts a -inf real part (returning signed
    zeros from the phase) so identities over clog's zero-argument
    extension close; NaN components and non-finite imaginary parts are
    rejected."""
    if math.isnan(z.re) or math.isnan(z.im):
        raise NonFiniteInputError("NaN component")
    if math.isinf(z.im):
        raise NonFiniteInputError("infinite imaginary component")
    x, y = z.re, z.im
    if x == -_INF:
        return SignedComplex(copy_sign(0.0, math.cos(y)), copy_sign(0.0, math.sin(y)))
    try:
        m = math.exp(x)
    except OverflowError:
        m = _INF
    return SignedComplex(round_to(prec, m * math.cos(y)), round_to(prec, m * math.sin(y)))


def _reciprocal64(x: float, y: float) -> tuple[float, float]:
    m = max(abs(x), abs(y))
    xs, ys = x / m, y / m
    d = xs * xs + ys * ys
    return (xs / d) / m, (-ys / d) / m


def joukowski(w: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """z = w + 1/w; pole at the exact complex zero."""
    _check_input(w, prec)
    if w.re == 0.0 and w.im == 0.0:
        raise PoleError("joukowski map has a pole at 0")
    ru, rv = _reciprocal64(w.re, w.im)
    return SignedComplex(round_to(prec, w.re + ru), round_to(prec, w.im + rv))


def joukowski_inverse(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """w = (z + copysign(1, Re z)*sqrt(z^2 - 4))/2, the branch with
    |w| >= 1.  The square keeps component signs, so a signed zero y
    survives into z^2 - 4 and the cut [-2, 2] maps onto the unit circle
    with the imaginary sign of w equal to y's sign bit."""
    _check_input(z, prec)
    x, y = z.re, z.im
    if max(abs(x), abs(y)) > _HUGE_SQUARE:
        # z^2 would overflow; w = z - 1/z to well below one ulp out here.
        ru, rv = _reciprocal64(x, y)
        return SignedComplex(round_to(prec, x - ru), round_to(prec, y - rv))
    qre, qim = _csqrt64(x * x - y * y - 4.0, 2.0 * x * y)
    s = copy_sign(1.0, x)
    return SignedComplex(
        round_to(prec, 0.5 * (x + s * qre)), round_to(prec, 0.5 * (y + s * qim))
    )


def _ctan64(x: float, y: float) -> tuple[float, float]:
    """tan for x in [0, pi] (the range of acos) and any finite y."""
    if abs(y) > 350.0:
        # cosh(2y) would overflow; tan -> +-i with an exponentially small
        # real part of sin(2x)'s sign.
        return math.sin(2.0 * x) * 2.0 * math.exp(-2.0 * abs(y)), copy_sign(1.0, y)
    den = math.cos(2.0 * x) + math.cosh(2.0 * y)
    if den == 0.0:
        raise PoleError("tan pole")
    return math.sin(2.0 * x) / den, math.sinh(2.0 * y) / den


def cross_map(z: SignedComplex, prec: Precision = Precision.BINARY64) -> SignedComplex:
    """tan(acos(z^2/4)): maps the plane with two unit-length cuts crossing
    at the origin onto the upper half plane.  The square keeps component
    signs so the four sides of the cross stay distinguishable."""
    _check_input(z, prec)
    x, y = z.re, z.im
    if max(abs(x), abs(y)) > _HUGE_SQUARE:
        m = max(abs(x), abs(y))
        xs, ys = x / m, y / m
        ur = xs * xs - ys * ys
        ui = 2.0 * xs * ys
        beta = _clamp(ur / math.hypot(ur, ui), -1.0, 1.0)
        mag = 2.0 * _log_abs(x, y) - _LN2  # log(2|u|) with u = z^2/4
        re, im = _ctan64(math.acos(beta), copy_sign(mag, -ui))
        return SignedComplex(round_to(prec, re), round_to(prec, im))
    xh, yh = 0.5 * x, 0.5 * y
    u = SignedComplex(xh * xh - yh * yh, 2.0 * (xh * yh))
    a = cacos(u)  # binary64 core; rounding happens after tan
    re, im = _ctan64(a.re, a.im)
    return SignedComplex(round_to(prec, re), round_to(prec, im))
