"""Bit-level IEEE 754 utilities: classification, sign handling, ulp
distance, hex bit-pattern codec, and per-format parameters.

All values are carried as Python floats (IEEE binary64).  binary32
values are Python floats that are exactly representable in binary32;
the codec and classifier operate on the true 32-bit patterns.
binary128 is advertised only on platforms with native IEEE binary128
arithmetic, which CPython does not provide, so it is reported as
unavailable here and every operation on it raises CapabilityError.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass
from enum import Enum

from .errors import CapabilityError, DomainError, ParseError, UndefinedDistanceError

__all__ = [
    "Precision",
    "FloatClass",
    "FormatParams",
    "available_precisions",
    "supports",
    "classify",
    "sign_bit",
    "copy_sign",
    "ulp_distance",
    "encode_bits",
    "decode_bits",
    "format_params",
    "round_to",
]


class Precision(str, Enum):
    """IEEE binary interchange formats in scope."""

    BINARY32 = "binary32"
    BINARY64 = "binary64"
    BINARY128 = "binary128"

    def __str__(self) -> str:  # wire spelling
        return self.value


class FloatClass(Enum):
    """Nine-way IEEE classification."""

    NAN = "nan"
    POS_INF = "+inf"
    NEG_INF = "-inf"
    POS_NORMAL = "+normal"
    NEG_NORMAL = "-normal"
    POS_SUBNORMAL = "+subnormal"
    NEG_SUBNORMAL = "-subnormal"
    POS_ZERO = "+zero"
    NEG_ZERO = "-zero"

    @property
    def negative(self) -> bool:
        return self.value.startswith("-")

    @property
    def finite(self) -> bool:
        return self not in (FloatClass.NAN, FloatClass.POS_INF, FloatClass.NEG_INF)

    @property
    def zero(self) -> bool:
        return self in (FloatClass.POS_ZERO, FloatClass.NEG_ZERO)

    @property
    def subnormal(self) -> bool:
        return self in (FloatClass.POS_SUBNORMAL, FloatClass.NEG_SUBNORMAL)

    @property
    def infinite(self) -> bool:
        return self in (FloatClass.POS_INF, FloatClass.NEG_INF)

    def mirrored(self) -> "FloatClass":
        """The class of -v given the class of v (NaN maps to itself)."""
        if self is FloatClass.NAN:
            return self
        v = self.value
        flipped = ("+" if v[0] == "-" else "-") + v[1:]
        return FloatClass(flipped)


# Per-format bit layout: (total hex digits, exponent bits, fraction bits)
_LAYOUT = {
    Precision.BINARY32: (8, 8, 23),
    Precision.BINARY64: (16, 11, 52),
    Precision.BINARY128: (32, 15, 112),
}

# CPython floats are binary64 and `struct` has no binary128 code; no
# native IEEE binary128 arithmetic exists here, so it is never advertised.
_NATIVE_BINARY128 = False


def available_precisions() -> tuple[Precision, ...]:
    """Precisions usable for local arithmetic on this platform."""
    precs = [Precision.BINARY32, Precision.BINARY64]
    if _NATIVE_BINARY128:
        precs.append(Precision.BINARY128)
    return tuple(precs)


def supports(prec: Precision) -> bool:
    return prec in available_precisions()


def _require_supported(prec: Precision) -> None:
    if not supports(prec):
        raise CapabilityError(f"{prec.value} arithmetic is not available on this platform")


def _bits64(v: float) -> int:
    return struct.unpack(">Q", struct.pack(">d", v))[0]


def _from_bits64(bits: int) -> float:
    # memcpy semantics: preserves NaN payloads, never quiets.
    return struct.unpack(">d", struct.pack(">Q", bits))[0]


def _bits32(v: float) -> int:
    """32-bit pattern of v, which must be a binary32 value (NaNs see below).

    NaN payloads are mapped from the binary64 carrier by truncating the
    fraction's low 29 bits; the quiet bit lines up between formats, so
    patterns produced by decode_bits round-trip exactly.
    """
    if math.isnan(v):
        b64 = _bits64(v)
        sign = b64 >> 63
        frac = (b64 & ((1 << 52) - 1)) >> 29
        if frac == 0:
            frac = 1 << 22  # payload lost in truncation: keep it a quiet NaN
        return (sign << 31) | (0xFF << 23) | frac
    try:
        return struct.unpack(">I", struct.pack(">f", v))[0]
    except OverflowError:
        raise DomainError(f"{v!r} is not representable in binary32") from None


def _from_bits32(bits: int) -> float:
    exp = (bits >> 23) & 0xFF
    frac = bits & ((1 << 23) - 1)
    if exp == 0xFF and frac != 0:
        # Widen the NaN by hand; a C float->double conversion would quiet
        # signaling NaNs and break bit-exact round trips.
        sign = bits >> 31
        return _from_bits64((sign << 63) | (0x7FF << 52) | (frac << 29))
    return struct.unpack(">f", struct.pack(">I", bits))[0]


def sign_bit(v: float) -> bool:
    """True iff the IEEE sign bit is set; sign_bit(-0.0) is True."""
    return bool(_bits64(v) >> 63)


def copy_sign(mag: float, sgn: float) -> float:
    """Magnitude of the first argument, sign bit of the second."""
    return math.copysign(mag, sgn)


def classify(v: float, prec: Precision = Precision.BINARY64) -> FloatClass:
    """The unique IEEE class of v in the given format."""
    _require_supported(prec)
    if prec is Precision.BINARY32:
        bits = _bits32(v)
        exp_bits, frac_bits = 8, 23
    else:
        bits = _bits64(v)
        exp_bits, frac_bits = 11, 52
    frac = bits & ((1 << frac_bits) - 1)
    exp = (bits >> frac_bits) & ((1 << exp_bits) - 1)
    neg = bool(bits >> (exp_bits + frac_bits))
    if exp == (1 << exp_bits) - 1:
        if frac:
            return FloatClass.NAN
        return FloatClass.NEG_INF if neg else FloatClass.POS_INF
    if exp == 0:
        if frac == 0:
            return FloatClass.NEG_ZERO if neg else FloatClass.POS_ZERO
        return FloatClass.NEG_SUBNORMAL if neg else FloatClass.POS_SUBNORMAL
    return FloatClass.NEG_NORMAL if neg else FloatClass.POS_NORMAL


def _ordinal(v: float, prec: Precision) -> int:
    """Monotone integer key: adjacent representables differ by 1, +-0 -> 0."""
    if prec is Precision.BINARY32:
        bits = _bits32(v)
        sign, mag = bits >> 31, bits & 0x7FFFFFFF
    else:
        bits = _bits64(v)
        sign, mag = bits >> 63, bits & ((1 << 63) - 1)
    return -mag if sign else mag


def ulp_distance(a: float, b: float, prec: Precision = Precision.BINARY64) -> int:
    """Representable values strictly between a and b, plus one unless equal.

    Symmetric; ulp_distance(+0.0, -0.0) == 0 (zero signs are checked
    separately via sign_bit).
    """
    _require_supported(prec)
    if math.isnan(a) or math.isnan(b):
        raise UndefinedDistanceError("ulp distance is undefined for NaN")
    return abs(_ordinal(a, prec) - _ordinal(b, prec))


def encode_bits(v: float, prec: Precision = Precision.BINARY64) -> str:
    """Lowercase fixed-width hex of the IEEE interchange pattern."""
    _require_supported(prec)
    if prec is Precision.BINARY32:
        return format(_bits32(v), "08x")
    return format(_bits64(v), "016x")


def decode_bits(hex_pattern: str, prec: Precision = Precision.BINARY64) -> float:
    """Float with exactly the given bit pattern (NaN payloads preserved)."""
    _require_supported(prec)
    width, _, _ = _LAYOUT[prec]
    if len(hex_pattern) != width or hex_pattern != hex_pattern.lower():
        raise ParseError(f"expected {width} lowercase hex digits, got {hex_pattern!r}")
    try:
        bits = int(hex_pattern, 16)
    except ValueError:
        raise ParseError(f"invalid hex pattern {hex_pattern!r}") from None
    if prec is Precision.BINARY32:
        return _from_bits32(bits)
    return _from_bits64(bits)


def round_to(prec: Precision, v: float) -> float:
    """Round v to the nearest value of the format (ties to even).

    Out-of-range finite values round to the correctly signed infinity,
    matching IEEE overflow in round-to-nearest.
    """
    _require_supported(prec)
    if prec is Precision.BINARY64:
        return float(v)
    if math.isnan(v) or math.isinf(v):
        return v
    try:
        return struct.unpack(">f", struct.pack(">f", v))[0]
    except OverflowError:
        return math.copysign(math.inf, v)


@dataclass(frozen=True)
class FormatParams:
    """Limits of one format: h (HUGE), t (TINY), eps, and log2h.

    log2h is the truncated-to-integer value of log(2) + log(h) evaluated
    in the format itself; finite results of magnitude-h arguments of the
    inverse trig/hyperbolic functions must exceed it.
    """

    precision: Precision
    h: float
    t: float
    eps: float
    log2h: float


_PARAMS_CACHE: dict[Precision, FormatParams] = {}


def format_params(prec: Precision = Precision.BINARY64) -> FormatParams:
    _require_supported(prec)
    cached = _PARAMS_CACHE.get(prec)
    if cached is not None:
        return cached
    if prec is Precision.BINARY64:
        p, emin, emax = 53, -1022, 1023
    else:
        p, emin, emax = 24, -126, 127
    h = round_to(prec, (2.0 - math.ldexp(1.0, 1 - p)) * math.ldexp(1.0, emax))
    t = math.ldexp(1.0, emin)
    eps = math.ldexp(1.0, 1 - p)
    # In-format sum, then truncation toward zero.
    log2h_sum = round_to(prec, round_to(prec, math.log(2.0)) + round_to(prec, math.log(h)))
    params = FormatParams(prec, h, t, eps, float(int(log2h_sum)))
    _PARAMS_CACHE[prec] = params
    return params
