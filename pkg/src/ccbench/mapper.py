"""Plot-ready conformal-map traces of branch-cut boundaries and grids.

For every map function the two sides of each cut are traced with the
correct signed zero (+0 above / right, -0 below / left), so the emitted
w columns show the jump across the cut.  Cut parameters default to a
plot-friendly window (magnitude at most 4; rays that reach 0 start at
1/16) rather than the format extremes, which the conformance suite owns.
Endpoints and side midpoints carry figure labels "A", "B", ...

CSV schema: curve,label,t,z_re,z_im,w_re,w_im with shortest round-trip
decimal floats.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from . import refmath
from .argument import SignedComplex
from .errors import PoleError
from .fpcore import Precision, copy_sign, round_to, sign_bit

__all__ = ["MAP_FUNCTIONS", "TraceSample", "CurveTrace", "trace_cuts", "map_grid", "emit_csv"]


@dataclass(frozen=True)
class TraceSample:
    t: float
    z: SignedComplex
    w: SignedComplex
    label: str | None = None


@dataclass
class CurveTrace:
    curve_id: str
    samples: list[TraceSample] = field(default_factory=list)
    dropped: int = 0  # samples discarded at poles


_EVAL = {
    "log": refmath.clog,
    "sqrt": refmath.csqrt,
    "asin": refmath.casin,
    "acos": refmath.cacos,
    "atan": refmath.catan,
    "asinh": refmath.casinh,
    "acosh": refmath.cacosh,
    "atanh": refmath.catanh,
    "joukowski-inverse": refmath.joukowski_inverse,
    "cross": refmath.cross_map,
}

MAP_FUNCTIONS = tuple(_EVAL)

# Cut geometry: (segment name, axis "re"|"im", lo, hi) in the cut
# coordinate; the other coordinate is the signed zero selecting the side.
_CUTS: dict[str, list[tuple[str, str, float, float]]] = {
    "log": [("cut", "re", -math.inf, 0.0)],
    "sqrt": [("cut", "re", -math.inf, 0.0)],
    "asin": [("left", "re", -math.inf, -1.0), ("right", "re", 1.0, math.inf)],
    "acos": [("left", "re", -math.inf, -1.0), ("right", "re", 1.0, math.inf)],
    "atanh": [("left", "re", -math.inf, -1.0), ("right", "re", 1.0, math.inf)],
    "atan": [("lower", "im", -math.inf, -1.0), ("upper", "im", 1.0, math.inf)],
    "asinh": [("lower", "im", -math.inf, -1.0), ("upper", "im", 1.0, math.inf)],
    "acosh": [("cut", "re", -math.inf, 1.0)],
    "joukowski-inverse": [("cut", "re", -2.0, 2.0)],
    "cross": [("real-arm", "re", -2.0, 2.0), ("imag-arm", "im", -2.0, 2.0)],
}


def _cut_coordinates(lo: float, hi: float, n: int, max_magnitude: float) -> list[float]:
    """Sample positions along one cut, ordered ascending.

    Finite segments are linear.  Rays are log-spaced in the distance from
    their finite anchor, clamped to max_magnitude; the anchor itself is
    included when the function is finite there (anchors at +-1) and
    skipped for the rays that reach 0, where log/sqrt diverge.
    """
    if math.isfinite(lo) and math.isfinite(hi):
        step = (hi - lo) / (n - 1)
        return [lo + i * step for i in range(n)]
    anchor = hi if math.isinf(lo) else lo
    direction = -1.0 if math.isinf(lo) else 1.0
    include_anchor = anchor != 0.0
    span = max(max_magnitude - direction * anchor, 1.0)  # anchor -> clamp distance
    s_min = 1.0 / 16.0
    k = n - 1 if include_anchor else n
    ratio = span / s_min
    coords = [anchor + direction * s_min * ratio ** (i / (k - 1)) for i in range(k)]
    if include_anchor:
        coords.append(anchor)
    coords.sort()
    return coords


def _eval_point(fn: str, z: SignedComplex, prec: Precision) -> SignedComplex:
    return _EVAL[fn](z, prec)


def trace_cuts(
    fn: str,
    prec: Precision = Precision.BINARY64,
    n: int = 65,
    max_magnitude: float = 4.0,
) -> list[CurveTrace]:
    """Two traces per cut of fn: the +0 side and the -0 side."""
    if fn not in _EVAL:
        raise ValueError(f"unknown map function {fn!r}")
    if n < 2:
        raise ValueError("need at least 2 samples per side")
    traces: list[CurveTrace] = []
    segments = _CUTS[fn]
    many = len(segments) * 2 > 2  # label only endpoints when curves abound
    next_label = 0
    for seg_name, axis, lo, hi in segments:
        coords = _cut_coordinates(lo, hi, n, max_magnitude)
        for side_sign, side_name in ((1.0, "+0"), (-1.0, "-0")):
            trace = CurveTrace(f"{fn}/{seg_name}/{side_name}")
            zero = copy_sign(0.0, side_sign)
            label_at = {0, len(coords) - 1} if many else {0, len(coords) // 2, len(coords) - 1}
            for i, c in enumerate(coords):
                c = round_to(prec, c)
                z = SignedComplex(c, zero) if axis == "re" else SignedComplex(zero, c)
                try:
                    w = _eval_point(fn, z, prec)
                except PoleError:
                    trace.dropped += 1
                    continue
                label = None
                if i in label_at and next_label < 26:
                    label = chr(ord("A") + next_label)
                    next_label += 1
                trace.samples.append(TraceSample(c, z, w, label))
            traces.append(trace)
    return traces


def _crosses_cut(fn: str, a: SignedComplex, b: SignedComplex) -> bool:
    """Does the segment a-b cross one of fn's cuts (by sign change of the
    off-axis coordinate while inside the cut span)?"""
    for _, axis, lo, hi in _CUTS[fn]:
        if axis == "re":
            off_a, off_b = a.im, b.im
            along = 0.5 * (a.re + b.re)
        else:
            off_a, off_b = a.re, b.re
            along = 0.5 * (a.im + b.im)
        if sign_bit(off_a) != sign_bit(off_b) and lo <= along <= hi:
            return True
    return False


def map_grid(
    fn: str,
    prec: Precision = Precision.BINARY64,
    ranges: tuple[float, float, float, float] = (-3.0, 3.0, -3.0, 3.0),
    counts: tuple[int, int] = (7, 65),
) -> list[CurveTrace]:
    """Images of horizontal and vertical grid lines under fn.

    counts = (lines per direction, samples per line).  Samples at poles
    are dropped and counted; a line crossing a cut is split into segments.
    """
    if fn not in _EVAL:
        raise ValueError(f"unknown map function {fn!r}")
    re_lo, re_hi, im_lo, im_hi = ranges
    for v in ranges:
        if not math.isfinite(v):
            raise ValueError("grid ranges must be finite")
    n_lines, n_samples = counts
    if n_lines < 2 or n_samples < 2:
        raise ValueError("counts must be at least 2")

    def levels(lo: float, hi: float, n: int) -> list[float]:
        step = (hi - lo) / (n - 1)
        return [lo + i * step for i in range(n)]

    traces: list[CurveTrace] = []
    for orientation in ("h", "v"):
        if orientation == "h":
            consts = levels(im_lo, im_hi, n_lines)
            walks = levels(re_lo, re_hi, n_samples)
        else:
            consts = levels(re_lo, re_hi, n_lines)
            walks = levels(im_lo, im_hi, n_samples)
        for const in consts:
            const = round_to(prec, const)
            base_id = f"{fn}/grid/{orientation}={const!r}"
            segment = 0
            trace = CurveTrace(f"{base_id}/seg{segment}")
            previous: SignedComplex | None = None
            for wcoord in walks:
                wcoord = round_to(prec, wcoord)
                z = (
                    SignedComplex(wcoord, const)
                    if orientation == "h"
                    else SignedComplex(const, wcoord)
                )
                if previous is not None and _crosses_cut(fn, previous, z):
                    if trace.samples:
                        traces.append(trace)
                    segment += 1
                    trace = CurveTrace(f"{base_id}/seg{segment}", dropped=trace.dropped)
                previous = z
                try:
                    w = _eval_point(fn, z, prec)
                except PoleError:
                    trace.dropped += 1
                    continue
                trace.samples.append(TraceSample(wcoord, z, w))
            if trace.samples or trace.dropped:
                traces.append(trace)
    return traces


def emit_csv(traces: list[CurveTrace]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("curve", "label", "t", "z_re", "z_im", "w_re", "w_im"))
    for trace in traces:
        for s in trace.samples:
            writer.writerow(
                (
                    trace.curve_id,
                    s.label or "",
                    repr(s.t),
                    repr(s.z.re),
                    repr(s.z.im),
                    repr(s.w.re),
                    repr(s.w.im),
                )
            )
    return buf.getvalue()
