"""Principal argument with signed-zero-aware quadrant selection.

The quadrant is chosen by the sign *bits* of the components, so x = -0
counts as the second/third quadrant and boundary points on a branch cut
get the argument of the side their zero sign encodes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonFiniteInputError
from .fpcore import Precision, round_to, sign_bit

__all__ = ["SignedComplex", "omega", "principal_arg"]


@dataclass(frozen=True)
class SignedComplex:
    """Complex value as a pair of floats, zero signs preserved."""

    re: float
    im: float

    def conjugate(self) -> "SignedComplex":
        return SignedComplex(self.re, -self.im)

    def __neg__(self) -> "SignedComplex":
        return SignedComplex(-self.re, -self.im)

    def __str__(self) -> str:
        return f"({self.re!r}, {self.im!r})"


def _check_not_nan(*vals: float) -> None:
    for v in vals:
        if math.isnan(v):
            raise NonFiniteInputError("NaN component")


def _omega64(x: float, y: float) -> float:
    ax, ay = abs(x), abs(y)
    if ay == 0.0:
        # Covers the origin as well: omega(+-0, +-0) := 0 by convention.
        return 0.0
    if ax == 0.0:
        return math.pi / 2
    return math.atan2(ay, ax)


def omega(x: float, y: float, prec: Precision = Precision.BINARY64) -> float:
    """arctan|y/x| in [0, pi/2], with |y|/0 -> pi/2 and 0/x -> 0."""
    _check_not_nan(x, y)
    return round_to(prec, _omega64(x, y))


def principal_arg(z: SignedComplex, prec: Precision = Precision.BINARY64) -> float:
    """Arg z in [-pi, pi], quadrant selected by component sign bits.

    For y = +-0 and x < 0 the result is exactly the format's
    nearest-representable pi, with the sign of y.
    """
    _check_not_nan(z.re, z.im)
    w = _omega64(z.re, z.im)
    if sign_bit(z.re):
        w = math.pi - w
    if sign_bit(z.im):
        w = -w
    return round_to(prec, w)
