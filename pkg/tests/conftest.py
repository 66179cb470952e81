import mpmath as mp
import pytest

from ccbench.fpcore import Precision, encode_bits

mp.mp.dps = 60


@pytest.fixture(params=[Precision.BINARY32, Precision.BINARY64], ids=["b32", "b64"])
def prec(request):
    return request.param


def bits_of(v: float, prec: Precision = Precision.BINARY64) -> str:
    return encode_bits(v, prec)


def same_float(a: float, b: float, prec: Precision = Precision.BINARY64) -> bool:
    """Bit-pattern equality: distinguishes +-0, compares NaNs by payload."""
    return encode_bits(a, prec) == encode_bits(b, prec)
