"""Tests for the libm shim: protocol conformance, codec transparency,
and the full 70-case run driven by the harness.

The host runtime's pass rate is reported as a finding, not asserted:
the point of the shim is to measure the platform, not to pass.
"""

import random
import shutil
import subprocess
from pathlib import Path

import pytest

from ccbench.fpcore import Precision, decode_bits, encode_bits
from ccbench.provider import SubprocessProvider
from ccbench.report import render_table, summary
from ccbench.suite import run_suite

B32, B64 = Precision.BINARY32, Precision.BINARY64
SHIM_DIR = Path(__file__).parent
SHIM_BIN = SHIM_DIR / "ccbench-libm-shim"


@pytest.fixture(scope="module")
def shim_path():
    if shutil.which("make") is None or shutil.which("c++") is None:
        pytest.skip("no C++ toolchain available")
    build = subprocess.run(
        ["make", "-C", str(SHIM_DIR), "ccbench-libm-shim"], capture_output=True, text=True
    )
    assert build.returncode == 0, build.stderr
    assert SHIM_BIN.exists()
    return str(SHIM_BIN)


@pytest.fixture()
def shim(shim_path):
    with SubprocessProvider([shim_path], timeout=10.0) as provider:
        yield provider


class TestHandshake:
    def test_greeting(self, shim):
        caps = shim.capabilities()
        assert caps.precisions == frozenset({B32, B64})
        assert caps.subnormal_support in (True, False)


class TestProtocolConformance:
    def _talk(self, shim_path, lines, timeout=20):
        proc = subprocess.run(
            [shim_path], input="\n".join(lines) + "\n", capture_output=True, text=True, timeout=timeout
        )
        return proc

    def test_one_reply_per_request_and_clean_exit(self, shim_path):
        lines = ["HELLO", "EVAL log binary64 bff0000000000000 0000000000000000", "HELLO"]
        proc = self._talk(shim_path, lines)
        assert proc.returncode == 0
        assert len(proc.stdout.splitlines()) == 3

    def test_binary128_unsupported(self, shim_path):
        proc = self._talk(shim_path, ["EVAL acosh binary128 " + "0" * 32 + " " + "0" * 32])
        assert proc.stdout.splitlines() == ["UNSUPPORTED"]

    @pytest.mark.parametrize(
        "request_line",
        [
            "EVAL cbrt binary64 " + "0" * 16 + " " + "0" * 16,
            "EVAL log binary16 0000 0000",
            "EVAL log binary64 xyz xyz",
            "EVAL log binary64 " + "0" * 16,
            "EVAL log binary64 " + "0" * 16 + " " + "0" * 16 + " extra",
            "EVAL log binary64 " + "0" * 15 + " " + "0" * 16,
            "EVAL log binary64 " + "F" * 16 + " " + "0" * 16,  # uppercase hex
            "NONSENSE",
        ],
    )
    def test_malformed_requests_get_error_and_continue(self, shim_path, request_line):
        proc = self._talk(shim_path, [request_line, "HELLO"])
        assert proc.returncode == 0
        out = proc.stdout.splitlines()
        assert len(out) == 2
        assert out[0].startswith(("ERROR", "UNSUPPORTED"))
        assert out[1].startswith("CCBENCH 1 ")

    def test_fuzzed_lines_never_crash(self, shim_path):
        rng = random.Random(0x51)
        lines = []
        for _ in range(300):
            kind = rng.randrange(3)
            if kind == 0:
                lines.append("".join(chr(rng.randrange(32, 127)) for _ in range(rng.randrange(1, 60))))
            elif kind == 1:
                fn = rng.choice(["log", "sqrt", "asin", "acos", "atan", "asinh", "acosh", "atanh"])
                lines.append(
                    f"EVAL {fn} binary64 {rng.getrandbits(64):016x} {rng.getrandbits(64):016x}"
                )
            else:
                fn = rng.choice(["log", "sqrt", "atan"])
                lines.append(f"EVAL {fn} binary32 {rng.getrandbits(32):08x} {rng.getrandbits(32):08x}")
        proc = self._talk(shim_path, lines, timeout=60)
        assert proc.returncode == 0
        assert len(proc.stdout.splitlines()) == len(lines)

    def test_eof_without_input_exits_zero(self, shim_path):
        proc = self._talk(shim_path, [""])
        assert proc.returncode == 0 and proc.stdout == ""


class TestCodecTransparency:
    """Fixed points of the host functions show the shim's own decode ->
    encode path alters no bits, including zero signs."""

    @pytest.mark.parametrize(
        "fn,prec,re_hex,im_hex",
        [
            ("sqrt", B64, "3ff0000000000000", "0000000000000000"),  # sqrt(1+0i) = 1+0i
            ("asin", B64, "0000000000000000", "0000000000000000"),
            ("asin", B64, "8000000000000000", "8000000000000000"),  # odd: keeps -0s
            ("asin", B32, "80000000", "80000000"),
            ("sqrt", B32, "3f800000", "00000000"),
        ],
    )
    def test_fixed_points_pass_through(self, shim, fn, prec, re_hex, im_hex):
        from ccbench.argument import SignedComplex

        z = SignedComplex(decode_bits(re_hex, prec), decode_bits(im_hex, prec))
        w = shim.eval(fn, prec, z)
        assert w is not None
        assert encode_bits(w.re, prec) == re_hex
        assert encode_bits(w.im, prec) == im_hex


class TestFullRun:
    def test_binary64_run_completes_and_renders(self, shim, capsys):
        run = run_suite(shim, B64, "paper")
        assert len(run.results) == 70
        table = render_table(run)
        assert table.splitlines()[0].startswith("Provider:")
        assert "Pass rate" in table
        with capsys.disabled():
            print()
            print(table)
            print(f"host libm binary64 finding: {summary(run)}")

    def test_binary32_run_completes(self, shim, capsys):
        run = run_suite(shim, B32, "paper")
        assert len(run.results) == 70
        with capsys.disabled():
            print(f"host libm binary32 finding: {summary(run)}")
