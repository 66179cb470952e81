"""Evaluation providers and the CCBENCH 1 wire protocol.

A provider evaluates one of the eight functions at a complex point and
either returns the result or reports the argument unsupported.  The
built-in provider dispatches to the reference implementations; external
implementations are driven over a line-oriented text protocol on their
standard streams:

    harness -> provider   HELLO
    provider -> harness   CCBENCH 1 SUBNORMALS yes|no PRECISIONS p1,p2[,p3]
    harness -> provider   EVAL <function> <precision> <re_hex> <im_hex>
    provider -> harness   OK <re_hex> <im_hex> | UNSUPPORTED | ERROR <message>

Values travel as fixed-width lowercase hex of the IEEE interchange bit
pattern (8/16/32 digits), never as decimal text, so zero signs, NaN
payloads and subnormals cross the process boundary bit-exactly.
"""

from __future__ import annotations

import os
import select
import shlex
import subprocess
import sys
import time
from dataclasses import dataclass
from typing import Callable, TextIO

from . import refmath
from .argument import SignedComplex
from .errors import CcbenchError, ProtocolError, VersionError
from .fpcore import Precision, available_precisions, decode_bits, encode_bits
from .suite import ProviderCapabilities

__all__ = [
    "FUNCTIONS",
    "EvalRequest",
    "EvalResponse",
    "BuiltinProvider",
    "SubprocessProvider",
    "builtin_eval",
    "handshake",
    "remote_eval",
    "serve_builtin",
    "default_timeout",
]

FUNCTIONS = ("log", "sqrt", "asin", "acos", "atan", "asinh", "acosh", "atanh")

_DISPATCH: dict[str, Callable[[SignedComplex, Precision], SignedComplex]] = {
    "log": refmath.clog,
    "sqrt": refmath.csqrt,
    "asin": refmath.casin,
    "acos": refmath.cacos,
    "atan": refmath.catan,
    "asinh": refmath.casinh,
    "acosh": refmath.cacosh,
    "atanh": refmath.catanh,
}

PROTOCOL_VERSION = "1"
TIMEOUT_ENV = "CCBENCH_TIMEOUT_SECS"


def default_timeout() -> float:
    """Per-eval timeout in seconds; CCBENCH_TIMEOUT_SECS overrides."""
    raw = os.environ.get(TIMEOUT_ENV)
    if raw is None:
        return 5.0
    try:
        value = float(raw)
    except ValueError:
        raise CcbenchError(f"invalid {TIMEOUT_ENV}={raw!r}") from None
    if value <= 0:
        raise CcbenchError(f"{TIMEOUT_ENV} must be positive")
    return value


@dataclass(frozen=True)
class EvalRequest:
    function: str
    precision: Precision
    re_hex: str
    im_hex: str

    def line(self) -> str:
        return f"EVAL {self.function} {self.precision.value} {self.re_hex} {self.im_hex}"


@dataclass(frozen=True)
class EvalResponse:
    status: str  # "ok" | "unsupported" | "error"
    re_hex: str | None = None
    im_hex: str | None = None
    message: str | None = None


def builtin_eval(function: str, prec: Precision, z: SignedComplex) -> SignedComplex:
    """Dispatch to the reference implementation; bit-stable across calls."""
    try:
        impl = _DISPATCH[function]
    except KeyError:
        raise CcbenchError(f"unknown function {function!r}") from None
    return impl(z, prec)


class BuiltinProvider:
    """In-process provider backed by the reference implementations."""

    name = "builtin"

    def capabilities(self) -> ProviderCapabilities:
        return ProviderCapabilities(True, frozenset(available_precisions()))

    def eval(self, function: str, prec: Precision, z: SignedComplex) -> SignedComplex | None:
        return builtin_eval(function, prec, z)

    def close(self) -> None:
        pass


def handshake(channel) -> ProviderCapabilities:
    """Send HELLO and parse the greeting into capabilities."""
    channel.send_line("HELLO")
    line = channel.recv_line()
    tokens = line.split()
    if len(tokens) != 6 or tokens[0] != "CCBENCH":
        raise ProtocolError(f"malformed greeting: {line!r}")
    if tokens[1] != PROTOCOL_VERSION:
        raise VersionError(f"unsupported protocol version {tokens[1]!r}")
    if tokens[2] != "SUBNORMALS" or tokens[3] not in ("yes", "no"):
        raise ProtocolError(f"malformed SUBNORMALS token in {line!r}")
    if tokens[4] != "PRECISIONS":
        raise ProtocolError(f"malformed PRECISIONS token in {line!r}")
    precisions: set[Precision] = set()
    for name in tokens[5].split(","):
        try:
            precisions.add(Precision(name))
        except ValueError:
            raise ProtocolError(f"unknown precision {name!r} in greeting") from None
    if not precisions:
        raise ProtocolError("provider advertises no precisions")
    return ProviderCapabilities(tokens[3] == "yes", frozenset(precisions))


def _hex_width(prec: Precision) -> int:
    return {"binary32": 8, "binary64": 16, "binary128": 32}[prec.value]


def remote_eval(channel, req: EvalRequest) -> EvalResponse:
    """One EVAL round trip; bit patterns pass through unmodified."""
    channel.send_line(req.line())
    line = channel.recv_line()
    if line == "UNSUPPORTED":
        return EvalResponse("unsupported")
    if line.startswith("ERROR"):
        return EvalResponse("error", message=line[5:].strip())
    tokens = line.split()
    if len(tokens) == 3 and tokens[0] == "OK":
        width = _hex_width(req.precision)
        for tok in tokens[1:]:
            if len(tok) != width or any(c not in "0123456789abcdef" for c in tok):
                raise ProtocolError(f"bad hex in response: {line!r}")
        return EvalResponse("ok", tokens[1], tokens[2])
    raise ProtocolError(f"malformed response line: {line!r}")


class _PipeChannel:
    """Line channel over a subprocess's pipes with a per-line timeout."""

    def __init__(self, proc: subprocess.Popen, timeout: float):
        self._proc = proc
        self._timeout = timeout
        self._buf = bytearray()

    def send_line(self, line: str) -> None:
        try:
            self._proc.stdin.write((line + "\n").encode("ascii"))
            self._proc.stdin.flush()
        except (BrokenPipeError, OSError) as exc:
            raise ProtocolError(f"provider stdin closed: {exc}") from exc

    def recv_line(self) -> str:
        fd = self._proc.stdout.fileno()
        deadline = time.monotonic() + self._timeout
        while True:
            nl = self._buf.find(b"\n")
            if nl >= 0:
                line = self._buf[:nl].decode("ascii", "replace").rstrip("\r")
                del self._buf[: nl + 1]
                return line
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                raise ProtocolError(f"provider timed out after {self._timeout} s")
            ready, _, _ = select.select([fd], [], [], remaining)
            if not ready:
                raise ProtocolError(f"provider timed out after {self._timeout} s")
            chunk = os.read(fd, 65536)
            if not chunk:
                raise ProtocolError("provider closed its output stream")
            self._buf.extend(chunk)


class SubprocessProvider:
    """Drives an external provider process over the wire protocol.

    ERROR replies are reported on the diagnostic stream and the case is
    treated as not implemented with this argument.  One session is
    strictly sequential; protocol-level failures raise ProtocolError.
    """

    def __init__(self, command: list[str] | str, timeout: float | None = None):
        if isinstance(command, str):
            command = shlex.split(command)
        if not command:
            raise CcbenchError("empty provider command")
        self.command = command
        self.name = command[0]
        self._timeout = default_timeout() if timeout is None else timeout
        self._proc: subprocess.Popen | None = None
        self._channel: _PipeChannel | None = None
        self._caps: ProviderCapabilities | None = None

    def _ensure_started(self) -> _PipeChannel:
        if self._channel is None:
            try:
                self._proc = subprocess.Popen(
                    self.command,
                    stdin=subprocess.PIPE,
                    stdout=subprocess.PIPE,
                    stderr=None,  # diagnostics pass through
                )
            except OSError as exc:
                raise ProtocolError(f"cannot start provider {self.command!r}: {exc}") from exc
            self._channel = _PipeChannel(self._proc, self._timeout)
        return self._channel

    def capabilities(self) -> ProviderCapabilities:
        if self._caps is None:
            self._caps = handshake(self._ensure_started())
        return self._caps

    def eval(self, function: str, prec: Precision, z: SignedComplex) -> SignedComplex | None:
        channel = self._ensure_started()
        req = EvalRequest(
            function, prec, encode_bits(z.re, prec), encode_bits(z.im, prec)
        )
        resp = remote_eval(channel, req)
        if resp.status == "unsupported":
            return None
        if resp.status == "error":
            print(
                f"ccbench: provider error on {function} {prec.value}: {resp.message}",
                file=sys.stderr,
            )
            return None
        return SignedComplex(
            decode_bits(resp.re_hex, prec), decode_bits(resp.im_hex, prec)
        )

    def close(self) -> None:
        if self._proc is not None:
            try:
                self._proc.stdin.close()
            except OSError:
                pass
            try:
                self._proc.wait(timeout=2.0)
            except subprocess.TimeoutExpired:
                self._proc.kill()
                self._proc.wait()
            self._proc = None
            self._channel = None

    def __enter__(self) -> "SubprocessProvider":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def serve_builtin(input_stream: TextIO | None = None, output_stream: TextIO | None = None) -> int:
    """Speak the provider side of the protocol backed by builtin_eval.

    Runs until end-of-input; malformed requests get an ERROR reply plus a
    note on the diagnostic stream, and the loop continues.  Returns 0.
    """
    fin = sys.stdin if input_stream is None else input_stream
    fout = sys.stdout if output_stream is None else output_stream

    def reply(text: str) -> None:
        fout.write(text + "\n")
        fout.flush()

    precisions = ",".join(p.value for p in available_precisions())
    for raw in fin:
        line = raw.strip()
        if not line:
            continue
        if line == "HELLO":
            reply(f"CCBENCH {PROTOCOL_VERSION} SUBNORMALS yes PRECISIONS {precisions}")
            continue
        tokens = line.split()
        if tokens[0] != "EVAL" or len(tokens) != 5:
            print(f"ccbench-serve: bad request {line!r}", file=sys.stderr)
            reply("ERROR malformed request")
            continue
        _, fn, prec_name, re_hex, im_hex = tokens
        try:
            prec = Precision(prec_name)
        except ValueError:
            reply(f"ERROR unknown precision {prec_name}")
            continue
        if fn not in FUNCTIONS:
            reply(f"ERROR unknown function {fn}")
            continue
        if prec not in available_precisions():
            reply("UNSUPPORTED")
            continue
        try:
            z = SignedComplex(decode_bits(re_hex, prec), decode_bits(im_hex, prec))
            w = builtin_eval(fn, prec, z)
        except CcbenchError as exc:
            reply(f"ERROR {exc}")
            continue
        reply(f"OK {encode_bits(w.re, prec)} {encode_bits(w.im, prec)}")
    return 0
