"""Exception types shared across the package."""

from __future__ import annotations


class CcbenchError(Exception):
    """Base class for all errors raised by this package."""


class CapabilityError(CcbenchError):
    """A precision or feature is not available on this platform/provider."""


class DomainError(CcbenchError, ValueError):
    """An argument lies outside an operation's mathematical domain."""


class NonFiniteInputError(CcbenchError, ValueError):
    """A complex-function input has a NaN or infinite component."""


class PoleError(CcbenchError, ZeroDivisionError):
    """A map was evaluated at a pole."""


class ParseError(CcbenchError, ValueError):
    """Malformed hex bit pattern or wire message."""


class UndefinedDistanceError(CcbenchError, ValueError):
    """ulp distance requested for NaN input."""


class ProtocolError(CcbenchError):
    """Wire-protocol violation: bad line, timeout, or closed channel."""


class VersionError(ProtocolError):
    """Peer speaks an unsupported protocol version."""


class SuiteRunError(CcbenchError):
    """A provider failed mid-run; partial results are attached."""

    def __init__(self, message: str, partial_results=None):
        super().__init__(message)
        self.partial_results = list(partial_results or [])
