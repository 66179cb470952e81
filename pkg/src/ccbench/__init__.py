"""Branch-cut-correct complex elementary functions and a conformance
harness for testing any complex-math implementation on them.

The reference functions (log, sqrt, asin, acos, atan, asinh, acosh,
atanh, the Joukowski pair, and the cross map) honor IEEE signed zeros
and signed infinities on every branch cut.  The suite runs 70 cut
points against a provider, classifies failures with an eight-symbol
taxonomy, and renders paper-style tables, CSV, or JSON; external
implementations attach over a line-oriented stdio protocol.
"""

from .argument import SignedComplex, omega, principal_arg
from .errors import (
    CapabilityError,
    CcbenchError,
    DomainError,
    NonFiniteInputError,
    ParseError,
    PoleError,
    ProtocolError,
    SuiteRunError,
    UndefinedDistanceError,
    VersionError,
)
from .fpcore import (
    FloatClass,
    FormatParams,
    Precision,
    available_precisions,
    classify,
    copy_sign,
    decode_bits,
    encode_bits,
    format_params,
    round_to,
    sign_bit,
    ulp_distance,
)
from .provider import (
    FUNCTIONS,
    BuiltinProvider,
    SubprocessProvider,
    builtin_eval,
    serve_builtin,
)
from .refmath import (
    cacos,
    cacosh,
    casin,
    casinh,
    catan,
    catanh,
    cexp,
    clog,
    cross_map,
    csqrt,
    helper_b,
    helper_c,
    helper_d,
    joukowski,
    joukowski_inverse,
)
from .suite import (
    AnyFinite,
    CaseResult,
    ExactSigned,
    LowerBoundedFinite,
    ProviderCapabilities,
    SignedInf,
    SignedZero,
    SubnormalExpected,
    SuiteRun,
    TestCase,
    build_suite,
    classify_case,
    classify_component,
    run_suite,
)

__version__ = "0.1.0"
