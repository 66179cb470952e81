"""Command-line entry point.

Subcommands:

* ``run``            execute the 70-point suite against a provider
* ``map``            emit conformal-map trace CSV
* ``serve-protocol`` speak the provider side of the protocol on stdio

Exit status: 0 when every executed case passes, 1 when any case fails,
2 on usage or protocol errors.  Machine output goes to stdout (or
--out), diagnostics to stderr; identical invocations produce identical
bytes.
"""

from __future__ import annotations

import argparse
import sys

from . import mapper, report
from .errors import CcbenchError
from .fpcore import Precision
from .provider import BuiltinProvider, SubprocessProvider, serve_builtin
from .suite import run_suite

__all__ = ["main"]

_PRECISIONS = [p.value for p in Precision]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccbench",
        description="Branch-cut conformance harness for complex elementary functions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    run_p = sub.add_parser("run", help="run the 70-point branch-cut suite")
    run_p.add_argument("--precision", choices=_PRECISIONS, default="binary64")
    run_p.add_argument(
        "--provider",
        default="builtin",
        help='"builtin" or "cmd:<path with args>" for a subprocess provider',
    )
    run_p.add_argument("--mode", choices=["paper", "strict"], default="paper")
    run_p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    run_p.add_argument("--out", default="-", help="output path (default: stdout)")

    map_p = sub.add_parser("map", help="emit conformal-map traces as CSV")
    map_p.add_argument("--function", choices=sorted(mapper.MAP_FUNCTIONS), required=True)
    map_p.add_argument("--precision", choices=_PRECISIONS, default="binary64")
    map_p.add_argument("--samples", type=int, default=65, help="samples per cut side")
    map_p.add_argument("--max-magnitude", type=float, default=4.0)
    map_p.add_argument("--grid", action="store_true", help="append background grid traces")
    map_p.add_argument("--out", default="-")

    sub.add_parser("serve-protocol", help="serve the builtin provider on stdio")
    return parser


def _write_out(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _make_provider(spec: str):
    if spec == "builtin":
        return BuiltinProvider()
    if spec.startswith("cmd:"):
        command = spec[4:].strip()
        if not command:
            raise CcbenchError('provider "cmd:" needs a non-empty command')
        return SubprocessProvider(command)
    raise CcbenchError(f'unknown provider spec {spec!r} (use "builtin" or "cmd:...")')


def _cmd_run(args: argparse.Namespace) -> int:
    provider = _make_provider(args.provider)
    try:
        run = run_suite(provider, Precision(args.precision), args.mode)
    finally:
        provider.close()
    renderer = {
        "text": report.render_table,
        "csv": report.render_csv,
        "json": report.render_json,
    }[args.format]
    _write_out(args.out, renderer(run))
    print(f"ccbench: {report.summary(run)}", file=sys.stderr)
    return 0 if all(r.passed for r in run.results if r.actual is not None) else 1


def _cmd_map(args: argparse.Namespace) -> int:
    prec = Precision(args.precision)
    traces = mapper.trace_cuts(args.function, prec, args.samples, args.max_magnitude)
    if args.grid:
        traces += mapper.map_grid(args.function, prec)
    _write_out(args.out, mapper.emit_csv(traces))
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.subcommand == "run":
            return _cmd_run(args)
        if args.subcommand == "map":
            return _cmd_map(args)
        return serve_builtin()
    except BrokenPipeError:
        return 2
    except CcbenchError as exc:
        print(f"ccbench: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
