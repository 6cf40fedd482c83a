"""Command-line verification harness.

    ercd verify --suite ercd --format json --out report.json
    ercd dump --set percd29 --kind structure-constants --format csv

Exit status: 0 all checks pass, 1 verification failure, 2 usage or
configuration error. ERCD_OUT_DIR sets the default output directory for
relative output paths.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from .reporting import SUITE_NAMES, SuiteConfig
from .suites import DUMP_KINDS, dump_tables, run_suite

_SUITE_CHOICES = SUITE_NAMES + ("all",)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ercd",
        description="Verification engine for the 64-dimensional extended "
                    "real Clifford-Dirac operator algebra.")
    sub = parser.add_subparsers(dest="command")

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", action="append", choices=_SUITE_CHOICES,
                        help="suite to run (repeatable; default: all)")
    verify.add_argument("--mass", type=float, default=1.0,
                        help="mass parameter for momentum-space suites")
    verify.add_argument("--samples", type=int, default=200,
                        help="seeded momentum sample count")
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--tol", action="append", default=[],
                        metavar="KEY=VALUE",
                        help="tolerance override: momentum|symmetry|closure")
    verify.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
    verify.add_argument("--out", help="output path (default: stdout)")
    verify.add_argument("--timings", action="store_true",
                        help="include per-claim runtimes in JSON output")
    verify.add_argument("--inject-fault", metavar="GAMMA,ROW,COL",
                        help="test only: corrupt one generator matrix entry, "
                             "e.g. g2,0,1")

    dump = sub.add_parser("dump", help="dump complete operator tables")
    dump.add_argument("--set", required=True, dest="set_name",
                      help="cd16 | ercd64 | percd29 | so6 | a32 | pgi8")
    dump.add_argument("--kind", required=True, choices=DUMP_KINDS)
    dump.add_argument("--format", choices=("json", "csv"), default="json")
    dump.add_argument("--out", help="output path (default: stdout)")
    return parser


def _parse_tolerances(pairs: List[str]):
    out = []
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"bad tolerance override {pair!r}; "
                             "expected KEY=VALUE")
        key, value = pair.split("=", 1)
        if key not in ("momentum", "symmetry", "closure"):
            raise ValueError(f"unknown tolerance key {key!r}")
        out.append((key, float(value)))
    return tuple(out)


def _parse_fault(spec: Optional[str]):
    if spec is None:
        return None
    parts = spec.split(",")
    if len(parts) != 3:
        raise ValueError("fault spec must be GAMMA,ROW,COL (e.g. g2,0,1)")
    target, row, col = parts[0], int(parts[1]), int(parts[2])
    if target not in ("g0", "g1", "g2", "g3", "g4"):
        raise ValueError(f"unknown generator {target!r}")
    if not (0 <= row < 4 and 0 <= col < 4):
        raise ValueError("row/col must be in 0..3")
    return (target, row, col)


def _resolve_out(path: Optional[str]) -> Optional[str]:
    if path is None:
        return None
    if os.path.isabs(path):
        return path
    base = os.environ.get("ERCD_OUT_DIR")
    return os.path.join(base, path) if base else path


def _emit(content: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(content)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(content)


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] not in ("verify", "dump", "-h", "--help"):
        argv.insert(0, "verify")  # bare flags mean verify
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return 2

    try:
        if args.command == "dump":
            content = dump_tables(args.set_name, args.kind, args.format)
            _emit(content, _resolve_out(args.out))
            return 0

        config = SuiteConfig(
            suites=tuple(args.suite) if args.suite else ("all",),
            mass=args.mass,
            samples=args.samples,
            seed=args.seed,
            tolerances=_parse_tolerances(args.tol),
            fmt=args.format,
            out=args.out,
            inject_fault=_parse_fault(args.inject_fault),
            timings=args.timings,
        )
        ledger = run_suite(config)
        _emit(ledger.render(), _resolve_out(args.out))
        return 0 if ledger.passed else 1
    except (ValueError, OSError) as exc:
        print(f"ercd: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
