"""``seids`` command line entry point."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional

from .errors import InputError, SeidsError
from .problem import load_problem
from .report import COMMANDS, error_payload, run


def _parse_sample(text: str) -> List[str]:
    return [v for v in text.replace(";", ",").split(",") if v.strip()]


_NEGATIVE_SAMPLE = re.compile(r"^-\d[\d/.,;-]*$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seids",
        description="Audit symmetric determinantal germs, compute their polar invariants, "
                    "and decide Whitney equisingularity of families.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        # let sample values such as -1/2 or -3,1/4 through as arguments
        p._negative_number_matcher = _NEGATIVE_SAMPLE
        p.add_argument("file", help="problem file (JSON)")
        p.add_argument("--seed", type=int, help="override the problem's seed")
        p.add_argument("--budget", type=int, help="S-pair budget per task")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--output", "-o", help="write the report here instead of stdout")
        if name == "family-check":
            p.add_argument("--samples", nargs="+", metavar="Y",
                           help="sample points, coordinates separated by commas")
            p.add_argument("--top-only", action="store_true",
                           help="only the top stratum (verdict scoped to that pair)")
        if name == "invariants":
            p.add_argument("--jobs", type=int, default=1, help="worker processes for samples")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format
    try:
        if args.budget is not None and args.budget < 1:
            raise InputError("--budget must be positive")
        spec = load_problem(args.file)
        source = "problem"
        if args.seed is not None:
            spec = spec.__class__(**{**spec.__dict__, "seed": args.seed})
            source = "cli"
        if getattr(args, "samples", None):
            spec = spec.with_samples([_parse_sample(s) for s in args.samples])
        report = run(args.command, spec, budget=args.budget, jobs=getattr(args, "jobs", 1),
                     top_only=getattr(args, "top_only", False), seed_source=source)
    except SeidsError as exc:
        _emit_error(exc, fmt)
        return exc.exit_code
    out = report.structured() if fmt == "structured" else report.text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return report.exit_code


def _emit_error(exc: Exception, fmt: str) -> None:
    payload = error_payload(exc)
    if fmt == "structured":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    sys.stderr.write(f"seids: error [{payload['error']['code']}]: {exc}\n")


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
