"""Command-line interface.

Exit codes: 0 = all requested checks pass, 1 = at least one residual is
nonzero (verification failure), 2 = input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import ParacontactError
from .loader import METRIC_MODE_FROM_FRAME, METRIC_MODE_PRINTED, load
from .report import SUITES, build_report, render_text


def _add_common(parser):
    parser.add_argument("file", help="manifold definition (JSON)")
    parser.add_argument(
        "--metric-mode",
        choices=[METRIC_MODE_FROM_FRAME, METRIC_MODE_PRINTED],
        default=None,
        help="override the file's metric mode",
    )
    parser.add_argument(
        "--format",
        choices=["text", "json"],
        default="text",
        help="report format (default: text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paracontact-verify",
        description=(
            "Exact symbolic classification, curvature, and soliton checks for "
            "3-dimensional almost paracontact metric manifolds."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="structure classification with axiom residuals")
    _add_common(p)

    p = sub.add_parser("curvature", help="Christoffel symbols, curvature, Einstein data")
    _add_common(p)
    p.add_argument(
        "--frame",
        action="store_true",
        help="include connection/curvature tables in the declared frame",
    )

    p = sub.add_parser("solitons", help="per-candidate Yamabe/Ricci soliton checks")
    _add_common(p)

    p = sub.add_parser("identities", help="identity suites (class, dim3, conformal)")
    _add_common(p)
    p.add_argument("--suite", choices=list(SUITES), required=True)

    p = sub.add_parser("report", help="everything in one report")
    _add_common(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        loaded = load(args.file, metric_mode=args.metric_mode)
        report = build_report(
            loaded,
            args.command,
            with_frame=getattr(args, "frame", False),
            suite=getattr(args, "suite", None),
        )
    except ParacontactError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(report))
    return 1 if report["failures"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
