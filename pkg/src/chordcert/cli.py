"""Command line interface for chordcert."""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from chordcert._version import get_build_info, get_version
from chordcert.certificate import canonical_json, certify, render_text
from chordcert.config import MAX_FIELD_LIMIT, ConfigManager
from chordcert.curve import WeierstrassCurve, parse_curve_point, parse_curve_spec
from chordcert.errors import ChordCertError, DomainError, ParseError
from chordcert.fields import parse_field_spec
from chordcert.harness import render_report_text, run_sweep, verify_group_axioms
from chordcert.journal import SweepJournal

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def setup_logging(level: str = "INFO"):
    """Setup logging configuration."""
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level.upper())


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info(f"Wrote {args.out}")
    else:
        sys.stdout.write(text)


def _emit_json(args, payload: Dict[str, Any]) -> None:
    _emit(args, json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))


def _curve(args) -> WeierstrassCurve:
    field = parse_field_spec(args.field)
    return parse_curve_spec(field, args.curve)


def cmd_points(args) -> int:
    """List the points of a curve over a finite field, O last."""
    curve = _curve(args)
    points = curve.points()
    ordered = [str(p) for p in points[1:]] + [str(points[0])]
    if args.format == "json":
        _emit_json(args, {"field": str(curve.field), "curve": curve.spec(), "points": ordered})
    else:
        _emit(args, "\n".join(ordered))
    return EXIT_OK


def _binary(args, op: str) -> int:
    curve = _curve(args)
    p = parse_curve_point(curve, args.p)
    q = parse_curve_point(curve, args.q)
    result = curve.add(p, q) if op == "add" else curve.star(p, q)
    if args.format == "json":
        _emit_json(args, {"field": str(curve.field), "curve": curve.spec(), "op": op,
                          "p": str(p), "q": str(q), "result": str(result)})
    else:
        _emit(args, str(result))
    return EXIT_OK


def cmd_add(args) -> int:
    """P + Q."""
    return _binary(args, "add")


def cmd_star(args) -> int:
    """P * Q, the third intersection point."""
    return _binary(args, "star")


def cmd_negate(args) -> int:
    curve = _curve(args)
    p = parse_curve_point(curve, args.p)
    result = curve.negate(p)
    if args.format == "json":
        _emit_json(args, {"field": str(curve.field), "curve": curve.spec(), "op": "negate",
                          "p": str(p), "result": str(result)})
    else:
        _emit(args, str(result))
    return EXIT_OK


def cmd_certify(args) -> int:
    """Certify (P*Q)*(-R) = (R*Q)*(-P) for one triple."""
    curve = _curve(args)
    p, q, r = (parse_curve_point(curve, text) for text in (args.p, args.q, args.r))
    cert = certify(curve, p, q, r)
    if args.format == "json":
        _emit(args, canonical_json(cert))
    else:
        _emit(args, render_text(cert))
    return EXIT_OK if cert.verdict else EXIT_FAILURE


def cmd_axioms(args) -> int:
    curve = _curve(args)
    n = len(curve.points())
    checks = verify_group_axioms(curve)
    if args.format == "json":
        _emit_json(args, {"field": str(curve.field), "curve": curve.spec(), "points": n,
                          "checks": checks, "ok": True})
    else:
        _emit(args, f"{curve}: {n} points, {checks} axiom checks passed")
    return EXIT_OK


def cmd_sweep(args) -> int:
    """Run the exhaustive sweep described by the configuration file."""
    manager = ConfigManager(args.config)
    config = manager.sweep_config
    if not args.log_level:
        logging.getLogger().setLevel(config.log_level)
    if args.max_field is not None:
        if args.max_field > MAX_FIELD_LIMIT or args.max_field < 2:
            raise ParseError(
                f"--max-field must be between 2 and {MAX_FIELD_LIMIT}, got {args.max_field}"
            )
        config.max_field = args.max_field
    if args.workers is not None:
        if args.workers < 1:
            raise ParseError(f"--workers must be positive, got {args.workers}")
        config.workers = args.workers
    journal_path = args.journal or config.journal_path
    journal = SweepJournal(journal_path) if journal_path else None

    report = run_sweep(
        config, journal, manager.get_config_hash(), include_rational=not args.skip_rational
    )
    if args.format == "json":
        _emit(args, canonical_json(report))
    else:
        _emit(args, render_report_text(report))
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_version(args) -> int:
    """Show version information."""
    if args.verbose:
        build_info = get_build_info()
        print(f"chordcert {build_info['version']}")
        print(f"Commit: {build_info['commit_hash']}")
        print(f"Date: {build_info['commit_date']}")
    else:
        print(f"chordcert {get_version()}")
    return EXIT_OK


def _add_curve_args(parser: argparse.ArgumentParser, points: str = "") -> None:
    parser.add_argument("--field", required=True, help="Field spec: p=5, p=2,k=2,mod=1,1,1 or Q")
    parser.add_argument("--curve", required=True, help="Coefficients a1,a2,a3,a4,a6")
    for name in points:
        parser.add_argument(
            f"--{name}", required=True, help=f"Point {name.upper()}: O, (x,y) or [x:y:z]"
        )
    parser.add_argument("--format", choices=["text", "json"], default="text", help="Output format")
    parser.add_argument("--out", "-o", help="Write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordcert",
        description="chordcert - exact chord-tangent arithmetic and associativity certificates",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  chordcert points --field p=5 --curve 0,0,0,1,1
  chordcert add --field p=5 --curve 0,0,0,1,1 --p "(0,1)" --q "(2,1)"
  chordcert certify --field p=5 --curve 0,0,0,1,1 --p "(0,1)" --q "(2,1)" --r O --format json
  chordcert sweep --max-field 7 --workers 4 --format json --out report.json
        """,
    )

    parser.add_argument("--version", action="version", version=f"chordcert {get_version()}")
    parser.add_argument("--config", "-c", help="Path to sweep config file",
                        default=os.getenv("CHORDCERT_CONFIG", "./config/sweep.yaml"))
    parser.add_argument("--log-level", "-l", choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        default=None, help="Log level")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    points_parser = subparsers.add_parser("points", help="List the points of a curve")
    _add_curve_args(points_parser)
    points_parser.set_defaults(func=cmd_points)

    add_parser = subparsers.add_parser("add", help="Add two points")
    _add_curve_args(add_parser, "pq")
    add_parser.set_defaults(func=cmd_add)

    star_parser = subparsers.add_parser(
        "star", help="Third intersection of the line through two points"
    )
    _add_curve_args(star_parser, "pq")
    star_parser.set_defaults(func=cmd_star)

    negate_parser = subparsers.add_parser("negate", help="Negate a point")
    _add_curve_args(negate_parser, "p")
    negate_parser.set_defaults(func=cmd_negate)

    certify_parser = subparsers.add_parser("certify", help="Certify associativity on a triple")
    _add_curve_args(certify_parser, "pqr")
    certify_parser.set_defaults(func=cmd_certify)

    axioms_parser = subparsers.add_parser("axioms", help="Check the group axioms on one curve")
    _add_curve_args(axioms_parser)
    axioms_parser.set_defaults(func=cmd_axioms)

    sweep_parser = subparsers.add_parser("sweep", help="Certify every triple on every small curve")
    sweep_parser.add_argument("--max-field", type=int,
                              help=f"Largest field size (at most {MAX_FIELD_LIMIT})")
    sweep_parser.add_argument("--workers", "-w", type=int, help="Worker processes")
    sweep_parser.add_argument("--journal", help="Append JSON-lines sweep events to this file")
    sweep_parser.add_argument("--skip-rational", action="store_true",
                              help="Skip the spot check over Q")
    sweep_parser.add_argument("--format", choices=["text", "json"], default="text",
                              help="Output format")
    sweep_parser.add_argument("--out", "-o", help="Write output to this file instead of stdout")
    sweep_parser.set_defaults(func=cmd_sweep)

    version_parser = subparsers.add_parser("version", help="Show version information")
    version_parser.add_argument("--verbose", "-v", action="store_true",
                                help="Show detailed version information")
    version_parser.set_defaults(func=cmd_version)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(args.log_level or os.getenv("CHORDCERT_LOG_LEVEL", "INFO"))

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        return args.func(args)
    except ParseError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"Error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except ChordCertError as e:
        print(f"Internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
