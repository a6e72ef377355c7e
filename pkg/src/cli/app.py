import argparse
import sys
from typing import Optional, Sequence

from src.cli.commands import CommandResult, cmd_chi, cmd_family, cmd_search, cmd_verify_paper
from src.cli.error_classification import error_prefix, exit_status_for
from src.cli.render import OutputFormat
from src.common.exceptions import EngineError
from src.common.log import get_logger
from src.common.settings import get_settings

logger = get_logger("cli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3-families",
        description="Intersection theory on products of projective spaces and K3 complete-intersection families",
    )
    formats = [f.value for f in OutputFormat]
    subparsers = parser.add_subparsers(dest="command", required=True)

    verify = subparsers.add_parser("verify-paper", help="recompute the three published constructions")
    verify.add_argument("--format", choices=formats, default=OutputFormat.TEXT.value)
    verify.add_argument(
        "--strict",
        action="store_true",
        default=None,
        help="fail on known printed typos as well",
    )

    family = subparsers.add_parser("family", help="the construction for a given genus, with its report")
    family.add_argument("--genus", type=int, required=True)
    family.add_argument("--format", choices=formats, default=OutputFormat.TEXT.value)

    chi = subparsers.add_parser("chi", help="Euler characteristics by every applicable oracle")
    chi.add_argument("--ambient", required=True, help="factor dimensions, e.g. 1,3")
    chi.add_argument("--bundle", default=None, help='split bundle, e.g. "1,1;1,3"')
    chi.add_argument("--twist", required=True, help="multidegree, e.g. 1,1")
    chi.add_argument("--format", choices=formats, default=OutputFormat.TEXT.value)

    search = subparsers.add_parser("search", help="enumerate split-bundle families of a given genus")
    search.add_argument("--genus", type=int, required=True)
    search.add_argument("--max-n", type=int, required=True)
    search.add_argument("--max-deg", type=int, required=True)
    search.add_argument(
        "--general-products",
        action="store_true",
        help="also search P^m x P^n with m > 1",
    )
    search.add_argument("--format", choices=formats, default=OutputFormat.TEXT.value)
    return parser


def dispatch(args: argparse.Namespace) -> CommandResult:
    fmt = OutputFormat(args.format)
    if args.command == "verify-paper":
        strict = args.strict if args.strict is not None else get_settings().strict
        return cmd_verify_paper(fmt, strict=strict)
    if args.command == "family":
        return cmd_family(args.genus, fmt)
    if args.command == "chi":
        return cmd_chi(args.ambient, args.twist, args.bundle, fmt)
    return cmd_search(
        args.genus, args.max_n, args.max_deg, fmt, include_general_products=args.general_products
    )


def execute(argv: Optional[Sequence[str]] = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse already printed its usage message
        return CommandResult(exit_status=int(e.code or 0))
    try:
        return dispatch(args)
    except EngineError as e:
        logger.debug(f"{args.command} failed: {e.message}")
        return CommandResult(exit_status=exit_status_for(e), stderr=f"{error_prefix(e)}: {e.message}\n")
    except Exception as e:
        logger.exception(f"Unexpected error in {args.command}: {str(e)}")
        return CommandResult(exit_status=3, stderr=f"INTERNAL: {str(e)}\n")


def run(argv: Optional[Sequence[str]] = None) -> int:
    result = execute(argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_status
