"""
dlab Command Line
Norms, diametral diagnostics, the identity suite, renorming sweeps and LP oracles
"""
import argparse
import json
import logging
import sys
from typing import Callable, Dict, List, Optional

from src.cli.identity_suite import format_table, run_suite
from src.cli.spacejson import dump_space, load_space, parse_float_list, parse_range, parse_vector
from src.cli.sweep import CONSTRUCTIONS, build_sweep, sweep_csv
from src.core.errors import DlabError, InvalidDescriptor, SpaceParseError
from src.core.norms import norm
from src.diag.checks import (
    daugavet_check, delta_deficiency, dpoint_deficiency, nabla_check, strongly_exposed_check,
)
from src.diag.report import DiagnosticReport, Verdict
from src.polytope.realize import to_vball

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_LOWER_BOUND = 4

VERDICT_EXIT = {
    Verdict.HOLDS: EXIT_OK,
    Verdict.FAILS: EXIT_FAILS,
    Verdict.LOWER_BOUND_ONLY: EXIT_LOWER_BOUND,
}
CHECKS = ("nabla", "dpoint", "daugavet", "exposed", "delta")


def _settings() -> Dict:
    from src.di.accessors import get_settings
    return get_settings()


def _configure_logging(verbose: bool) -> None:
    level_name = "DEBUG" if verbose else _settings().get("log_level", "WARNING")
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level_name, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(getattr(logging, level_name, logging.WARNING))


def cmd_norm(args: argparse.Namespace) -> int:
    space = load_space(args.space)
    value = norm(space, parse_vector(args.vector))
    print(f"{value:.12f}")
    return EXIT_OK


def cmd_oracle_gauge(args: argparse.Namespace) -> int:
    space = load_space(args.space)
    value = to_vball(space).gauge(parse_vector(args.vector))
    print(f"{value:.12f}")
    return EXIT_OK


def _run_check(args: argparse.Namespace, space, point) -> DiagnosticReport:
    settings = _settings()
    alpha = args.alpha if args.alpha is not None else settings["alpha_grid"][0]
    eps = args.eps if args.eps is not None else settings["nabla_eps"]
    cap = settings["midpoint_cap"]
    checks: Dict[str, Callable[[], DiagnosticReport]] = {
        "nabla": lambda: nabla_check(space, point, eps),
        "dpoint": lambda: dpoint_deficiency(space, point, alpha, cap),
        "daugavet": lambda: daugavet_check(space, point, alpha, eps, cap),
        "exposed": lambda: strongly_exposed_check(space, point, cap),
        "delta": lambda: delta_deficiency(space, point, alpha),
    }
    return checks[args.check]()


def cmd_diag(args: argparse.Namespace) -> int:
    space = load_space(args.space)
    point = parse_vector(args.point)
    report = _run_check(args, space, point)
    payload = report.to_dict()
    print(json.dumps(payload, indent=2))
    if args.save:
        from src.di.accessors import save_diagnostic_run
        success, message = save_diagnostic_run(payload, dump_space(space), point.to_json())
        (logger.info if success else logger.error)(message)
    return VERDICT_EXIT[report.verdict]


def cmd_verify(args: argparse.Namespace) -> int:
    rows = run_suite(args.only)
    if args.json:
        print(json.dumps([r.to_dict() for r in rows], indent=2))
    else:
        print(format_table(rows))
    if args.save:
        from src.di.accessors import save_verification_run
        success, message = save_verification_run([r.to_dict() for r in rows])
        (logger.info if success else logger.error)(message)
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAILS


def cmd_sweep(args: argparse.Namespace) -> int:
    settings = _settings()
    alphas = parse_float_list(args.alpha) if args.alpha else settings["alpha_grid"]
    frame = build_sweep(
        parse_range(args.dims),
        alphas,
        construction=args.construction,
        samples=settings["sweep_extreme_samples"],
        seed=settings["sweep_seed"],
        max_n=settings["sweep_max_n"],
    )
    text = sweep_csv(frame)
    if args.output:
        with open(args.output, "w", newline="") as f:
            f.write(text)
        logger.info(f"Wrote {len(frame)} sweep rows to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_history(args: argparse.Namespace) -> int:
    from src.di.accessors import get_run_history
    for entry in get_run_history(command=args.command, days=args.days):
        print(json.dumps(entry, sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dlab",
        description="Diametral-point diagnostics on finite-dimensional normed spaces",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="Norm of a vector")
    p.add_argument("space", help="Space JSON file or inline JSON")
    p.add_argument("--vector", required=True, help='Dense "1,0,2" or sparse {"1": 1, "3": 2}')
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("diag", help="Diametral diagnostic report as JSON")
    p.add_argument("space", help="Space JSON file or inline JSON")
    p.add_argument("--check", required=True, choices=CHECKS)
    p.add_argument("--point", required=True, help="Unit vector, dense or sparse")
    p.add_argument("--alpha", type=float, default=None, help="Slice depth (default: first of alpha_grid)")
    p.add_argument("--eps", type=float, default=None, help="Nabla threshold (default: nabla_eps)")
    p.add_argument("--save", action="store_true", help="Save the report and audit the run")
    p.set_defaults(func=cmd_diag)

    p = sub.add_parser("verify", aliases=["verify-paper", "verify-identities"], help="Run the identity suite")
    p.add_argument("--only", default=None, help="Restrict to one module")
    p.add_argument("--json", action="store_true", help="Machine-readable rows")
    p.add_argument("--save", action="store_true", help="Save the run and audit it")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="Renorming deficiency curves as CSV")
    p.add_argument("--construction", default="renorm-l2", choices=sorted(CONSTRUCTIONS))
    p.add_argument("--dims", default="2..12", help='Range "2..12" or list "2,4,8"')
    p.add_argument("--alpha", default=None, help="Comma-separated slice depths (default: alpha_grid)")
    p.add_argument("--output", "-o", default=None, help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="LP oracles independent of closed forms")
    oracle = p.add_subparsers(dest="oracle", required=True)
    g = oracle.add_parser("gauge", help="Gauge of the realized polytope ball")
    g.add_argument("space", help="Space JSON file or inline JSON")
    g.add_argument("--vector", required=True)
    g.set_defaults(func=cmd_oracle_gauge)

    p = sub.add_parser("history", help="Audit trail of saved runs as JSON lines")
    p.add_argument("--command", default=None, choices=("verify", "diag"))
    p.add_argument("--days", type=int, default=30)
    p.set_defaults(func=cmd_history)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Returns:
        0 Holds or success, 1 Fails or a failing suite row, 2 parse or
        descriptor error, 3 other domain error, 4 LowerBoundOnly
    """
    args = build_parser().parse_args(argv)
    try:
        _configure_logging(args.verbose)
        return args.func(args)
    except (SpaceParseError, InvalidDescriptor) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except DlabError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
