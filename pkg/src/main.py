"""Command-line entry point.

Run as ``python -m src.main <command> [flags]`` or ``python src/main.py <command> [flags]``.
Exit codes: 0 pass, 1 fail, 2 usage error, 3 counterexample candidate.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

if __package__ in (None, ''):
    sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.cli.commands import cmd_check_lemmas, cmd_estimate, cmd_explore, cmd_extremal, cmd_verify_identities
from src.matcore.matrices import MatrixClass
from src.reporting.reporter import Report, ReportGenerator
from src.utils.config import ToolkitSettings, load_config, resolve_seed
from src.utils.exceptions import ConfigError, DdvvError, UnsupportedCaseError
from src.utils.logger import setup_logging

EXIT_CODES = {'pass': 0, 'fail': 1, 'counterexample': 3}
EXIT_USAGE = 2

CLASS_CHOICES = [cls.value for cls in MatrixClass]


def _add_common(parser: argparse.ArgumentParser, threads: bool = True) -> None:
    parser.add_argument('--config', help='YAML configuration file')
    parser.add_argument('--seed', type=int, help='root seed (falls back to DDVV_SEED, then the config file)')
    if threads:
        parser.add_argument('--threads', type=int, help='worker threads')
    parser.add_argument('--output', metavar='PATH', help='report JSON path')
    parser.add_argument('--log-level', default=None, help='logging level, e.g. DEBUG')


def _add_case(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--class', dest='matrix_class', choices=CLASS_CHOICES, default='hermitian')
    parser.add_argument('--m', type=int, required=True)
    parser.add_argument('--n', type=int, required=True)


def _add_budgets(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--restarts', type=int)
    parser.add_argument('--iters', type=int)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(prog='ddvv', description='DDVV-type inequality toolkit')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('verify-identities', help='check basis and compound-matrix identities')
    _add_common(p, threads=False)
    p.add_argument('--n-range', type=int, nargs=2, metavar=('LOW', 'HIGH'))

    p = sub.add_parser('check-lemmas', help='randomized falsification of the lemmas')
    _add_common(p)
    p.add_argument('--n-range', type=int, nargs=2, metavar=('LOW', 'HIGH'))
    p.add_argument('--trials', type=int)

    p = sub.add_parser('estimate', help='estimate a sharp constant by search')
    _add_common(p)
    _add_case(p)
    _add_budgets(p)
    p.add_argument('--tol', type=float, help='gradient-norm stopping tolerance')
    p.add_argument('--trace-csv', metavar='PATH', help='write the ratio-vs-iteration trace')

    p = sub.add_parser('extremal', help='build and evaluate an equality tuple')
    _add_common(p, threads=False)
    _add_case(p)
    p.add_argument('--lambda', dest='lam', type=float, default=1.0)
    p.add_argument('--theta', type=float, default=0.0)

    p = sub.add_parser('explore', help='probe the 4/3 conjecture for general matrices')
    _add_common(p)
    p.add_argument('--m', type=int, default=3)
    p.add_argument('--n', type=int, required=True)
    _add_budgets(p)
    return parser


def run(args: argparse.Namespace, settings: ToolkitSettings) -> Report:
    """Set up logging, resolve the seed and dispatch to the command."""
    level = getattr(logging, (args.log_level or settings.log.level).upper(), logging.INFO)
    setup_logging(settings.paths.logs if settings.log.to_file else None, level)
    seed = resolve_seed(args.seed, settings)

    if args.command == 'verify-identities':
        return cmd_verify_identities(settings, seed, n_range=args.n_range)
    if args.command == 'check-lemmas':
        return cmd_check_lemmas(settings, seed, n_range=args.n_range, trials=args.trials, threads=args.threads)
    if args.command == 'estimate':
        return cmd_estimate(
            settings, MatrixClass(args.matrix_class), args.m, args.n, seed,
            restarts=args.restarts, iters=args.iters, tol=args.tol, threads=args.threads,
            trace_csv=args.trace_csv,
        )
    if args.command == 'extremal':
        return cmd_extremal(settings, MatrixClass(args.matrix_class), args.m, args.n, args.lam, args.theta)
    return cmd_explore(settings, args.m, args.n, seed, restarts=args.restarts, iters=args.iters,
                       threads=args.threads)


def main(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv``, run the command, write the report and return the exit code."""
    args = build_parser().parse_args(argv)
    logger = logging.getLogger('ddvv')
    try:
        settings = load_config(args.config)
        report = run(args, settings)
        generator = ReportGenerator(settings.model_dump())
        path = generator.write_report(report, args.output)
    except (ConfigError, UnsupportedCaseError) as e:
        logger.error(f"Usage error: {str(e)}")
        return EXIT_USAGE
    except DdvvError as e:
        logger.error(f"{args.command} failed: {str(e)}")
        return EXIT_CODES['fail']
    print(f"{args.command}: {report.status} (report: {path})")
    return EXIT_CODES[report.status]


if __name__ == '__main__':
    sys.exit(main())
