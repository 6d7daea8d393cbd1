"""
Hodge Atlas CLI - Command Line Interface

Exit codes: 0 on success, 1 on a domain error (reported with the violated invariant),
2 on a usage error.
"""

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Callable, Dict, List, Optional

import mpmath
from loguru import logger
from pydantic import ValidationError

from hodge_atlas import __version__
from hodge_atlas.config.config import configs
from hodge_atlas.config.hodge_constants import TowerFamilies
from hodge_atlas.covers.cyclic_covers import vz_tower_report
from hodge_atlas.covers.hypersurface import hypersurface_diamond, hypersurface_hodge_oracle
from hodge_atlas.exceptions import HodgeAtlasException
from hodge_atlas.hodge.diamond import betti_numbers
from hodge_atlas.io import report_service
from hodge_atlas.linalg.selftest import run_selftest
from hodge_atlas.models.period_models import PeriodValue
from hodge_atlas.periods.appell import appell_f1, appell_f1_integral
from hodge_atlas.periods.cm_detect import cm_detect
from hodge_atlas.periods.elliptic import elliptic_periods, tau
from hodge_atlas.periods.hypergeometric import schwarz_T, schwarz_T_series
from hodge_atlas.periods.period_factory import PeriodFactory
from hodge_atlas.periods.precision import to_mpc, working_precision
from hodge_atlas.towers.bv_tower import run_tower
from hodge_atlas.utils.common import parse_complex, parse_list, to_json

# period kinds whose value can be re-evaluated for cm-detect
DETECTABLE_PERIODS = ("tau", "schwarz")


def setup_logging(verbose: bool = False) -> None:
    """
    Configure loguru: stderr at HODGE_LOG_LEVEL (DEBUG with --verbose), plus a file sink
    when HODGE_LOG_FILE is set. Reports go to stdout only.
    """
    level = "DEBUG" if verbose else configs.HODGE_LOG_LEVEL
    logger.remove()
    logger.add(sys.stderr, level=level, format="{time:HH:mm:ss} | {level: <8} | {name}:{line} - {message}")
    if configs.HODGE_LOG_FILE:
        logger.add(configs.HODGE_LOG_FILE, level="DEBUG", rotation="10 MB")


def _precision(args: argparse.Namespace) -> int:
    prec = configs.HODGE_PREC if args.prec is None else args.prec
    configs.validate_precision(prec)
    return prec


def _emit(args: argparse.Namespace, payload, table: Callable[[], str]) -> None:
    if args.emit == "json":
        print(to_json(payload))
    else:
        print(table())


# evaluations per grid point; module level so worker processes can import them

def _elliptic_point(lam: str, prec: int) -> Dict[str, PeriodValue]:
    omega1, omega2 = elliptic_periods(lam, prec)
    return {"omega1": omega1, "omega2": omega2, "tau": tau(lam, prec)}


def _schwarz_point(s: str, prec: int) -> Dict[str, PeriodValue]:
    out = {"T": schwarz_T(s, prec)}
    with working_precision(prec):
        inside = abs(to_mpc(s)) < 1
    if inside:
        out["T-series"] = schwarz_T_series(s, prec)
    return out


def _evaluate_grid(point_fn: Callable, points: List[str], prec: int, jobs: int) -> Dict[str, Dict[str, PeriodValue]]:
    configs.validate_jobs(jobs)
    worker = partial(point_fn, prec=prec)
    if jobs == 1 or len(points) == 1:
        results = [worker(p) for p in points]
    else:
        logger.debug(f"evaluating {len(points)} points on {jobs} workers")
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, points))
    return dict(zip(points, results))


def _render_grid(grid: Dict[str, Dict[str, PeriodValue]], name: str) -> str:
    lines = []
    for point, values in grid.items():
        lines.append(f"{name} = {point}")
        for label, value in sorted(values.items()):
            lines.append(report_service.render_period_value(f"  {label}", value))
    return "\n".join(lines)


def bv_tower_command(args: argparse.Namespace) -> int:
    bases = report_service.load_tower_spec(Path(args.spec))
    reports = run_tower(bases)
    _emit(args, {"levels": reports}, lambda: report_service.render_bv_reports(reports))
    return 0


def vz_command(args: argparse.Namespace) -> int:
    report = vz_tower_report(args.m, args.n)
    _emit(args, report, lambda: report_service.render_vz(report))
    return 0


def periods_elliptic_command(args: argparse.Namespace) -> int:
    grid = _evaluate_grid(_elliptic_point, parse_list(args.lam), _precision(args), args.jobs)
    _emit(args, grid, lambda: _render_grid(grid, "lambda"))
    return 0


def periods_schwarz_command(args: argparse.Namespace) -> int:
    grid = _evaluate_grid(_schwarz_point, parse_list(args.s), _precision(args), args.jobs)
    _emit(args, grid, lambda: _render_grid(grid, "s"))
    return 0


def periods_appell_command(args: argparse.Namespace) -> int:
    prec = _precision(args)
    a1, a2 = parse_complex(args.a1), parse_complex(args.a2)
    params = (TowerFamilies.APPELL_A, TowerFamilies.APPELL_B, TowerFamilies.APPELL_B_PRIME, TowerFamilies.APPELL_C)
    values = {
        "F1": appell_f1(*params, a1, a2, prec),
        "F1-integral": appell_f1_integral(*params, a1, a2, prec),
    }
    grid = {f"{a1},{a2}": values}
    _emit(args, grid, lambda: _render_grid(grid, "(a1,a2)"))
    return 0


def periods_table_command(kind: str, *point_attrs: str) -> Callable[[argparse.Namespace], int]:
    """Commands whose evaluator returns a PeriodTable for the points named by ``point_attrs``."""

    def command(args: argparse.Namespace) -> int:
        values = [parse_complex(getattr(args, attr)) for attr in point_attrs]
        table = PeriodFactory.create(kind)(*values, prec=_precision(args))
        _emit(args, table, lambda: report_service.render_period_table(table))
        return 0

    return command


def periods_vz5_command(args: argparse.Namespace) -> int:
    kind = "quintic" if args.quintic else "vz5-normalized"
    return periods_table_command(kind, "a1", "a2")(args)


def periods_tower_command(args: argparse.Namespace) -> int:
    table = PeriodFactory.create("tower")(parse_list(args.lambdas), prec=_precision(args))
    _emit(args, table, lambda: report_service.render_period_table(table))
    return 0


def periods_fermat_command(args: argparse.Namespace) -> int:
    table = PeriodFactory.create("fermat")(args.m, prec=_precision(args))
    _emit(args, table, lambda: report_service.render_period_table(table))
    return 0


def cm_detect_command(args: argparse.Namespace) -> int:
    prec = _precision(args)
    if args.period is not None:
        point = parse_complex(args.at)
        evaluator = PeriodFactory.create(args.period)
        value = evaluator(point, prec)
        report = cm_detect(value, args.deg, args.height, recompute=lambda p: evaluator(point, p))
    else:
        re_part, im_part = parse_complex(args.re), parse_complex(args.im)
        with working_precision(prec):
            literal = to_mpc(re_part) + mpmath.mpc(0, 1) * to_mpc(im_part)
            value = PeriodValue(literal, mpmath.mpf(0), prec, "literal")
        report = cm_detect(value, args.deg, args.height)
    data = report.value.to_dict()
    payload = {"re": data["re"], "im": data["im"], "err": data["err"], "report": report}
    _emit(args, payload, lambda: report_service.render_algebraicity(report))
    return 0


def oracle_hypersurface_command(args: argparse.Namespace) -> int:
    row = hypersurface_hodge_oracle(args.degree, args.ambient)
    diamond = hypersurface_diamond(args.degree, args.ambient)
    payload = {"degree": args.degree, "ambient": args.ambient, "middle": row, "betti": betti_numbers(diamond)}
    _emit(args, payload, lambda: report_service.render_oracle(args.degree, args.ambient, row))
    return 0


def lemmas_selftest_command(args: argparse.Namespace) -> int:
    report = run_selftest(args.instances, seed=args.seed)
    _emit(args, report, lambda: report_service.render_selftest(report))
    return 0 if report.ok else 1


def _common(parser: argparse.ArgumentParser, precision: bool = False, jobs: bool = False) -> None:
    parser.add_argument("--emit", choices=["table", "json"], default="table", help="Output format (default: table)")
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable verbose (DEBUG) logging")
    if precision:
        parser.add_argument(
            "--prec", type=int, default=None, help="Working precision in decimal digits (default: HODGE_PREC)"
        )
    if jobs:
        parser.add_argument(
            "--jobs", "-j", type=int, default=configs.HODGE_JOBS, help="Worker processes for value lists"
        )


def create_parser() -> argparse.ArgumentParser:
    """
    Create and configure the argument parser.

    Returns:
        Configured ArgumentParser instance
    """
    parser = argparse.ArgumentParser(
        prog="hodge",
        description="Hodge Atlas - Hodge numbers of Calabi-Yau towers, cyclotomic lemmas and period numerics",
    )
    parser.add_argument("--version", action="version", version=f"Hodge Atlas {__version__}")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    bv = subparsers.add_parser("bv-tower", help="Run a Borcea-Voisin tower from a JSON spec")
    bv.add_argument("spec", type=str, help="Path to the tower spec (UTF-8 JSON)")
    _common(bv)
    bv.set_defaults(func=bv_tower_command)

    vz = subparsers.add_parser("vz", help="Eigenspace tables and Viehweg-Zuo assemblies")
    vz.add_argument("--m", type=int, required=True, help="Cover degree")
    vz.add_argument("--n", type=int, required=True, help="Number of moving branch points plus one")
    _common(vz)
    vz.set_defaults(func=vz_command)

    periods = subparsers.add_parser("periods", help="High-precision periods")
    kinds = periods.add_subparsers(dest="kind", help="Period families")

    elliptic = kinds.add_parser("elliptic", help="Legendre curve periods and tau")
    elliptic.add_argument("--lambda", dest="lam", required=True, help="Parameter, or a comma-separated list")
    _common(elliptic, precision=True, jobs=True)
    elliptic.set_defaults(func=periods_elliptic_command)

    schwarz = kinds.add_parser("schwarz", help="Schwarz map of the degree-4 family")
    schwarz.add_argument("--s", required=True, help="Parameter, or a comma-separated list")
    _common(schwarz, precision=True, jobs=True)
    schwarz.set_defaults(func=periods_schwarz_command)

    appell = kinds.add_parser("appell", help="Appell F1 at the degree-5 family parameters")
    appell.add_argument("--a1", required=True)
    appell.add_argument("--a2", required=True)
    _common(appell, precision=True)
    appell.set_defaults(func=periods_appell_command)

    vz5 = kinds.add_parser("vz5", help="Periods of the genus-6 curves and their ratios")
    vz5.add_argument("--a1", required=True)
    vz5.add_argument("--a2", required=True)
    vz5.add_argument("--quintic", action="store_true", help="Scale by B(1/5,1/5) B(2/5,2/5) (threefold periods)")
    _common(vz5, precision=True)
    vz5.set_defaults(func=periods_vz5_command)

    kummer = kinds.add_parser("kummer", help="Normalized periods of the Kummer surface of two Legendre curves")
    kummer.add_argument("--lambda1", required=True)
    kummer.add_argument("--lambda2", required=True)
    _common(kummer, precision=True)
    kummer.set_defaults(func=periods_table_command("kummer", "lambda1", "lambda2"))

    tower = kinds.add_parser("tower", help="Top-form periods of a Borcea-Voisin tower of Legendre curves")
    tower.add_argument("--lambdas", required=True, help="Comma-separated parameters, one per curve")
    _common(tower, precision=True)
    tower.set_defaults(func=periods_tower_command)

    quartic = kinds.add_parser("quartic", help="Periods of the quartic K3 surfaces of the degree-4 tower")
    quartic.add_argument("--s", required=True)
    _common(quartic, precision=True)
    quartic.set_defaults(func=periods_table_command("quartic", "s"))

    fermat = kinds.add_parser("fermat", help="Beta periods of a Fermat curve")
    fermat.add_argument("--m", type=int, required=True)
    _common(fermat, precision=True)
    fermat.set_defaults(func=periods_fermat_command)

    cm = subparsers.add_parser("cm-detect", help="Integer-relation search on a number or a period")
    source = cm.add_mutually_exclusive_group(required=True)
    source.add_argument("--re", help="Real part of a literal value")
    source.add_argument("--period", choices=DETECTABLE_PERIODS, help="Evaluate this period instead")
    cm.add_argument("--im", default="0", help="Imaginary part of the literal value")
    cm.add_argument("--at", default="1/2", help="Parameter of --period")
    cm.add_argument("--deg", type=int, default=None, help="Degree bound D (default: HODGE_CM_DEGREE)")
    cm.add_argument("--height", type=int, default=None, help="Height bound H (default: HODGE_CM_HEIGHT)")
    _common(cm, precision=True)
    cm.set_defaults(func=cm_detect_command)

    oracle = subparsers.add_parser("oracle", help="Independent Hodge-number oracles")
    oracles = oracle.add_subparsers(dest="oracle", help="Oracles")
    hyper = oracles.add_parser("hypersurface", help="Smooth hypersurface in projective space")
    hyper.add_argument("--degree", type=int, required=True)
    hyper.add_argument("--ambient", type=int, required=True, help="Dimension N of the ambient P^N")
    _common(hyper)
    hyper.set_defaults(func=oracle_hypersurface_command)

    selftest = subparsers.add_parser("lemmas-selftest", help="Randomized check of the cyclotomic lemma algorithms")
    selftest.add_argument("--instances", type=int, default=20, help="Instances per lemma and field (default: 20)")
    selftest.add_argument("--seed", type=int, default=0)
    _common(selftest)
    selftest.set_defaults(func=lemmas_selftest_command)

    return parser


def main(argv: Optional[list] = None) -> int:
    """
    Main entry point for the CLI.

    Args:
        argv: Command-line arguments (defaults to sys.argv)

    Returns:
        Exit code
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if not hasattr(args, "func"):
        parser.print_help()
        return 2

    setup_logging(args.verbose)
    try:
        return args.func(args)
    except HodgeAtlasException as e:
        print(f"error[{type(e).__name__}]: {e.message}", file=sys.stderr)
        print(f"  invariant: {e.invariant}", file=sys.stderr)
        return 1
    except (ValidationError, ValueError, OSError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
