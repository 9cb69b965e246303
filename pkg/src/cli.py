""" Command line frontend

python src/cli.py classify "t^3 - 2t^2 - t + 2" --json
python src/cli.py crosscheck --coeffs 1,0,-2,0,-3
python src/cli.py sweep --degree 4 --grid 0,1,2 --json
python src/cli.py search --degree 3 --grid=-2,-1,0,1,2
python src/cli.py dump "t^4 - 2t^2 - 3" --dump-digraph

Exit codes: 0 success, 1 a theorem/oracle disagreement, 2 usage or input errors.
"""
import argparse
import logging
import os
import sys
from collections import Counter
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from classify import (
    K_MAX_DEFAULT,
    WORKERS_DEFAULT,
    CrossCheckReport,
    SignKind,
    cross_check,
    eventual_sign,
    search_counterexamples,
    sweep_grid,
)
from digraph import digraph_of
from matrix import companion
from poly import Polynomial, format_polynomial, parse_polynomial, snap_zeros
from spectral import PowerIterationError, RootFindingError
from utils import dumps_json, format_float, parse_grid

logger = logging.getLogger(__name__)

SWEEP_GRID_DEFAULT = [0.0, 0.5, 1.0, 2.0]
SEARCH_GRID_DEFAULT = [-2.0, -1.0, 0.0, 1.0, 2.0]
SWEEP_DEGREE_DEFAULT = 6
SEARCH_DEGREE_DEFAULT = 3
BUDGET_DEFAULT = 4096

COMMANDS = ("classify", "crosscheck", "sweep", "search", "dump")


class RunConfig(BaseModel):
    """Validated command line state"""

    model_config = ConfigDict(frozen=True)

    command: Literal["classify", "crosscheck", "sweep", "search", "dump"]
    poly_text: Optional[str] = None
    degree: Optional[int] = None
    budget: int = BUDGET_DEFAULT
    seed: int = 0
    k_max: int = K_MAX_DEFAULT
    zero_eps: float = 0.0
    grid: Optional[List[float]] = None
    output: Literal["text", "json"] = "text"
    dump_matrix: bool = False
    dump_digraph: bool = False
    workers: int = WORKERS_DEFAULT

    @model_validator(mode="after")
    def check_command(self):
        if self.command in ("classify", "crosscheck", "dump") and not self.poly_text:
            raise ValueError(f"{self.command} needs a polynomial (expression or --coeffs)")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.zero_eps < 0:
            raise ValueError("zero-eps must be nonnegative")
        return self

    @property
    def sweep_degree(self) -> int:
        if self.degree is not None:
            return self.degree
        return SEARCH_DEGREE_DEFAULT if self.command == "search" else SWEEP_DEGREE_DEFAULT

    @property
    def sweep_grid(self) -> List[float]:
        if self.grid is not None:
            return self.grid
        return SEARCH_GRID_DEFAULT if self.command == "search" else SWEEP_GRID_DEFAULT


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perron",
        description="Classify monic polynomials as (weakly) spectrally Perron.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("polynomial", nargs="?", help='expression such as "t^3 - 2t^2 - t + 2"')
    parser.add_argument("--coeffs", help="comma separated coefficients, highest degree first")
    parser.add_argument("--json", action="store_true", help="machine readable output")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--k-max", type=int, default=K_MAX_DEFAULT, dest="k_max")
    parser.add_argument("--zero-eps", type=float, default=0.0, dest="zero_eps")
    parser.add_argument("--grid", type=parse_grid, help="comma separated values; write --grid=-1,0,1 for negatives")
    parser.add_argument("--degree", type=int)
    parser.add_argument("--budget", type=int, default=BUDGET_DEFAULT)
    parser.add_argument("--workers", type=int, default=WORKERS_DEFAULT)
    parser.add_argument("--dump-matrix", action="store_true", dest="dump_matrix")
    parser.add_argument("--dump-digraph", action="store_true", dest="dump_digraph")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.polynomial and args.coeffs:
        raise ValueError("give either an expression or --coeffs, not both")

    return RunConfig(
        command=args.command,
        poly_text=args.coeffs or args.polynomial,
        degree=args.degree,
        budget=args.budget,
        seed=args.seed,
        k_max=args.k_max,
        zero_eps=args.zero_eps,
        grid=args.grid,
        output="json" if args.json else "text",
        dump_matrix=args.dump_matrix,
        dump_digraph=args.dump_digraph,
        workers=args.workers,
    )


def load_polynomial(config: RunConfig) -> Polynomial:
    return snap_zeros(parse_polynomial(config.poly_text), config.zero_eps)


def describe(report: CrossCheckReport) -> str:
    """One line summary, e.g. "NotPerron (d = 0, nilpotent companion)" """
    verdict = report.numerical_verdict.verdict.value
    rho = format_float(report.spectrum.rho)
    if report.theorem_verdict is None:
        details = f"theorems inapplicable, rho = {rho}"
    elif report.d == 0:
        details = "d = 0, nilpotent companion"
    elif report.d == 1:
        details = f"d = 1, rho = {rho}"
    else:
        details = f"d = {report.d}, rho = {rho}, {report.peripheral_count} peripheral roots"
    return f"{verdict} ({details})"


def _write_dumps(config: RunConfig, p: Polynomial, out_stream):
    matrix = companion(p)
    if config.dump_matrix:
        out_stream.write(matrix.to_text() + "\n")
    if config.dump_digraph:
        out_stream.write(digraph_of(matrix).to_text() + "\n")


def _add_dumps(config: RunConfig, p: Polynomial, payload: dict) -> dict:
    """JSON counterpart of _write_dumps"""
    matrix = companion(p)
    if config.dump_matrix:
        payload["matrix"] = matrix.entries.tolist()
    if config.dump_digraph:
        payload["digraph"] = [list(arc) for arc in sorted(digraph_of(matrix).arcs)]
    return payload


def _run_classify(config: RunConfig, out_stream) -> int:
    p = load_polynomial(config)
    report = cross_check(p)

    if config.output == "json":
        payload = report.to_json_dict()
        payload["spectrum"] = report.spectrum.to_json_dict()
        out_stream.write(dumps_json(_add_dumps(config, p, payload)))
    else:
        out_stream.write(describe(report) + "\n")
        _write_dumps(config, p, out_stream)
    return 0


def _run_crosscheck(config: RunConfig, out_stream) -> int:
    p = load_polynomial(config)
    report = cross_check(p)

    if config.output == "json":
        out_stream.write(dumps_json(_add_dumps(config, p, report.to_json_dict())))
    else:
        theorem = "inapplicable" if report.theorem_verdict is None else report.theorem_verdict.verdict.value
        out_stream.write(
            f"{format_polynomial(p)}: theorem {theorem}, numerical "
            f"{report.numerical_verdict.verdict.value}, agree = {str(report.agree).lower()}\n"
        )
        _write_dumps(config, p, out_stream)
    return 0 if report.agree else 1


def _summary(reports: List[CrossCheckReport]) -> dict:
    verdicts = Counter(report.numerical_verdict.verdict.value for report in reports)
    return {
        "count": len(reports),
        "disagreements": sum(1 for report in reports if not report.agree),
        "verdicts": {name: verdicts[name] for name in sorted(verdicts)},
    }


def _run_sweep(config: RunConfig, out_stream) -> int:
    reports = sweep_grid(
        config.sweep_degree,
        config.sweep_grid,
        budget=config.budget,
        seed=config.seed,
        workers=config.workers,
    )
    summary = _summary(reports)

    if config.output == "json":
        out_stream.write(
            dumps_json(
                {
                    "degree": config.sweep_degree,
                    "grid": config.sweep_grid,
                    "budget": config.budget,
                    "seed": config.seed,
                    "instances": [report.to_json_dict() for report in reports],
                    "summary": summary,
                }
            )
        )
    else:
        for report in reports:
            out_stream.write(f"{format_polynomial(report.polynomial)}: {describe(report)}\n")
        out_stream.write(f"{summary['count']} instances, {summary['disagreements']} disagreement(s)\n")
    return 0 if summary["disagreements"] == 0 else 1


def _run_search(config: RunConfig, out_stream) -> int:
    reports = search_counterexamples(
        config.sweep_degree,
        config.sweep_grid,
        budget=config.budget,
        seed=config.seed,
        k_max=config.k_max,
        workers=config.workers,
    )

    if config.output == "json":
        instances = []
        for report in reports:
            payload = report.to_json_dict()
            payload["eventual_nonneg"] = report.eventual.label
            instances.append(payload)
        out_stream.write(
            dumps_json(
                {
                    "degree": config.sweep_degree,
                    "grid": config.sweep_grid,
                    "budget": config.budget,
                    "seed": config.seed,
                    "k_max": config.k_max,
                    "instances": instances,
                }
            )
        )
    else:
        for report in reports:
            out_stream.write(f"{format_polynomial(report.polynomial)}: {report.eventual.label}\n")
        out_stream.write(f"{len(reports)} spectrally Perron polynomial(s) without a nonnegative power\n")
    return 0


def _run_dump(config: RunConfig, out_stream) -> int:
    p = load_polynomial(config)
    if not (config.dump_matrix or config.dump_digraph):
        config = config.model_copy(update={"dump_matrix": True})
    _write_dumps(config, p, out_stream)

    if config.dump_matrix:
        sign = eventual_sign(companion(p), SignKind.NONNEG, k_max=config.k_max)
        out_stream.write(f"# {sign.label}\n")
    return 0


RUNNERS = {
    "classify": _run_classify,
    "crosscheck": _run_crosscheck,
    "sweep": _run_sweep,
    "search": _run_search,
    "dump": _run_dump,
}


def run(config: RunConfig, out_stream=None, err_stream=None) -> int:
    """Run one command, returning the exit code"""
    out_stream = out_stream or sys.stdout
    err_stream = err_stream or sys.stderr
    try:
        return RUNNERS[config.command](config, out_stream)
    except (ValueError, RootFindingError, PowerIterationError) as e:
        logger.error(f"{config.command} failed: {e}")
        err_stream.write(f"error: {e}\n")
        return 2


def main(argv=None, out_stream=None, err_stream=None) -> int:
    logging.basicConfig(
        level=os.getenv("LOG_LEVEL", "WARNING").upper(),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    err_stream = err_stream or sys.stderr

    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0

    try:
        config = config_from_args(args)
    except (ValidationError, ValueError) as e:
        err_stream.write(f"usage error: {e}\n")
        return 2

    return run(config, out_stream, err_stream)


if __name__ == "__main__":
    sys.exit(main())
