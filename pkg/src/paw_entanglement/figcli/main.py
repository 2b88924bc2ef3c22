"""Command-line entry point: `paw-entanglement <subcommand> [options]`.

Exit codes: 0 success, 1 validation error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import io
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any, NoReturn

from paw_entanglement.exceptions import (
    PaWAbort,
    PaWInternalError,
    ValidationError,
    VerificationFailed,
)
from paw_entanglement.figcli import sweeps
from paw_entanglement.figcli.config import (
    Subcommand,
    SweepConfig,
    build_config,
    load_config_file,
    parse_int_list,
    parse_number,
    parse_number_list,
)
from paw_entanglement.figcli.csvout import Dataset, write_csv
from paw_entanglement.figcli.verify import run_verify
from paw_entanglement.pawclock import Scenario

logger = logging.getLogger(__name__)

DATASET_RUNNERS: dict[Subcommand, Callable[[SweepConfig], Dataset]] = {
    Subcommand.SPEED: sweeps.run_speed,
    Subcommand.QUBIT_CLOCK: sweeps.run_qubit_clock,
    Subcommand.CONTINUOUS: sweeps.run_continuous,
    Subcommand.DISCRETE_CLOCK: sweeps.run_discrete_clock,
    Subcommand.FIDELITY_SWEEP: sweeps.run_fidelity_sweep,
    Subcommand.CONVERGE: sweeps.run_converge,
    Subcommand.COMPARE: sweeps.run_compare,
}


def _argtype(parse: Callable[[str], Any]) -> Callable[[str], Any]:
    """Adapt a parser raising ValidationError to argparse's error reporting."""

    def wrapped(text: str) -> Any:
        try:
            return parse(text)
        except PaWAbort as exc:
            raise argparse.ArgumentTypeError(exc.detail) from None

    wrapped.__name__ = parse.__name__
    return wrapped


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as ValidationError (exit 1) instead of exiting 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise ValidationError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="paw-entanglement",
        description=(
            "Time-system entanglement of two qubits: figure datasets, "
            "convergence studies and the brute-force verification suite."
        ),
    )
    parser.add_argument("subcommand", choices=[s.value for s in Subcommand])
    parser.add_argument("--alpha-sq", dest="alpha_sq", type=_argtype(parse_number_list))
    parser.add_argument(
        "--time", dest="times", type=_argtype(parse_number_list),
        help="Times in units of hbar/epsilon.",
    )
    parser.add_argument(
        "--distance", dest="distances", type=_argtype(parse_number_list),
        help="Fidelities for `speed`.",
    )
    parser.add_argument("--phi", type=_argtype(parse_number), help="Interacting angle.")
    parser.add_argument(
        "--theta",
        type=_argtype(parse_number),
        help="Non-interacting angle 2*epsilon*t.",
    )
    parser.add_argument(
        "--scenario", type=Scenario, choices=list(Scenario),
        metavar="{interacting,noninteracting}",
        help="Scenario for `converge`.",
    )
    parser.add_argument("--n-grid", dest="n_grid", type=_argtype(parse_int_list))
    parser.add_argument("--n-ticks", dest="n_ticks", type=int)
    parser.add_argument(
        "--coupling", type=_argtype(parse_number), help="Coupling in units of epsilon."
    )
    parser.add_argument(
        "--no-interacting", dest="include_interacting", action="store_const",
        const=False, default=None, help="Omit the interacting curve in fidelity-sweep.",
    )
    parser.add_argument("--grid-points", dest="grid_points", type=int)
    parser.add_argument("--out", dest="output_path")
    parser.add_argument("--config", dest="config_path")
    parser.add_argument("--seed", type=int)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true")
    verbosity.add_argument("--quiet", "-q", action="store_true")
    return parser


def _configure_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.WARNING
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _emit(text: str, output_path: str | None) -> None:
    if output_path is None:
        sys.stdout.write(text)
        return
    try:
        with open(output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise PaWAbort(f"cannot write {output_path}: {exc}") from None


def execute(cfg: SweepConfig) -> None:
    """Run one configured subcommand and write its output."""
    if cfg.subcommand is Subcommand.VERIFY:
        report = run_verify(cfg)
        _emit(report.render(), cfg.output_path)
        if report.failures:
            raise VerificationFailed(
                f"{len(report.failures)} oracle checks failed",
                failures=report.failures,
            )
        return

    dataset = DATASET_RUNNERS[cfg.subcommand](cfg)
    buffer = io.StringIO()
    write_csv(dataset, buffer)
    _emit(buffer.getvalue(), cfg.output_path)
    logger.info("%s: wrote %d rows", cfg.subcommand.value, len(dataset.rows))


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except PaWAbort as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    _configure_logging(args.verbose, args.quiet)

    flag_values = {
        key: value
        for key, value in vars(args).items()
        if key not in ("subcommand", "config_path", "verbose", "quiet")
    }
    try:
        file_values = load_config_file(args.config_path) if args.config_path else {}
        cfg = build_config(args.subcommand, file_values, flag_values)
        execute(cfg)
    except PaWAbort as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except PaWInternalError as exc:
        logger.exception("internal numerical failure: %s", exc.detail)
        return 1
    return 0
