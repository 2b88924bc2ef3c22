"""Dataset builders behind each CLI subcommand.

Row order per subcommand:

- speed: distance (as given), then S_A ascending
- qubit-clock, continuous, discrete-clock: time (as given), then S_A ascending
- fidelity-sweep: one curve per alpha_sq (as given), then the interacting
  curve; dpsi ascending inside each curve
- converge: N ascending
- compare: alpha_sq (as given), then time (as given)
"""

from __future__ import annotations

import logging
from collections.abc import Callable

import numpy as np

from paw_entanglement import entanglement, metrics, pawclock
from paw_entanglement._types import NORM_TOL
from paw_entanglement.entanglement import ProbPair
from paw_entanglement.exceptions import DomainError
from paw_entanglement.figcli.config import DEFAULT_FIDELITY_ALPHA_SQ, SweepConfig
from paw_entanglement.figcli.csvout import CsvValue, Dataset, make_dataset
from paw_entanglement.model import InteractingModel, NonInteractingModel
from paw_entanglement.pawclock import Scenario

logger = logging.getLogger(__name__)

ENTROPY_COLUMNS = ("time", "alpha_sq", "S_A", "E_TS", "S2_A", "E2_TS")

# (alpha_sq, theta) -> rho_S eigenvalues
ProbsAt = Callable[[float, float], ProbPair]


def entropy_grid(points: int) -> list[tuple[float, float]]:
    """(S_A, alpha_sq) pairs with S_A evenly spaced on [0, 1]."""
    return [
        (float(s), entanglement.alpha_sq_for_entropy(float(s)))
        for s in np.linspace(0.0, 1.0, points)
    ]


def run_speed(cfg: SweepConfig) -> Dataset:
    """Evolution time to reach each distance, against S_A and S2_A."""
    rows: list[tuple[CsvValue, ...]] = []
    omitted = 0
    grid = entropy_grid(cfg.grid_points)
    for distance in cfg.distances:
        for s, a in grid:
            try:
                tau = metrics.tau_for_distance(a, distance)
            except DomainError:
                omitted += 1
                continue
            rows.append((distance, a, s, 4.0 * a * (1.0 - a), tau))
    if omitted:
        logger.warning(
            "speed: omitted %d unreachable (distance, alpha_sq) pairs", omitted
        )
    return make_dataset(("distance", "alpha_sq", "S_A", "S2_A", "tau"), rows)


def _entropy_sweep(cfg: SweepConfig, probs_at: ProbsAt) -> list[tuple[CsvValue, ...]]:
    rows: list[tuple[CsvValue, ...]] = []
    grid = entropy_grid(cfg.grid_points)
    for t in cfg.times:
        theta = 2.0 * t
        for s, a in grid:
            p = probs_at(a, theta)
            rows.append(
                (
                    t,
                    a,
                    s,
                    pawclock.ets_entropy(p),
                    4.0 * a * (1.0 - a),
                    entanglement.quadratic_entropy_from_probs(p),
                )
            )
    return rows


def _qubit_clock_at(alpha_sq: float, theta: float) -> ProbPair:
    return pawclock.qubit_clock_probs(metrics.fidelity_noninteracting(alpha_sq, theta))


def _continuous_at(alpha_sq: float, theta: float) -> ProbPair:
    return pawclock.noninteracting_probs(
        alpha_sq, pawclock.gamma_sq_continuous(alpha_sq, theta)
    )


def run_qubit_clock(cfg: SweepConfig) -> Dataset:
    return make_dataset(ENTROPY_COLUMNS, _entropy_sweep(cfg, _qubit_clock_at))


def run_continuous(cfg: SweepConfig) -> Dataset:
    return make_dataset(ENTROPY_COLUMNS, _entropy_sweep(cfg, _continuous_at))


def run_discrete_clock(cfg: SweepConfig) -> Dataset:
    """Finite-N clock; N = 2 matches qubit-clock, large N approaches continuous."""
    n = cfg.n_ticks

    def probs_at(alpha_sq: float, theta: float) -> ProbPair:
        gamma = pawclock.gamma_sq_discrete(alpha_sq, theta, n)
        return pawclock.noninteracting_probs(alpha_sq, gamma)

    rows = [(n, *row) for row in _entropy_sweep(cfg, probs_at)]
    return make_dataset(("n_ticks", *ENTROPY_COLUMNS), rows)


def run_fidelity_sweep(cfg: SweepConfig) -> Dataset:
    """E(T,S) against fidelity in the continuous limit."""
    rows: list[tuple[CsvValue, ...]] = []
    dpsi_grid = [float(d) for d in np.linspace(0.0, 1.0, cfg.grid_points)]
    for a in cfg.alpha_sq_or(DEFAULT_FIDELITY_ALPHA_SQ):
        curve_id = f"alpha_sq={a:.12g}"
        floor = metrics.min_reachable_fidelity(a)
        for dpsi in dpsi_grid:
            # curves stop at the farthest distance the state can travel
            if dpsi < floor - NORM_TOL:
                continue
            p = _continuous_at(a, metrics.theta_from_fidelity(a, dpsi))
            rows.append(
                (
                    curve_id,
                    dpsi,
                    pawclock.ets_entropy(p),
                    entanglement.quadratic_entropy_from_probs(p),
                )
            )
    if cfg.include_interacting:
        for dpsi in dpsi_grid:
            p = pawclock.interacting_probs_continuous(metrics.phi_from_fidelity(dpsi))
            rows.append(
                (
                    "interacting",
                    dpsi,
                    pawclock.ets_entropy(p),
                    entanglement.quadratic_entropy_from_probs(p),
                )
            )
    return make_dataset(("curve_id", "dpsi", "E_TS", "E2_TS"), rows)


def run_converge(cfg: SweepConfig) -> Dataset:
    if cfg.scenario is Scenario.INTERACTING:
        angle, alpha_sq = cfg.phi, None
    else:
        angle, alpha_sq = cfg.theta, cfg.alpha_sq_or((0.5,))[0]
    report = pawclock.convergence_report(cfg.scenario, angle, cfg.n_grid, alpha_sq)
    logger.info(
        "converge: final abs_error %.3e at N=%d",
        report[-1].abs_error,
        report[-1].n_ticks,
    )
    rows = [
        (r.n_ticks, r.p_plus_discrete, r.p_plus_continuous, r.abs_error) for r in report
    ]
    return make_dataset(
        ("N", "p_plus_discrete", "p_plus_continuous", "abs_error"), rows
    )


def run_compare(cfg: SweepConfig) -> Dataset:
    """Continuous-limit E(T,S) of both scenarios at equal time (units hbar/epsilon)."""
    interacting = InteractingModel(coupling=cfg.coupling)
    logger.info(
        "compare: t*_I = %.6g, t*_NI = %.6g (maximal entanglement)",
        metrics.orthogonalization_time(interacting),
        metrics.orthogonalization_time(NonInteractingModel(epsilon=1.0), 0.5),
    )
    rows: list[tuple[CsvValue, ...]] = []
    for a in cfg.alpha_sq_or((0.5,)):
        for t in cfg.times:
            e_ni = pawclock.ets_entropy(_continuous_at(a, 2.0 * t))
            e_i = pawclock.ets_entropy(
                pawclock.interacting_probs_continuous(interacting.coupling * t)
            )
            rows.append((t, a, e_ni, e_i))
    return make_dataset(
        ("time", "alpha_sq", "E_TS_noninteracting", "E_TS_interacting"), rows
    )
