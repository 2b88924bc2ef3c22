"""Tests for history-state clocks: closed forms against the brute-force oracle."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paw_entanglement import smalg
from paw_entanglement.entanglement import ProbPair
from paw_entanglement.exceptions import ValidationError
from paw_entanglement.metrics import fidelity_noninteracting
from paw_entanglement.pawclock import (
    DEFAULT_N_GRID,
    AbcElements,
    ClockSpec,
    ConvergenceRow,
    GammaValue,
    Scenario,
    abc_elements,
    bruteforce_probs,
    continuous_probs,
    convergence_report,
    discrete_probs,
    ets_entropy,
    gamma_sq_continuous,
    gamma_sq_discrete,
    interacting_probs_continuous,
    interacting_probs_discrete,
    noninteracting_probs,
    qubit_clock_probs,
    reduced_density_bruteforce,
    trajectory,
)


def _assert_pair_close(a: ProbPair, b: ProbPair, tol: float) -> None:
    assert abs(a.p_plus - b.p_plus) <= tol
    assert abs(a.p_minus - b.p_minus) <= tol


class TestClockSpec:
    def test_needs_two_ticks(self) -> None:
        with pytest.raises(ValidationError, match="n_ticks"):
            ClockSpec(1, 1.0, Scenario.INTERACTING)

    def test_noninteracting_needs_alpha_sq(self) -> None:
        with pytest.raises(ValidationError, match="alpha_sq"):
            ClockSpec(4, 1.0, Scenario.NON_INTERACTING)

    def test_negative_angle(self) -> None:
        with pytest.raises(ValidationError):
            ClockSpec(4, -1.0, Scenario.INTERACTING)


class TestValueTypes:
    def test_gamma_non_negative(self) -> None:
        with pytest.raises(ValidationError):
            GammaValue(-0.1)

    def test_abc_trace_one(self) -> None:
        with pytest.raises(ValidationError):
            AbcElements(a=0.5, b=0.6, c=0j)

    def test_abc_positivity(self) -> None:
        with pytest.raises(ValidationError):
            AbcElements(a=0.5, b=0.5, c=0.6 + 0j)

    def test_convergence_row_error(self) -> None:
        assert ConvergenceRow(8, 0.9, 0.85).abs_error == pytest.approx(0.05)


class TestBruteForce:
    def test_trajectory_endpoints(self) -> None:
        traj = trajectory(ClockSpec(5, math.pi / 2, Scenario.INTERACTING))
        assert len(traj) == 5
        assert traj[0].alpha == pytest.approx(1.0)
        assert traj[-1].beta == pytest.approx(1j)

    def test_reduced_density_is_density_matrix(self) -> None:
        rho = reduced_density_bruteforce(
            trajectory(ClockSpec(16, 2.0, Scenario.NON_INTERACTING, 0.3))
        )
        smalg.validate_density_matrix(rho)
        assert np.trace(rho).real == pytest.approx(1.0)

    def test_empty_trajectory(self) -> None:
        with pytest.raises(ValidationError):
            reduced_density_bruteforce([])

    def test_zero_angle_is_pure(self) -> None:
        p = bruteforce_probs(ClockSpec(8, 0.0, Scenario.INTERACTING))
        _assert_pair_close(p, ProbPair(1.0, 0.0), 1e-12)


class TestQubitClock:
    def test_orthogonal_snapshots_maximal(self) -> None:
        assert qubit_clock_probs(0.0).as_tuple() == (0.5, 0.5)

    def test_identical_snapshots_pure(self) -> None:
        assert qubit_clock_probs(1.0).as_tuple() == (1.0, 0.0)

    def test_rejects_overlap_out_of_range(self) -> None:
        with pytest.raises(ValidationError):
            qubit_clock_probs(1.5)

    def test_equals_two_tick_bruteforce(self) -> None:
        a, theta = 0.3, 2.2
        oracle = bruteforce_probs(ClockSpec(2, theta, Scenario.NON_INTERACTING, a))
        closed = qubit_clock_probs(fidelity_noninteracting(a, theta))
        _assert_pair_close(closed, oracle, 1e-12)


class TestNonInteractingClosedForms:
    def test_continuous_maximal_at_pi(self) -> None:
        gamma = gamma_sq_continuous(0.5, math.pi)
        assert gamma.gamma_sq == pytest.approx(1 / math.pi**2, rel=1e-12)
        p = noninteracting_probs(0.5, gamma)
        assert p.p_plus == pytest.approx(0.5 * (1 + 2 / math.pi), rel=1e-12)
        assert ets_entropy(p) == pytest.approx(0.684, abs=1e-3)

    def test_zero_angle_keeps_full_coherence(self) -> None:
        assert gamma_sq_discrete(0.3, 0.0, 10).gamma_sq == pytest.approx(0.21)
        assert gamma_sq_continuous(0.3, 0.0).gamma_sq == pytest.approx(0.21)
        p = noninteracting_probs(0.3, gamma_sq_continuous(0.3, 0.0))
        _assert_pair_close(p, ProbPair(1.0, 0.0), 1e-12)

    def test_product_state_stays_pure(self) -> None:
        p = noninteracting_probs(1.0, gamma_sq_discrete(1.0, 2.0, 16))
        assert p.as_tuple() == (1.0, 0.0)

    def test_gamma_beyond_bound_rejected(self) -> None:
        with pytest.raises(ValidationError, match="exceeds"):
            noninteracting_probs(0.5, GammaValue(0.3))

    def test_two_ticks_reduce_to_qubit_clock(self) -> None:
        for a in np.linspace(0.0, 1.0, 50):
            for theta in np.linspace(0.0, math.pi, 50):
                discrete = noninteracting_probs(a, gamma_sq_discrete(a, theta, 2))
                qubit = qubit_clock_probs(fidelity_noninteracting(a, theta))
                _assert_pair_close(discrete, qubit, 1e-12)

    @settings(max_examples=60, deadline=None)
    @given(
        a=st.floats(min_value=0.0, max_value=1.0),
        theta=st.floats(min_value=0.0, max_value=2 * math.pi),
        n=st.integers(min_value=2, max_value=256),
    )
    def test_matches_bruteforce(self, a: float, theta: float, n: int) -> None:
        spec = ClockSpec(n, theta, Scenario.NON_INTERACTING, a)
        _assert_pair_close(discrete_probs(spec), bruteforce_probs(spec), 1e-10)

    def test_small_step_series_branch_continuous(self) -> None:
        a, theta = 0.4, 1e-7
        p_discrete = noninteracting_probs(a, gamma_sq_discrete(a, theta, 2**20))
        p_limit = noninteracting_probs(a, gamma_sq_continuous(a, theta))
        _assert_pair_close(p_discrete, p_limit, 1e-14)


class TestInteractingClosedForms:
    def test_continuous_at_quarter_turn(self) -> None:
        p = interacting_probs_continuous(math.pi / 2)
        assert p.p_plus == pytest.approx(0.5 * (1 + 2 / math.pi), rel=1e-12)

    def test_continuous_at_zero(self) -> None:
        assert interacting_probs_continuous(0.0).as_tuple() == (1.0, 0.0)

    def test_continuous_full_turn_is_maximal(self) -> None:
        _assert_pair_close(
            interacting_probs_continuous(math.pi), ProbPair(0.5, 0.5), 1e-15
        )

    def test_abc_elements_trace(self) -> None:
        abc = abc_elements(1.3, 17)
        assert abc.a + abc.b == pytest.approx(1.0)
        assert abc.c.real == 0.0

    @settings(max_examples=60, deadline=None)
    @given(
        phi=st.floats(min_value=0.0, max_value=2 * math.pi),
        n=st.integers(min_value=2, max_value=256),
    )
    def test_matches_bruteforce_and_abc(self, phi: float, n: int) -> None:
        closed = interacting_probs_discrete(phi, n)
        oracle = bruteforce_probs(ClockSpec(n, phi, Scenario.INTERACTING))
        abc = smalg.hermitian_eigenvalues(abc_elements(phi, n).matrix())
        _assert_pair_close(closed, oracle, 1e-10)
        _assert_pair_close(closed, ProbPair.from_values(abc[1], abc[0]), 1e-10)


class TestEvolutionEntanglementLink:
    @pytest.mark.parametrize("alpha_sq", np.linspace(0.02, 1.0, 50).tolist())
    def test_continuous_entropy_non_decreasing_in_theta(self, alpha_sq: float) -> None:
        entropies = []
        for theta in np.linspace(0.0, math.pi, 1001):
            gamma = gamma_sq_continuous(alpha_sq, float(theta))
            entropies.append(ets_entropy(noninteracting_probs(alpha_sq, gamma)))
        steps = zip(entropies, entropies[1:], strict=False)
        assert all(b >= a - 1e-14 for a, b in steps)


class TestMaximalCoincidence:
    @pytest.mark.parametrize("phi", np.linspace(0.0, math.pi, 21).tolist())
    def test_half_alpha_sq_matches_interacting(self, phi: float) -> None:
        noninteracting = noninteracting_probs(0.5, gamma_sq_continuous(0.5, 2 * phi))
        _assert_pair_close(noninteracting, interacting_probs_continuous(phi), 1e-12)


class TestDispatch:
    def test_discrete_probs_interacting(self) -> None:
        spec = ClockSpec(32, 1.0, Scenario.INTERACTING)
        assert discrete_probs(spec) == interacting_probs_discrete(1.0, 32)

    def test_continuous_probs_needs_alpha_sq(self) -> None:
        with pytest.raises(ValidationError):
            continuous_probs(Scenario.NON_INTERACTING, 1.0)


class TestConvergenceReport:
    @pytest.mark.parametrize(
        ("scenario", "angle", "alpha_sq"),
        [
            (Scenario.INTERACTING, math.pi / 2, None),
            (Scenario.NON_INTERACTING, math.pi, 0.5),
        ],
    )
    def test_default_grid_converges(
        self, scenario: Scenario, angle: float, alpha_sq: float | None
    ) -> None:
        rows = convergence_report(scenario, angle, DEFAULT_N_GRID, alpha_sq)
        by_n = {r.n_ticks: r.abs_error for r in rows}
        assert by_n[2**10] < 1e-3
        assert by_n[2**20] < 1e-6
        tail = [r.abs_error for r in rows if r.n_ticks >= 8]
        assert all(b <= a for a, b in zip(tail, tail[1:], strict=False))

    def test_zero_angle_no_error(self) -> None:
        rows = convergence_report(Scenario.INTERACTING, 0.0, (2, 8, 64))
        assert all(r.abs_error == 0.0 for r in rows)

    def test_two_ticks_gap(self) -> None:
        (row,) = convergence_report(Scenario.NON_INTERACTING, math.pi, (2,), 0.5)
        expected = abs(
            qubit_clock_probs(fidelity_noninteracting(0.5, math.pi)).p_plus
            - noninteracting_probs(0.5, gamma_sq_continuous(0.5, math.pi)).p_plus
        )
        assert row.abs_error == pytest.approx(expected, abs=1e-12)

    def test_grid_must_ascend(self) -> None:
        with pytest.raises(ValidationError, match="ascending"):
            convergence_report(Scenario.INTERACTING, 1.0, (8, 4))

    def test_empty_grid(self) -> None:
        with pytest.raises(ValidationError):
            convergence_report(Scenario.INTERACTING, 1.0, ())
