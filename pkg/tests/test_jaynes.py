"""Envelope solver checks, including a brute maximum-entropy property test."""

import math

import numpy as np
import pytest

from kerrdimer import (
    jaynes_entropy,
    mean_imbalance,
    partition_function,
    solve_multiplier,
)
from kerrdimer.jaynes import _invert_by_bisection, _solution_from_x


def test_partition_function_values():
    assert partition_function(1.0, 2) == 3.0
    assert partition_function(2.0, 2) == pytest.approx(7.0, abs=1e-12)  # 1 + 2 + 4
    assert partition_function(0.5, 3) == pytest.approx(1.875, abs=1e-14)


def test_partition_function_domain():
    with pytest.raises(ValueError):
        partition_function(0.0, 2)
    with pytest.raises(ValueError):
        partition_function(-1.0, 2)


def test_mean_imbalance_limits():
    assert mean_imbalance(1.0, 5) == 0.0
    assert mean_imbalance(1e-12, 2) == pytest.approx(-2.0, abs=1e-9)
    assert mean_imbalance(1e12, 2) == pytest.approx(2.0, abs=1e-9)


def test_mean_imbalance_reflection():
    for x in (0.1, 0.37, 0.9995):
        for total in (2, 5, 11):
            assert mean_imbalance(1.0 / x, total) == pytest.approx(
                -mean_imbalance(x, total), abs=1e-12
            )


def test_mean_imbalance_strictly_increasing():
    xs = np.logspace(-6, 6, 481)
    for total in (1, 2, 5, 13, 30):
        values = [mean_imbalance(float(x), total) for x in xs]
        assert np.all(np.diff(values) > 0.0)


def test_analytic_inverse_for_two_quanta():
    # at delta_n = 1 the closed-form multiplier is (1 + sqrt(13))/2
    solution = solve_multiplier(1.0, 2)
    x = (1.0 + math.sqrt(13.0)) / 2.0
    assert solution.x == pytest.approx(x, abs=1e-12)
    assert solution.z == pytest.approx(1.0 + x + x * x, abs=1e-10)
    assert mean_imbalance(solution.x, 2) == pytest.approx(1.0, abs=1e-10)
    # spec-level roundings
    assert solution.x == pytest.approx(2.30278, abs=1e-4)
    assert solution.z == pytest.approx(8.6056, abs=1e-3)
    assert solution.entropy == pytest.approx(0.9012, abs=1e-4)


def test_entropy_identity_and_constraint():
    # -sum p ln p must equal (L + dn)/2 * lambda + ln Z at the solution
    for total in (2, 3, 5, 9):
        for dn in np.linspace(-total + 0.01, total - 0.01, 41):
            s = solve_multiplier(float(dn), total)
            probs = s.probabilities()
            assert probs.min() >= 0.0
            assert probs.sum() == pytest.approx(1.0, abs=1e-12)
            n = np.arange(total + 1)
            assert float((2 * n - total) @ probs) == pytest.approx(dn, abs=1e-10)
            direct = -float(np.sum(probs[probs > 0] * np.log(probs[probs > 0])))
            assert s.entropy == pytest.approx(direct, abs=1e-12)
            u = math.log(s.x)
            log_z = float(np.logaddexp.reduce(n * u))
            assert s.entropy == pytest.approx(
                0.5 * (total + dn) * (-u) + log_z, abs=1e-10
            )


def test_center_and_endpoints():
    for total in (2, 4, 5, 7):
        assert jaynes_entropy(0.0, total) == pytest.approx(
            math.log(total + 1), abs=1e-10
        )
        assert jaynes_entropy(float(total), total) == 0.0
        assert jaynes_entropy(-float(total), total) == 0.0
        end = solve_multiplier(-float(total), total)
        assert end.x == 0.0 and end.z == 1.0


def test_center_multiplier_two_quanta():
    solution = solve_multiplier(0.0, 2)
    assert solution.x == pytest.approx(1.0, abs=1e-12)
    assert solution.entropy == pytest.approx(math.log(3.0), abs=1e-12)


def test_evenness():
    for total in (2, 3, 6):
        for dn in (0.25, 1.0, 1.9, total - 1e-3):
            assert jaynes_entropy(dn, total) == pytest.approx(
                jaynes_entropy(-dn, total), abs=1e-10
            )


def test_strictly_decreasing_in_absolute_imbalance():
    for total in (2, 5, 9):
        grid = np.linspace(0.0, float(total), 101)
        values = [jaynes_entropy(float(dn), total) for dn in grid]
        assert np.all(np.diff(values) < 0.0)


def test_monotone_in_occupation():
    # more quanta allow strictly more entropy at the same imbalance
    for total in range(3, 11):
        for dn in np.linspace(-(total - 1) + 1e-6, (total - 1) - 1e-6, 41):
            assert jaynes_entropy(float(dn), total) > jaynes_entropy(
                float(dn), total - 1
            )


def test_analytic_matches_bisection_for_two_quanta():
    for dn in np.linspace(-2.0, 2.0, 201)[1:-1]:
        analytic = solve_multiplier(float(dn), 2)
        bisected = _solution_from_x(_invert_by_bisection(float(dn), 2), float(dn), 2)
        assert analytic.entropy == pytest.approx(bisected.entropy, abs=1e-10)


def test_domain_error():
    with pytest.raises(ValueError):
        solve_multiplier(2.5, 2)
    with pytest.raises(ValueError):
        jaynes_entropy(math.nan, 3)


def test_dominates_arbitrary_distributions():
    # the envelope is the max entropy over *all* distributions with the
    # constrained mean, so random ones must sit at or below it
    rng = np.random.default_rng(123)
    for total in (2, 3, 5, 8):
        for _ in range(50):
            probs = rng.dirichlet(np.ones(total + 1))
            dn = float((2 * np.arange(total + 1) - total) @ probs)
            entropy = -float(np.sum(probs * np.log(probs)))
            assert entropy <= jaynes_entropy(dn, total) + 1e-12
