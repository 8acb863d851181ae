"""Entanglement entropy and population observables.

For a pure state at fixed total occupation the two-mode number basis is
already the Schmidt basis, so the reduced spectrum of either mode is just
|beta_r|^2 and no diagonalization is needed anywhere.  Entropies are in
nats throughout.  The closed-form functions duplicate small-L results by
independent arithmetic and exist as cross-checks on the general path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import AmplitudeVector, ModelParams

#: Acceptance tolerance on the 1-norm of user-supplied probabilities;
#: internally produced states are held to 1e-12 by the tests.
NORM_TOL = 1e-8

#: Probabilities below this contribute exactly zero, implementing 0 ln 0 = 0.
_P_FLOOR = 1e-30


@dataclass(frozen=True)
class ObservableSample:
    """One row of a time sweep: entropy plus populations at time t."""

    t: float
    entropy: float
    n1: float
    n2: float
    delta_n: float


def entropy_from_probabilities(p: np.ndarray):
    """Shannon entropy in nats along the last axis, with 0 ln 0 = 0.

    Clamped at zero: near-pure states with weights summing to 1 + O(eps)
    would otherwise come out at -O(eps).
    """
    q = np.where(p > _P_FLOOR, p, 1.0)
    return np.maximum(-np.sum(q * np.log(q), axis=-1), 0.0)


def _checked_probabilities(amps: AmplitudeVector) -> np.ndarray:
    p = amps.probabilities()
    total = p.sum()
    if abs(total - 1.0) > NORM_TOL:
        raise ValueError(f"amplitudes not normalized: sum |beta|^2 = {total!r}")
    return p


def entropy_of_entanglement(amps: AmplitudeVector) -> float:
    """Von Neumann entropy of either reduced mode, -sum p_r ln p_r."""
    return float(entropy_from_probabilities(_checked_probabilities(amps)))


def populations(amps: AmplitudeVector) -> tuple[float, float]:
    """Mean occupation of modes A and B; the two always add up to L."""
    p = _checked_probabilities(amps)
    n1 = float(np.arange(amps.total + 1) @ p)
    return n1, amps.total - n1


def population_difference(amps: AmplitudeVector) -> float:
    """Imbalance n1 - n2 = 2 sum_r m_r |beta_r|^2, bounded by |L|."""
    n1, n2 = populations(amps)
    return n1 - n2


def closed_form_entropy_l1(t: float, params: ModelParams) -> float:
    """Single-quantum entropy -cos^2 ln cos^2 - sin^2 ln sin^2 at angle g*t."""
    c2 = math.cos(params.g * t) ** 2
    return float(entropy_from_probabilities(np.array([c2, 1.0 - c2])))


def closed_form_amplitudes_l2(
    t: float, params: ModelParams
) -> tuple[complex, complex, complex]:
    """Two-quanta amplitudes (alpha1, alpha2, alpha3) for the initial state |2>_A |0>_B.

    alpha1 rides on |0>_A |2>_B, alpha2 on |1>_A |1>_B, alpha3 on
    |2>_A |0>_B; the occupation-independent global phase is omitted.
    """
    a = np.exp(2j * params.g * t)
    b = np.exp(-2j * (params.g + 4.0 * params.chi) * t)
    alpha1 = (a + b - 2.0) / 4.0
    alpha2 = math.sqrt(2.0) * (b - a) / 4.0
    alpha3 = (a + b + 2.0) / 4.0
    return complex(alpha1), complex(alpha2), complex(alpha3)


def closed_form_imbalance(total: int, t: float, params: ModelParams) -> float:
    """Imbalance L cos^(L-1)(4 chi t) cos(2 g t + 4 (L-1) chi t) for |L>_A |0>_B."""
    if total == 0:
        return 0.0
    chi = params.chi
    envelope = math.cos(4.0 * chi * t) ** (total - 1)
    carrier = math.cos(2.0 * params.g * t + 4.0 * (total - 1) * chi * t)
    return total * envelope * carrier
