"""Brute-force cross-check path: dense diagonalization in the number basis.

Builds the fixed-L Hamiltonian block directly from the ladder action of the
mode-exchange operator and propagates through a real symmetric
eigendecomposition.  Deliberately shares nothing with the rotated-basis
path in dynamics.py beyond the common types, so the two routes stay
independent checks of each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import AmplitudeVector, FockPair, ModelParams, check_total_occupation


@dataclass(frozen=True)
class HamiltonianBlock:
    """Dense real symmetric Hamiltonian on the fixed-L ladder.

    Nonzero only within two of the diagonal: the exchange term is
    tridiagonal and its square pentadiagonal.
    """

    total: int
    h: np.ndarray


def jx_matrix(total: int) -> np.ndarray:
    """Matrix of (a1+ a2 + a2+ a1)/2 on the ladder, i.e. J_x for spin L/2.

    <r+1|Jx|r> = sqrt((L - r)(r + 1))/2, symmetric and real.
    """
    check_total_occupation(total)
    x = np.zeros((total + 1, total + 1))
    for r in range(total):
        off = 0.5 * np.sqrt((total - r) * (r + 1.0))
        x[r + 1, r] = off
        x[r, r + 1] = off
    return x


def build_hamiltonian_fock(total: int, params: ModelParams) -> HamiltonianBlock:
    """(Omega L + chi L^2) I + 2 G_L Jx + 4 chi Jx^2 in the number basis."""
    x = jx_matrix(total)
    h = (
        (params.detuned_omega() * total + params.chi * total * total)
        * np.eye(total + 1)
        + 2.0 * params.effective_coupling(total) * x
        + 4.0 * params.chi * (x @ x)
    )
    return HamiltonianBlock(total, h)


def evolve_by_diagonalization(
    initial: FockPair, params: ModelParams, t: float
) -> AmplitudeVector:
    """Propagate |p>_A |q>_B by diagonalizing the dense block."""
    total = initial.total
    block = build_hamiltonian_fock(total, params)
    energies, vectors = np.linalg.eigh(block.h)
    psi0 = np.zeros(total + 1)
    psi0[initial.p] = 1.0
    beta = vectors @ (np.exp(-1j * energies * t) * (vectors.T @ psi0))
    return AmplitudeVector(total, beta)


def spectrum(total: int, params: ModelParams) -> np.ndarray:
    """Ascending eigenvalues of the fixed-L block."""
    return np.linalg.eigvalsh(build_hamiltonian_fock(total, params).h)
