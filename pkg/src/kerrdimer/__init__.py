"""Exact simulator for two Kerr-coupled bosonic modes at fixed total occupation.

Provides the closed-form propagator in the spin-L/2 representation, a dense
diagonalization reference path, entanglement and population observables,
Jaynes maximum-entropy envelopes, and deterministic experiment drivers.
"""

from .dynamics import (
    EXACT_PATH_MAX,
    WignerHalfPi,
    eigen_energies,
    eigen_energy,
    evolve,
    evolve_grid,
    wigner_half_pi,
    wigner_half_pi_exact,
)
from .experiments import (
    MaxSearchResult,
    MaxTableRow,
    TraceConfig,
    dwell_time,
    find_max_entanglement,
    max_table,
    trace,
)
from .jaynes import (
    JaynesSolution,
    jaynes_entropy,
    mean_imbalance,
    partition_function,
    solve_multiplier,
)
from .model import (
    L_MAX,
    AmplitudeVector,
    CapacityError,
    FockPair,
    LadderIndex,
    ModelParams,
)
from .observables import (
    ObservableSample,
    closed_form_amplitudes_l2,
    closed_form_entropy_l1,
    closed_form_imbalance,
    entropy_from_probabilities,
    entropy_of_entanglement,
    population_difference,
    populations,
)
from .reference import (
    HamiltonianBlock,
    build_hamiltonian_fock,
    evolve_by_diagonalization,
    jx_matrix,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudeVector",
    "CapacityError",
    "EXACT_PATH_MAX",
    "FockPair",
    "HamiltonianBlock",
    "JaynesSolution",
    "L_MAX",
    "LadderIndex",
    "MaxSearchResult",
    "MaxTableRow",
    "ModelParams",
    "ObservableSample",
    "TraceConfig",
    "WignerHalfPi",
    "build_hamiltonian_fock",
    "closed_form_amplitudes_l2",
    "closed_form_entropy_l1",
    "closed_form_imbalance",
    "dwell_time",
    "eigen_energies",
    "eigen_energy",
    "entropy_from_probabilities",
    "entropy_of_entanglement",
    "evolve",
    "evolve_by_diagonalization",
    "evolve_grid",
    "find_max_entanglement",
    "jaynes_entropy",
    "jx_matrix",
    "max_table",
    "mean_imbalance",
    "partition_function",
    "population_difference",
    "populations",
    "solve_multiplier",
    "spectrum",
    "trace",
    "wigner_half_pi",
    "wigner_half_pi_exact",
]
