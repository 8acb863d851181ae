"""Shared types for the two-mode Kerr-coupled simulator.

All dynamics happens inside a fixed total-occupation sector: with L quanta
split between modes A and B, states live on the (L+1)-point ladder indexed
by r = quanta in A.  These types carry that bookkeeping; the physics lives
in the sibling modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Largest total occupation the dense matrices are built for.  Double
#: precision in the rotation-matrix sum stays comfortable well past the
#: physically interesting range (L <= 10).
L_MAX = 30


class CapacityError(ValueError):
    """Requested total occupation exceeds L_MAX."""


def check_total_occupation(total: int) -> None:
    """Reject negative or oversized occupation numbers."""
    if total < 0:
        raise ValueError(f"total occupation must be >= 0, got {total}")
    if total > L_MAX:
        raise CapacityError(
            f"total occupation {total} exceeds the supported maximum L_MAX = {L_MAX}"
        )


@dataclass(frozen=True)
class ModelParams:
    """Physical rates in units of inverse time (hbar = 1).

    g is the linear inter-mode coupling, chi the Kerr (quartic) rate and
    omega the bare transition frequency.  With the reduced convention g = 1,
    chi equals the dimensionless ratio chi/g and times are read as g*t.
    omega only enters as a global phase at fixed total occupation, so no
    observable depends on it.
    """

    g: float = 1.0
    chi: float = 0.0
    omega: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.g) and self.g > 0.0):
            raise ValueError(f"g must be finite and > 0, got {self.g}")
        if not (math.isfinite(self.chi) and self.chi >= 0.0):
            raise ValueError(f"chi must be finite and >= 0, got {self.chi}")
        if not math.isfinite(self.omega):
            raise ValueError(f"omega must be finite, got {self.omega}")

    def detuned_omega(self) -> float:
        """Kerr-shifted frequency omega - 2 chi."""
        return self.omega - 2.0 * self.chi

    def effective_coupling(self, total: int) -> float:
        """Occupation-dressed coupling g - 2 chi + 2 chi L for total occupation L."""
        return self.g + 2.0 * self.chi * (total - 1)


@dataclass(frozen=True)
class FockPair:
    """Initial occupation (p, q) of modes A and B."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"occupations must be >= 0, got ({self.p}, {self.q})")
        check_total_occupation(self.p + self.q)

    @property
    def total(self) -> int:
        return self.p + self.q

    @property
    def two_m(self) -> int:
        """Twice the ladder projection, 2m = p - q (kept integral)."""
        return self.p - self.q


@dataclass(frozen=True)
class LadderIndex:
    """Position on the fixed-L ladder, stored as the row index r = m + L/2.

    r equals the occupation of mode A, so decoding back to mode occupations
    is (r, L - r); the half-integer projection m never has to be stored.
    """

    total: int
    r: int

    def __post_init__(self) -> None:
        check_total_occupation(self.total)
        if not 0 <= self.r <= self.total:
            raise ValueError(f"row index {self.r} outside [0, {self.total}]")

    @classmethod
    def from_two_m(cls, total: int, two_m: int) -> "LadderIndex":
        if (two_m + total) % 2 != 0:
            raise ValueError(f"2m = {two_m} has wrong parity for L = {total}")
        return cls(total, (two_m + total) // 2)

    @property
    def two_m(self) -> int:
        return 2 * self.r - self.total

    @property
    def m(self) -> float:
        return 0.5 * self.two_m

    @property
    def occupations(self) -> tuple[int, int]:
        """(quanta in A, quanta in B)."""
        return self.r, self.total - self.r


@dataclass(frozen=True)
class AmplitudeVector:
    """Complex amplitudes over the fixed-L ladder at some instant.

    Entry r multiplies the state with r quanta in mode A and L - r in
    mode B.  The array is copied and frozen on construction; instances are
    safe to share across threads.
    """

    total: int
    beta: np.ndarray

    def __post_init__(self) -> None:
        check_total_occupation(self.total)
        beta = np.array(self.beta, dtype=complex)
        if beta.shape != (self.total + 1,):
            raise ValueError(
                f"expected {self.total + 1} amplitudes, got shape {beta.shape}"
            )
        beta.setflags(write=False)
        object.__setattr__(self, "beta", beta)

    def probabilities(self) -> np.ndarray:
        """Occupation-basis probabilities |beta_r|^2."""
        return np.abs(self.beta) ** 2

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.beta) ** 2))
