"""Deterministic time sweeps and peak searches over the exact dynamics.

Everything here samples the closed-form propagator; there is no integrator
and no randomness, so identical configurations always produce identical
output.  Peak refinement is derivative-free golden-section, run in lockstep
over all candidate brackets at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import evolve_grid
from .model import FockPair, ModelParams
from .observables import ObservableSample, entropy_from_probabilities

#: Coarse-grid rule: the fastest level spacing 2*G_L + 4*chi*L may advance
#: at most this much phase between neighbouring samples.
MAX_PHASE_STEP = math.pi / 8

_CHUNK = 1 << 17


@dataclass(frozen=True)
class TraceConfig:
    """Uniform time grid over [t_start, t_end] for one initial condition."""

    initial: FockPair
    params: ModelParams
    t_start: float
    t_end: float
    steps: int

    def __post_init__(self) -> None:
        if not (self.t_end > self.t_start >= 0.0):
            raise ValueError(
                f"need t_end > t_start >= 0, got [{self.t_start}, {self.t_end}]"
            )
        if self.steps < 2:
            raise ValueError(f"need at least 2 steps, got {self.steps}")

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.steps)


@dataclass(frozen=True)
class MaxSearchResult:
    """Global entropy maximum over a scan horizon."""

    t_star: float
    e_star: float
    gap: float


@dataclass(frozen=True)
class MaxTableRow:
    """One cell of the maxima-versus-occupation comparison table."""

    total: int
    ratio: float
    e_star: float
    t_star: float
    ln_dim: float
    gap: float


def _entropies(initial: FockPair, params: ModelParams, times: np.ndarray) -> np.ndarray:
    out = np.empty(times.shape)
    for start in range(0, times.size, _CHUNK):
        sl = slice(start, start + _CHUNK)
        betas = evolve_grid(initial, params, times[sl])
        out[sl] = entropy_from_probabilities(np.abs(betas) ** 2)
    return out


def trace(config: TraceConfig) -> list[ObservableSample]:
    """Sample entropy and populations on the configured grid.

    Every row is computed from a single amplitude vector, so entropy and
    populations are always mutually consistent.
    """
    times = config.times()
    total = config.initial.total
    betas = evolve_grid(config.initial, config.params, times)
    probs = np.abs(betas) ** 2
    entropies = entropy_from_probabilities(probs)
    n1 = probs @ np.arange(total + 1)
    return [
        ObservableSample(
            t=float(t),
            entropy=float(s),
            n1=float(a),
            n2=float(total - a),
            delta_n=float(2.0 * a - total),
        )
        for t, s, a in zip(times, entropies, n1)
    ]


def _golden_max_batch(f, lo: np.ndarray, hi: np.ndarray, tol: float):
    """Golden-section maximization run in lockstep over a batch of brackets."""
    invphi = 0.5 * (math.sqrt(5.0) - 1.0)
    a = lo.astype(float).copy()
    b = hi.astype(float).copy()
    width = float(np.max(b - a))
    iters = 0
    if width > tol:
        iters = int(math.ceil(math.log(tol / width) / math.log(invphi)))
    for _ in range(iters):
        x1 = b - invphi * (b - a)
        x2 = a + invphi * (b - a)
        keep_low = f(x1) >= f(x2)
        b = np.where(keep_low, x2, b)
        a = np.where(keep_low, a, x1)
    mid = 0.5 * (a + b)
    return mid, f(mid)


def find_max_entanglement(
    initial: FockPair,
    params: ModelParams,
    t_max: float,
    tol: float = 1e-8,
) -> MaxSearchResult:
    """Global maximum of the entanglement entropy over [0, t_max].

    A uniform coarse scan (step set by MAX_PHASE_STEP against the fastest
    level spacing) locates candidate peaks; each near-best candidate is then
    refined by golden section to time resolution tol.  The refined value can
    only improve on the coarse grid maximum.
    """
    if not (t_max > 0.0 and tol > 0.0):
        raise ValueError("t_max and tol must be positive")
    total = initial.total
    if total == 0:
        return MaxSearchResult(0.0, 0.0, 0.0)

    omega_fast = 2.0 * params.effective_coupling(total) + 4.0 * params.chi * total
    n_steps = max(int(math.ceil(t_max * omega_fast / MAX_PHASE_STEP)) + 1, 257)
    times = np.linspace(0.0, t_max, n_steps)
    entropies = _entropies(initial, params, times)

    best_coarse = int(np.argmax(entropies))
    interior = np.zeros(n_steps, dtype=bool)
    interior[1:-1] = (entropies[1:-1] >= entropies[:-2]) & (
        entropies[1:-1] >= entropies[2:]
    )
    interior[0] = interior[-1] = True
    peaks = np.flatnonzero(interior)

    # A peak missed between samples can exceed its sampled neighbourhood by
    # at most the local variation scale; prune everything hopeless.
    neighbor_lo = entropies[np.maximum(peaks - 1, 0)]
    neighbor_hi = entropies[np.minimum(peaks + 1, n_steps - 1)]
    slack = 4.0 * np.maximum(
        np.abs(entropies[peaks] - neighbor_lo), np.abs(entropies[peaks] - neighbor_hi)
    )
    keep = entropies[peaks] + slack + 1e-12 >= entropies[best_coarse]
    peaks = peaks[keep]

    lo = times[np.maximum(peaks - 1, 0)]
    hi = times[np.minimum(peaks + 1, n_steps - 1)]
    refined_t, refined_e = _golden_max_batch(
        lambda ts: _entropies(initial, params, ts), lo, hi, tol
    )

    i = int(np.argmax(refined_e))
    t_star, e_star = float(refined_t[i]), float(refined_e[i])
    if entropies[best_coarse] > e_star:
        t_star, e_star = float(times[best_coarse]), float(entropies[best_coarse])
    return MaxSearchResult(t_star, e_star, math.log(total + 1) - e_star)


def max_table(
    l_max: int,
    ratios,
    t_max: float = 600.0,
    tol: float = 1e-8,
) -> list[MaxTableRow]:
    """Entropy maxima for initial states |L>_A |0>_B, L = 1..l_max, per ratio."""
    rows = []
    for total in range(1, l_max + 1):
        for ratio in ratios:
            params = ModelParams(g=1.0, chi=ratio)
            found = find_max_entanglement(FockPair(total, 0), params, t_max, tol)
            rows.append(
                MaxTableRow(
                    total=total,
                    ratio=float(ratio),
                    e_star=found.e_star,
                    t_star=found.t_star,
                    ln_dim=math.log(total + 1),
                    gap=found.gap,
                )
            )
    return rows


def dwell_time(
    initial: FockPair,
    params: ModelParams,
    t_max: float,
    fraction: float = 0.9,
) -> float:
    """Total time in [0, t_max] spent at or above fraction * ln(L+1).

    Estimated on the same coarse grid as the peak search; useful for
    comparing how long different ratios sustain high entanglement.
    """
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    total = initial.total
    if total == 0:
        return 0.0
    omega_fast = 2.0 * params.effective_coupling(total) + 4.0 * params.chi * total
    n_steps = max(int(math.ceil(t_max * omega_fast / MAX_PHASE_STEP)) + 1, 257)
    times = np.linspace(0.0, t_max, n_steps)
    entropies = _entropies(initial, params, times)
    dt = times[1] - times[0]
    return float(np.count_nonzero(entropies >= fraction * math.log(total + 1)) * dt)
