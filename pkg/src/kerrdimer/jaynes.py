"""Maximum-entropy envelope of entanglement versus population imbalance.

Fixing only the mean imbalance over the L+1 ways to split L quanta gives
geometric weights p_n = x^n / Z with a single Lagrange variable x.  The
envelope entropy E_J(delta_n) is the entropy of that distribution at the x
solving the constraint; it depends on nothing but L and the target
imbalance.  x = 1 is a removable singularity of the closed forms and is
handled by direct power sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import check_total_occupation
from .observables import entropy_from_probabilities

#: Switch from closed forms to direct power sums inside this window around
#: x = 1.  The closed forms are 0/0 at x = 1 and their cancellation noise
#: grows like 1/|x - 1|; the direct sums are well conditioned throughout,
#: so the window is sized to keep the seam error below ~1e-12.
_ONE_WINDOW = 1e-3

#: Residual tolerance on the imbalance constraint at the solved multiplier.
CONSTRAINT_TOL = 1e-10


@dataclass(frozen=True)
class JaynesSolution:
    """Solved envelope point: multiplier x, partition function z, entropy.

    x = 0 and x = inf encode the point-mass endpoints delta_n = -L and +L,
    where no finite multiplier exists and the entropy vanishes.
    """

    total: int
    delta_n: float
    x: float
    z: float
    entropy: float

    def probabilities(self) -> np.ndarray:
        """The geometric weights p_n = x^n / Z, n = 0..L."""
        return _probabilities(self.x, self.total)


def _validate_x(x: float) -> None:
    if not x > 0.0:
        raise ValueError(f"multiplier x must be > 0, got {x}")


def partition_function(x: float, total: int) -> float:
    """Generalized partition function Z = (x^(L+1) - 1)/(x - 1) = sum x^n."""
    _validate_x(x)
    check_total_occupation(total)
    if abs(x - 1.0) < _ONE_WINDOW:
        return math.fsum(x**n for n in range(total + 1))
    return (x ** (total + 1) - 1.0) / (x - 1.0)


def _imbalance_below_one(x: float, total: int) -> float:
    # Closed form L + 2/(1-x) - 2(1+L)/(1-x^(L+1)), safe for x in (0, 1).
    if abs(x - 1.0) < _ONE_WINDOW:
        num = math.fsum((2 * n - total) * x**n for n in range(total + 1))
        den = math.fsum(x**n for n in range(total + 1))
        return num / den
    return total + 2.0 / (1.0 - x) - 2.0 * (1 + total) / (1.0 - x ** (total + 1))


def mean_imbalance(x: float, total: int) -> float:
    """Mean imbalance f(x) = sum (2n - L) x^n / Z, strictly increasing in x.

    f(0+) = -L, f(1) = 0, f(inf) = L.  Arguments above 1 are reflected
    through f(1/x) = -f(x) (relabeling n -> L - n), which also dodges
    overflow of x^(L+1).
    """
    _validate_x(x)
    check_total_occupation(total)
    if x > 1.0:
        return -_imbalance_below_one(1.0 / x, total)
    return _imbalance_below_one(x, total)


def _probabilities(x: float, total: int) -> np.ndarray:
    p = np.zeros(total + 1)
    if x == 0.0:
        p[0] = 1.0
        return p
    if math.isinf(x):
        p[total] = 1.0
        return p
    u = math.log(x)
    n = np.arange(total + 1)
    # largest weight normalized to 1 before exponentiating
    w = np.exp(u * (n - total) if u > 0 else u * n)
    return w / w.sum()


def _solution_from_x(x: float, delta_n: float, total: int) -> JaynesSolution:
    if x == 0.0 or math.isinf(x):
        z = 1.0 if x == 0.0 else math.inf
        return JaynesSolution(total, delta_n, x, z, 0.0)
    if (total + 1) * abs(math.log(x)) > 700.0:
        z = math.inf if x > 1.0 else partition_function(x, total)
    else:
        z = partition_function(x, total)
    entropy = float(entropy_from_probabilities(_probabilities(x, total)))
    return JaynesSolution(total, delta_n, x, z, entropy)


def _invert_l2(delta_n: float) -> float:
    # Analytic inverse of f for L = 2, valid away from the delta_n = 2 pole.
    return (delta_n + math.sqrt(16.0 - 3.0 * delta_n * delta_n)) / (
        2.0 * (2.0 - delta_n)
    )


def _invert_by_bisection(delta_n: float, total: int) -> float:
    u_hi = 1.0
    while mean_imbalance(math.exp(u_hi), total) < delta_n:
        u_hi *= 2.0
        if u_hi > 512.0:
            raise ArithmeticError(f"failed to bracket imbalance {delta_n}")
    u_lo = -1.0
    while mean_imbalance(math.exp(u_lo), total) > delta_n:
        u_lo *= 2.0
        if u_lo < -512.0:
            raise ArithmeticError(f"failed to bracket imbalance {delta_n}")
    for _ in range(200):
        u_mid = 0.5 * (u_lo + u_hi)
        if mean_imbalance(math.exp(u_mid), total) < delta_n:
            u_lo = u_mid
        else:
            u_hi = u_mid
        if u_hi - u_lo < 1e-15 * max(1.0, abs(u_mid)):
            break
    return math.exp(0.5 * (u_lo + u_hi))


def solve_multiplier(delta_n: float, total: int) -> JaynesSolution:
    """Solve f(x) = delta_n for the multiplier and assemble the envelope point.

    L = 2 uses the analytic inverse; every other L bisects in log x, which
    is guaranteed to bracket because f is monotone.  The endpoints
    delta_n = +-L short-circuit to point masses (x diverges there).
    """
    check_total_occupation(total)
    if not abs(delta_n) <= total:
        raise ValueError(f"|delta_n| = {abs(delta_n)} exceeds L = {total}")
    if delta_n == -total:
        return _solution_from_x(0.0, delta_n, total)
    if delta_n == total:
        return _solution_from_x(math.inf, delta_n, total)
    if total == 2:
        x = _invert_l2(delta_n)
    else:
        x = _invert_by_bisection(delta_n, total)
    residual = abs(mean_imbalance(x, total) - delta_n)
    if residual > CONSTRAINT_TOL:
        raise ArithmeticError(
            f"constraint residual {residual:.3e} above {CONSTRAINT_TOL} "
            f"at delta_n = {delta_n}, L = {total}"
        )
    return _solution_from_x(x, delta_n, total)


def jaynes_entropy(delta_n: float, total: int) -> float:
    """Envelope entropy E_J(delta_n); ln(L+1) at zero imbalance, 0 at +-L."""
    return solve_multiplier(delta_n, total).entropy
