"""Explicit constants of the Lipschitz estimates and the scalar inequalities
their derivation rests on.

c1 is the minimum of psi(r) = (1 + r^2/9) / (r (1 - r^2)) on (0, 1). The
harmonic Bloch estimate uses c2 = 2 c1 + 1/3, which dominates
|zeta|^2 + 2 c1 |zeta| for |zeta| <= 1/3 and the fallback 3 |zeta| beyond.
The quasiregular estimate uses c3 = c1 + 1.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy import optimize

from .analytic import AnalyticFunction, compose_with_mobius
from .disk_geometry import DiskPoint, as_point
from .exceptions import DiskDomainError
from .settings import STRATUM_THRESHOLD, THEOREM_A_CONSTANT

logger = logging.getLogger(__name__)

PSI_SCAN_INTERVALS = 16
PSI_LOWER = 1e-6
PSI_UPPER = 1.0 - 1e-6


def _check_radius(r: float) -> None:
    if not 0.0 < r < 1.0:
        raise DiskDomainError(f"r must lie in (0, 1), got {r}")


def psi(r: float) -> float:
    _check_radius(r)
    return (1.0 + r * r / 9.0) / (r * (1.0 - r * r))


def minimize_psi(tol: float = 1e-10) -> tuple[float, float]:
    """Golden-section search for the minimizer of psi.
    The bracket comes from a coarse scan so the pole at 0 is never probed.
    Returns (r_star, c1).
    """
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    nodes = np.linspace(PSI_LOWER, PSI_UPPER, PSI_SCAN_INTERVALS + 1)
    values = [psi(r) for r in nodes]
    best = int(np.argmin(values))
    best = min(max(best, 1), PSI_SCAN_INTERVALS - 1)
    bracket = (nodes[best - 1], nodes[best], nodes[best + 1])
    result = optimize.minimize_scalar(
        psi, bracket=bracket, method="golden", tol=tol
    )
    r_star = float(result.x)
    logger.debug(
        "psi minimized at r=%.12f after %d calls", r_star, result.nfev
    )
    return r_star, psi(r_star)


def psi_stationary_root() -> float:
    """Positive root of r^4 + 28 r^2 - 9 = 0, where psi'(r) vanishes."""
    return float(np.sqrt((-28.0 + np.sqrt(820.0)) / 2.0))


@dataclass(frozen=True)
class ConstantSet:
    c1: float
    r_star: float
    c2: float
    c3: float
    theorem_a_constant: float = THEOREM_A_CONSTANT
    # c1 + 1/6 also closes the quasiregular case-1 step
    tight_c3: float = 0.0
    provenance: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "c1": self.c1,
            "r_star": self.r_star,
            "c2": self.c2,
            "c3": self.c3,
            "theorem_a_constant": self.theorem_a_constant,
            "tight_c3": self.tight_c3,
            "relations": dict(self.provenance),
        }


@lru_cache(maxsize=8)
def constant_set(tol: float = 1e-10) -> ConstantSet:
    r_star, c1 = minimize_psi(tol)
    return ConstantSet(
        c1=c1,
        r_star=r_star,
        c2=2.0 * c1 + STRATUM_THRESHOLD,
        c3=c1 + 1.0,
        tight_c3=c1 + 1.0 / 6.0,
        provenance={
            "c1": "min of (1 + r^2/9) / (r (1 - r^2)) over 0 < r < 1",
            "r_star": "root of r^4 + 28 r^2 - 9 = 0",
            "c2": "2 * c1 + 1/3",
            "c3": "c1 + 1",
            "tight_c3": "c1 + 1/6",
            "theorem_a_constant": "fixed, from the analytic Bloch estimate",
            "case_split": (
                "|zeta| <= 1/3 uses the derivative bound, |zeta| > 1/3 uses "
                "3 |zeta| > 1; the quasiregular case 2 is stated with "
                "2 sqrt(2) |zeta| > 1 but only needs 3 |zeta| > 1"
            ),
        },
    )


def second_derivative_bound(r: float, w_mod: float) -> float:
    """(1 + r^2 |w|^2) / (r (1 - r^2)), the factor bounding
    (1 - |w|^2)^2 |h''(w)| / ||h||_B for any 0 < r < 1.
    """
    _check_radius(r)
    if not 0.0 <= w_mod < 1.0:
        raise DiskDomainError(f"|w| must lie in [0, 1), got {w_mod}")
    return (1.0 + r * r * w_mod * w_mod) / (r * (1.0 - r * r))


def displacement_integral(t: float) -> float:
    """Integral of ds / (1 - s^2)^2 over [0, t]."""
    if not 0.0 <= t < 1.0:
        raise DiskDomainError(f"t must lie in [0, 1), got {t}")
    return 0.25 * (2.0 * t / (1.0 - t * t) + 2.0 * np.arctanh(t))


def log_displacement_inequality(t: float) -> tuple[float, float]:
    """(1 - t^2) ln((1 + t) / (1 - t)) against 2 t; lhs <= rhs."""
    if not 0.0 <= t < 1.0:
        raise DiskDomainError(f"t must lie in [0, 1), got {t}")
    return (1.0 - t * t) * 2.0 * float(np.arctanh(t)), 2.0 * t


def case1_bound(zeta_mod: float, c1: float | None = None) -> float:
    """|zeta|^2 + 2 c1 |zeta|, per unit of ||f||_{B_h}."""
    c1 = constant_set().c1 if c1 is None else c1
    return zeta_mod * zeta_mod + 2.0 * c1 * zeta_mod


def case2_bound(zeta_mod: float) -> float:
    return 3.0 * zeta_mod


def lemma23_pair(
    h: AnalyticFunction,
    w: "DiskPoint | complex",
    zeta: "DiskPoint | complex",
    h_seminorm: float,
    c1: float | None = None,
) -> tuple[float, float]:
    """Both sides of (1 - |zeta|^2) |g'(zeta) - g'(0)| <= c1 |zeta| ||h||_B
    with g = h o phi_w. Requires |zeta| <= 1/3.
    """
    zeta = as_point(zeta).value
    if abs(zeta) > STRATUM_THRESHOLD * (1.0 + 1e-12):
        raise DiskDomainError(f"|zeta| = {abs(zeta)} exceeds 1/3")
    c1 = constant_set().c1 if c1 is None else c1
    g = compose_with_mobius(h, w)
    lhs = (1.0 - abs(zeta) ** 2) * abs(complex(g.deriv(zeta) - g.deriv(0.0)))
    return lhs, c1 * abs(zeta) * h_seminorm
