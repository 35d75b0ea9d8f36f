"""Supremum functionals over the unit disk.

Every sup over the disk goes through ``sup_over_disk``: a polar grid
evaluation followed by Nelder-Mead refinement of the best grid points. The
result is a lower bound on the true supremum together with diagnostics.
"""

import logging
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np
from scipy import optimize

from . import settings
from .analytic import AnalyticFunction
from .disk_geometry import DiskPoint
from .exceptions import (
    DegenerateDilatationError,
    NonFiniteObjectiveError,
    NotSensePreservingError,
)
from .harmonic import HarmonicMap

logger = logging.getLogger(__name__)

Objective = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class SupConfig:
    n_radial: int = settings.N_RADIAL
    n_angular: int = settings.N_ANGULAR
    r_max: float = settings.R_MAX
    refine_top: int = settings.REFINE_TOP
    refine_tol: float = settings.REFINE_TOL

    def __post_init__(self) -> None:
        if self.n_radial < 8 or self.n_angular < 8:
            raise ValueError(
                "n_radial and n_angular must be at least 8, got "
                f"{self.n_radial} and {self.n_angular}"
            )
        if not 0.0 < self.r_max < 1.0 - settings.BOUNDARY_MARGIN:
            raise ValueError(
                "r_max must lie in (0, 1 - BOUNDARY_MARGIN), got "
                f"{self.r_max}"
            )
        if self.refine_top < 0:
            raise ValueError("refine_top must be non-negative")
        if self.refine_tol <= 0.0:
            raise ValueError("refine_tol must be positive")

    def refined(self, factor: int = 2) -> "SupConfig":
        """Same search with a grid `factor` times finer in both directions."""
        return replace(
            self,
            n_radial=self.n_radial * factor,
            n_angular=self.n_angular * factor,
        )

    def grid(self) -> np.ndarray:
        radii = np.linspace(0.0, self.r_max, self.n_radial)
        angles = np.linspace(0.0, 2.0 * np.pi, self.n_angular, False)
        return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()


@dataclass(frozen=True)
class SupEstimate:
    """Result of a supremum search.
    value: best value found, a lower bound on the supremum.
    grid_value: best value on the grid before refinement.
    tolerance: spread of the final refinement simplex, the stopping gap.
    """

    value: float
    argmax: DiskPoint
    grid_value: float
    refined: bool
    tolerance: float
    evaluations: int = 0

    @property
    def relative_tolerance(self) -> float:
        return self.tolerance / max(self.value, 1e-300)


def _clamp(x: np.ndarray, r_max: float) -> complex:
    z = complex(x[0], x[1])
    radius = abs(z)
    if radius > r_max:
        z *= r_max / radius
    return z


def _checked(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if not np.all(np.isfinite(values)):
        raise NonFiniteObjectiveError("objective returned a non-finite value")
    return values


def _local_maxima(grid: np.ndarray) -> np.ndarray:
    """Flat indices of polar grid points no smaller than their radial and
    angular neighbours. Row 0 is the origin.
    """
    floor = np.full((1, grid.shape[1]), -np.inf)
    mask = (
        (grid >= np.vstack([grid[1:], floor]))
        & (grid >= np.vstack([floor, grid[:-1]]))
        & (grid >= np.roll(grid, 1, axis=1))
        & (grid >= np.roll(grid, -1, axis=1))
    )
    mask[0] = False
    mask[0, 0] = grid[0, 0] >= grid[1].max()
    return np.flatnonzero(mask)


def sup_over_disk(objective: Objective, cfg: SupConfig) -> SupEstimate:
    """Estimate sup of `objective` over |z| <= cfg.r_max.
    objective: vectorized real function of complex points; it is called on
    arrays for the grid and on scalars during refinement.
    """
    points = cfg.grid()
    values = _checked(objective(points))
    evaluations = points.size
    best = int(np.argmax(values))
    grid_value = float(values[best])
    best_value, best_point = grid_value, complex(points[best])
    tolerance = 0.0

    # Local maxima first, so each refined seed climbs a different peak; the
    # origin is repeated once per angle, keep distinct seeds only.
    maxima = _local_maxima(values.reshape(cfg.n_radial, cfg.n_angular))
    maxima = maxima[np.argsort(values[maxima])[::-1]]
    order = np.concatenate([maxima, np.argsort(values)[::-1]])
    seeds: list[complex] = []
    for index in order:
        if len(seeds) >= cfg.refine_top:
            break
        candidate = complex(points[index])
        if all(abs(candidate - seed) > 1e-15 for seed in seeds):
            seeds.append(candidate)

    step = cfg.r_max / (cfg.n_radial - 1)

    def negated(x: np.ndarray) -> float:
        return -float(_checked(objective(_clamp(x, cfg.r_max))))

    for seed in seeds:
        x0 = np.array([seed.real, seed.imag])
        simplex = np.array([x0, x0 + [step, 0.0], x0 + [0.0, step]])
        result = optimize.minimize(
            negated,
            x0,
            method="Nelder-Mead",
            options=dict(
                xatol=cfg.refine_tol,
                fatol=cfg.refine_tol,
                maxiter=settings.REFINE_MAXITER,
                initial_simplex=simplex,
            ),
        )
        evaluations += int(result.nfev)
        value = -float(result.fun)
        if value > best_value:
            best_value = value
            best_point = _clamp(result.x, cfg.r_max)
            spread = np.ptp(result.final_simplex[1])
            tolerance = max(float(spread), cfg.refine_tol)

    if seeds and tolerance == 0.0:
        tolerance = cfg.refine_tol
    logger.debug(
        "sup estimate %.12g (grid %.12g) at %s after %d evaluations",
        best_value,
        grid_value,
        best_point,
        evaluations,
    )
    return SupEstimate(
        value=best_value,
        argmax=DiskPoint(best_point),
        grid_value=grid_value,
        refined=bool(seeds),
        tolerance=tolerance,
        evaluations=evaluations,
    )


def _weight(z):
    return 1.0 - np.abs(z) ** 2


def bloch_seminorm(
    h: AnalyticFunction, cfg: SupConfig = SupConfig()
) -> SupEstimate:
    """sup (1 - |z|^2) |h'(z)|"""
    return sup_over_disk(lambda z: _weight(z) * np.abs(h.deriv(z)), cfg)


def bloch_norm(h: AnalyticFunction, cfg: SupConfig = SupConfig()) -> float:
    return abs(complex(h.eval(0.0))) + bloch_seminorm(h, cfg).value


def harmonic_bloch_seminorm(
    f: HarmonicMap, cfg: SupConfig = SupConfig()
) -> SupEstimate:
    """sup (1 - |z|^2) Lambda_f(z)"""
    return sup_over_disk(lambda z: _weight(z) * f.big_lambda(z), cfg)


def harmonic_bloch_norm(f: HarmonicMap, cfg: SupConfig = SupConfig()) -> float:
    return abs(complex(f.value(0.0))) + harmonic_bloch_seminorm(f, cfg).value


def bloch_type_seminorm(
    f: HarmonicMap, cfg: SupConfig = SupConfig()
) -> SupEstimate:
    """sup (1 - |z|^2) sqrt(|J_f(z)|)"""
    return sup_over_disk(
        lambda z: _weight(z) * np.sqrt(np.abs(f.jacobian(z))), cfg
    )


def bloch_type_norm(f: HarmonicMap, cfg: SupConfig = SupConfig()) -> float:
    return abs(complex(f.value(0.0))) + bloch_type_seminorm(f, cfg).value


def quasiregularity_constant(
    f: HarmonicMap, cfg: SupConfig = SupConfig()
) -> float:
    """K(f) = sup Lambda_f / lambda_f. Every sampled point must have
    positive Jacobian.
    """

    def quotient(z):
        a = np.abs(f.h.deriv(z))
        b = np.abs(f.g.deriv(z))
        if np.any(a <= b):
            raise NotSensePreservingError(
                "J_f is not positive on the sampled set"
            )
        return (a + b) / (a - b)

    return sup_over_disk(quotient, cfg).value


def dilatation_sup(
    f: HarmonicMap,
    n_boundary: int = 4 * settings.N_ANGULAR,
    r_max: float = settings.R_MAX,
    interior: bool = False,
    cfg: SupConfig = SupConfig(),
) -> float:
    """max |g'/h'| on the circle of radius r_max.
    The maximum modulus principle makes the circle value an upper bound for
    the interior; `interior` also samples the grid of `cfg` as a check.
    """
    angles = np.linspace(0.0, 2.0 * np.pi, n_boundary, False)
    points = r_max * np.exp(1j * angles)
    if interior:
        points = np.concatenate([points, cfg.grid()])
    hprime = np.abs(f.h.deriv(points))
    if np.any(hprime < 1e-14):
        raise DegenerateDilatationError("h' vanishes on the sampled set")
    moduli = np.abs(f.g.deriv(points)) / hprime
    boundary_max = float(moduli[:n_boundary].max())
    if interior and moduli.max() > boundary_max * (1.0 + 1e-9):
        logger.warning(
            "interior dilatation %.12g exceeds boundary value %.12g",
            moduli.max(),
            boundary_max,
        )
    return float(moduli.max())
