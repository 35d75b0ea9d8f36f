"""Möbius automorphisms of the unit disk and the pseudo-hyperbolic metric."""

from dataclasses import dataclass

import numpy as np

from .exceptions import DiskDomainError
from .settings import BOUNDARY_MARGIN


@dataclass(frozen=True)
class DiskPoint:
    """A point strictly inside the unit disk.
    value: complex. Points with |value| >= 1 - BOUNDARY_MARGIN are rejected.
    """

    value: complex

    def __post_init__(self) -> None:
        value = complex(self.value)
        if not np.isfinite(value):
            raise DiskDomainError(f"{value} is not a finite complex number")
        if abs(value) >= 1.0 - BOUNDARY_MARGIN:
            raise DiskDomainError(f"{value} is not inside the unit disk")
        object.__setattr__(self, "value", value)

    def __abs__(self) -> float:
        return abs(self.value)

    def __complex__(self) -> complex:
        return self.value

    def to_pair(self) -> list[float]:
        return [self.value.real, self.value.imag]


def as_point(z: "DiskPoint | complex") -> DiskPoint:
    if isinstance(z, DiskPoint):
        return z
    return DiskPoint(z)


def phi(w: complex, z):
    """phi_w(z) = (w - z) / (1 - conj(w) z), elementwise on arrays."""
    return (w - z) / (1.0 - np.conj(w) * z)


def phi_prime(w: complex, z):
    """phi_w'(z) = (|w|^2 - 1) / (1 - conj(w) z)^2, elementwise."""
    return (abs(w) ** 2 - 1.0) / (1.0 - np.conj(w) * z) ** 2


def phi_second(w: complex, z):
    """phi_w''(z) = 2 conj(w) (|w|^2 - 1) / (1 - conj(w) z)^3."""
    wbar = np.conj(w)
    return 2.0 * wbar * (abs(w) ** 2 - 1.0) / (1.0 - wbar * z) ** 3


def rho(z, w):
    """Pseudo-hyperbolic distance |w - z| / |1 - conj(w) z|, elementwise."""
    return np.abs(w - z) / np.abs(1.0 - np.conj(w) * z)


@dataclass(frozen=True)
class MobiusTransform:
    """The involutive disk automorphism phi_w with w = pivot."""

    pivot: DiskPoint

    def __post_init__(self) -> None:
        object.__setattr__(self, "pivot", as_point(self.pivot))

    @property
    def w(self) -> complex:
        return self.pivot.value

    def apply(self, z):
        return phi(self.w, z)

    def derivative(self, z):
        return phi_prime(self.w, z)

    def second_derivative(self, z):
        return phi_second(self.w, z)


def mobius_apply(t: MobiusTransform, z: "DiskPoint | complex") -> complex:
    return complex(t.apply(as_point(z).value))


def mobius_derivative(
    t: MobiusTransform, z: "DiskPoint | complex"
) -> complex:
    return complex(t.derivative(as_point(z).value))


def pseudo_distance(
    z: "DiskPoint | complex", w: "DiskPoint | complex"
) -> float:
    return float(rho(as_point(z).value, as_point(w).value))


def one_minus_rho_sq(
    z: "DiskPoint | complex", w: "DiskPoint | complex"
) -> float:
    """(1 - |z|^2)(1 - |w|^2) / |1 - conj(z) w|^2, which equals
    1 - rho(z, w)^2 without forming the difference.
    """
    z = as_point(z).value
    w = as_point(w).value
    return (
        (1.0 - abs(z) ** 2)
        * (1.0 - abs(w) ** 2)
        / abs(1.0 - z.conjugate() * w) ** 2
    )


def random_disk_points(
    rng: np.random.Generator, n: int, r_max: float = 1.0
) -> np.ndarray:
    """n points uniform by area in the disk of radius r_max."""
    radius = r_max * np.sqrt(rng.uniform(0.0, 1.0, n))
    angle = rng.uniform(0.0, 2.0 * np.pi, n)
    return radius * np.exp(1j * angle)


def rotate(u: complex, z):
    """Rotation z -> u z by a unimodular u."""
    if not np.isclose(abs(u), 1.0):
        raise DiskDomainError(f"rotation factor {u} is not unimodular")
    return u * z
