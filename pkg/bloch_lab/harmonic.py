"""Harmonic mappings f = h + conj(g) and their pointwise derivative data."""

from dataclasses import dataclass

import numpy as np

from .analytic import AnalyticFunction, Polynomial, compose_with_mobius
from .disk_geometry import DiskPoint, as_point
from .exceptions import NotSensePreservingError


@dataclass(frozen=True, eq=False)
class HarmonicMap:
    """f = h + conj(g) with h, g analytic in the disk.
    h: analytic part. g: analytic function whose conjugate is the
    co-analytic part. All methods accept scalars or numpy arrays.
    """

    h: AnalyticFunction
    g: AnalyticFunction

    @classmethod
    def analytic(cls, h: AnalyticFunction) -> "HarmonicMap":
        return cls(h=h, g=Polynomial.constant(0.0))

    @classmethod
    def affine(cls, k: complex) -> "HarmonicMap":
        """f(z) = z + k conj(z)."""
        return cls(h=Polynomial.identity(), g=Polynomial([0.0, np.conj(k)]))

    def value(self, z):
        return self.h.eval(z) + np.conj(self.g.eval(z))

    def fz(self, z):
        return self.h.deriv(z)

    def fzbar(self, z):
        return np.conj(self.g.deriv(z))

    def big_lambda(self, z):
        return np.abs(self.h.deriv(z)) + np.abs(self.g.deriv(z))

    def small_lambda(self, z):
        return np.abs(np.abs(self.h.deriv(z)) - np.abs(self.g.deriv(z)))

    def jacobian(self, z):
        return np.abs(self.h.deriv(z)) ** 2 - np.abs(self.g.deriv(z)) ** 2

    def dilatation(self, z):
        """omega = g'/h'."""
        return self.g.deriv(z) / self.h.deriv(z)

    def compose_with_mobius(self, w: "DiskPoint | complex") -> "HarmonicMap":
        """psi = f o phi_w, kept in the decomposed form H + conj(G)."""
        return HarmonicMap(
            h=compose_with_mobius(self.h, w), g=compose_with_mobius(self.g, w)
        )


@dataclass(frozen=True)
class DerivativeBundle:
    fz: complex
    fzbar: complex
    big_lambda: float
    small_lambda: float
    jacobian: float
    # None where fz vanishes
    dilatation_modulus: float | None


def bundle_at(f: HarmonicMap, z: "DiskPoint | complex") -> DerivativeBundle:
    z = as_point(z).value
    fz = complex(f.fz(z))
    fzbar = complex(f.fzbar(z))
    a, b = abs(fz), abs(fzbar)
    return DerivativeBundle(
        fz=fz,
        fzbar=fzbar,
        big_lambda=a + b,
        small_lambda=abs(a - b),
        jacobian=a * a - b * b,
        dilatation_modulus=None if a == 0.0 else b / a,
    )


def directional_derivative(
    f: HarmonicMap, z: "DiskPoint | complex", alpha: float
) -> complex:
    """e^{i alpha} f_z + e^{-i alpha} f_zbar."""
    z = as_point(z).value
    rotation = np.exp(1j * alpha)
    return complex(rotation * f.fz(z) + np.conj(rotation) * f.fzbar(z))


def extremal_direction_check(
    f: HarmonicMap, z: "DiskPoint | complex", n_angles: int
) -> tuple[float, float]:
    """Max and min of |directional derivative| over a uniform angle grid.
    Approximates Lambda_f(z) from below and lambda_f(z) from above.
    """
    if n_angles < 8:
        raise ValueError(f"n_angles must be at least 8, got {n_angles}")
    z = as_point(z).value
    rotation = np.exp(1j * np.linspace(0.0, 2.0 * np.pi, n_angles, False))
    moduli = np.abs(rotation * f.fz(z) + np.conj(rotation) * f.fzbar(z))
    return float(moduli.max()), float(moduli.min())


def quasiregularity_pointwise(
    f: HarmonicMap, z: "DiskPoint | complex"
) -> float:
    bundle = bundle_at(f, z)
    if bundle.jacobian <= 0.0:
        raise NotSensePreservingError(
            f"J_f({as_point(z).value}) = {bundle.jacobian} is not positive"
        )
    a, b = abs(bundle.fz), abs(bundle.fzbar)
    return (a + b) / (a - b)


def laplacian_estimate(f: HarmonicMap, z, step: float = 1e-3):
    """Finite-difference estimate of 4 f_{z zbar}.
    Averages the axis-aligned and the diagonal 5-point stencils, whose
    fourth-order errors cancel for harmonic maps.
    """
    z = np.asarray(z, dtype=complex)
    centre = f.value(z)
    total = 0.0
    for offset in (step, step * np.exp(0.25j * np.pi)):
        ring = sum(f.value(z + offset * 1j**m) for m in range(4))
        total = total + (ring - 4.0 * centre) / step**2
    return total / 2.0
