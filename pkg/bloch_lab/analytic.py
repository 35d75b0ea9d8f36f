"""Analytic functions on the unit disk with exact derivatives.

Every function accepts a complex scalar or a numpy array of points and
evaluates elementwise. Compositions with disk automorphisms are evaluated
pointwise through the chain rule; no series is ever recomposed.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .disk_geometry import DiskPoint, MobiusTransform


class AnalyticFunction(ABC):
    """Evaluatable analytic function with first and second derivatives."""

    @abstractmethod
    def eval(self, z):
        """Value at z."""

    @abstractmethod
    def deriv(self, z):
        """First complex derivative at z."""

    @abstractmethod
    def deriv2(self, z):
        """Second complex derivative at z."""

    def __call__(self, z):
        return self.eval(z)


@dataclass(frozen=True, eq=False)
class Polynomial(AnalyticFunction):
    """Truncated power series a_0 + a_1 z + ... + a_n z^n.
    coefficients: complex coefficients, constant term first. Evaluation
    uses Horner's scheme through numpy.polynomial.
    """

    coefficients: np.ndarray
    _d1: np.ndarray = field(init=False, repr=False)
    _d2: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        coefficients = np.atleast_1d(
            np.asarray(self.coefficients, dtype=complex)
        )
        if coefficients.size == 0:
            coefficients = np.zeros(1, dtype=complex)
        coefficients.setflags(write=False)
        object.__setattr__(self, "coefficients", coefficients)
        object.__setattr__(self, "_d1", P.polyder(coefficients))
        object.__setattr__(self, "_d2", P.polyder(coefficients, 2))

    @classmethod
    def constant(cls, value: complex) -> "Polynomial":
        return cls([value])

    @classmethod
    def identity(cls) -> "Polynomial":
        return cls([0.0, 1.0])

    @property
    def degree(self) -> int:
        nonzero = np.flatnonzero(self.coefficients)
        return int(nonzero[-1]) if nonzero.size else 0

    def eval(self, z):
        return P.polyval(z, self.coefficients)

    def deriv(self, z):
        return P.polyval(z, self._d1)

    def deriv2(self, z):
        return P.polyval(z, self._d2)

    def derivative(self) -> "Polynomial":
        return Polynomial(self._d1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = P.polytrim(self.coefficients), P.polytrim(other.coefficients)
        return a.shape == b.shape and bool(np.all(a == b))

    def __repr__(self) -> str:
        return f"Polynomial(degree={self.degree})"


class LogFixture(AnalyticFunction):
    """h(z) = log(1 - z^2) on the principal branch.
    A Bloch function with seminorm 2 that is not Lipschitz in the
    euclidean metric.
    """

    def eval(self, z):
        return np.log(1.0 - np.square(z))

    def deriv(self, z):
        return -2.0 * z / (1.0 - np.square(z))

    def deriv2(self, z):
        z2 = np.square(z)
        return -2.0 * (1.0 + z2) / (1.0 - z2) ** 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LogFixture)

    def __hash__(self) -> int:
        return hash(LogFixture)

    def __repr__(self) -> str:
        return "LogFixture()"


@dataclass(frozen=True, eq=False)
class MobiusComposed(AnalyticFunction):
    """outer o phi_w, evaluated pointwise."""

    inner: MobiusTransform
    outer: AnalyticFunction

    def eval(self, z):
        return self.outer.eval(self.inner.apply(z))

    def deriv(self, z):
        return self.outer.deriv(self.inner.apply(z)) * self.inner.derivative(
            z
        )

    def deriv2(self, z):
        u = self.inner.apply(z)
        du = self.inner.derivative(z)
        return (
            self.outer.deriv2(u) * du**2
            + self.outer.deriv(u) * self.inner.second_derivative(z)
        )


def poly_multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial(P.polymul(p.coefficients, q.coefficients))


def poly_antiderivative(p: Polynomial) -> Polynomial:
    """Antiderivative with zero constant term."""
    return Polynomial(P.polyint(p.coefficients))


def compose_with_mobius(
    f: AnalyticFunction, w: "DiskPoint | complex"
) -> MobiusComposed:
    return MobiusComposed(inner=MobiusTransform(w), outer=f)
