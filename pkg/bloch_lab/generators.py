"""Seeded generators of analytic and harmonic test functions.

`seed` may be an integer or an existing numpy Generator, so campaigns can
hand each trial its own stream.
"""

import logging

import numpy as np

from . import settings
from .analytic import Polynomial, poly_antiderivative, poly_multiply
from .exceptions import BlochLabError
from .harmonic import HarmonicMap

logger = logging.getLogger(__name__)

Seed = int | np.random.Generator | np.random.SeedSequence


def gen_polynomial(seed: Seed, degree: int, scale: float = 1.0) -> Polynomial:
    """Coefficients a_k with real and imaginary parts uniform in
    [-scale/(k+1), scale/(k+1)].
    """
    if not 0 <= degree <= settings.MAX_DEGREE:
        raise ValueError(
            f"degree must lie in [0, {settings.MAX_DEGREE}], got {degree}"
        )
    rng = np.random.default_rng(seed)
    bound = scale / np.arange(1, degree + 2)
    real = rng.uniform(-bound, bound)
    imag = rng.uniform(-bound, bound)
    return Polynomial(real + 1j * imag)


def gen_harmonic(
    seed: Seed, degree: int, scale: float = 1.0, analytic: bool = False
) -> HarmonicMap:
    """h and g drawn independently from the same stream; g = 0 when
    `analytic`.
    """
    rng = np.random.default_rng(seed)
    h = gen_polynomial(rng, degree, scale)
    if analytic:
        return HarmonicMap.analytic(h)
    return HarmonicMap(h=h, g=gen_polynomial(rng, degree, scale))


def _nonvanishing(hprime: Polynomial) -> Polynomial | None:
    """Raise the constant term of h' until |a_0| >= (11/9) sum |a_k|.
    Then h' has no zero in the closed disk and its boundary modulus varies
    by at most a factor 10.
    """
    coefficients = np.array(hprime.coefficients)
    tail = float(np.abs(coefficients[1:]).sum())
    head = abs(coefficients[0])
    target = tail * (1.0 + settings.DERIVATIVE_FLOOR_RATIO) / (
        1.0 - settings.DERIVATIVE_FLOOR_RATIO
    )
    if head == 0.0 and tail == 0.0:
        return None
    if head < target:
        direction = coefficients[0] / head if head > 0.0 else 1.0
        coefficients[0] = direction * target * (1.0 + 1e-9)
    return Polynomial(coefficients)


def gen_quasiregular(
    seed: Seed, degree: int, k: float, power: int | None = None
) -> tuple[HarmonicMap, float]:
    """Sense-preserving map with dilatation omega = k u z^m.
    h' is a normalized random polynomial, g' = omega h', h(0) = g(0) = 0.
    Returns the map and K = (1 + k) / (1 - k).
    power: m, drawn from {0, 1, 2} when None.
    """
    if not 0.0 < k < 1.0:
        raise ValueError(f"k must lie in (0, 1), got {k}")
    rng = np.random.default_rng(seed)
    circle = np.exp(1j * np.linspace(0.0, 2.0 * np.pi, 256, False))
    for attempt in range(settings.QUASIREGULAR_MAX_ATTEMPTS):
        hprime = _nonvanishing(gen_polynomial(rng, degree))
        if hprime is None:
            logger.warning("degenerate h' on attempt %d, resampling", attempt)
            continue
        moduli = np.abs(hprime.eval(circle))
        if moduli.min() < settings.DERIVATIVE_FLOOR_RATIO * moduli.max():
            logger.warning("h' too small on attempt %d, resampling", attempt)
            continue
        break
    else:
        raise BlochLabError(
            f"no admissible h' after {settings.QUASIREGULAR_MAX_ATTEMPTS} "
            "attempts"
        )
    m = int(rng.integers(0, 3)) if power is None else power
    u = np.exp(2j * np.pi * rng.uniform())
    omega = Polynomial(np.concatenate([np.zeros(m), [k * u]]))
    f = HarmonicMap(
        h=poly_antiderivative(hprime),
        g=poly_antiderivative(poly_multiply(omega, hprime)),
    )
    return f, (1.0 + k) / (1.0 - k)
