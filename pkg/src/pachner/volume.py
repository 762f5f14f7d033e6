"""Hyperbolic volumes of ideal tetrahedra via the Bloch-Wigner dilogarithm."""

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .shapes import series_shape

_SERIES_TERMS = 40


@lru_cache(maxsize=None)
def _bernoulli(count):
    """B_0 .. B_{count-1} with B_1 = -1/2."""
    b = [Fraction(0)] * count
    for m in range(count):
        b[m] = Fraction(1) if m == 0 else -sum(
            math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1)
    return tuple(b)


@lru_cache(maxsize=None)
def _li2_coefficients():
    b = _bernoulli(_SERIES_TERMS)
    return tuple(float(b[n] / math.factorial(n + 1)) for n in range(_SERIES_TERMS))


def _li2_near_zero(z):
    """Li2 for |z| <= 1, Re z <= 1/2, by the Bernoulli series in -log(1-z)."""
    u = -cmath.log(1 - z)
    total = 0j
    power = u
    for c in _li2_coefficients():
        if c:
            total += c * power
        power *= u
    return total


def bloch_wigner(z):
    """D(z) = Im Li2(z) + arg(1 - z) log|z|; zero on the real line."""
    z = complex(z)
    if z.imag == 0:
        return 0.0
    sgn = 1.0
    # D(1/z) = -D(z) and D(1 - z) = -D(z) move z into the series' disc
    if abs(z) > 1:
        z, sgn = 1 / z, -sgn
    if z.real > 0.5:
        z, sgn = 1 - z, -sgn
    value = _li2_near_zero(z).imag + cmath.phase(1 - z) * math.log(abs(z))
    return sgn * value


volume_tet = bloch_wigner


def volume_total(shapes):
    return sum(bloch_wigner(complex(z)) for z in shapes)


def volume_series(count):
    """Partial sums of the tetrahedron volumes of the T_n family, m = 1..count."""
    sums = []
    total = 0.0
    for m in range(1, count + 1):
        total += bloch_wigner(complex(series_shape(m)))
        sums.append(total)
    return sums


def volume_series_partial(count):
    if count < 1:
        raise ValueError("need at least one term")
    return volume_series(count)[-1]
