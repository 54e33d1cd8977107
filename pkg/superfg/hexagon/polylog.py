"""Classical polylogarithms Li_n in double precision, and the inversion-symmetric ell_n."""
import cmath
import logging
import math
from typing import Union

import numpy as np
from scipy.special import bernoulli, comb, zeta

logger = logging.getLogger(__name__)

EPS = 1e-17
SERIES_RADIUS = 0.75
INVERSION_RADIUS = 1.4
MAX_TERMS = 200

Number = Union[float, complex]


def _series(n: int, z: complex) -> complex:
    k = np.arange(1, MAX_TERMS + 1)
    if abs(z) > 0:
        k = k[: int(min(MAX_TERMS, math.ceil(math.log(EPS) / math.log(abs(z))) + 1))]
    return complex(np.sum(z ** k / k.astype(float) ** n))


def _bernoulli_poly(n: int, x: complex) -> complex:
    B = bernoulli(n)
    return sum(comb(n, k, exact=True) * B[k] * x ** (n - k) for k in range(n + 1))


def _continuation(n: int, z: complex) -> complex:
    two_pi_i = 2j * math.pi
    a = -two_pi_i ** n / math.factorial(n) * _bernoulli_poly(n, cmath.log(z) / two_pi_i)
    if z.imag == 0 and z.real < 0:
        a = complex(a.real)
    if z.imag < 0 or (z.imag == 0 and z.real >= 1):
        a -= two_pi_i * cmath.log(z) ** (n - 1) / math.factorial(n - 1)
    return a


def _unit_circle(n: int, z: complex) -> complex:
    """Expansion in log z around z = 1, valid for |log z| < 2 pi."""
    u = cmath.log(z)
    total = 0j
    power = 1 + 0j
    for m in range(MAX_TERMS):
        s = n - m
        # s = 1 is the pole term; negative even s are trivial zeros
        if s != 1 and not (s < 0 and s % 2 == 0):
            term = zeta(s) * power / math.factorial(m)
            if abs(term) < EPS:
                break
            total += term
        power *= u
    harmonic = sum(1 / k for k in range(1, n))
    total += u ** (n - 1) / math.factorial(n - 1) * (harmonic - cmath.log(-u))
    return total


def polylog_complex(n: int, z: Number) -> complex:
    """Principal branch of Li_n(z)."""
    if n < 1:
        raise ValueError(f"Polylogarithm weight must be positive: {n=}")
    z = complex(z)
    if z == 1:
        if n == 1:
            raise ValueError("Li_1 diverges at 1")
        return complex(zeta(n))
    if z == 0:
        return 0j
    if n == 1:
        return -cmath.log(1 - z)
    if abs(z) <= SERIES_RADIUS:
        return _series(n, z)
    if abs(z) >= INVERSION_RADIUS:
        return (-1) ** (n + 1) * _series(n, 1 / z) + _continuation(n, z)
    return _unit_circle(n, z)


def polylog(n: int, x: Number) -> Number:
    """Li_n for complex input; the real part of the principal value for real input."""
    if isinstance(x, complex):
        return polylog_complex(n, x)
    x = float(x)
    if n == 1 and x >= 1:
        raise ValueError(f"Li_1 diverges logarithmically at {x=}; use ell1_diff for paired differences")
    return polylog_complex(n, x).real


def ell_n(n: int, x: Number) -> Number:
    """(Li_n(x) - (-1)^n Li_n(1/x)) / 2."""
    if x == 0:
        raise ValueError(f"ell_n is undefined at {x=}")
    if n == 1 and not isinstance(x, complex) and x == 1:
        raise ValueError("ell_1 diverges at 1")
    if isinstance(x, complex):
        return 0.5 * (polylog_complex(n, x) - (-1) ** n * polylog_complex(n, 1 / x))
    if n == 1:
        # real part of -log((1 - x)(1 - 1/x)) / 2
        return -0.5 * (math.log(abs(1 - x)) + math.log(abs(1 - 1 / x)))
    return 0.5 * (polylog(n, x) - (-1) ** n * polylog(n, 1 / x))


def ell1_diff(a: Number, b: Number) -> Number:
    """ell_1(a) - ell_1(b) with the divergences at 1 cancelled; 0 in the coincident limit.

    Complex arguments use the principal ell_1 of each point, which is
    continuous off the real axis.
    """
    if a == b:
        return 0j if isinstance(a, complex) else 0.0
    if a == 1 or b == 1 or a == 0 or b == 0:
        raise ValueError(f"ell1_diff argument on a singular point: {a=}, {b=}")
    if isinstance(a, complex) or isinstance(b, complex):
        return ell_n(1, complex(a)) - ell_n(1, complex(b))
    r1 = (1 - b) / (1 - a)
    r2 = (1 - 1 / b) / (1 - 1 / a)
    if r1 <= 0 or r2 <= 0:
        raise ValueError(f"ell1_diff arguments on opposite sides of a singularity: {a=}, {b=}")
    return 0.5 * (math.log(r1) + math.log(r2))
