"""Goncharov hyperlogarithms G(a_1, ..., a_m; z) = int_{0<t_m<...<t_1<z} prod dt_i / (t_i - a_i)."""
import logging
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import chebyshev
from scipy import integrate

logger = logging.getLogger(__name__)

MAX_DEPTH = 6
# target absolute error by depth
QUAD_EPSABS = {1: 1e-10, 2: 1e-10, 3: 1e-10, 4: 1e-8, 5: 1e-8, 6: 1e-8}
QUAD_LIMIT = 200
QUAD_EPSREL = 1e-12
CHEB_MIN_DEGREE = 16
CHEB_MAX_DEGREE = 512


def check_letters(letters: Sequence[complex], endpoint: float = 1.0):
    letters = [complex(a) for a in letters]
    if not 1 <= len(letters) <= MAX_DEPTH:
        raise ValueError(f"Depth must be between 1 and {MAX_DEPTH}: {len(letters)=}")
    if endpoint <= 0:
        raise ValueError(f"Endpoint must be positive: {endpoint=}")
    on_path = [a for a in letters if a.imag == 0 and 0 <= a.real <= endpoint]
    if on_path:
        raise ValueError(f"Letters on the integration path [0, {endpoint}]: {on_path}")
    return letters


def _quad_complex(f: Callable[[float], complex], a: float, b: float, epsabs: float) -> complex:
    re, _ = integrate.quad(lambda t: f(t).real, a, b, epsabs=epsabs, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT)
    im, _ = integrate.quad(lambda t: f(t).imag, a, b, epsabs=epsabs, epsrel=QUAD_EPSREL, limit=QUAD_LIMIT)
    return complex(re, im)


def g_quadrature(letters: Sequence[complex], endpoint: float = 1.0) -> complex:
    """Nested adaptive quadrature; depth 1 and 2 only."""
    letters = check_letters(letters, endpoint)
    epsabs = QUAD_EPSABS[len(letters)]
    if len(letters) == 1:
        (a,) = letters
        return _quad_complex(lambda t: 1 / (t - a), 0.0, endpoint, epsabs)
    if len(letters) == 2:
        a1, a2 = letters

        def inner(t1):
            return _quad_complex(lambda t2: 1 / (t2 - a2), 0.0, t1, epsabs) if t1 > 0 else 0j

        return _quad_complex(lambda t1: inner(t1) / (t1 - a1), 0.0, endpoint, epsabs)
    raise ValueError(f"Nested quadrature supports depth <= 2: {len(letters)=}")


def _fit(values_at: Callable[[np.ndarray], np.ndarray], endpoint: float, epsabs: float):
    """Chebyshev series on [0, endpoint], degree doubled until the tail drops below epsabs."""
    deg = CHEB_MIN_DEGREE
    while True:
        nodes = 0.5 * endpoint * (1 + chebyshev.chebpts1(deg + 1))
        vals = values_at(nodes)
        re = chebyshev.Chebyshev.fit(nodes, vals.real, deg, domain=[0, endpoint])
        im = chebyshev.Chebyshev.fit(nodes, vals.imag, deg, domain=[0, endpoint])
        tail = np.abs(re.coef[-4:]).max() + np.abs(im.coef[-4:]).max()
        if tail < epsabs or deg >= CHEB_MAX_DEGREE:
            if tail >= epsabs:
                logger.warning("Chebyshev fit stopped at degree %d with tail %.2e", deg, tail)
            logger.debug("Chebyshev degree %d, tail %.2e", deg, tail)
            return re, im
        deg *= 2


def g_spectral(letters: Sequence[complex], endpoint: float = 1.0) -> complex:
    """Iterated Chebyshev integration, innermost letter first."""
    letters = check_letters(letters, endpoint)
    epsabs = QUAD_EPSABS[len(letters)]
    # G(a_k, ..., a_m; t) as a Chebyshev series in t, starting from the constant 1
    re, im = None, None
    for a in reversed(letters):
        if re is None:
            def values_at(t, a=a):
                return 1 / (t - a)
        else:
            def values_at(t, a=a, re=re, im=im):
                return (re(t) + 1j * im(t)) / (t - a)
        f_re, f_im = _fit(values_at, endpoint, epsabs)
        re = f_re.integ(lbnd=0)
        im = f_im.integ(lbnd=0)
    return complex(re(endpoint), im(endpoint))


def g_function(letters: Sequence[complex], endpoint: float = 1.0) -> complex:
    """Nested quadrature up to depth 2, spectral integration beyond."""
    letters = check_letters(letters, endpoint)
    if len(letters) <= 2:
        return g_quadrature(letters, endpoint)
    return g_spectral(letters, endpoint)
