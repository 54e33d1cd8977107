import logging
from typing import List, Mapping, Optional

import numpy as np
import sympy

from superfg.sfrat import SFRat
from superfg.superseed.dataclasses import HorizontalData, IsotropyReport, SuperSeed
from superfg.utils.linalg_utils import is_zero_matrix, solve_left

logger = logging.getLogger(__name__)


def is_admissible(s: SuperSeed) -> bool:
    """W v = 0 for every v in the kernel of eps_hat on the mutable block."""
    W = s.mutable_W()
    for v in s.exchange.mutable_epsilon_hat().nullspace():
        if not is_zero_matrix(W * v):
            return False
    return True


def horizontal_exponents(s: SuperSeed, free_value=0) -> Optional[sympy.Matrix]:
    """A solution c of c eps_hat = W on the mutable block, or None."""
    return solve_left(s.exchange.mutable_epsilon_hat(), s.mutable_W(), free_value)


def horizontal_data(s: SuperSeed, free_value=0) -> HorizontalData:
    """W eps_hat^{-1} and the factors e^{-phi_a} = prod_j X_j^{-c_aj}."""
    if not is_admissible(s):
        raise ValueError(f"Inadmissible odd weights for singular eps_hat: W={s.W.tolist()}")
    c = horizontal_exponents(s, free_value)
    if c is None:
        raise ValueError(f"No solution of c eps_hat = W: W={s.W.tolist()}")
    integral = all(x.is_integer for x in c)
    if not integral:
        logger.info("horizontal exponents are not integral: %s", c.tolist())
        return HorizontalData(c, None, False)
    factors = []
    for alpha in range(s.r):
        f = SFRat.const(1)
        for j in range(s.exchange.n_mut):
            e = int(c[alpha, j])
            if e:
                f = f * s.x[j] ** (-e)
        factors.append(f)
    return HorizontalData(c, tuple(factors), True)


def horizontal_values(s: SuperSeed, point: Mapping[str, float], free_value=0) -> np.ndarray:
    """Numeric e^{-phi} at a positive point; works for rational exponents too."""
    if s.r == 0:
        return np.ones(0)
    c = horizontal_exponents(s, free_value)
    if c is None:
        raise ValueError(f"No solution of c eps_hat = W: W={s.W.tolist()}")
    logs = np.array([np.log(float(x.eval_positive(point))) for x in s.x[: s.exchange.n_mut]])
    c = np.array(c.tolist(), dtype=float).reshape(s.r, -1)
    return np.exp(-(c @ logs))


def check_isotropy(s: SuperSeed) -> IsotropyReport:
    admissible = is_admissible(s)
    W = s.mutable_W()
    left_kernel = is_zero_matrix(W * s.exchange.mutable_epsilon_hat())
    isotropic = False
    if admissible:
        c = horizontal_exponents(s)
        isotropic = c is not None and is_zero_matrix(c * W.T)
    return IsotropyReport(admissible, isotropic, left_kernel)


def dirac_theta_coefficient(s: SuperSeed) -> sympy.Matrix:
    """W eps_hat^{-1} W^T on the mutable block."""
    c = horizontal_exponents(s)
    if c is None:
        raise ValueError(f"No solution of c eps_hat = W: W={s.W.tolist()}")
    return c * s.mutable_W().T


def gauge(s: SuperSeed, G) -> SuperSeed:
    """Odd-basis change W -> G W for G in GL_r(Z)."""
    G = np.array(G, dtype=int)
    if G.shape != (s.r, s.r) or abs(round(np.linalg.det(G))) != 1:
        raise ValueError(f"Gauge must be an invertible integer {s.r}x{s.r} matrix: {G=}")
    return s.with_W(G @ s.W)


def horizontal_residuals(s: SuperSeed, t: SuperSeed, points: List[Mapping[str, float]]) -> float:
    """max |e^{-phi'} P / e^{-phi} - 1| over the points; t is the mutated seed."""
    worst = 0.0
    for point in points:
        before = horizontal_values(s, point)
        after = horizontal_values(t, point)
        pref = np.array([float(p.eval_positive(point)) for p in t.theta_prefactor])
        worst = max(worst, float(np.max(np.abs(after * pref / before - 1))) if s.r else 0.0)
    return worst
