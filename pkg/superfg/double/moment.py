import numpy as np
import sympy

from superfg.double.dataclasses import DiracReport, DoublePoint
from superfg.superseed.dataclasses import SuperSeed
from superfg.superseed.horizontal import check_isotropy
from superfg.utils.linalg_utils import is_zero_matrix


def inverse_hat(s: SuperSeed) -> sympy.Matrix:
    eh = s.exchange.mutable_epsilon_hat()
    if eh.det() == 0:
        raise ValueError(f"eps_hat is singular on the mutable block: {eh.tolist()}")
    return eh.inv()


def float_matrix(m: sympy.Matrix) -> np.ndarray:
    return np.array(m.tolist(), dtype=float).reshape(m.rows, m.cols)


def moment_terms(s: SuperSeed, p: DoublePoint):
    """The two correction terms of mu = A - 1/2 eps_hat^{-1} y - (W eps_hat^{-1})^T theta_pi."""
    inv = inverse_hat(s)
    even = 0.5 * float_matrix(inv) @ p.y
    odd = float_matrix(s.mutable_W() * inv).T @ p.theta_pi if s.r else np.zeros_like(p.y)
    return even, odd


def moment_residual(s: SuperSeed, p: DoublePoint) -> np.ndarray:
    if p.y.shape != (s.exchange.n_mut,) or p.theta_pi.shape != (s.r,):
        raise ValueError(f"Point does not match the seed: {p.y.shape=}, {p.theta_pi.shape=}")
    even, odd = moment_terms(s, p)
    return p.A - even - odd


def solve_moment(s: SuperSeed, y, theta_pi) -> DoublePoint:
    """The point over (y, theta_pi) on the constraint surface mu = 0."""
    p = DoublePoint(y, np.zeros_like(np.asarray(y, dtype=float)), theta_pi)
    even, odd = moment_terms(s, p)
    return DoublePoint(p.y, even + odd, p.theta_pi)


def dirac_identities(s: SuperSeed) -> DiracReport:
    inv = inverse_hat(s)
    W = s.mutable_W()
    c = W * inv
    theta_theta = c * W.T
    recovers = c * s.exchange.mutable_epsilon_hat() == W
    theta_zero = is_zero_matrix(theta_theta)
    return DiracReport(
        recovers_weights=bool(recovers),
        theta_theta_zero=theta_zero,
        agrees_with_isotropy=theta_zero == check_isotropy(s).isotropic,
        mixed_zero=is_zero_matrix(c),
    )
