"""Finite-difference checks that the lifted mutation is an exact symplectomorphism."""
import logging
from typing import Callable, Mapping, Sequence, Union

import numpy as np
from scipy.special import spence
from tqdm import trange

from superfg.double.dataclasses import DoublePoint, ExactnessReport
from superfg.double.moment import float_matrix, inverse_hat, moment_residual, moment_terms, solve_moment
from superfg.seeds.dataclasses import ASeed
from superfg.seeds.jacobian import log_jacobian
from superfg.seeds.mutation import mutate_a_values, mutate_epsilon
from superfg.superseed.dataclasses import MODES, SuperSeed
from superfg.superseed.mutation import mutate_super
from superfg.utils.misc_utils import SuiteConfig

logger = logging.getLogger(__name__)

DEFAULT_H = 1e-5
DEFAULT_TOL = 1e-6
# beyond this |y_k| the factor 1 + e^{-y_k} is numerically degenerate
WALL_LIMIT = 30.0


def _softplus(t):
    """log(1 + e^t), stable for large |t|."""
    return np.logaddexp(0.0, t)


def dilog(x: float) -> float:
    """Real Li_2(x) for x <= 1."""
    return float(spence(1.0 - x))


def mutate_y(eps: np.ndarray, k: int, y: np.ndarray) -> np.ndarray:
    """y'_k = -y_k, y'_i = y_i - eps_ik log(1 + e^{-sgn(eps_ik) y_k})."""
    col = eps[:, k]
    out = y - col * _softplus(-np.sign(col) * y[k])
    out[k] = -y[k]
    return out


def y_jacobian(eps: np.ndarray, k: int, y: np.ndarray) -> np.ndarray:
    col = eps[:, k].astype(float)
    s = np.sign(col)
    J = np.eye(len(y))
    J[:, k] = col * s / (1 + np.exp(s * y[k]))
    J[k, k] = -1.0
    return J


def f_even(d_k: int, yk: float) -> float:
    """Even generating function on the constraint surface, a function of y_k alone.

    1/2 d_k (y_k log(1 + e^{-y_k}) - 2 Li_2(-e^{-y_k}))
    """
    return 0.5 * d_k * (yk * float(_softplus(-yk)) - 2.0 * dilog(-np.exp(-yk)))


def f_even_literal(eps: np.ndarray, k: int, y: np.ndarray) -> float:
    """1/2 sum_j eps_jk y_j log(1 + e^{-s_j y_k}), the affine shift of the unconstrained lift."""
    col = eps[:, k]
    return 0.5 * float(np.sum(col * y * _softplus(-np.sign(col) * y[k])))


def f_even_literal_gradient(eps: np.ndarray, k: int, y: np.ndarray) -> np.ndarray:
    col = eps[:, k].astype(float)
    s = np.sign(col)
    grad = 0.5 * col * _softplus(-s * y[k])
    grad[k] = 0.5 * float(np.sum(col * y * (-s) / (1 + np.exp(s * y[k]))))
    return grad


def central_jacobian(f: Callable[[np.ndarray], np.ndarray], z: np.ndarray, h: float) -> np.ndarray:
    cols = []
    for j in range(len(z)):
        step = np.zeros_like(z)
        step[j] = h
        cols.append((f(z + step) - f(z - step)) / (2 * h))
    return np.stack(cols, axis=1)


def log_theta_factor(w: int, yk: float, mode: str) -> float:
    """log of the theta prefactor as a function of y_k."""
    if mode == "consistent":
        return -w * float(_softplus(-np.sign(w) * yk))
    if mode == "paper_literal":
        return w * (yk - float(_softplus(-yk)))
    raise ValueError(f"Unknown mutation mode: {mode=}, expected one of {MODES}")


def f_odd(W: np.ndarray, k: int, y: np.ndarray, theta_pi: np.ndarray) -> float:
    """sum_a theta_pi_a W_ak (y_k - log(1 + e^{-y_k}))."""
    return float(np.sum(theta_pi * W[:, k])) * (y[k] - float(_softplus(-y[k])))


def exactness_check(
    s: SuperSeed,
    k: int,
    p: DoublePoint,
    h: float = DEFAULT_H,
    mode: str = "paper_literal",
) -> ExactnessReport:
    """Residuals of mu_k^* lambda' - lambda - dF_k and of the even two-form.

    The check runs on the constraint surface mu = 0 over (p.y, p.theta_pi):
    A comes from the moment map of s and A' from the moment map of the
    mutated seed at (y', theta_pi), so the lambda residual compares two
    independent sides. F_k is f_even plus the exact odd shift o'.y' - o.y,
    with o the odd correction term of the moment map.

    The odd residual compares the y-derivative of sum_a theta_pi_a log P_a with
    dF_odd; it vanishes for the paper_literal prefactor only. The constraint
    drift is the moment residual of the unconstrained affine lift
    J^{-T}(A + grad f_even_literal) in the mutated seed.
    """
    s.exchange.check_mutable(k)
    n = s.exchange.n_mut
    eps = s.exchange.epsilon[:n, :n]
    if abs(p.y[k]) > WALL_LIMIT:
        raise ValueError(f"Point too close to the wall of y_k: {p.y[k]=}")

    t = mutate_super(s, k, mode)
    d_k = int(s.exchange.d[k])
    y_new = mutate_y(eps, k, p.y)
    A = solve_moment(s, p.y, p.theta_pi).A
    A_new = solve_moment(t, y_new, p.theta_pi).A
    odd = moment_terms(s, p)[1]
    odd_new = moment_terms(t, DoublePoint(y_new, A_new, p.theta_pi))[1]

    def generating(y: np.ndarray) -> np.ndarray:
        shift = odd_new @ mutate_y(eps, k, y) - odd @ y
        return np.array([f_even(d_k, y[k]) + shift])

    J_fd = central_jacobian(lambda y: mutate_y(eps, k, y), p.y, h)
    dF = central_jacobian(generating, p.y, h)[0]
    lambda_residual = float(np.max(np.abs(J_fd.T @ A_new - A - dF)))

    B, B_new = float_matrix(inverse_hat(s)), float_matrix(inverse_hat(t))
    omega_residual = float(np.max(np.abs(J_fd.T @ B_new @ J_fd - B)))

    odd_residual = 0.0
    if s.r:
        W = s.W[:, :n]
        pulled = np.zeros(n)
        pulled[k] = sum(
            tp * (log_theta_factor(int(w), p.y[k] + h, mode) - log_theta_factor(int(w), p.y[k] - h, mode)) / (2 * h)
            for tp, w in zip(p.theta_pi, W[:, k])
        )
        dF_odd = central_jacobian(lambda y: np.array([f_odd(W, k, y, p.theta_pi)]), p.y, h)[0]
        odd_residual = float(np.max(np.abs(pulled - dF_odd)))

    J = y_jacobian(eps, k, p.y)
    A_lift = np.linalg.solve(J.T, A + f_even_literal_gradient(eps, k, p.y))
    drift = float(np.max(np.abs(moment_residual(t, DoublePoint(y_new, A_lift, p.theta_pi)))))

    report = ExactnessReport(lambda_residual, omega_residual, odd_residual, drift)
    logger.debug("exactness at k=%d: %s", k, report)
    return report


def convergence_ratio(s: SuperSeed, k: int, p: DoublePoint, h: float = 1e-3) -> float:
    """Ratio of lambda residuals at 2h and h; near 4 for a second-order scheme."""
    fine = exactness_check(s, k, p, h).lambda_residual
    coarse = exactness_check(s, k, p, 2 * h).lambda_residual
    return coarse / fine


def omega_a_invariance(
    s: ASeed,
    k: int,
    point: Union[Sequence[float], Mapping[str, float]],
    h: float = DEFAULT_H,
) -> float:
    """max |J^T Omega' J - Omega| with Omega_ij = d_i eps_ij in dlog A coordinates."""
    s.exchange.check_mutable(k)
    if isinstance(point, Mapping):
        point = [float(a.eval_positive(point)) for a in s.a]
    eps = s.exchange.epsilon
    J = log_jacobian(lambda a: mutate_a_values(eps, k, a), np.asarray(point, dtype=float), h)
    d = s.exchange.d[:, None]
    Omega = d * eps
    Omega_new = d * mutate_epsilon(s.exchange, k).epsilon
    residual = float(np.max(np.abs(J.T @ Omega_new @ J - Omega)))
    logger.debug("omega_A residual at k=%d: %.3e", k, residual)
    return residual


def exactness_suite(
    s: SuperSeed,
    config: SuiteConfig = SuiteConfig(n_trials=20),
    h: float = DEFAULT_H,
    mode: str = "paper_literal",
) -> ExactnessReport:
    """Worst residuals over n_trials random points and every mutable index."""
    rng = config.rng()
    n = s.exchange.n_mut
    worst = np.zeros(4)
    for _ in trange(config.n_trials, disable=not config.progress, desc="exactness"):
        p = DoublePoint.random(rng, n, s.r)
        for k in range(n):
            r = exactness_check(s, k, p, h, mode)
            worst = np.fmax(worst, [r.lambda_residual, r.omega_residual, r.odd_residual, r.constraint_drift])
    report = ExactnessReport(*(float(t) for t in worst))
    logger.info("exactness suite over %d points: %s", config.n_trials, report)
    return report
