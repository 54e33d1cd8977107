import logging
from typing import Callable, Mapping, Sequence, Union

import numpy as np

from superfg.seeds.dataclasses import XSeed
from superfg.seeds.mutation import mutate_x_values

logger = logging.getLogger(__name__)

DEFAULT_H = 1e-5
DEFAULT_TOL = 1e-6


def log_jacobian(
    f: Callable[[np.ndarray], np.ndarray], point: np.ndarray, h: float = DEFAULT_H
) -> np.ndarray:
    """Central-difference Jacobian of log f(exp(t)) at t = log(point)."""
    point = np.asarray(point, dtype=float)
    if np.any(~np.isfinite(point)) or np.any(point <= 0):
        raise ValueError(f"Point must be finite and strictly positive: {point=}")
    t0 = np.log(point)
    cols = []
    for j in range(len(t0)):
        step = np.zeros_like(t0)
        step[j] = h
        up = f(np.exp(t0 + step))
        down = f(np.exp(t0 - step))
        if np.any(up <= 0) or np.any(down <= 0) or not (
            np.all(np.isfinite(up)) and np.all(np.isfinite(down))
        ):
            raise ValueError(f"Degenerate point on a pole: {point=}")
        cols.append((np.log(up) - np.log(down)) / (2 * h))
    return np.stack(cols, axis=1)


def current_values(s: XSeed, point: Union[Sequence[float], Mapping[str, float]]) -> np.ndarray:
    """Values of the seed's X's: given directly, or by evaluating s.x at a named point."""
    if isinstance(point, Mapping):
        return np.array([float(x.eval_positive(point)) for x in s.x])
    return np.asarray(point, dtype=float)


def mutation_log_jacobian(
    s: XSeed,
    k: int,
    point: Union[Sequence[float], Mapping[str, float]],
    h: float = DEFAULT_H,
) -> float:
    """det of d log X'_i / d log X_j at the current X values."""
    s.exchange.check_mutable(k)
    x = current_values(s, point)
    eps = s.exchange.epsilon
    jac = log_jacobian(lambda v: mutate_x_values(eps, k, v), x, h)
    det = float(np.linalg.det(jac))
    logger.debug("log-jacobian determinant at k=%d: %.12f", k, det)
    return det
