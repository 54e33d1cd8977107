import logging
from typing import Tuple

import numpy as np

logger = logging.getLogger(__name__)


def four_bracket(Z: np.ndarray, i: int, j: int, k: int, l: int) -> float:
    """<i j k l> for 0-based labels taken mod the number of twistors."""
    n = len(Z)
    return float(np.linalg.det(Z[[i % n, j % n, k % n, l % n]]))


def x2(Z: np.ndarray, i: int, j: int) -> float:
    """x^2_ij up to normalization: <i-1, i, j-1, j>."""
    return four_bracket(Z, i - 1, i, j - 1, j)


def cross_ratios(Z) -> Tuple[float, float, float]:
    """(u, v, w) of six momentum twistors; relabeling Z_i -> Z_{i+1} cycles u -> v -> w -> u.

    u = x13 x46 / (x14 x36), v = x24 x51 / (x25 x41), w = x35 x62 / (x36 x52), 1-based.
    """
    Z = np.asarray(Z, dtype=float)
    if Z.shape != (6, 4):
        raise ValueError(f"Need six twistors in C^4: {Z.shape=}")
    # 0-based labels: point a (1-based) is a - 1
    def x(a, b):
        return x2(Z, a - 1, b - 1)

    denom = [x(1, 4) * x(3, 6), x(2, 5) * x(4, 1), x(3, 6) * x(5, 2)]
    if any(d == 0 for d in denom):
        raise ValueError("Degenerate twistors: a cross-ratio denominator vanishes")
    u = x(1, 3) * x(4, 6) / denom[0]
    v = x(2, 4) * x(5, 1) / denom[1]
    w = x(3, 5) * x(6, 2) / denom[2]
    logger.debug("cross ratios (%g, %g, %g)", u, v, w)
    return u, v, w


def moment_curve_twistors(ts) -> np.ndarray:
    """Z_i = (1, t_i, t_i^2, t_i^3); increasing t_i give positive ordered brackets."""
    ts = np.asarray(ts, dtype=float)
    return np.vander(ts, 4, increasing=True)
