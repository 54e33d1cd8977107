import logging

import numpy as np

from superfg.seeds.mutation import mutate_x, x_mutation_factor
from superfg.sfrat import SFRat
from superfg.superseed.dataclasses import MODES, SuperSeed
from superfg.superseed.horizontal import is_admissible

logger = logging.getLogger(__name__)


def mutate_weights(W: np.ndarray, epsilon: np.ndarray, k: int, mode: str = "consistent") -> np.ndarray:
    """Column rule for the odd weights.

    consistent: each row of W mutates like an extra exchange row,
        W'_aj = W_aj + sgn(W_ak) [W_ak eps_kj]_+.
    paper_literal: W'_aj = W_aj + [eps_kj]_+ W_ak.
    In both, W'_ak = -W_ak.
    """
    W = np.asarray(W, dtype=int)
    wk = W[:, k]
    row = epsilon[k, :]
    if mode == "consistent":
        new = W + np.sign(wk)[:, None] * np.maximum(wk[:, None] * row[None, :], 0)
    elif mode == "paper_literal":
        new = W + wk[:, None] * np.maximum(row, 0)[None, :]
    else:
        raise ValueError(f"Unknown mutation mode: {mode=}, expected one of {MODES}")
    new[:, k] = -wk
    return new


def theta_factor(xk: SFRat, w: int, mode: str = "consistent") -> SFRat:
    if mode == "consistent":
        # X_k^[w]_+ (1 + X_k)^-w
        return x_mutation_factor(xk, w)
    if mode == "paper_literal":
        return (xk / (1 + xk ** -1)) ** w
    raise ValueError(f"Unknown mutation mode: {mode=}, expected one of {MODES}")


def mutate_super(s: SuperSeed, k: int, mode: str = "consistent") -> SuperSeed:
    s.exchange.check_mutable(k)
    if not is_admissible(s):
        raise ValueError(f"Odd weights do not vanish on the kernel of eps_hat: W={s.W.tolist()}")
    even = mutate_x(s.even(), k)
    W = mutate_weights(s.W, s.exchange.epsilon, k, mode)
    xk = s.x[k]
    prefactor = [
        p * theta_factor(xk, int(w), mode) for p, w in zip(s.theta_prefactor, s.W[:, k])
    ]
    logger.debug("mutate_super at %d (%s): W -> %s", k, mode, W.tolist())
    return SuperSeed(even.exchange, even.x, W, prefactor, s.x_names, s.theta_names)
