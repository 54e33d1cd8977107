from fractions import Fraction
from typing import Tuple

import numpy as np

from superfg.seeds.dataclasses import ExchangeData
from superfg.superseed.dataclasses import SuperSeed


def dual_exchange(e: ExchangeData) -> ExchangeData:
    """eps_dual = -d^{-1} eps^T d, entrywise -eps_ji d_j / d_i."""
    n = e.n
    out = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            value = Fraction(-int(e.epsilon[j, i]) * int(e.d[j]), int(e.d[i]))
            assert value.denominator == 1, f"non-integer dual entry at {(i, j)=}"
            out[i, j] = int(value)
    return ExchangeData(e.n_mut, e.n_frozen, out, e.d)


def langlands_dual(s: SuperSeed) -> Tuple[ExchangeData, np.ndarray]:
    """Dual exchange data and pushed-forward weights W eps."""
    return dual_exchange(s.exchange), s.W @ s.exchange.epsilon


def dual_seed(s: SuperSeed) -> SuperSeed:
    exchange, W = langlands_dual(s)
    return SuperSeed(exchange, s.x, W, s.theta_prefactor, s.x_names, s.theta_names)
