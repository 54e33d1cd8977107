import logging

import numpy as np

from superfg.quantum.mutation import QuantumSeed, certified, q_mutate_sequence
from superfg.quantum.series import DEFAULT_ORDER
from superfg.seeds.dataclasses import ExchangeData
from superfg.superseed.dataclasses import SuperSeed

logger = logging.getLogger(__name__)

A2 = ((0, 1), (-1, 0))
PENTAGON = (0, 1, 0, 1, 0)


def initial_rank2(order: int = DEFAULT_ORDER, epsilon=A2, W=None) -> QuantumSeed:
    if order < 4:
        raise ValueError(f"Pentagon check needs truncation order >= 4: {order=}")
    W = np.zeros((0, 2), dtype=int) if W is None else W
    return QuantumSeed.initial(SuperSeed.initial(ExchangeData(2, 0, np.array(epsilon, dtype=int)), W), order)


def pentagon_check(order: int = DEFAULT_ORDER, epsilon=A2, W=None) -> bool:
    """Mutating along 1, 2, 1, 2, 1 returns the initial generators with the two X's swapped."""
    start = initial_rank2(order, epsilon, W)
    final = q_mutate_sequence(start, PENTAGON)
    ok = certified(final.x[0], start.x[1]) and certified(final.x[1], start.x[0])
    ok = ok and all(certified(t, t0) for t, t0 in zip(final.theta, start.theta))
    logger.info("pentagon at order %d: %s (precision %s)", order, ok, final.precision())
    return ok
