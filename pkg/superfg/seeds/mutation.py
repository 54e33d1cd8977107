import logging
from typing import Iterable, List, Sequence

import numpy as np

from superfg.seeds.dataclasses import ASeed, ExchangeData, XSeed
from superfg.sfrat import SFRat
from superfg.utils.misc_utils import sign

logger = logging.getLogger(__name__)


def mutate_epsilon(e: ExchangeData, k: int) -> ExchangeData:
    """Matrix mutation at k in Fomin-Zelevinsky form, over all indices."""
    e.check_mutable(k)
    eps = e.epsilon
    col = eps[:, k]
    row = eps[k, :]
    # eps_ij + sgn(eps_ik) [eps_ik eps_kj]_+
    prod = col[:, None] * row[None, :]
    new = eps + np.sign(col)[:, None] * np.maximum(prod, 0)
    new[k, :] = -eps[k, :]
    new[:, k] = -eps[:, k]
    return e.with_epsilon(new)


def x_mutation_factor(xk: SFRat, e_ik: int) -> SFRat:
    """(1 + X_k^{-sgn e})^{-e}."""
    if e_ik == 0:
        return SFRat.const(1)
    return (1 + xk ** (-sign(e_ik))) ** (-e_ik)


def mutate_x(s: XSeed, k: int) -> XSeed:
    s.exchange.check_mutable(k)
    eps = s.exchange.epsilon
    xk = s.x[k]
    new_x = []
    for i, xi in enumerate(s.x):
        if i == k:
            new_x.append(xk ** -1)
        else:
            new_x.append(xi * x_mutation_factor(xk, int(eps[i, k])))
    logger.debug("mutate_x at %d", k)
    return XSeed(mutate_epsilon(s.exchange, k), new_x)


def exchange_monomials(a: Sequence[SFRat], column: np.ndarray):
    """The two monomials prod A_i^[e_ik]_+ and prod A_i^[-e_ik]_+."""
    plus = SFRat.const(1)
    minus = SFRat.const(1)
    for ai, e in zip(a, column):
        e = int(e)
        if e > 0:
            plus = plus * ai ** e
        elif e < 0:
            minus = minus * ai ** (-e)
    return plus, minus


def mutate_a(s: ASeed, k: int) -> ASeed:
    s.exchange.check_mutable(k)
    plus, minus = exchange_monomials(s.a, s.exchange.epsilon[:, k])
    new_a = list(s.a)
    new_a[k] = (plus + minus) / s.a[k]
    logger.debug("mutate_a at %d", k)
    return ASeed(mutate_epsilon(s.exchange, k), new_a)


def p_map(s: ASeed, include_frozen: bool = False) -> List[SFRat]:
    """p*(X_i) = prod_j A_j^{eps_ij}, one monomial per mutable index."""
    rows = range(s.exchange.n if include_frozen else s.exchange.n_mut)
    out = []
    for i in rows:
        x = SFRat.const(1)
        for aj, e in zip(s.a, s.exchange.epsilon[i]):
            if e:
                x = x * aj ** int(e)
        out.append(x)
    return out


def mutate_sequence(s, ks: Iterable[int]):
    """Compose mutations left to right; works for XSeed and ASeed."""
    step = mutate_x if isinstance(s, XSeed) else mutate_a
    for k in ks:
        s = step(s, k)
    return s


def orbit(s, ks: Iterable[int]) -> list:
    seeds = [s]
    step = mutate_x if isinstance(s, XSeed) else mutate_a
    for k in ks:
        seeds.append(step(seeds[-1], k))
    return seeds


def alternating(n_steps: int, first: int = 0, second: int = 1) -> List[int]:
    return [first if t % 2 == 0 else second for t in range(n_steps)]


def mutate_x_values(epsilon: np.ndarray, k: int, x: np.ndarray) -> np.ndarray:
    """Numeric X-mutation on a vector of positive values."""
    x = np.asarray(x, dtype=float)
    out = x.copy()
    col = epsilon[:, k]
    s = np.sign(col)
    out *= (1 + x[k] ** (-s)) ** (-col)
    out[k] = 1 / x[k]
    return out


def mutate_a_values(epsilon: np.ndarray, k: int, a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    col = epsilon[:, k]
    plus = np.prod(a ** np.maximum(col, 0))
    minus = np.prod(a ** np.maximum(-col, 0))
    out = a.copy()
    out[k] = (plus + minus) / a[k]
    return out


def is_laurent_orbit(seeds: Sequence[ASeed]) -> bool:
    """Every A-value along the orbit has a monomial denominator."""
    return all(a.is_laurent() for s in seeds for a in s.a)


