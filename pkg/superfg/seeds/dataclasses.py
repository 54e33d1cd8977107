from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
import sympy

from superfg.sfrat import SFRat


@dataclass(frozen=True, eq=False)
class ExchangeData:
    """Exchange matrix over all indices; mutable indices come first."""

    n_mut: int
    n_frozen: int
    epsilon: np.ndarray
    d: Optional[np.ndarray] = None

    def __post_init__(self):
        n = int(self.n_mut) + int(self.n_frozen)
        epsilon = np.array(self.epsilon, dtype=int).reshape(n, n) if n else np.zeros((0, 0), dtype=int)
        d = np.ones(n, dtype=int) if self.d is None else np.array(self.d, dtype=int)
        object.__setattr__(self, "n_mut", int(self.n_mut))
        object.__setattr__(self, "n_frozen", int(self.n_frozen))
        object.__setattr__(self, "epsilon", epsilon)
        object.__setattr__(self, "d", d)
        if d.shape != (n,) or np.any(d <= 0):
            raise ValueError(f"Symmetrizers must be {n} positive integers: {d=}")
        if np.any(np.diag(epsilon) != 0):
            raise ValueError(f"Exchange matrix has nonzero diagonal: {epsilon=}")
        if not self.is_skew_symmetrizable():
            raise ValueError(
                f"d_i eps_ij != -d_j eps_ji for {epsilon=}, {d=}"
            )

    @property
    def n(self) -> int:
        return self.n_mut + self.n_frozen

    def is_skew_symmetrizable(self) -> bool:
        de = self.d[:, None] * self.epsilon
        return bool(np.all(de == -de.T))

    def is_mutable(self, k: int) -> bool:
        return 0 <= k < self.n_mut

    def check_mutable(self, k: int):
        if not 0 <= k < self.n:
            raise ValueError(f"Index out of range: {k=}, n={self.n}")
        if not self.is_mutable(k):
            raise ValueError(f"Cannot mutate at a frozen index: {k=}, n_mut={self.n_mut}")

    def epsilon_hat(self) -> sympy.Matrix:
        """eps_ij / d_j as an exact rational matrix."""
        return sympy.Matrix(
            self.n, self.n, lambda i, j: sympy.Rational(int(self.epsilon[i, j]), int(self.d[j]))
        )

    def mutable_epsilon_hat(self) -> sympy.Matrix:
        return self.epsilon_hat()[: self.n_mut, : self.n_mut]

    def with_epsilon(self, epsilon: np.ndarray) -> "ExchangeData":
        return ExchangeData(self.n_mut, self.n_frozen, epsilon, self.d)

    def __eq__(self, other):
        if not isinstance(other, ExchangeData):
            return NotImplemented
        return (
            self.n_mut == other.n_mut
            and self.n_frozen == other.n_frozen
            and np.array_equal(self.epsilon, other.epsilon)
            and np.array_equal(self.d, other.d)
        )

    __hash__ = None


def default_names(prefix: str, n: int) -> List[str]:
    return [f"{prefix}{i + 1}" for i in range(n)]


@dataclass(frozen=True, eq=False)
class XSeed:
    exchange: ExchangeData
    x: Tuple[SFRat, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        if len(self.x) != self.exchange.n:
            raise ValueError(f"Expected {self.exchange.n} X-variables, got {len(self.x)}")

    @classmethod
    def initial(cls, exchange: ExchangeData, prefix: str = "x") -> "XSeed":
        return cls(exchange, [SFRat.var(v) for v in default_names(prefix, exchange.n)])

    def __eq__(self, other):
        if not isinstance(other, XSeed):
            return NotImplemented
        return self.exchange == other.exchange and all(
            a.equals(b) for a, b in zip(self.x, other.x)
        )

    __hash__ = None

    def permuted(self, perm) -> "XSeed":
        """Relabel index i as perm[i]."""
        perm = list(perm)
        inv = np.argsort(perm)
        eps = self.exchange.epsilon[np.ix_(inv, inv)]
        ex = ExchangeData(self.exchange.n_mut, self.exchange.n_frozen, eps, self.exchange.d[inv])
        return XSeed(ex, [self.x[i] for i in inv])


@dataclass(frozen=True, eq=False)
class ASeed:
    exchange: ExchangeData
    a: Tuple[SFRat, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if len(self.a) != self.exchange.n:
            raise ValueError(f"Expected {self.exchange.n} A-variables, got {len(self.a)}")

    @classmethod
    def initial(cls, exchange: ExchangeData, prefix: str = "a") -> "ASeed":
        return cls(exchange, [SFRat.var(v) for v in default_names(prefix, exchange.n)])

    def __eq__(self, other):
        if not isinstance(other, ASeed):
            return NotImplemented
        return self.exchange == other.exchange and all(
            a.equals(b) for a, b in zip(self.a, other.a)
        )

    __hash__ = None
