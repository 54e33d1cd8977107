from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import sympy

from superfg.seeds.dataclasses import ExchangeData, XSeed, default_names
from superfg.sfrat import SFRat
from superfg.utils.misc_utils import random_exchange_matrix

MODES = ("consistent", "paper_literal")


@dataclass(frozen=True, eq=False)
class SuperSeed:
    """Even seed plus odd weights W (r x n) and accumulated theta prefactors.

    `x_names` are the coordinates the X's and prefactors are written in;
    brackets are always taken with respect to the seed that owns them.
    """

    exchange: ExchangeData
    x: Tuple[SFRat, ...]
    W: np.ndarray
    theta_prefactor: Optional[Tuple[SFRat, ...]] = None
    x_names: Optional[Tuple[str, ...]] = None
    theta_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        n = self.exchange.n
        W = np.array(self.W, dtype=int).reshape(-1, n) if np.size(self.W) else np.zeros((0, n), dtype=int)
        r = W.shape[0]
        prefactor = (
            tuple(SFRat.const(1) for _ in range(r))
            if self.theta_prefactor is None
            else tuple(self.theta_prefactor)
        )
        x_names = tuple(self.x_names) if self.x_names is not None else tuple(default_names("x", n))
        theta_names = (
            tuple(self.theta_names) if self.theta_names is not None else tuple(default_names("theta", r))
        )
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "theta_prefactor", prefactor)
        object.__setattr__(self, "x_names", x_names)
        object.__setattr__(self, "theta_names", theta_names)
        if len(self.x) != n or len(x_names) != n:
            raise ValueError(f"Expected {n} X-variables: {len(self.x)=}, {len(x_names)=}")
        if len(prefactor) != r or len(theta_names) != r:
            raise ValueError(f"Expected {r} odd generators: {len(prefactor)=}, {len(theta_names)=}")

    @classmethod
    def initial(cls, exchange: ExchangeData, W) -> "SuperSeed":
        return cls(exchange, XSeed.initial(exchange).x, W)

    @classmethod
    def random(
        cls, rng: np.random.Generator, n: int, r: int, max_entry: int = 3, tries: int = 100
    ) -> "SuperSeed":
        """Random skew-symmetric seed with admissible weights in {-1, 0, 1} when possible."""
        from superfg.superseed.horizontal import is_admissible

        exchange = ExchangeData(n, 0, random_exchange_matrix(rng, n, max_entry))
        for _ in range(tries):
            s = cls.initial(exchange, rng.integers(-1, 2, size=(r, n)))
            if is_admissible(s):
                return s
        # rows in the row space are always admissible
        basis = rng.integers(0, n, size=r)
        return cls.initial(exchange, exchange.epsilon[basis])

    @property
    def r(self) -> int:
        return self.W.shape[0]

    @property
    def n(self) -> int:
        return self.exchange.n

    def even(self) -> XSeed:
        return XSeed(self.exchange, self.x)

    def W_matrix(self) -> sympy.Matrix:
        return sympy.Matrix(self.W.tolist()) if self.r else sympy.zeros(0, self.n)

    def mutable_W(self) -> sympy.Matrix:
        return self.W_matrix()[:, : self.exchange.n_mut]

    def with_W(self, W) -> "SuperSeed":
        return SuperSeed(self.exchange, self.x, W, self.theta_prefactor, self.x_names, self.theta_names)

    def __eq__(self, other):
        if not isinstance(other, SuperSeed):
            return NotImplemented
        return (
            self.even() == other.even()
            and np.array_equal(self.W, other.W)
            and all(a.equals(b) for a, b in zip(self.theta_prefactor, other.theta_prefactor))
        )

    __hash__ = None


@dataclass(frozen=True)
class IsotropyReport:
    admissible: bool
    isotropic: bool
    left_kernel: bool


@dataclass(frozen=True)
class HorizontalData:
    exponents: sympy.Matrix
    factors: Optional[Tuple[SFRat, ...]]
    integral: bool
