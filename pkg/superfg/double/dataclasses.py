from dataclasses import dataclass

import numpy as np


@dataclass
class DoublePoint:
    """(y, A) with y = log X on the mutable block, plus the even products theta_a pi_a."""

    y: np.ndarray
    A: np.ndarray
    theta_pi: np.ndarray

    def __post_init__(self):
        self.y = np.asarray(self.y, dtype=float)
        self.A = np.asarray(self.A, dtype=float)
        self.theta_pi = np.asarray(self.theta_pi, dtype=float).reshape(-1)
        if self.y.shape != self.A.shape:
            raise ValueError(f"Shape mismatch: {self.y.shape=}, {self.A.shape=}")

    @classmethod
    def random(cls, rng: np.random.Generator, n: int, r: int) -> "DoublePoint":
        """y uniform in [-1, 1], i.e. X log-uniform in [1/e, e]."""
        return cls(rng.uniform(-1, 1, n), rng.normal(size=n), rng.normal(size=r))


@dataclass(frozen=True)
class DiracReport:
    recovers_weights: bool
    theta_theta_zero: bool
    agrees_with_isotropy: bool
    mixed_zero: bool


@dataclass(frozen=True)
class ExactnessReport:
    lambda_residual: float
    omega_residual: float
    odd_residual: float
    constraint_drift: float
