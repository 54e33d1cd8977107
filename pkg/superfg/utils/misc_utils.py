import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Tuple

import numpy as np


_DIGITS = re.compile(r"(\d+)")


def natural_sort_key(name: str) -> Tuple[Any, ...]:
    """Sort key ordering x2 before x10."""
    parts = _DIGITS.split(name)
    return tuple(int(p) if p.isdigit() else p for p in parts)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def pos(x):
    return x if x > 0 else 0


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x)
    raise ValueError(f"Invalid type for exact coefficient: {type(x)=}")


@dataclass(frozen=True)
class SuiteConfig:
    n_trials: int = 50
    rng_seed: int = 0
    progress: bool = False

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.rng_seed)


def random_exchange_matrix(
    rng: np.random.Generator, n: int, max_entry: int = 3
) -> np.ndarray:
    """Random skew-symmetric integer matrix with entries in [-max_entry, max_entry]."""
    eps = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(i + 1, n):
            eps[i, j] = rng.integers(-max_entry, max_entry + 1)
            eps[j, i] = -eps[i, j]
    return eps


def random_positive_point(
    rng: np.random.Generator, names: List[str], low: float = -1.0, high: float = 1.0
) -> dict:
    """Log-uniform positive values in [e^low, e^high]."""
    return {name: float(np.exp(rng.uniform(low, high))) for name in names}


def random_rational_matrix(
    rng: np.random.Generator,
    rows: int,
    cols: int,
    max_num: int = 9,
    max_den: Optional[int] = 4,
) -> List[List[Fraction]]:
    out = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            num = int(rng.integers(-max_num, max_num + 1))
            den = int(rng.integers(1, max_den + 1)) if max_den else 1
            row.append(Fraction(num, den))
        out.append(row)
    return out
