import cmath
import logging
import math
from dataclasses import dataclass
from typing import List, Tuple, Union

logger = logging.getLogger(__name__)

Number = Union[float, complex]


@dataclass
class HexKinematics:
    u: float
    v: float
    w: float
    delta_kin: float
    x_plus: Number
    x_minus: Number
    # (x_j^+, x_j^-) = (u_j / x^+, u_j / x^-) for j = 0, 1, 2
    x_i_pm: List[Tuple[Number, Number]]
    y: List[Number]

    @property
    def uvw(self) -> Tuple[float, float, float]:
        return self.u, self.v, self.w

    @property
    def is_complex(self) -> bool:
        return self.delta_kin < 0


def discriminant(u: float, v: float, w: float) -> float:
    return (1 - u - v - w) ** 2 - 4 * u * v * w


def kinematics(u: float, v: float, w: float) -> HexKinematics:
    """x^+- are the roots of uvw x^2 - (u + v + w - 1) x + 1; for delta_kin < 0 a conjugate pair."""
    u, v, w = float(u), float(v), float(w)
    if u * v * w == 0:
        raise ValueError(f"Kinematics need uvw != 0: {u=}, {v=}, {w=}")
    delta = discriminant(u, v, w)
    if delta >= 0:
        root = math.sqrt(delta)
    else:
        root = cmath.sqrt(delta)
    x_plus = (u + v + w - 1 + root) / (2 * u * v * w)
    x_minus = (u + v + w - 1 - root) / (2 * u * v * w)
    pairs = [(uj / x_plus, uj / x_minus) for uj in (u, v, w)]
    y = [xm / xp for xp, xm in pairs]
    logger.debug("kinematics at (%g, %g, %g): delta=%g, x+=%s, x-=%s", u, v, w, delta, x_plus, x_minus)
    return HexKinematics(u, v, w, delta, x_plus, x_minus, pairs, y)


def kinematics_with_y(u: float, v: float, w: float, y) -> HexKinematics:
    """Kinematics from (u, v, w) and independently given positive y-letters.

    Each j uses its own root pair with x^+ x^- = 1/(uvw) and x^+ / x^- = y_j,
    which reproduces `kinematics` when y is the kinematic value and x^+- > 0.
    """
    u, v, w = float(u), float(v), float(w)
    y = [float(t) for t in y]
    if len(y) != 3 or any(t <= 0 for t in y) or min(u, v, w) <= 0:
        raise ValueError(f"Need positive (u, v, w) and three positive y-letters: {u=}, {v=}, {w=}, {y=}")
    uvw = u * v * w
    pairs = []
    for uj, yj in zip((u, v, w), y):
        xp = math.sqrt(yj / uvw)
        xm = 1 / math.sqrt(yj * uvw)
        pairs.append((uj / xp, uj / xm))
    delta = discriminant(u, v, w)
    xp0 = math.sqrt(y[0] / uvw)
    return HexKinematics(u, v, w, delta, xp0, 1 / (uvw * xp0), pairs, y)
