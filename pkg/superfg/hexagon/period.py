"""Two-loop hexagon period V + V_tilde in a flag chart, and its Chen-integral refinement."""
import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

from superfg.hexagon.gfunctions import g_function
from superfg.hexagon.kinematics import HexKinematics, kinematics, kinematics_with_y
from superfg.hexagon.polylog import ell1_diff, ell_n, polylog

logger = logging.getLogger(__name__)

N_LEGS = 6
# |delta_kin| below this counts as the coincident-root locus
LOCUS_TOL = 1e-14

Number = Union[float, complex]


@dataclass(frozen=True)
class FlagChart:
    """Six minor ratios of the chart anchored at the odd chart O_anchor = {anchor, ..., anchor + 3}."""

    f_o: Tuple[float, float, float]
    f_e: Tuple[float, float, float]
    anchor: int = 0

    def __post_init__(self):
        object.__setattr__(self, "f_o", tuple(float(f) for f in self.f_o))
        object.__setattr__(self, "f_e", tuple(float(f) for f in self.f_e))
        if len(self.f_o) != 3 or len(self.f_e) != 3:
            raise ValueError(f"Need three odd and three even ratios: {self.f_o=}, {self.f_e=}")
        if min(self.f_o + self.f_e) <= 0:
            raise ValueError(f"Minor ratios must be positive: {self.f_o=}, {self.f_e=}")

    @classmethod
    def from_uvw(cls, u, v, w, y, anchor: int = 0) -> "FlagChart":
        uvw = (float(u), float(v), float(w))
        if not all(0 < t < 1 for t in uvw):
            raise ValueError(f"Cross-ratios of a flag chart lie in (0, 1): {uvw=}")
        return cls(tuple(y), tuple(t / (1 - t) for t in uvw), anchor)

    @property
    def odd_chart(self) -> Tuple[int, ...]:
        return tuple((self.anchor + j) % N_LEGS for j in range(4))

    @property
    def uvw(self) -> Tuple[float, float, float]:
        return tuple(f / (1 + f) for f in self.f_e)

    @property
    def y(self) -> Tuple[float, float, float]:
        return self.f_o

    @property
    def letters(self) -> List[float]:
        """Ordered letters (f_o, f_e) of the Chen representation."""
        return list(self.f_o) + list(self.f_e)

    def shifted(self, k: int = 1) -> "FlagChart":
        """The same boundary data written in the chart anchored at O_{anchor + k}."""
        r = k % 3
        return FlagChart(self.f_o[r:] + self.f_o[:r], self.f_e[r:] + self.f_e[:r], self.anchor + k)


@dataclass
class PeriodRecord:
    V: float
    V_tilde: float
    total: float
    imag: float = 0.0
    J: Number = 0.0
    L4_sum: Number = 0.0
    on_locus: bool = False
    kinematics: Optional[HexKinematics] = field(default=None, repr=False)

    def to_json(self):
        return {
            "V": self.V,
            "V_tilde": self.V_tilde,
            "total": self.total,
            "imag": self.imag,
            "on_locus": self.on_locus,
        }


def _log(z: Number) -> Number:
    return cmath.log(z) if isinstance(z, complex) else math.log(z)


def L4(x_plus: Number, x_minus: Number) -> Number:
    r = _log(x_plus / x_minus)
    if r == 0:
        return ell_n(4, x_plus) + ell_n(4, x_minus)
    total = r ** 4 / 8
    for m in range(4):
        double_factorial = 2 ** m * math.factorial(m)
        total += (-1) ** m / double_factorial * r ** m * (ell_n(4 - m, x_plus) + ell_n(4 - m, x_minus))
    return total


def V(u: float, v: float, w: float) -> float:
    li4 = sum(polylog(4, 1 - 1 / t) for t in (u, v, w))
    li2 = sum(polylog(2, 1 - 1 / t) for t in (u, v, w))
    return -0.5 * li4 - li2 ** 2 / 8


def J(pairs: Sequence[Tuple[Number, Number]]) -> Number:
    return sum(ell1_diff(xp, xm) for xp, xm in pairs)


def V_tilde(kin: HexKinematics, on_locus: bool = False) -> Tuple[Number, Number, Number]:
    """(V_tilde, J, sum of L4); J is 0 on the coincident-root locus."""
    l4 = sum(L4(xp, xm) for xp, xm in kin.x_i_pm)
    j = 0.0 if on_locus else J(kin.x_i_pm)
    value = l4 + j ** 4 / 24 + math.pi ** 2 / 12 * j ** 2 + math.pi ** 4 / 72
    return value, j, l4


def hexagon_period(
    chart: Union[FlagChart, Sequence[float]],
    y: Optional[Sequence[float]] = None,
) -> PeriodRecord:
    """Period from a FlagChart, or from (u, v, w) with optional independent y-letters."""
    if isinstance(chart, FlagChart):
        u, v, w = chart.uvw
        y = chart.y
    else:
        u, v, w = (float(t) for t in chart)
    kin = kinematics(u, v, w) if y is None else kinematics_with_y(u, v, w, y)
    on_locus = abs(kin.delta_kin) <= LOCUS_TOL
    v_part = V(u, v, w)
    vt, j, l4 = V_tilde(kin, on_locus)
    total = v_part + vt
    record = PeriodRecord(
        V=v_part,
        V_tilde=complex(vt).real,
        total=complex(total).real,
        imag=complex(total).imag,
        J=j,
        L4_sum=l4,
        on_locus=on_locus,
        kinematics=kin,
    )
    logger.debug("hexagon period at (%g, %g, %g): %s", u, v, w, record)
    return record


def chen_period(chart: FlagChart) -> complex:
    """G(1/f_1, ..., 1/f_6; 1) over the ordered letters of the chart."""
    return g_function([1 / f for f in chart.letters])
