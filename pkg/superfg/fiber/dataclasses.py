from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from superfg.sfrat import SFRat
from superfg.utils.linalg_utils import int_array

# polynomial in named letters with SFRat coefficients, keyed by exponent vectors
LetterPoly = Dict[Tuple[int, ...], SFRat]
Point2 = Tuple[int, int]


@dataclass(frozen=True)
class TransferWeight:
    """prod X_i^{B_i} prod_k (1 + X_k^{sigma_k})^{A_k}."""

    B_exponents: Dict[str, int] = field(default_factory=dict)
    A_exponents: Dict[str, int] = field(default_factory=dict)
    signs: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        bad = {k: s for k, s in self.signs.items() if s not in (1, -1)}
        if bad:
            raise ValueError(f"Transfer signs must be +1 or -1: {bad=}")
        missing = [k for k in self.A_exponents if k not in self.signs]
        if missing:
            raise ValueError(f"No sign for pivot letters: {missing=}")

    def to_sfrat(self) -> SFRat:
        out = SFRat.const(1)
        for name, b in self.B_exponents.items():
            if b:
                out = out * SFRat.var(name) ** int(b)
        for name, a in self.A_exponents.items():
            if a:
                out = out * (1 + SFRat.var(name) ** self.signs[name]) ** int(a)
        return out


@dataclass(frozen=True, eq=False)
class VerticalSystem:
    """Binomial relations prod_j u_j^{M_bj} = c_b and Laurent relations sum_p kappa_p u^p = 0."""

    letters: Tuple[str, ...]
    binomials: np.ndarray
    units: Tuple[SFRat, ...]
    laurents: Tuple[LetterPoly, ...]

    def __post_init__(self):
        m = len(self.letters)
        M = int_array(self.binomials).reshape(-1, m) if np.size(self.binomials) else np.zeros((0, m), dtype=int)
        object.__setattr__(self, "letters", tuple(self.letters))
        object.__setattr__(self, "binomials", M)
        object.__setattr__(self, "units", tuple(self.units))
        object.__setattr__(self, "laurents", tuple(dict(p) for p in self.laurents))
        if len(self.units) != M.shape[0]:
            raise ValueError(f"Need one unit per binomial: {M.shape[0]=}, {len(self.units)=}")
        for p in self.laurents:
            if any(len(e) != m for e in p):
                raise ValueError(f"Laurent exponents must have length {m}")


@dataclass
class LetterChange:
    """Each original letter as unit * (free letters)^exponents."""

    free_letters: Tuple[str, ...]
    units: Tuple[SFRat, ...]
    exponents: np.ndarray
    smith_coordinates: bool = False


@dataclass
class NewtonReport:
    polygon: List[Point2]
    interior_count: int
    boundary_count: int
    double_area: int
    pick_check: bool

    @property
    def genus(self) -> int:
        return self.interior_count


@dataclass
class FiberCurve:
    P: Dict[Point2, SFRat]
    variables: Tuple[str, str]
    newton: List[Point2]
    genus: int
    letter_change: Optional[LetterChange] = None

    @property
    def sf_flag(self) -> bool:
        return all(c.sf_flag for c in self.P.values())


@dataclass
class ResidueResult:
    sign: int
    remaining: List[Optional[SFRat]]
    poles: List[int]
