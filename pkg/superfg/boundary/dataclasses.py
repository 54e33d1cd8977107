from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from superfg.grassmann import ExtElem
from superfg.sfrat import SFRat

Move = Tuple[int, int, SFRat]


def as_sfrat(x) -> SFRat:
    if isinstance(x, SFRat):
        return x
    if isinstance(x, (int, Fraction)):
        return SFRat.const(x)
    raise ValueError(f"Invalid type for a matrix entry: {type(x)=}")


@dataclass(frozen=True, eq=False)
class BoundaryMatrix:
    """r x f matrix over SFRat; gauge_log records the elementary column moves applied."""

    r: int
    f: int
    entries: Tuple[Tuple[SFRat, ...], ...]
    gauge_log: Tuple[Move, ...] = ()

    def __post_init__(self):
        entries = tuple(tuple(as_sfrat(x) for x in row) for row in self.entries)
        if len(entries) != self.r or any(len(row) != self.f for row in entries):
            raise ValueError(f"Entries do not form an {self.r}x{self.f} matrix")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "gauge_log", tuple(self.gauge_log))

    @classmethod
    def normalized(cls, r: int, f: int) -> "BoundaryMatrix":
        """C_star = (1_r | 0)."""
        if r > f:
            raise ValueError(f"Need r <= f: {r=}, {f=}")
        return cls(r, f, [[int(i == j) for j in range(f)] for i in range(r)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "BoundaryMatrix":
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    def rows(self) -> List[List[SFRat]]:
        return [list(row) for row in self.entries]

    def columns(self, cols: Sequence[int]) -> List[List[SFRat]]:
        self.check_labels(cols)
        return [[row[j] for j in cols] for row in self.entries]

    def check_labels(self, cols: Sequence[int]):
        bad = [j for j in cols if not 0 <= j < self.f]
        if bad:
            raise ValueError(f"Column label out of range: {bad=}, f={self.f}")

    def __eq__(self, other):
        if not isinstance(other, BoundaryMatrix):
            return NotImplemented
        return (self.r, self.f) == (other.r, other.f) and all(
            a.equals(b) for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    __hash__ = None


@dataclass
class OddSupport:
    B: Tuple[int, ...]
    cofactors: Tuple[SFRat, ...]


@dataclass
class BCFWReport:
    lhs: ExtElem
    rhs: ExtElem
    equal: bool
    support: OddSupport
    null_vector: bool = True
