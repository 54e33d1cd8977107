"""Truncated expansions in the quantum torus, graded by total X-degree."""
import logging
import math
from dataclasses import dataclass
from typing import Dict, Optional

from superfg.quantum.qword import Key, QuantumTorus, QWord
from superfg.sfrat.laurent import LaurentPoly

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 8


def degree(key: Key) -> int:
    return sum(key[0])


@dataclass(frozen=True, eq=False)
class QSeries:
    """A QWord known exactly in every degree up to `prec` (math.inf for exact words)."""

    word: QWord
    prec: float = math.inf

    def __post_init__(self):
        if self.prec != math.inf:
            kept = {k: c for k, c in self.word.terms.items() if degree(k) <= self.prec}
            if len(kept) != len(self.word.terms):
                object.__setattr__(self, "word", QWord(self.word.torus, kept))

    @classmethod
    def exact(cls, word: QWord) -> "QSeries":
        return cls(word)

    @classmethod
    def one(cls, torus: QuantumTorus) -> "QSeries":
        return cls(QWord.one(torus))

    @property
    def torus(self) -> QuantumTorus:
        return self.word.torus

    @property
    def terms(self) -> Dict[Key, LaurentPoly]:
        return self.word.terms

    def is_exact(self) -> bool:
        return self.prec == math.inf

    def min_degree(self) -> float:
        """Lowest degree present; prec + 1 for a series that is zero to precision."""
        if not self.terms:
            return self.prec + 1
        return min(degree(k) for k in self.terms)

    def lowest_part(self) -> QWord:
        d = self.min_degree()
        return QWord(self.torus, {k: c for k, c in self.terms.items() if degree(k) == d})

    def truncate(self, order: float) -> "QSeries":
        return QSeries(self.word, min(self.prec, order))

    def __add__(self, other: "QSeries") -> "QSeries":
        if isinstance(other, QWord):
            other = QSeries(other)
        return QSeries(self.word + other.word, min(self.prec, other.prec))

    def __neg__(self) -> "QSeries":
        return QSeries(-self.word, self.prec)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def scale(self, c) -> "QSeries":
        return QSeries(self.word.scale(c), self.prec)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, QWord):
            other = QSeries(other)
        if not isinstance(other, QSeries):
            return self.scale(other)
        prec = min(self.prec + other.min_degree(), other.prec + self.min_degree())
        if prec == math.inf:
            return QSeries(self.word * other.word)
        # drop products that land above the known precision before multiplying
        lo_a, lo_b = self.min_degree(), other.min_degree()
        a = QWord(self.torus, {k: c for k, c in self.terms.items() if degree(k) + lo_b <= prec})
        b = QWord(self.torus, {k: c for k, c in other.terms.items() if degree(k) + lo_a <= prec})
        return QSeries(a * b, prec)

    def inverse(self, order: int = DEFAULT_ORDER) -> "QSeries":
        """Inverse through the lowest-degree part, which must be a single even unit term."""
        low = self.lowest_part()
        if len(low.terms) != 1:
            raise ValueError(f"Lowest-degree part is not a single term: {low}")
        ((exps, odd), coeff), = low.terms.items()
        if odd or not coeff.is_monomial():
            raise ValueError(f"Lowest-degree part is not a unit: {low}")
        d0 = sum(exps)

        u_inv = QWord.monomial(self.torus, [-e for e in exps])
        unit = (low * u_inv).terms[((0,) * self.torus.n, ())]
        u_inv = u_inv.scale(unit ** -1)
        if len(self.terms) == 1 and self.is_exact():
            return QSeries(u_inv)

        prec = min(order, self.prec - 2 * d0)
        # self = u (1 + t) with t of degree >= 1, so self^{-1} = sum_j (-t)^j u^{-1}
        t_prec = prec + d0
        t = (QSeries(u_inv) * (self - QSeries(low))).truncate(t_prec)
        total = QSeries.one(self.torus).truncate(t_prec)
        power = total
        for _ in range(max(int(t_prec), 0)):
            power = -(power * t).truncate(t_prec)
            if not power.terms:
                break
            total = total + power
        result = (total * QSeries(u_inv)).truncate(prec)
        logger.debug("inverse to precision %s with %d terms", prec, len(result.terms))
        return result

    def equals_to_precision(self, other: "QSeries", min_prec: Optional[float] = None) -> bool:
        """All retained coefficients agree; False when the precision is below min_prec."""
        prec = min(self.prec, other.prec)
        if min_prec is not None and prec < min_prec:
            logger.info("precision %s too small to certify (need %s)", prec, min_prec)
            return False
        return (self - other).truncate(prec).word.is_zero()

    def at_q(self, value=1):
        return self.word.at_q(value)

    def __repr__(self):
        return f"QSeries({self.word!r}, prec={self.prec})"
