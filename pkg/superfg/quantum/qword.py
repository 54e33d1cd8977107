"""Normal-ordered words in the quantum super torus.

Relations: X_i X_j = q^{2 eps_ij} X_j X_i, theta_a X_i = q^{2 W_ai} X_i theta_a,
theta_a theta_b = -theta_b theta_a. A normal-ordered term is X_1^{e_1}...X_n^{e_n}
followed by the odd generators in ascending order.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Sequence, Tuple, Union

import numpy as np

from superfg.seeds.dataclasses import default_names
from superfg.sfrat.laurent import LaurentPoly
from superfg.superseed.dataclasses import SuperSeed
from superfg.utils.linalg_utils import int_array, permutation_sign

logger = logging.getLogger(__name__)

Key = Tuple[Tuple[int, ...], Tuple[int, ...]]
Q = "q"


def q_power(m: int, coeff=1) -> LaurentPoly:
    return LaurentPoly.monomial({Q: m}, coeff) if m else LaurentPoly.constant(coeff)


@dataclass(frozen=True, eq=False)
class QuantumTorus:
    epsilon_hat: np.ndarray
    W: np.ndarray
    x_names: Tuple[str, ...] = ()
    theta_names: Tuple[str, ...] = ()

    def __post_init__(self):
        eps = int_array(self.epsilon_hat)
        n = eps.shape[0]
        W = int_array(self.W).reshape(-1, n) if np.size(self.W) else np.zeros((0, n), dtype=int)
        if eps.shape != (n, n) or not (eps == -eps.T).all():
            raise ValueError(f"Quantum torus needs a skew-symmetric integer matrix: {eps.tolist()}")
        object.__setattr__(self, "epsilon_hat", eps)
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "x_names", tuple(self.x_names) or tuple(default_names("x", n)))
        object.__setattr__(
            self, "theta_names", tuple(self.theta_names) or tuple(default_names("theta", W.shape[0]))
        )
        # plain lists for the inner product loop
        object.__setattr__(self, "_eps", eps.tolist())
        object.__setattr__(self, "_W", W.tolist())

    @classmethod
    def from_super_seed(cls, s: SuperSeed) -> "QuantumTorus":
        """Requires d = 1; non-simply-laced data would need fractional q-powers."""
        eps_hat = s.exchange.epsilon_hat()
        if any(d != 1 for d in s.exchange.d) or any(not x.is_integer for x in eps_hat):
            raise ValueError(f"Quantum torus needs d = 1: d={s.exchange.d.tolist()}")
        return cls(s.exchange.epsilon, s.W, s.x_names, s.theta_names)

    @property
    def n(self) -> int:
        return self.epsilon_hat.shape[0]

    @property
    def r(self) -> int:
        return self.W.shape[0]

    def reorder_exponent(self, a: Sequence[int], odd: Sequence[int], b: Sequence[int]) -> int:
        """q-exponent picked up normal-ordering (X^a theta_S)(X^b)."""
        eps, W = self._eps, self._W
        total = 0
        for j, bj in enumerate(b):
            if not bj:
                continue
            for i in range(j + 1, len(a)):
                if a[i]:
                    total += eps[i][j] * a[i] * bj
            for alpha in odd:
                total += W[alpha][j] * bj
        return 2 * total

    def index(self, name: str) -> Tuple[str, int]:
        if name in self.x_names:
            return "x", self.x_names.index(name)
        if name in self.theta_names:
            return "theta", self.theta_names.index(name)
        raise ValueError(f"Unknown generator: {name=}")


@dataclass(frozen=True, eq=False)
class QWord:
    """Finite sum of normal-ordered terms with Laurent-polynomial coefficients in q."""

    torus: QuantumTorus
    terms: Dict[Key, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: c for k, c in self.terms.items() if not c.is_zero()})

    @classmethod
    def one(cls, torus: QuantumTorus, coeff=1) -> "QWord":
        return cls(torus, {((0,) * torus.n, ()): LaurentPoly.constant(coeff)})

    @classmethod
    def monomial(cls, torus: QuantumTorus, exps: Sequence[int], odd: Sequence[int] = (), coeff=None) -> "QWord":
        sign = 1
        if odd:
            if len(set(odd)) != len(odd):
                return cls(torus)
            order = sorted(range(len(odd)), key=lambda i: odd[i])
            sign = permutation_sign(order)
            odd = tuple(sorted(odd))
        c = coeff if coeff is not None else LaurentPoly.constant(1)
        return cls(torus, {(tuple(int(e) for e in exps), tuple(odd)): c.scale(sign)})

    @classmethod
    def x(cls, torus: QuantumTorus, i: int, power: int = 1) -> "QWord":
        exps = [0] * torus.n
        exps[i] = power
        return cls.monomial(torus, exps)

    @classmethod
    def theta(cls, torus: QuantumTorus, alpha: int) -> "QWord":
        return cls.monomial(torus, [0] * torus.n, (alpha,))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "QWord") -> "QWord":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return QWord(self.torus, terms)

    def __neg__(self) -> "QWord":
        return QWord(self.torus, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "QWord") -> "QWord":
        return self + (-other)

    def scale(self, c: Union[int, Fraction, LaurentPoly]) -> "QWord":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.constant(c)
        return QWord(self.torus, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "QWord") -> "QWord":
        if not isinstance(other, QWord):
            return self.scale(other)
        out: Dict[Key, LaurentPoly] = {}
        for (a, S), ca in self.terms.items():
            for (b, T), cb in other.terms.items():
                if set(S) & set(T):
                    continue
                shift = self.torus.reorder_exponent(a, S, b)
                merged = S + T
                sign = permutation_sign(sorted(range(len(merged)), key=lambda i: merged[i]))
                key = (tuple(x + y for x, y in zip(a, b)), tuple(sorted(merged)))
                c = ca * cb
                if shift:
                    c = c.shift({Q: shift})
                if sign < 0:
                    c = -c
                out[key] = out[key] + c if key in out else c
        return QWord(self.torus, out)

    def __eq__(self, other):
        if not isinstance(other, QWord):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def at_q(self, value=1) -> Dict[Key, Fraction]:
        """Coefficients with q specialized; keys keep the normal order."""
        out: Dict[Key, Fraction] = {}
        for k, c in self.terms.items():
            v = c.evaluate({Q: Fraction(value)}) if c.variables else c.constant_value()
            if v:
                out[k] = out.get(k, Fraction(0)) + v
        return {k: v for k, v in out.items() if v}

    def __repr__(self):
        parts = []
        for (exps, odd), c in sorted(self.terms.items()):
            gens = [f"{self.torus.x_names[i]}^{e}" for i, e in enumerate(exps) if e]
            gens += [self.torus.theta_names[a] for a in odd]
            parts.append(f"({c})*{'*'.join(gens) or '1'}")
        return f"QWord({' + '.join(parts) or '0'})"


def normal_form(torus: QuantumTorus, word: Sequence[Tuple[str, int]]) -> QWord:
    """Normal-order a product of generators given as (name, power) pairs."""
    out = QWord.one(torus)
    for name, power in word:
        kind, i = torus.index(name)
        if kind == "x":
            out = out * QWord.x(torus, i, int(power))
            continue
        if power < 0:
            raise ValueError(f"Odd generators are not invertible: {name=}, {power=}")
        for _ in range(power):
            out = out * QWord.theta(torus, i)
    logger.debug("normal form of %s: %s", word, out)
    return out
