import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from superfg.quantum.qword import QuantumTorus, QWord, q_power
from superfg.quantum.series import DEFAULT_ORDER, QSeries
from superfg.seeds.dataclasses import ExchangeData
from superfg.seeds.mutation import mutate_epsilon
from superfg.sfrat import SFRat
from superfg.sfrat.laurent import LaurentPoly
from superfg.superseed.dataclasses import SuperSeed
from superfg.superseed.mutation import mutate_weights

logger = logging.getLogger(__name__)

Q_MODES = ("consistent", "braided")


@dataclass(frozen=True, eq=False)
class QuantumSeed:
    """Current exchange data and weights, with each current generator expanded in the initial torus."""

    torus: QuantumTorus
    exchange: ExchangeData
    W: np.ndarray
    x: Tuple[QSeries, ...]
    theta: Tuple[QSeries, ...]
    order: int = DEFAULT_ORDER

    @classmethod
    def initial(cls, s: SuperSeed, order: int = DEFAULT_ORDER) -> "QuantumSeed":
        torus = QuantumTorus.from_super_seed(s)
        x = tuple(QSeries(QWord.x(torus, i)) for i in range(torus.n))
        theta = tuple(QSeries(QWord.theta(torus, a)) for a in range(torus.r))
        return cls(torus, s.exchange, s.W, x, theta, order)

    def generators(self) -> List[QSeries]:
        return list(self.x) + list(self.theta)

    def precision(self) -> float:
        return min((g.prec for g in self.generators()), default=float("inf"))


@dataclass
class RelationReport:
    ok: bool
    checked: int
    failures: List[Tuple[str, int, int]] = field(default_factory=list)
    precision: float = float("inf")


def phi_adjoint(
    Z: QSeries,
    Y: QSeries,
    c: int,
    order: int = DEFAULT_ORDER,
    Y_inv: Optional[QSeries] = None,
    check: bool = True,
) -> QSeries:
    """Adjoint action of the compact quantum dilogarithm of Y on Z, where Y Z = q^{2c} Z Y.

    Z * prod_{s=1}^{|c|} (1 + q^{2s-1} Y^{sgn c})^{-sgn c}
    """
    c = int(c)
    if check:
        lhs, rhs = Y * Z, (Z * Y).scale(q_power(2 * c))
        if not lhs.equals_to_precision(rhs):
            raise ValueError(f"Generators do not satisfy Y Z = q^(2c) Z Y for {c=}")
    if c == 0:
        return Z
    base = Y if c > 0 else (Y_inv if Y_inv is not None else Y.inverse(order))
    one = QSeries.one(Z.torus)
    out = Z
    for s in range(1, abs(c) + 1):
        factor = one + base.scale(q_power(2 * s - 1))
        if c > 0:
            factor = factor.inverse(order)
        out = (out * factor).truncate(order)
    return out


def q_mutate(qs: QuantumSeed, k: int, mode: str = "consistent") -> QuantumSeed:
    """Quantum mutation with tropical sign -1: X'_k = X_k^{-1}, X'_i = Ad(X_i; X_k^{-1}, eps_ik)."""
    if mode not in Q_MODES:
        raise ValueError(f"Unknown quantum mutation mode: {mode=}, expected one of {Q_MODES}")
    qs.exchange.check_mutable(k)
    eps = qs.exchange.epsilon
    xk = qs.x[k]
    xk_inv = xk.inverse(qs.order)

    x = []
    for i, xi in enumerate(qs.x):
        if i == k:
            x.append(xk_inv)
        else:
            x.append(phi_adjoint(xi, xk_inv, eps[i, k], qs.order, Y_inv=xk, check=False))
    if mode == "consistent":
        theta = [
            phi_adjoint(t, xk_inv, qs.W[a, k], qs.order, Y_inv=xk, check=False)
            for a, t in enumerate(qs.theta)
        ]
    else:
        theta = list(qs.theta)

    W = mutate_weights(qs.W, eps, k, "consistent")
    logger.debug("q_mutate at %d (%s), precision %s", k, mode, min((g.prec for g in x), default=None))
    return QuantumSeed(qs.torus, mutate_epsilon(qs.exchange, k), W, tuple(x), tuple(theta), qs.order)


def q_mutate_sequence(qs: QuantumSeed, ks, mode: str = "consistent") -> QuantumSeed:
    for k in ks:
        qs = q_mutate(qs, k, mode)
    return qs


def certified(lhs: QSeries, rhs: QSeries) -> bool:
    return lhs.equals_to_precision(rhs, min_prec=min(lhs.min_degree(), rhs.min_degree()))


def relation_check(qs: QuantumSeed) -> RelationReport:
    """Current generators against the current relations, to the retained precision."""
    eps, W = qs.exchange.epsilon, qs.W
    failures = []
    checked = 0
    for i in range(len(qs.x)):
        for j in range(i + 1, len(qs.x)):
            lhs = qs.x[i] * qs.x[j]
            rhs = (qs.x[j] * qs.x[i]).scale(q_power(2 * int(eps[i, j])))
            checked += 1
            if not certified(lhs, rhs):
                failures.append(("XX", i, j))
    for a, t in enumerate(qs.theta):
        for i, xi in enumerate(qs.x):
            lhs = t * xi
            rhs = (xi * t).scale(q_power(2 * int(W[a, i])))
            checked += 1
            if not certified(lhs, rhs):
                failures.append(("thetaX", a, i))
        checked += 1
        if (t * t).terms:
            failures.append(("thetatheta", a, a))
    report = RelationReport(not failures, checked, failures, qs.precision())
    if failures:
        logger.info("%d of %d relations fail: %s", len(failures), checked, failures[:5])
    return report


def _commutative(poly: LaurentPoly, names) -> Dict[Tuple[int, ...], Fraction]:
    unknown = set(poly.variables) - set(names)
    if unknown:
        raise ValueError(f"Expression uses variables outside the torus: {sorted(unknown)}")
    out = {}
    for exps, c in poly.items():
        out[tuple(exps.get(n, 0) for n in names)] = c
    return out


def _times(series: Dict[Tuple[int, ...], Fraction], poly: Dict[Tuple[int, ...], Fraction]):
    out: Dict[Tuple[int, ...], Fraction] = {}
    for a, ca in series.items():
        for b, cb in poly.items():
            key = tuple(x + y for x, y in zip(a, b))
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return out


def matches_classical(series: QSeries, f: SFRat, odd: Tuple[int, ...] = ()) -> bool:
    """q = 1 specialization of the series (odd part `odd`) agrees with f to the retained precision."""
    names = series.torus.x_names
    at_one = {exps: c for (exps, o), c in series.at_q(1).items() if o == tuple(odd)}
    num, den = _commutative(f.num, names), _commutative(f.den, names)
    lo = min(sum(e) for e in den)
    prec = series.prec + lo
    diff = _times(at_one, den)
    for e, c in num.items():
        diff[e] = diff.get(e, Fraction(0)) - c
    return all(c == 0 for e, c in diff.items() if sum(e) <= prec)


def classical_limit_check(qs: QuantumSeed, s: SuperSeed) -> bool:
    """Compare the q = 1 specialization with a classically mutated super seed in the same coordinates."""
    ok = all(matches_classical(xq, xc) for xq, xc in zip(qs.x, s.x))
    for a, (t, p) in enumerate(zip(qs.theta, s.theta_prefactor)):
        ok = ok and matches_classical(t, p, (a,))
    return ok
