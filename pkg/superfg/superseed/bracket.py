import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from tqdm import trange

from superfg.grassmann import ExtElem, sort_with_sign
from superfg.sfrat import SFRat
from superfg.superseed.dataclasses import SuperSeed
from superfg.superseed.mutation import mutate_super
from superfg.utils.linalg_utils import to_fraction
from superfg.utils.misc_utils import SuiteConfig

logger = logging.getLogger(__name__)

GradedElem = ExtElem


def theta_elem(s: SuperSeed, alpha: int, coeff=None) -> GradedElem:
    return ExtElem.gen(s.theta_names[alpha], SFRat.const(1) if coeff is None else coeff)


def even_elem(f: SFRat) -> GradedElem:
    return ExtElem.scalar(f)


def _hat(s: SuperSeed) -> List[List[Fraction]]:
    eh = s.exchange.epsilon_hat()
    return [[to_fraction(eh[i, j]) for j in range(s.n)] for i in range(s.n)]


def poisson_even(a: SFRat, b: SFRat, s: SuperSeed, hat=None) -> SFRat:
    """sum_ij eps_hat_ij D_i a D_j b with D_i = X_i d/dX_i."""
    hat = hat or _hat(s)
    da = [a.euler_derivative(v) for v in s.x_names]
    db = [b.euler_derivative(v) for v in s.x_names]
    total = SFRat.const(0)
    for i in range(s.n):
        if da[i].is_zero():
            continue
        for j in range(s.n):
            if hat[i][j] == 0 or db[j].is_zero():
                continue
            total = total + hat[i][j] * da[i] * db[j]
    return total


def weight_derivative(a: SFRat, weights: Sequence[int], s: SuperSeed) -> SFRat:
    """sum_i w_i D_i a."""
    total = SFRat.const(0)
    for w, v in zip(weights, s.x_names):
        if w:
            total = total + int(w) * a.euler_derivative(v)
    return total


def _check_membership(f: GradedElem, s: SuperSeed):
    odd = set(f.generators()) - set(s.theta_names)
    if odd:
        raise ValueError(f"Odd generators not in the seed: {sorted(odd)}")
    for c in f.terms.values():
        even = set(c.variables) - set(s.x_names) if isinstance(c, SFRat) else set()
        if even:
            raise ValueError(f"Even variables not in the seed: {sorted(even)}")


def bracket(f: GradedElem, g: GradedElem, s: SuperSeed) -> GradedElem:
    """Graded log-canonical bracket.

    {a th_S, b th_T} = [a (w_S . D b) + {a, b} - b (w_T . D a)] th_S th_T,
    where w_S is the sum of the W-rows in S.
    """
    _check_membership(f, s)
    _check_membership(g, s)
    hat = _hat(s)
    index = {name: alpha for alpha, name in enumerate(s.theta_names)}
    out = ExtElem()
    for S, a in f.terms.items():
        a = a if isinstance(a, SFRat) else SFRat.const(a)
        w_S = sum(s.W[index[t]] for t in S) if S else None
        for T, b in g.terms.items():
            if set(S) & set(T):
                continue
            b = b if isinstance(b, SFRat) else SFRat.const(b)
            coeff = poisson_even(a, b, s, hat)
            if S:
                coeff = coeff + a * weight_derivative(b, w_S, s)
            if T:
                w_T = sum(s.W[index[t]] for t in T)
                coeff = coeff - b * weight_derivative(a, w_T, s)
            if coeff.is_zero():
                continue
            sgn, key = sort_with_sign(S + T)
            out = out + ExtElem({key: coeff if sgn > 0 else -coeff})
    return out


def parity(f: GradedElem) -> int:
    degrees = {len(k) % 2 for k in f.terms}
    if len(degrees) > 1:
        raise ValueError("Element is not homogeneous in parity")
    return degrees.pop() if degrees else 0


@dataclass
class BracketReport:
    ok: bool
    checked: int = 0
    failures: List[Tuple[str, int, int, str]] = field(default_factory=list)


def _ratio_text(actual: SFRat, expected: SFRat) -> str:
    if expected.is_zero():
        return f"{actual} vs 0"
    ratio = actual / expected
    return str(ratio.constant_value()) if ratio.is_constant() else repr(ratio)


def check_bracket_preservation(s: SuperSeed, k: int, mode: str = "consistent") -> BracketReport:
    """Primed generators, written in the unprimed coordinates, keep log-canonical form."""
    t = mutate_super(s, k, mode)
    hat_new = _hat(t)
    report = BracketReport(ok=True)
    for i in range(s.n):
        for j in range(i + 1, s.n):
            actual = poisson_even(t.x[i], t.x[j], s)
            expected = hat_new[i][j] * t.x[i] * t.x[j]
            report.checked += 1
            if not actual.equals(expected):
                report.ok = False
                report.failures.append(("XX", i, j, _ratio_text(actual, expected)))
    for alpha in range(s.r):
        theta = theta_elem(s, alpha, t.theta_prefactor[alpha])
        for i in range(s.n):
            lhs = bracket(theta, even_elem(t.x[i]), s)
            actual = lhs.coefficient((s.theta_names[alpha],))
            actual = actual if isinstance(actual, SFRat) else SFRat.const(actual)
            expected = int(t.W[alpha, i]) * t.theta_prefactor[alpha] * t.x[i]
            report.checked += 1
            if not actual.equals(expected):
                report.ok = False
                report.failures.append(("thetaX", alpha, i, _ratio_text(actual, expected)))
    logger.debug("bracket preservation at k=%d (%s): %s", k, mode, report)
    return report


def preservation_suite(
    config: SuiteConfig = SuiteConfig(),
    n_max: int = 4,
    r_max: int = 2,
    max_entry: int = 3,
    mode: str = "consistent",
) -> BracketReport:
    """Bracket preservation under one random mutation of each of n_trials random admissible seeds."""
    rng = config.rng()
    total = BracketReport(ok=True)
    for _ in trange(config.n_trials, disable=not config.progress, desc="bracket"):
        s = SuperSeed.random(rng, int(rng.integers(2, n_max + 1)), int(rng.integers(1, r_max + 1)), max_entry)
        k = int(rng.integers(0, s.n))
        report = check_bracket_preservation(s, k, mode)
        total.checked += report.checked
        if not report.ok:
            total.ok = False
            total.failures.extend(report.failures)
    logger.info("bracket suite (%s): %d relations, %d failures", mode, total.checked, len(total.failures))
    return total
