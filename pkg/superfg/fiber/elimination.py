"""Eliminate the vertical letters down to one primitive polynomial in two free letters."""
import logging
from typing import Dict, Sequence, Tuple

import numpy as np
import sympy

from superfg.fiber.dataclasses import FiberCurve, LetterChange, LetterPoly, VerticalSystem
from superfg.fiber.newton import newton_genus
from superfg.fiber.snf import is_unimodular, rank_of, smith_normal_form
from superfg.sfrat import SFRat
from superfg.sfrat.io import from_sympy, to_sympy

logger = logging.getLogger(__name__)


def solve_binomials(sys: VerticalSystem) -> LetterChange:
    """Write every letter as a unit times a monomial in the free letters.

    Free letters are original letters (non-pivot columns of the row-reduced
    binomial matrix) when their kernel block is unimodular, Smith coordinates otherwise.
    """
    M = sys.binomials
    m = len(sys.letters)
    U, D, S = smith_normal_form(M)
    r = rank_of(D)

    roots = []
    for i in range(M.shape[0]):
        rhs = SFRat.const(1)
        for b, c in enumerate(sys.units):
            if U[i, b]:
                rhs = rhs * c ** int(U[i, b])
        if i >= r:
            if not rhs.equals(1):
                raise ValueError(f"Inconsistent binomials: relation {i} forces {rhs} = 1")
            continue
        if D[i, i] != 1:
            raise ValueError(f"Elementary divisor {D[i, i]} has no subtraction-free root")
        roots.append(rhs)

    units = []
    for j in range(m):
        u = SFRat.const(1)
        for l in range(r):
            if S[j, l]:
                u = u * roots[l] ** int(S[j, l])
        units.append(u)
    exponents = np.array(S[:, r:], dtype=int).reshape(m, m - r)

    pivots = sympy.Matrix(M.tolist()).rref()[1] if M.shape[0] else ()
    free = [j for j in range(m) if j not in pivots]
    K = exponents[free, :]
    if len(free) == m - r and is_unimodular(K):
        K_inv = np.array(sympy.Matrix(K.tolist()).inv().tolist(), dtype=int)
        new_exps = exponents @ K_inv
        new_units = []
        for j in range(m):
            u = units[j]
            for f, e in zip(free, new_exps[j]):
                if e:
                    u = u * units[f] ** int(-e)
            new_units.append(u)
        change = LetterChange(tuple(sys.letters[f] for f in free), tuple(new_units), new_exps)
    else:
        names = tuple(f"s{l + 1}" for l in range(m - r))
        change = LetterChange(names, tuple(units), exponents, smith_coordinates=True)
    logger.debug("binomial solve: rank %d, free letters %s", r, change.free_letters)
    return change


def substitute(p: LetterPoly, change: LetterChange) -> LetterPoly:
    out: LetterPoly = {}
    for exps, kappa in p.items():
        coeff = kappa
        key = np.zeros(len(change.free_letters), dtype=int)
        for j, e in enumerate(exps):
            if e:
                coeff = coeff * change.units[j] ** int(e)
                key = key + int(e) * change.exponents[j]
        key = tuple(int(x) for x in key)
        out[key] = out[key] + coeff if key in out else coeff
    return {k: c for k, c in out.items() if not c.is_zero()}


def _nonpositive(c: SFRat) -> bool:
    return all(v <= 0 for v in c.num.terms.values())


def saturate(p: LetterPoly) -> LetterPoly:
    """Divide by the greatest common monomial and by the coefficient content."""
    if not p:
        raise ValueError("Elimination produced the zero polynomial")
    dim = len(next(iter(p)))
    mins = [min(e[i] for e in p) for i in range(dim)]
    p = {tuple(x - lo for x, lo in zip(e, mins)): c for e, c in p.items()}

    coeffs = list(p.values())
    if all(_nonpositive(c) for c in coeffs):
        p = {e: -c for e, c in p.items()}
        coeffs = list(p.values())
    exprs = [sympy.together(to_sympy(c)) for c in coeffs]
    nums, dens = zip(*(sympy.fraction(e) for e in exprs))
    content = sympy.gcd_list(list(nums)) / sympy.lcm_list(list(dens))
    if content != 1:
        reduced = {e: from_sympy(sympy.cancel(to_sympy(c) / content)) for e, c in p.items()}
        if all(c.sf_flag for c in reduced.values()) or not all(c.sf_flag for c in coeffs):
            p = reduced
        else:
            logger.debug("kept coefficient content %s to preserve subtraction-freeness", content)
    return p


def to_sympy_poly(p: LetterPoly, symbols: Sequence[sympy.Symbol]):
    expr = sympy.Integer(0)
    for exps, c in p.items():
        term = to_sympy(c)
        for s, e in zip(symbols, exps):
            term = term * s ** e
        expr += term
    return expr


def from_sympy_expr(expr, symbols: Sequence[sympy.Symbol]) -> LetterPoly:
    """Collect an expression Laurent in `symbols` by monomials; coefficients may be rational in the rest."""
    out: Dict[Tuple[int, ...], object] = {}
    for term in sympy.Add.make_args(sympy.expand(expr)):
        coeff, rest = term.as_independent(*symbols, as_Add=False)
        powers = {b: e for b, e in rest.as_powers_dict().items() if b != 1}
        if any(b not in symbols or not sympy.sympify(e).is_Integer for b, e in powers.items()):
            raise ValueError(f"Not a Laurent monomial in the letters: {rest}")
        key = tuple(int(powers.get(s, 0)) for s in symbols)
        out[key] = out.get(key, 0) + coeff
    out = {k: sympy.cancel(c) for k, c in out.items()}
    return {k: from_sympy(c) for k, c in out.items() if c != 0}


def _resultant(polys: Sequence[LetterPoly], names: Sequence[str]) -> Tuple[LetterPoly, Tuple[str, str]]:
    """Eliminate the free letter shared by both relations with a resultant."""
    used = [{i for e in p for i, x in enumerate(e) if x} for p in polys]
    shared = sorted(used[0] & used[1])
    if not shared:
        raise ValueError(f"Relations share no letter to eliminate: {names=}")
    aux = shared[-1]
    keep = [i for i in range(len(names)) if i != aux]
    symbols = [sympy.Symbol(n) for n in names]
    cleared = []
    for p in polys:
        mins = [min(e[i] for e in p) for i in range(len(names))]
        p = {tuple(x - lo for x, lo in zip(e, mins)): c for e, c in p.items()}
        cleared.append(to_sympy_poly(p, symbols))
    res = sympy.resultant(cleared[0], cleared[1], symbols[aux])
    logger.debug("resultant in %s: %s", names[aux], res)
    return from_sympy_expr(res, [symbols[i] for i in keep]), (names[keep[0]], names[keep[1]])


def eliminate(sys: VerticalSystem) -> FiberCurve:
    change = solve_binomials(sys)
    n_free = len(change.free_letters)
    relations = [substitute(p, change) for p in sys.laurents]
    if n_free == 2 and len(relations) == 1:
        P, variables = relations[0], change.free_letters
    elif n_free == 3 and len(relations) == 2:
        P, variables = _resultant(relations, change.free_letters)
    else:
        raise ValueError(
            f"Unsupported elimination shape: {n_free} free letters, {len(relations)} Laurent relations"
        )
    P = saturate(P)
    report = newton_genus(list(P))
    curve = FiberCurve(P, tuple(variables), report.polygon, report.genus, change)
    logger.info("fiber curve in %s with %d terms, genus %d", variables, len(P), curve.genus)
    return curve


def reparametrize(curve: FiberCurve, G) -> FiberCurve:
    """Unimodular change of the two free letters acting on exponent vectors by p -> G p."""
    G = np.asarray(G, dtype=int)
    if G.shape != (2, 2) or not is_unimodular(G):
        raise ValueError(f"Reparametrization must be unimodular: {G.tolist()}")
    moved = {}
    for p, c in curve.P.items():
        q = tuple(int(x) for x in G @ np.array(p))
        moved[q] = c
    P = saturate(moved)
    report = newton_genus(list(P))
    return FiberCurve(P, curve.variables, report.polygon, report.genus, curve.letter_change)


def same_primitive_form(a: Dict, b: Dict) -> bool:
    return a.keys() == b.keys() and all(a[k].equals(b[k]) for k in a)
