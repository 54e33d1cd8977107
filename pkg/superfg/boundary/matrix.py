"""Minors, elementary column moves and the boundary-normalized projector."""
import itertools
import logging
from typing import Dict, List, Sequence, Tuple

from superfg.boundary.dataclasses import BoundaryMatrix, Move, as_sfrat
from superfg.sfrat import SFRat
from superfg.utils.linalg_utils import cofactor_det

logger = logging.getLogger(__name__)


def _check_move(f: int, a: int, b: int):
    if a == b:
        raise ValueError(f"Elementary move needs distinct columns: {a=}, {b=}")
    if not (0 <= a < f and 0 <= b < f):
        raise ValueError(f"Column label out of range: {a=}, {b=}, {f=}")


def transport(C0: BoundaryMatrix, moves: Sequence[Tuple[int, int, object]]) -> BoundaryMatrix:
    """Right-multiply by 1 + gamma E_ab for each move in order: column b += gamma * column a."""
    rows = C0.rows()
    log = list(C0.gauge_log)
    for a, b, gamma in moves:
        _check_move(C0.f, a, b)
        gamma = as_sfrat(gamma)
        for row in rows:
            row[b] = row[b] + gamma * row[a]
        log.append((a, b, gamma))
    return BoundaryMatrix(C0.r, C0.f, rows, tuple(log))


def adjacent_moves(f: int, gammas: Sequence) -> List[Move]:
    """Moves (b-1, b, gamma) sweeping left to right, cycling through the columns."""
    return [(i % (f - 1), i % (f - 1) + 1, as_sfrat(g)) for i, g in enumerate(gammas)]


def gauge_matrix(f: int, moves: Sequence[Tuple[int, int, object]]) -> List[List[SFRat]]:
    """The f x f product of elementary factors."""
    G = BoundaryMatrix.normalized(f, f)
    return transport(G, moves).rows()


def inverse_moves(moves: Sequence[Tuple[int, int, object]]) -> List[Move]:
    return [(a, b, -as_sfrat(g)) for a, b, g in reversed(list(moves))]


def minor(C: BoundaryMatrix, O: Sequence[int]) -> SFRat:
    if len(O) != C.r:
        raise ValueError(f"Minor needs {C.r} columns, got {O=}")
    return as_sfrat(cofactor_det(C.columns(O)))


def all_minors(C: BoundaryMatrix) -> Dict[Tuple[int, ...], SFRat]:
    return {O: minor(C, O) for O in itertools.combinations(range(C.f), C.r)}


def projector(C: BoundaryMatrix, O: Sequence[int]) -> BoundaryMatrix:
    """M_O = (C|_O)^{-1} C by Cramer's rule: M_{alpha j} = Delta_{O with o_alpha -> j} / Delta_O."""
    anchor = minor(C, O)
    if anchor.is_zero():
        raise ZeroDivisionError(f"Anchor minor vanishes at {O=}")
    rows = [[SFRat.const(0)] * C.f for _ in range(C.r)]
    for alpha in range(C.r):
        for j in range(C.f):
            if j in O:
                rows[alpha][j] = SFRat.const(int(O[alpha] == j))
                continue
            cols = list(O)
            cols[alpha] = j
            rows[alpha][j] = minor(C, cols) / anchor
    return BoundaryMatrix(C.r, C.f, rows)


def right_multiply(M: BoundaryMatrix, G: Sequence[Sequence]) -> BoundaryMatrix:
    rows = [
        [sum((M.entries[i][l] * as_sfrat(G[l][j]) for l in range(M.f)), SFRat.const(0)) for j in range(len(G[0]))]
        for i in range(M.r)
    ]
    return BoundaryMatrix(M.r, len(G[0]), rows)


def positivity_failures(C: BoundaryMatrix) -> List[Tuple[int, ...]]:
    """Column sets whose nonzero minor is not manifestly positive."""
    bad = [O for O, d in all_minors(C).items() if not d.is_zero() and not d.sf_flag]
    if bad:
        logger.info("%d minors are not subtraction-free: %s", len(bad), bad)
    return bad
