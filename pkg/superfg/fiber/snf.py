"""Smith normal form over the integers with exact unimodular transforms."""
import logging
from typing import Tuple

import numpy as np

from superfg.utils.linalg_utils import det_int

logger = logging.getLogger(__name__)


def exgcd(a: int, b: int) -> np.ndarray:
    """2x2 integer matrix M of determinant 1 with M @ [a, b] = [gcd(a, b), 0].

    If a divides b, M[0, 1] is 0.
    """
    a_sign = -1 if a < 0 else 1
    a *= a_sign
    b_sign = -1 if b < 0 else 1
    b *= b_sign

    # Euclid on [a, b] augmented by the identity; rows swapped first so that a | b keeps M[0, 1] = 0
    M = np.array([[a, 1, 0], [b, 0, 1]], dtype=object)[::-1]
    while M[1, 0] != 0:
        q = M[0, 0] // M[1, 0]
        M[0] -= q * M[1]
        M = M[::-1]

    g = M[0, 0]
    M = M[:, 1:] * np.array([a_sign, b_sign], dtype=object)
    if g != 0:
        M[1] = [-b_sign * b // g, a_sign * a // g]
    return M


def _clear_col(D, U, i) -> bool:
    if (D[i + 1:, i] == 0).all():
        return False
    for j in range(i + 1, D.shape[0]):
        M = exgcd(D[i, i], D[j, i])
        D[[i, j]] = M @ D[[i, j]]
        U[[i, j]] = M @ U[[i, j]]
    return True


def _clear_row(D, S, i) -> bool:
    if (D[i, i + 1:] == 0).all():
        return False
    for j in range(i + 1, D.shape[1]):
        M = exgcd(D[i, i], D[i, j]).T
        D[:, [i, j]] = D[:, [i, j]] @ M
        S[:, [i, j]] = S[:, [i, j]] @ M
    return True


def _needs_fix(a, b) -> bool:
    return (a == 0 and b != 0) or (a != 0 and b % a != 0)


def _fix_pair(D, U, S, i, j):
    """Turn the diagonal block diag(a, b) into diag(gcd, lcm) up to sign."""
    # fold column j into column i: block is [[a, 0], [b, b]]
    D[:, i] = D[:, i] + D[:, j]
    S[:, i] = S[:, i] + S[:, j]
    M = exgcd(D[i, i], D[j, i])
    D[[i, j]] = M @ D[[i, j]]
    U[[i, j]] = M @ U[[i, j]]
    # gcd divides D[i, j], so this column step leaves column i fixed up to sign
    M = exgcd(D[i, i], D[i, j]).T
    D[:, [i, j]] = D[:, [i, j]] @ M
    S[:, [i, j]] = S[:, [i, j]] @ M


def smith_normal_form(M) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(U, D, S) with U @ M @ S = D, U and S unimodular, D diagonal with d_1 | d_2 | ... >= 0."""
    M = np.array(M, dtype=object)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    rows, cols = M.shape
    D = M.copy()
    U = np.eye(rows, dtype=int).astype(object)
    S = np.eye(cols, dtype=int).astype(object)

    for i in range(min(rows, cols)):
        _clear_col(D, U, i)
        while _clear_row(D, S, i) and _clear_col(D, U, i):
            pass

    k = min(rows, cols)
    changed = True
    while changed:
        changed = False
        for i in range(k):
            for j in range(i + 1, k):
                if not _needs_fix(D[i, i], D[j, j]):
                    continue
                _fix_pair(D, U, S, i, j)
                changed = True
    for i in range(k):
        if D[i, i] < 0:
            D[i] = -D[i]
            U[i] = -U[i]

    assert (U.dot(M).dot(S) == D).all()
    logger.debug("Smith form diagonal: %s", [D[i, i] for i in range(k)])
    return U, D, S


def diagonal(D: np.ndarray):
    return [int(D[i, i]) for i in range(min(D.shape))]


def rank_of(D: np.ndarray) -> int:
    return sum(1 for d in diagonal(D) if d != 0)


def is_unimodular(A: np.ndarray) -> bool:
    A = np.asarray(A, dtype=object)
    return A.shape[0] == A.shape[1] and abs(det_int(A)) == 1
