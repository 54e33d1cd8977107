from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np
import sympy


def to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def fraction_rows(m: sympy.Matrix) -> List[List[Fraction]]:
    return [[to_fraction(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]


def solve_left(A: sympy.Matrix, B: sympy.Matrix, free_value=0) -> Optional[sympy.Matrix]:
    """A particular X with X @ A = B, or None when inconsistent.

    Free parameters of the solution family are set to `free_value`, so two
    calls with different values give two different complements.
    """
    if B.rows == 0:
        return sympy.zeros(0, A.rows)
    try:
        sol, params = A.T.gauss_jordan_solve(B.T)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: free_value for p in params})
    return sol.T


def is_zero_matrix(m: sympy.Matrix) -> bool:
    return all(x == 0 for x in m)


def int_array(rows) -> np.ndarray:
    arr = np.array(rows, dtype=object)
    if arr.size:
        assert all(int(x) == x for x in arr.flat), f"non-integer entries: {rows=}"
    return np.array(rows, dtype=int)


def det_int(m: np.ndarray) -> int:
    return int(sympy.Matrix(np.asarray(m, dtype=object)).det())


def permutation_sign(perm: Sequence[int]) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def cofactor_det(rows):
    """Determinant over any commutative ring supporting +, * and int scalars."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for j in range(n):
        entry = rows[0][j]
        if entry == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total
