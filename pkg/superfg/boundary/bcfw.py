import logging
from typing import List, Sequence

from superfg.boundary.dataclasses import BCFWReport, BoundaryMatrix, OddSupport, as_sfrat
from superfg.boundary.matrix import minor, projector
from superfg.grassmann import ExtElem, berezin_delta, wedge
from superfg.sfrat import SFRat
from superfg.utils.linalg_utils import cofactor_det

logger = logging.getLogger(__name__)


def eta_names(cols: Sequence[int]) -> List[str]:
    return [f"eta{j + 1}" for j in cols]


def _drop(seq: Sequence[int], a: int) -> List[int]:
    return list(seq[:a]) + list(seq[a + 1:])


def odd_support(M: BoundaryMatrix, B: Sequence[int]) -> OddSupport:
    """Cofactors c_a = (-1)^a det(M|_{B minus b_a}) spanning the right kernel of M|_B."""
    if len(B) != M.r + 1:
        raise ValueError(f"Odd support needs {M.r + 1} columns, got {B=}")
    block = M.columns(B)
    cofactors = tuple(
        as_sfrat(cofactor_det([_drop(row, a) for row in block])) * (-1) ** a for a in range(len(B))
    )
    return OddSupport(tuple(B), cofactors)


def is_null_vector(M: BoundaryMatrix, support: OddSupport) -> bool:
    block = M.columns(support.B)
    return all(
        sum((x * c for x, c in zip(row, support.cofactors)), SFRat.const(0)).is_zero() for row in block
    )


def bcfw_check(C: BoundaryMatrix, O: Sequence[int], B: Sequence[int]) -> BCFWReport:
    """Compare delta(M_O|_B eta) with its expansion in Pluecker ratios Delta_U / Delta_O."""
    C.check_labels(B)
    M = projector(C, O)
    anchor = minor(C, O)
    lhs = berezin_delta(M.columns(B), eta_names(B))

    rhs = ExtElem()
    for a in range(len(B)):
        U = _drop(B, a)
        ratio = minor(C, U) / anchor
        if ratio.is_zero():
            continue
        monomial = ExtElem.scalar(SFRat.const(1))
        for g in eta_names(U):
            monomial = wedge(monomial, ExtElem.gen(g))
        rhs = rhs + monomial.scale(ratio)

    support = odd_support(M, B)
    report = BCFWReport(lhs, rhs, lhs == rhs, support, is_null_vector(M, support))
    if not report.equal:
        logger.warning("BCFW expansion mismatch at O=%s, B=%s", list(O), list(B))
    return report
