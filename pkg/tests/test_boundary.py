import numpy as np
import pytest

from superfg.boundary import BoundaryMatrix, bcfw_check, minor, odd_support, projector, transport
from superfg.boundary.io import boundary_matrix_to_json, parse_boundary_matrix, parse_labels
from superfg.boundary.matrix import (
    adjacent_moves,
    all_minors,
    gauge_matrix,
    inverse_moves,
    positivity_failures,
    right_multiply,
)
from superfg.grassmann import ExtElem, berezin_delta, linear_substitute
from superfg.sfrat import SFRat, parse_sfrat
from superfg.utils.misc_utils import random_positive_point, random_rational_matrix

g = SFRat.var("g")
h = SFRat.var("h")
SIMPLE = BoundaryMatrix.from_rows([[1, 0, 1], [0, 1, 1]])


def eta(*names):
    out = ExtElem.scalar(SFRat.const(1))
    for n in names:
        out = out * ExtElem.gen(f"eta{n}")
    return out


def test_transport_single_move():
    C = transport(BoundaryMatrix.normalized(2, 3), [(0, 2, g)])
    assert C == BoundaryMatrix.from_rows([[1, 0, g], [0, 1, 0]])
    assert len(C.gauge_log) == 1
    assert transport(BoundaryMatrix.normalized(2, 3), []) == BoundaryMatrix.normalized(2, 3)


def test_transport_disjoint_moves_commute():
    C0 = BoundaryMatrix.normalized(2, 4)
    first = transport(C0, [(0, 2, g), (1, 3, h)])
    second = transport(C0, [(1, 3, h), (0, 2, g)])
    assert first == second


def test_transport_errors():
    C0 = BoundaryMatrix.normalized(2, 3)
    with pytest.raises(ValueError):
        transport(C0, [(1, 1, g)])
    with pytest.raises(ValueError):
        transport(C0, [(0, 3, g)])


def test_minor_examples():
    C = transport(BoundaryMatrix.normalized(2, 3), [(0, 2, g)])
    assert minor(C, [0, 1]) == 1
    assert minor(C, [1, 2]) == -g
    assert minor(SIMPLE, [0, 1]) == 1
    assert minor(SIMPLE, [0, 2]) == 1
    assert minor(SIMPLE, [1, 2]) == -1
    with pytest.raises(ValueError):
        minor(SIMPLE, [0])


def test_projector_examples():
    C = transport(BoundaryMatrix.normalized(2, 3), [(0, 2, g)])
    assert projector(C, [0, 1]) == C
    M = projector(SIMPLE, [0, 1])
    assert minor(M, [0, 2]) == minor(SIMPLE, [0, 2]) / minor(SIMPLE, [0, 1])
    with pytest.raises(ZeroDivisionError):
        projector(BoundaryMatrix.from_rows([[1, 0, 1], [1, 0, 1]]), [0, 1])


def test_projector_pluecker_ratios_random():
    rng = np.random.default_rng(0)
    checked = 0
    while checked < 5:
        C = BoundaryMatrix.from_rows(random_rational_matrix(rng, 3, 6))
        O = (0, 2, 4)
        anchor = minor(C, O)
        if anchor.is_zero():
            continue
        M = projector(C, O)
        for j, o in enumerate(O):
            assert [M.entries[a][o] for a in range(3)] == [int(a == j) for a in range(3)]
        for U, delta in all_minors(C).items():
            assert minor(M, U) * anchor == delta
        checked += 1


def test_bcfw_example():
    report = bcfw_check(SIMPLE, [0, 1], [0, 1, 2])
    expected = eta(1, 2) + eta(1, 3) - eta(2, 3)
    assert report.lhs == expected
    assert report.rhs == expected
    assert report.equal and report.null_vector
    assert [c.constant_value() for c in report.support.cofactors] == [-1, -1, 1]


def test_bcfw_repeated_column():
    report = bcfw_check(SIMPLE, [0, 1], [0, 0, 2])
    assert report.equal
    assert report.lhs.coefficient(["eta1", "eta1"]) == 0


@pytest.mark.parametrize("r,f", [(2, 5), (3, 6)])
def test_bcfw_random(r, f):
    rng = np.random.default_rng(r * 10 + f)
    trials = 0
    while trials < 200:
        C = BoundaryMatrix.from_rows(random_rational_matrix(rng, r, f))
        O = sorted(rng.choice(f, size=r, replace=False).tolist())
        if minor(C, O).is_zero():
            continue
        B = rng.choice(f, size=r + 1, replace=False).tolist()
        report = bcfw_check(C, O, B)
        assert report.equal
        assert report.null_vector
        trials += 1


def test_odd_support_symbolic():
    C = transport(BoundaryMatrix.normalized(2, 4), adjacent_moves(4, [g, h, g]))
    M = projector(C, [0, 1])
    report = bcfw_check(C, [0, 1], [1, 2, 3])
    assert report.equal and report.null_vector
    support = odd_support(M, [1, 2, 3])
    assert support.B == (1, 2, 3)
    with pytest.raises(ValueError):
        odd_support(M, [1, 2])


def test_gauge_covariance():
    C = transport(BoundaryMatrix.normalized(2, 5), adjacent_moves(5, [2, 3, 1, 5, 2]))
    O = [0, 1]
    moves = [(0, 2, g), (3, 4, h), (2, 3, SFRat.const(2))]
    G = gauge_matrix(5, moves)
    assert projector(transport(C, moves), O) == right_multiply(projector(C, O), G)

    M = projector(C, O)
    gens = [f"eta{j}" for j in range(1, 6)]
    MG = right_multiply(M, G)
    G_inv = gauge_matrix(5, inverse_moves(moves))
    pulled = linear_substitute(berezin_delta(MG.rows(), gens), G_inv, gens)
    assert pulled == berezin_delta(M.rows(), gens)


def test_positivity_adjacent_moves():
    names = [f"g{i}" for i in range(1, 8)]
    C = transport(BoundaryMatrix.normalized(2, 5), adjacent_moves(5, [SFRat.var(n) for n in names]))
    assert positivity_failures(C) == []
    point = random_positive_point(np.random.default_rng(1), names)
    nonzero = [d for d in all_minors(C).values() if not d.is_zero()]
    assert len(nonzero) == 10
    assert all(d.eval(point) > 0 for d in nonzero)


def test_positivity_fails_for_non_adjacent_move():
    C = transport(BoundaryMatrix.normalized(2, 3), [(0, 2, g)])
    assert positivity_failures(C) == [(1, 2)]


def test_boundary_io():
    C = parse_boundary_matrix({"r": 2, "f": 3, "moves": [[1, 3, "g"]]})
    assert C == BoundaryMatrix.from_rows([[1, 0, g], [0, 1, 0]])
    data = boundary_matrix_to_json(SIMPLE)
    assert parse_boundary_matrix(data) == SIMPLE
    assert parse_boundary_matrix({"matrix": [["1", "x/(1+x)"]]}).entries[0][1] == parse_sfrat("x/(1+x)")
    assert parse_labels("1,2,4") == [0, 1, 3]
    with pytest.raises(ValueError):
        parse_labels("1,a")
    with pytest.raises(ValueError):
        parse_boundary_matrix({"f": 3})
