import itertools
import math

import mpmath
import numpy as np
import pytest

from superfg.hexagon import (
    FlagChart,
    chen_period,
    cross_ratios,
    ell1_diff,
    ell_n,
    g_function,
    hexagon_period,
    kinematics,
)
from superfg.hexagon.gfunctions import g_quadrature, g_spectral
from superfg.hexagon.period import V
from superfg.hexagon.polylog import polylog, polylog_complex
from superfg.hexagon.twistors import moment_curve_twistors

mpmath.mp.dps = 30


def mp_li(n, z):
    return complex(mpmath.polylog(n, z))


def mp_ell(n, x):
    return 0.5 * (mp_li(n, x).real - (-1) ** n * mp_li(n, 1 / x).real)


@pytest.mark.parametrize(
    "n, x, expected",
    [
        (2, 1.0, math.pi ** 2 / 6),
        (4, 1.0, math.pi ** 4 / 90),
        (2, 0.5, math.pi ** 2 / 12 - math.log(2) ** 2 / 2),
        (3, 0.0, 0.0),
    ],
)
def test_polylog_values(n, x, expected):
    assert polylog(n, x) == pytest.approx(expected, rel=1e-12, abs=1e-15)


def test_polylog_real_against_mpmath():
    rng = np.random.default_rng(11)
    for n in range(1, 5):
        for x in rng.uniform(-6.0, 0.99, size=40):
            assert polylog(n, x) == pytest.approx(mp_li(n, x).real, rel=1e-10, abs=1e-12)
    for n in range(2, 5):
        for x in rng.uniform(1.01, 6.0, size=40):
            assert polylog(n, x) == pytest.approx(mp_li(n, x).real, rel=1e-10, abs=1e-12)


def test_polylog_complex_against_mpmath():
    rng = np.random.default_rng(12)
    for n in range(1, 5):
        for r, phi in zip(rng.uniform(0.1, 3.0, 40), rng.uniform(-3.0, 3.0, 40)):
            z = complex(r * math.cos(phi), r * math.sin(phi))
            assert abs(polylog_complex(n, z) - mp_li(n, z)) <= 1e-10 * max(1.0, abs(mp_li(n, z)))


def test_polylog_errors():
    with pytest.raises(ValueError):
        polylog(1, 1.5)
    with pytest.raises(ValueError):
        polylog(1, 1.0)
    with pytest.raises(ValueError):
        polylog(0, 0.5)


def test_ell_n():
    assert ell_n(4, 1.0) == pytest.approx(0.0, abs=1e-15)
    assert ell_n(2, 2.0) + ell_n(2, 0.5) == pytest.approx(0.0, abs=1e-13)
    rng = np.random.default_rng(5)
    for x in rng.uniform(0.05, 0.95, size=20):
        for n in range(1, 5):
            sign = -1 if n % 2 == 0 else 1
            assert ell_n(n, 1 / x) == pytest.approx(sign * ell_n(n, x), rel=1e-10, abs=1e-12)
            assert ell_n(n, x) == pytest.approx(mp_ell(n, x), rel=1e-10, abs=1e-12)


def test_ell1_diff():
    assert ell1_diff(0.3, 0.3) == 0.0
    assert ell1_diff(2.5, 2.5) == 0.0
    assert ell1_diff(0.3, 0.6) == pytest.approx(ell_n(1, 0.3) - ell_n(1, 0.6), rel=1e-12)
    assert ell1_diff(3.0, 1.5) == pytest.approx(ell_n(1, 3.0) - ell_n(1, 1.5), rel=1e-12)
    with pytest.raises(ValueError):
        ell1_diff(0.5, 2.0)
    with pytest.raises(ValueError):
        ell1_diff(1.0, 2.0)


def test_ell1_diff_conjugate_pair():
    a = 1 + 1e-4 * complex(-2.5, -0.866)
    diff = ell1_diff(a, a.conjugate())
    expected = 0.5 * (mp_li(1, a) + mp_li(1, 1 / a)) - 0.5 * (mp_li(1, a.conjugate()) + mp_li(1, 1 / a.conjugate()))
    assert diff == pytest.approx(expected, abs=1e-12)
    assert diff.real == pytest.approx(0.0, abs=1e-12)
    # the phase of a - 1 survives the coincident limit
    theta = math.atan2(-0.866, -2.5)
    assert diff.imag == pytest.approx(-(2 * theta + math.pi), abs=1e-3)


def test_kinematics_examples():
    k = kinematics(1, 1, 1)
    assert k.delta_kin == 0
    assert k.x_plus == pytest.approx(1.0) and k.x_minus == pytest.approx(1.0)
    assert k.y == pytest.approx([1.0, 1.0, 1.0])

    k = kinematics(1, 1, 4)
    assert k.delta_kin == pytest.approx(9.0)
    assert k.x_plus == pytest.approx(1.0) and k.x_minus == pytest.approx(0.25)
    assert k.y[0] == pytest.approx(4.0)

    k = kinematics(0.5, 0.5, 0.5)
    assert k.delta_kin == pytest.approx(-0.25)
    assert k.is_complex
    assert k.x_plus == pytest.approx(k.x_minus.conjugate())
    assert all(abs(t) == pytest.approx(1.0) for t in k.y)

    with pytest.raises(ValueError):
        kinematics(0, 1, 1)


def test_kinematics_roots_solve_quadratic():
    rng = np.random.default_rng(2)
    for u, v, w in rng.uniform(0.05, 3.0, size=(20, 3)):
        k = kinematics(u, v, w)
        assert k.delta_kin == pytest.approx((1 - u - v - w) ** 2 - 4 * u * v * w, abs=1e-14)
        for x in (k.x_plus, k.x_minus):
            assert abs(u * v * w * x ** 2 - (u + v + w - 1) * x + 1) <= 1e-12 * max(1.0, abs(x) ** 2)
        assert abs(k.x_plus * k.x_minus * u * v * w - 1) <= 1e-12


def test_period_at_symmetric_point():
    rec = hexagon_period((1, 1, 1))
    assert rec.on_locus
    assert rec.V == pytest.approx(0.0, abs=1e-15)
    assert rec.V_tilde == pytest.approx(math.pi ** 4 / 72, rel=1e-12)
    assert rec.total == pytest.approx(1.352904042, rel=1e-9)
    assert rec.imag == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("uvw", [(0.9, 0.9, 0.05), (0.1, 0.2, 0.3), (0.3, 0.5, 0.8), (0.6, 0.05, 0.05)])
def test_period_is_dihedrally_invariant(uvw):
    base = hexagon_period(uvw)
    for perm in itertools.permutations(uvw):
        rec = hexagon_period(perm)
        assert rec.total == pytest.approx(base.total, rel=1e-12, abs=1e-12)
        assert rec.imag == pytest.approx(base.imag, rel=1e-12, abs=1e-12)


def test_period_singular_line():
    # u = v = 1 puts x_u^+ = 1 on the logarithmic singularity of ell_1
    with pytest.raises(ValueError):
        hexagon_period((1, 1, 4))


def test_period_with_unit_y_matches_direct_sum():
    u, v, w = 0.4, 0.7, 0.2
    rec = hexagon_period((u, v, w), y=(1, 1, 1))
    root = math.sqrt(u * v * w)
    direct = sum(2 * mp_ell(4, t * root) for t in (u, v, w)) + math.pi ** 4 / 72
    assert rec.J == 0
    assert rec.V_tilde == pytest.approx(direct, rel=1e-10)


def test_u_only_part_against_mpmath():
    u, v, w = 0.3, 1.7, 0.6
    li4 = sum(mp_li(4, 1 - 1 / t).real for t in (u, v, w))
    li2 = sum(mp_li(2, 1 - 1 / t).real for t in (u, v, w))
    assert V(u, v, w) == pytest.approx(-0.5 * li4 - li2 ** 2 / 8, rel=1e-10)


def test_continuity_near_symmetric_point():
    partial = []
    for delta in (1e-3, 1e-4):
        t = 1 + delta
        rec = hexagon_period((t, t, t))
        assert not rec.on_locus
        value = rec.V + rec.L4_sum
        assert abs(value) <= 50 * delta
        assert abs(rec.J) <= 3 * math.pi + 1e-9
        partial.append(abs(value))
    assert partial[1] < partial[0]


@pytest.mark.parametrize(
    "direction, limit",
    [((1, 1, 1), -7.42395), ((2, 1, 1), -7.64781), ((-1, -1, -1), 7.42395)],
)
def test_j_limit_depends_on_direction(direction, limit):
    # x_j^+- -> 1 along each ray, but the phase of x_j^+ - 1 does not vanish
    values = []
    for t in (1e-4, 5e-5):
        rec = hexagon_period(tuple(1 + t * a for a in direction))
        assert rec.kinematics.is_complex
        assert abs(rec.J.real) < 1e-12
        values.append(rec.J.imag)
    assert values[0] == pytest.approx(values[1], abs=1e-2)
    assert values[1] == pytest.approx(limit, abs=1e-2)
    assert hexagon_period((1, 1, 1)).total == pytest.approx(math.pi ** 4 / 72, rel=1e-12)


def test_flag_chart():
    y = (0.7, 1.3, 2.0)
    chart = FlagChart.from_uvw(0.2, 0.5, 0.75, y, anchor=0)
    assert chart.uvw == pytest.approx((0.2, 0.5, 0.75), rel=1e-14)
    assert chart.f_e == pytest.approx((0.25, 1.0, 3.0))
    assert chart.odd_chart == (0, 1, 2, 3)

    shifted = chart.shifted(1)
    assert shifted.odd_chart == (1, 2, 3, 4)
    assert shifted.uvw == pytest.approx((0.5, 0.75, 0.2))
    assert hexagon_period(shifted).total == pytest.approx(hexagon_period(chart).total, rel=1e-12)
    assert chart.shifted(5).odd_chart == (5, 0, 1, 2)

    with pytest.raises(ValueError):
        FlagChart((1, 1, 1), (1, -1, 1))
    with pytest.raises(ValueError):
        FlagChart.from_uvw(0.2, 1.0, 0.5, y)


def test_g_function_depth_one():
    assert g_function([2]) == pytest.approx(-math.log(2), abs=1e-10)
    assert g_function([-1]) == pytest.approx(math.log(2), abs=1e-10)
    a = 0.5 + 0.5j
    assert g_function([a]) == pytest.approx(complex(np.log(1 - 1 / a)), abs=1e-10)


def test_g_function_shuffle():
    assert g_function([2]) * g_function([3]) == pytest.approx(
        g_function([2, 3]) + g_function([3, 2]), abs=1e-9
    )
    rng = np.random.default_rng(4)
    for _ in range(5):
        a, b = [complex(rng.choice([-1, 1]) * rng.uniform(1.2, 4.0), rng.uniform(-1, 1)) for _ in range(2)]
        lhs = g_function([a]) * g_function([b])
        rhs = g_function([a, b]) + g_function([b, a])
        assert abs(lhs - rhs) <= 1e-9


def test_spectral_matches_quadrature_and_closed_form():
    letters = [2.0, -1.5]
    assert abs(g_spectral(letters) - g_quadrature(letters)) <= 1e-9
    for depth in (3, 4, 6):
        expected = np.log(1 - 1 / 3.0) ** depth / math.factorial(depth)
        assert g_function([3.0] * depth) == pytest.approx(expected, abs=1e-8)


def test_g_function_errors():
    with pytest.raises(ValueError):
        g_function([0.5])
    with pytest.raises(ValueError):
        g_function([1.0, 2.0])
    with pytest.raises(ValueError):
        g_function([2.0] * 7)
    with pytest.raises(ValueError):
        g_quadrature([2.0, 3.0, 4.0])


def test_chen_period():
    chart = FlagChart((0.5,) * 3, (0.5,) * 3)
    expected = math.log(0.5) ** 6 / math.factorial(6)
    assert chen_period(chart) == pytest.approx(expected, abs=1e-8)
    with pytest.raises(ValueError):
        chen_period(FlagChart((2.0, 0.5, 0.5), (0.5, 0.5, 0.5)))


def test_cross_ratios_cycle_under_relabeling():
    rng = np.random.default_rng(9)
    for _ in range(10):
        Z = moment_curve_twistors(np.sort(rng.uniform(-3, 3, size=6)))
        u, v, w = cross_ratios(Z)
        assert min(u, v, w) > 0
        assert cross_ratios(np.roll(Z, -1, axis=0)) == pytest.approx((v, w, u), rel=1e-9)
    with pytest.raises(ValueError):
        cross_ratios(np.zeros((5, 4)))
