import numpy as np
import pytest

from superfg.double import (
    DoublePoint,
    dirac_identities,
    exactness_check,
    moment_residual,
    omega_a_invariance,
    solve_moment,
)
from superfg.double import exactness
from superfg.double.exactness import (
    central_jacobian,
    convergence_ratio,
    f_even,
    f_even_literal,
    f_even_literal_gradient,
)
from superfg.seeds import ASeed, ExchangeData
from superfg.superseed import SuperSeed, check_isotropy
from superfg.superseed.horizontal import dirac_theta_coefficient

A2 = ExchangeData(2, 0, [[0, 1], [-1, 0]])
B2 = ExchangeData(2, 0, [[0, 2], [-1, 0]], d=[1, 2])
A3 = ExchangeData(3, 0, [[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
A4 = ExchangeData(4, 0, [[0, 1, 0, 0], [-1, 0, 1, 0], [0, -1, 0, 1], [0, 0, -1, 0]])


def test_moment_residual_examples():
    s = SuperSeed.initial(A2, np.zeros((0, 2)))
    p = DoublePoint([0.0, 0.0], [0.3, -0.7], [])
    assert moment_residual(s, p) == pytest.approx([0.3, -0.7])
    # eps_hat^{-1} = [[0, -1], [1, 0]], so 1/2 eps_hat^{-1} (1, 0) = (0, 1/2)
    p = DoublePoint([1.0, 0.0], [0.0, 0.5], [])
    assert moment_residual(s, p) == pytest.approx([0.0, 0.0])


def test_moment_residual_generic():
    s = SuperSeed.initial(A4, [[1, 0, 2, -1]])
    rng = np.random.default_rng(0)
    p = DoublePoint.random(rng, 4, 1)
    inv = np.linalg.inv(A4.epsilon.astype(float))
    c = s.W.astype(float) @ inv
    expected = p.A - 0.5 * inv @ p.y - c.T @ p.theta_pi
    assert moment_residual(s, p) == pytest.approx(expected, abs=1e-12)
    on_shell = solve_moment(s, p.y, p.theta_pi)
    assert np.max(np.abs(moment_residual(s, on_shell))) < 1e-12


def test_moment_singular():
    s = SuperSeed.initial(A3, np.zeros((0, 3)))
    with pytest.raises(ValueError):
        moment_residual(s, DoublePoint(np.zeros(3), np.zeros(3), []))


def test_dirac_identities():
    report = dirac_identities(SuperSeed.initial(A4, [[1, 0, 2, -1], [0, 1, 0, 0]]))
    assert report.recovers_weights and report.agrees_with_isotropy
    identity = SuperSeed.initial(A2, [[1, 0], [0, 1]])
    report = dirac_identities(identity)
    assert not report.theta_theta_zero and report.agrees_with_isotropy
    assert dirac_theta_coefficient(identity) == A2.mutable_epsilon_hat().inv()
    zero = dirac_identities(SuperSeed.initial(A2, [[0, 0]]))
    assert zero.mixed_zero and zero.theta_theta_zero


def test_dirac_agrees_with_isotropy_random():
    rng = np.random.default_rng(1)
    for _ in range(100):
        s = SuperSeed.random(rng, 2 * int(rng.integers(1, 3)), int(rng.integers(1, 3)))
        if s.exchange.mutable_epsilon_hat().det() == 0:
            continue
        report = dirac_identities(s)
        assert report.recovers_weights
        assert report.theta_theta_zero == check_isotropy(s).isotropic


@pytest.mark.parametrize("W", [np.zeros((0, 2)), [[1, 0]], [[1, -1], [2, 1]]])
def test_exactness_a2(W):
    rng = np.random.default_rng(2)
    s = SuperSeed.initial(A2, W)
    for k in range(2):
        report = exactness_check(s, k, DoublePoint.random(rng, 2, s.r))
        assert report.lambda_residual < 1e-6
        assert report.omega_residual < 1e-6


def test_exactness_rank4():
    rng = np.random.default_rng(3)
    s = SuperSeed.initial(A4, [[1, 0, 2, -1]])
    for k in range(4):
        report = exactness_check(s, k, DoublePoint.random(rng, 4, 1))
        assert report.lambda_residual < 1e-6
        assert report.omega_residual < 1e-6


def test_literal_generating_function_gradient():
    rng = np.random.default_rng(4)
    y = rng.uniform(-1, 1, 3)
    for k in range(3):
        fd = central_jacobian(lambda t: np.array([f_even_literal(A3.epsilon, k, t)]), y, 1e-5)[0]
        assert fd == pytest.approx(f_even_literal_gradient(A3.epsilon, k, y), abs=1e-8)


@pytest.mark.parametrize("d_k", [1, 2])
def test_even_generating_function_derivative(d_k):
    # dF/dy = 1/2 d_k (y l'(y) - l(y)) with l(y) = log(1 + e^{-y})
    for y in [-1.0, -0.3, 0.0, 0.4, 1.0]:
        h = 1e-5
        fd = (f_even(d_k, y + h) - f_even(d_k, y - h)) / (2 * h)
        expected = 0.5 * d_k * (-y / (1 + np.exp(y)) - np.log1p(np.exp(-y)))
        assert fd == pytest.approx(expected, abs=1e-8)
    assert f_even(1, 0.0) == pytest.approx(np.pi ** 2 / 12, abs=1e-14)


def test_perturbed_generating_function_fails(monkeypatch):
    rng = np.random.default_rng(7)
    s = SuperSeed.initial(A2, [[1, 0]])
    p = DoublePoint.random(rng, 2, 1)
    assert exactness_check(s, 0, p).lambda_residual < 1e-6
    original = exactness.f_even
    monkeypatch.setattr(exactness, "f_even", lambda d_k, yk: 1.01 * original(d_k, yk))
    assert exactness_check(s, 0, p).lambda_residual > 1e-4


def test_exactness_skew_symmetrizable():
    rng = np.random.default_rng(8)
    s = SuperSeed.initial(B2, [[1, 0]])
    for k in range(2):
        report = exactness_check(s, k, DoublePoint.random(rng, 2, 1))
        assert report.lambda_residual < 1e-6
        assert report.omega_residual < 1e-6
        assert np.isfinite(report.constraint_drift)


def test_second_order_convergence():
    rng = np.random.default_rng(5)
    s = SuperSeed.initial(A2, [[1, 0]])
    ratio = convergence_ratio(s, 0, DoublePoint.random(rng, 2, 1))
    assert 3.5 <= ratio <= 4.5


def test_odd_term_matches_literal_prefactor_only():
    rng = np.random.default_rng(6)
    s = SuperSeed.initial(A2, [[1, 0]])
    p = DoublePoint.random(rng, 2, 1)
    literal = exactness_check(s, 0, p, mode="paper_literal")
    consistent = exactness_check(s, 0, p, mode="consistent")
    assert literal.odd_residual < 1e-6
    assert consistent.odd_residual > 1e-3


def test_wall_guard():
    s = SuperSeed.initial(A2, [[1, 0]])
    with pytest.raises(ValueError):
        exactness_check(s, 0, DoublePoint([40.0, 0.0], [0.0, 0.0], [1.0]))


@pytest.mark.parametrize("exchange", [A2, B2])
def test_omega_a_invariance(exchange):
    s = ASeed.initial(exchange)
    for k in range(2):
        assert omega_a_invariance(s, k, [2.0, 3.0]) < 1e-6


def test_omega_a_with_frozen():
    ex = ExchangeData(2, 1, [[0, 1, 1], [-1, 0, -1], [-1, 1, 0]])
    s = ASeed.initial(ex)
    point = {"a1": 2.0, "a2": 3.0, "a3": 0.5}
    for k in range(2):
        assert omega_a_invariance(s, k, point) < 1e-6
