from fractions import Fraction

import numpy as np
import pytest

from superfg.seeds import (
    ASeed,
    ExchangeData,
    XSeed,
    mutate_a,
    mutate_epsilon,
    mutate_x,
    mutation_log_jacobian,
    p_map,
)
from superfg.seeds.io import parse_a_seed, parse_x_seed, seed_to_json
from superfg.seeds.mutation import alternating, is_laurent_orbit, mutate_sequence, orbit
from superfg.sfrat import SFRat
from superfg.utils.misc_utils import random_exchange_matrix

A2 = ExchangeData(2, 0, [[0, 1], [-1, 0]])
B2 = ExchangeData(2, 0, [[0, 2], [-1, 0]], d=[1, 2])
A3 = ExchangeData(3, 0, [[0, 1, 0], [-1, 0, 1], [0, -1, 0]])


def const_seed(cls, exchange, values):
    return cls(exchange, [SFRat.const(Fraction(v)) for v in values])


@pytest.mark.parametrize(
    "exchange,k,expected",
    [
        (A2, 0, [[0, -1], [1, 0]]),
        (B2, 0, [[0, -2], [1, 0]]),
        (A3, 1, [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]),
    ],
)
def test_mutate_epsilon(exchange, k, expected):
    out = mutate_epsilon(exchange, k)
    assert out.epsilon.tolist() == expected
    assert out.is_skew_symmetrizable()
    assert np.array_equal(out.d, exchange.d)


def test_exchange_validation():
    with pytest.raises(ValueError):
        ExchangeData(2, 0, [[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        ExchangeData(2, 0, [[1, 1], [-1, 0]])
    frozen = ExchangeData(1, 1, [[0, 1], [-1, 0]])
    with pytest.raises(ValueError):
        mutate_epsilon(frozen, 1)
    with pytest.raises(ValueError):
        mutate_epsilon(frozen, 5)


def test_mutate_x_values():
    s = const_seed(XSeed, A2, [2, 3])
    out = mutate_x(s, 1)
    assert out.x[0] == Fraction(3, 2)
    assert out.x[1] == Fraction(1, 3)


def test_mutate_x_symbolic():
    s = XSeed.initial(A2)
    x1, x2 = SFRat.var("x1"), SFRat.var("x2")
    out = mutate_x(s, 0)
    assert out.x[1] == x2 * (1 + x1)
    assert out.x[0] == 1 / x1
    assert all(x.sf_flag for x in out.x)


@pytest.mark.parametrize("exchange", [A2, B2, A3])
def test_involution(exchange):
    s = XSeed.initial(exchange)
    a = ASeed.initial(exchange)
    for k in range(exchange.n_mut):
        assert mutate_x(mutate_x(s, k), k) == s
        assert mutate_a(mutate_a(a, k), k) == a
        assert mutate_epsilon(mutate_epsilon(exchange, k), k) == exchange


def test_a2_pentagon_x():
    s = XSeed.initial(A2)
    out = mutate_sequence(s, alternating(5))
    assert out == s.permuted([1, 0])


def test_a2_orbit_a():
    s = const_seed(ASeed, A2, [2, 3])
    seeds = orbit(s, alternating(5))
    values = [seeds[0].a[0], seeds[0].a[1]] + [t.a[k] for t, k in zip(seeds[1:], alternating(5))]
    assert values == [2, 3, 2, 1, 1, 2, 3]


def test_a2_orbit_is_laurent():
    s = ASeed.initial(A2)
    seeds = orbit(s, alternating(5))
    assert is_laurent_orbit(seeds)
    assert all(a.sf_flag for t in seeds for a in t.a)


def test_frozen_a_fixed():
    ex = ExchangeData(2, 1, [[0, 1, 1], [-1, 0, -1], [-1, 1, 0]])
    s = ASeed.initial(ex)
    for k in alternating(6):
        s = mutate_a(s, k)
        assert s.a[2] == SFRat.var("a3")
        assert s.exchange.is_skew_symmetrizable()


def test_p_map():
    s = const_seed(ASeed, A2, [2, 3])
    assert p_map(s) == [3, Fraction(1, 2)]
    zero = const_seed(ASeed, ExchangeData(3, 0, np.zeros((3, 3))), [2, 3, 5])
    assert p_map(zero) == [1, 1, 1]


@pytest.mark.parametrize("k", [0, 1])
def test_p_map_commutes_with_mutation(k):
    s = const_seed(ASeed, A2, [2, 3])
    lhs = p_map(mutate_a(s, k))
    rhs = mutate_x(XSeed(A2, p_map(s)), k).x
    assert all(a == b for a, b in zip(lhs, rhs))


def test_p_map_commutes_symbolic_with_frozen():
    ex = ExchangeData(2, 1, [[0, 1, 1], [-1, 0, -1], [-1, 1, 0]])
    s = ASeed.initial(ex)
    for k in range(2):
        lhs = p_map(mutate_a(s, k))
        rhs = mutate_x(XSeed(ex, p_map(s, include_frozen=True)), k).x
        assert all(a == b for a, b in zip(lhs, rhs[:2]))


def test_log_jacobian():
    s = XSeed.initial(A2)
    det = mutation_log_jacobian(s, 0, [2.0, 3.0])
    assert det == pytest.approx(-1, abs=1e-6)
    mutated = mutate_x(const_seed(XSeed, A2, [2, 3]), 0)
    point = [float(x.constant_value()) for x in mutated.x]
    det2 = mutation_log_jacobian(mutated, 0, point)
    assert det * det2 == pytest.approx(1, abs=1e-6)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_log_jacobian_a3(k):
    s = XSeed.initial(A3)
    det = mutation_log_jacobian(s, k, {"x1": 0.7, "x2": 1.9, "x3": 2.5})
    assert abs(det) == pytest.approx(1, abs=1e-6)


def test_log_jacobian_bad_point():
    with pytest.raises(ValueError):
        mutation_log_jacobian(XSeed.initial(A2), 0, [0.0, 1.0])


def test_random_involution_and_symmetrizer():
    rng = np.random.default_rng(0)
    for _ in range(10):
        eps = random_exchange_matrix(rng, 3, max_entry=2)
        ex = ExchangeData(3, 0, eps)
        s = XSeed.initial(ex)
        k = int(rng.integers(0, 3))
        t = mutate_x(s, k)
        assert t.exchange.is_skew_symmetrizable()
        assert all(x.sf_flag for x in t.x)
        assert mutate_x(t, k) == s


def test_seed_json():
    data = {"n_mut": 2, "n_frozen": 0, "epsilon": [[0, 1], [-1, 0]], "d": [1, 1], "x": ["2", "3"]}
    s = parse_x_seed(data)
    assert s.x[1] == 3
    assert parse_x_seed(seed_to_json(s)) == s
    a = parse_a_seed({"n_mut": 2, "epsilon": [[0, 1], [-1, 0]]})
    assert a.a[0] == SFRat.var("a1")
    with pytest.raises(ValueError):
        parse_x_seed({"epsilon": [[0]]})
