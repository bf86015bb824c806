"""Push-forward along weight maps, the torus transform across lifts, multiplicativity."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monoidkit.padic import torus
from monoidkit.padic.cyclo import ONE, Cyc
from monoidkit.padic.laurent import X
from monoidkit.padic.schwartz import PAdicContext

CONFIGS = torus.standard_configurations()
config_names = st.sampled_from(sorted(CONFIGS))
primes = st.sampled_from([2, 3, 5])
seeds = st.integers(0, 10 ** 6)
parameters = st.sampled_from([ONE, Cyc.rational(2), Cyc.rational(Fraction(1, 3)), Cyc.root(1, 4)])


def points(p, pts):
    return torus.TorusFunction.from_points(p, pts)


def test_identity_pushforward():
    wm = torus.identity_map(1)
    phi = points(3, {(0,): 2, (2,): -1})
    assert torus.pushforward_rho(phi, wm, 5) == {(0,): Cyc.rational(2), (2,): Cyc.rational(-1)}


def test_product_pushforward():
    wm = CONFIGS["product"]
    assert torus.pushforward_rho(points(3, {(0, 0): 1}), wm, 4) == {(0,): ONE}
    assert torus.pushforward_rho(points(3, {(1, 0): 1}), wm, 4) == {(1,): ONE}


def test_two_lifts_agree():
    wm = CONFIGS["product"]
    a = torus.pushforward_rho(points(3, {(0, 0): 1}).fourier(), wm, 6)
    b = torus.pushforward_rho(points(3, {(1, -1): 1}).fourier(), wm, 6)
    assert a == b == torus.torus_fourier(3, {(0,): 1}, wm, 6)


def test_identity_transform_is_standard():
    wm = torus.identity_map(2)
    phi = points(2, {(1, 0): 1, (0, 1): 1})
    assert torus.torus_fourier(2, {(1, 0): 1, (0, 1): 1}, wm, 5) == torus.pushforward_rho(phi.fourier(), wm, 5)


def test_non_saturated_kernel_rejected():
    with pytest.raises(ValueError):
        torus.WeightMap.build([[1, 1], [1, -1]], [1, 0])
    with pytest.raises(ValueError):
        torus.WeightMap.build([[1, 2]], [1])


def test_configurations_pair_to_one():
    for wm in CONFIGS.values():
        assert all(wm.degree(mu) == 1 for mu in wm.weights)
        for k in wm.kernel():
            assert wm.image(k) == (0,) * wm.rank


def test_two_weight_ratio_is_gamma_squared():
    ctx = PAdicContext(3)
    res = torus.multiplicativity_check(ctx, points(3, {(0, 0): 1, (1, 2): 2}), CONFIGS["product"], [ONE])
    gamma = (1 - X) / (1 - X.substitute(Fraction(1, 3), -1))
    assert res.holds and res.gamma_product == (gamma * gamma).normalized()


@given(config_names, primes, seeds)
def test_lift_independence(name, p, seed):
    wm = CONFIGS[name]
    phi = torus.random_torus_function(p, wm.n, random.Random(seed))
    res = torus.lift_independence_check(p, phi, wm)
    assert res.equal, res.witness


@given(config_names, seeds, parameters)
def test_multiplicativity(name, seed, z):
    wm = CONFIGS[name]
    phi = torus.random_torus_function(3, wm.n, random.Random(seed))
    res = torus.multiplicativity_check(PAdicContext(3), phi, wm, [z] * wm.rank)
    assert res.series_ok and res.holds


@given(primes, seeds)
def test_transform_is_linear(p, seed):
    rng = random.Random(seed)
    f, g = (torus.random_torus_function(p, 2, rng) for _ in range(2))
    lhs = (f + g * 2).fourier()
    rhs = f.fourier() + g.fourier() * 2
    for v in [(a, b) for a in range(-4, 4) for b in range(-4, 4)]:
        assert lhs(v) == rhs(v)


def test_wrong_gamma_is_detected():
    """Negative control: a single weight does not give the squared gamma factor."""
    ctx = PAdicContext(3)
    res = torus.multiplicativity_check(ctx, points(3, {(0,): 1}), CONFIGS["rank1"], [ONE])
    gamma = (1 - X) / (1 - X.substitute(Fraction(1, 3), -1))
    assert res.holds and res.ratio != (gamma * gamma).normalized()
