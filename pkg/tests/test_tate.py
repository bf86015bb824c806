"""Schwartz functions, Fourier transforms, Tate zeta integrals and gamma factors."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monoidkit import oracles as O
from monoidkit.padic import tate
from monoidkit.padic.cyclo import ONE, Cyc, sqrt_power
from monoidkit.padic.laurent import X
from monoidkit.padic.radial import RadialFunction
from monoidkit.padic.schwartz import PAdicContext, SchwartzFunction, char_ball, char_shell

primes = st.sampled_from([2, 3, 5])
odd_primes = st.sampled_from([3, 5, 7])
seeds = st.integers(0, 10 ** 6)
dims = st.sampled_from([1, 2, 4])


def real_schwartz(p, seed, dim):
    rng = random.Random(seed)
    f = SchwartzFunction(p, dim)
    for _ in range(rng.randint(1, 3)):
        center = tuple(Fraction(rng.randint(0, p * p - 1), p ** rng.randint(0, 1)) for _ in range(dim))
        level = tuple(rng.randint(-1, 1) for _ in range(dim)) if dim < 4 else rng.randint(0, 1)
        f = f + SchwartzFunction.box(p, center, level, rng.randint(-3, 3) or 1)
    return f


def test_context_requires_prime():
    with pytest.raises(ValueError):
        PAdicContext(4)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ball_transforms(p):
    assert char_ball(p, 0).fourier() == char_ball(p, 0)
    for m in (-1, 1, 2):
        assert char_ball(p, m).fourier() == char_ball(p, -m) * Fraction(p) ** -m
    assert char_shell(p, 0).fourier() == char_ball(p, 0) - char_ball(p, -1) * Fraction(1, p)


@given(primes, seeds, dims)
def test_fourier_inversion_is_reflection(p, seed, dim):
    f = tate.random_schwartz(p, random.Random(seed), dim) if dim < 4 else real_schwartz(p, seed, dim)
    assert f.fourier().fourier() == f.reflect()


@given(primes, seeds, st.sampled_from([1, 2]))
def test_plancherel(p, seed, dim):
    f = real_schwartz(p, seed, dim)
    assert f.l2_norm_squared() == f.fourier().l2_norm_squared()


@given(primes, seeds)
def test_fourier_is_linear(p, seed):
    rng = random.Random(seed)
    f, g = tate.random_schwartz(p, rng), tate.random_schwartz(p, rng)
    assert (f + g * 3).fourier() == f.fourier() + g.fourier() * 3


@pytest.mark.parametrize("p", [2, 3, 5])
def test_zeta_examples(p):
    ctx, triv = PAdicContext(p), tate.TameCharacter(p)
    assert tate.tate_zeta(ctx, char_ball(p, 0), triv) == 1 / (1 - X)
    assert tate.tate_zeta(ctx, char_shell(p, 0), triv) == X / X
    assert tate.tate_zeta(ctx, char_shell(p, -1), triv) == 1 / X


@given(primes, seeds)
def test_zeta_series_matches_annulus_integrals(p, seed):
    """Coefficient of X^v is the integral of f chi over p^v O*, computed by refining to a grid."""
    f = tate.random_schwartz(p, random.Random(seed))
    ctx, triv = PAdicContext(p), tate.TameCharacter(p)
    z = tate.tate_zeta(ctx, f, triv)
    lo, hi = f.levels()
    ser = z.series(hi - lo + 4)
    for v in range(lo, hi):
        shell = char_shell(p, v)
        # f * char(p^v O*) integrated with d*x = (1 - 1/q)^-1 |x|^-1 dx
        vals = f.grid_values(lo, hi + 1)
        cell = Fraction(p) ** -(hi + 1)
        tot = sum((c for x, c in vals.items() if shell(x)), Cyc.rational(0))
        want = tot * cell * Fraction(p) ** v / (1 - Fraction(1, p))
        assert ser.get(v, Cyc.rational(0)) == want


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_unramified_gamma(p):
    ctx = PAdicContext(p)
    g = tate.tate_gamma(ctx, tate.TameCharacter(p))
    assert g.independent and g.tested >= 20
    assert g.gamma == (1 - X) / (1 - X.substitute(Fraction(1, p), -1))
    tw = tate.TameCharacter(p, 0, Cyc.rational(p))
    assert tate.tate_gamma(ctx, tw).gamma == tate.expected_gamma(ctx, tw)


@given(odd_primes, st.integers(1, 6))
def test_tame_gamma_is_gauss_monomial(p, index):
    ctx = PAdicContext(p)
    chi = tate.TameCharacter(p, index)
    if chi.is_unramified:
        return
    g = tate.tate_gamma(ctx, chi)
    assert g.independent
    assert g.gamma == X * tate.gauss_sum(p, chi.inverse())


@given(odd_primes)
def test_quadratic_gauss_sum(p):
    chi = tate.quadratic_character(p)
    gs = tate.gauss_sum(p, chi)
    assert abs(gs.to_complex() - O.gauss_sum_numeric(p, O.legendre_values(p))) < 1e-9
    sign = 1 if p % 4 == 1 else -1
    assert gs * gs == Cyc.rational(sign * p)


def test_no_quadratic_character_at_two():
    with pytest.raises(ValueError):
        tate.quadratic_character(2)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_basic_decomposition(p):
    q = Fraction(p)
    m = tate.basic_membership(PAdicContext(p), RadialFunction.ball(p, 0))
    assert m.verified
    assert m.f2_coefficients == {0: 1 / (1 - 1 / q)}
    assert m.f1_coefficients == {-1: (1 / q) / (1 - 1 / q)}
    assert m.unit_coefficient_identity is False
    if p == 2:
        assert m.f2_coefficients == {0: 2}


def test_decomposition_of_function_away_from_zero():
    phi = RadialFunction.shell(3, 1) + RadialFunction.shell(3, -1) * 2
    m = tate.basic_membership(PAdicContext(3), phi)
    assert m.f2_coefficients == {} and m.f1_coefficients == {-1: 2, 1: 1}


def test_radial_fourier_matches_schwartz():
    for p in (2, 3):
        f = RadialFunction.shell(p, 1) * 2 + RadialFunction.ball(p, -1)
        assert f.fourier().schwartz() == f.schwartz().fourier()


def test_sqrt_power():
    for p in (2, 3, 5, 7):
        r = sqrt_power(p, 1)
        assert r * r == Cyc.rational(p)
        assert sqrt_power(p, -3) * sqrt_power(p, 3) == ONE
