"""Weight cones, characters, toric ideals, Levi restriction, shifts and charts."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monoidkit import oracles as O
from monoidkit.monoid import (ambient_blowup_count, character_semigroup, compute_shifts, find_nu,
                              from_ambient, gl_std_shift_identities, is_minimal_orbit_generating_set,
                              levi_restriction, monoid_presentation, monomial_charts, orbit_generators,
                              orbits_generate, renner_datum, rook_monoid, rook_product, std_weights,
                              sym_equation_check, sym_weights, toric_ideal, weight_cone,
                              weight_data_from_json)
from monoidkit.rootdata import GL, is_dominant, levi_subdatum, torus

sym_n = st.integers(1, 5)


def ambient(w, pts):
    return [tuple(w.datum.char_lattice.to_ambient(x)) for x in pts]


@pytest.mark.parametrize("n", range(1, 7))
def test_sym_family(n):
    w = sym_weights(n)
    third = (Fraction(1, n), Fraction(1, n))
    sg = character_semigroup(w)
    assert set(ambient(w, sg.generators)) == {(1, 0), (0, 1), third}
    assert tuple(w.datum.char_lattice.to_ambient(find_nu(w).coords)) == third
    assert str(toric_ideal(sg.generators)) == ("XY-Z" if n == 1 else f"XY-Z^{n}")
    assert monoid_presentation(w).equations == ["X1X4-X2X3=" + ("X5" if n == 1 else f"X5^{n}")]
    # for n = 1, nu = (1,0) + (0,1) is decomposable and drops out of a minimal set
    assert ambient(w, orbit_generators(w)) == ([third] if n > 1 else []) + [(1, 0)]
    assert sym_equation_check(n)


def test_weight_cones():
    xi = weight_cone(sym_weights(3))
    assert sorted(map(tuple, xi.ambient_rays())) == [(0, 3), (3, 0)]
    assert set(weight_cone(std_weights(2)).rays) == {(1, 0), (0, 1)}
    assert not weight_cone(from_ambient(GL(2), [(1, 0), (-1, 0)])).strict_convex


def test_find_nu():
    assert find_nu(std_weights(1)).coords == (1,)
    nu = find_nu(std_weights(3))
    assert nu.coords == (1, 1, 1) and nu.integral
    assert find_nu(from_ambient(GL(2), [(1, 0), (-1, 0)])) is None


def test_gl1_semigroup():
    w = std_weights(1)
    assert character_semigroup(w).generators == ((1,),)
    assert orbit_generators(w) == [(1,)]
    assert monoid_presentation(w).equations == ["A^1"]
    with pytest.raises(ValueError):
        character_semigroup(from_ambient(GL(1), [(1,), (-1,)]))


def test_torus_orbit_generators_are_hilbert_basis():
    w = from_ambient(torus(2), [(1, 0), (0, 1)])
    assert orbit_generators(w) == [(1, 0), (0, 1)]


def test_toric_ideals():
    assert str(toric_ideal([(2, 0), (1, 1), (0, 2)])) == "XZ-Y^2"
    assert str(toric_ideal([(1, 0), (0, 1)])) == "0"


def test_gl3_is_abstract():
    pres = monoid_presentation(std_weights(3))
    assert pres.kind == "abstract" and pres.datum is not None


def test_weights_from_json():
    w = weight_data_from_json({"group": {"type": "torus", "rank": 2}, "weights": [[[1, 1], [0, 1]], [[0, 1], [1, 1]]]})
    assert w.weights == ((1, 0), (0, 1))
    assert weight_data_from_json({"builtin": "sym", "n": 2}).weights == sym_weights(2).weights
    with pytest.raises(ValueError):
        weight_data_from_json({"builtin": "adjoint", "n": 2})


def test_levi_restrictions():
    lr = levi_restriction(std_weights(2), levi_subdatum(GL(2), ()))
    assert [m for _, m in lr.weight_orbits] == [[(1, 0)], [(0, 1)]] or \
        sorted(m for _, m in lr.weight_orbits) == [[(0, 1)], [(1, 0)]]
    lr = levi_restriction(std_weights(3), levi_subdatum(GL(3), (0,)))
    assert sorted(m for _, m in lr.weight_orbits) == [[(0, 0, 1)], [(0, 1, 0), (1, 0, 0)]]
    for n in range(1, 5):
        w = sym_weights(n)
        lr = levi_restriction(w, levi_subdatum(w.datum, ()))
        assert len(lr.weight_orbits) == n + 1 and lr.same_toric_variety


def test_levi_restriction_to_whole_group_is_identity():
    w = std_weights(3)
    lr = levi_restriction(w, levi_subdatum(w.datum, w.datum.simple_roots))
    assert lr.weight_data.weights == w.weights
    assert [m for _, m in lr.weight_orbits] == [sorted(set(w.weights))]


def test_restrictions_compose():
    w = std_weights(3)
    direct = levi_restriction(w, levi_subdatum(w.datum, ()))
    mid = levi_restriction(w, levi_subdatum(w.datum, (0,)))
    via = levi_restriction(mid.weight_data, levi_subdatum(mid.weight_data.datum, ()))
    assert sorted(direct.weight_orbits) == sorted(via.weight_orbits)


def test_shift_examples():
    for n in range(1, 6):
        assert compute_shifts(std_weights(n)).two_eta_g_lambda == n - 1
    assert compute_shifts(from_ambient(torus(2), [(1, 0), (0, 1)])).two_eta_g_lambda == 0
    rec = compute_shifts(std_weights(2), levi_subdatum(GL(2), ()))
    assert rec.nu_gl_half == (Fraction(1, 2), Fraction(1, 2))
    assert rec.delta_p == (1, -1)
    with pytest.raises(ValueError):
        compute_shifts(from_ambient(GL(2), [(1, 0), (-1, 0)]))


@pytest.mark.parametrize("n", range(2, 6))
def test_gl_levi_shift_identities(n):
    assert all(ok for _, _, ok in gl_std_shift_identities(n))


def test_sym2_ambient_chart_jacobian():
    charts = monomial_charts(renner_datum(sym_weights(2)))
    amb = [c for c in charts if c.kind == "ambient"]
    assert [c.exponents for c in amb] == [((1, 0, 1), (0, 1, 1), (0, 0, 1))]
    assert amb[0].jacobian == (0, 0, 2) and amb[0].equation == "xy=1"


def test_smooth_chart_is_identity():
    (chart,) = monomial_charts(renner_datum(std_weights(2)))
    assert chart.kind == "toric" and chart.jacobian == (0, 0)
    # the Hilbert basis pulls back to the coordinate functions; nu is carried as a last generator
    assert sorted(chart.exponents[:2]) == [(0, 1), (1, 0)] and chart.exponents[2] == (1, 1)


def test_sym3_toric_charts():
    charts = [c for c in monomial_charts(renner_datum(sym_weights(3))) if c.kind == "toric"]
    assert [c.cone for c in charts] == [((0, 1), (1, 1)), ((1, 1), (2, 1)), ((2, 1), (3, 1))]
    assert all(c.jacobian_det == 1 for c in charts)
    assert ambient_blowup_count(3) == 1 and ambient_blowup_count(6) == 3


@pytest.mark.parametrize("n,size", [(1, 2), (2, 7), (3, 34)])
def test_rook_monoid(n, size):
    r = rook_monoid(n)
    assert r.size == size == O.rook_brute_count(n)
    assert r.unit_count == [1, 2, 6][n - 1]


def test_rook_monoid_range_and_closure():
    with pytest.raises(ValueError):
        rook_monoid(0)
    elems = set(rook_monoid(2).elements)
    assert all(rook_product(a, b) in elems for a in elems for b in elems)


@given(sym_n)
def test_nu_lies_in_dual_cone(n):
    w = sym_weights(n)
    sg = character_semigroup(w)
    nu = tuple(int(x) for x in find_nu(w).coords)
    assert sg.cone.contains(nu)
    assert all(w.datum.pairing(find_nu(w).coords, mu) == 1 for mu in w.weights)


@given(sym_n)
def test_orbit_generators_dominant_and_minimal(n):
    w = sym_weights(n)
    gens = orbit_generators(w)
    assert all(is_dominant(w.datum, g) for g in gens)
    assert is_minimal_orbit_generating_set(w, gens)


@given(sym_n)
def test_weyl_orbits_of_hilbert_basis_generate(n):
    w = sym_weights(n)
    assert orbits_generate(w, list(character_semigroup(w).hilbert_basis), bound=8)


@given(sym_n)
def test_toric_ideal_vanishes_on_parametrization(n):
    ideal = toric_ideal(character_semigroup(sym_weights(n)).generators)
    assert ideal.vanishes_on_parametrization()
    for a, b in ideal.binomials:
        lhs = tuple(sum(e * g[i] for e, g in zip(a, ideal.generators)) for i in range(2))
        rhs = tuple(sum(e * g[i] for e, g in zip(b, ideal.generators)) for i in range(2))
        assert lhs == rhs


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=2, max_size=4, unique=True))
def test_toric_ideal_binomials_balance(gens):
    gens = [g for g in gens if any(g)]
    if len(gens) < 2:
        return
    ideal = toric_ideal(gens)
    for a, b in ideal.binomials:
        for i in range(2):
            assert sum(e * g[i] for e, g in zip(a, gens)) == sum(e * g[i] for e, g in zip(b, gens))
