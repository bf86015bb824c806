"""Root data, lattices and Weyl actions."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monoidkit.rootdata import (GL, apply, build_root_datum, gl2_sym_cover, half_sum_positive, levi_subdatum,
                                maximal_levis, pairing, torus, weyl_group, weyl_orbit)

coords = st.lists(st.integers(-6, 6), min_size=4, max_size=4)
gl_sizes = st.integers(1, 4)
cover_degrees = st.integers(1, 6)


def test_gl2_datum():
    d = build_root_datum({"type": "GL", "n": 2})
    assert d.cochar_lattice.columns() == [(1, 0), (0, 1)]
    assert set(d.roots) == {(1, -1), (-1, 1)}
    assert d.check()


def test_sym_cover_char_lattice():
    d = build_root_datum({"type": "gl2_sym_cover", "n": 2})
    assert d.char_lattice.columns() == [(1, 0), (Fraction(1, 2), Fraction(1, 2))]
    assert d.check()


def test_torus_has_trivial_weyl_group():
    d = build_root_datum({"type": "torus", "rank": 3})
    assert d.roots == ()
    assert len(weyl_group(d)) == 1


@pytest.mark.parametrize("bad", [{"type": "SO", "n": 3}, {"type": "gl2_sym_cover", "n": 0}, {}])
def test_bad_descriptors(bad):
    with pytest.raises(ValueError):
        build_root_datum(bad)


def test_weyl_orbits():
    assert weyl_orbit(GL(2), (1, 0)) == {(1, 0), (0, 1)}
    assert len(weyl_orbit(GL(3), (1, 0, 0))) == 3
    for n in range(1, 5):
        d = gl2_sym_cover(n)
        nu = d.char_lattice.to_coords((Fraction(1, n), Fraction(1, n)))
        assert weyl_orbit(d, nu, side="char") == {nu}


def test_pairings():
    d = GL(2)
    assert pairing(d, (1, -1), (1, 0)) == 1
    assert pairing(torus(2), (1, 1), (2, 3)) == 5
    for n in range(1, 6):
        d = gl2_sym_cover(n)
        nu = d.char_lattice.to_coords((Fraction(1, n), Fraction(1, n)))
        for k in range(n + 1):
            mu = d.cochar_lattice.to_coords((n - k, k))
            assert pairing(d, nu, mu) == 1


def test_half_sum_positive():
    assert half_sum_positive(GL(2)) == (Fraction(1, 2), Fraction(-1, 2))
    assert half_sum_positive(GL(3)) == (1, 0, -1)
    assert half_sum_positive(torus(2)) == (0, 0)


def test_levis():
    assert levi_subdatum(GL(2), ()).datum.roots == ()
    assert len(weyl_group(levi_subdatum(GL(3), (0,)).datum)) == 2
    assert len(weyl_group(levi_subdatum(GL(4), (0, 2)).datum)) == 4
    assert len(maximal_levis(GL(4))) == 3
    with pytest.raises(ValueError):
        levi_subdatum(GL(2), (5,))


def test_levi_roots_are_parent_roots():
    d = GL(4)
    for L in maximal_levis(d):
        assert set(L.datum.roots) <= set(d.roots)
        assert weyl_group(L.datum) <= weyl_group(d)


@given(gl_sizes, coords, coords)
def test_weyl_generators_preserve_pairing(n, chi, mu):
    d = GL(n)
    chi, mu = tuple(chi[:n]), tuple(mu[:n])
    for g, h in zip(d.weyl_gens, d.char_weyl_gens()):
        assert d.pairing(apply(h, chi), apply(g, mu)) == d.pairing(chi, mu)


@given(gl_sizes, coords)
def test_weyl_orbit_is_stable(n, v):
    d = GL(n)
    orb = weyl_orbit(d, tuple(v[:n]))
    for g in d.weyl_gens:
        assert {apply(g, x) for x in orb} == orb


@given(cover_degrees)
def test_sym_cover_lattices_are_dual(n):
    d = gl2_sym_cover(n)
    chars, cochars = d.char_lattice.columns(), d.cochar_lattice.columns()
    gram = [[sum(a * b for a, b in zip(x, y)) for y in cochars] for x in chars]
    assert gram == [[1, 0], [0, 1]]
    assert all(sum(cochars[0]) % n == 0 and sum(c) % n == 0 for c in cochars)
