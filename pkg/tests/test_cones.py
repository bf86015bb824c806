"""Cones: normal form, duality, Hilbert bases, smooth subdivision."""
from __future__ import annotations

import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from monoidkit import cones as C
from monoidkit import oracles as O
from monoidkit.basicfn import vector_partition
from monoidkit.monoid import sym_weights, weight_cone
from monoidkit.rootdata import LatticeBasis

seeds = st.integers(0, 10 ** 6)
dims = st.sampled_from([2, 3])


def cone_of(rays):
    return C.normalize_cone(LatticeBasis.standard(len(rays[0])), rays)


def random_cone(seed, dim):
    return cone_of(O.random_cone_rays(random.Random(seed), dim))


def test_normalize_drops_interior_generators():
    assert set(cone_of([(2, 0), (0, 3), (1, 1)]).rays) == {(1, 0), (0, 1)}


def test_normalize_rejects_empty():
    with pytest.raises(ValueError):
        C.normalize_cone(LatticeBasis.standard(2), [])


def test_line_is_not_strictly_convex():
    assert not cone_of([(1, 0), (-1, 0), (0, 1)]).strict_convex


@pytest.mark.parametrize("n", range(1, 7))
def test_sym_weight_cone_smooth_only_for_n1(n):
    assert C.is_smooth(weight_cone(sym_weights(n))) == (n == 1)


def test_smooth_input_is_unchanged():
    c = cone_of([(1, 0), (0, 1)])
    fan = C.resolve_to_smooth_fan(c)
    assert fan.rays == [(0, 1), (1, 0)]
    assert len(fan.cones) == 1


def test_resolution_of_multiplicity_two():
    fan = C.resolve_to_smooth_fan(cone_of([(1, 0), (1, 2)]))
    assert fan.rays == [(1, 0), (1, 1), (1, 2)]
    assert fan.multiplicities() == [1, 1]


def test_resolution_of_multiplicity_three():
    c = cone_of([(1, 0), (1, 3)])
    fan = C.resolve_to_smooth_fan(c)
    assert [r for r in fan.rays if r not in c.rays] == [(1, 1), (1, 2)]
    assert fan.rays == O.hj_resolution_rays((1, 0), (1, 3))


def test_certificate_strictly_decreases_multiplicity():
    fan = C.resolve_to_smooth_fan(cone_of([(1, 0), (2, 7)]))
    assert fan.certificate
    for step in fan.certificate:
        assert all(m < min(step["replaced"]) for m in step["added"])


@given(seeds, dims)
def test_double_dual(seed, dim):
    c = random_cone(seed, dim)
    cc = C.dual_cone(C.dual_cone(c), c.lattice)
    assert set(cc.rays) == set(c.rays)


@given(seeds, dims)
def test_hilbert_basis_matches_brute_force(seed, dim):
    rays = O.random_cone_rays(random.Random(seed), dim)
    assert sorted(C.hilbert_basis(cone_of(rays))) == O.brute_hilbert_basis(rays)


@given(seeds)
def test_hilbert_basis_generates_box_points(seed):
    c = random_cone(seed, 2)
    hb = C.hilbert_basis(c)
    for v in product(range(-8, 9), repeat=2):
        if any(v) and c.contains(v):
            assert vector_partition(hb, v) > 0


@given(seeds)
def test_two_dim_resolution_matches_continued_fractions(seed):
    c = random_cone(seed, 2)
    fan = C.resolve_to_smooth_fan(c)
    assert fan.rays == O.hj_resolution_rays(*c.rays)
    assert set(fan.multiplicities()) == {1}


@given(seeds, dims)
def test_fan_covers_cone_with_face_intersections(seed, dim):
    c = random_cone(seed, dim)
    fan = C.resolve_to_smooth_fan(c)
    assert set(fan.multiplicities()) == {1}
    assert set(c.rays) <= set(fan.rays)
    members = [cone_of(list(k)) for k in fan.cones]
    for v in product(range(-4, 5), repeat=dim):
        inside = [m for m in members if m.contains(v)]
        assert bool(inside) == c.contains(v)
        # a point in two member cones lies on a common face: the span of their shared rays
        for a, b in zip(inside, inside[1:]):
            shared = set(a.rays) & set(b.rays)
            assert not a.interior_contains(v) or not b.interior_contains(v)
            if not shared:
                assert not any(v)
