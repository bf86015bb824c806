"""The brute-force reference routines on hand-checked inputs."""
from __future__ import annotations

from monoidkit import oracles as O


def test_brute_hilbert_basis_small():
    assert O.brute_hilbert_basis([(1, 0), (1, 2)]) == [(1, 0), (1, 1), (1, 2)]
    assert O.brute_hilbert_basis([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_hirzebruch_jung():
    assert O.hirzebruch_jung(3, 1) == [3]
    assert O.hirzebruch_jung(3, 2) == [2, 2]
    assert O.hj_resolution_rays((1, 0), (1, 3)) == [(1, 0), (1, 1), (1, 2), (1, 3)]


def test_partition_tally():
    tally = O.partition_tally([(1, 0), (1, 2), (1, 1)], 4)
    assert tally[(2, 2)] == 2 and tally[(0, 0)] == 1


def test_rook_counts():
    assert [O.rook_brute_count(n) for n in (1, 2, 3)] == [2, 7, 34]


def test_gauss_sum_numeric_magnitude():
    g = O.gauss_sum_numeric(7, O.legendre_values(7))
    assert abs(abs(g) ** 2 - 7) < 1e-9
