"""Vector partition counts, quasi-polynomial fits and chart integrability."""
from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from monoidkit import oracles as O
from monoidkit.basicfn import integrability_check, partition_table, quasi_polynomial_fit, vector_partition
from monoidkit.monoid import character_semigroup, find_nu, monomial_charts, renner_datum, sym_weights
from monoidkit.rootdata import apply

sym_n = st.integers(1, 4)
points = st.tuples(st.integers(-10, 10), st.integers(-10, 10))


def sym_gens(n):
    return character_semigroup(sym_weights(n)).generators


def coords(n, amb):
    return sym_weights(n).datum.char_lattice.to_coords(amb)


def test_partition_examples():
    g = sym_gens(2)
    assert vector_partition(g, coords(2, (1, 1))) == 2
    assert vector_partition(g, (0, 0)) == 1
    assert vector_partition(g, coords(2, ("1/2", "1/2"))) == 1


def test_partition_rejects_lines():
    with pytest.raises(ValueError):
        vector_partition([(1, 0), (-1, 0)], (0, 0))


def test_sym2_diagonal_closed_form():
    table = partition_table(sym_gens(2), 20)
    nu = tuple(int(x) for x in find_nu(sym_weights(2)).coords)
    for k in range(0, 21):
        lam = tuple(k * x for x in nu)
        if lam in table.entries:
            assert table.entries[lam] == k // 2 + 1
    fit = quasi_polynomial_fit(table, 2, 1, line=nu)
    assert fit.certified and fit.checked > 0


def test_free_generators_fit_constant():
    table = partition_table([(1, 0), (0, 1)], 10)
    assert set(table.entries.values()) == {1}
    assert quasi_polynomial_fit(table, 1, 0).certified


def test_sym3_diagonal_period_three():
    table = partition_table(sym_gens(3), 20)
    nu = tuple(int(x) for x in find_nu(sym_weights(3)).coords)
    assert quasi_polynomial_fit(table, 3, 1, line=nu).certified


def test_wrong_period_gives_witness():
    table = partition_table(sym_gens(2), 20)
    nu = tuple(int(x) for x in find_nu(sym_weights(2)).coords)
    fit = quasi_polynomial_fit(table, 1, 1, line=nu)
    assert not fit.certified and fit.witness is not None


def test_sym2_chart_integrable():
    rep = integrability_check(_ambient_chart(2), partition_table(sym_gens(2), 10), 2, 10)
    assert rep.convergent and rep.ratio < 1
    assert rep.partial_sums == sorted(rep.partial_sums)


def test_sym3_chart_integrable():
    assert integrability_check(_ambient_chart(3), partition_table(sym_gens(3), 10), 3, 10).convergent


def test_zero_jacobian_diverges():
    table = partition_table([(1, 0), (0, 1)], 6)
    rep = integrability_check((((1, 0), (0, 1)), (0, 0)), table, 2, 6)
    assert not rep.convergent and rep.witness


def _ambient_chart(n):
    return next(c for c in monomial_charts(renner_datum(sym_weights(n))) if c.kind == "ambient")


@given(sym_n, points)
def test_partition_matches_tally(n, lam):
    gens = sym_gens(n)
    tally = O.partition_tally(gens, 10)
    assert vector_partition(gens, lam) == tally.get(lam, 0)


@given(sym_n)
def test_table_is_weyl_invariant(n):
    w = sym_weights(n)
    table = partition_table(sym_gens(n), 8)
    for g in w.datum.char_weyl_gens():
        for lam, c in table.entries.items():
            assert table.entries.get(apply(g, lam), c) == c
    assert table.entries[(0, 0)] == 1


@given(sym_n)
def test_fit_reproduces_table_on_line(n):
    table = partition_table(sym_gens(n), 20)
    nu = tuple(int(x) for x in find_nu(sym_weights(n)).coords)
    fit = quasi_polynomial_fit(table, n, 1, line=nu)
    assert fit.certified
    k = 0
    while tuple(k * x for x in nu) in table.entries:
        assert fit(k) == table.entries[tuple(k * x for x in nu)]
        k += 1
