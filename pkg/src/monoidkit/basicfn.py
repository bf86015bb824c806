"""Vector partition functions, quasi-polynomial fits, and a chart-level integrability check."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import log

from .linalg import frac, rank, solve
from .monoid import _positive_grading


def _grading(gens):
    if any(not any(g) for g in gens):
        raise ValueError("zero generator: partition counts are infinite")
    try:
        phi = _positive_grading(gens)
    except ValueError:
        raise ValueError("generators span a cone containing a line: counts may be infinite") from None
    if any(sum(a * b for a, b in zip(phi, g)) <= 0 for g in gens):
        raise ValueError("generators are not strictly on one side of a hyperplane")
    return phi


class PartitionCounter:
    """Memoised count of nonnegative integer solutions of sum a_i g_i = lam."""

    def __init__(self, gens):
        self.gens = [tuple(int(x) for x in g) for g in gens]
        self.phi = _grading(self.gens)
        self.deg = [sum(a * b for a, b in zip(self.phi, g)) for g in self.gens]
        self._memo = {}

    def __call__(self, lam):
        return self._count(len(self.gens) - 1, tuple(int(x) for x in lam))

    def _count(self, i, lam):
        if not any(lam):
            return 1
        if i < 0:
            return 0
        key = (i, lam)
        if key in self._memo:
            return self._memo[key]
        level = sum(a * b for a, b in zip(self.phi, lam))
        g = self.gens[i]
        total = 0
        a = 0
        rest = lam
        while a * self.deg[i] <= level:
            total += self._count(i - 1, rest)
            a += 1
            rest = tuple(x - y for x, y in zip(rest, g))
        self._memo[key] = total
        return total


def vector_partition(gens, lam):
    return PartitionCounter(gens)(lam)


@dataclass
class PartitionTable:
    generators: list
    entries: dict  # lattice point -> count

    def to_json(self):
        return [[list(k), v] for k, v in sorted(self.entries.items())]


def partition_table(gens, bound, cone=None):
    """Counts on every point of the cone spanned by gens with coordinates in [-bound, bound]."""
    from . import cones as C
    from .rootdata import LatticeBasis
    counter = PartitionCounter(gens)
    dim = len(counter.gens[0])
    cone = cone or C.normalize_cone(LatticeBasis.standard(dim), counter.gens)
    entries = {}
    for lam in product(range(-bound, bound + 1), repeat=dim):
        if cone.contains(lam):
            entries[lam] = counter(lam)
    return PartitionTable(counter.gens, entries)


def _monomials(dim, degree):
    out = []
    for e in product(range(degree + 1), repeat=dim):
        if sum(e) <= degree:
            out.append(e)
    return sorted(out, key=lambda e: (sum(e), e))


def _eval_monomial(e, t):
    out = Fraction(1)
    for k, x in zip(e, t):
        out *= Fraction(x) ** k
    return out


@dataclass
class QuasiPolynomial:
    period: int
    degree: int
    monomials: list
    pieces: dict  # residue class -> coefficient list aligned with monomials
    certified: bool
    checked: int = 0
    witness: tuple = None  # (parameter, table value, fitted value) on failure
    line: tuple = None

    def __call__(self, t):
        t = (t,) if isinstance(t, int) else tuple(t)
        coeffs = self.pieces[tuple(x % self.period for x in t)]
        return sum((c * _eval_monomial(e, t) for c, e in zip(coeffs, self.monomials)), Fraction(0))


def quasi_polynomial_fit(table, period, degree, line=None, chamber=None):
    """Fit a quasi-polynomial per residue class, interpolating on low points and checking the rest.

    With line=v the parameter is k for the points k*v; otherwise it is the
    lattice point itself, restricted to the chamber {x : <c, x> >= 0 for c in chamber}.
    """
    data = {}
    if line is not None:
        v = tuple(int(x) for x in line)
        for lam, val in table.entries.items():
            ks = {Fraction(a, b) for a, b in zip(lam, v) if b}
            if len(ks) == 1 and all(a == 0 for a, b in zip(lam, v) if not b):
                k = ks.pop()
                if k.denominator == 1 and k >= 0:
                    data[(int(k),)] = val
    else:
        for lam, val in table.entries.items():
            if chamber is None or all(sum(a * b for a, b in zip(c, lam)) >= 0 for c in chamber):
                data[lam] = val
    if not data:
        raise ValueError("no table points in the requested region")
    dim = len(next(iter(data)))
    monos = _monomials(dim, degree)
    classes = {}
    for t in sorted(data, key=lambda t: (sum(abs(x) for x in t), t)):
        classes.setdefault(tuple(x % period for x in t), []).append(t)
    pieces = {}
    checked = 0
    for res in product(range(period), repeat=dim):
        pts = classes.get(res, [])
        chosen = []
        for t in pts:
            trial = chosen + [t]
            if rank([[_eval_monomial(e, s) for e in monos] for s in trial]) == len(trial):
                chosen = trial
            if len(chosen) == len(monos):
                break
        if len(chosen) < len(monos):
            raise ValueError(f"insufficient table depth for residue class {res}")
        coeffs = solve([[_eval_monomial(e, s) for e in monos] for s in chosen], [data[s] for s in chosen])
        pieces[res] = list(coeffs)
        for t in pts:
            fit = sum((c * _eval_monomial(e, t) for c, e in zip(coeffs, monos)), Fraction(0))
            checked += 1
            if fit != data[t]:
                return QuasiPolynomial(period, degree, monos, pieces, False, checked, (t, data[t], fit),
                                       tuple(line) if line is not None else None)
    return QuasiPolynomial(period, degree, monos, pieces, True, checked, None,
                           tuple(line) if line is not None else None)


@dataclass
class IntegrabilityReport:
    convergent: bool
    weights: tuple  # Jacobian valuation carried by each generator
    grading: tuple
    partial_sums: list  # S_0 .. S_depth, exact
    decay: Fraction  # c = min_j w_j / phi_j
    ratio: float = None  # r = q^(-c/2), with |S_M - S_(M-1)| <= C r^M
    constant: float = None
    witness: dict = field(default_factory=dict)


def integrability_check(chart, table, q, depth):
    """Weighted partial sums of the basic function against the chart Jacobian.

    chart is (E, d): E[j][i] is the exponent of chart coordinate i in generator j,
    d the Jacobian exponents.  Generator j then carries valuation w_j = <E_j, d>,
    a lattice point lam carries the least total over its partitions, and
    S_N = sum over grading(lam) <= N of N(lam) q^(-w(lam)).  With c = min w_j/phi_j > 0
    the increments are bounded by (M/phi_min + 1)^k q^(-c M) <= C r^M, r = q^(-c/2).
    """
    e, d = (chart.exponents, chart.jacobian) if hasattr(chart, "exponents") else chart
    q = frac(q)
    if q <= 1:
        raise ValueError("q must exceed 1")
    gens = table.generators
    if len(e) != len(gens):
        raise ValueError("chart rows do not match the generators")
    w = tuple(sum(frac(a) * frac(b) for a, b in zip(row, d)) for row in e)
    phi = _grading(gens)
    deg = [sum(a * b for a, b in zip(phi, g)) for g in gens]
    best = {}  # lattice point -> (least weight, count)
    for a in product(*(range(depth // dg + 1) for dg in deg)):
        if sum(x * y for x, y in zip(a, deg)) > depth:
            continue
        lam = tuple(sum(x * g[i] for x, g in zip(a, gens)) for i in range(len(gens[0])))
        wt = sum((x * y for x, y in zip(a, w)), Fraction(0))
        cur = best.get(lam)
        best[lam] = (wt, 1) if cur is None else (min(cur[0], wt), cur[1] + 1)
    for lam, (wt, cnt) in best.items():
        if lam in table.entries and table.entries[lam] != cnt:
            raise ValueError(f"table disagrees with recount at {lam}")
    levels = [Fraction(0)] * (depth + 1)
    for lam, (wt, cnt) in best.items():
        levels[sum(a * b for a, b in zip(phi, lam))] += cnt * _qpow(q, -wt)
    sums, s = [], Fraction(0)
    for x in levels:
        s += x
        sums.append(s)
    c = min(x / y for x, y in zip(w, deg))
    if c <= 0:
        j = min(range(len(w)), key=lambda i: w[i] / deg[i])
        incs = [sums[k] - sums[k - 1] for k in range(1, len(sums))]
        return IntegrabilityReport(False, w, tuple(phi), sums, c, None, None,
                                   {"generator": j, "weight": w[j], "increments": incs})
    k, dmin = len(gens), min(deg)
    r = float(q) ** (-float(c) / 2)
    # (M/dmin + 1)^k r^M is unimodal in M; scan past its peak
    peak = k / (-log(r)) + 1
    const, m = 0.0, 0
    while m <= peak + 1:
        const = max(const, (m / dmin + 1) ** k * r ** m)
        m += 1
    for mm in range(1, depth + 1):
        inc = sums[mm] - sums[mm - 1]
        if float(inc) > const * r ** mm * (1 + 1e-12):
            return IntegrabilityReport(False, w, tuple(phi), sums, c, r, const, {"level": mm, "increment": inc})
    return IntegrabilityReport(True, w, tuple(phi), sums, c, r, const)


def _qpow(q, e):
    if e.denominator != 1:
        raise ValueError("generator weights must be integral")
    return q ** int(e)
