"""Locally constant compactly supported functions on Q_p^n, stored as sums of twisted boxes.

A term coef * psi(<a, x - c>) * [x - c in p^m_1 O x ... x p^m_n O] is keyed by
(center c, levels m, phase a).  Centers are canonical representatives modulo
p^m and phases canonical modulo p^-m, so equal terms merge.  The additive
character is psi(y) = exp(2 pi i {y}_p): trivial on O, nontrivial on p^-1 O.
Measures: vol(O, dx) = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cyclo import Cyc, ONE, ZERO

INF = float("inf")


def val(x, p):
    x = Fraction(x)
    if x == 0:
        return INF
    v, n, d = 0, x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def unit_part(x, p):
    return Fraction(x) / Fraction(p) ** val(x, p)


def residue(u, p, k=1):
    """A p-adic unit (or integer) rational reduced modulo p^k, as an int."""
    u = Fraction(u)
    m = p ** k
    return u.numerator * pow(u.denominator, -1, m) % m


def reduce_mod(c, m, p):
    """Canonical representative of c + p^m O: N p^v with 0 <= N < p^(m - v)."""
    c = Fraction(c)
    v = val(c, p)
    if v >= m:
        return Fraction(0)
    u = unit_part(c, p)
    return Fraction(residue(u, p, m - v)) * Fraction(p) ** v


def frac_part(y, p):
    """{y}_p = r / p^k in [0, 1)."""
    y = Fraction(y)
    v = val(y, p)
    if v >= 0:
        return Fraction(0)
    return reduce_mod(y, 0, p)


_PSI = {}


def psi(y, p):
    f = frac_part(y, p)
    if f == 0:
        return ONE
    key = (f, p)
    out = _PSI.get(key)
    if out is None:
        out = Cyc.root(f.numerator, f.denominator)
        _PSI[key] = out
    return out


@dataclass(frozen=True)
class PAdicContext:
    """Residue field size q = p (prime); psi has conductor O; vol(O) = vol(O*, d*x) = 1."""
    q: int

    def __post_init__(self):
        if self.q < 2 or any(self.q % d == 0 for d in range(2, int(self.q ** 0.5) + 1)):
            raise ValueError("q must be a prime")

    @property
    def p(self):
        return self.q

    def vol_ball(self, m):
        return Fraction(1, self.q) ** m

    def mult_measure_factor(self):
        """d*x = (1 - 1/q)^-1 dx / |x|."""
        return 1 / (1 - Fraction(1, self.q))


def _canon(coef, center, level, phase, p):
    c2, a2 = [], []
    adj = Fraction(0)
    for c, m, a in zip(center, level, phase):
        a = reduce_mod(a, -m, p) if a else Fraction(0)
        r = reduce_mod(c, m, p)
        adj += a * (r - Fraction(c))
        c2.append(r)
        a2.append(a)
    if adj:
        coef = coef * psi(adj, p)
    return coef, (tuple(c2), tuple(level), tuple(a2))


class SchwartzFunction:
    def __init__(self, p, dim, terms=None):
        self.p = p
        self.dim = dim
        self.terms = {}
        for key, coef in (terms or {}).items():
            self._add_term(coef, *key)

    @classmethod
    def box(cls, p, center, level, coef=ONE, phase=None):
        dim = len(center)
        level = (level,) * dim if isinstance(level, int) else tuple(level)
        phase = tuple(Fraction(x) for x in phase) if phase else (Fraction(0),) * dim
        f = cls(p, dim)
        f._add_term(Cyc.coerce(coef), tuple(Fraction(x) for x in center), level, phase)
        return f

    def _add_term(self, coef, center, level, phase):
        coef, key = _canon(Cyc.coerce(coef), center, level, phase, self.p)
        cur = self.terms.get(key)
        new = coef if cur is None else cur + coef
        if new:
            self.terms[key] = new
        elif cur is not None:
            del self.terms[key]

    def copy(self):
        out = SchwartzFunction(self.p, self.dim)
        out.terms = dict(self.terms)
        return out

    def __add__(self, other):
        self._check(other)
        out = self.copy()
        for key, coef in other.terms.items():
            out._add_term(coef, *key)
        return out

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        s = Cyc.coerce(s)
        out = SchwartzFunction(self.p, self.dim)
        if s:
            out.terms = {k: c * s for k, c in self.terms.items()}
        return out

    __rmul__ = __mul__

    def _check(self, other):
        if (self.p, self.dim) != (other.p, other.dim):
            raise ValueError("incompatible Schwartz functions")

    def is_zero_structurally(self):
        return not self.terms

    def __call__(self, x):
        p = self.p
        out = ZERO
        for (c, m, a), coef in self.terms.items():
            if all(val(Fraction(xi) - ci, p) >= mi for xi, ci, mi in zip(x, c, m)):
                ph = sum((ai * (Fraction(xi) - ci) for ai, xi, ci in zip(a, x, c)), Fraction(0))
                out = out + (coef * psi(ph, p) if ph else coef)
        return out

    def tensor(self, other):
        self_p = self.p
        out = SchwartzFunction(self_p, self.dim + other.dim)
        for (c1, m1, a1), k1 in self.terms.items():
            for (c2, m2, a2), k2 in other.terms.items():
                out._add_term(k1 * k2, c1 + c2, m1 + m2, a1 + a2)
        return out

    def fourier(self):
        """x -> integral f(y) psi(<x, y>) dy, box by box."""
        p = self.p
        out = SchwartzFunction(p, self.dim)
        for (c, m, a), coef in self.terms.items():
            factor = coef
            shift = sum((ai * ci for ai, ci in zip(a, c)), Fraction(0))
            if shift:
                factor = factor * psi(-shift, p)
            factor = factor * Fraction(p) ** (-sum(m))
            out._add_term(factor, tuple(-ai for ai in a), tuple(-mi for mi in m), c)
        return out

    def reflect(self):
        out = SchwartzFunction(self.p, self.dim)
        for (c, m, a), coef in self.terms.items():
            out._add_term(coef, tuple(-x for x in c), m, tuple(-x for x in a))
        return out

    def permute(self, perm):
        """New coordinate i is old coordinate perm[i]."""
        out = SchwartzFunction(self.p, self.dim)
        for (c, m, a), coef in self.terms.items():
            out._add_term(coef, tuple(c[j] for j in perm), tuple(m[j] for j in perm),
                          tuple(a[j] for j in perm))
        return out

    def integral(self):
        out = ZERO
        for (c, m, a), coef in self.terms.items():
            if not any(a):
                out = out + coef * Fraction(self.p) ** (-sum(m))
        return out

    def specialize(self, i, value):
        """Restrict coordinate i to a fixed value."""
        p = self.p
        value = Fraction(value)
        out = SchwartzFunction(p, self.dim - 1)
        for (c, m, a), coef in self.terms.items():
            if val(value - c[i], p) >= m[i]:
                k = coef * psi(a[i] * (value - c[i]), p) if a[i] else coef
                out._add_term(k, c[:i] + c[i + 1:], m[:i] + m[i + 1:], a[:i] + a[i + 1:])
        return out

    def integrate_out(self, i):
        p = self.p
        out = SchwartzFunction(p, self.dim - 1)
        for (c, m, a), coef in self.terms.items():
            if not a[i]:
                out._add_term(coef * Fraction(p) ** (-m[i]), c[:i] + c[i + 1:], m[:i] + m[i + 1:],
                              a[:i] + a[i + 1:])
        return out

    def refine(self, level):
        """Split every box into boxes of the given uniform level (>= its own levels)."""
        p = self.p
        out = SchwartzFunction(p, self.dim)
        for (c, m, a), coef in self.terms.items():
            if any(mi > level for mi in m):
                raise ValueError("cannot refine to a coarser level")
            ranges = [range(p ** (level - mi)) for mi in m]
            for ks in product(*ranges):
                cc = tuple(ci + Fraction(p) ** mi * k for ci, mi, k in zip(c, m, ks))
                ph = sum((ai * (x - ci) for ai, x, ci in zip(a, cc, c)), Fraction(0))
                out._add_term(coef * psi(ph, p) if ph else coef, cc, (level,) * self.dim, a)
        return out

    def pullback(self, g):
        """x -> f(g x) for g in GL_n(Z_p) given by a rational matrix."""
        from ..linalg import det, inverse, transpose
        p = self.p
        n = self.dim
        g = [[Fraction(x) for x in r] for r in g]
        if any(val(x, p) < 0 for r in g for x in r):
            raise ValueError("matrix is not integral")
        if val(det(g), p) != 0:
            raise ValueError("matrix is not invertible over the integers")
        ginv = inverse(g)
        gt = transpose(g)
        out = SchwartzFunction(p, n)
        for (c, m, a), coef in self.terms.items():
            if len(set(m)) == 1:
                terms = {(c, m, a): coef}
            else:
                terms = SchwartzFunction(p, n, {(c, m, a): coef}).refine(max(m)).terms
            for (cc, mm, aa), k in terms.items():
                nc = tuple(sum(ginv[i][j] * cc[j] for j in range(n)) for i in range(n))
                na = tuple(sum(gt[i][j] * aa[j] for j in range(n)) for i in range(n))
                out._add_term(k, nc, mm, na)
        return out

    def levels(self):
        """(coarse, fine): support inside p^coarse O^n, constant on p^fine O^n cosets."""
        lo, hi = None, None
        for (c, m, a), _ in self.terms.items():
            for ci, mi, ai in zip(c, m, a):
                vc = val(ci, self.p)
                l = min(mi, vc) if vc != INF else mi
                h = max(mi, -val(ai, self.p)) if ai else mi
                lo = l if lo is None else min(lo, l)
                hi = h if hi is None else max(hi, h)
        return (0, 0) if lo is None else (lo, max(hi, lo))

    def _index(self):
        groups = {}
        for (c, m, a), coef in self.terms.items():
            groups.setdefault((m, a), {})[c] = groups.get((m, a), {}).get(c, ZERO) + coef
        return groups

    def grid_values(self, coarse, fine, limit=300000):
        """Values on representatives of p^coarse O^n / p^fine O^n."""
        p = self.p
        count = p ** ((fine - coarse) * self.dim)
        if count > limit:
            raise ValueError(f"grid of {count} points exceeds the limit")
        groups = self._index()
        base = Fraction(p) ** coarse
        reps = [base * k for k in range(p ** (fine - coarse))]
        red_cache = {}

        def red(x, m):
            key = (x, m)
            r = red_cache.get(key)
            if r is None:
                r = reduce_mod(x, m, p)
                red_cache[key] = r
            return r
        out = {}
        for x in product(reps, repeat=self.dim):
            v = ZERO
            for (m, a), table in groups.items():
                key = tuple(red(xi, mi) for xi, mi in zip(x, m))
                coef = table.get(key)
                if coef is not None:
                    ph = sum((ai * (xi - ci) for ai, xi, ci in zip(a, x, key)), Fraction(0))
                    v = v + (coef * psi(ph, p) if ph else coef)
            out[x] = v
        return out

    def equals(self, other, limit=300000):
        """Exact equality, by evaluation on a grid fine enough for both functions."""
        diff = self - other
        if not diff.terms:
            return True, None
        lo, hi = diff.levels()
        for x, v in diff.grid_values(lo, hi, limit).items():
            if v:
                return False, x
        return True, None

    def __eq__(self, other):
        return self.equals(other)[0]

    __hash__ = None

    def l2_norm_squared(self):
        lo, hi = self.levels()
        cell = Fraction(self.p) ** (-hi * self.dim)
        total = ZERO
        for v in self.grid_values(lo, hi).values():
            if v:
                total = total + v * v.conjugate() * cell
        return total


def char_ball(p, m, dim=1, center=None, coef=ONE):
    center = center or (0,) * dim
    return SchwartzFunction.box(p, center, m, coef)


def char_shell(p, m):
    """Indicator of p^m O* in dimension one."""
    return char_ball(p, m) - char_ball(p, m + 1)
