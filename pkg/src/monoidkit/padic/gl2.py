"""GL2 over Q_p: double cosets, Satake and Harish-Chandra transforms, spherical functions, zeta integrals.

Matrices in M2 are coordinatized row-major as (x11, x12, x21, x22).  K = GL2(Z_p)
has volume one for the Hecke algebra; dX on M2 gives M2(Z_p) volume one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from ..linalg import det, inverse, transpose
from .cyclo import Cyc, ONE, ZERO, sqrt_power
from .laurent import LaurentRational, LPoly
from .schwartz import INF, SchwartzFunction, val

TRACE_PERM = (0, 2, 1, 3)
COSET_LIMIT = 200000


def matrix_fourier(f):
    """x -> integral f(y) psi(tr(x y)) dy on M2."""
    return f.fourier().permute(TRACE_PERM)


def elementary_divisors(g, p):
    """(l1, l2), l1 >= l2, with g in K diag(p^l1, p^l2) K."""
    low = min(val(x, p) for r in g for x in r)
    if low == INF:
        raise ValueError("zero matrix")
    d = val(det(g), p)
    if d == INF:
        raise ValueError("singular matrix")
    return (d - low, low)


def _qhalf(p, k):
    """q^(k/2)."""
    return sqrt_power(p, k)


def double_coset_function(p, lam, limit=COSET_LIMIT):
    """char(K diag(p^a, p^b) K) as a Schwartz function on M2.

    X = p^b Y with Y primitive and v(det Y) = a - b; both conditions only
    depend on Y modulo p^(a-b+1).
    """
    a, b = lam
    if a < b:
        raise ValueError("label must be dominant")
    dd = a - b
    m = p ** (dd + 1)
    if m ** 4 > limit:
        raise ValueError("depth bound exceeded for double-coset enumeration")
    f = SchwartzFunction(p, 4)
    scale = Fraction(p) ** b
    pd = p ** dd
    for y in product(range(m), repeat=4):
        if all(x % p == 0 for x in y):
            continue
        dt = (y[0] * y[3] - y[1] * y[2]) % m
        if dt % pd or (dt // pd) % p == 0:
            continue
        f._add_term(ONE, tuple(scale * x for x in y), (a + 1,) * 4, (Fraction(0),) * 4)
    return f


def char_k(p):
    return double_coset_function(p, (0, 0))


def char_lattice(p, c=0):
    """char(p^c M2(Z_p))."""
    return SchwartzFunction.box(p, (0,) * 4, c)


@dataclass
class HeckeElement:
    """Finite combination of basis elements: double cosets K p^lam K (GL2) or T(O)-cosets (torus)."""
    p: int
    group: str
    terms: dict = field(default_factory=dict)

    @classmethod
    def basis(cls, p, lam, group="GL2", coef=ONE):
        return cls(p, group, {tuple(lam): Cyc.coerce(coef)})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return HeckeElement(self.p, self.group, {k: c for k, c in out.items() if c})

    def __mul__(self, c):
        c = Cyc.coerce(c)
        return HeckeElement(self.p, self.group, {k: v * c for k, v in self.terms.items() if v * c})

    __rmul__ = __mul__

    def __eq__(self, other):
        keys = set(self.terms) | set(other.terms)
        return self.group == other.group and all(
            self.terms.get(k, ZERO) == other.terms.get(k, ZERO) for k in keys)

    def get(self, lam):
        return self.terms.get(tuple(lam), ZERO)

    def is_w_invariant(self):
        return all(self.get(k[::-1]) == c for k, c in self.terms.items())

    def torus_product(self, other):
        """Product in the group algebra of the cocharacter lattice."""
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                out[k] = out.get(k, ZERO) + c1 * c2
        return HeckeElement(self.p, "T", {k: c for k, c in out.items() if c})

    def to_json(self):
        return {",".join(map(str, k)): c.to_json() for k, c in sorted(self.terms.items())}


def satake(h):
    """Sat(h)(p^mu) = delta^(1/2)(p^mu) * integral over N of h(p^mu n), in closed form per double coset."""
    p = h.p
    q = Fraction(p)
    out = HeckeElement(p, "T")
    for (l1, l2), c in h.terms.items():
        for a in range(l2, l1 + 1):
            d = l1 + l2 - a
            vol = q ** (a - l2) * (1 if min(a, d) == l2 else 1 - 1 / q)
            out = out + HeckeElement.basis(p, (a, d), "T", c * _qhalf(p, d - a) * vol)
    return out


def _n_integral_oracle(p, lam, mu):
    """integral over x of char(K p^lam K)([[p^a, p^a x], [0, p^d]]) dx, by enumerating x on a grid."""
    a, d = mu
    l2 = min(lam)
    if min(a, d) < l2:
        return Fraction(0)
    top = min(a, d) + 1
    total = Fraction(0)
    cell = Fraction(p) ** (a - top)
    for k in range(p ** (top - l2)):
        y = Fraction(p) ** l2 * k
        g = [[Fraction(p) ** a, y], [Fraction(0), Fraction(p) ** d]]
        if elementary_divisors(g, p) == tuple(sorted(lam, reverse=True)):
            total += cell
    return total


def satake_oracle(h):
    """Satake transform by direct enumeration of the unipotent integral."""
    p = h.p
    out = HeckeElement(p, "T")
    for lam, c in h.terms.items():
        s = sum(lam)
        for a in range(min(lam) - 1, max(lam) + 2):
            v = _n_integral_oracle(p, lam, (a, s - a))
            if v:
                out = out + HeckeElement.basis(p, (a, s - a), "T", c * _qhalf(p, s - 2 * a) * v)
    return out


def left_cosets(p, lam):
    """Representatives [[p^i, 0], [c, p^j]] of the cosets xK inside K p^lam K."""
    l1, l2 = lam
    out = []
    for i in range(l2, l1 + 1):
        j = l1 + l2 - i
        for k in range(p ** max(j - l2, 0)):
            c = Fraction(p) ** l2 * k
            g = [[Fraction(p) ** i, Fraction(0)], [c, Fraction(p) ** j]]
            if elementary_divisors(g, p) == (l1, l2):
                out.append(g)
    return out


def coset_volume(p, lam):
    """Number of cosets xK in K p^lam K: q^D (1 + 1/q) for D = l1 - l2 > 0."""
    dd = lam[0] - lam[1]
    return Fraction(1) if dd == 0 else Fraction(p) ** dd * (1 + Fraction(1, p))


def _mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def convolve(h1, h2):
    """(h1 * h2)(g) = sum over cosets xK in supp h1 of h1(x) h2(x^-1 g), on dominant g."""
    p = h1.p
    s1 = {sum(k) for k in h1.terms}
    s2 = {sum(k) for k in h2.terms}
    lo = min(min(k) for k in h1.terms) + min(min(k) for k in h2.terms)
    reps = {lam: [inverse(x) for x in left_cosets(p, lam)] for lam in h1.terms}
    out = {}
    for t in {a + b for a in s1 for b in s2}:
        for m2 in range(lo, t // 2 + 1):
            mu = (t - m2, m2)
            g = [[Fraction(p) ** mu[0], Fraction(0)], [Fraction(0), Fraction(p) ** mu[1]]]
            v = ZERO
            for lam, c in h1.terms.items():
                for xinv in reps[lam]:
                    v = v + c * h2.get(elementary_divisors(_mat_mul(xinv, g), p))
            if v:
                out[mu] = v
    return HeckeElement(p, "GL2", out)


def _h(alpha, k):
    """Complete homogeneous symmetric polynomial of degree k in two variables."""
    if k < 0:
        return ZERO
    a1, a2 = alpha
    return sum((a1 ** i * a2 ** (k - i) for i in range(k + 1)), ZERO)


def spherical_value(p, lam, alpha):
    """Zonal spherical function at p^lam for Satake parameters alpha, normalized f(1) = 1."""
    a1, a2 = (Cyc.coerce(x) for x in alpha)
    l1, l2 = lam
    dd = l1 - l2
    base = (a1 * a2) ** l2
    if dd == 0:
        return base
    q = Fraction(p)
    inner = _h((a1, a2), dd) - a1 * a2 / q * _h((a1, a2), dd - 2)
    return base * inner * _qhalf(p, -dd) / (1 + 1 / q)


def spherical_oracle(p, lam, alpha):
    """Average over the cosets xK in K p^lam K of the spherical vector of the principal series."""
    a1, a2 = (Cyc.coerce(x) for x in alpha)
    reps = left_cosets(p, lam)
    total = ZERO
    for x in reps:
        v2 = min(val(x[1][0], p), val(x[1][1], p))
        v1 = val(det(x), p) - v2
        total = total + a1 ** v1 * a2 ** v2 * _qhalf(p, v2 - v1)
    return total / len(reps)


@dataclass
class BiKFunction:
    """Bi-K-invariant function on GL2(Q_p): finitely many double cosets plus lattice indicators.

    lattices[c] is the coefficient of char(p^c M2(Z_p)) restricted to GL2.
    """
    p: int
    points: dict = field(default_factory=dict)
    lattices: dict = field(default_factory=dict)

    def value(self, lam):
        v = Cyc.coerce(self.points.get(tuple(lam), ZERO))
        for c, k in self.lattices.items():
            if min(lam) >= c:
                v = v + k
        return v


def _geo(a, k):
    """1 / (1 - a X^k)."""
    return LaurentRational.geometric(ONE, 0, a, k)


def zeta_gl2_spherical(phi, alpha):
    """Z(phi, f_alpha, s + 1/2) as a rational function of X = q^-s.

    The double-coset sum has terms vol(K p^lam K) f(p^lam) (q^(-1/2) X)^(l1 + l2);
    lattice components are summed as geometric series in l2 and l1 - l2.
    """
    p = phi.p
    q = Fraction(p)
    a1, a2 = (Cyc.coerce(x) for x in alpha)
    out = LaurentRational(LPoly())
    for lam, c in phi.points.items():
        w = coset_volume(p, lam) * spherical_value(p, lam, (a1, a2)) * _qhalf(p, -sum(lam))
        out = out + LaurentRational.monomial(Cyc.coerce(c) * w, sum(lam))
    if phi.lattices:
        central = a1 * a2 / q
        if a1 != a2:
            hgen = (_geo(a1, 1) * a1 - _geo(a2, 1) * a2) / (a1 - a2)
        else:
            hgen = _geo(a1, 1) * _geo(a1, 1)
        # sum over l1 - l2 of h_D - (central) h_(D-2), then over l2 of (central X^2)^l2
        dsum = hgen * (1 - LaurentRational.monomial(central, 2))
        body = dsum * _geo(central, 2)
        for c, k in phi.lattices.items():
            out = out + body * LaurentRational.monomial(Cyc.coerce(k) * central ** c, 2 * c)
    return out


def zeta_gl2_series(phi, alpha, order, oracle=True):
    """Truncated double-coset sum, coefficient of X^t for t < order (spherical values from the oracle)."""
    p = phi.p
    sph = spherical_oracle if oracle else spherical_value
    low = min([min(k) for k in phi.points] + list(phi.lattices) + [0])
    out = {}
    for t in range(2 * low, order):
        acc = ZERO
        for l2 in range(low, t // 2 + 1):
            lam = (t - l2, l2)
            v = phi.value(lam)
            if v:
                acc = acc + v * coset_volume(p, lam) * sph(p, lam, alpha) * _qhalf(p, -t)
        if acc:
            out[t] = acc
    return out


@dataclass
class HCResult:
    function: SchwartzFunction
    shift: bool
    exponent: tuple

    def value(self, mu):
        """Transform at diag(p^a, p^d)."""
        p = self.function.p
        a, d = mu
        g = self.function((Fraction(p) ** a, Fraction(p) ** d))
        # integral over N of Phi(n l) is |t2|^-1 times the upper-triangular slice integral
        e = 2 * d - 2 * (self.exponent[0] * a + self.exponent[1] * d)
        return g * _qhalf(p, int(e))

    def values(self, window):
        return {(a, d): self.value((a, d)) for a in range(-window, window + 1)
                for d in range(-window, window + 1)}


def gl2_shift_exponents():
    """(delta_P^(-1/2) exponent, combined rho-shift exponent) on character coordinates, from the monoid data."""
    from ..monoid import compute_shifts, std_weights
    from ..rootdata import levi_subdatum
    w = std_weights(2)
    rec = compute_shifts(w, levi_subdatum(w.datum, ()))
    return tuple(-x / 2 for x in rec.delta_p), rec.nu_half_delta_p_inv_half


def hc_transform(phi, shift=True):
    """Harish-Chandra transform of a Schwartz function on M2, restricted to the diagonal torus.

    function(t1, t2) = integral over y of phi([[t1, y], [0, t2]]) dy; values apply
    delta_P^(-1/2) (shift off) or the rho-shifted normalization (shift on).
    """
    if phi.dim != 4:
        raise ValueError("expected a function on M2")
    slice_ = phi.specialize(2, 0).integrate_out(1)
    plain, shifted = gl2_shift_exponents()
    return HCResult(slice_, shift, tuple(shifted if shift else plain))


def hc_satake_check(p, lam, window=3):
    """Unshifted Harish-Chandra transform of char(K p^lam K) against satake, on a window of the torus."""
    hc = hc_transform(double_coset_function(p, lam), shift=False)
    sat = satake(HeckeElement.basis(p, lam))
    for mu, v in hc.values(window).items():
        if v != sat.get(mu):
            return False, mu
    return True, None


def commutativity_check(phi):
    """Fourier-then-transform against transform-then-Fourier for the rho-shifted transform on GL2 std."""
    lhs = hc_transform(matrix_fourier(phi)).function
    rhs = hc_transform(phi).function.fourier()
    return lhs.equals(rhs)


def kron(a, b):
    return [[a[i][j] * b[k][l] for j in range(2) for l in range(2)] for i in range(2) for k in range(2)]


def two_sided(phi, left, right):
    """x -> phi(left x right), as a pullback along vec(L X R) = (L kron R^T) vec(X)."""
    return phi.pullback(kron(left, transpose(right)))


def equivariance_check(phi, h, k):
    """Fourier transform intertwines x -> phi(h^-1 x k) with x -> phi^(k^-1 x h)."""
    h = [[Fraction(x) for x in r] for r in h]
    k = [[Fraction(x) for x in r] for r in k]
    lhs = matrix_fourier(two_sided(phi, inverse(h), k))
    rhs = two_sided(matrix_fourier(phi), inverse(k), h)
    return lhs.equals(rhs)


def induced_distribution(p, j_t, eigenvalues):
    """|D_G(x)|^(-1/2) sum over the Weyl group of J_T(y_w), x split with the given eigenvalues."""
    a, b = (Fraction(x) for x in eigenvalues)
    if a == b or a == 0 or b == 0:
        raise ValueError("x is not regular semisimple")
    v = val((1 - a / b) * (1 - b / a), p)
    total = Cyc.coerce(j_t((a, b))) + Cyc.coerce(j_t((b, a)))
    return total * _qhalf(p, v)
