"""Split tori: push-forward along a weight map, the torus Fourier transform, and multiplicativity."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from ..linalg import determinantal_divisors, integer_kernel, integer_solve
from .cyclo import Cyc, ONE, ZERO
from .laurent import LaurentRational, LPoly
from .radial import RadialFunction
from .tate import TameCharacter, tate_gamma


@dataclass(frozen=True)
class WeightMap:
    """rho_T: T_n -> T with cocharacter matrix M (rank x n); column i is the weight mu_i.

    nu is a character of T with nu * M = (1, ..., 1), so nu o rho_T = det.
    """
    matrix: tuple
    nu: tuple

    @classmethod
    def build(cls, matrix, nu):
        m = tuple(tuple(int(x) for x in r) for r in matrix)
        nu = tuple(int(x) for x in nu)
        wm = cls(m, nu)
        if any(sum(nu[i] * m[i][j] for i in range(wm.rank)) != 1 for j in range(wm.n)):
            raise ValueError("nu must pair to 1 with every weight")
        if not wm.saturated():
            raise ValueError("kernel of the weight map is not saturated (disconnected fibres)")
        return wm

    @property
    def rank(self):
        return len(self.matrix)

    @property
    def n(self):
        return len(self.matrix[0])

    @property
    def weights(self):
        return [tuple(r[j] for r in self.matrix) for j in range(self.n)]

    def saturated(self):
        d = determinantal_divisors(self.matrix)
        return len(d) >= self.rank and d[self.rank - 1] == 1

    def image(self, v):
        return tuple(sum(r[j] * v[j] for j in range(self.n)) for r in self.matrix)

    def degree(self, w):
        return sum(a * b for a, b in zip(self.nu, w))

    def kernel(self):
        return integer_kernel(self.matrix)

    def section(self, w):
        """Canonical integral preimage of w."""
        v = integer_solve(self.matrix, w)
        if v is None:
            raise ValueError("weight map is not surjective on cocharacters")
        return v


def identity_map(n):
    return WeightMap.build([[int(i == j) for j in range(n)] for i in range(n)], [1] * n)


def standard_configurations():
    """Weight maps used by the acceptance checks: rank one, rank two with three weights, the Sym^2 cover."""
    return {
        "rank1": WeightMap.build([[1]], [1]),
        "product": WeightMap.build([[1, 1]], [1]),
        "rank2": WeightMap.build([[1, 0, 2], [0, 1, -1]], [1, 1]),
        "sym2": WeightMap.build([[2, 1, 0], [1, 1, 1]], [0, 1]),
    }


class TorusFunction:
    """A T(O)-invariant function on T(k), i.e. a function on the cocharacter lattice.

    Stored as a finite sum of coef * (tensor product of radial functions); the
    radial factors may carry geometric tails towards 0 in each coordinate.
    """

    def __init__(self, p, dim, terms=None):
        self.p = p
        self.dim = dim
        self.terms = list(terms or [])

    @classmethod
    def from_points(cls, p, points):
        """Finite support: lattice point -> coefficient."""
        dim = len(next(iter(points))) if points else 0
        terms = [(Cyc.coerce(c), tuple(RadialFunction.shell(p, j) for j in v))
                 for v, c in points.items() if c]
        return cls(p, dim, terms)

    def __call__(self, v):
        out = ZERO
        for c, factors in self.terms:
            x = c
            for f, j in zip(factors, v):
                x = x * f(j)
                if not x:
                    break
            out = out + x
        return out

    def lower_bounds(self):
        return tuple(min(t[1][i].low() for t in self.terms) for i in range(self.dim)) if self.terms else None

    def max_degree(self):
        """Largest coordinate sum on the support (finite support only)."""
        best = None
        for _, fs in self.terms:
            if any(f.tail for f in fs):
                raise ValueError("support is not compact")
            d = sum(max(f.values) for f in fs)
            best = d if best is None else max(best, d)
        return best if best is not None else 0

    def fourier(self):
        """J_std * f^v on T_n: |x_1 ... x_n| times the additive Fourier transform."""
        terms = [(c, tuple(f.fourier().times_abs(1) for f in fs)) for c, fs in self.terms]
        return TorusFunction(self.p, self.dim, terms)

    def zeta(self, coords):
        """sum_v f(v) prod_i (coords_i X)^(v_i) as a rational function (one coordinate factor at a time)."""
        out = LaurentRational(LPoly())
        for c, fs in self.terms:
            term = LaurentRational.const(c)
            for f, y in zip(fs, coords):
                term = term * f.zeta(y)
            out = out + term
        return out

    def __add__(self, other):
        return TorusFunction(self.p, self.dim, self.terms + other.terms)

    def __mul__(self, c):
        return TorusFunction(self.p, self.dim, [(k * c, fs) for k, fs in self.terms])

    __rmul__ = __mul__

    def __sub__(self, other):
        return self + other * -1

    def translate(self, shift):
        """v -> f(v - shift)."""
        terms = [(c, tuple(_shift_radial(f, s) for f, s in zip(fs, shift))) for c, fs in self.terms]
        return TorusFunction(self.p, self.dim, terms)


def _shift_radial(f, s):
    vals = {j + s: v for j, v in f.values.items()}
    return RadialFunction(f.p, vals, f.start + s, f.tail, f.ratio)


def pushforward_rho(f, wm, max_degree):
    """Fibre sums of f along the weight map, for every target of degree <= max_degree.

    Each fibre {v : M v = w} is finite because the degree <nu, w> = sum(v) is
    fixed and every coordinate of v is bounded below on the support of f.
    U(O) has volume one, so integration over U(k) is the lattice sum.
    """
    lows = f.lower_bounds()
    out = {}
    if lows is None:
        return out
    span = max_degree - sum(lows)
    if span < 0:
        return out
    for offs in product(range(span + 1), repeat=f.dim):
        if sum(offs) > span:
            continue
        v = tuple(lo + o for lo, o in zip(lows, offs))
        x = f(v)
        if x:
            w = wm.image(v)
            out[w] = out.get(w, ZERO) + x
    return {w: x for w, x in out.items() if x}


def lift(p, phi_tilde, wm, translate_by=None):
    """Lift a finitely supported function on the cocharacters of T through the canonical section."""
    pts = {}
    k = translate_by or (0,) * wm.n
    for w, c in phi_tilde.items():
        v = tuple(a + b for a, b in zip(wm.section(w), k))
        pts[v] = pts.get(v, ZERO) + Cyc.coerce(c)
    return TorusFunction.from_points(p, pts)


def torus_fourier(p, phi_tilde, wm, max_degree, translate_by=None):
    """J^{rho_T} * phi_tilde^v, computed as rho_*(J_std * phi^v) for a lift phi of phi_tilde."""
    return pushforward_rho(lift(p, phi_tilde, wm, translate_by).fourier(), wm, max_degree)


def random_torus_function(p, n, rng, terms=3, spread=2):
    pts = {}
    for _ in range(rng.randint(1, terms)):
        v = tuple(rng.randint(-spread, spread) for _ in range(n))
        pts[v] = pts.get(v, 0) + (rng.randint(-3, 3) or 1)
    pts = {v: c for v, c in pts.items() if c}
    return TorusFunction.from_points(p, pts or {(0,) * n: 1})


@dataclass
class LiftCheck:
    equal: bool
    degree_bound: int
    compared: int
    witness: object = None


def _compare(a, b):
    for w in set(a) | set(b):
        if a.get(w, ZERO) != b.get(w, ZERO):
            return w
    return None


def lift_independence_check(p, phi, wm, extra=4):
    """rho_*(J_std * phi^v) against the torus transform through the canonical and a translated lift."""
    lows = phi.lower_bounds()
    bound = sum(lows) + wm.n + extra
    pushed = pushforward_rho(phi, wm, phi.max_degree())
    direct = pushforward_rho(phi.fourier(), wm, bound)
    kernel = wm.kernel()
    compared = len(direct)
    for tb in [None] + kernel[:1]:
        other = torus_fourier(p, pushed, wm, bound, tb)
        w = _compare(direct, other)
        if w is not None:
            return LiftCheck(False, bound, compared, (tb, w))
    return LiftCheck(True, bound, compared)


def character_coords(wm, z):
    """Per-coordinate unramified parameters z^{mu_i} of chi o rho_T, for chi with parameters z on T."""
    out = []
    for mu in wm.weights:
        c = ONE
        for zi, mi in zip(z, mu):
            c = c * Cyc.coerce(zi) ** mi
        out.append(c)
    return out


@dataclass
class MultiplicativityResult:
    holds: bool
    gamma_product: LaurentRational
    ratio: LaurentRational
    series_checked: int
    series_ok: bool


def _series_from_pushforward(values, wm, z, sign):
    """sum_w values(w) z^(sign w) grouped by degree: degree -> coefficient."""
    out = {}
    for w, x in values.items():
        c = x
        for zi, wi in zip(z, w):
            c = c * Cyc.coerce(zi) ** (sign * wi)
        d = wm.degree(w)
        out[d] = out.get(d, ZERO) + c
    return {d: c for d, c in out.items() if c}


def multiplicativity_check(ctx, phi, wm, z, depth=4):
    """Torus functional-equation ratio against the product of one-dimensional gamma factors.

    The dual side sum_w G(w) z^-w X^-<nu,w> (G the push-forward of J_std * phi^v)
    is built as a rational function coordinate by coordinate and certified
    against direct fibre sums of G for the first `depth` degrees.
    """
    p = ctx.p
    coords = character_coords(wm, z)
    primal = phi.zeta(coords)
    inv = [c.inverse() for c in coords]
    g = phi.fourier()
    dual_y = g.zeta(inv)  # in Y = X^-1
    lows = g.lower_bounds()
    top = sum(lows) + depth - 1
    direct = _series_from_pushforward(pushforward_rho(g, wm, top), wm, z, -1)
    ser = dual_y.series(depth + 2)
    series_ok = all(ser.get(d, ZERO) == direct.get(d, ZERO) for d in range(sum(lows), top + 1))
    pushed = pushforward_rho(phi, wm, phi.max_degree())
    primal_direct = LaurentRational(LPoly(_series_from_pushforward(pushed, wm, z, 1)))
    series_ok = series_ok and primal_direct == primal
    dual = dual_y.substitute(ONE, -1)
    gam = LaurentRational.const(ONE)
    for c in coords:
        gam = gam * tate_gamma(ctx, TameCharacter(p, 0, c)).gamma
    holds = primal.is_zero() or dual == gam * primal
    ratio = (dual / primal).normalized() if not primal.is_zero() else None
    return MultiplicativityResult(holds and series_ok, gam.normalized(), ratio, depth, series_ok)


def commutativity_check_torus(p, wm, lam, extra=4):
    """Transform-then-push against push-then-transform on the basis element e_lam of T_n."""
    phi = TorusFunction.from_points(p, {tuple(lam): 1})
    res = lift_independence_check(p, phi, wm, extra)
    return res.equal, res.witness
