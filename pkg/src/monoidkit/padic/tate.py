"""Tate zeta integrals, gamma factors, and the GL1 basic-function decomposition."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..linalg import solve
from .cyclo import Cyc, ONE, ZERO
from .laurent import LaurentRational, LPoly
from .radial import RadialFunction
from .schwartz import SchwartzFunction, psi, residue, unit_part, val


def primitive_root(p):
    if p == 2:
        return 1
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in _prime_factors(p - 1)):
            return g
    raise ValueError("no primitive root")


def _prime_factors(n):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


@dataclass(frozen=True)
class TameCharacter:
    """chi(p^k u) = z^k chi0(u mod p), with chi0(g^e) = zeta_(p-1)^(index * e)."""
    p: int
    index: int = 0
    z: Cyc = ONE

    def __post_init__(self):
        object.__setattr__(self, "index", self.index % max(self.p - 1, 1))

    @property
    def is_unramified(self):
        return self.index == 0

    def residue_value(self, u):
        if self.index == 0:
            return ONE
        g = primitive_root(self.p)
        e, x = 0, 1
        u %= self.p
        while x != u:
            x = x * g % self.p
            e += 1
        return Cyc.root(self.index * e, self.p - 1)

    def __call__(self, x):
        v = val(x, self.p)
        return self.z ** v * self.residue_value(residue(unit_part(x, self.p), self.p))

    def inverse(self):
        return TameCharacter(self.p, -self.index, self.z.inverse())

    def unramified_part(self, z):
        return TameCharacter(self.p, self.index, z)


def quadratic_character(p, z=ONE):
    if p == 2:
        raise ValueError("no tame quadratic character for p = 2")
    return TameCharacter(p, (p - 1) // 2, z)


def tate_zeta(ctx, f, chi):
    """Z(f, chi, s) = integral f(x) chi(x) |x|^s d*x, with X = q^-s, annulus by annulus."""
    p = ctx.p
    q = Fraction(p)
    z = chi.z
    poly = {}
    geo = {}

    def put(d, k, c):
        d[k] = d.get(k, ZERO) + c
    mf = 1 / (1 - 1 / q)
    for (c, m, a), coef in f.terms.items():
        (c,), (m,), (a,) = c, m, a
        if c != 0:
            if a:
                continue
            v = val(c, p)
            u = residue(unit_part(c, p), p)
            put(poly, v, coef * chi.residue_value(u) * mf * q ** (v - m) * z ** v)
        elif not a:
            if chi.is_unramified:
                put(geo, m, coef * z ** m)
        else:
            j = -val(a, p) - 1
            if chi.is_unramified:
                put(poly, j, coef * Fraction(-1, p - 1) * z ** j)
                put(geo, j + 1, coef * z ** (j + 1))
            else:
                alpha = residue(a * q ** (j + 1), p)
                gs = sum((chi.residue_value(u) * psi(Fraction(alpha * u, p), p) for u in range(1, p)), ZERO)
                put(poly, j, coef * gs * Fraction(1, p - 1) * z ** j)
    out = LaurentRational(LPoly(poly))
    if geo:
        out = out + LaurentRational(LPoly(geo), LPoly({0: ONE, 1: -z}))
    return out


def dual_zeta(ctx, f, chi):
    """Z(fourier(f), chi^-1, 1 - s) as a rational function of X = q^-s."""
    inv = chi.inverse()
    base = tate_zeta(ctx, f.fourier(), inv.unramified_part(ONE))
    # |x|^(1-s) chi^-1(p)^v = (z^-1 q^-1 X^-1)^v
    return base.substitute(chi.z.inverse() * Fraction(1, ctx.p), -1)


def gauss_sum(p, chi):
    """sum over u in F_p^* of chi(u) psi(u / p)."""
    return sum((chi.residue_value(u) * psi(Fraction(u, p), p) for u in range(1, p)), ZERO)


def random_schwartz(p, rng, dim=1, terms=3):
    f = SchwartzFunction(p, dim)
    for _ in range(rng.randint(1, terms)):
        center = tuple(Fraction(rng.randint(0, p * p - 1), p ** rng.randint(0, 1)) for _ in range(dim))
        level = tuple(rng.randint(-1, 2) for _ in range(dim))
        phase = tuple(Fraction(rng.randint(0, p - 1), p ** rng.randint(0, 2)) if rng.random() < 0.3
                      else Fraction(0) for _ in range(dim))
        f = f + SchwartzFunction.box(p, center, level, Cyc.rational(rng.randint(-3, 3) or 1), phase)
    return f


def schwartz_family(p, size=20, seed=0, dim=1):
    rng = random.Random(seed)
    base = [SchwartzFunction.box(p, (0,) * dim, 0), SchwartzFunction.box(p, (1,) * dim, 1)]
    return (base + [random_schwartz(p, rng, dim) for _ in range(size)])[:max(size, 2)]


@dataclass
class GammaResult:
    gamma: LaurentRational
    independent: bool
    tested: int
    skipped: int  # functions with vanishing zeta integral, checked to have vanishing dual side
    witness: object = None


def tate_gamma(ctx, chi, family=None):
    """gamma with Z(f^, chi^-1, 1-s) = gamma Z(f, chi, s), checked across a family of f."""
    family = family if family is not None else schwartz_family(ctx.p)
    ref = None
    tested = skipped = 0
    for f in family:
        zf = tate_zeta(ctx, f, chi)
        zd = dual_zeta(ctx, f, chi)
        tested += 1
        if zf.is_zero():
            # the identity then forces the dual side to vanish as well
            skipped += 1
            if not zd.is_zero():
                return GammaResult(None, False, tested, skipped, f)
            continue
        if ref is None:
            ref = (zd, zf)
            continue
        if zd * ref[1] != ref[0] * zf:
            return GammaResult((ref[0] / ref[1]).normalized(), False, tested, skipped, f)
    if ref is None:
        raise ValueError("every test function has vanishing zeta integral")
    return GammaResult((ref[0] / ref[1]).normalized(), True, tested, skipped)


def expected_gamma(ctx, chi):
    """Closed forms: unramified (1 - zX)/(1 - z^-1 q^-1 X^-1); tame ramified G(chi^-1) z X."""
    from .laurent import X
    q = Fraction(ctx.p)
    if chi.is_unramified:
        num = 1 - X * chi.z
        den = 1 - X.substitute(chi.z.inverse() / q, -1)
        return num / den
    return X * (gauss_sum(ctx.p, chi.inverse()) * chi.z)


@dataclass
class Membership:
    f1: RadialFunction
    f2: RadialFunction
    f1_coefficients: dict
    f2_coefficients: dict
    verified: bool
    unit_coefficient_identity: bool = None
    notes: list = field(default_factory=list)


def basic_membership(ctx, phi0, f1_shells=range(-2, 3), f2_shells=(0,)):
    """Write phi0 = f1 + fourier(f2) with f1, f2 combinations of indicators of shells p^j O*.

    Solved as an exact linear system on the values on each shell and on the
    constant value near 0; free parameters are set to zero.  The result is
    checked again with box-level Fourier transforms.
    """
    p = ctx.p
    if not isinstance(phi0, RadialFunction):
        raise TypeError("phi0 must be a radial function")
    f1_shells, f2_shells = list(f1_shells), list(f2_shells)
    basis2 = [RadialFunction.shell(p, v).fourier() for v in f2_shells]
    lo = min([phi0.low()] + f1_shells + [b.low() for b in basis2]) - 1
    hi = max([phi0.start] + [s + 1 for s in f1_shells] + [b.start for b in basis2]) + 1
    rows, rhs = [], []
    for j in range(lo, hi + 1):
        rows.append([b(j) for b in basis2] + [ONE if j == s else ZERO for s in f1_shells])
        rhs.append(phi0(j))
    if any(not x.is_rational() for r in rows for x in r) or any(not x.is_rational() for x in rhs):
        raise ValueError("membership solve needs rational values")
    sol = solve([[x.rational_value() for x in r] for r in rows], [x.rational_value() for x in rhs])
    if sol is None:
        raise ValueError("no decomposition in this family; enlarge it")
    c2 = dict(zip(f2_shells, sol[:len(f2_shells)]))
    c1 = dict(zip(f1_shells, sol[len(f2_shells):]))
    f2 = RadialFunction(p)
    for v, c in c2.items():
        f2 = f2 + RadialFunction.shell(p, v, c)
    f1 = RadialFunction(p)
    for v, c in c1.items():
        f1 = f1 + RadialFunction.shell(p, v, c)
    verified = phi0.schwartz() == f1.schwartz() + f2.schwartz().fourier()
    unit = RadialFunction.shell(p, -1).schwartz() + RadialFunction.shell(p, 0).schwartz().fourier()
    unit_identity = unit == phi0.schwartz()
    return Membership(f1, f2, {k: v for k, v in c1.items() if v}, {k: v for k, v in c2.items() if v},
                      verified, unit_identity)
