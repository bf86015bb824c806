"""The fourteen acceptance checks, each returning a pass/fail record with timing."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import cones as C
from . import oracles as O
from .basicfn import partition_table, quasi_polynomial_fit
from .monoid import (character_semigroup, compute_shifts, find_nu, gl_std_shift_identities,
                     monoid_presentation, monomial_charts, renner_datum, rook_monoid, std_weights,
                     sym_weights, toric_ideal, weight_cone)
from .rootdata import LatticeBasis
from .padic import gl2, tate, torus
from .padic.cyclo import Cyc, ONE, sqrt_power
from .padic.laurent import X
from .padic.radial import RadialFunction
from .padic.schwartz import PAdicContext, SchwartzFunction


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float = None
    detail: str = ""

    def line(self):
        tag = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"criterion {self.number:2d} {tag} {self.title}: {self.seconds:.2f}s{limit} {self.detail}".rstrip()


def _sym_ideal(n):
    return "XY-Z" if n == 1 else f"XY-Z^{n}"


def check_sym_family():
    bad = []
    for n in range(1, 7):
        w = sym_weights(n)
        lat = w.datum.char_lattice
        sg = character_semigroup(w)
        gens = {tuple(lat.to_ambient(g)) for g in sg.generators}
        nu = tuple(lat.to_ambient(find_nu(w).coords))
        third = (Fraction(1, n), Fraction(1, n))
        eq = monoid_presentation(w).equations
        rhs = "X5" if n == 1 else f"X5^{n}"
        if gens != {(1, 0), (0, 1), third} or nu != third:
            bad.append((n, "generators"))
        if str(toric_ideal(sg.generators)) != _sym_ideal(n):
            bad.append((n, "ideal"))
        if eq != [f"X1X4-X2X3={rhs}"]:
            bad.append((n, "equation"))
    return not bad, f"n=1..6 {bad or 'all exact'}"


def check_resolution():
    bad = []
    for n in range(1, 7):
        xi = weight_cone(sym_weights(n))
        fan = C.resolve_to_smooth_fan(xi)
        inserted = len(fan.rays) - len(xi.rays)
        if any(m != 1 for m in fan.multiplicities()) or inserted != n - 1:
            bad.append((n, "smooth/count"))
        if fan.rays != O.hj_resolution_rays(*xi.rays):
            bad.append((n, "hj"))
    charts = monomial_charts(renner_datum(sym_weights(2)))
    amb = [c for c in charts if c.kind == "ambient"]
    jac_ok = len(amb) == 1 and max(amb[0].jacobian) == 2 and amb[0].jacobian == (0, 0, 2)
    if not jac_ok:
        bad.append((2, "jacobian"))
    return not bad, f"rays n-1, HJ match, Sym^2 jacobian exponent 2; {bad or 'ok'}"


def check_hilbert_bases(count=50, seed=2024):
    rng = random.Random(seed)
    bad = []
    for i in range(count):
        dim = 2 if i % 2 == 0 else 3
        rays = O.random_cone_rays(rng, dim)
        cone = C.normalize_cone(LatticeBasis.standard(dim), rays)
        ours = sorted(tuple(h) for h in C.hilbert_basis(cone))
        if ours != O.brute_hilbert_basis(rays):
            bad.append(rays)
    return not bad, f"{count} random cones, mismatches {len(bad)}"


def check_partitions(bound=20):
    bad = []
    for n in range(1, 5):
        w = sym_weights(n)
        gens = character_semigroup(w).generators
        table = partition_table(gens, bound)
        tally = O.partition_tally(gens, bound)
        if any(table.entries.get(k, 0) != v for k, v in tally.items()) or any(
                v != tally.get(k, 0) for k, v in table.entries.items()):
            bad.append((n, "table"))
        nu = tuple(int(x) for x in find_nu(w).coords)
        fit = quasi_polynomial_fit(table, n, 1, line=nu)
        if not fit.certified:
            bad.append((n, "fit", fit.witness))
    return not bad, f"Sym^1..4, box {bound}; {bad or 'tables exact, degree 1 period n certified'}"


def check_tate(primes=(3, 5)):
    bad = []
    for p in primes:
        ctx = PAdicContext(p)
        family = tate.schwartz_family(p, 20, seed=p)
        triv = tate.TameCharacter(p)
        g = tate.tate_gamma(ctx, triv, family)
        closed = (1 - X) / (1 - X.substitute(Fraction(1, p), -1))
        if not g.independent or g.gamma != closed:
            bad.append((p, "trivial"))
        twist = tate.TameCharacter(p, 0, Cyc.rational(p))
        g = tate.tate_gamma(ctx, twist, family)
        if not g.independent or g.gamma != (1 - X * p) / (1 - X.substitute(Fraction(1, p * p), -1)):
            bad.append((p, "twist"))
        quad = tate.quadratic_character(p)
        g = tate.tate_gamma(ctx, quad, family)
        gs = tate.gauss_sum(p, quad.inverse())
        numeric = O.gauss_sum_numeric(p, O.legendre_values(p))
        if not g.independent or g.gamma != X * gs or abs(gs.to_complex() - numeric) > 1e-9:
            bad.append((p, "quadratic"))
    return not bad, f"q in {primes}, 20 functions each; {bad or 'independent, closed forms match'}"


def check_membership(primes=(2, 3, 5)):
    bad = []
    for p in primes:
        q = Fraction(p)
        m = tate.basic_membership(PAdicContext(p), RadialFunction.ball(p, 0))
        want2 = {0: 1 / (1 - 1 / q)}
        want1 = {-1: (1 / q) / (1 - 1 / q)}
        if not m.verified or m.f2_coefficients != want2 or m.f1_coefficients != want1:
            bad.append(p)
    return not bad, f"q in {primes}; {bad or 'coefficients (1-1/q)^-1 and q^-1 (1-1/q)^-1'}"


def check_torus_lifts(samples=10, seed=7, p=3):
    rng = random.Random(seed)
    bad = []
    for name, wm in torus.standard_configurations().items():
        for _ in range(samples):
            phi = torus.random_torus_function(p, wm.n, rng)
            res = torus.lift_independence_check(p, phi, wm)
            if not res.equal:
                bad.append((name, res.witness))
    wm = torus.standard_configurations()["product"]
    a = torus.torus_fourier(p, {(0,): 1}, wm, 6)
    direct = [torus.pushforward_rho(torus.TorusFunction.from_points(p, {v: 1}).fourier(), wm, 6)
              for v in ((0, 0), (1, -1))]
    if not (direct[0] == direct[1] == a):
        bad.append(("product", "two lifts"))
    return not bad, f"4 weight maps x {samples} functions; {bad or 'lift independent'}"


def check_satake(primes=(2, 3, 5)):
    bad = []
    for p in primes:
        e = gl2.HeckeElement.basis
        cases = [((0, 0), e(p, (0, 0), "T")), ((1, 1), e(p, (1, 1), "T")),
                 ((1, 0), (e(p, (1, 0), "T") + e(p, (0, 1), "T")) * sqrt_power(p, 1))]
        for lam, want in cases:
            h = e(p, lam)
            got = gl2.satake(h)
            if got != want or gl2.satake_oracle(h) != want or not got.is_w_invariant():
                bad.append((p, lam))
    return not bad, f"q in {primes}; {bad or 'e0, e(1,1), q^(1/2)(e(1,0)+e(0,1))'}"


def check_gl2_zeta(primes=(2, 3)):
    bad = []
    alphas = [(Fraction(2), Fraction(1, 3)), (Fraction(1, 2), Fraction(1, 2)),
              (Cyc.root(1, 3), Cyc.root(1, 4)), (Fraction(-1), Fraction(5))]
    for p in primes:
        phi = gl2.BiKFunction(p, {}, {0: 1})
        for al in alphas:
            z = gl2.zeta_gl2_spherical(phi, al)
            if z != 1 / ((1 - X * al[0]) * (1 - X * al[1])):
                bad.append((p, al))
            ser = z.series(6)
            direct = gl2.zeta_gl2_series(phi, al, 6)
            if any(ser.get(t, 0) != direct.get(t, 0) for t in range(6)):
                bad.append((p, al, "series"))
    return not bad, f"q in {primes}, {len(alphas)} parameter pairs; {bad or 'L-factor recovered'}"


def check_commutativity():
    bad = []
    for p, lams in ((2, [(0, 0), (1, 0), (1, 1), (2, 0)]), (3, [(0, 0), (1, 0), (1, 1)])):
        for lam in lams:
            ok, wit = gl2.commutativity_check(gl2.double_coset_function(p, lam))
            if not ok:
                bad.append(("GL2", p, lam, wit))
    cfgs = {"T2": torus.identity_map(2), "rank2": torus.standard_configurations()["rank2"]}
    p = 3
    for name, wm in cfgs.items():
        rng = range(-2, 3) if wm.n == 2 else range(-1, 2)
        for lam in product(rng, repeat=wm.n):
            ok, wit = torus.commutativity_check_torus(p, wm, lam)
            if not ok:
                bad.append((name, lam, wit))
    wm = cfgs["T2"]
    phi = torus.TorusFunction.from_points(p, {(1, 0): 1, (0, 1): 1})
    if not torus.lift_independence_check(p, phi, wm).equal:
        bad.append(("T2", "e10+e01"))
    return not bad, f"GL2 double cosets depth <= 2, torus e-basis; {bad or 'both paths agree'}"


def check_multiplicativity(p=3, seed=11):
    rng = random.Random(seed)
    cfg = torus.standard_configurations()
    bad = []
    for name in ("product", "rank2", "sym2"):
        wm = cfg[name]
        for z in ([ONE] * wm.rank, [Cyc.rational(2)] * wm.rank, [Cyc.root(1, 4), Cyc.rational(3)][:wm.rank]):
            phi = torus.random_torus_function(p, wm.n, rng)
            res = torus.multiplicativity_check(PAdicContext(p), phi, wm, z)
            if not res.holds:
                bad.append((name, z))
    return not bad, f"3 weight maps x 3 characters; {bad or 'ratio = product of gamma factors'}"


def _unit_matrix(rng, p):
    while True:
        m = [[rng.randint(-4, 4) for _ in range(2)] for _ in range(2)]
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % p:
            return m


def check_equivariance(samples=10, seed=5):
    rng = random.Random(seed)
    bad = []
    for i in range(samples):
        p = (2, 3)[i % 2]
        phi = SchwartzFunction(p, 4)
        for _ in range(rng.randint(1, 2)):
            centre = [Fraction(rng.randint(0, p * p - 1)) for _ in range(4)]
            phi = phi + SchwartzFunction.box(p, centre, rng.randint(0, 1), rng.randint(1, 3))
        ok, wit = gl2.equivariance_check(phi, _unit_matrix(rng, p), _unit_matrix(rng, p))
        if not ok:
            bad.append((i, wit))
    return not bad, f"{samples} random triples; {bad or 'equal'}"


def check_rook():
    sizes = [rook_monoid(n).size for n in (1, 2, 3)]
    brute = [O.rook_brute_count(n) for n in (1, 2, 3)]
    return sizes == brute == [2, 7, 34], f"sizes {sizes}, brute force {brute}"


def check_shifts():
    bad = []
    for n in range(1, 6):
        if compute_shifts(std_weights(n)).two_eta_g_lambda != n - 1:
            bad.append((n, "eta"))
        if n >= 2 and not all(ok for _, _, ok in gl_std_shift_identities(n)):
            bad.append((n, "levi"))
    return not bad, f"GL_n std, n <= 5; {bad or 'exponents match'}"


CHECKS = [
    (1, "Sym^n golden family", check_sym_family, 1.0),
    (2, "toric resolution", check_resolution, 1.0),
    (3, "Hilbert bases vs brute force", check_hilbert_bases, 30.0),
    (4, "partition tables and quasi-polynomials", check_partitions, 30.0),
    (5, "Tate functional equation", check_tate, 10.0),
    (6, "GL1 basic-function decomposition", check_membership, None),
    (7, "torus transform across lifts", check_torus_lifts, 60.0),
    (8, "GL2 Satake transform", check_satake, None),
    (9, "unramified GL2 zeta integral", check_gl2_zeta, 60.0),
    (10, "Fourier / Harish-Chandra commutativity", check_commutativity, None),
    (11, "torus multiplicativity", check_multiplicativity, None),
    (12, "two-sided equivariance of the Fourier transform", check_equivariance, None),
    (13, "rook monoid cardinalities", check_rook, None),
    (14, "shift exponents", check_shifts, None),
]


def run_check(number):
    num, title, fn, limit = CHECKS[number - 1]
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure of that criterion only
        ok, detail = False, f"error: {exc!r}"
    dt = time.perf_counter() - t0
    passed = ok and (limit is None or dt < limit)
    return CheckResult(num, title, passed, dt, limit, detail)


def run_all(numbers=None):
    return [run_check(n) for n in (numbers or range(1, len(CHECKS) + 1))]
