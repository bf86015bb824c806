"""Reductive monoids from weight data: cones, characters, toric ideals, shifts, charts."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from . import cones as C
from .linalg import det, frac, rank, solve
from .rootdata import (GL, apply, build_root_datum, gl2_sym_cover, half_sum_positive,
                       is_dominant, levi_subdatum, maximal_levis, weyl_orbit)


@dataclass(frozen=True)
class WeightData:
    datum: object
    weights: tuple  # cocharacter coordinates, with multiplicity
    label: str = ""

    def ambient_weights(self):
        return [self.datum.cochar_lattice.to_ambient(w) for w in self.weights]

    def is_w_stable(self):
        counts = {}
        for w in self.weights:
            counts[w] = counts.get(w, 0) + 1
        for g in self.datum.weyl_gens:
            moved = {}
            for w, m in counts.items():
                moved[apply(g, w)] = m
            if moved != counts:
                return False
        return True


def from_ambient(datum, weights, label=""):
    lat = datum.cochar_lattice
    return WeightData(datum, tuple(lat.to_coords(w) for w in weights), label)


def sym_weights(n):
    """Weights of Sym^n of the standard representation, on the n-fold cover."""
    return from_ambient(gl2_sym_cover(n), [(n - k, k) for k in range(n + 1)], f"sym{n}")


def std_weights(n):
    d = GL(n)
    return WeightData(d, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), f"std{n}")


def weight_data_from_json(obj):
    """{"builtin": "sym"|"std", "n": k} or {"group": descriptor, "weights": [[num, den], ...]}."""
    if "builtin" in obj:
        kind, n = obj["builtin"], int(obj["n"])
        if kind == "sym":
            return sym_weights(n)
        if kind == "std":
            return std_weights(n)
        raise ValueError(f"unknown builtin {kind!r}")
    datum = build_root_datum(obj["group"])
    ws = [tuple(frac(x) for x in w) for w in obj["weights"]]
    if not ws:
        raise ValueError("weight multiset is empty")
    return from_ambient(datum, ws, obj.get("label", ""))


def weight_cone(w):
    if not w.weights:
        raise ValueError("weight multiset is empty")
    return C.normalize_cone(w.datum.cochar_lattice, list(w.weights))


@dataclass(frozen=True)
class NuSolution:
    coords: tuple  # character coordinates (rational)
    integral: bool
    unique: bool


def find_nu(w, require_lattice=True):
    """Solve <nu, weight> = 1 for every weight, with nu fixed by the Weyl group.

    Returns None when the system is inconsistent, or (by default) when the
    solution is not a character of the torus.
    """
    d = w.datum
    r = d.rank
    rows, rhs = [], []
    for wt in sorted(set(w.weights)):
        rows.append(list(wt))
        rhs.append(1)
    for g in d.char_weyl_gens():
        for i in range(r):
            rows.append([g[i][j] - int(i == j) for j in range(r)])
            rhs.append(0)
    sol = solve(rows, rhs)
    if sol is None:
        return None
    integral = all(x.denominator == 1 for x in sol)
    if require_lattice and not integral:
        return None
    return NuSolution(tuple(sol), integral, rank(rows) == r)


@dataclass(frozen=True)
class CharacterSemigroup:
    cone: object  # dual cone in character coordinates
    hilbert_basis: tuple  # rays first, then the rest, each by descending ambient coordinates
    generators: tuple  # Hilbert basis with nu moved or appended last (nu is always a coordinate)


def _ambient_key(d, x):
    return tuple(d.char_lattice.to_ambient(x))


def character_semigroup(w):
    xi = weight_cone(w)
    if not xi.strict_convex or not xi.full_dimensional:
        raise ValueError("weight cone is not strictly convex and full dimensional")
    dual = C.dual_cone(xi, w.datum.char_lattice)
    hb = C.hilbert_basis(dual)
    d = w.datum
    nu = find_nu(w)
    nu_pt = tuple(int(x) for x in nu.coords) if nu is not None else None
    rays = sorted((h for h in hb if h in dual.rays), key=lambda x: _ambient_key(d, x), reverse=True)
    rest = sorted((h for h in hb if h not in dual.rays), key=lambda x: _ambient_key(d, x), reverse=True)
    ordered = rays + rest
    gens = [g for g in ordered if g != nu_pt]
    if nu_pt is not None:
        gens.append(nu_pt)
    return CharacterSemigroup(dual, tuple(ordered), tuple(gens))


def orbit_generators(w, semigroup=None):
    """Minimal dominant points whose Weyl orbits generate the character semigroup.

    nu comes first when it is needed, i.e. when it is itself indecomposable.
    """
    sg = semigroup or character_semigroup(w)
    d = w.datum
    nu = find_nu(w)
    nu_pt = tuple(int(x) for x in nu.coords) if nu is not None else None
    reps, seen = [], set()
    for h in sg.hilbert_basis:
        if h in seen:
            continue
        orb = weyl_orbit(d, h, side="char")
        seen |= orb
        dom = [x for x in orb if is_dominant(d, x)]
        reps.append(max(dom, key=lambda x: _ambient_key(d, x)))
    first = [x for x in reps if x == nu_pt]
    rest = sorted((x for x in reps if x != nu_pt), key=lambda x: _ambient_key(d, x), reverse=True)
    return first + rest


def is_minimal_orbit_generating_set(w, gens, bound=8):
    if not orbits_generate(w, gens, bound):
        return False
    return all(not orbits_generate(w, gens[:i] + gens[i + 1:], bound) for i in range(len(gens)))


def orbits_generate(w, gens, bound=8):
    """Check that the Weyl orbits of gens generate every semigroup point in a box."""
    d = w.datum
    sg = character_semigroup(w)
    pool = sorted({x for g in gens for x in weyl_orbit(d, g, side="char")})
    target = _semigroup_points(sg.cone, bound)
    grade = [sum(col) for col in zip(*sg.cone.facets)]
    return target <= _additive_closure(pool, target, grade, d.rank)


def _semigroup_points(cone, bound):
    out = set()
    for x in product(range(-bound, bound + 1), repeat=cone.ambient_dim):
        if any(x) and cone.contains(x):
            out.add(x)
    return out


def _additive_closure(gens, target, grade, dim):
    def g(x):
        return sum(a * b for a, b in zip(grade, x))
    top = max((g(t) for t in target), default=0)
    reach = {tuple([0] * dim)}
    frontier = list(reach)
    while frontier:
        nxt = []
        for x in frontier:
            for v in gens:
                y = tuple(a + b for a, b in zip(x, v))
                if y not in reach and g(y) <= top:
                    reach.add(y)
                    nxt.append(y)
        frontier = nxt
    return reach


@dataclass(frozen=True)
class RennerDatum:
    weight_data: WeightData
    weight_cone: object
    nu: object
    semigroup: CharacterSemigroup
    orbit_gens: tuple


def renner_datum(w):
    sg = character_semigroup(w)
    return RennerDatum(w, weight_cone(w), find_nu(w), sg, tuple(orbit_generators(w, sg)))


def _labels(k):
    if k <= 3:
        return ["X", "Y", "Z"][:k]
    return [f"X{i + 1}" for i in range(k)]


def _monomial_str(exps, labels):
    parts = []
    for e, x in zip(exps, labels):
        if e == 1:
            parts.append(x)
        elif e > 1:
            parts.append(f"{x}^{e}")
    return "".join(parts) or "1"


@dataclass
class BinomialIdeal:
    variables: list
    generators: list  # the lattice points the variables map to
    binomials: list  # (u_plus, u_minus) exponent tuples
    degree_bound: int = 0
    verified: bool = False

    def binomial_strings(self):
        return [f"{_monomial_str(a, self.variables)}-{_monomial_str(b, self.variables)}"
                for a, b in self.binomials]

    def __str__(self):
        return ", ".join(self.binomial_strings()) if self.binomials else "0"

    def vanishes_on_parametrization(self):
        for a, b in self.binomials:
            da = tuple(sum(e * g[i] for e, g in zip(a, self.generators)) for i in range(len(self.generators[0])))
            db = tuple(sum(e * g[i] for e, g in zip(b, self.generators)) for i in range(len(self.generators[0])))
            if da != db:
                return False
        return True


def _positive_grading(gens):
    d = len(gens[0])
    from .rootdata import LatticeBasis
    cone = C.normalize_cone(LatticeBasis.standard(d), list(gens))
    if not cone.strict_convex:
        raise ValueError("generators do not span a strictly convex cone")
    g = [0] * d
    for f in cone.facets:
        g = [a + b for a, b in zip(g, f)]
    return tuple(g)


def toric_ideal(gens, labels=None, degree_bound=None):
    """Minimal binomial generators of the kernel of k[X] -> k[semigroup], by degree.

    Monomials are grouped into fibres over semigroup elements in increasing
    degree; a new binomial is added whenever the moves found so far leave a
    fibre disconnected.  On exit every fibre up to the bound is connected,
    which is the statement that the quotient has dimension one in each of
    those degrees.
    """
    gens = [tuple(int(x) for x in g) for g in gens]
    k = len(gens)
    labels = labels or _labels(k)
    grade = _positive_grading(gens)
    deg = [sum(a * b for a, b in zip(grade, g)) for g in gens]
    if degree_bound is None:
        degree_bound = 3 * max(deg) * max(1, max(max(abs(c) for c in g) for g in gens)) + max(deg)
    fibres = {}
    for mono in _monomials(deg, degree_bound):
        b = tuple(sum(e * g[i] for e, g in zip(mono, gens)) for i in range(len(gens[0])))
        fibres.setdefault(b, []).append(mono)
    moves = []
    for b in sorted(fibres, key=lambda b: (sum(x * y for x, y in zip(grade, b)), b)):
        monos = fibres[b]
        if len(monos) == 1:
            continue
        comps = _components(monos, moves)
        if len(comps) == 1:
            continue
        reps = sorted((max(c) for c in comps), reverse=True)
        for other in reps[1:]:
            moves.append((reps[0], other))
    return BinomialIdeal(labels, gens, moves, degree_bound, True)


def _monomials(deg, bound):
    k = len(deg)

    def rec(i, left):
        if i == k:
            yield ()
            return
        for e in range(left // deg[i] + 1):
            for rest in rec(i + 1, left - e * deg[i]):
                yield (e,) + rest
    return list(rec(0, bound))


def _components(monos, moves):
    index = {m: i for i, m in enumerate(monos)}
    parent = list(range(len(monos)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i
    for m in monos:
        for a, b in moves:
            for u, v in ((a, b), (b, a)):
                if all(x >= y for x, y in zip(m, u)):
                    n = tuple(x - y + z for x, y, z in zip(m, u, v))
                    if n in index:
                        ra, rb = find(index[m]), find(index[n])
                        if ra != rb:
                            parent[ra] = rb
    groups = {}
    for m in monos:
        groups.setdefault(find(index[m]), []).append(m)
    return list(groups.values())


def _is_sym_family(w):
    d = w.datum
    if not d.name.startswith("GL2_sym"):
        return None
    n = int(d.name[len("GL2_sym"):])
    expected = sorted(sym_weights(n).weights)
    return n if sorted(w.weights) == expected else None


@dataclass
class Presentation:
    kind: str  # "equations" or "abstract"
    equations: list
    datum: object = None


def monoid_presentation(w):
    """Explicit equations for the Sym^n family and for tori, else the Renner datum."""
    n = _is_sym_family(w)
    if n is not None:
        rhs = "X5" if n == 1 else f"X5^{n}"
        return Presentation("equations", [f"X1X4-X2X3={rhs}"])
    d = w.datum
    if not d.roots:
        sg = character_semigroup(w)
        ideal = toric_ideal(sg.hilbert_basis)
        if not ideal.binomials:
            return Presentation("equations", [f"A^{len(sg.hilbert_basis)}"])
        return Presentation("equations", ideal.binomial_strings())
    return Presentation("abstract", [], renner_datum(w))


def sym_equation_check(n):
    """The Sym^n equation restricted to diagonal matrices is the toric ideal of the semigroup."""
    eq = monoid_presentation(sym_weights(n)).equations[0]
    lhs, rhs = eq.split("=")
    diag = lhs.replace("-X2X3", "").replace("X1", "X").replace("X4", "Y")
    restricted = f"{diag}-{rhs.replace('X5', 'Z')}"
    return restricted == str(toric_ideal(character_semigroup(sym_weights(n)).generators))


@dataclass
class LeviRestriction:
    weight_data: WeightData
    weight_orbits: list  # W_L orbits of the weights, each (highest, sorted members)
    orbit_gen_orbits: list  # W_L orbits of the W-orbits of the orbit generators
    same_toric_variety: bool


def _cochar_height(d, mu):
    eta = half_sum_positive(d)
    return d.pairing(eta, mu)


def _weight_orbits(datum, weights):
    pool = sorted(set(weights))
    out, seen = [], set()
    for wt in pool:
        if wt in seen:
            continue
        orb = weyl_orbit(datum, wt)
        seen |= orb
        members = sorted(x for x in pool if x in orb)
        top = max(members, key=lambda x: (_cochar_height(datum, x), x))
        out.append((top, members))
    out.sort(key=lambda o: (-_cochar_height(datum, o[0]), o[0]), reverse=False)
    return out


def levi_restriction(w, L):
    wl = WeightData(L.datum, w.weights, w.label)
    orbits = _weight_orbits(L.datum, w.weights)
    og = []
    for lam in orbit_generators(w):
        full = weyl_orbit(w.datum, lam, side="char")
        parts, seen = [], set()
        for x in sorted(full):
            if x in seen:
                continue
            o = weyl_orbit(L.datum, x, side="char")
            seen |= o
            parts.append(max(y for y in o if is_dominant(L.datum, y)))
        og.append((lam, sorted(parts, reverse=True)))
    same = weight_cone(wl).rays == weight_cone(w).rays
    return LeviRestriction(wl, orbits, og, same)


def highest_weight(w):
    d = w.datum
    dom = [x for x in set(w.weights) if all(d.pairing(d.roots[i], x) >= 0 for i in d.simple_roots)]
    return max(dom, key=lambda x: (_cochar_height(d, x), x))


@dataclass
class ShiftRecord:
    two_eta_g_lambda: Fraction
    two_eta_l_lambdas: Fraction
    difference: Fraction
    delta_g_half: tuple  # exponent vectors on character coordinates
    delta_l_half: tuple
    nu_gl_half: tuple
    delta_p: tuple
    nu_half_delta_p_inv_half: tuple
    levi_highest: list = field(default_factory=list)


def _vec_add(a, b, s=1):
    return tuple(frac(x) + s * frac(y) for x, y in zip(a, b))


def _vec_scale(a, s):
    return tuple(frac(x) * s for x in a)


def compute_shifts(w, L=None):
    """Shift exponents of the rho-Harish-Chandra transform for weight data and a Levi."""
    d = w.datum
    nu = find_nu(w)
    if nu is None:
        raise ValueError("no central character pairing to one with every weight")
    lam = highest_weight(w)
    two_eta = tuple(2 * x for x in half_sum_positive(d))
    tg = d.pairing(two_eta, lam)
    dg_half = _vec_scale(nu.coords, tg / 2)
    if L is None:
        L = levi_subdatum(d, d.simple_roots)
    ld = L.datum
    orbits = _weight_orbits(ld, w.weights)
    two_eta_l = tuple(2 * x for x in half_sum_positive(ld))
    tl = sum((ld.pairing(two_eta_l, top) for top, _ in orbits), Fraction(0))
    dl_half = tuple([Fraction(0)] * d.rank)
    for j, (top, members) in enumerate(orbits):
        e = ld.pairing(two_eta_l, top)
        if e:
            dl_half = _vec_add(dl_half, _vec_scale(_block_character(ld, orbits, j), e / 2))
    nu_half = _vec_add(dg_half, dl_half, -1)
    lroots = set(ld.roots)
    dp = tuple([Fraction(0)] * d.rank)
    for r in d.positive_roots:
        if r not in lroots:
            dp = _vec_add(dp, r)
    comb = _vec_add(nu_half, _vec_scale(dp, Fraction(-1, 2)))
    return ShiftRecord(tg, tl, tg - tl, dg_half, dl_half, nu_half, dp, comb,
                       [top for top, _ in orbits])


def _block_character(ld, orbits, j):
    """W_L-invariant character equal to 1 on orbit j and 0 on the other orbits."""
    r = ld.rank
    rows, rhs = [], []
    for i, (_, members) in enumerate(orbits):
        for m in members:
            rows.append(list(m))
            rhs.append(1 if i == j else 0)
    for g in ld.char_weyl_gens():
        for i in range(r):
            rows.append([g[i][k] - int(i == k) for k in range(r)])
            rhs.append(0)
    sol = solve(rows, rhs)
    if sol is None:
        raise ValueError("no block character for this Levi")
    return sol


def gl_std_shift_identities(n):
    """Check the GL_n standard shifts against the closed forms for every maximal Levi.

    Returns a list of (n', n'', ok) triples.
    """
    w = std_weights(n)
    out = []
    for L in maximal_levis(w.datum):
        (s,) = [t for t in w.datum.simple_roots if t not in L.simple_subset]
        n1, n2 = s + 1, n - s - 1
        rec = compute_shifts(w, L)
        first = [Fraction(1) if i < n1 else Fraction(0) for i in range(n)]
        second = [Fraction(1) - x for x in first]
        nu_expected = tuple(Fraction(n2, 2) * a + Fraction(n1, 2) * b for a, b in zip(first, second))
        dp_expected = tuple(n2 * a - n1 * b for a, b in zip(first, second))
        comb_expected = tuple(n1 * b for b in second)
        ok = (rec.nu_gl_half == nu_expected and rec.delta_p == dp_expected
              and rec.nu_half_delta_p_inv_half == comb_expected)
        out.append((n1, n2, ok))
    return out


@dataclass
class Chart:
    kind: str  # "toric" or "ambient"
    cone: tuple  # rays of the smooth cone (toric) or the step count (ambient)
    exponents: tuple  # rows: coordinates of the target, columns: chart coordinates
    jacobian: tuple  # exponents d_i of |t_i| in the Jacobian
    jacobian_det: int = 1
    equation: str = ""


def monomial_jacobian(e):
    """Jacobian of t -> (t^{e_1}, ..., t^{e_n}) for a square exponent matrix."""
    n = len(e)
    return int(det([list(r) for r in e])), tuple(sum(e[j][i] for j in range(n)) - 1 for i in range(n))


def monomial_charts(rd, fan=None):
    """Charts of the toric resolution of the weight cone, plus ambient blow-up charts.

    Toric charts: one per maximal smooth cone, exponent matrix <g_j, v_i>
    (generator j pulled back to the chart coordinate dual to ray v_i), Jacobian
    exponents relative to the invariant form twisted by nu, i.e. <nu, v_i> - 1.

    Ambient charts: when the semigroup is cut out by one binomial XY - Z^m in
    three variables, the chain of blow-ups of the origin in A^3, chart
    (x, y, z) -> (x z^j, y z^j, z), with Jacobian |z|^{2j}.
    """
    xi = rd.weight_cone
    fan = fan or C.resolve_to_smooth_fan(xi)
    for cone in fan.cones:
        if C._simplicial_mult(cone) != 1:
            raise ValueError("fan is not resolved")
    gens = rd.semigroup.generators
    nu = rd.nu.coords if rd.nu is not None else None
    charts = []
    for cone in fan.cones:
        e = tuple(tuple(sum(g[k] * v[k] for k in range(len(v))) for v in cone) for g in gens)
        if nu is not None:
            jac = tuple(sum(frac(a) * b for a, b in zip(nu, v)) - 1 for v in cone)
        else:
            jac = tuple(Fraction(-1) for _ in cone)
        charts.append(Chart("toric", cone, e, tuple(int(x) for x in jac), 1))
    ideal = toric_ideal(gens)
    if len(gens) == 3 and len(ideal.binomials) == 1:
        a, b = ideal.binomials[0]
        if a == (1, 1, 0) and b[:2] == (0, 0):
            m = b[2]
            for j in range(1, m // 2 + 1):
                e = ((1, 0, j), (0, 1, j), (0, 0, 1))
                dt, jac = monomial_jacobian(e)
                rest = m - 2 * j
                eq = "xy=1" if rest == 0 else ("xy=z" if rest == 1 else f"xy=z^{rest}")
                charts.append(Chart("ambient", (j,), e, jac, dt, eq))
    return charts


def ambient_blowup_count(n):
    """Blow-ups of the origin needed for XY = Z^n, by iterating the chart equation."""
    steps, m = 0, n
    while m >= 2:
        m -= 2
        steps += 1
    return steps


@dataclass
class RookMonoid:
    n: int
    elements: tuple  # partial permutations as tuples (image of i or -1)
    size: int
    unit_count: int
    idempotent_count: int
    bruhat_cells: int


def rook_monoid(n):
    """All partial permutation matrices of size n (the Renner monoid of GL_n)."""
    if not 1 <= n <= 4:
        raise ValueError("n must be between 1 and 4")
    elems = set()
    for k in range(n + 1):
        for rows in _subsets(n, k):
            for cols in permutations(range(n), k):
                p = [-1] * n
                for r, c in zip(rows, cols):
                    p[r] = c
                elems.add(tuple(p))
    elems = tuple(sorted(elems))
    units = sum(1 for p in elems if -1 not in p)
    idem = sum(1 for p in elems if all(x in (-1, i) for i, x in enumerate(p)))
    return RookMonoid(n, elems, len(elems), units, idem, len(elems))


def _subsets(n, k):
    from itertools import combinations
    return combinations(range(n), k)


def rook_product(p, q):
    """Matrix product of partial permutations (row i of p maps to column p[i])."""
    return tuple(-1 if x == -1 else q[x] for x in p)
