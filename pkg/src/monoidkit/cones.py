"""Rational polyhedral cones: normal form, duality, Hilbert bases, resolution."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .linalg import (det, frac, integer_kernel, invariant_factors,
                     inverse, nullspace, primitive, rank, saturated_basis, solve)
from .rootdata import LatticeBasis


@dataclass(frozen=True)
class RationalCone:
    lattice: LatticeBasis
    rays: tuple
    facets: tuple
    strict_convex: bool = True
    dim: int = 0

    @property
    def ambient_dim(self):
        return self.lattice.rank

    @property
    def full_dimensional(self):
        return self.dim == self.ambient_dim

    def contains(self, v):
        return all(_dot(f, v) >= 0 for f in self.facets)

    def interior_contains(self, v):
        return self.full_dimensional and all(_dot(f, v) > 0 for f in self.facets)

    def ambient_rays(self):
        return [self.lattice.to_ambient(r) for r in self.rays]


@dataclass
class Fan:
    lattice: LatticeBasis
    cones: list  # each cone is a tuple of rays (integer coordinate tuples)
    certificate: list = field(default_factory=list)

    @property
    def rays(self):
        return sorted({r for c in self.cones for r in c})

    def multiplicities(self):
        return [_simplicial_mult(c) for c in self.cones]


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _unit(n, i):
    return tuple(int(i == j) for j in range(n))


def _full_dim_facets(gens, d):
    """Facet normals (primitive, integer) of the cone spanned by gens in Z^d, full rank."""
    if d == 1:
        signs = {1 if g[0] > 0 else -1 for g in gens}
        return [(s,) for s in signs] if len(signs) == 1 else []
    out = set()
    for sub in combinations(gens, d - 1):
        if rank([list(s) for s in sub]) != d - 1:
            continue
        ker = nullspace([list(s) for s in sub], d)
        n = primitive(ker[0])
        vals = [_dot(n, g) for g in gens]
        if all(v >= 0 for v in vals):
            out.add(n)
        elif all(v <= 0 for v in vals):
            out.add(tuple(-x for x in n))
    return sorted(out)


def _full_dim_normalize(gens, d):
    """Returns (rays, facets, pointed) for a full-rank generator set."""
    facets = _full_dim_facets(gens, d)
    pointed = d >= 1 and rank([list(f) for f in facets]) == d if facets else False
    if not pointed:
        return tuple(sorted(set(gens))), tuple(facets), False
    rays = []
    for g in sorted(set(gens)):
        tight = [f for f in facets if _dot(f, g) == 0]
        if d == 1 or (tight and rank([list(f) for f in tight]) == d - 1):
            rays.append(g)
    return tuple(rays), tuple(facets), True


def normalize_cone(lattice, generators, ambient=False):
    """Canonical cone from generators given in lattice (or ambient) coordinates."""
    gens = list(generators)
    if not gens:
        raise ValueError("empty generator list")
    if ambient:
        gens = [lattice.to_coords(g, integral=False) for g in gens]
    gens = [primitive(g) for g in gens if any(frac(x) != 0 for x in g)]
    if not gens:
        raise ValueError("generators are all zero")
    d = lattice.rank
    k = rank([list(g) for g in gens])
    if k == d:
        rays, facets, pointed = _full_dim_normalize(gens, d)
        return RationalCone(lattice, rays, facets, pointed, d)
    basis = saturated_basis(gens, d)
    local = [_coords_in(basis, g) for g in gens]
    lrays, lfacets, pointed = _full_dim_normalize(local, k)
    rays = tuple(sorted(_from_coords(basis, r) for r in lrays))
    # inequalities within the span lifted to Z^d, plus both signs of the span equations
    eqs = [tuple(int(x) for x in e) for e in _perp_lattice(gens, d)]
    lifted = [_lift_functional(basis, f, eqs, d) for f in lfacets]
    facets = tuple(sorted(set(lifted) | set(eqs) | {tuple(-x for x in e) for e in eqs}))
    return RationalCone(lattice, rays, facets, pointed, k)


def _perp_lattice(gens, d):
    return integer_kernel([list(g) for g in gens], d)


def _coords_in(basis, v):
    sol = solve([[b[i] for b in basis] for i in range(len(v))], list(v))
    if sol is None:
        raise ValueError("vector outside the span")
    return tuple(int(x) for x in sol)


def _from_coords(basis, c):
    d = len(basis[0])
    return tuple(sum(c[j] * basis[j][i] for j in range(len(basis))) for i in range(d))


def _lift_functional(basis, f, eqs, d):
    """Integer functional on Z^d restricting to f on the span lattice."""
    rows = [list(b) for b in basis] + [list(e) for e in eqs]
    rhs = list(f) + [0] * len(eqs)
    sol = solve(rows, rhs)
    return primitive(sol)


def dual_cone(c, dual_lattice=None):
    dl = dual_lattice or c.lattice.dual()
    if dual_lattice is not None and dual_lattice.rank != c.lattice.rank:
        raise ValueError("lattice mismatch")
    if not c.facets:
        raise ValueError("the dual of the whole space is the origin")
    return normalize_cone(dl, list(c.facets))


def _grading(c):
    g = [0] * c.ambient_dim
    for f in c.facets:
        g = [a + b for a, b in zip(g, f)]
    return tuple(g)


def _span_frame(c):
    """Saturated basis of the span of c and local coordinates of its rays."""
    basis = saturated_basis(list(c.rays), c.ambient_dim)
    return basis, [_coords_in(basis, r) for r in c.rays]


def _local_facets(rays_local, k):
    return _full_dim_facets(list(rays_local), k)


def triangulate(rays, k=None):
    """Pulling triangulation of a pointed full-dimensional cone given by its rays."""
    rays = sorted(set(tuple(r) for r in rays))
    k = k or len(rays[0])
    return _pull(rays, k)


def _pull(rays, dim):
    if len(rays) == dim:
        return [tuple(rays)]
    basis = saturated_basis(rays, len(rays[0]))
    loc = {r: _coords_in(basis, r) for r in rays}
    facets = _full_dim_facets(list(loc.values()), dim)
    apex = rays[0]
    out = []
    for f in facets:
        face = [r for r in rays if _dot(f, loc[r]) == 0]
        if apex in face:
            continue
        for simplex in _pull(face, dim - 1):
            out.append(tuple(sorted((apex,) + tuple(simplex))))
    return out


def _simplicial_mult(rays):
    rays = [list(r) for r in rays]
    if len(rays) == len(rays[0]):
        return abs(int(det(rays)))
    fac = invariant_factors([list(x) for x in zip(*rays)])
    if len(fac) < len(rays):
        raise ValueError("rays are linearly dependent")
    out = 1
    for x in fac:
        out *= x
    return out


def parallelepiped_points(rays):
    """Lattice points sum t_i r_i with 0 <= t_i < 1 for a simplicial full-rank cone."""
    d = len(rays)
    r = [[rays[j][i] for j in range(d)] for i in range(d)]
    rinv = inverse(r)

    def reduce(x):
        t = [sum(rinv[i][j] * x[j] for j in range(d)) for i in range(d)]
        t = [ti - (ti.numerator // ti.denominator) for ti in t]
        return tuple(int(sum(r[i][j] * t[j] for j in range(d))) for i in range(d))

    start = tuple([0] * d)
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for i in range(d):
            y = reduce(tuple(a + int(i == j) for j, a in enumerate(x)))
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def _hilbert_full(rays, facets, d):
    cands = set(rays)
    for simplex in _pull(sorted(rays), d):
        cands |= parallelepiped_points(simplex)
    cands.discard(tuple([0] * d))
    grade = [0] * d
    for f in facets:
        grade = [a + b for a, b in zip(grade, f)]
    order = sorted(cands, key=lambda x: (_dot(grade, x), x))
    basis = []
    for x in order:
        if not all(_dot(f, x) >= 0 for f in facets):
            continue
        if any(all(_dot(f, tuple(a - b for a, b in zip(x, h))) >= 0 for f in facets) for h in basis):
            continue
        basis.append(x)
    return basis


def hilbert_basis(c):
    """Minimal generating set of the semigroup of lattice points in c."""
    if not c.strict_convex:
        raise ValueError("cone is not strictly convex")
    if c.full_dimensional:
        return sorted(_hilbert_full(list(c.rays), list(c.facets), c.dim))
    basis, loc = _span_frame(c)
    lf = _local_facets(loc, c.dim)
    return sorted(_from_coords(basis, h) for h in _hilbert_full(loc, lf, c.dim))


def is_simplicial(c):
    return c.strict_convex and len(c.rays) == c.dim


def multiplicity(c):
    if not is_simplicial(c):
        raise ValueError("multiplicity needs a simplicial cone")
    return _simplicial_mult(c.rays)


def is_smooth(c):
    return is_simplicial(c) and _simplicial_mult(c.rays) == 1


def _bary(rays, v):
    d = len(rays)
    m = [[rays[j][i] for j in range(d)] for i in range(d)]
    return solve(m, list(v))


def _simplicial_hilbert(rays):
    d = len(rays)
    facets = _full_dim_facets(list(rays), d)
    cands = set(rays) | parallelepiped_points(rays)
    cands.discard(tuple([0] * d))
    return _hilbert_from(cands, facets, d)


def _hilbert_from(cands, facets, d):
    grade = [0] * d
    for f in facets:
        grade = [a + b for a, b in zip(grade, f)]
    basis = []
    for x in sorted(cands, key=lambda x: (_dot(grade, x), x)):
        if any(all(_dot(f, tuple(a - b for a, b in zip(x, h))) >= 0 for f in facets) for h in basis):
            continue
        basis.append(x)
    return basis


def _star(cones, v):
    """Stellar subdivision of a simplicial fan at v; returns (new cones, replaced, added)."""
    out, replaced, added = [], [], []
    for cone in cones:
        t = _bary(cone, v)
        if t is None or any(x < 0 for x in t):
            out.append(cone)
            continue
        m = _simplicial_mult(cone)
        replaced.append((cone, m))
        for i, ti in enumerate(t):
            if ti > 0:
                new = tuple(sorted(cone[:i] + (v,) + cone[i + 1:]))
                out.append(new)
                added.append((new, _simplicial_mult(new), m))
    return out, replaced, added


def _initial_triangulation(rays, facets, d):
    if len(rays) == d:
        return [tuple(sorted(rays))], None
    hb = _hilbert_full(list(rays), list(facets), d)
    interior = [h for h in hb if all(_dot(f, h) > 0 for f in facets)]
    if not interior:
        return sorted(_pull(sorted(rays), d)), None
    v = min(interior)
    cones = []
    for f in facets:
        face = sorted(r for r in rays if _dot(f, r) == 0)
        for simplex in (_pull(face, d - 1) if len(face) > d - 1 else [tuple(face)]):
            cones.append(tuple(sorted(tuple(simplex) + (v,))))
    return sorted(cones), v


def resolve_to_smooth_fan(c):
    """Subdivide c by Hilbert-basis rays until every cone is smooth.

    The certificate lists every step with the inserted ray and, for each
    replaced cone, its multiplicity together with the strictly smaller
    multiplicities of the cones that replace it.
    """
    if not c.strict_convex:
        raise ValueError("cone is not strictly convex")
    if not c.full_dimensional:
        basis, loc = _span_frame(c)
        lf = _local_facets(loc, c.dim)
        sub = _resolve_full(loc, lf, c.dim)
        cones = [tuple(sorted(_from_coords(basis, r) for r in cone)) for cone in sub.cones]
        return Fan(c.lattice, sorted(cones), sub.certificate)
    sub = _resolve_full(list(c.rays), list(c.facets), c.dim)
    return Fan(c.lattice, sub.cones, sub.certificate)


def _resolve_full(rays, facets, d):
    cones, v0 = _initial_triangulation(rays, facets, d)
    cert = []
    if v0 is not None:
        cert.append({"step": "triangulate", "ray": v0})
    while True:
        mults = {cone: _simplicial_mult(cone) for cone in cones}
        worst = max(mults.values())
        if worst == 1:
            break
        sigma = min(cone for cone in cones if mults[cone] == worst)
        best = None
        for v in sorted(_simplicial_hilbert(sigma)):
            if v in sigma:
                continue
            new, replaced, added = _star(cones, v)
            score = max(m for _, m, _ in added)
            if best is None or score < best[0]:
                best = (score, v, new, replaced, added)
        score, v, new, replaced, added = best
        if any(m >= parent for _, m, parent in added):
            raise RuntimeError("subdivision did not lower multiplicity")
        cert.append({"step": "star", "ray": v, "replaced": [m for _, m in replaced],
                     "added": [m for _, m, _ in added]})
        cones = sorted(set(new))
    return Fan(None, sorted(cones), cert)


def newton_subdivision(c):
    """Rays inserted by blowing up the torus-fixed point of a 2-d cone.

    These are the primitive inner normals of the compact edges of the Newton
    polygon of the maximal ideal (generated by the Hilbert basis of the dual).
    """
    if c.dim != 2 or c.ambient_dim != 2:
        raise ValueError("Newton subdivision is implemented for 2-d cones")
    gens = hilbert_basis(dual_cone(c))
    out = set()
    for a, b in combinations(gens, 2):
        e = (b[0] - a[0], b[1] - a[1])
        for v in ((e[1], -e[0]), (-e[1], e[0])):
            v = primitive(v)
            if not c.interior_contains(v):
                continue
            h = _dot(a, v)
            if all(_dot(g, v) >= h for g in gens):
                out.add(v)
    return sorted(out)


def blowup_sequence(c):
    """Repeatedly blow up singular fixed points of a 2-d cone until smooth.

    Returns the list of steps; each step records the cone blown up and the
    rays it inserted.
    """
    cones = [tuple(sorted(c.rays))]
    steps = []
    while True:
        bad = [cone for cone in cones if _simplicial_mult(cone) > 1]
        if not bad:
            return steps, cones
        cone = min(bad)
        rc = normalize_cone(c.lattice, list(cone))
        new_rays = newton_subdivision(rc)
        steps.append({"cone": cone, "inserted": new_rays})
        chain = sorted(list(cone) + new_rays, key=lambda r: _angle_key(cone[0], r))
        cones.remove(cone)
        cones.extend(tuple(sorted(p)) for p in zip(chain, chain[1:]))
        cones.sort()


def _angle_key(base, r):
    # order rays of a 2-d cone by the ratio det(base, r) / <grading, r>
    return Fraction(base[0] * r[1] - base[1] * r[0], abs(r[0]) + abs(r[1]))
