"""Brute-force reference computations, coded independently of the main algorithms."""
from __future__ import annotations

import cmath
from itertools import combinations, product
from math import gcd

import numpy as np


def _prim(v):
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return tuple(int(x) // g for x in v) if g else tuple(v)


def brute_facets(rays):
    """Inner facet normals of a full-dimensional cone in dimension 2 or 3, by trying all candidates."""
    d = len(rays[0])
    cands = set()
    if d == 2:
        for r in rays:
            cands.add(_prim((-r[1], r[0])))
            cands.add(_prim((r[1], -r[0])))
    elif d == 3:
        for a, b in combinations(rays, 2):
            n = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
            if any(n):
                cands.add(_prim(n))
                cands.add(_prim(tuple(-x for x in n)))
    else:
        raise ValueError("brute force facets only in dimension 2 or 3")
    out = []
    for n in sorted(cands):
        dots = [sum(a * b for a, b in zip(n, r)) for r in rays]
        if all(x >= 0 for x in dots) and sum(1 for x in dots if x == 0) >= d - 1:
            out.append(n)
    return out


def is_pointed_full(rays):
    d = len(rays[0])
    if np.linalg.matrix_rank(np.array(rays, dtype=float)) < d:
        return False
    f = brute_facets(rays)
    return len(f) >= d and np.linalg.matrix_rank(np.array(f, dtype=float)) == d


def brute_hilbert_basis(rays):
    """Irreducible lattice points of cone(rays), by a box search and a sieve in grading order.

    Every Hilbert basis element lies in a half-open parallelepiped spanned by
    linearly independent rays, so |x_j| <= sum of the d largest |r_ij|.
    """
    rays = [tuple(int(x) for x in r) for r in rays]
    d = len(rays[0])
    facets = np.array(brute_facets(rays), dtype=np.int64)
    grade = facets.sum(axis=0)
    bounds = [sum(sorted((abs(r[j]) for r in rays), reverse=True)[:d]) for j in range(d)]
    axes = [np.arange(-b, b + 1) for b in bounds]
    pts = np.array(np.meshgrid(*axes, indexing="ij")).reshape(d, -1).T
    pts = pts[(pts @ facets.T >= 0).all(axis=1)]
    pts = pts[(pts != 0).any(axis=1)]
    g = pts @ grade
    order = np.argsort(g, kind="stable")
    pts, g = pts[order], g[order]
    hb = np.zeros((0, d), dtype=np.int64)
    start = 0
    while start < len(pts):
        stop = start
        while stop < len(pts) and g[stop] == g[start]:
            stop += 1
        block = pts[start:stop]
        if len(hb):
            diff = block[:, None, :] - hb[None, :, :]
            inside = (diff @ facets.T >= 0).all(axis=2)
            keep = ~inside.any(axis=1)
            block = block[keep]
        hb = np.vstack([hb, block])
        start = stop
    return sorted(tuple(int(x) for x in h) for h in hb)


def random_cone_rays(rng, dim, max_entry=6, max_rays=5):
    """Rays of a random strictly convex full-dimensional cone with entries in [-max_entry, max_entry]."""
    while True:
        k = rng.randint(dim, max(dim, max_rays if dim == 3 else 2))
        rays = []
        for _ in range(k):
            r = tuple(rng.randint(-max_entry, max_entry) for _ in range(dim))
            if any(r):
                rays.append(_prim(r))
        rays = sorted(set(rays))
        if len(rays) >= dim and is_pointed_full(rays):
            return rays


def _ext_gcd(a, b):
    if b == 0:
        return (1 if a >= 0 else -1), 0
    x, y = _ext_gcd(b, a % b)
    return y, x - (a // b) * y


def hirzebruch_jung(m, k):
    """Continued fraction m/k = b1 - 1/(b2 - ...), for 0 < k < m coprime."""
    out = []
    while k:
        b = -(-m // k)
        out.append(b)
        m, k = k, b * k - m
    return out


def hj_resolution_rays(v0, v1):
    """Rays of the minimal resolution of the 2-d cone spanned by v0 and v1.

    A unimodular change of basis puts the cone in the form cone((0,1), (m,-k)),
    where the rays are u0=(0,1), u1=(1,0), u_(i+1) = b_i u_i - u_(i-1).
    """
    a, b = v0
    s, t = _ext_gcd(a, b)
    if s * a + t * b != 1:
        raise ValueError("first ray is not primitive")
    A = [[b, -a], [s, t]]
    w = (A[0][0] * v1[0] + A[0][1] * v1[1], A[1][0] * v1[0] + A[1][1] * v1[1])
    if w[0] < 0:
        A = [[-A[0][0], -A[0][1]], A[1]]
        w = (-w[0], w[1])
    m = w[0]
    if m == 0:
        raise ValueError("rays are collinear")
    # shear (0,1) fixed, second coordinate of the other ray into (-m, 0]
    t_sh = (-w[1]) // m
    A = [A[0], [A[1][0] + t_sh * A[0][0], A[1][1] + t_sh * A[0][1]]]
    k = -(w[1] + t_sh * m)
    rays = [(0, 1)]
    if m == 1:
        rays.append((m, -k))
    else:
        prev, cur = (0, 1), (1, 0)
        rays.append(cur)
        for bi in hirzebruch_jung(m, k):
            prev, cur = cur, (bi * cur[0] - prev[0], bi * cur[1] - prev[1])
            rays.append(cur)
    det_a = A[0][0] * A[1][1] - A[0][1] * A[1][0]
    inv = [[A[1][1] * det_a, -A[0][1] * det_a], [-A[1][0] * det_a, A[0][0] * det_a]]
    return sorted({(inv[0][0] * x + inv[0][1] * y, inv[1][0] * x + inv[1][1] * y) for x, y in rays})


def partition_tally(gens, bound):
    """Counts of nonnegative combinations landing in the box |x_j| <= bound, by enumerating multipliers.

    The multipliers are capped with a positive linear form found by trying small integer vectors.
    """
    gens = [tuple(int(x) for x in g) for g in gens]
    d = len(gens[0])
    phi = None
    for cand in product(range(-3, 4), repeat=d):
        if all(sum(a * b for a, b in zip(cand, g)) > 0 for g in gens):
            phi = cand
            break
    if phi is None:
        raise ValueError("no small positive form")
    top = max(sum(a * b for a, b in zip(phi, x)) for x in product((-bound, bound), repeat=d))
    deg = [sum(a * b for a, b in zip(phi, g)) for g in gens]
    out = {}

    def rec(i, pt, used):
        if i == len(gens):
            if all(abs(x) <= bound for x in pt):
                out[pt] = out.get(pt, 0) + 1
            return
        a = 0
        while used + a * deg[i] <= top:
            rec(i + 1, tuple(x + a * y for x, y in zip(pt, gens[i])), used + a * deg[i])
            a += 1
    rec(0, (0,) * d, 0)
    return out


def rook_brute_count(n):
    """0/1 matrices with at most one 1 in every row and column."""
    count = 0
    for bits in product((0, 1), repeat=n * n):
        rows = [bits[i * n:(i + 1) * n] for i in range(n)]
        if all(sum(r) <= 1 for r in rows) and all(sum(r[j] for r in rows) <= 1 for j in range(n)):
            count += 1
    return count


def gauss_sum_numeric(p, chi_values):
    """sum over u = 1..p-1 of chi(u) exp(2 pi i u / p), chi given as complex values."""
    return sum(chi_values[u] * cmath.exp(2j * cmath.pi * u / p) for u in range(1, p))


def legendre_values(p):
    return {u: (1 if pow(u, (p - 1) // 2, p) == 1 else -1) for u in range(1, p)}
