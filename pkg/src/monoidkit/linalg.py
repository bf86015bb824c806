"""Exact rational and integer linear algebra on small dense matrices."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd


def frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (list, tuple)) and len(x) == 2:
        return Fraction(int(x[0]), int(x[1]))
    return Fraction(x)


def vec(xs):
    return tuple(frac(x) for x in xs)


def lcm(a, b):
    return a * b // gcd(a, b) if a and b else max(abs(a), abs(b))


def lcm_list(xs):
    out = 1
    for x in xs:
        out = lcm(out, x)
    return out


def clear_denominators(v):
    """Smallest positive integer multiple of a rational vector, as ints."""
    d = lcm_list([frac(x).denominator for x in v])
    return tuple(int(frac(x) * d) for x in v)


def primitive(v):
    w = clear_denominators(v)
    g = 0
    for x in w:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in w)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def transpose(a):
    return [list(r) for r in zip(*a)] if a else []


def mat_mul(a, b):
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in bt] for r in a]


def mat_vec(a, v):
    return tuple(sum((x * y for x, y in zip(r, v)), Fraction(0)) for r in a)


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def to_fraction_matrix(a):
    return [[frac(x) for x in r] for r in a]


def rref(a):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = to_fraction_matrix(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a):
    if not a:
        return 0
    return len(rref(a)[1])


def det(a):
    m = to_fraction_matrix(a)
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        out *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def inverse(a):
    n = len(a)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(to_fraction_matrix(a))]
    m, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in m]


def nullspace(a, ncols=None):
    """Rational basis of {x : a x = 0}."""
    if not a:
        n = ncols or 0
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    m, piv = rref(a)
    n = len(m[0])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for r, p in enumerate(piv):
            x[p] = -m[r][f]
        basis.append(tuple(x))
    return basis


def solve(a, b):
    """One solution of a x = b (free variables zero), or None if inconsistent."""
    n = len(a[0])
    aug = [list(r) + [frac(v)] for r, v in zip(to_fraction_matrix(a), b)]
    m, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for r, p in enumerate(piv):
        x[p] = m[r][n]
    return tuple(x)


def _ext_gcd(a, b):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def _column_echelon(a, n):
    """Integer column operations: returns (cols, ucols) with a * u lower echelon."""
    rows = [[int(x) for x in r] for r in a]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    cols = [list(c) for c in zip(*rows)] if rows else [[] for _ in range(n)]
    ucols = [list(c) for c in zip(*u)]
    r0 = 0
    for i in range(len(rows)):
        for j in range(r0 + 1, n):
            while cols[j][i] != 0:
                a0, b0 = cols[r0][i], cols[j][i]
                if a0 == 0:
                    cols[r0], cols[j] = cols[j], cols[r0]
                    ucols[r0], ucols[j] = ucols[j], ucols[r0]
                    continue
                qt = b0 // a0
                cols[j] = [y - qt * x for x, y in zip(cols[r0], cols[j])]
                ucols[j] = [y - qt * x for x, y in zip(ucols[r0], ucols[j])]
                if cols[j][i] != 0:
                    cols[r0], cols[j] = cols[j], cols[r0]
                    ucols[r0], ucols[j] = ucols[j], ucols[r0]
        if r0 < n and cols[r0][i] != 0:
            r0 += 1
        if r0 == n:
            break
    return cols, ucols


def integer_kernel(a, ncols=None):
    """Integer basis of the lattice {x in Z^n : a x = 0} (a integral)."""
    n = len(a[0]) if a else ncols
    cols, ucols = _column_echelon(a, n)
    return [tuple(ucols[j]) for j in range(n) if all(x == 0 for x in cols[j])]


def integer_solve(a, b):
    """An integral x with a x = b, or None (a integral, b integral)."""
    n = len(a[0])
    cols, ucols = _column_echelon(a, n)
    y = [0] * n
    rest = [int(x) for x in b]
    j = 0
    for i in range(len(a)):
        if j < n and cols[j][i] != 0:
            if rest[i] % cols[j][i]:
                return None
            y[j] = rest[i] // cols[j][i]
            rest = [r - y[j] * c for r, c in zip(rest, cols[j])]
            j += 1
        elif rest[i] != 0:
            return None
    return tuple(sum(ucols[k][i] * y[k] for k in range(n)) for i in range(n))


def determinantal_divisors(a):
    """d_k = gcd of k x k minors, k = 1..rank, for an integer matrix."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, int(det([[a[i][j] for j in cs] for i in rs])))
        if g == 0:
            break
        out.append(g)
    return out


def invariant_factors(a):
    """Diagonal of the Smith normal form (nonzero part)."""
    d = determinantal_divisors(a)
    return [d[0]] + [d[i] // d[i - 1] for i in range(1, len(d))] if d else []


def saturated_basis(vectors, dim):
    """Integer basis of span(vectors) intersected with Z^dim."""
    if not vectors:
        return []
    perp = nullspace([list(v) for v in vectors], dim)
    if not perp:
        return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    perp_int = [clear_denominators(p) for p in perp]
    return integer_kernel(perp_int, dim)
