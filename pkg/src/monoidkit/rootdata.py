"""Split tori and split reductive groups as exact root data.

Lattices are stored by a rational basis matrix (columns are basis vectors in an
ambient rational space); lattice points are integer coordinate tuples.  The
character and cocharacter bases are always chosen dual to each other, so the
pairing of two points is the dot product of their coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import det, frac, identity, inverse, mat_vec, solve, transpose


@dataclass(frozen=True)
class LatticeBasis:
    rank: int
    basis: tuple  # rows of the basis matrix; column j is the j-th basis vector

    def __post_init__(self):
        if self.rank and det([list(r) for r in self.basis]) == 0:
            raise ValueError("lattice basis is singular")

    @classmethod
    def from_columns(cls, cols):
        cols = [tuple(frac(x) for x in c) for c in cols]
        n = len(cols)
        return cls(n, tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))

    @classmethod
    def standard(cls, n):
        return cls(n, tuple(tuple(r) for r in identity(n)))

    def columns(self):
        return [tuple(self.basis[i][j] for i in range(self.rank)) for j in range(self.rank)]

    def to_ambient(self, coords):
        return mat_vec(self.basis, [frac(c) for c in coords])

    def to_coords(self, ambient, integral=True):
        c = mat_vec(inverse([list(r) for r in self.basis]), [frac(a) for a in ambient])
        if integral:
            if any(x.denominator != 1 for x in c):
                raise ValueError(f"{tuple(ambient)} is not in the lattice")
            return tuple(int(x) for x in c)
        return c

    def contains(self, ambient):
        try:
            self.to_coords(ambient)
            return True
        except ValueError:
            return False

    def dual(self):
        inv_t = transpose(inverse([list(r) for r in self.basis]))
        return LatticeBasis(self.rank, tuple(tuple(r) for r in inv_t))


def reflection_matrix(root, coroot):
    """Matrix of mu -> mu - <root, mu> coroot on cocharacter coordinates."""
    n = len(root)
    return tuple(tuple(int(i == j) - coroot[i] * root[j] for j in range(n)) for i in range(n))


def dual_action(m):
    """Action on characters that keeps the pairing invariant: inverse transpose."""
    inv = inverse([list(r) for r in m])
    return tuple(tuple(int(x) for x in r) for r in transpose(inv))


def apply(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


@dataclass(frozen=True)
class RootDatum:
    name: str
    char_lattice: LatticeBasis
    cochar_lattice: LatticeBasis
    roots: tuple  # char coordinates, positive roots first then negatives
    coroots: tuple  # cochar coordinates, aligned with roots
    simple_roots: tuple  # indices into roots
    weyl_gens: tuple = field(default=())  # matrices on cochar coordinates

    @property
    def rank(self):
        return self.cochar_lattice.rank

    @property
    def positive_roots(self):
        return self.roots[: len(self.roots) // 2]

    def char_weyl_gens(self):
        return tuple(dual_action(g) for g in self.weyl_gens)

    def pairing(self, chi, mu):
        return sum((frac(a) * frac(b) for a, b in zip(chi, mu)), Fraction(0))

    def check(self):
        for a, c in zip(self.roots, self.coroots):
            if self.pairing(a, c) != 2:
                raise ValueError("root/coroot pairing is not 2")
        for g in self.weyl_gens:
            for i in range(self.rank):
                if apply(g, apply(g, _unit(self.rank, i))) != _unit(self.rank, i):
                    raise ValueError("Weyl generator is not an involution")
        gram = [[self.pairing(_unit(self.rank, i), _unit(self.rank, j)) for j in range(self.rank)]
                for i in range(self.rank)]
        amb = [[sum(self.char_lattice.columns()[i][k] * self.cochar_lattice.columns()[j][k]
                    for k in range(self.rank)) for j in range(self.rank)] for i in range(self.rank)]
        if amb != gram:
            raise ValueError("lattice bases are not dual")
        return True


def _unit(n, i):
    return tuple(int(i == j) for j in range(n))


def _build(name, cochar_cols, roots_amb, coroots_amb, simple):
    cochar = LatticeBasis.from_columns(cochar_cols)
    char = cochar.dual()
    roots = tuple(char.to_coords(r) for r in roots_amb)
    coroots = tuple(cochar.to_coords(c) for c in coroots_amb)
    gens = tuple(reflection_matrix(roots[i], coroots[i]) for i in simple)
    d = RootDatum(name, char, cochar, roots, coroots, tuple(simple), gens)
    d.check()
    return d


def _gl_roots(n):
    pos = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pos.sort(key=lambda ij: (ij[1] - ij[0], ij[0]))
    vecs = []
    for i, j in pos:
        v = [0] * n
        v[i], v[j] = 1, -1
        vecs.append(tuple(v))
    vecs = vecs + [tuple(-x for x in v) for v in vecs]
    return vecs


def GL(n):
    if n <= 0:
        raise ValueError("GL(n) needs n >= 1")
    roots = _gl_roots(n)
    simple = list(range(n - 1))
    return _build(f"GL{n}", [_unit(n, i) for i in range(n)], roots, roots, simple)


def torus(r):
    if r <= 0:
        raise ValueError("torus rank must be positive")
    return _build(f"T{r}", [_unit(r, i) for i in range(r)], [], [], [])


def gl2_sym_cover(n):
    """GL2 x_{Gm} Gm: cocharacters {(m,l) : m+l = 0 mod n}, characters a-b in Z."""
    if n <= 0:
        raise ValueError("cover degree must be positive")
    roots = [(1, -1), (-1, 1)]
    return _build(f"GL2_sym{n}", [(1, -1), (0, n)], roots, roots, [0])


def build_root_datum(desc):
    """Build from a descriptor: {"type": "GL", "n": k}, {"type": "torus", "rank": r},
    {"type": "gl2_sym_cover", "n": k}."""
    kind = desc.get("type")
    if kind == "GL":
        return GL(int(desc["n"]))
    if kind == "torus":
        return torus(int(desc.get("rank", desc.get("n", 0))))
    if kind == "gl2_sym_cover":
        return gl2_sym_cover(int(desc["n"]))
    raise ValueError(f"unknown group descriptor {desc!r}")


def weyl_orbit(d, v, side="cochar"):
    """Orbit of a lattice point (coordinates) under the Weyl generators, by closure."""
    gens = d.weyl_gens if side == "cochar" else d.char_weyl_gens()
    v = tuple(v)
    seen = {v}
    todo = [v]
    while todo:
        x = todo.pop()
        for g in gens:
            y = apply(g, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def weyl_group(d, side="cochar"):
    """All Weyl group elements as matrices, by closure from the identity."""
    gens = d.weyl_gens if side == "cochar" else d.char_weyl_gens()
    n = d.rank
    e = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {e}
    todo = [e]
    while todo:
        x = todo.pop()
        for g in gens:
            y = tuple(tuple(sum(g[i][k] * x[k][j] for k in range(n)) for j in range(n)) for i in range(n))
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def pairing(d, chi, mu):
    return d.pairing(chi, mu)


def half_sum_positive(d):
    """Half the sum of positive roots, in character coordinates (rational)."""
    out = [Fraction(0)] * d.rank
    for r in d.positive_roots:
        out = [a + Fraction(b, 2) for a, b in zip(out, r)]
    return tuple(out)


def is_dominant(d, chi):
    return all(d.pairing(chi, d.coroots[i]) >= 0 for i in d.simple_roots)


def dominant_representative(d, chi):
    orbit = weyl_orbit(d, chi, side="char")
    return max(x for x in orbit if is_dominant(d, x))


@dataclass(frozen=True)
class LeviDatum:
    parent: RootDatum
    simple_subset: tuple
    datum: RootDatum


def levi_subdatum(d, S):
    """Levi subgroup containing the maximal torus, given by a subset of simple roots."""
    S = tuple(sorted(S))
    if any(s not in d.simple_roots for s in S):
        raise ValueError("subset is not made of simple roots")
    gens = tuple(reflection_matrix(d.roots[i], d.coroots[i]) for i in S)
    # roots of L: the parent roots lying in the span of the chosen simple roots
    pos = d.positive_roots
    simple = [d.roots[i] for i in S]
    keep = []
    for idx, r in enumerate(pos):
        if _in_span(r, simple):
            keep.append(idx)
    npos = len(pos)
    roots = tuple(pos[i] for i in keep) + tuple(d.roots[npos + i] for i in keep)
    coroots = tuple(d.coroots[i] for i in keep) + tuple(d.coroots[npos + i] for i in keep)
    simple_idx = tuple(keep.index(i) for i in S)
    name = f"{d.name}_L{''.join(str(s + 1) for s in S) or '0'}"
    sub = RootDatum(name, d.char_lattice, d.cochar_lattice, roots, coroots, simple_idx, gens)
    return LeviDatum(d, S, sub)


def _in_span(v, vs):
    if not vs:
        return all(x == 0 for x in v)
    return solve([[s[i] for s in vs] for i in range(len(v))], list(v)) is not None


def maximal_levis(d):
    """All Levis obtained by dropping exactly one simple root."""
    out = []
    for s in d.simple_roots:
        out.append(levi_subdatum(d, [t for t in d.simple_roots if t != s]))
    return out
