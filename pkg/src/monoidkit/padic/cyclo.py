"""Exact arithmetic in cyclotomic fields Q(zeta_N), with N grown on demand."""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


def _lcm(a, b):
    return a * b // gcd(a, b)


def _polydiv_exact(num, den):
    """Exact quotient of integer polynomials (coefficient lists, low degree first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        out[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_poly(d))
    return tuple(poly)


def _reduce(coeffs, n):
    """Remainder of a rational polynomial modulo the n-th cyclotomic polynomial."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        a = c[i]
        if a:
            for j in range(deg + 1):
                c[i - deg + j] -= a * phi[j]
    c = c[:deg] + [Fraction(0)] * (deg - len(c))
    return tuple(c)


class Cyc:
    """An element of Q(zeta_N) as a polynomial in zeta_N of degree < phi(N)."""

    __slots__ = ("n", "c")

    def __init__(self, n, coeffs):
        self.n = n
        self.c = coeffs
        if n > 1 and not any(coeffs[1:]):
            self.n = 1
            self.c = (coeffs[0] if coeffs else Fraction(0),)

    @classmethod
    def rational(cls, x):
        return cls(1, (Fraction(x),))

    @classmethod
    def root(cls, k, n):
        """zeta_n^k with zeta_n = exp(2 pi i / n)."""
        k %= n
        if n == 1 or k == 0:
            return cls.rational(1)
        poly = [Fraction(0)] * (k + 1)
        poly[k] = Fraction(1)
        return cls(n, _reduce(poly, n))

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, Cyc) else cls.rational(x)

    def is_rational(self):
        return self.n == 1

    def rational_value(self):
        if self.n != 1:
            raise ValueError("not a rational number")
        return self.c[0]

    def lift(self, m):
        if m == self.n:
            return self.c
        if m % self.n:
            raise ValueError("can only lift to a multiple of the order")
        step = m // self.n
        poly = [Fraction(0)] * (step * (len(self.c) - 1) + 1)
        for i, a in enumerate(self.c):
            poly[i * step] = a
        return _reduce(poly, m)

    def _common(self, other):
        other = Cyc.coerce(other)
        m = _lcm(self.n, other.n)
        return m, self.lift(m), other.lift(m)

    def __add__(self, other):
        if not isinstance(other, Cyc):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Cyc.rational(other)
        if self.n == other.n == 1:
            return Cyc(1, (self.c[0] + other.c[0],))
        m, a, b = self._common(other)
        return Cyc(m, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.n, tuple(-x for x in self.c))

    def __sub__(self, other):
        if not isinstance(other, (Cyc, int, Fraction)):
            return NotImplemented
        return self + (-Cyc.coerce(other))

    def __rsub__(self, other):
        return Cyc.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Cyc):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Fraction(other)
            return Cyc(self.n, tuple(x * other for x in self.c))
        if other.n == 1:
            s = other.c[0]
            return Cyc(self.n, tuple(x * s for x in self.c))
        if self.n == 1:
            s = self.c[0]
            return Cyc(other.n, tuple(x * s for x in other.c))
        m, a, b = self._common(other)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyc(m, _reduce(prod, m))

    __rmul__ = __mul__

    def inverse(self):
        if self.n == 1:
            if self.c[0] == 0:
                raise ZeroDivisionError("inverse of zero")
            return Cyc(1, (1 / self.c[0],))
        sq = self * self
        if sq.n == 1:
            return self * (1 / sq.c[0])
        return self._inverse_by_solve()

    def _inverse_by_solve(self):
        from ..linalg import solve
        m, d = self.n, len(self.c)
        cols = []
        for k in range(d):
            cols.append((self * Cyc.root(k, m)).lift(m))
        a = [[cols[j][i] for j in range(d)] for i in range(d)]
        sol = solve(a, [1] + [0] * (d - 1))
        if sol is None:
            raise ZeroDivisionError("inverse of zero")
        return Cyc(m, _reduce(list(sol), m))

    def __truediv__(self, other):
        if not isinstance(other, Cyc):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyc.coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = Cyc.rational(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Cyc):
            try:
                other = Cyc.rational(other)
            except (TypeError, ValueError):
                return NotImplemented
        if self.n == other.n:
            return self.c == other.c
        m, a, b = self._common(other)
        return a == b

    def __hash__(self):
        return hash(self.c[0]) if self.n == 1 else hash("cyc")

    def __bool__(self):
        return any(self.c)

    def conjugate(self):
        """Complex conjugation: zeta -> zeta^{-1}."""
        out = Cyc.rational(0)
        for k, a in enumerate(self.c):
            if a:
                out = out + Cyc.root(-k, self.n) * a
        return out

    def to_complex(self):
        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(a) * z ** k for k, a in enumerate(self.c))

    def __repr__(self):
        if self.n == 1:
            return f"Cyc({self.c[0]})"
        terms = [f"{a}*z{self.n}^{k}" for k, a in enumerate(self.c) if a]
        return "Cyc(" + " + ".join(terms) + ")"

    def to_json(self):
        if self.n == 1:
            return str(self.c[0])
        return {"order": self.n, "coeffs": [str(a) for a in self.c]}


ZERO = Cyc.rational(0)
ONE = Cyc.rational(1)


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def sqrt_prime(p):
    """sqrt(p) inside a cyclotomic field, via the quadratic Gauss sum."""
    if p == 2:
        return Cyc.root(1, 8) + Cyc.root(-1, 8)
    g = Cyc.rational(0)
    for u in range(1, p):
        g = g + Cyc.root(u, p) * legendre(u, p)
    if p % 4 == 1:
        return g
    return g * (-Cyc.root(1, 4))


def sqrt_power(p, k):
    """p^(k/2) for an integer k."""
    base = Fraction(p) ** (k // 2)
    return sqrt_prime(p) * base if k % 2 else Cyc.rational(base)
