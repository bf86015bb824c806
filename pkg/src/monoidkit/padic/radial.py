"""Functions of the valuation on Q_p^* (O*-invariant), with a geometric tail towards 0."""
from __future__ import annotations

from fractions import Fraction

from .cyclo import Cyc, ONE, ZERO
from .laurent import LaurentRational, LPoly
from .schwartz import char_ball, char_shell


class RadialFunction:
    """f(p^j O*) = values[j] for j < start, and tail * ratio^(j - start) for j >= start.

    Finitely many j < start carry nonzero values.  ratio = 1 means f is constant
    near 0 and extends to a Schwartz function on Q_p when values are finite.
    """

    def __init__(self, p, values=None, start=0, tail=ZERO, ratio=ONE):
        self.p = p
        self.start = start
        self.values = {}
        for j, v in (values or {}).items():
            v = Cyc.coerce(v)
            if j >= start:
                raise ValueError("explicit values must lie below the tail start")
            if v:
                self.values[j] = v
        self.tail = Cyc.coerce(tail)
        self.ratio = Cyc.coerce(ratio)

    @classmethod
    def shell(cls, p, j, coef=ONE):
        return cls(p, {j: coef}, j + 1)

    @classmethod
    def ball(cls, p, j, coef=ONE):
        return cls(p, {}, j, coef, ONE)

    def __call__(self, j):
        if j < self.start:
            return self.values.get(j, ZERO)
        return self.tail * self.ratio ** (j - self.start) if self.tail else ZERO

    def low(self):
        keys = list(self.values) + ([self.start] if self.tail else [])
        return min(keys) if keys else self.start

    def _restart(self, start):
        if start < self.start:
            raise ValueError("tail can only start later")
        vals = {j: self(j) for j in range(self.low(), start)}
        return RadialFunction(self.p, vals, start, self(start), self.ratio)

    def __add__(self, other):
        if self.tail and other.tail and self.ratio != other.ratio:
            raise ValueError("tails with different ratios")
        s = max(self.start, other.start)
        a, b = self._restart(s), other._restart(s)
        vals = {j: a(j) + b(j) for j in range(min(a.low(), b.low()), s)}
        ratio = self.ratio if self.tail else other.ratio
        return RadialFunction(self.p, vals, s, a.tail + b.tail, ratio)

    def __mul__(self, c):
        c = Cyc.coerce(c)
        return RadialFunction(self.p, {j: v * c for j, v in self.values.items()}, self.start,
                              self.tail * c, self.ratio)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        s = max(self.start, other.start)
        lo = min(self.low(), other.low())
        if any(self(j) != other(j) for j in range(lo, s + 1)):
            return False
        t1, t2 = self(s), other(s)
        if not t1 and not t2:
            return True
        return self.ratio == other.ratio

    __hash__ = None

    def times_abs(self, k):
        """Multiply by |x|^k."""
        qk = Fraction(self.p) ** (-k)
        vals = {j: v * qk ** j for j, v in self.values.items()}
        return RadialFunction(self.p, vals, self.start, self.tail * qk ** self.start, self.ratio * qk)

    def is_schwartz(self):
        return not self.tail or self.ratio == ONE

    def schwartz(self):
        if not self.is_schwartz():
            raise ValueError("geometric tail is not locally constant at 0")
        f = char_ball(self.p, self.start) * self.tail if self.tail else None
        for j, v in self.values.items():
            g = char_shell(self.p, j) * v
            f = g if f is None else f + g
        return f if f is not None else char_ball(self.p, 0) * 0

    def fourier(self):
        """Radial Fourier transform, from the transforms of shells and balls."""
        if not self.is_schwartz():
            raise ValueError("only Schwartz radial functions have a Fourier transform here")
        p = self.p
        q = Fraction(p)
        out = RadialFunction(p)
        for v, c in self.values.items():
            # char(p^v O*) -> q^-v char(p^-v O) - q^-(v+1) char(p^-(v+1) O)
            out = out + RadialFunction.ball(p, -v, c * q ** (-v)) - RadialFunction.ball(p, -v - 1, c * q ** (-v - 1))
        if self.tail:
            out = out + RadialFunction.ball(p, -self.start, self.tail * q ** (-self.start))
        return out

    def zeta(self, y_coef=ONE):
        """sum_j f(p^j O*) (c X)^j as a rational function of X, c = y_coef."""
        c = Cyc.coerce(y_coef)
        num = LPoly({j: v * c ** j for j, v in self.values.items()})
        out = LaurentRational(num)
        if self.tail:
            s = self.start
            out = out + LaurentRational.geometric(self.tail * c ** s, s, self.ratio * c)
        return out

    def __repr__(self):
        return f"RadialFunction({self.values}, start={self.start}, tail={self.tail}, ratio={self.ratio})"
