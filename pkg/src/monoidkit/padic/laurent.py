"""Rational functions in one variable X with cyclotomic coefficients."""
from __future__ import annotations

from .cyclo import Cyc, ONE, ZERO


class LPoly:
    """Laurent polynomial: exponent -> nonzero Cyc coefficient."""

    __slots__ = ("t",)

    def __init__(self, terms=None):
        self.t = {}
        for k, a in (terms or {}).items():
            a = Cyc.coerce(a)
            if a:
                self.t[int(k)] = a

    @classmethod
    def monomial(cls, a, k=0):
        return cls({k: a})

    def is_zero(self):
        return not self.t

    def __add__(self, other):
        out = dict(self.t)
        for k, a in other.t.items():
            out[k] = out[k] + a if k in out else a
        return LPoly(out)

    def __neg__(self):
        return LPoly({k: -a for k, a in self.t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LPoly):
            other = Cyc.coerce(other)
            return LPoly({k: a * other for k, a in self.t.items()})
        out = {}
        for i, a in self.t.items():
            for j, b in other.t.items():
                out[i + j] = out[i + j] + a * b if i + j in out else a * b
        return LPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(sorted(self.t)))

    def low(self):
        return min(self.t)

    def high(self):
        return max(self.t)

    def shift(self, s):
        return LPoly({k + s: a for k, a in self.t.items()})

    def substitute(self, c, sign=1):
        """X -> c * X^sign."""
        c = Cyc.coerce(c)
        return LPoly({sign * k: a * c ** k for k, a in self.t.items()})

    def evaluate(self, x):
        x = Cyc.coerce(x)
        return sum((a * x ** k for k, a in self.t.items()), ZERO)

    def __repr__(self):
        return " + ".join(f"({a})X^{k}" for k, a in sorted(self.t.items())) or "0"


def _poly_divmod(a, b):
    """Division of ordinary polynomials given as dicts with exponents >= 0."""
    a = dict(a)
    db = max(b)
    lead_inv = b[db].inverse()
    q = {}
    while a and max(a) >= db:
        da = max(a)
        c = a[da] * lead_inv
        q[da - db] = c
        for k, v in b.items():
            kk = k + da - db
            nv = a.get(kk, ZERO) - c * v
            if nv:
                a[kk] = nv
            else:
                a.pop(kk, None)
    return q, a


def _poly_gcd(a, b):
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return a


class LaurentRational:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num if isinstance(num, LPoly) else LPoly.monomial(num)
        self.den = den if den is not None else LPoly.monomial(ONE)
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def const(cls, a):
        return cls(LPoly.monomial(a))

    @classmethod
    def monomial(cls, a, k):
        return cls(LPoly.monomial(a, k))

    @classmethod
    def geometric(cls, a, k, ratio=ONE, step=1):
        """a X^k / (1 - ratio X^step)."""
        return cls(LPoly.monomial(a, k), LPoly({0: ONE, step: -Cyc.coerce(ratio)}))

    def __add__(self, other):
        other = _coerce(other)
        if self.den.t == other.den.t:
            return LaurentRational(self.num + other.num, self.den)
        return LaurentRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return LaurentRational(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return LaurentRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return LaurentRational(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __eq__(self, other):
        other = _coerce(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return 0

    def is_zero(self):
        return self.num.is_zero()

    def substitute(self, c, sign=1):
        return LaurentRational(self.num.substitute(c, sign), self.den.substitute(c, sign))

    def evaluate(self, x):
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDivisionError("pole")
        return self.num.evaluate(x) / d

    def series(self, order):
        """Laurent expansion at X = 0: exponent -> coefficient for the first `order` exponents."""
        if self.num.is_zero():
            return {}
        s = self.den.low()
        d = {k - s: a for k, a in self.den.t.items()}
        n0 = self.num.low()
        n = {k - n0: a for k, a in self.num.t.items()}
        inv0 = d[0].inverse()
        out = []
        for i in range(order):
            acc = n.get(i, ZERO)
            for j in range(1, min(i, max(d)) + 1):
                if j in d:
                    acc = acc - d[j] * out[i - j]
            out.append(acc * inv0)
        return {n0 - s + i: a for i, a in enumerate(out) if a}

    def normalized(self):
        """Cancel common factors; denominator monic with nonzero constant term."""
        if self.num.is_zero():
            return LaurentRational(LPoly(), LPoly.monomial(ONE))
        sn, sd = self.num.low(), self.den.low()
        n = {k - sn: a for k, a in self.num.t.items()}
        d = {k - sd: a for k, a in self.den.t.items()}
        g = _poly_gcd(n, d)
        if max(g) > 0:
            n, _ = _poly_divmod(n, g)
            d, _ = _poly_divmod(d, g)
        c = d[0].inverse()
        num = LPoly({k + sn - sd: a * c for k, a in n.items()})
        den = LPoly({k: a * c for k, a in d.items()})
        return LaurentRational(num, den)

    def coefficient_arrays(self):
        r = self.normalized()
        lo = r.num.low() if not r.num.is_zero() else 0
        hi = r.num.high() if not r.num.is_zero() else 0
        return {"num_low": lo,
                "num": [r.num.t.get(k, ZERO).to_json() for k in range(lo, hi + 1)],
                "den": [r.den.t.get(k, ZERO).to_json() for k in range(0, r.den.high() + 1)]}

    def __repr__(self):
        return f"({self.num}) / ({self.den})"


def _coerce(x):
    if isinstance(x, LaurentRational):
        return x
    if isinstance(x, LPoly):
        return LaurentRational(x)
    return LaurentRational.const(Cyc.coerce(x))


X = LaurentRational.monomial(ONE, 1)
