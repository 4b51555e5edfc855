"""Reduced quotients of rational polynomials with exact differentiation."""

from __future__ import annotations

from fractions import Fraction

from .polynomial import Polynomial, poly_gcd
from .rational import as_rational

_ONE = Polynomial.constant(1)
_ZERO = Polynomial()


class RationalFunction:
    """``num / den`` kept in canonical form.

    Canonical means gcd(num, den) = 1 and den is monic; zero is 0/1.
    Equality is therefore structural equality of the reduced pair.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        num = _as_poly(num)
        den = _ONE if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(Polynomial.x(), _reduced=True)

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls(Polynomial.constant(c), _reduced=True)

    @classmethod
    def x_power(cls, k: int, c=1) -> "RationalFunction":
        """c * x**k for any integer k."""
        if k >= 0:
            return cls(Polynomial.monomial(k, c), _reduced=True)
        return cls(Polynomial.constant(c), Polynomial.monomial(-k), _reduced=True)

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    # -- field operations ----------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        if o.den.degree == 0:
            return RationalFunction(self.num + o.num * self.den, self.den, _reduced=True)
        if self.den.degree == 0:
            return RationalFunction(self.num * o.den + o.num, o.den, _reduced=True)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RationalFunction(_ZERO, _reduced=True)
        # cross-cancel before multiplying keeps the result reduced
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1, d2 = self.num, o.den
        if g1.degree > 0:
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        n2, d1 = o.num, self.den
        if g2.degree > 0:
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        num, den = n1 * n2, d1 * d2
        lead = den.lead
        if lead != 1:
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        return RationalFunction(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        lead = self.num.lead
        return RationalFunction(self.den.scale(1 / lead), self.num.scale(1 / lead), _reduced=True)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("integer powers only")
        if k < 0:
            return self.inverse() ** (-k)
        # (num/den)^k stays reduced
        return RationalFunction(self.num ** k, self.den ** k, _reduced=True)

    # -- calculus and evaluation ---------------------------------------

    def derivative(self) -> "RationalFunction":
        if self.den.degree == 0:
            return RationalFunction(self.num.derivative(), self.den, _reduced=True)
        n, d = self.num, self.den
        # d/dx (n/d) = (n' d - n d') / d^2, with g = gcd(d, d') removed
        dd = d.derivative()
        g = poly_gcd(d, dd)
        dg = d.exact_div(g)
        top = n.derivative() * dg - n * dd.exact_div(g)
        return RationalFunction(top, dg * d)

    def __call__(self, x):
        den = self.den(x)
        if not den:
            raise ZeroDivisionError(f"pole of rational function at {x}")
        return self.num(x) / den

    def compose_affine(self, a, b) -> "RationalFunction":
        """f(a*x + b)."""
        lin = Polynomial((b, a))
        return RationalFunction(self.num.compose(lin), self.den.compose(lin))


def _as_poly(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    return Polynomial.constant(as_rational(p))


def _coerce(other) -> RationalFunction | None:
    if isinstance(other, RationalFunction):
        return other
    if isinstance(other, Polynomial):
        return RationalFunction(other, _reduced=True)
    if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
        return RationalFunction(Polynomial.constant(other), _reduced=True)
    return None


def _canonical(num: Polynomial, den: Polynomial):
    if num.is_zero():
        return _ZERO, _ONE
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
    lead = den.lead
    if lead != 1:
        inv = 1 / lead
        num, den = num.scale(inv), den.scale(inv)
    return num, den


def ratfun_derivative(f: RationalFunction) -> RationalFunction:
    """Quotient-rule derivative in canonical form."""
    return f.derivative()


def euler_derivative(f: RationalFunction, k: int) -> RationalFunction:
    """(x d/dx)^k f by k exact repetitions; k = 0 returns f."""
    if k < 0:
        raise ValueError("k must be non-negative")
    x = RationalFunction.x()
    for _ in range(k):
        f = x * f.derivative()
    return f


def euler_sequence(f: RationalFunction, count: int) -> list[RationalFunction]:
    """[f, (x d/dx) f, ..., (x d/dx)^(count-1) f]."""
    out = []
    x = RationalFunction.x()
    for _ in range(count):
        out.append(f)
        f = x * f.derivative()
    return out
