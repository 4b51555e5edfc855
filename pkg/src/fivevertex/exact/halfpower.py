"""Exact bookkeeping for square roots of x = u^2.

Homogeneous-limit quantities are functions of x except for an overall
u^k prefactor with k possibly odd. Two small types keep that exact:

* :class:`HalfPowerScalar` is ``coefficient * x^(exp2/2)``, a number once x
  is fixed (the coefficient may itself be a rational function of x);
* :class:`UFunction` is ``u^eps * h(x)`` with eps in {0, 1}, closed under
  d/dx because du/dx = u / (2x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratfunc import RationalFunction
from .rational import as_rational


@dataclass(frozen=True)
class HalfPowerScalar:
    """coefficient * x^(exp2 / 2)."""

    coefficient: object
    exp2: int = 0

    def __mul__(self, other):
        if isinstance(other, HalfPowerScalar):
            return HalfPowerScalar(self.coefficient * other.coefficient, self.exp2 + other.exp2)
        return HalfPowerScalar(self.coefficient * other, self.exp2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, HalfPowerScalar):
            return HalfPowerScalar(self.coefficient / other.coefficient, self.exp2 - other.exp2)
        return HalfPowerScalar(self.coefficient / other, self.exp2)

    @property
    def is_integral_power(self) -> bool:
        return self.exp2 % 2 == 0

    def collapse(self, x=None):
        """Rational (or rational function) value when the power of x is whole.

        ``x`` is needed when the coefficient is a number; with a
        RationalFunction coefficient the power is folded into it.
        """
        if self.exp2 % 2:
            raise ValueError("odd doubled exponent: value needs sqrt(x)")
        k = self.exp2 // 2
        if isinstance(self.coefficient, RationalFunction):
            return self.coefficient * RationalFunction.x_power(k)
        if x is None:
            raise ValueError("x is required to collapse a numeric coefficient")
        return self.coefficient * as_rational(x) ** k

    def evaluate(self, sqrt_x) -> Fraction:
        """Value at x = sqrt_x^2, choosing the branch u = sqrt_x."""
        u = as_rational(sqrt_x)
        c = self.coefficient
        if isinstance(c, RationalFunction):
            c = c(u * u)
        return c * u ** self.exp2

    def __eq__(self, other):
        if not isinstance(other, HalfPowerScalar):
            return NotImplemented
        if (self.exp2 - other.exp2) % 2:
            return False
        if self.exp2 == other.exp2:
            return self.coefficient == other.coefficient
        if self.exp2 >= other.exp2:
            k = (self.exp2 - other.exp2) // 2
            return _times_xk(self.coefficient, k) == other.coefficient
        k = (other.exp2 - self.exp2) // 2
        return self.coefficient == _times_xk(other.coefficient, k)

    def __hash__(self):
        return hash(self.exp2 % 2)


def _times_xk(c, k: int):
    if isinstance(c, RationalFunction):
        return c * RationalFunction.x_power(k)
    raise TypeError("comparison across powers needs rational-function coefficients")


@dataclass(frozen=True)
class UFunction:
    """u^eps * h(x) with x = u^2 and eps in {0, 1}."""

    eps: int
    h: RationalFunction

    @classmethod
    def u_power(cls, k: int, coeff=None) -> "UFunction":
        """u^k * coeff(x), split into parity and a power of x."""
        eps = k % 2
        base = RationalFunction.x_power((k - eps) // 2)
        if coeff is not None:
            base = base * coeff
        return cls(eps, base)

    def __mul__(self, other):
        if isinstance(other, UFunction):
            eps = self.eps + other.eps
            h = self.h * other.h
            if eps == 2:
                eps, h = 0, h * RationalFunction.x()
            return UFunction(eps, h)
        return UFunction(self.eps, self.h * other)

    __rmul__ = __mul__

    def __add__(self, other: "UFunction"):
        if self.eps != other.eps:
            raise ValueError("cannot add functions of different u-parity")
        return UFunction(self.eps, self.h + other.h)

    def inverse(self) -> "UFunction":
        """1 / (u^eps h) = u^eps / (x h)."""
        inv = self.h.inverse()
        if self.eps:
            inv = inv * RationalFunction.x_power(-1)
        return UFunction(self.eps, inv)

    def scale(self, c) -> "UFunction":
        return UFunction(self.eps, self.h * c)

    def dx(self) -> "UFunction":
        """d/dx, using d(u)/dx = u / (2x)."""
        dh = self.h.derivative()
        if self.eps:
            dh = dh + self.h * RationalFunction.x_power(-1, Fraction(1, 2))
        return UFunction(self.eps, dh)

    def evaluate(self, u) -> Fraction:
        u = as_rational(u)
        val = self.h(u * u)
        return val * u if self.eps else val
