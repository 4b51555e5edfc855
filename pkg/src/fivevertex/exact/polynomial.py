"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first and trailing zeros are always
stripped, so the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Sequence

from .rational import as_rational


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """Immutable polynomial in one variable with Fraction coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([as_rational(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        # coeffs must already be stripped Fractions
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Polynomial":
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1) -> "Polynomial":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-as_rational(r), 1))
        return p

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Polynomial", self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial._raw(_strip([Fraction(other)]))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial._raw(())
        if len(b) == 1:
            s = b[0]
            return Polynomial._raw(tuple(c * s for c in a))
        if len(a) == 1:
            s = a[0]
            return Polynomial._raw(tuple(c * s for c in b))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial._raw((Fraction(1),))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = as_rational(c)
        if not c:
            return Polynomial._raw(())
        return Polynomial._raw(tuple(x * c for x in self.coeffs))

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Polynomial._raw((Fraction(0),) * k + self.coeffs)

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(o.coeffs) - 1
        inv_lead = 1 / o.coeffs[-1]
        if len(rem) - 1 < db:
            return Polynomial._raw(()), self
        quot = [Fraction(0)] * (len(rem) - db)
        bc = o.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c * inv_lead
            quot[k - db] = c
            for i in range(db + 1):
                rem[k - db + i] -= c * bc[i]
        return Polynomial._raw(_strip(quot)), Polynomial._raw(_strip(rem[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    # -- calculus and evaluation ---------------------------------------

    def derivative(self) -> "Polynomial":
        return Polynomial._raw(tuple(k * c for k, c in enumerate(self.coeffs) if k)
                               if len(self.coeffs) > 1 else ())

    def __call__(self, x):
        acc = 0 if not isinstance(x, Fraction) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "Polynomial") -> "Polynomial":
        """self(other(x))."""
        acc = Polynomial._raw(())
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self.scale(1 / self.coeffs[-1])

    def valuation(self) -> int:
        """Multiplicity of the root x = 0 (0 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    # -- integer-primitive helpers used by gcd -------------------------

    def primitive_integer_coeffs(self) -> list[int]:
        """Integer coefficients of the primitive associate (positive lead)."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // _igcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        return _make_primitive(ints)


def _make_primitive(ints: list[int]) -> list[int]:
    g = 0
    for c in ints:
        g = _igcd(g, c)
        if g == 1:
            break
    if g > 1:
        ints = [c // g for c in ints]
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials (lowest degree first)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        k = len(r) - 1
        c = r[-1]
        r = [x * lb for x in r]
        for i in range(db + 1):
            r[k - db + i] -= c * b[i]
        while r and r[-1] == 0:
            r.pop()
    return r


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd via a primitive Euclidean remainder sequence.

    gcd(0, 0) is 0.
    """
    if not a.coeffs:
        return b.monic()
    if not b.coeffs:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return Polynomial._raw((Fraction(1),))
    x = a.primitive_integer_coeffs()
    y = b.primitive_integer_coeffs()
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _int_prem(x, y)
        x, y = y, _make_primitive(r) if r else r
    lead = x[-1]
    return Polynomial._raw(tuple(Fraction(c, lead) for c in x))


def poly_derivative(p: Polynomial) -> Polynomial:
    """Formal derivative."""
    return p.derivative()
