"""Minimal bivariate Laurent polynomials in (x, y).

Only what the Hankel lemma checks need: sums of monomials c * x^i * y^j
with integer (possibly negative) exponents, mixed partial derivatives,
homogeneity, and specialisation y = 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .polynomial import Polynomial
from .ratfunc import RationalFunction
from .rational import as_rational


class BivariatePolynomial:
    """Sparse map (i, j) -> coefficient of x^i y^j; zero terms are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = as_rational(c)
            if c:
                clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def x(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BivariatePolynomial":
        return cls({(i, j): c})

    @classmethod
    def constant(cls, c) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {c}" for (i, j), c in sorted(self.terms.items()))
        return f"BivariatePolynomial({{{body}}})"

    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return BivariatePolynomial.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((i, j), c), = self.terms.items()
            return BivariatePolynomial({(i * k, j * k): c ** k})
        out = BivariatePolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def partial(self, dx: int = 0, dy: int = 0) -> "BivariatePolynomial":
        """Mixed partial derivative d^dx/dx^dx d^dy/dy^dy."""
        out = {}
        for (i, j), c in self.terms.items():
            coef = c
            for t in range(dx):
                coef *= i - t
            for t in range(dy):
                coef *= j - t
            if coef:
                out[(i - dx, j - dy)] = coef
        return BivariatePolynomial(out)

    def homogeneity_degree(self) -> int | None:
        """Total degree if every monomial has the same one, else None."""
        degs = {i + j for i, j in self.terms}
        if len(degs) == 1:
            return degs.pop()
        if not degs:
            return 0
        return None

    def at_y1(self) -> RationalFunction:
        """Specialise y = 1; the result is a Laurent polynomial in x."""
        if not self.terms:
            return RationalFunction(0)
        coeffs: dict[int, Fraction] = {}
        for (i, _j), c in self.terms.items():
            coeffs[i] = coeffs.get(i, 0) + c
        low = min(coeffs)
        shift = -low if low < 0 else 0
        top = max(coeffs) + shift
        dense = [Fraction(0)] * (top + 1)
        for i, c in coeffs.items():
            dense[i + shift] += c
        return RationalFunction(Polynomial(dense), Polynomial.monomial(shift))

    def __call__(self, x, y):
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            acc += c * Fraction(x) ** i * Fraction(y) ** j
        return acc


def bivar_partial(p: BivariatePolynomial, dx: int, dy: int) -> BivariatePolynomial:
    """Exact mixed partial derivative."""
    return p.partial(dx, dy)
