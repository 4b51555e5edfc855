"""Hankel determinant forms of the homogeneous partition function.

All formulas here live at xi_j = 1 and u_j = u, with x = u^2. There are
three families, each with an (L-N)-sized "LN" side and an N-sized "N"
side:

* ``Z_hankel_ad``: Hankel determinants of x-derivatives of a(u)/d(u)
  (resp. d(u)/a(u)), evaluated in u from the vacuum eigenvalues;
* ``Z_hankel_explicit``: the same with a, d written out in x;
* ``Z_hypergeom``: Hankel determinants of (x d/dx)^k applied to a
  terminating 2F1 times powers of x and x-1 (``form="hypergeometric"``),
  or to a plain N-th (resp. (L-N)-th) derivative (``form="derivative"``).

The explicit and hypergeometric families return :class:`HalfPowerScalar`
values because their prefactors carry x^(ML/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from .exact import Polynomial, RationalFunction, as_rational, det_exact
from .exact.bivariate import BivariatePolynomial
from .exact.halfpower import HalfPowerScalar, UFunction
from .lattice import LatticeSpec

SIDES = ("LN", "N")
FORMS = ("hypergeometric", "derivative")


def _check_side(side: str) -> str:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    return side


def _check_x(x) -> Fraction:
    x = as_rational(x)
    if x in (0, 1):
        raise ValueError("x must avoid the poles x = 0 and x = 1")
    return x


def _check_spec(spec: LatticeSpec) -> None:
    if spec.N > spec.M:
        raise ValueError("N <= M is required")


# -- terminating hypergeometric series -----------------------------------


def _nonpositive_int(v: Fraction) -> bool:
    return v.denominator == 1 and v <= 0


def hyp2f1_polynomial(a, b, c) -> Polynomial:
    """2F1(a, b; c; x) as a polynomial, for a or b a nonpositive integer.

    The sum stops at k = min(-a, -b) over the integer parameters; every
    (c)_k up to that point must be nonzero.
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    stops = [int(-v) for v in (a, b) if _nonpositive_int(v)]
    if not stops:
        raise ValueError("non-terminating series: a or b must be a nonpositive integer")
    top = min(stops)
    for j in range(top):
        if c + j == 0:
            raise ValueError(f"(c)_k vanishes at k={j + 1} before the series terminates")
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for k in range(top):
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1))
        coeffs.append(term)
    return Polynomial(coeffs)


def hyp2f1_terminating(a, b, c, x) -> Fraction:
    """Exact value of a terminating 2F1(a, b; c; x)."""
    return hyp2f1_polynomial(a, b, c)(as_rational(x))


def pochhammer(b, n: int) -> Fraction:
    b = as_rational(b)
    return prod((b + k for k in range(n)), start=Fraction(1))


# -- Hankel forms in x ------------------------------------------------------


@dataclass(frozen=True)
class HankelForm:
    """constant * x^(exp2/2) * (x-1)^xm1 * det[seq[i+j+shift]] (0-based i, j).

    Entries whose index is negative are zero.
    """

    size: int
    seq: tuple
    shift: int
    constant: Fraction
    exp2: int
    xm1: int

    def matrix(self, at=None) -> list[list]:
        zero = Fraction(0) if at is not None else RationalFunction(0)
        vals = [f(at) if at is not None else f for f in self.seq]
        return [[vals[i + j + self.shift] if i + j + self.shift >= 0 else zero
                 for j in range(self.size)] for i in range(self.size)]

    def evaluate(self, x) -> HalfPowerScalar:
        x = _check_x(x)
        det = det_exact(self.matrix(x))
        return HalfPowerScalar(self.constant * (x - 1) ** self.xm1 * det, self.exp2)

    def symbolic(self) -> HalfPowerScalar:
        det = det_exact(self.matrix())
        if not isinstance(det, RationalFunction):
            det = RationalFunction.constant(det)
        xm1 = RationalFunction(Polynomial([-1, 1])) ** self.xm1 if self.xm1 >= 0 \
            else RationalFunction(Polynomial([-1, 1])).inverse() ** (-self.xm1)
        return HalfPowerScalar(det * xm1 * self.constant, self.exp2)


def _xpow_ratio(num_xm1: int, den_x: int) -> RationalFunction:
    """(x-1)^num_xm1 / x^den_x, either exponent possibly negative."""
    xm1 = RationalFunction(Polynomial([-1, 1]))
    f = xm1 ** num_xm1 if num_xm1 >= 0 else xm1.inverse() ** (-num_xm1)
    return f * RationalFunction.x_power(-den_x)


def _taylor_sequence(g: RationalFunction, count: int) -> tuple:
    """[g, g', g''/2!, ...] of length count."""
    out, cur = [], g
    for s in range(count):
        out.append(cur * Fraction(1, factorial(s)))
        cur = cur.derivative()
    return tuple(out)


def _euler_sequence(f: RationalFunction, count: int) -> tuple:
    out, cur, x = [], f, RationalFunction.x()
    for _ in range(count):
        out.append(cur)
        cur = x * cur.derivative()
    return tuple(out)


def _weight_factor(spec: LatticeSpec, alpha, Delta) -> Fraction:
    L, M, N = spec.L, spec.M, spec.N
    return as_rational(alpha) ** (M * (L - 2 * N)) / as_rational(Delta) ** ((L - N) * (M - N))


def explicit_form(spec: LatticeSpec, alpha=1, Delta=1, side: str = "LN") -> HankelForm:
    """Hankel form with entries (1/s!) d^s/dx^s of an explicit power ratio."""
    _check_side(side)
    _check_spec(spec)
    L, M, N = spec.L, spec.M, spec.N
    w = _weight_factor(spec, alpha, Delta)
    if side == "LN":
        n = L - N
        shift = 1 - L + 2 * N
        g = _xpow_ratio(M, M - N + 1)
        sign = (-1) ** (n * (n - 1) // 2)
        exp2, xm1 = 2 * (L - N) + M * L, 0
    else:
        n = N
        shift = 1 + L - 2 * N
        g = _xpow_ratio(-M, -(M - N + 1))
        sign = (-1) ** (L * N + N * (N + 1) // 2)
        exp2, xm1 = 2 * N * (L - 1) - M * L, M * L
    count = max(0, 2 * (n - 1) + shift + 1) if n else 0
    return HankelForm(n, _taylor_sequence(g, count), shift, sign * w, exp2, xm1)


def _factorial_product(spec: LatticeSpec, side: str, form: str) -> Fraction:
    L, M, N = spec.L, spec.M, spec.N
    f = factorial
    if side == "LN":
        if form == "hypergeometric":
            terms = (Fraction(f(M) * f(M + i - 1), f(M - N) * f(M + L - N - 1) * f(N + i - 1))
                     for i in range(1, L - N + 1))
        else:
            terms = (Fraction(f(M + i - 1), f(N + i - 1) * f(M + L - N - 1))
                     for i in range(1, L - N + 1))
    else:
        if form == "hypergeometric":
            terms = (Fraction(f(L + M - 2 * N) * f(M - N), f(M - N) * f(L - i) * f(M - i))
                     for i in range(1, N + 1))
        else:
            terms = (Fraction(f(M - N), f(L - i) * f(M - i)) for i in range(1, N + 1))
    return prod(terms, start=Fraction(1))


def _n_side_derivative_sign(spec: LatticeSpec, sign: str) -> int:
    """Sign of the N-side derivative form.

    ``"derived"`` is (-1)^(N(L-N)), what the explicit N-side form and the
    determinant lemma give. ``"printed"`` reads the exponent as
    (L-N)N/2, which is only meaningful when (L-N)N is even.
    """
    L, N = spec.L, spec.N
    if sign == "derived":
        return (-1) ** (N * (L - N))
    if sign == "printed":
        e = (L - N) * N
        if e % 2:
            raise ValueError("printed sign exponent (L-N)N/2 is not an integer here")
        return (-1) ** (e // 2)
    raise ValueError("sign must be 'derived' or 'printed'")


def hypergeometric_form(spec: LatticeSpec, alpha=1, Delta=1, side: str = "LN",
                        form: str = "hypergeometric", sign: str = "derived") -> HankelForm:
    """Hankel form with entries (x d/dx)^(i+j-2) f(x).

    ``form="hypergeometric"`` uses the 2F1 entry functions and
    ``form="derivative"`` the plain derivative entries they came from.
    ``sign`` only matters for the N-side derivative form.
    """
    _check_side(side)
    _check_spec(spec)
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}")
    L, M, N = spec.L, spec.M, spec.N
    w = _weight_factor(spec, alpha, Delta) * _factorial_product(spec, side, form)
    n = L - N if side == "LN" else N
    if side == "LN":
        s = (-1) ** (n * (n - 1) // 2)
        exp2, xm1 = L * M - n * (n - 3), 0
    else:
        s = 1 if form == "hypergeometric" else _n_side_derivative_sign(spec, sign)
        exp2, xm1 = -L * (M - 2 * N) - N * (N + 1), M * L
    if n == 0:
        return HankelForm(0, (), 0, s * w, exp2, xm1)
    if side == "LN":
        if form == "hypergeometric":
            F = hyp2f1_polynomial(-N, L - N - 1, -M)
            f = _xpow_ratio(M + L - 2 * N - 1, M + 1) * RationalFunction(F)
        else:
            f = _nth_derivative(_xpow_ratio(M + L - N - 1, M - N + 1), N)
    else:
        if form == "hypergeometric":
            G = hyp2f1_polynomial(-L + N + 1, -L + N, -L - M + 2 * N)
            G = G.compose(Polynomial([1, -1]))
            f = _xpow_ratio(-(M + L - 2 * N + 1), -(M - L + 1)) * RationalFunction(G)
        else:
            f = _nth_derivative(_xpow_ratio(-(M - N + 1), -(M - N + 1)), L - N)
    return HankelForm(n, _euler_sequence(f, 2 * n - 1), 0, s * w, exp2, xm1)


def _nth_derivative(f: RationalFunction, n: int) -> RationalFunction:
    for _ in range(n):
        f = f.derivative()
    return f


# -- public evaluators ------------------------------------------------------


def Z_hankel_ad(spec: LatticeSpec, u, alpha=1, Delta=1, side: str = "LN") -> Fraction:
    """Hankel form in the vacuum eigenvalues a(u), d(u) at xi = 1.

    Entries are (1/s!) (d/dx)^s of a/d u^(2N-2) (LN side) or d/a u^(2-2N)
    (N side) with x = u^2. Entries with s < 0 are zero: that happens on
    the LN side when L > 2N+1 and on the N side when 2N > L+1.
    """
    from .detform import homogeneous_a, homogeneous_d

    _check_side(side)
    _check_spec(spec)
    u = as_rational(u)
    if u in (0, 1, -1):
        raise ValueError("u must avoid 0 and +-1")
    L, M, N = spec.L, spec.M, spec.N
    Delta = as_rational(Delta)
    a = homogeneous_a(M, alpha, Delta)
    d = homogeneous_d(M, alpha)
    if side == "LN":
        n, shift = L - N, 1 - L + 2 * N
        g = a * d.inverse() * UFunction.u_power(2 * N - 2)
        pref = (-1) ** (n * (n - 1) // 2) * (d.evaluate(u) ** L) * u ** (2 * (L - N))
    else:
        n, shift = N, 1 + L - 2 * N
        g = d * a.inverse() * UFunction.u_power(2 - 2 * N)
        pref = (-1) ** (N * L + N * (N + 1) // 2) * (a.evaluate(u) ** L) * u ** (2 * N * (L - 1))
    pref *= Delta ** (N * (L - N))
    if n == 0:
        return pref
    taylor, cur = [], g
    for s in range(2 * (n - 1) + shift + 1):
        taylor.append(cur.evaluate(u) / factorial(s))
        cur = cur.dx()
    mat = [[taylor[i + j + shift] if i + j + shift >= 0 else Fraction(0)
            for j in range(n)] for i in range(n)]
    return pref * det_exact(mat)


def Z_hankel_explicit(spec: LatticeSpec, x, alpha=1, Delta=1, side: str = "LN") -> HalfPowerScalar:
    """Explicit-x Hankel form; the x^(ML/2) prefactor is kept as a half power."""
    return explicit_form(spec, alpha, Delta, side).evaluate(x)


def Z_hypergeom(spec: LatticeSpec, x, alpha=1, Delta=1, side: str = "LN",
                form: str = "hypergeometric", sign: str = "derived") -> HalfPowerScalar:
    """(x d/dx)-Hankel form with terminating 2F1 (or plain derivative) entries."""
    return hypergeometric_form(spec, alpha, Delta, side, form, sign).evaluate(x)


def Z_hypergeom_symbolic(spec: LatticeSpec, alpha=1, Delta=1, side: str = "LN") -> HalfPowerScalar:
    """Z as coefficient(x) * x^(exp2/2) with an exact rational-function coefficient."""
    return hypergeometric_form(spec, alpha, Delta, side).symbolic()


# -- identity checkers ------------------------------------------------------


def derivative_formula_sides(n: int, a_param, b_param) -> tuple[Polynomial, Polynomial]:
    """Both sides of the n-th derivative of (x-1)^-a x^-b, stripped of (x-1)^(-a-n) x^(-b-n).

    The left polynomial comes from differentiating n times:
    if f = (x-1)^(-a-k) x^(-b-k) P then
    f' = (x-1)^(-a-k-1) x^(-b-k-1) [-(a+k) x P - (b+k)(x-1) P + x(x-1) P'].
    The right one is (b)_n 2F1(-n, -n-a-b+1; -n-b+1; x).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = as_rational(a_param), as_rational(b_param)
    if b.denominator == 1 and -n + 1 <= b <= 0:
        raise ValueError("b must avoid 0, -1, ..., -n+1")
    x = Polynomial.x()
    xm1 = Polynomial([-1, 1])
    P = Polynomial.constant(1)
    for k in range(n):
        P = x * P * (-(a + k)) - xm1 * P * (b + k) + x * xm1 * P.derivative()
    rhs = hyp2f1_polynomial(-n, -n - a - b + 1, -n - b + 1).scale(pochhammer(b, n))
    return P, rhs


def verify_derivative_formula(n: int, a_param, b_param, x) -> bool:
    """Check the closed form of d^n/dx^n [(x-1)^-a x^-b] at x and as polynomials."""
    x = _check_x(x)
    lhs, rhs = derivative_formula_sides(n, a_param, b_param)
    return lhs == rhs and lhs(x) == rhs(x)


def lemma_dets_sides(h: BivariatePolynomial, n: int) -> tuple[RationalFunction, RationalFunction]:
    """(det[d_x^(i-1) d_y^(j-1) h]|_{y=1}, (-1/x)^(n(n-1)/2) det[(x d_x)^(i+j-2) h(x,1)])."""
    if n < 1:
        raise ValueError("n must be positive")
    left = det_exact([[h.partial(i, j).at_y1() for j in range(n)] for i in range(n)])
    seq = _euler_sequence(h.at_y1(), 2 * n - 1)
    right = det_exact([[seq[i + j] for j in range(n)] for i in range(n)])
    k = n * (n - 1) // 2
    right = right * RationalFunction.x_power(-k, (-1) ** k)
    return _as_rf(left), _as_rf(right)


def _as_rf(v) -> RationalFunction:
    return v if isinstance(v, RationalFunction) else RationalFunction.constant(v)


def verify_lemma_dets(h: BivariatePolynomial, nu: int, n: int,
                      probes: Sequence = ((2, 3), (-1, 5), (7, 1))) -> bool:
    """Check the determinant lemma for a homogeneous Laurent polynomial h of degree nu.

    Homogeneity is checked structurally and by h(tx, ty) = t^nu h(x, y)
    at a few probe points.
    """
    if h.homogeneity_degree() != nu:
        raise ValueError(f"h is not homogeneous of degree {nu}")
    for px, py in probes:
        t = Fraction(3, 2)
        if h(t * px, t * py) != t ** nu * h(px, py):
            raise ValueError(f"h is not homogeneous of degree {nu}")
    left, right = lemma_dets_sides(h, n)
    return left == right
