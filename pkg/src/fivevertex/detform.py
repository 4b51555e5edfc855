"""Determinant formulas for vacuum elements and the partition function.

The central object is the L x L matrix V with split index ``s``::

    V[i][j] = d(u_j) u_j^(2i-1)   for i = 1..s
    V[i][j] = a(u_j) u_j^(2i-3)   for i = s+1..L

Its determinant, divided by the Vandermonde product in u_j^2, gives the
vacuum elements <C..C A..A B..B> and <C..C D..D B..B> for any vacuum
eigenvalues a, d, and hence the partition function.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Sequence

from .exact import RationalFunction, as_rational, det_exact
from .exact.halfpower import UFunction
from .exact.polynomial import Polynomial
from .lattice import LatticeSpec, WeightParams
from .qism.monodromy import VacuumEigenvalues
from .qism.verify import f_fn, g_fn


def _rationals(seq) -> list[Fraction]:
    return [as_rational(v) for v in seq]


def _require_distinct_squares(u: Sequence[Fraction]) -> None:
    if any(v == 0 for v in u):
        raise ValueError("rapidities must be nonzero")
    if len({v * v for v in u}) != len(u):
        raise ValueError("coincident rapidities: the u_j^2 must be pairwise distinct")


def vandermonde_sq_inverse(u: Sequence[Fraction]) -> Fraction:
    """prod_{i<j} 1 / (u_j^2 - u_i^2)."""
    out = Fraction(1)
    for i, j in combinations(range(len(u)), 2):
        out /= u[j] * u[j] - u[i] * u[i]
    return out


def v_matrix(u: Sequence, eig: VacuumEigenvalues, split: int) -> list[list[Fraction]]:
    """The matrix V with d-rows 1..split and a-rows split+1..L."""
    u = _rationals(u)
    L = len(u)
    if not 0 <= split <= L:
        raise ValueError("split index out of range")
    dv = [eig.d(x) for x in u]
    av = [eig.a(x) for x in u]
    rows = []
    for i in range(1, L + 1):
        if i <= split:
            rows.append([dv[j] * u[j] ** (2 * i - 1) for j in range(L)])
        else:
            rows.append([av[j] * u[j] ** (2 * i - 3) for j in range(L)])
    return rows


def S_A(n: int, m: int, u: Sequence, eig: VacuumEigenvalues, Delta) -> Fraction:
    """<C(u_{n+m+1})..C(u_L) A(u_{n+1})..A(u_{n+m}) B(u_1)..B(u_n)>."""
    u = _rationals(u)
    if len(u) != 2 * n + m:
        raise ValueError("need 2n + m rapidities")
    _require_distinct_squares(u)
    Delta = as_rational(Delta)
    pref = Delta ** ((n + m) * n) * prod(u[n:n + m], start=Fraction(1))
    return pref * vandermonde_sq_inverse(u) * det_exact(v_matrix(u, eig, n))


def S_D(n: int, m: int, u: Sequence, eig: VacuumEigenvalues, Delta) -> Fraction:
    """<C..C D(u_{n+1})..D(u_{n+m}) B..B>; split index n + m."""
    u = _rationals(u)
    if len(u) != 2 * n + m:
        raise ValueError("need 2n + m rapidities")
    _require_distinct_squares(u)
    Delta = as_rational(Delta)
    pref = Delta ** ((n + m) * n) / prod(u[n:n + m], start=Fraction(1))
    return pref * vandermonde_sq_inverse(u) * det_exact(v_matrix(u, eig, n + m))


def S_A_recursion_rhs(n: int, m: int, u: Sequence, eig: VacuumEigenvalues, Delta) -> Fraction:
    """Right side of the recursion removing one A: the f, g-weighted sum of
    S_A with one rapidity among u_1..u_{n+1} dropped (needs m >= 1)."""
    if m < 1:
        raise ValueError("the recursion needs at least one A operator")
    u = _rationals(u)
    total = Fraction(0)
    w = u[n]
    for i in range(n + 1):
        ui = u[i]
        others = [u[j] for j in range(n + 1) if j != i]
        coef = eig.a(ui) * (w / ui) * prod((f_fn(ui, uj, Delta) for uj in others),
                                           start=Fraction(1))
        rest = u[:i] + u[i + 1:]
        total += coef * S_A(n, m - 1, rest, eig, Delta)
    return total


def five_vertex_eigenvalues(params: WeightParams) -> VacuumEigenvalues:
    return VacuumEigenvalues.five_vertex(params.xi, params.alpha, params.delta)


def Z_theorem1(spec: LatticeSpec, params: WeightParams, *, prefactor: str = "sad") -> Fraction:
    """Partition function from the L x L determinant.

    ``prefactor="sad"`` takes the u-prefactor from the vacuum-element
    formulas: the middle block u_{n+1}..u_{n+m} (to the power +-1). With
    ``prefactor="printed"`` the product runs over u_1..u_{|L-2N|}
    instead; see the README for which of the two matches the lattice sum.
    """
    params.check(spec, distinct=True)
    L, N = spec.L, spec.N
    n, m = spec.n_particles, spec.m_middle
    eig = five_vertex_eigenvalues(params)
    u = list(params.u)
    if prefactor == "sad":
        if L >= 2 * N:
            return S_A(n, m, u, eig, params.delta)
        return S_D(n, m, u, eig, params.delta)
    if prefactor != "printed":
        raise ValueError("prefactor must be 'sad' or 'printed'")
    sign = 1 if L >= 2 * N else -1
    pref = params.delta ** ((L - N) * N)
    for j in range(abs(L - 2 * N)):
        pref *= u[j] ** sign
    return pref * vandermonde_sq_inverse(u) * det_exact(v_matrix(u, eig, N))


# -- homogeneous limit --------------------------------------------------


def homogeneous_a(M: int, alpha, Delta) -> UFunction:
    """a(u) at xi = 1: (alpha/Delta)^M (x-1)^M u^-M."""
    alpha, Delta = as_rational(alpha), as_rational(Delta)
    coeff = RationalFunction(Polynomial([-1, 1]) ** M) * ((alpha / Delta) ** M)
    return UFunction.u_power(-M, coeff)


def homogeneous_d(M: int, alpha) -> UFunction:
    """d(u) at xi = 1: u^M / alpha^M."""
    return UFunction.u_power(M, RationalFunction.constant(1 / as_rational(alpha) ** M))


def q_matrix_functions(spec: LatticeSpec, alpha, Delta) -> list[list[UFunction]]:
    """Entries (1/(j-1)!) d^{j-1}/dx^{j-1} of d u^{2i-1} (i <= N) or a u^{2i-3}."""
    L, N, M = spec.L, spec.N, spec.M
    a = homogeneous_a(M, alpha, Delta)
    d = homogeneous_d(M, alpha)
    rows = []
    for i in range(1, L + 1):
        base = d * UFunction.u_power(2 * i - 1) if i <= N else a * UFunction.u_power(2 * i - 3)
        row, cur = [], base
        for j in range(1, L + 1):
            row.append(cur.scale(Fraction(1, factorial(j - 1))))
            cur = cur.dx()
        rows.append(row)
    return rows


def _check_hom_u(u) -> Fraction:
    u = as_rational(u)
    if u == 0:
        raise ValueError("u must be nonzero")
    return u


def Z_hom_Q(spec: LatticeSpec, u, alpha=1, Delta=1) -> Fraction:
    """Homogeneous partition function Delta^{N(L-N)} u^{L-2N} det Q at the point u.

    u = +-1 is accepted (a(u) vanishes there) and gives the exact value.
    """
    u = _check_hom_u(u)
    Delta = as_rational(Delta)
    q = [[e.evaluate(u) for e in row] for row in q_matrix_functions(spec, alpha, Delta)]
    return Delta ** (spec.N * spec.A) * u ** (spec.L - 2 * spec.N) * det_exact(q)


def Z_hom_function(spec: LatticeSpec, alpha=1, Delta=1) -> UFunction:
    """Z as u^eps * R(x), computed symbolically from det Q."""
    rows = q_matrix_functions(spec, alpha, Delta)
    eps_rows = sum(e.eps for e in (row[0] for row in rows))
    h = det_exact([[e.h for e in row] for row in rows])
    if not isinstance(h, RationalFunction):
        h = RationalFunction.constant(h)
    out = UFunction.u_power(eps_rows + spec.L - 2 * spec.N, h)
    return out.scale(as_rational(Delta) ** (spec.N * spec.A))


def q_limit_residual(spec: LatticeSpec, u0, alpha=1, Delta=1) -> Fraction:
    """Check that det V / Vandermonde tends to det Q as every u_j -> u0.

    Each entry of V is u_j^eps h_i(x_j) with x_j = u_j^2 and one eps for
    all rows, so det V = prod u_j^eps det[h_i(x_j)]. We put
    x_j = u0^2 + j t, divide det[h_i(x_j)] by prod (x_j - x_i) as a rational
    function of t, set t = 0 and restore u0^(L eps). Returns that limit
    minus det Q(u0); zero means agreement.
    """
    u0 = _check_hom_u(u0)
    x0 = u0 * u0
    rows = q_matrix_functions(spec, alpha, Delta)
    L = spec.L
    t = RationalFunction.x()
    xs = [t * j + x0 for j in range(L)]
    eps = rows[0][0].eps if rows else 0
    vmat = [[_compose_affine(row[0].h, j, x0) for j in range(L)] for row in rows]
    num = det_exact(vmat)
    if not isinstance(num, RationalFunction):
        num = RationalFunction.constant(num)
    vdm = RationalFunction.constant(1)
    for i, j in combinations(range(L), 2):
        vdm = vdm * (xs[j] - xs[i])
    limit = (num / vdm)(Fraction(0)) * u0 ** (L * eps)
    detq = det_exact([[e.evaluate(u0) for e in row] for row in rows])
    return limit - detq


def _compose_affine(h: RationalFunction, j: int, x0: Fraction) -> RationalFunction:
    """h(x0 + j t) as a rational function of t."""
    return h.compose_affine(Fraction(j), x0)


# -- scalar products and the n x n form ----------------------------------


def q_n_matrix(n: int, u: Sequence, eig: VacuumEigenvalues) -> list[list[Fraction]]:
    """n x n matrix with v_j = u_{2n-j+1}; entry (j, k) as in the n x n formula."""
    u = _rationals(u)
    v = [u[2 * n - j] for j in range(1, n + 1)]
    rows = []
    for j in range(n):
        vj = v[j]
        row = []
        for k in range(n):
            uk = u[k]
            den = uk / vj - vj / uk
            if den == 0:
                raise ZeroDivisionError("singular denominator u_k/v_j - v_j/u_k")
            row.append((eig.d(vj) * eig.a(uk) * uk ** (2 * (n - 1))
                        - eig.d(uk) * eig.a(vj) * vj ** (2 * (n - 1))) / den)
        rows.append(row)
    return rows


def scalar_product_Qn(n: int, u: Sequence, eig: VacuumEigenvalues, Delta=1) -> Fraction:
    """<C(v_1)..C(v_n) B(u_1)..B(u_n)> from the n x n determinant.

    The formula is stated for Delta = 1; for general Delta the vacuum
    element carries the extra factor Delta^(n^2), which is included here.
    """
    u = _rationals(u)
    if len(u) != 2 * n:
        raise ValueError("need 2n rapidities")
    _require_distinct_squares(u)
    v = [u[2 * n - j] for j in range(1, n + 1)]
    pref = Fraction(1)
    for j, k in combinations(range(n), 2):
        pref /= (v[j] ** 2 - v[k] ** 2) * (u[k] ** 2 - u[j] ** 2)
    return as_rational(Delta) ** (n * n) * pref * det_exact(q_n_matrix(n, u, eig))


def appendix_b_sides(n: int, a_t: Sequence, d_t: Sequence, u: Sequence
                     ) -> tuple[Fraction, Fraction]:
    """Both sides of the 2n x 2n = n x n identity with free a~_j, d~_j."""
    u, a_t, d_t = _rationals(u), _rationals(a_t), _rationals(d_t)
    L = 2 * n
    if not (len(u) == len(a_t) == len(d_t) == L):
        raise ValueError("need 2n values of u, a~ and d~")
    _require_distinct_squares(u)
    V = []
    for i in range(1, L + 1):
        if i <= n:
            V.append([d_t[j] * u[j] ** (2 * (i - 1)) for j in range(L)])
        else:
            V.append([a_t[j] * u[j] ** (2 * (i - n - 1)) for j in range(L)])
    lhs = vandermonde_sq_inverse(u) * det_exact(V)
    Q = []
    for i in range(1, n + 1):
        r = L - i  # 0-based index of u_{2n-i+1}
        Q.append([(d_t[r] * a_t[j] - d_t[j] * a_t[r]) / (u[j] ** 2 - u[r] ** 2)
                  for j in range(n)])
    pref = Fraction(1)
    for j, k in combinations(range(n), 2):
        pref /= (u[k] ** 2 - u[j] ** 2) * (u[n + k] ** 2 - u[n + j] ** 2)
    rhs = pref * det_exact(Q)
    return lhs, rhs


def verify_appendixB(n: int, a_t: Sequence, d_t: Sequence, u: Sequence) -> bool:
    lhs, rhs = appendix_b_sides(n, a_t, d_t, u)
    return lhs == rhs


def base_case_S1(u1, u2, eig: VacuumEigenvalues, Delta) -> Fraction:
    """g(u2, u1) [a(u2) d(u1) - a(u1) d(u2)]."""
    return g_fn(u2, u1, Delta) * (eig.a(u2) * eig.d(u1) - eig.a(u1) * eig.d(u2))
