"""Local L-operators solving the RLL relation.

A :class:`LocalLOperator` is a 2x2 matrix over the auxiliary space whose
entries A, B, C, D are operators on one quantum site of dimension ``q``.
Index 0 of every quantum site is its vacuum; B raises and C lowers.

Besides the five-vertex operator itself this module holds the wider family
of solutions: the second five-vertex branch with w4 = 0, the four-vertex
operator, a truncated bosonic solution and the three S+- families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from ..exact import as_rational, rational_sqrt
from ..lattice import weights_at
from .operators import SparseOperator

PYTHAGOREAN_UNIT_VECTORS = {
    1: (Fraction(1),),
    2: (Fraction(3, 5), Fraction(4, 5)),
    3: (Fraction(3, 13), Fraction(4, 13), Fraction(12, 13)),
}


@dataclass(frozen=True)
class LocalLOperator:
    """Auxiliary 2x2 block matrix of quantum-site operators."""

    A: SparseOperator
    B: SparseOperator
    C: SparseOperator
    D: SparseOperator

    def __post_init__(self):
        dims = {op.dim for op in (self.A, self.B, self.C, self.D)}
        if len(dims) != 1:
            raise ValueError("A, B, C, D must act on one quantum space")

    @property
    def q(self) -> int:
        return self.A.dim

    def block(self, a: int, c: int) -> SparseOperator:
        return ((self.A, self.B), (self.C, self.D))[a][c]

    def matrix(self) -> list[list[Fraction]]:
        """Dense (2q)x(2q) matrix in the auxiliary (x) quantum basis."""
        q = self.q
        out = [[Fraction(0)] * (2 * q) for _ in range(2 * q)]
        for a in range(2):
            for c in range(2):
                for i, j, v in self.block(a, c).items():
                    out[a * q + i][c * q + j] = v
        return out

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence]) -> "LocalLOperator":
        n = len(m)
        if n % 2:
            raise ValueError("L-operator matrix must have even size")
        q = n // 2
        blocks = [[SparseOperator(q, {(i, j): m[a * q + i][c * q + j]
                                      for i in range(q) for j in range(q)})
                   for c in range(2)] for a in range(2)]
        return cls(blocks[0][0], blocks[0][1], blocks[1][0], blocks[1][1])

    def scaled(self, c) -> "LocalLOperator":
        return LocalLOperator(self.A * c, self.B * c, self.C * c, self.D * c)


def six_vertex_L(w1, w2, w3, w4, w5, w6) -> LocalLOperator:
    """Weight matrix with all six weights; w2 = 0 gives the five-vertex case."""
    return LocalLOperator.from_matrix([
        [w1, 0, 0, 0],
        [0, w4, w6, 0],
        [0, w5, w3, 0],
        [0, 0, 0, w2],
    ])


def build_L5v(u, xi, params) -> LocalLOperator:
    """Five-vertex L-operator at the vertex (u, xi).

    ``params`` is anything with ``alpha`` and ``delta`` attributes
    (e.g. :class:`~fivevertex.lattice.WeightParams`).
    """
    w = weights_at(params.alpha, params.delta, u, xi)
    return six_vertex_L(w.w1, 0, w.w3, w.w4, w.w5, w.w6)


def build_L5v_second(u, alpha, delta) -> LocalLOperator:
    """Second five-vertex branch, the one with w4 = 0."""
    u, alpha, delta = as_rational(u), as_rational(alpha), as_rational(delta)
    return six_vertex_L(alpha / u, 1 / (alpha * u), (1 / u - u) / (alpha * delta), 0, 1, 1)


def build_four_vertex_L(u, delta) -> LocalLOperator:
    u, delta = as_rational(u), as_rational(delta)
    return six_vertex_L(-1 / (delta * u), 0, u, 0, 1, 1)


def five_vertex_delta(L: LocalLOperator) -> Fraction:
    """(w3 w4 - w5 w6) / (w1 w3) read off a one-site weight matrix."""
    w1, w4, w6, w5, w3 = _weights(L)[:5]
    return (w3 * w4 - w5 * w6) / (w1 * w3)


def second_branch_delta(L: LocalLOperator) -> Fraction:
    """(w1 w2 - w5 w6) / (w1 w3)."""
    w1, _w4, w6, w5, w3, w2 = _weights(L)
    return (w1 * w2 - w5 * w6) / (w1 * w3)


def four_vertex_delta(L: LocalLOperator) -> Fraction:
    """-w5 w6 / (w1 w3)."""
    w1, _w4, w6, w5, w3, _w2 = _weights(L)
    return -w5 * w6 / (w1 * w3)


def _weights(L: LocalLOperator):
    if L.q != 2:
        raise ValueError("weights are defined for two-state sites only")
    m = L.matrix()
    return m[0][0], m[1][1], m[1][2], m[2][1], m[2][2], m[3][3]


# -- bosonic solution ---------------------------------------------------


def bosonic_s(alpha, delta_param) -> Fraction:
    """The rational s >= 0 with alpha * delta = -s^2, or raise ValueError."""
    prod = as_rational(alpha) * as_rational(delta_param)
    s = rational_sqrt(-prod)
    if s is None:
        raise ValueError(f"alpha*delta = {prod} is not of the form -s^2 with s rational")
    if s == 1:
        raise ValueError("alpha*delta = -1 is excluded (b0 or c0 would vanish)")
    return s


def build_bosonic_L(u, alpha, delta_param, Delta, F: int, sign: int = 1) -> LocalLOperator:
    """Bosonic L-operator truncated to Fock levels 0..F-1.

    With alpha*delta = -s^2 the root i*sqrt(alpha*delta) is -s, so for
    ``sign = +1`` B|0> = (1 - s)|1> and C|1> = (1 + s)|0>; ``sign = -1``
    swaps the two. B applied to the top level is dropped.
    """
    if F < 3:
        raise ValueError("Fock cutoff F must be at least 3")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    u, alpha, delta_param, Delta = (as_rational(v) for v in (u, alpha, delta_param, Delta))
    if not u or not Delta:
        raise ValueError("u and Delta must be nonzero")
    s = bosonic_s(alpha, delta_param)
    b0, c0 = 1 - sign * s, 1 + sign * s
    a_diag = [u * Delta ** (n - 1) for n in range(F)]
    a_diag[0] -= alpha / (Delta * u)
    d_diag = [Delta ** n / u for n in range(F)]
    d_diag[0] += delta_param * u
    B = {(n + 1, n): Delta ** n * (b0 if n == 0 else 1) for n in range(F - 1)}
    C = {(n, n + 1): Delta ** n * (c0 if n == 0 else 1) for n in range(F - 1)}
    return LocalLOperator(SparseOperator.diagonal(a_diag), SparseOperator(F, B),
                          SparseOperator(F, C), SparseOperator.diagonal(d_diag))


def phase_operators(Delta, F: int) -> tuple[SparseOperator, SparseOperator]:
    """Truncated (phi, phi_dagger) with phi_dagger |n> = Delta^n |n+1>."""
    Delta = as_rational(Delta)
    dag = SparseOperator(F, {(n + 1, n): Delta ** n for n in range(F - 1)})
    return dag.transpose(), dag


# -- S+- family ---------------------------------------------------------


def spm_operators(n_vec: Sequence) -> tuple[SparseOperator, SparseOperator]:
    """(S-, S+) with S- carrying ``n_vec`` in its first column below the diagonal."""
    n_vec = [as_rational(v) for v in n_vec]
    if sum(v * v for v in n_vec) != 1:
        raise ValueError("n_vec must be a unit vector")
    dim = len(n_vec) + 1
    sm = SparseOperator(dim, {(i + 1, 0): v for i, v in enumerate(n_vec)})
    return sm, sm.transpose()


def x_operator(sm: SparseOperator, sp: SparseOperator, beta) -> SparseOperator:
    beta = as_rational(beta)
    if beta == -1:
        raise ValueError("beta = -1 is singular")
    ident = SparseOperator.identity(sm.dim)
    return (sp @ sm) * (1 / (1 + beta)) + (ident - sm @ sp) * (beta / (1 + beta))


def y_operator(sm: SparseOperator, sp: SparseOperator, gamma, Delta) -> SparseOperator:
    gamma, Delta = as_rational(gamma), as_rational(Delta)
    if gamma == -1:
        raise ValueError("gamma = -1 is singular")
    ident = SparseOperator.identity(sm.dim)
    return (ident * (1 / (1 + gamma)) + (sp @ sm) * (1 / Delta - 1 / (1 + gamma))
            + (sm @ sp) * (gamma / (1 + gamma)))


def build_Spm_L(variant: str, m: int, n_vec: Sequence | None, u, alpha, beta1, beta2,
                gamma, Delta) -> LocalLOperator:
    """Finite-dimensional S+- solution on an (m+1)-dimensional site.

    ``variant`` is ``"first"``, ``"second"`` or ``"third"``. B = S- and
    C = S+ in all three; they differ in A and D. Needs beta1 * beta2 = 0.
    """
    u, alpha, beta1, beta2, gamma, Delta = (
        as_rational(v) for v in (u, alpha, beta1, beta2, gamma, Delta))
    if beta1 * beta2 != 0:
        raise ValueError("need beta1 * beta2 = 0")
    if not u or not Delta:
        raise ValueError("u and Delta must be nonzero")
    if n_vec is None:
        if m not in PYTHAGOREAN_UNIT_VECTORS:
            raise ValueError(f"no default unit vector for m={m}; pass n_vec")
        n_vec = PYTHAGOREAN_UNIT_VECTORS[m]
    if len(n_vec) != m:
        raise ValueError("n_vec must have m components")
    sm, sp = spm_operators(n_vec)
    X1 = x_operator(sm, sp, beta1)
    X2 = x_operator(sm, sp, beta2)
    if variant == "first":
        if not alpha:
            raise ValueError("alpha must be nonzero")
        Y = y_operator(sm, sp, gamma, Delta)
        A = Y * (alpha * u) - X1 * (alpha / (Delta * u))
        D = X2 * (u / alpha)
    elif variant == "second":
        if not alpha:
            raise ValueError("alpha must be nonzero")
        Y = y_operator(sm, sp, gamma, Delta)
        A = X1 * (alpha / u)
        D = Y * (1 / (alpha * u)) - X2 * (u / (alpha * Delta))
    elif variant == "third":
        A = X1 * (-1 / (Delta * u))
        D = X2 * u
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return LocalLOperator(A, sm, sp, D)


# -- sites: L-operators as functions of the spectral parameter ----------


@dataclass(frozen=True)
class Site:
    """One quantum site: dimension plus the map u -> L(u)."""

    dim: int
    build: Callable[[Fraction], LocalLOperator]
    label: str = ""

    def __call__(self, u) -> LocalLOperator:
        L = self.build(as_rational(u))
        if L.q != self.dim:
            raise ValueError("site builder returned the wrong dimension")
        return L

    def vacuum_eigenvalues(self, u) -> tuple[Fraction, Fraction]:
        """(a, d): the vacuum entries of A(u) and D(u) (vacuum = index 0)."""
        L = self(u)
        return L.A[0, 0], L.D[0, 0]


class _Params:
    __slots__ = ("alpha", "delta")

    def __init__(self, alpha, delta):
        self.alpha, self.delta = as_rational(alpha), as_rational(delta)


def five_vertex_site(xi, alpha, Delta) -> Site:
    p = _Params(alpha, Delta)
    xi = as_rational(xi)
    return Site(2, lambda u: build_L5v(u, xi, p), f"5v(xi={xi}, alpha={p.alpha})")


def bosonic_site(alpha, delta_param, Delta, F: int, sign: int = 1) -> Site:
    bosonic_s(alpha, delta_param)
    return Site(F, lambda u: build_bosonic_L(u, alpha, delta_param, Delta, F, sign),
                f"boson(alpha={alpha}, delta={delta_param}, F={F})")


def spm_site(variant: str, m: int, alpha, beta1, beta2, gamma, Delta, n_vec=None) -> Site:
    return Site(m + 1, lambda u: build_Spm_L(variant, m, n_vec, u, alpha, beta1, beta2,
                                             gamma, Delta),
                f"spm-{variant}(m={m})")
