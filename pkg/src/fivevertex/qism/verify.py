"""Checkers for the Yang-Baxter algebra and the Bethe-state identities.

Every checker returns exact residuals (zero means the identity holds)
rather than a bare boolean, so a failure can be reported with its size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Callable, Sequence

from ..exact import as_rational, solve_linear
from ..sampling import RationalSampler
from .lops import LocalLOperator, Site, five_vertex_site
from .monodromy import Monodromy, VacuumEigenvalues, bracket, monodromy_from_sites
from .operators import SparseOperator, Vector, basis_vector, vector_add_scaled, vector_sub


def f_fn(v, u, Delta) -> Fraction:
    """f(v, u) = Delta v^2 / (v^2 - u^2)."""
    v, u, Delta = as_rational(v), as_rational(u), as_rational(Delta)
    if v * v == u * u:
        raise ZeroDivisionError("f(v, u) is singular at v^2 = u^2")
    return Delta * v * v / (v * v - u * u)


def g_fn(v, u, Delta) -> Fraction:
    """g(v, u) = Delta v u / (v^2 - u^2)."""
    v, u, Delta = as_rational(v), as_rational(u), as_rational(Delta)
    if v * v == u * u:
        raise ZeroDivisionError("g(v, u) is singular at v^2 = u^2")
    return Delta * v * u / (v * v - u * u)


@dataclass(frozen=True)
class RMatrix:
    """The 4x4 intertwiner on two auxiliary spaces, basis (uu, ud, du, dd)."""

    u: Fraction
    v: Fraction
    Delta: Fraction

    @property
    def entries(self) -> list[list[Fraction]]:
        f = f_fn(self.v, self.u, self.Delta)
        g = g_fn(self.v, self.u, self.Delta)
        z = Fraction(0)
        return [[f, z, z, z], [z, g, Fraction(1), z], [z, z, g, z], [z, z, z, f]]


def build_R(u, v, Delta) -> RMatrix:
    return RMatrix(as_rational(u), as_rational(v), as_rational(Delta))


def _two_aux(X, Y) -> SparseOperator:
    """X (x) Y on aux (x) aux (x) quantum with quantum composition X @ Y.

    Blocks are indexed ((a1, a2), (b1, b2)) -> X[a1][b1] @ Y[a2][b2].
    """
    q = X.block(0, 0).dim
    ent = {}
    for a1 in range(2):
        for a2 in range(2):
            for b1 in range(2):
                for b2 in range(2):
                    blk = X.block(a1, b1) @ Y.block(a2, b2)
                    ri, ci = (a1 * 2 + a2) * q, (b1 * 2 + b2) * q
                    for i, j, v in blk.items():
                        ent[(ri + i, ci + j)] = v
    return SparseOperator(4 * q, ent)


def _r_times_identity(R: RMatrix, q: int) -> SparseOperator:
    ent = {}
    for r, row in enumerate(R.entries):
        for c, v in enumerate(row):
            if v:
                for s in range(q):
                    ent[(r * q + s, c * q + s)] = v
    return SparseOperator(4 * q, ent)


def intertwining_residual(Xu, Xv, R: RMatrix, safe_dim: int | None = None) -> SparseOperator:
    """R (X(u) (x) X(v)) - (X(v) (x) X(u)) R for L-operators or monodromies.

    With ``safe_dim`` only quantum indices 0..safe_dim are kept, in every
    auxiliary block (for truncated Fock spaces).
    """
    q = Xu.block(0, 0).dim
    RI = _r_times_identity(R, q)
    res = RI @ _two_aux(Xu, Xv) - _two_aux(Xv, Xu) @ RI
    if safe_dim is not None:
        res = res.restrict([a * q + s for a in range(4) for s in range(safe_dim + 1)])
    return res


def verify_RLL(Lop_builder: Callable[[Fraction], LocalLOperator], R: RMatrix | None = None,
               u=None, v=None, *, Delta=None, safe_dim: int | None = None) -> SparseOperator:
    """Residual of the RLL relation for ``Lop_builder`` at (u, v).

    Either pass an :class:`RMatrix` or (u, v, Delta) to build one.
    """
    if R is None:
        R = build_R(u, v, Delta)
    return intertwining_residual(Lop_builder(R.u), Lop_builder(R.v), R, safe_dim)


def verify_RTT(make: Callable[[Fraction], Monodromy], u, v, Delta) -> SparseOperator:
    R = build_R(u, v, Delta)
    return intertwining_residual(make(R.u), make(R.v), R)


RELATION_NAMES = (
    "AA", "AB1", "AB2", "BB", "CA2", "CB=AD", "DA2", "DB2",
    "CA1", "CB1", "CB=DA", "DB1", "CC", "CD1", "CD2", "DD",
)


def commutation_residuals(Tu, Tv, u, v, Delta) -> list[SparseOperator]:
    """The sixteen component identities of RTT, as residual operators.

    Unprimed operators are at ``u`` and primed ones at ``v``; f = f(v, u),
    g = g(v, u) and gp = g(u, v).
    """
    u, v = as_rational(u), as_rational(v)
    f, g, gp = f_fn(v, u, Delta), g_fn(v, u, Delta), g_fn(u, v, Delta)
    A, B, C, D = Tu.block(0, 0), Tu.block(0, 1), Tu.block(1, 0), Tu.block(1, 1)
    Ap, Bp, Cp, Dp = Tv.block(0, 0), Tv.block(0, 1), Tv.block(1, 0), Tv.block(1, 1)
    return [
        A @ Ap - Ap @ A,
        A @ Bp - (Ap @ B) * (u / v),
        Ap @ B - (B @ Ap) * f - (Bp @ A) * gp,
        B @ Bp - Bp @ B,
        C @ Ap - (Ap @ C) * f - (A @ Cp) * gp,
        C @ Bp - (Ap @ D - A @ Dp) * g,
        D @ Ap - Ap @ D - (Bp @ C - B @ Cp) * g,
        D @ Bp - (Bp @ D) * f - (B @ Dp) * gp,
        C @ Ap - (Cp @ A) * (v / u),
        C @ Bp - Cp @ B,
        Cp @ B - (D @ Ap - Dp @ A) * g,
        D @ Bp - (Dp @ B) * (v / u),
        C @ Cp - Cp @ C,
        C @ Dp - (Cp @ D) * (u / v),
        Cp @ D - (D @ Cp) * f - (Dp @ C) * gp,
        D @ Dp - Dp @ D,
    ]


def verify_commutation_16(Tu, Tv, u, v, Delta, safe_dim: int | None = None
                          ) -> list[SparseOperator]:
    """Sixteen residuals, restricted to indices 0..safe_dim when given.

    The restriction is for truncated Fock spaces, where only entries away
    from the cutoff are meaningful.
    """
    res = commutation_residuals(Tu, Tv, u, v, Delta)
    if safe_dim is not None:
        idx = list(range(safe_dim + 1))
        res = [r.restrict(idx) for r in res]
    return res


def failing_relations(residuals: Sequence[SparseOperator]) -> list[str]:
    return [RELATION_NAMES[i] for i, r in enumerate(residuals) if not r.is_zero()]


# -- action of A and D on off-shell Bethe states ------------------------


def _b_state(make, args: Sequence) -> Vector:
    vec = basis_vector(0)
    for w in reversed(args):
        vec = make(w).B.apply(vec)
    return vec


def action_lemma_residual(make: Callable[[Fraction], Monodromy], u: Sequence, which: str,
                          Delta, eig: VacuumEigenvalues | None = None) -> Vector:
    """Direct action of A(u_{n+1}) or D(u_{n+1}) on B(u_1)..B(u_n)|0> minus
    the sum over which rapidity is left out of the state.

    Vacuum eigenvalues default to the vacuum entries of ``make(u)``.
    """
    u = [as_rational(x) for x in u]
    n = len(u) - 1
    if n < 0:
        raise ValueError("need at least one rapidity")
    if len({x * x for x in u}) != len(u):
        raise ValueError("rapidities must have pairwise distinct squares")
    if which not in ("A", "D"):
        raise ValueError("which must be 'A' or 'D'")
    w = u[n]
    lhs = make(w).get(which).apply(_b_state(make, u[:n]))
    rhs: Vector = {}
    for i in range(n + 1):
        ui = u[i]
        others = [u[j] for j in range(n + 1) if j != i]
        if which == "A":
            ev = eig.a(ui) if eig else make(ui).A[0, 0]
            coef = ev * (w / ui) * prod((f_fn(ui, uj, Delta) for uj in others), start=Fraction(1))
        else:
            ev = eig.d(ui) if eig else make(ui).D[0, 0]
            coef = ev * (ui / w) * prod((f_fn(uj, ui, Delta) for uj in others), start=Fraction(1))
        if coef:
            vector_add_scaled(rhs, _b_state(make, others), coef)
    return vector_sub(lhs, rhs)


def verify_action_lemma(n: int, u: Sequence, which: str, M: int, params) -> Vector:
    """Action-lemma residual on a five-vertex chain of M rows.

    ``params`` supplies ``alpha``, ``delta`` and at least M row rapidities
    ``xi``; ``u`` holds the n + 1 rapidities u_1..u_{n+1}.
    """
    if len(u) != n + 1:
        raise ValueError("need n + 1 rapidities")
    sites = [five_vertex_site(x, params.alpha, params.delta) for x in params.xi[:M]]
    if len(sites) != M:
        raise ValueError("not enough row rapidities")
    cache: dict = {}

    def make(x):
        if x not in cache:
            cache[x] = monodromy_from_sites(x, sites)
        return cache[x]

    return action_lemma_residual(make, u, which, params.delta)


# -- symmetry of C..C A..A B..B across all rapidities --------------------


def lmn_operator(make, us: Sequence, vs: Sequence, ws: Sequence, which: str) -> SparseOperator:
    """prod v^-1 C(u).. A(v).. B(w).. (A case) or prod v C.. D(v).. B.. (D case)."""
    ops = [make(x).C for x in us] + [make(x).get(which) for x in vs] + [make(x).B for x in ws]
    dim = make(next(iter(list(us) + list(vs) + list(ws)))).dim
    out = SparseOperator.identity(dim)
    for op in ops:
        out = out @ op
    factor = Fraction(1)
    for x in vs:
        factor *= (1 / as_rational(x)) if which == "A" else as_rational(x)
    return out * factor


def cross_set_transpositions(l: int, m: int, n: int) -> list[tuple[tuple[str, int], tuple[str, int]]]:
    """Transpositions generating the full symmetric group on u, v, w.

    Adjacent swaps inside each set plus one swap across each pair of
    non-empty sets.
    """
    sizes = {"u": l, "v": m, "w": n}
    gens = []
    for name, size in sizes.items():
        gens += [((name, i), (name, i + 1)) for i in range(size - 1)]
    names = [k for k, s in sizes.items() if s]
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            gens.append(((names[i], 0), (names[j], 0)))
    return gens


def verify_symmetry_proposition(make, us: Sequence, vs: Sequence, ws: Sequence, which: str = "A"
                                ) -> dict:
    """Compare the weighted operator before and after each generating swap.

    Returns {transposition: True/False}.
    """
    base = {"u": list(us), "v": list(vs), "w": list(ws)}
    ref = lmn_operator(make, base["u"], base["v"], base["w"], which)
    out = {}
    for (s1, i1), (s2, i2) in cross_set_transpositions(len(us), len(vs), len(ws)):
        sets = {k: list(v) for k, v in base.items()}
        sets[s1][i1], sets[s2][i2] = sets[s2][i2], sets[s1][i1]
        op = lmn_operator(make, sets["u"], sets["v"], sets["w"], which)
        out[((s1, i1), (s2, i2))] = op == ref
    return out


# -- vacuum elements with free eigenvalues ------------------------------


def grade(n: int, m: int, which: str) -> int:
    """How many rapidities carry an a-value in every term of the bracket.

    Twisting the upper auxiliary row by k scales A and B by k, so the
    A-bracket scales by k^(n+m) and the D-bracket by k^n.
    """
    return n + m if which == "A" else n


def _grade_tensor(a_vals: Sequence, d_vals: Sequence, k: int, subsets) -> list[Fraction]:
    return [prod((a_vals[j] if j in S else d_vals[j] for j in range(len(a_vals))),
                 start=Fraction(1)) for S in subsets]


@dataclass(frozen=True)
class FreeBracketResult:
    value: Fraction
    chains: int
    rank_ok: bool


def free_eigenvalue_bracket(n: int, m: int, u: Sequence, a_vals: Sequence, d_vals: Sequence,
                            which: str, Delta, *, M: int = 5, seed: int = 0,
                            extra_chains: int = 4) -> FreeBracketResult:
    """Vacuum element <C^n X^m B^n> for arbitrary prescribed a(u_j), d(u_j).

    Every term of the bracket picks a(u_j) or d(u_j) for each j, with
    exactly ``grade`` a-values, so the bracket is a linear functional of
    the graded tensor t[S] = prod_{j in S} a_j prod_{j not in S} d_j. We
    write the prescribed tensor as an exact combination of tensors of
    random five-vertex chains and combine their brackets, each computed
    from the explicit operators.
    """
    u = [as_rational(x) for x in u]
    L = 2 * n + m
    if len(u) != L or len(a_vals) != L or len(d_vals) != L:
        raise ValueError("need 2n + m rapidities and eigenvalues")
    k = grade(n, m, which)
    subsets = [frozenset(S) for S in combinations(range(L), k)]
    target = _grade_tensor([as_rational(x) for x in a_vals], [as_rational(x) for x in d_vals],
                           k, subsets)
    rs = RationalSampler(seed)
    chains = []
    columns = []
    for _ in range(len(subsets) + extra_chains):
        sites = [five_vertex_site(x, al, Delta)
                 for x, al in zip(rs.rationals(M, distinct_squares=True), rs.rationals(M))]
        eig = VacuumEigenvalues.from_sites(sites)
        columns.append(_grade_tensor([eig.a(x) for x in u], [eig.d(x) for x in u], k, subsets))
        chains.append(sites)
    matrix = [[col[i] for col in columns] for i in range(len(subsets))]
    lam = solve_linear(matrix, target)
    if lam is None:
        return FreeBracketResult(Fraction(0), len(chains), False)
    total = Fraction(0)
    for coef, sites in zip(lam, chains):
        if not coef:
            continue
        cache: dict = {}

        def make(x, sites=sites, cache=cache):
            if x not in cache:
                cache[x] = monodromy_from_sites(x, sites)
            return cache[x]

        total += coef * bracket(make, u[n + m:], u[n:n + m], u[:n], which)
    return FreeBracketResult(total, len(chains), True)
