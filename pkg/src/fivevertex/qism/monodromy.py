"""Monodromy matrices, vacuum eigenvalues and vacuum matrix elements."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Callable, Mapping, Sequence

from ..exact import as_rational
from ..lattice import LatticeSpec, WeightParams
from .lops import Site, five_vertex_site
from .operators import SparseOperator, Vector, basis_vector

M_MAX = 12


class DimensionCapError(ValueError):
    """Raised when a quantum space would exceed the configured size cap."""


@dataclass(frozen=True)
class Monodromy:
    """T(u) = L_M(u) ... L_1(u) split into its auxiliary blocks."""

    A: SparseOperator
    B: SparseOperator
    C: SparseOperator
    D: SparseOperator

    @property
    def dim(self) -> int:
        return self.A.dim

    def block(self, a: int, c: int) -> SparseOperator:
        return ((self.A, self.B), (self.C, self.D))[a][c]

    def get(self, name: str) -> SparseOperator:
        return getattr(self, name)


@dataclass(frozen=True)
class VacuumEigenvalues:
    """The scalars a(u), d(u) by which A(u), D(u) act on the vacuum."""

    a: Callable[[Fraction], Fraction]
    d: Callable[[Fraction], Fraction]

    @classmethod
    def five_vertex(cls, xi: Sequence, alpha, Delta) -> "VacuumEigenvalues":
        """Closed forms for the five-vertex chain with row rapidities ``xi``."""
        xi = tuple(as_rational(v) for v in xi)
        alpha, Delta = as_rational(alpha), as_rational(Delta)
        M = len(xi)

        def a(u):
            u = as_rational(u)
            return (alpha / Delta) ** M * prod((u / x - x / u for x in xi), start=Fraction(1))

        def d(u):
            u = as_rational(u)
            return u ** M / alpha ** M / prod(xi, start=Fraction(1))

        return cls(a, d)

    @classmethod
    def from_sites(cls, sites: Sequence[Site], twist=1, scale: Callable | None = None
                   ) -> "VacuumEigenvalues":
        """Products of the single-site vacuum entries, with optional twist and scale."""
        twist = as_rational(twist)

        def pair(u):
            a = d = Fraction(1)
            for s in sites:
                sa, sd = s.vacuum_eigenvalues(u)
                a *= sa
                d *= sd
            c = as_rational(scale(u)) if scale else Fraction(1)
            return twist * a * c, d * c

        return cls(lambda u: pair(u)[0], lambda u: pair(u)[1])

    @classmethod
    def from_table(cls, table: Mapping) -> "VacuumEigenvalues":
        """Free values: ``table[u] = (a, d)`` at the listed points only."""
        t = {as_rational(k): (as_rational(a), as_rational(d)) for k, (a, d) in table.items()}

        def look(u, i):
            try:
                return t[as_rational(u)][i]
            except KeyError:
                raise KeyError(f"no eigenvalue assigned at u={u}") from None

        return cls(lambda u: look(u, 0), lambda u: look(u, 1))


def monodromy_from_sites(u, sites: Sequence[Site], *, twist=1, scale=1,
                         max_dim: int = 2 ** M_MAX) -> Monodromy:
    """Ordered product L_M(u) ... L_1(u); site 1 is the slowest tensor index.

    ``twist`` multiplies the upper auxiliary row (A and B) and ``scale``
    multiplies everything; both keep the RTT relation intact.
    """
    if not sites:
        raise ValueError("need at least one site")
    total = prod(s.dim for s in sites)
    if total > max_dim:
        raise DimensionCapError(f"quantum space of dimension {total} exceeds cap {max_dim}")
    u = as_rational(u)
    L1 = sites[0](u)
    T = [[L1.block(a, c) for c in range(2)] for a in range(2)]
    for site in sites[1:]:
        Lk = site(u)
        new = [[None, None], [None, None]]
        for a in range(2):
            for b in range(2):
                acc = None
                for c in range(2):
                    term = T[c][b].kron(Lk.block(a, c))
                    acc = term if acc is None else acc + term
                new[a][b] = acc
        T = new
    twist, scale = as_rational(twist), as_rational(scale)
    A, B, C, D = T[0][0], T[0][1], T[1][0], T[1][1]
    if twist != 1:
        A, B = A * twist, B * twist
    if scale != 1:
        A, B, C, D = A * scale, B * scale, C * scale, D * scale
    return Monodromy(A, B, C, D)


def five_vertex_sites(xi: Sequence, params) -> list[Site]:
    return [five_vertex_site(x, params.alpha, params.delta) for x in xi]


def build_monodromy(u, xi: Sequence, params, *, m_max: int = M_MAX) -> Monodromy:
    """Five-vertex monodromy on 2^M states for row rapidities ``xi``."""
    if len(xi) > m_max:
        raise DimensionCapError(f"M={len(xi)} exceeds the cap M_max={m_max}")
    return monodromy_from_sites(u, five_vertex_sites(xi, params), max_dim=2 ** m_max)


def vacuum(dim: int) -> Vector:
    return basis_vector(0)


def bracket(make: Callable[[Fraction], Monodromy], c_args: Sequence, x_args: Sequence,
            b_args: Sequence, which: str = "A") -> Fraction:
    """<Omega| prod C(c_args) prod X(x_args) prod B(b_args) |Omega>, X = A or D.

    ``make`` maps a spectral parameter to its monodromy. Operators are
    applied to the ket from right to left.
    """
    if which not in ("A", "D"):
        raise ValueError("which must be 'A' or 'D'")
    vec: Vector = basis_vector(0)
    for u in reversed(b_args):
        vec = make(u).B.apply(vec)
    for u in reversed(x_args):
        vec = make(u).get(which).apply(vec)
    for u in reversed(c_args):
        vec = make(u).C.apply(vec)
    return vec.get(0, Fraction(0))


def split_rapidities(spec: LatticeSpec, u: Sequence):
    """(B args, middle args, C args, middle operator name) for the vacuum element."""
    n, m = spec.n_particles, spec.m_middle
    which = "A" if spec.L >= 2 * spec.N else "D"
    u = tuple(u)
    return u[:n], u[n:n + m], u[n + m:], which


def matrix_element_Z(spec: LatticeSpec, params: WeightParams, *, m_max: int = M_MAX
                     ) -> Fraction:
    """Partition function as the vacuum element <C..C X..X B..B>."""
    params.check(spec)
    if spec.M > m_max:
        raise DimensionCapError(f"M={spec.M} exceeds the cap M_max={m_max}")
    sites = five_vertex_sites(params.xi, params)
    cache: dict = {}

    def make(v):
        if v not in cache:
            cache[v] = monodromy_from_sites(v, sites, max_dim=2 ** m_max)
        return cache[v]

    b_args, x_args, c_args, which = split_rapidities(spec, params.u)
    return bracket(make, c_args, x_args, b_args, which)
