"""Brute-force ground truth for the five-vertex model on an L x M lattice.

Geometry
--------
Vertical lines (columns) are numbered ``j = 1..L`` from right to left and
horizontal lines (rows) ``k = 1..M`` from top to bottom. Internally a
line's horizontal position is stored left to right, ``p = L - j``
(0-based), and vertical-edge *levels* run bottom to top: level 0 is the
bottom boundary, level M the top boundary, and row ``k`` sits between
levels ``M - k`` and ``M - k + 1``.

Lines enter through the N leftmost bottom edges, leave through the N
rightmost top edges, and only move up or right. The left and right
boundary edges are empty. Vertex types follow the usual six-vertex order
with type 2 (two crossing lines) forbidden:

====  ==========================
type  lines at the vertex
====  ==========================
1     none
3     bottom and top
4     left and right
5     bottom and right
6     left and top
====  ==========================
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .exact import as_rational

DEFAULT_BUDGET = 10**6


class SizeBudgetError(ValueError):
    """Raised when an enumeration would exceed the configured budget."""


@dataclass(frozen=True)
class LatticeSpec:
    """Lattice size and boundary: L columns, M rows, N lines."""

    L: int
    M: int
    N: int

    def __post_init__(self):
        for name in ("L", "M", "N"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an int")
        if self.L < 1 or self.M < 1:
            raise ValueError(f"need L >= 1 and M >= 1, got L={self.L}, M={self.M}")
        if not 0 <= self.N <= min(self.L, self.M):
            raise ValueError(f"need 0 <= N <= min(L, M), got N={self.N}")

    @property
    def A(self) -> int:
        return self.L - self.N

    @property
    def B(self) -> int:
        return self.N

    @property
    def C(self) -> int:
        return self.M - self.N

    @property
    def box(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.C)

    @property
    def n_particles(self) -> int:
        """Number of B (and C) operators: min(N, L - N)."""
        return min(self.N, self.L - self.N)

    @property
    def m_middle(self) -> int:
        """Number of A or D operators: |L - 2N|."""
        return abs(self.L - 2 * self.N)


@dataclass(frozen=True)
class WeightParams:
    """Field alpha, interaction Delta and the spectral parameters.

    ``u`` holds one rapidity per column (u[0] is column j = 1, the
    rightmost) and ``xi`` one per row (xi[0] is the top row).
    """

    alpha: Fraction
    delta: Fraction
    u: tuple
    xi: tuple
    homogeneous: bool = field(default=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "delta", as_rational(self.delta))
        object.__setattr__(self, "u", tuple(as_rational(v) for v in self.u))
        object.__setattr__(self, "xi", tuple(as_rational(v) for v in self.xi))
        if self.alpha == 0 or self.delta == 0:
            raise ValueError("alpha and Delta must be nonzero")
        if any(v == 0 for v in self.u) or any(v == 0 for v in self.xi):
            raise ValueError("rapidities must be nonzero")

    @classmethod
    def homogeneous_point(cls, spec: LatticeSpec, u, alpha=1, delta=1) -> "WeightParams":
        """All column rapidities equal ``u`` and all row rapidities equal 1."""
        u = as_rational(u)
        return cls(alpha, delta, (u,) * spec.L, (Fraction(1),) * spec.M, homogeneous=True)

    @classmethod
    def inhomogeneous(cls, u: Sequence, xi: Sequence, alpha=1, delta=1) -> "WeightParams":
        return cls(alpha, delta, tuple(u), tuple(xi))

    def check(self, spec: LatticeSpec, *, distinct: bool = False) -> None:
        if len(self.u) != spec.L or len(self.xi) != spec.M:
            raise ValueError(
                f"need {spec.L} column and {spec.M} row rapidities, "
                f"got {len(self.u)} and {len(self.xi)}")
        if distinct:
            if len({v * v for v in self.u}) != len(self.u):
                raise ValueError("coincident rapidities: the u_j^2 must be pairwise distinct")
            if len({v * v for v in self.xi}) != len(self.xi):
                raise ValueError("coincident rapidities: the xi_k^2 must be pairwise distinct")


@dataclass(frozen=True)
class VertexWeights:
    w1: Fraction
    w2: Fraction
    w3: Fraction
    w4: Fraction
    w5: Fraction
    w6: Fraction

    def by_type(self, t: int) -> Fraction:
        return (self.w1, self.w2, self.w3, self.w4, self.w5, self.w6)[t - 1]


def vertex_weights(params: WeightParams, u, xi=1) -> VertexWeights:
    """Weights w_i(u/xi) for the field and interaction in ``params``."""
    return weights_at(params.alpha, params.delta, u, xi)


def weights_at(alpha, delta, u, xi=1) -> VertexWeights:
    """Weights w_i(u/xi); w2 = 0 and w5 = w6 = 1."""
    alpha, delta, u, xi = (as_rational(v) for v in (alpha, delta, u, xi))
    if not (alpha and delta and u and xi):
        raise ValueError("alpha, Delta, u and xi must all be nonzero")
    z = u / xi
    return VertexWeights(
        w1=alpha / delta * (z - 1 / z),
        w2=Fraction(0),
        w3=z / alpha,
        w4=alpha * z,
        w5=Fraction(1),
        w6=Fraction(1),
    )


@dataclass(frozen=True)
class VertexConfiguration:
    """A configuration stored as line positions on every vertical-edge level.

    ``levels[l][i]`` is the left-to-right position of line ``i`` on level
    ``l`` (0 = bottom boundary, M = top boundary).
    """

    L: int
    M: int
    levels: tuple

    @property
    def N(self) -> int:
        return len(self.levels[0])

    def vertical_edges(self) -> list[list[int]]:
        """Occupancy [level][j-1] with columns in right-to-left order."""
        out = []
        for pos in self.levels:
            row = [0] * self.L
            for p in pos:
                row[self.L - 1 - p] = 1
            out.append(row)
        return out

    def horizontal_edges(self) -> list[list[int]]:
        """Occupancy [k-1][e] of row k's horizontal edges.

        Edge e = 0 is the right boundary edge, e = j is the edge on the
        left of column j, so e = L is the left boundary edge.
        """
        out = []
        for k in range(1, self.M + 1):
            below = self.levels[self.M - k]
            above = self.levels[self.M - k + 1]
            row = [0] * (self.L + 1)
            for p, q in zip(below, above):
                # line runs right from p to q; occupied edges sit between them
                for s in range(p, q):
                    row[self.L - 1 - s] = 1
            out.append(row)
        return out

    def vertex_types(self) -> list[list[int]]:
        """Type label (1, 3, 4, 5, 6) of vertex (k, j) at [k-1][j-1]."""
        grid = []
        for k in range(1, self.M + 1):
            below = self.levels[self.M - k]
            above = self.levels[self.M - k + 1]
            row = [1] * self.L
            for p, q in zip(below, above):
                if p == q:
                    row[self.L - 1 - p] = 3
                    continue
                row[self.L - 1 - p] = 5
                for s in range(p + 1, q):
                    row[self.L - 1 - s] = 4
                row[self.L - 1 - q] = 6
            grid.append(row)
        return grid

    def dump(self) -> str:
        """Text grid of vertex types, top row first, columns drawn left to right."""
        return "\n".join(" ".join(str(t) for t in reversed(row)) for row in self.vertex_types())


def _bottom(spec: LatticeSpec) -> tuple:
    return tuple(range(spec.N))


def _top(spec: LatticeSpec) -> tuple:
    return tuple(range(spec.L - spec.N, spec.L))


def _is_admissible_step(below: Sequence[int], above: Sequence[int], L: int) -> bool:
    n = len(below)
    for i in range(n):
        nxt = below[i + 1] if i + 1 < n else L
        if not below[i] <= above[i] < nxt:
            return False
    return True


def enumerate_configs(spec: LatticeSpec, budget: int | None = DEFAULT_BUDGET
                      ) -> Iterator[VertexConfiguration]:
    """Yield every admissible configuration exactly once.

    Each row step moves every line weakly right, and a line may not run
    past the bottom edge of the next line (that would be a type-2 vertex).
    Raises SizeBudgetError up front when the box count exceeds ``budget``.
    """
    if budget is not None:
        total = macmahon_count(*spec.box)
        if total > budget:
            raise SizeBudgetError(
                f"{total} configurations for L={spec.L}, M={spec.M}, N={spec.N} "
                f"exceeds the enumeration budget {budget}")
    L, M, N = spec.L, spec.M, spec.N
    top = _top(spec)
    A = spec.A
    levels: list[tuple] = [_bottom(spec)]

    def successors(below: tuple, level: int) -> Iterator[tuple]:
        # line i (0-based) is pinned to its start up to level N-1-i and to
        # its end from level M-i on
        out = [0] * N

        def rec(i: int):
            if i == N:
                yield tuple(out)
                return
            nxt = below[i + 1] if i + 1 < N else L
            lo, hi = below[i], min(nxt - 1, top[i])
            if level <= N - 1 - i:
                hi = min(hi, i)
            if level >= M - i:
                lo = max(lo, top[i])
            for q in range(lo, hi + 1):
                out[i] = q
                yield from rec(i + 1)

        yield from rec(0)

    def walk(level: int):
        if level == M:
            if levels[-1] == top:
                yield VertexConfiguration(L, M, tuple(levels))
            return
        for nxt in successors(levels[-1], level + 1):
            levels.append(nxt)
            yield from walk(level + 1)
            levels.pop()

    if N == 0 or A >= 0:
        yield from walk(0)


def count_configs(spec: LatticeSpec, budget: int | None = DEFAULT_BUDGET) -> int:
    return sum(1 for _ in enumerate_configs(spec, budget))


def configuration_weight(config: VertexConfiguration, params: WeightParams):
    """Product over vertices of w_type(u_j / xi_k)."""
    weight = Fraction(1)
    types = config.vertex_types()
    for k, row in enumerate(types):
        for j, t in enumerate(row):
            if t in (5, 6):
                continue
            w = vertex_weights(params, params.u[j], params.xi[k])
            weight *= w.by_type(t)
            if not weight:
                return weight
    return weight


def partition_function_oracle(spec: LatticeSpec, params: WeightParams,
                              budget: int | None = DEFAULT_BUDGET) -> Fraction:
    """Exact sum over all configurations of the product of vertex weights."""
    params.check(spec)
    # one weight table per (column, row) pair
    table = [[vertex_weights(params, params.u[j], params.xi[k])
              for j in range(spec.L)] for k in range(spec.M)]
    total = Fraction(0)
    for config in enumerate_configs(spec, budget):
        w = Fraction(1)
        for k, row in enumerate(config.vertex_types()):
            tk = table[k]
            for j, t in enumerate(row):
                if t < 5:
                    w *= tk[j].by_type(t)
        total += w
    return total


# -- boxed plane partitions --------------------------------------------


def config_to_plane_partition(config: VertexConfiguration, spec: LatticeSpec
                              ) -> tuple[tuple[int, ...], ...]:
    """Height array (B rows, C columns, entries 0..A), weakly decreasing
    along rows and columns.

    Line i only moves between levels N - i + 1 and M - i (1-based i); its
    offsets from the starting column on those C levels, read against A,
    give row i of the diagram.
    """
    A, N, C = spec.A, spec.N, spec.C
    rows = []
    for i in range(N):
        # 1-based line index ii = i + 1; free levels N - ii + j, j = 1..C
        base = N - (i + 1)
        row = tuple(A - (config.levels[base + j][i] - i) for j in range(1, C + 1))
        rows.append(row)
    return tuple(rows)


def plane_partition_to_config(pp: Sequence[Sequence[int]], spec: LatticeSpec
                              ) -> VertexConfiguration:
    """Inverse of :func:`config_to_plane_partition`."""
    A, N, C, M = spec.A, spec.N, spec.C, spec.M
    levels = []
    for level in range(M + 1):
        pos = []
        for i in range(N):
            first = N - (i + 1) + 1
            last = M - (i + 1)
            if level < first:
                lam = 0
            elif level > last:
                lam = A
            else:
                lam = A - pp[i][level - first]
            pos.append(lam + i)
        levels.append(tuple(pos))
    return VertexConfiguration(spec.L, spec.M, tuple(levels))


def enumerate_plane_partitions(a: int, b: int, c: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Monotone b x c arrays with entries in 0..a, weakly decreasing along
    rows and columns (plane partitions in an a x b x c box)."""
    grid = [[0] * c for _ in range(b)]

    def rec(cell: int):
        if cell == b * c:
            yield tuple(tuple(r) for r in grid)
            return
        r, col = divmod(cell, c)
        hi = a
        if r > 0:
            hi = min(hi, grid[r - 1][col])
        if col > 0:
            hi = min(hi, grid[r][col - 1])
        for v in range(hi + 1):
            grid[r][col] = v
            yield from rec(cell + 1)

    yield from rec(0)


def macmahon_count(a: int, b: int, c: int) -> int:
    """Plane partitions in an a x b x c box: prod (i+j+k-1)/(i+j+k-2)."""
    val = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                val *= Fraction(i + j + k - 1, i + j + k - 2)
    assert val.denominator == 1
    return int(val)


def parse_dump(text: str, spec: LatticeSpec) -> VertexConfiguration:
    """Rebuild a configuration from :meth:`VertexConfiguration.dump` output."""
    rows = [list(map(int, line.split())) for line in text.strip().splitlines()]
    if len(rows) != spec.M or any(len(r) != spec.L for r in rows):
        raise ValueError("dump does not match the lattice size")
    levels = [list(_bottom(spec))]
    for ell in range(1, spec.M + 1):
        row = rows[spec.M - ell]  # left-to-right types of the row below level ell
        pos = []
        for p, t in enumerate(row):
            if t in (3, 6):
                pos.append(p)
        levels.append(tuple(pos))
    levels[0] = tuple(levels[0])
    config = VertexConfiguration(spec.L, spec.M, tuple(levels))
    if [list(reversed(r)) for r in config.vertex_types()] != rows:
        raise ValueError("dump is not an admissible configuration")
    return config
