"""Exact sparse operators on finite tensor-product spaces."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..exact import as_rational

Vector = dict  # index -> Fraction, zeros omitted


class SparseOperator:
    """Square matrix stored as row -> {column -> value}; zeros are never stored."""

    __slots__ = ("dim", "_rows")

    def __init__(self, dim: int, entries: Mapping[tuple[int, int], object] | None = None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        rows: dict[int, dict[int, Fraction]] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexError(f"entry ({i}, {j}) outside dimension {dim}")
            v = as_rational(v)
            if v:
                rows.setdefault(i, {})[j] = v
        self._rows = rows

    @classmethod
    def _from_rows(cls, dim: int, rows: dict) -> "SparseOperator":
        op = cls.__new__(cls)
        op.dim = dim
        op._rows = {i: r for i, r in rows.items() if r}
        return op

    @classmethod
    def zero(cls, dim: int) -> "SparseOperator":
        return cls._from_rows(dim, {})

    @classmethod
    def identity(cls, dim: int, scale=1) -> "SparseOperator":
        scale = as_rational(scale)
        if not scale:
            return cls.zero(dim)
        return cls._from_rows(dim, {i: {i: scale} for i in range(dim)})

    @classmethod
    def diagonal(cls, values: Sequence) -> "SparseOperator":
        return cls(len(values), {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_dense(cls, matrix: Sequence[Sequence]) -> "SparseOperator":
        n = len(matrix)
        return cls(n, {(i, j): v for i, row in enumerate(matrix) for j, v in enumerate(row) if v})

    def items(self) -> Iterable[tuple[int, int, Fraction]]:
        for i, row in self._rows.items():
            for j, v in row.items():
                yield i, j, v

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows.get(i, {}).get(j, Fraction(0))

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for i, j, v in self.items():
            out[i][j] = v
        return out

    def is_zero(self) -> bool:
        return not self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self.dim == other.dim and self._rows == other._rows

    def __hash__(self):
        return hash((self.dim, frozenset((i, j, v) for i, j, v in self.items())))

    def __repr__(self) -> str:
        return f"SparseOperator(dim={self.dim}, nnz={self.nnz})"

    def _check(self, other: "SparseOperator"):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        self._check(other)
        rows = {i: dict(r) for i, r in self._rows.items()}
        for i, j, v in other.items():
            row = rows.setdefault(i, {})
            s = row.get(j, 0) + v
            if s:
                row[j] = s
            else:
                row.pop(j, None)
        return SparseOperator._from_rows(self.dim, rows)

    def __neg__(self):
        return SparseOperator._from_rows(
            self.dim, {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()})

    def __sub__(self, other):
        if not isinstance(other, SparseOperator):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "SparseOperator":
        c = as_rational(c)
        if not c:
            return SparseOperator.zero(self.dim)
        return SparseOperator._from_rows(
            self.dim, {i: {j: c * v for j, v in r.items()} for i, r in self._rows.items()})

    def __mul__(self, c):
        if isinstance(c, SparseOperator):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, SparseOperator):
            self._check(other)
            rows = {}
            orows = other._rows
            for i, r in self._rows.items():
                acc: dict[int, Fraction] = {}
                for k, v in r.items():
                    ok = orows.get(k)
                    if not ok:
                        continue
                    for j, w in ok.items():
                        acc[j] = acc.get(j, 0) + v * w
                acc = {j: v for j, v in acc.items() if v}
                if acc:
                    rows[i] = acc
            return SparseOperator._from_rows(self.dim, rows)
        if isinstance(other, dict):
            return self.apply(other)
        return NotImplemented

    def apply(self, vec: Vector) -> Vector:
        """Matrix-vector product on sparse dict vectors."""
        out: dict[int, Fraction] = {}
        for i, r in self._rows.items():
            acc = Fraction(0)
            for k, v in r.items():
                x = vec.get(k)
                if x:
                    acc += v * x
            if acc:
                out[i] = acc
        return out

    def apply_left(self, covec: Vector) -> Vector:
        """Row-vector product covec @ self."""
        out: dict[int, Fraction] = {}
        for i, x in covec.items():
            r = self._rows.get(i)
            if not r or not x:
                continue
            for j, v in r.items():
                out[j] = out.get(j, 0) + x * v
        return {j: v for j, v in out.items() if v}

    def transpose(self) -> "SparseOperator":
        return SparseOperator(self.dim, {(j, i): v for i, j, v in self.items()})

    def kron(self, other: "SparseOperator") -> "SparseOperator":
        """Tensor product with ``other`` as the faster-varying factor."""
        q = other.dim
        rows: dict[int, dict[int, Fraction]] = {}
        for i, j, v in self.items():
            for p, r in other._rows.items():
                row = rows.setdefault(i * q + p, {})
                for s, w in r.items():
                    row[j * q + s] = row.get(j * q + s, 0) + v * w
        return SparseOperator._from_rows(self.dim * q, rows)

    def restrict(self, indices: Sequence[int]) -> "SparseOperator":
        """Principal submatrix on ``indices`` (in the given order)."""
        pos = {k: n for n, k in enumerate(indices)}
        ent = {}
        for i in indices:
            for j, v in self._rows.get(i, {}).items():
                if j in pos:
                    ent[(pos[i], pos[j])] = v
        return SparseOperator(len(indices), ent)


def basis_vector(index: int) -> Vector:
    return {index: Fraction(1)}


def vectors_equal(a: Vector, b: Vector) -> bool:
    return {k: v for k, v in a.items() if v} == {k: v for k, v in b.items() if v}


def vector_sub(a: Vector, b: Vector) -> Vector:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def vector_add_scaled(acc: Vector, vec: Vector, c) -> None:
    """In place: acc += c * vec."""
    for k, v in vec.items():
        s = acc.get(k, 0) + c * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
