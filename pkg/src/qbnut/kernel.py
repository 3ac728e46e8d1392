"""Exact null spaces of integer matrices and the kernel-based nut test."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import QuartGraph


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if not entries or not entries[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ValueError("ragged rows")
        return cls(len(entries), width, entries)

    def __matmul__(self, vec):
        return [sum(x * v for x, v in zip(row, vec) if x) for row in self.entries]


@dataclass(frozen=True)
class KernelBasis:
    """Basis of ``{v : A v = 0}``; each vector's first nonzero entry is 1."""

    dim: int
    vectors: tuple[tuple[Fraction, ...], ...]


def adjacency_matrix(g: QuartGraph) -> IntMatrix:
    rows = []
    for nbrs in g.adjacency:
        row = [0] * g.n
        for v in nbrs:
            row[v] = 1
        rows.append(row)
    return IntMatrix.from_rows(rows)


def _bareiss_echelon(entries) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Pivot in each column is the first nonzero entry at or below the current
    row.  Every division by the previous pivot is exact (Sylvester), so all
    intermediate values are minors of the input.
    """
    M = [list(row) for row in entries]
    nrows, ncols = len(M), len(M[0])
    prev = 1
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if M[i][col]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        top = M[r]
        p = top[col]
        tail = top[col:]
        for i in range(r + 1, nrows):
            row = M[i]
            f = row[col]
            if f:
                row[col:] = [(p * x - f * y) // prev for x, y in zip(row[col:], tail)]
            elif prev == p:
                continue
            else:
                row[col:] = [p * x // prev for x in row[col:]]
        prev = p
        pivots.append(col)
        r += 1
    return M[:r], pivots


def kernel_basis(A: IntMatrix) -> KernelBasis:
    """Exact rational basis of the right null space, one vector per free column."""
    echelon, pivots = _bareiss_echelon(A.entries)
    pivot_set = set(pivots)
    vectors = []
    for free in range(A.cols):
        if free in pivot_set:
            continue
        x: list[Fraction] = [Fraction(0)] * A.cols
        x[free] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            row, pc = echelon[k], pivots[k]
            s = sum(row[j] * x[j] for j in range(pc + 1, A.cols) if row[j] and x[j])
            x[pc] = Fraction(-s) / row[pc]
        lead = next(v for v in x if v)
        vectors.append(tuple(v / lead for v in x))
    return KernelBasis(len(vectors), tuple(vectors))


def rank(A: IntMatrix) -> int:
    return len(_bareiss_echelon(A.entries)[1])


def nut_oracle(g: QuartGraph) -> bool:
    """One-dimensional kernel spanned by a vector with no zero entry."""
    basis = kernel_basis(adjacency_matrix(g))
    return basis.dim == 1 and all(basis.vectors[0])
