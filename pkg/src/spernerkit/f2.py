"""Dense F2 matrices stored as Python-int bitsets, one integer per column."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class F2Matrix:
    nrows: int
    ncols: int
    cols: tuple  # cols[j] has bit i set iff entry (i, j) is 1

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "F2Matrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        cols = [0] * ncols
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for j, x in enumerate(row):
                if int(x) % 2:
                    cols[j] |= 1 << i
        return cls(nrows, ncols, tuple(cols))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "F2Matrix":
        return cls(nrows, ncols, (0,) * ncols)

    def to_rows(self) -> list[list[int]]:
        return [[(self.cols[j] >> i) & 1 for j in range(self.ncols)] for i in range(self.nrows)]

    def transpose(self) -> "F2Matrix":
        return F2Matrix.from_rows([list(r) for r in zip(*self.to_rows())]) if self.nrows and self.ncols \
            else F2Matrix.zeros(self.ncols, self.nrows)

    def select_columns(self, keep: Sequence[int]) -> "F2Matrix":
        return F2Matrix(self.nrows, len(keep), tuple(self.cols[j] for j in keep))

    def select_rows(self, keep: Sequence[int]) -> "F2Matrix":
        cols = []
        for c in self.cols:
            out = 0
            for new, old in enumerate(keep):
                if (c >> old) & 1:
                    out |= 1 << new
            cols.append(out)
        return F2Matrix(len(keep), self.ncols, tuple(cols))


class _Basis:
    """Incremental XOR basis keyed by leading bit, remembering column combinations."""

    def __init__(self):
        self.vecs: dict[int, tuple[int, int]] = {}

    def reduce(self, v: int) -> tuple[int, int]:
        combo = 0
        while v:
            top = v.bit_length() - 1
            hit = self.vecs.get(top)
            if hit is None:
                break
            v ^= hit[0]
            combo ^= hit[1]
        return v, combo

    def insert(self, v: int, tag: int) -> bool:
        r, combo = self.reduce(v)
        if not r:
            return False
        self.vecs[r.bit_length() - 1] = (r, combo ^ tag)
        return True


def f2_rank(M: F2Matrix) -> int:
    basis = _Basis()
    return sum(basis.insert(c, 0) for c in M.cols)


def f2_solve(M: F2Matrix, b: int) -> int | None:
    """A bitmask x over columns with M x = b, or None if b is outside the column space."""
    basis = _Basis()
    for j, c in enumerate(M.cols):
        basis.insert(c, 1 << j)
    r, combo = basis.reduce(b)
    return None if r else combo


def f2_nullspace(M: F2Matrix) -> list[int]:
    """Basis of the kernel, each vector a bitmask over columns."""
    basis = _Basis()
    kernel = []
    for j, c in enumerate(M.cols):
        r, combo = basis.reduce(c)
        if r:
            basis.vecs[r.bit_length() - 1] = (r, combo ^ (1 << j))
        else:
            kernel.append(combo ^ (1 << j))
    return kernel
