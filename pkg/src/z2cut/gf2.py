"""Bit-packed linear algebra over GF(2).

Vectors are Python ints used as bitsets (bit i = coordinate i) wrapped in a
thin length-carrying type; matrices store columns as bitsets over row
indices, which is the natural layout for boundary matrices (one column per
simplex, bits over its facets).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .errors import InputError

__all__ = [
    "GF2Vector",
    "GF2Matrix",
    "rank",
    "solve",
    "in_colspace",
    "kernel_basis",
    "relative_rank",
    "column_space_pivots",
]


@dataclass(frozen=True)
class GF2Vector:
    """A length-checked bit vector; ``bits`` has no set bit >= ``length``."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise InputError("negative vector length")
        if self.bits < 0 or self.bits >> self.length:
            raise InputError("vector bits exceed declared length")

    def __xor__(self, other: "GF2Vector") -> "GF2Vector":
        if self.length != other.length:
            raise InputError("vector length mismatch")
        return GF2Vector(self.length, self.bits ^ other.bits)

    def get(self, i: int) -> int:
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()


class GF2Matrix:
    """Matrix over GF(2), stored column-major (each column a row-index bitset).

    Immutable by contract after construction; elimination results are cached.
    """

    __slots__ = ("nrows", "cols", "_echelon_cache")

    def __init__(self, nrows: int, cols: List[int]):
        if nrows < 0:
            raise InputError("negative row count")
        for c in cols:
            if c < 0 or c >> nrows:
                raise InputError("column bits exceed row count")
        self.nrows = nrows
        self.cols = list(cols)
        self._echelon_cache: Optional[list] = None

    @property
    def ncols(self) -> int:
        return len(self.cols)

    @classmethod
    def from_rows(cls, rows: List[int], ncols: int) -> "GF2Matrix":
        cols = [0] * ncols
        for i, r in enumerate(rows):
            for j in range(ncols):
                if (r >> j) & 1:
                    cols[j] |= 1 << i
        return cls(len(rows), cols)

    def column(self, j: int) -> GF2Vector:
        return GF2Vector(self.nrows, self.cols[j])

    def matvec(self, x: GF2Vector) -> GF2Vector:
        if x.length != self.ncols:
            raise InputError("matvec dimension mismatch")
        acc = 0
        bits = x.bits
        while bits:
            j = (bits & -bits).bit_length() - 1
            acc ^= self.cols[j]
            bits &= bits - 1
        return GF2Vector(self.nrows, acc)

    def entry(self, i: int, j: int) -> int:
        return (self.cols[j] >> i) & 1

    def _echelon(self) -> list:
        """Column echelon pivots as (pivot_row, reduced_column, combo) triples.

        ``combo`` is a bitset over original column indices with
        ``xor(cols[combo]) == reduced_column``.  Pivot row = lowest set bit
        (first nonzero row), columns processed left to right — deterministic.
        """
        if self._echelon_cache is None:
            pivots = []
            for j, col in enumerate(self.cols):
                cur, combo = col, 1 << j
                for prow, pcol, pcombo in pivots:
                    if (cur >> prow) & 1:
                        cur ^= pcol
                        combo ^= pcombo
                if cur:
                    pivots.append(((cur & -cur).bit_length() - 1, cur, combo))
            self._echelon_cache = pivots
        return self._echelon_cache

    def _reduce(self, b: int):
        """Reduce b against the echelon; returns (residue, combo used)."""
        combo = 0
        for prow, pcol, pcombo in self._echelon():
            if (b >> prow) & 1:
                b ^= pcol
                combo ^= pcombo
        return b, combo


def rank(M: GF2Matrix) -> int:
    return len(M._echelon())


def solve(M: GF2Matrix, b: GF2Vector) -> Optional[GF2Vector]:
    """Some x with M·x = b, or None; free variables are 0 (deterministic)."""
    if b.length != M.nrows:
        raise InputError("solve: rhs length != row count")
    residue, combo = M._reduce(b.bits)
    if residue:
        return None
    return GF2Vector(M.ncols, combo)


def in_colspace(M: GF2Matrix, b: GF2Vector) -> bool:
    if b.length != M.nrows:
        raise InputError("in_colspace: rhs length != row count")
    residue, _ = M._reduce(b.bits)
    return residue == 0


def kernel_basis(M: GF2Matrix) -> GF2Matrix:
    """Columns form a basis of {x : M·x = 0}; count = ncols - rank."""
    pivots: list = []
    kernel: List[int] = []
    for j, col in enumerate(M.cols):
        cur, combo = col, 1 << j
        for prow, pcol, pcombo in pivots:
            if (cur >> prow) & 1:
                cur ^= pcol
                combo ^= pcombo
        if cur:
            pivots.append(((cur & -cur).bit_length() - 1, cur, combo))
        else:
            kernel.append(combo)
    return GF2Matrix(M.ncols, kernel)


def relative_rank(M: GF2Matrix, N: GF2Matrix) -> int:
    """Number of columns of N outside colspace(M) (rank [M|N] - rank M)."""
    if M.nrows != N.nrows:
        raise InputError("relative_rank: row count mismatch")
    base = len(M._echelon())
    joint = GF2Matrix(M.nrows, M.cols + N.cols)
    return rank(joint) - base


def column_space_pivots(M: GF2Matrix) -> List[int]:
    """Indices of a deterministic set of columns spanning colspace(M)."""
    out = []
    pivots: list = []
    for j, col in enumerate(M.cols):
        cur = col
        for prow, pcol in pivots:
            if (cur >> prow) & 1:
                cur ^= pcol
        if cur:
            pivots.append(((cur & -cur).bit_length() - 1, cur))
            out.append(j)
    return out
