"""Partitions, column-strict arrays, semistandard tableaux and the hook formula."""

from __future__ import annotations

from math import prod
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "Tableau",
    "hook_length",
    "hook_count",
    "enumerate_ssyt",
    "iter_partitions",
    "semistandard_blocks",
    "staircase",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive parts. Trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def nodes(self) -> Iterator[tuple[int, int]]:
        """1-based (row, column) positions of the Ferrers diagram."""
        for i, p in enumerate(self, start=1):
            for j in range(1, p + 1):
                yield i, j

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def staircase(n: int) -> Partition:
    """(n-1, n-2, ..., 1)."""
    return Partition(range(n - 1, 0, -1))


def iter_partitions(size: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``size``, parts in decreasing lexicographic order."""
    if max_part is None:
        max_part = size

    def rec(rest: int, cap: int) -> Iterator[tuple]:
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for parts in rec(size, max_part):
        yield Partition(parts)


class Tableau:
    """A filling of boxes by positive integers, stored as ragged rows.

    Zero entries are allowed only to mark empty cells of a column-strict
    array produced from a block whose column sums are not descending; such
    arrays have no Ferrers ``shape``.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        cleaned = []
        for r in rows:
            r = [int(v) for v in r]
            while r and r[-1] == 0:
                r.pop()
            if any(v < 0 for v in r):
                raise ValueError("tableau entries must be nonnegative")
            cleaned.append(tuple(r))
        while cleaned and not cleaned[-1]:
            cleaned.pop()
        object.__setattr__(self, "rows", tuple(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    @property
    def width(self) -> int:
        return max((len(r) for r in self.rows), default=0)

    def columns(self) -> list[tuple[int, ...]]:
        """Non-zero entries of each column, top down."""
        cols = []
        for j in range(self.width):
            cols.append(tuple(r[j] for r in self.rows if j < len(r) and r[j] != 0))
        return cols

    def _column_cells(self, j: int) -> list[int]:
        return [r[j] if j < len(r) else 0 for r in self.rows]

    def is_ferrers(self) -> bool:
        lengths = [len(r) for r in self.rows]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            return False
        return all(v > 0 for r in self.rows for v in r)

    @property
    def shape(self) -> Partition:
        if not self.is_ferrers():
            raise ValueError("array is not a filling of a Ferrers diagram")
        return Partition(len(r) for r in self.rows)

    def is_column_strict(self) -> bool:
        """Non-zero entries of every column strictly increase downwards and
        sit at the top of the column."""
        for j in range(self.width):
            cells = self._column_cells(j)
            k = 0
            while k < len(cells) and cells[k] != 0:
                k += 1
            if any(cells[k:]):
                return False
            top = cells[:k]
            if any(a >= b for a, b in zip(top, top[1:])):
                return False
        return True

    def is_semistandard(self) -> bool:
        if not self.is_ferrers() or not self.is_column_strict():
            return False
        return all(a <= b for r in self.rows for a, b in zip(r, r[1:]))

    def max_entry(self) -> int:
        return max((v for r in self.rows for v in r), default=0)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for r in self.rows for v in r)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Tableau({self.to_json()})"


def _as_partition(shape) -> Partition:
    return shape if isinstance(shape, Partition) else Partition(shape)


def hook_length(shape: Sequence[int], i: int, j: int) -> int:
    """Arm + leg + 1 at the 1-based node (i, j)."""
    shape = _as_partition(shape)
    if not (1 <= i <= len(shape) and 1 <= j <= shape[i - 1]):
        raise ValueError(f"({i}, {j}) is not a node of {tuple(shape)}")
    arm = shape[i - 1] - j
    leg = sum(1 for p in shape[i:] if p >= j)
    return arm + leg + 1


def hook_count(shape: Sequence[int], m: int) -> int:
    """Number of semistandard tableaux of ``shape`` with entries in 1..m.

    Uses the hook-content product; numerator and denominator are formed as
    exact integers before the single division.
    """
    shape = _as_partition(shape)
    num = prod(m + j - i for i, j in shape.nodes())
    den = prod(hook_length(shape, i, j) for i, j in shape.nodes())
    q, r = divmod(num, den)
    assert r == 0, "hook-content product is always an integer"
    return q


def enumerate_ssyt(shape: Sequence[int], m: int) -> list[Tableau]:
    """All semistandard tableaux of ``shape`` with entries in 1..m.

    Output is in lexicographic order of the row-reading word.
    """
    shape = _as_partition(shape)
    if len(shape) > m:
        return []
    cells = list(shape.nodes())
    grid = [[0] * p for p in shape]
    out: list[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(Tableau(grid))
            return
        i, j = cells[k]
        lo = 1
        if j > 1:
            lo = grid[i - 1][j - 2]
        if i > 1:
            lo = max(lo, grid[i - 2][j - 1] + 1)
        # room for the rest of this column below
        below = sum(1 for p in shape[i:] if p >= j)
        for v in range(lo, m - below + 1):
            grid[i - 1][j - 1] = v
            fill(k + 1)
        grid[i - 1][j - 1] = 0

    fill(0)
    return out


def semistandard_blocks(d: int, n: int) -> list:
    """Blocks of P^d(n) corresponding to semistandard tableaux.

    Requires a unique descending omega-vector in degree ``d``; the tableaux
    have the conjugate shape and entries in 1..n.
    """
    from .blocks import AmbiguousOmegaError, cp_inverse, descending_omegas

    omegas = descending_omegas(d, n)
    if len(omegas) != 1:
        raise AmbiguousOmegaError(d, n, omegas)
    shape = Partition(omegas[0]).conjugate()
    return [cp_inverse(t, n) for t in enumerate_ssyt(shape, n)]
