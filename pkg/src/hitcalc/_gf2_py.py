"""Pure-Python GF(2) echelon builder; rows are Python ints used as bitsets.

Pivot of a row is its highest set bit. Dense rows cross the API as
little-endian uint64 word arrays (bit c lives in word c // 64, bit c % 64).
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

IMPLEMENTATION = "python"


def _words(ncols: int) -> int:
    return (ncols + 63) // 64


def row_to_int(row: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(row, dtype="<u8").tobytes(), "little")


def int_to_row(v: int, words: int) -> np.ndarray:
    return np.frombuffer(v.to_bytes(words * 8, "little"), dtype="<u8").astype(np.uint64)


class EchelonBuilder:
    """Incrementally maintained row-echelon basis of a subspace of F_2^ncols."""

    def __init__(self, ncols: int):
        self.ncols = int(ncols)
        self.words = _words(self.ncols)
        self._rows: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, v: int) -> int:
        rows = self._rows
        while v:
            r = rows.get(v.bit_length() - 1)
            if r is None:
                return v
            v ^= r
        return 0

    def _insert(self, v: int) -> bool:
        v = self._reduce(v)
        if v:
            self._rows[v.bit_length() - 1] = v
            return True
        return False

    def add_sparse(self, rows: Iterable[Iterable[int]]) -> int:
        """Insert rows given as column-index lists; returns the rank gained."""
        gained = 0
        for cols in rows:
            v = 0
            for c in cols:
                v ^= 1 << c
            gained += self._insert(v)
        return gained

    def add_dense(self, arr: np.ndarray) -> int:
        arr = np.atleast_2d(arr)
        return sum(self._insert(row_to_int(r)) for r in arr)

    def reduce_dense(self, arr: np.ndarray) -> np.ndarray:
        arr = np.atleast_2d(arr)
        out = np.zeros((arr.shape[0], self.words), dtype=np.uint64)
        for i, r in enumerate(arr):
            out[i] = int_to_row(self._reduce(row_to_int(r)), self.words)
        return out

    def pivots(self) -> np.ndarray:
        return np.array(sorted(self._rows), dtype=np.int64)

    def basis(self) -> np.ndarray:
        out = np.zeros((self.rank, self.words), dtype=np.uint64)
        for i, p in enumerate(sorted(self._rows)):
            out[i] = int_to_row(self._rows[p], self.words)
        return out

    def copy(self) -> "EchelonBuilder":
        other = EchelonBuilder(self.ncols)
        other._rows = dict(self._rows)
        return other
