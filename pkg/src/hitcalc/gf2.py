"""Bit-packed matrices over F_2.

The echelon kernel comes from the compiled ``_gf2`` extension when it is
built, otherwise from the pure-Python ``_gf2_py``. Set HITCALC_PURE_PYTHON=1
to force the fallback.
"""

from __future__ import annotations

import os
from typing import Iterable

import numpy as np

from . import _gf2_py

_BACKENDS = {"python": _gf2_py.EchelonBuilder}

try:
    from . import _gf2 as _compiled

    _BACKENDS["cython"] = _compiled.EchelonBuilder
except ImportError:  # extension not built
    _compiled = None

if os.environ.get("HITCALC_PURE_PYTHON") or _compiled is None:
    BACKEND = "python"
else:
    BACKEND = "cython"

EchelonBuilder = _BACKENDS[BACKEND]

__all__ = ["F2Matrix", "EchelonBuilder", "BACKEND", "backends", "words_for"]


def backends() -> dict:
    """Available echelon builder implementations by name."""
    return dict(_BACKENDS)


def words_for(ncols: int) -> int:
    return (ncols + 63) // 64


def _pack(indices: Iterable[int], words: int) -> np.ndarray:
    row = np.zeros(words, dtype=np.uint64)
    for c in indices:
        row[c >> 6] ^= np.uint64(1) << np.uint64(c & 63)
    return row


class F2Matrix:
    """Row-major bit-packed matrix; bit ``c`` of row ``r`` is entry (r, c)."""

    __slots__ = ("cols", "bits", "_rank", "_echelon", "_pivots")

    def __init__(self, bits: np.ndarray, cols: int, *, echelon: bool = False):
        bits = np.ascontiguousarray(np.atleast_2d(bits), dtype=np.uint64)
        if bits.shape[1] != words_for(cols):
            raise ValueError(f"{bits.shape[1]} words per row cannot hold {cols} columns")
        self.cols = cols
        self.bits = bits
        self._rank = None
        self._echelon = None
        self._pivots = None
        if echelon:
            self._echelon = self
            self._rank = bits.shape[0]

    @property
    def rows(self) -> int:
        return self.bits.shape[0]

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "F2Matrix":
        return cls(np.zeros((rows, words_for(cols)), dtype=np.uint64), cols)

    @classmethod
    def from_sparse(cls, rows: Iterable[Iterable[int]], cols: int) -> "F2Matrix":
        w = words_for(cols)
        packed = [_pack(r, w) for r in rows]
        if not packed:
            return cls.zeros(0, cols)
        return cls(np.vstack(packed), cols)

    @classmethod
    def from_dense(cls, a) -> "F2Matrix":
        a = np.atleast_2d(np.asarray(a, dtype=np.uint8) & 1)
        rows, cols = a.shape
        return cls.from_sparse((np.flatnonzero(r) for r in a), cols)

    @classmethod
    def from_builder(cls, builder) -> "F2Matrix":
        m = cls(builder.basis().reshape(builder.rank, words_for(builder.ncols)), builder.ncols, echelon=True)
        m._pivots = builder.pivots()
        return m

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for r in range(self.rows):
            out[r, self.row_support(r)] = 1
        return out

    def row_support(self, r: int) -> list[int]:
        """Column indices of the set bits of row ``r``, ascending."""
        bits = np.unpackbits(self.bits[r].astype("<u8").view(np.uint8), bitorder="little")
        return [int(c) for c in np.flatnonzero(bits[: self.cols])]

    def builder(self):
        b = EchelonBuilder(self.cols)
        if self.rows:
            b.add_dense(self.bits)
        return b

    def echelon(self) -> "F2Matrix":
        """Echelon form: one row per pivot, pivot = highest set bit, pivots
        strictly increasing down the rows."""
        if self._echelon is None:
            e = F2Matrix.from_builder(self.builder())
            self._echelon = e
            self._rank = e.rows
        return self._echelon

    @property
    def rank(self) -> int:
        if self._rank is None:
            self.echelon()
        return self._rank

    @property
    def pivots(self) -> np.ndarray:
        e = self.echelon()
        if e._pivots is None:
            e._pivots = np.array([_high_bit(r) for r in e.bits], dtype=np.int64)
        return e._pivots

    def is_echelon(self) -> bool:
        piv = [_high_bit(r) for r in self.bits]
        return all(p >= 0 for p in piv) and all(a < b for a, b in zip(piv, piv[1:]))

    def contains(self, vecs: np.ndarray) -> np.ndarray:
        """Row-space membership for each row of ``vecs``."""
        b = self.echelon().builder()
        red = b.reduce_dense(np.atleast_2d(vecs))
        return ~red.any(axis=1)

    def stack(self, other: "F2Matrix") -> "F2Matrix":
        if other.cols != self.cols:
            raise ValueError("column count mismatch")
        return F2Matrix(np.vstack([self.bits, other.bits]), self.cols)

    def __repr__(self) -> str:
        return f"F2Matrix(rows={self.rows}, cols={self.cols})"


def _high_bit(row: np.ndarray) -> int:
    nz = np.flatnonzero(row)
    if not len(nz):
        return -1
    w = int(nz[-1])
    return w * 64 + int(row[w]).bit_length() - 1
