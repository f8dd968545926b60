# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) echelon builder over uint64 word rows.

Same contract as ``_gf2_py``: the pivot of a row is its highest set bit and
each stored basis row has a distinct pivot.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t
from libc.string cimport memset, memcpy

cnp.import_array()

IMPLEMENTATION = "cython"

cdef extern from *:
    """
    static inline int hc_high_bit(unsigned long long x) { return 63 - __builtin_clzll(x); }
    """
    int hc_high_bit(unsigned long long x) nogil


cdef inline Py_ssize_t _reduce_row(uint64_t* v, Py_ssize_t words, uint64_t* basis,
                                   int64_t* pivot_row) noexcept nogil:
    # reduce v in place; return its new pivot, or -1 when it vanishes
    cdef Py_ssize_t top = words - 1
    cdef Py_ssize_t p, w
    cdef int64_t j
    cdef uint64_t* b
    while True:
        while top >= 0 and v[top] == 0:
            top -= 1
        if top < 0:
            return -1
        p = top * 64 + hc_high_bit(v[top])
        j = pivot_row[p]
        if j < 0:
            return p
        b = basis + j * words
        # basis row j has no bits above p, so words past top are untouched
        for w in range(top + 1):
            v[w] ^= b[w]


cdef class EchelonBuilder:
    """Incrementally maintained row-echelon basis of a subspace of F_2^ncols."""

    cdef readonly Py_ssize_t ncols
    cdef readonly Py_ssize_t words
    cdef Py_ssize_t _rank
    cdef object _store
    cdef object _pivot_row
    cdef object _pivot_of

    def __init__(self, Py_ssize_t ncols):
        self.ncols = ncols
        self.words = (ncols + 63) // 64
        self._rank = 0
        cap = min(max(ncols, 1), 256)
        self._store = np.zeros((cap, max(self.words, 1)), dtype=np.uint64)
        self._pivot_row = np.full(max(ncols, 1), -1, dtype=np.int64)
        self._pivot_of = np.zeros(cap, dtype=np.int64)

    @property
    def rank(self):
        return self._rank

    cdef void _grow(self):
        cap = self._store.shape[0]
        new_cap = min(max(self.ncols, 1), cap * 2)
        store = np.zeros((new_cap, max(self.words, 1)), dtype=np.uint64)
        store[:cap] = self._store
        piv = np.zeros(new_cap, dtype=np.int64)
        piv[:cap] = self._pivot_of
        self._store = store
        self._pivot_of = piv

    cdef bint _insert(self, uint64_t* v):
        cdef uint64_t[:, ::1] store = self._store
        cdef int64_t[::1] pivot_row = self._pivot_row
        cdef Py_ssize_t p
        with nogil:
            p = _reduce_row(v, self.words, &store[0, 0], &pivot_row[0])
        if p < 0:
            return False
        if self._rank == self._store.shape[0]:
            self._grow()
            store = self._store
        memcpy(&store[self._rank, 0], v, self.words * sizeof(uint64_t))
        pivot_row[p] = self._rank
        self._pivot_of[self._rank] = p
        self._rank += 1
        return True

    def add_sparse(self, rows):
        """Insert rows given as column-index lists; returns the rank gained."""
        cdef uint64_t[::1] buf = np.zeros(max(self.words, 1), dtype=np.uint64)
        cdef Py_ssize_t c
        cdef Py_ssize_t gained = 0
        for cols in rows:
            memset(&buf[0], 0, self.words * sizeof(uint64_t))
            for c in cols:
                buf[c >> 6] ^= (<uint64_t>1) << (c & 63)
            if self._insert(&buf[0]):
                gained += 1
        return gained

    def add_dense(self, arr):
        cdef uint64_t[:, ::1] a = np.ascontiguousarray(np.atleast_2d(arr), dtype=np.uint64)
        cdef uint64_t[::1] buf = np.zeros(max(self.words, 1), dtype=np.uint64)
        cdef Py_ssize_t i
        cdef Py_ssize_t gained = 0
        if a.shape[0] and a.shape[1] != self.words:
            raise ValueError("row width does not match")
        for i in range(a.shape[0]):
            memcpy(&buf[0], &a[i, 0], self.words * sizeof(uint64_t))
            if self._insert(&buf[0]):
                gained += 1
        return gained

    def reduce_dense(self, arr):
        out = np.array(np.atleast_2d(arr), dtype=np.uint64, order="C", copy=True)
        cdef uint64_t[:, ::1] o = out
        cdef uint64_t[:, ::1] store = self._store
        cdef int64_t[::1] pivot_row = self._pivot_row
        cdef Py_ssize_t i
        if o.shape[0] and o.shape[1] != self.words:
            raise ValueError("row width does not match")
        with nogil:
            for i in range(o.shape[0]):
                _reduce_row(&o[i, 0], self.words, &store[0, 0], &pivot_row[0])
        return out

    def pivots(self):
        return np.sort(self._pivot_of[:self._rank])

    def basis(self):
        order = np.argsort(self._pivot_of[:self._rank], kind="stable")
        return np.ascontiguousarray(self._store[:self._rank][order])

    def copy(self):
        cdef EchelonBuilder other = EchelonBuilder.__new__(EchelonBuilder)
        other.ncols = self.ncols
        other.words = self.words
        other._rank = self._rank
        other._store = self._store.copy()
        other._pivot_row = self._pivot_row.copy()
        other._pivot_of = self._pivot_of.copy()
        return other
