"""Hit subspaces of P^d(n) and the cohit quotients, by linear algebra over F_2.

The hit subspace in degree d is spanned by Sq^(2^i)(m) for monomials m of
degree d - 2^i, since the squares Sq^(2^i) generate the Steenrod algebra.

Columns are the degree-d monomials in *rank order*: omega-vector descending
in left order, then exponent tuple descending lexicographically. The echelon
basis uses the highest set bit of a row as its pivot, so the non-pivot
columns are exactly the monomials a greedy pass in rank order would keep.

On-disk cache (one file per (n, d), directory from HITCALC_CACHE_DIR)::

    offset  size  field
    0       8     magic b"HITCALC\\0"
    8       4     format version (uint32, currently 1)
    12      4     n (uint32)
    16      4     d (uint32)
    20      8     cols (uint64) = C(d+n-1, n-1)
    28      8     rank (uint64)
    36      ...   rank rows of ceil(cols/64) little-endian uint64 words;
                  bit c of a row is the coefficient of the c-th monomial in
                  rank order; rows are sorted by increasing pivot

All integers little-endian.
"""

from __future__ import annotations

import logging
import os
import struct
import tempfile
import threading
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .blocks import OmegaVector, omega_of_exponents
from .gf2 import EchelonBuilder, F2Matrix, words_for
from .poly import Monomial, Polynomial
from .steenrod import monomials_of_degree, sq_monomial

__all__ = [
    "CapExceeded",
    "HitSpace",
    "DEFAULT_CAP",
    "SLOW_COLUMNS",
    "dim_p",
    "rank_order",
    "hit_generators",
    "hit_space",
    "is_hit",
    "are_equivalent",
    "cohit_dim",
    "cohit_basis",
    "omega_quotient_dim",
    "spectrum",
    "in_hits_plus_span",
    "clear_cache",
    "save_hit_space",
    "load_hit_space",
]

log = logging.getLogger(__name__)

DEFAULT_CAP = 100_000
# above this many columns a computation is reported as long-running
SLOW_COLUMNS = 20_000
CACHE_ENV = "HITCALC_CACHE_DIR"
_MAGIC = b"HITCALC\0"
_FORMAT_VERSION = 1
_HEADER = struct.Struct("<8sIIIQQ")
_CHUNK = 4096


class CapExceeded(RuntimeError):
    """dim P^d(n) is above the configured column cap."""

    def __init__(self, n: int, d: int, cols: int, cap: int):
        self.n, self.d, self.cols, self.cap = n, d, cols, cap
        super().__init__(
            f"P^{d}({n}) has {cols} monomials, above the cap of {cap} columns "
            f"(raise it with --cap {cols} or more)"
        )


def dim_p(n: int, d: int) -> int:
    """Number of monomials of degree d in n variables."""
    return comb(d + n - 1, n - 1)


def _rank_key(e: tuple) -> tuple:
    return (omega_of_exponents(e), e)


@lru_cache(maxsize=64)
def rank_order(n: int, d: int) -> tuple:
    """Degree-d exponent tuples in rank order."""
    return tuple(sorted(monomials_of_degree(n, d), key=_rank_key, reverse=True))


@lru_cache(maxsize=64)
def _index(n: int, d: int) -> dict:
    return {e: i for i, e in enumerate(rank_order(n, d))}


def hit_generators(n: int, d: int) -> Iterator[tuple[int, tuple, tuple]]:
    """Yield (i, g, terms) with terms = Sq^(2^i)(g) for each monomial g of
    degree d - 2^i; zero images are skipped."""
    i = 0
    while (1 << i) <= d:
        k = 1 << i
        for g in monomials_of_degree(n, d - k):
            terms = sq_monomial(k, g)
            if terms:
                yield i, g, terms
        i += 1


class HitSpace:
    """Echelonized hit subspace of P^d(n)."""

    __slots__ = ("n", "d", "monomials", "index", "basis", "_builder")

    def __init__(self, n: int, d: int, basis: F2Matrix, builder=None):
        self.n = n
        self.d = d
        self.monomials = rank_order(n, d)
        self.index = _index(n, d)
        if basis.cols != len(self.monomials):
            raise ValueError(f"basis has {basis.cols} columns, expected {len(self.monomials)}")
        self.basis = basis
        self._builder = builder

    @property
    def cols(self) -> int:
        return len(self.monomials)

    @property
    def rank(self) -> int:
        return self.basis.rows

    @property
    def cohit_dim(self) -> int:
        return self.cols - self.rank

    def builder(self):
        if self._builder is None:
            self._builder = self.basis.builder()
        return self._builder

    def vector(self, p: Polynomial) -> np.ndarray:
        """Packed coordinate row of a degree-d polynomial."""
        row = np.zeros(words_for(self.cols), dtype=np.uint64)
        for e in p.exponent_set:
            try:
                c = self.index[e]
            except KeyError:
                raise ValueError(f"term {e} is not of degree {self.d} in {self.n} variables") from None
            row[c >> 6] ^= np.uint64(1) << np.uint64(c & 63)
        return row

    def decode(self, row: np.ndarray) -> Polynomial:
        cols = F2Matrix(row, self.cols).row_support(0)
        return Polynomial(self.n, [self.monomials[c] for c in cols])

    def contains(self, p: Polynomial) -> bool:
        red = self.builder().reduce_dense(self.vector(p))
        return not red.any()

    def non_pivot_columns(self) -> list[int]:
        pivots = set(int(c) for c in self.basis.pivots)
        return [c for c in range(self.cols) if c not in pivots]

    def omega_of_column(self, c: int) -> OmegaVector:
        return omega_of_exponents(self.monomials[c])

    def rank_with_columns(self, cols: Iterable[int]) -> int:
        """dim(H + span{e_c : c in cols}).

        Adding coordinate vectors is the same as projecting those
        coordinates away: the result is |cols| + rank(H with cols zeroed).
        """
        cols = sorted(set(cols))
        if not cols:
            return self.rank
        keep = self._mask_without(cols)
        b = EchelonBuilder(self.cols)
        if self.rank:
            b.add_dense(self.basis.bits & keep)
        return len(cols) + b.rank

    def contains_modulo(self, p: Polynomial, cols: Iterable[int]) -> bool:
        """Whether p lies in H + span{e_c : c in cols}."""
        keep = self._mask_without(cols)
        b = EchelonBuilder(self.cols)
        if self.rank:
            b.add_dense(self.basis.bits & keep)
        red = b.reduce_dense(self.vector(p) & keep)
        return not red.any()

    def _mask_without(self, cols: Iterable[int]) -> np.ndarray:
        mask = np.full(words_for(self.cols), np.uint64(0xFFFFFFFFFFFFFFFF), dtype=np.uint64)
        for c in cols:
            mask[c >> 6] &= ~(np.uint64(1) << np.uint64(c & 63))
        return mask

    def __repr__(self) -> str:
        return f"HitSpace(n={self.n}, d={self.d}, cols={self.cols}, rank={self.rank})"


def _build(n: int, d: int) -> HitSpace:
    cols = dim_p(n, d)
    index = _index(n, d)
    builder = EchelonBuilder(cols)
    chunk: list = []
    for _, _, terms in hit_generators(n, d):
        chunk.append([index[t] for t in terms])
        if len(chunk) >= _CHUNK:
            builder.add_sparse(chunk)
            chunk.clear()
            if builder.rank == cols:
                break
    if chunk:
        builder.add_sparse(chunk)
    return HitSpace(n, d, F2Matrix.from_builder(builder), builder)


_CACHE: dict[tuple[int, int], HitSpace] = {}
_CACHE_LOCK = threading.Lock()


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


def _cache_path(root: str | os.PathLike, n: int, d: int) -> Path:
    return Path(root) / f"hit_n{n}_d{d}.bin"


def save_hit_space(hs: HitSpace, path: str | os.PathLike) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    header = _HEADER.pack(_MAGIC, _FORMAT_VERSION, hs.n, hs.d, hs.cols, hs.rank)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "wb") as fh:
        fh.write(header)
        fh.write(np.ascontiguousarray(hs.basis.bits, dtype="<u8").tobytes())
    os.replace(tmp, path)


def load_hit_space(path: str | os.PathLike) -> HitSpace:
    data = Path(path).read_bytes()
    if len(data) < _HEADER.size:
        raise ValueError(f"{path}: truncated header")
    magic, version, n, d, cols, rank = _HEADER.unpack_from(data)
    if magic != _MAGIC or version != _FORMAT_VERSION:
        raise ValueError(f"{path}: not a version-{_FORMAT_VERSION} hit-space file")
    if cols != dim_p(n, d) or rank > cols:
        raise ValueError(f"{path}: inconsistent header (n={n}, d={d}, cols={cols}, rank={rank})")
    words = words_for(cols)
    body = np.frombuffer(data, dtype="<u8", offset=_HEADER.size)
    if body.size != rank * words:
        raise ValueError(f"{path}: expected {rank * words} words, found {body.size}")
    bits = body.astype(np.uint64).reshape(rank, words)
    basis = F2Matrix(bits, cols, echelon=True)
    if not basis.is_echelon():
        raise ValueError(f"{path}: rows are not in echelon form")
    return HitSpace(n, d, basis)


def hit_space(n: int, d: int, cap: int | None = None, use_cache: bool = True) -> HitSpace:
    """The echelonized hit subspace of P^d(n)."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    cols = dim_p(n, d)
    cap = DEFAULT_CAP if cap is None else cap
    if cols > cap:
        raise CapExceeded(n, d, cols, cap)
    key = (n, d)
    if use_cache:
        hs = _CACHE.get(key)
        if hs is not None:
            return hs
    root = os.environ.get(CACHE_ENV)
    hs = None
    if use_cache and root:
        path = _cache_path(root, n, d)
        if path.exists():
            try:
                hs = load_hit_space(path)
            except ValueError as exc:
                log.warning("ignoring cache file: %s", exc)
    if hs is None:
        if cols > SLOW_COLUMNS:
            log.info("building hit space for P^%d(%d) with %d columns; this is slow", d, n, cols)
        hs = _build(n, d)
        if use_cache and root:
            save_hit_space(hs, _cache_path(root, n, d))
    if not use_cache:
        return hs
    with _CACHE_LOCK:
        # a concurrent build of the same key produced an identical space
        return _CACHE.setdefault(key, hs)


def _degree_of(p: Polynomial) -> int:
    degs = p.degrees()
    if len(degs) > 1:
        raise ValueError(f"polynomial is not homogeneous (degrees {sorted(degs)})")
    return degs.pop() if degs else 0


def is_hit(p: Polynomial, cap: int | None = None) -> bool:
    if p.is_zero():
        return True
    return hit_space(p.n, _degree_of(p), cap).contains(p)


def are_equivalent(p: Polynomial, q: Polynomial, cap: int | None = None) -> bool:
    """p and q differ by a hit polynomial."""
    if p.n != q.n:
        raise ValueError(f"variable count mismatch: {p.n} vs {q.n}")
    dp, dq = _degree_of(p), _degree_of(q)
    if not p.is_zero() and not q.is_zero() and dp != dq:
        raise ValueError(f"degree mismatch: {dp} vs {dq}")
    return is_hit(p + q, cap)


def cohit_dim(n: int, d: int, cap: int | None = None) -> int:
    return hit_space(n, d, cap).cohit_dim


def cohit_basis(n: int, d: int, cap: int | None = None) -> list[Monomial]:
    """Monomials whose classes form a basis of Q^d(n), in rank order."""
    hs = hit_space(n, d, cap)
    return [Monomial(hs.monomials[c]) for c in hs.non_pivot_columns()]


def in_hits_plus_span(p: Polynomial, monomials: Iterable, cap: int | None = None) -> bool:
    """Whether p lies in (hits) + span(monomials), all of degree deg(p)."""
    d = _degree_of(p)
    hs = hit_space(p.n, d, cap)
    cols = []
    for m in monomials:
        e = m.exponents if isinstance(m, Monomial) else tuple(m)
        cols.append(hs.index[e])
    return hs.contains_modulo(p, cols)


def omega_quotient_dim(n: int, d: int, w: Sequence[int], cap: int | None = None) -> int:
    """dim of span{omega <=_l w} modulo (hits + span{omega <_l w}).

    With V, W the coordinate subspaces of the two monomial sets (W inside V)
    this is dim V - dim(V & (H + W)) = dim(V + H) - dim(H + W).
    """
    w = OmegaVector(w)
    if w.weight != d:
        raise ValueError(f"omega {tuple(w)} has weight {w.weight}, not {d}")
    hs = hit_space(n, d, cap)
    V = [c for c, e in enumerate(hs.monomials) if omega_of_exponents(e) <= w]
    W = [c for c in V if hs.omega_of_column(c) < w]
    return hs.rank_with_columns(V) - hs.rank_with_columns(W)


def spectrum(n: int, dmax: int, cap: int | None = None) -> list[tuple[int, int | None]]:
    """[(d, cohit_dim(n, d))] for d = 0..dmax; None marks a capped degree,
    after which the table stops."""
    out: list[tuple[int, int | None]] = []
    for d in range(dmax + 1):
        try:
            out.append((d, cohit_dim(n, d, cap)))
        except CapExceeded:
            out.append((d, None))
            break
    return out
