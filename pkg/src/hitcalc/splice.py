"""k-splicing of blocks and the straightening algorithm built from it."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .blocks import Block, cmp_left, omega_of_exponents
from .poly import Polynomial

__all__ = [
    "BlockSum",
    "SpliceError",
    "NonDescendingError",
    "k_splice",
    "straighten",
    "first_violation",
]


class SpliceError(ValueError):
    pass


class NonDescendingError(ValueError):
    """straighten was given a block whose omega-vector is not descending."""

    def __init__(self, block: Block, column: int):
        self.block, self.column = block, column
        super().__init__(
            f"omega({block}) = {tuple(block.omega())} is not descending: "
            f"column {column} < column {column + 1}"
        )


class BlockSum(Polynomial):
    """Formal F_2-sum of blocks; the same thing as a polynomial."""

    __slots__ = ()

    @classmethod
    def of(cls, blocks: Iterable[Block], n: int) -> "BlockSum":
        return cls(n, [b.exponents for b in blocks])

    @classmethod
    def from_poly(cls, p: Polynomial) -> "BlockSum":
        return cls._from_reduced(p.n, p.exponent_set)

    @property
    def blocks(self) -> list[Block]:
        return [Block(e) for e in sorted(self.exponent_set, reverse=True)]

    def __add__(self, other):
        return BlockSum.from_poly(Polynomial.__add__(self, other))

    def __repr__(self) -> str:
        return f"BlockSum({[str(b) for b in self.blocks]})"


def k_splice(b: Block, k: int, col: int, S: Iterable[int]) -> BlockSum:
    """k-splice ``b`` at 1-based column position ``col`` (= t+2) and rows ``S``.

    Rows in S move their digit from column ``col`` back to ``col - 1``; every
    k-set T of other rows reading (1, 0) in those columns moves forward.
    The result sums G(S, T) over all T, and is zero when no T exists.
    """
    S = sorted(set(S))
    n = b.n
    if col < 2:
        raise SpliceError(f"column position must be at least 2, got {col}")
    if len(S) != k or k < 1:
        raise SpliceError(f"|S| = {len(S)} but k = {k}")
    lo, hi = 1 << (col - 2), 1 << (col - 1)
    exps = list(b.exponents)
    for i in S:
        if not 1 <= i <= n:
            raise SpliceError(f"row {i} outside 1..{n}")
        e = exps[i - 1]
        if not (e & hi) or (e & lo):
            raise SpliceError(f"row {i} does not read (0, 1) in columns {col - 1}, {col}")
    eligible = [i for i in range(1, n + 1) if exps[i - 1] & lo and not exps[i - 1] & hi]
    # moving a digit back one column subtracts 2^(t) from the exponent
    for i in S:
        exps[i - 1] -= lo
    out = []
    for T in combinations(eligible, k):
        g = list(exps)
        for i in T:
            g[i - 1] += lo
        out.append(tuple(g))
    return BlockSum(n, out)


def _toggle(acc: set, items) -> None:
    for t in items:
        if t in acc:
            acc.remove(t)
        else:
            acc.add(t)


def _prefix_omega(exps, r: int):
    return omega_of_exponents(exps[:r])


def first_violation(b: Block, r: int) -> int | None:
    """Smallest 1-based column t+1 with omega_{t+1}(b[r]) < omega_{t+2}(b[r])."""
    if not 1 <= r <= b.n:
        raise ValueError(f"row level {r} outside 1..{b.n}")
    w = _prefix_omega(b.exponents, r)
    for j in range(len(w) - 1):
        if w[j] < w[j + 1]:
            return j + 1
    return None


def _level_measure(exps) -> tuple:
    # omega of every truncation, deepest level first; compared in left order
    return tuple(_prefix_omega(exps, i) for i in range(len(exps), 0, -1))


def _worst_level(exps) -> tuple[int, int] | None:
    """(r, column) for the largest level r < n whose truncation is not
    descending, with its smallest violating column."""
    for r in range(len(exps) - 1, 0, -1):
        w = _prefix_omega(exps, r)
        for j in range(len(w) - 1):
            if w[j] < w[j + 1]:
                return r, j + 1
    return None


def straighten(b: Block, check: bool = False) -> BlockSum:
    """Rewrite a block with descending omega-vector as a sum of semistandard
    blocks by iterated splicing.

    Each step takes the deepest level r whose truncation is not descending,
    the smallest violating column t+1 there, and k-splices at column t+2 with
    S = all rows <= r reading (0, 1).  A splice can break a deeper level
    again (columns t and t+3 are not controlled), so blocks are re-examined
    from the bottom after every step.  The vector of truncation omegas,
    deepest first, strictly increases in left order, which bounds the loop.
    With ``check`` that measure is asserted on every splice.
    """
    n = b.n
    top = first_violation(b, n)
    if top is not None:
        raise NonDescendingError(b, top)
    done: set = set()
    # pending is a mod-2 sum too: equal blocks cancel before expansion
    work: set = {b.exponents}
    while work:
        e = work.pop()
        found = _worst_level(e)
        if found is None:
            _toggle(done, (e,))
            continue
        r, c = found
        lo, hi = 1 << (c - 1), 1 << c
        S = [i for i in range(1, r + 1) if e[i - 1] & hi and not e[i - 1] & lo]
        out = k_splice(Block(e), len(S), c + 1, S)
        if check:
            before, level = _level_measure(e), _prefix_omega(e, r)
            for h in out.exponent_set:
                assert _level_measure(h) > before
                assert cmp_left(_prefix_omega(h, r), level) > 0
        _toggle(work, out.exponent_set)
    return BlockSum(n, done)
