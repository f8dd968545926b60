"""Binary blocks: the (0,1)-array view of a monomial.

Row ``i`` of the block of x_1^{d_1}...x_n^{d_n} is the binary expansion of
``d_i`` written least significant digit first. Column ``j`` (1-based)
carries weight 2^(j-1). Trailing zero columns are never stored, so the
number of columns is the largest bit length among the exponents.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .poly import Monomial
from .tableaux import Partition, Tableau

__all__ = [
    "Block",
    "OmegaVector",
    "AmbiguousOmegaError",
    "BlockParseError",
    "mu",
    "alpha_count",
    "block_of",
    "monomial_of",
    "omega",
    "alpha",
    "omega_of_exponents",
    "cp",
    "cp_inverse",
    "is_semistandard",
    "cmp_left",
    "cmp_right",
    "ferrers_block",
    "descending_omegas",
    "row_regular_partition",
    "is_descending",
    "weight",
    "parse_omega",
]


class BlockParseError(ValueError):
    pass


class AmbiguousOmegaError(ValueError):
    """Degree does not have exactly one descending omega-vector."""

    def __init__(self, d: int, n: int, omegas: Sequence):
        self.d, self.n, self.omegas = d, n, list(omegas)
        found = ", ".join(str(tuple(w)) for w in omegas) or "none"
        super().__init__(
            f"P^{d}({n}) has {len(omegas)} descending omega-vectors ({found}); "
            "exactly one is required"
        )


class OmegaVector(tuple):
    """Column-sum vector with trailing zeros removed.

    Because entries are nonnegative, Python's tuple ordering on normalized
    vectors coincides with the left order.
    """

    def __new__(cls, entries: Iterable[int] = ()):
        e = [int(x) for x in entries]
        while e and e[-1] == 0:
            e.pop()
        if any(x < 0 for x in e):
            raise ValueError("omega entries must be nonnegative")
        return super().__new__(cls, e)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def weight(self) -> int:
        return weight(self)

    @property
    def is_descending(self) -> bool:
        return is_descending(self)

    def __repr__(self) -> str:
        return f"OmegaVector({tuple(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self))


def weight(w: Sequence[int]) -> int:
    return sum(x << j for j, x in enumerate(w))


def is_descending(w: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def parse_omega(text: str) -> OmegaVector:
    try:
        return OmegaVector(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise BlockParseError(f"bad omega-vector {text!r}: {exc}") from None


def alpha_count(d: int) -> int:
    """Number of 1-digits in the binary expansion of ``d``."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return bin(d).count("1")


def mu(d: int) -> int:
    """Least k such that d is a sum of k numbers of the form 2^j - 1.

    Uses mu(d) = min{k : alpha(d + k) <= k}.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    k = 0
    while alpha_count(d + k) > k:
        k += 1
    return k


def omega_of_exponents(exps: Sequence[int]) -> OmegaVector:
    width = max((e.bit_length() for e in exps), default=0)
    return OmegaVector(sum((e >> j) & 1 for e in exps) for j in range(width))


class Block:
    """The block of a monomial. Equality and hashing follow the monomial."""

    __slots__ = ("monomial",)

    def __init__(self, monomial):
        if not isinstance(monomial, Monomial):
            monomial = Monomial(monomial)
        object.__setattr__(self, "monomial", monomial)

    def __setattr__(self, name, value):
        raise AttributeError("Block is immutable")

    @property
    def n(self) -> int:
        return self.monomial.n

    @property
    def exponents(self) -> tuple[int, ...]:
        return self.monomial.exponents

    @property
    def degree(self) -> int:
        return self.monomial.degree

    @property
    def columns(self) -> int:
        return max((e.bit_length() for e in self.exponents), default=0)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """All rows padded to ``columns`` digits."""
        c = self.columns
        return tuple(tuple((e >> j) & 1 for j in range(c)) for e in self.exponents)

    def entry(self, i: int, j: int) -> int:
        """Digit at 1-based row ``i`` and column ``j`` (0 beyond the last column)."""
        if not 1 <= i <= self.n or j < 1:
            raise IndexError(f"({i}, {j}) outside block with {self.n} rows")
        return (self.exponents[i - 1] >> (j - 1)) & 1

    def truncate(self, i: int) -> "Block":
        """Sub-block of the first ``i`` rows."""
        if not 1 <= i <= self.n:
            raise ValueError(f"row level {i} outside 1..{self.n}")
        return Block(self.exponents[:i])

    def omega(self) -> OmegaVector:
        return omega_of_exponents(self.exponents)

    def alpha(self) -> tuple[int, ...]:
        return tuple(alpha_count(e) for e in self.exponents)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Block":
        """Parse rows like ``"01/1/1"``; missing trailing rows are zero when
        ``n`` exceeds the number of rows given."""
        parts = [p.strip() for p in text.strip().split("/")]
        if not text.strip() or any(not p or set(p) - {"0", "1"} for p in parts):
            raise BlockParseError(f"bad block text {text!r}: rows must be 0/1 digits separated by '/'")
        if n is not None:
            if len(parts) > n:
                raise BlockParseError(f"block has {len(parts)} rows but n={n}")
            parts += ["0"] * (n - len(parts))
        exps = [sum(int(c) << j for j, c in enumerate(p)) for p in parts]
        return cls(exps)

    def __str__(self) -> str:
        out = []
        for e in self.exponents:
            out.append("".join(str((e >> j) & 1) for j in range(e.bit_length())) or "0")
        return "/".join(out)

    def pretty(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Block) and self.monomial == other.monomial

    def __hash__(self) -> int:
        return hash(("Block", self.monomial.exponents))

    def __lt__(self, other: "Block") -> bool:
        return self.exponents < other.exponents

    def __repr__(self) -> str:
        return f"Block({str(self)!r})"


def block_of(m: Monomial) -> Block:
    return Block(m)


def monomial_of(b: Block) -> Monomial:
    return b.monomial


def omega(b: Block) -> OmegaVector:
    return b.omega()


def alpha(b: Block) -> tuple[int, ...]:
    return b.alpha()


def cp(b: Block) -> Tableau:
    """Column-position correspondence.

    Column ``j`` of the result lists, top down, the rows holding a 1 in
    column ``j`` of ``b``; unused cells are 0.
    """
    cols = [[i + 1 for i, e in enumerate(b.exponents) if (e >> j) & 1] for j in range(b.columns)]
    height = max((len(c) for c in cols), default=0)
    rows = [[c[i] if i < len(c) else 0 for c in cols] for i in range(height)]
    return Tableau(rows)


def cp_inverse(t: Tableau, n: int) -> Block:
    if not isinstance(t, Tableau):
        t = Tableau(t)
    if not t.is_column_strict():
        raise ValueError(f"{t!r} is not column strict")
    if t.max_entry() > n:
        raise ValueError(f"{t!r} has an entry larger than n={n}")
    exps = [0] * n
    for j, col in enumerate(t.columns()):
        for i in col:
            exps[i - 1] |= 1 << j
    return Block(exps)


def is_semistandard(b: Block) -> bool:
    """omega of every top-i truncation is descending."""
    exps = b.exponents
    width = b.columns
    sums = [0] * width
    for e in exps:
        for j in range(width):
            sums[j] += (e >> j) & 1
        if not is_descending(sums):
            return False
    return True


def _padded(a: Sequence[int], b: Sequence[int]) -> tuple[list, list]:
    size = max(len(a), len(b))
    return list(a) + [0] * (size - len(a)), list(b) + [0] * (size - len(b))


def cmp_left(a: Sequence[int], b: Sequence[int]) -> int:
    """-1, 0 or 1; the first differing entry decides, larger is greater."""
    a, b = _padded(a, b)
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


def cmp_right(a: Sequence[int], b: Sequence[int]) -> int:
    """-1, 0 or 1; the last differing entry decides, smaller is greater."""
    a, b = _padded(a, b)
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def ferrers_block(lam: Sequence[int], n: int) -> Block:
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"partition {tuple(lam)} has more than n={n} parts")
    exps = [(1 << p) - 1 for p in lam] + [0] * (n - len(lam))
    return Block(exps)


@lru_cache(maxsize=None)
def _descending_omegas(d: int, n: int) -> tuple:
    def rec(j: int, rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        unit = 1 << j
        for v in range(min(cap, rest >> j), 0, -1):
            left = rest - v * unit
            if left % (unit << 1):
                continue
            for tail in rec(j + 1, left, v):
                yield (v,) + tail

    found = [OmegaVector(w) for w in rec(0, d, n)]
    return tuple(sorted(found))


def descending_omegas(d: int, n: int) -> list[OmegaVector]:
    """Descending omega-vectors of weight ``d`` with entries at most ``n``,
    ascending in left order."""
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")
    return list(_descending_omegas(d, n))


def row_regular_partition(d: int, n: int) -> tuple[int, ...] | None:
    """The strictly decreasing (l_1 > ... > l_n >= 0) with
    d = sum(2^l_i - 1), or None.  The result keeps its trailing zero part."""
    if d < 0 or n < 1:
        raise ValueError("need d >= 0 and n >= 1")

    def rec(rest: int, slots: int, cap: int):
        if slots == 0:
            return () if rest == 0 else None
        # parts must be distinct and >= 0, so at least slots-1 ... 0 remain
        for lam in range(min(cap, (rest + 1).bit_length() - 1), slots - 2, -1):
            if lam < 0:
                break
            tail = rec(rest - ((1 << lam) - 1), slots - 1, lam - 1)
            if tail is not None:
                return (lam,) + tail
        return None

    return rec(d, n, (d + 1).bit_length())
