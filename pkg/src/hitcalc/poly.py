"""Monomials and polynomials over F_2 in a fixed number of variables.

A monomial is stored densely as its exponent tuple (length ``n``, zeros kept).
A polynomial is a frozen set of exponent tuples; since coefficients live in
F_2, repeated terms cancel in pairs.

Text grammar (used by the CLI)::

    poly   := '0' | term ('+' term)*
    term   := factor ('*' factor)*
    factor := 'x' <index> ['^' <exponent>] | '1'
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Monomial",
    "Polynomial",
    "PolyParseError",
    "add",
    "mul",
    "parse_poly",
    "render",
]


class PolyParseError(ValueError):
    """Raised for malformed polynomial text; ``pos`` is the 0-based offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class Monomial:
    """x_1^{d_1} ... x_n^{d_n}, immutable."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int) -> "Monomial":
        """x_i with 1-based ``i``."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        exps = [0] * n
        exps[i - 1] = 1
        return cls(exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __lt__(self, other: "Monomial") -> bool:
        return self.exponents < other.exponents

    def __hash__(self) -> int:
        return hash(("Monomial", self.exponents))

    def __repr__(self) -> str:
        return f"Monomial({self.exponents})"

    def __str__(self) -> str:
        return _render_term(self.exponents)


def _render_term(exps: Sequence[int]) -> str:
    factors = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) if factors else "1"


def _reduce_mod2(terms: Iterable[tuple]) -> frozenset:
    odd: set = set()
    for t in terms:
        if t in odd:
            odd.remove(t)
        else:
            odd.add(t)
    return frozenset(odd)


class Polynomial:
    """Finite F_2-linear combination of monomials in ``n`` variables."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Iterable = ()):
        if n < 1:
            raise ValueError("n must be positive")
        exps = []
        for t in terms:
            e = t.exponents if isinstance(t, Monomial) else tuple(t)
            if len(e) != n:
                raise ValueError(f"term {e} does not have {n} exponents")
            exps.append(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", _reduce_mod2(exps))

    @classmethod
    def _from_reduced(cls, n: int, terms: frozenset) -> "Polynomial":
        # trusted constructor: terms already reduced mod 2 and length-checked
        p = object.__new__(cls)
        object.__setattr__(p, "n", n)
        object.__setattr__(p, "_terms", terms)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls(n, [(0,) * n])

    @classmethod
    def monomial(cls, exponents: Sequence[int]) -> "Polynomial":
        exps = tuple(exponents)
        return cls(len(exps), [exps])

    @classmethod
    def variable(cls, i: int, n: int) -> "Polynomial":
        return cls(n, [Monomial.variable(i, n)])

    @property
    def exponent_set(self) -> frozenset:
        """The raw set of exponent tuples."""
        return self._terms

    @property
    def terms(self) -> list[Monomial]:
        """Terms in canonical (lexicographically descending) order."""
        return [Monomial(e) for e in sorted(self._terms, reverse=True)]

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    @property
    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms, or None if mixed or zero."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def _check(self, other: "Polynomial") -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial._from_reduced(self.n, self._terms ^ other._terms)

    __sub__ = __add__

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out: set = set()
        for a in self._terms:
            for b in other._terms:
                c = tuple(x + y for x, y in zip(a, b))
                if c in out:
                    out.remove(c)
                else:
                    out.add(c)
        return Polynomial._from_reduced(self.n, frozenset(out))

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, m) -> bool:
        e = m.exponents if isinstance(m, Monomial) else tuple(m)
        return e in self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.n == other.n
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.n, self._terms))

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> list[list[int]]:
        """JSON form: array of exponent arrays in canonical order."""
        return [list(e) for e in sorted(self._terms, reverse=True)]

    @classmethod
    def from_json(cls, data: list, n: int) -> "Polynomial":
        return cls(n, [tuple(e) for e in data])


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def render(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    return "+".join(_render_term(e) for e in sorted(p.exponent_set, reverse=True))


_TOKEN = re.compile(r"\s*(?:(x)(\d+)(?:\s*\^\s*(\d+))?|(1)(?!\d)|(\+)|(\*)|(0)(?!\d))")


def parse_poly(text: str, n: int) -> Polynomial:
    """Parse ``text`` into a polynomial in ``n`` variables.

    >>> parse_poly("x1^3*x2", 3).terms
    [Monomial((3, 1, 0))]
    """
    if n < 1:
        raise ValueError("n must be positive")
    pos = 0
    end = len(text.rstrip())
    terms: list[tuple] = []
    exps = [0] * n
    expect_factor = True
    saw_any = False
    zero_literal = False
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(0) + (len(m.group(0)) - len(m.group(0).lstrip()))
        var, idx, exp, one, plus, star, zero = m.groups()
        if var or one or zero:
            if not expect_factor:
                raise PolyParseError("expected '+' or '*'", start)
            if zero:
                if saw_any or zero_literal:
                    raise PolyParseError("'0' is only valid as the whole polynomial", start)
                zero_literal = True
            elif var:
                i = int(idx)
                if not 1 <= i <= n:
                    raise PolyParseError(f"variable index {i} out of range 1..{n}", start)
                exps[i - 1] += int(exp) if exp is not None else 1
            saw_any = True
            expect_factor = False
        else:
            if expect_factor or zero_literal:
                raise PolyParseError("expected a factor", start)
            if plus:
                terms.append(tuple(exps))
                exps = [0] * n
            expect_factor = True
        pos = m.end(0)
    if not saw_any:
        raise PolyParseError("empty polynomial", pos)
    if expect_factor:
        raise PolyParseError("expression ends with an operator", end)
    if zero_literal:
        return Polynomial.zero(n)
    terms.append(tuple(exps))
    return Polynomial(n, terms)
