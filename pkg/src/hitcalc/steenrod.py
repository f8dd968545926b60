"""Steenrod squares and their conjugates acting on F_2[x_1, ..., x_n].

On one variable Sq^k(x^d) = C(d, k) x^(d+k), and C(d, k) is odd exactly when
the bits of k are a subset of the bits of d (Lucas).  The Cartan formula then
makes Sq^k of a monomial the sum over all ways of writing k = k_1 + ... + k_n
with each k_i a bit-submask of d_i.  Distinct splittings give distinct
monomials, so no cancellation happens inside a single monomial.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .poly import Monomial, Polynomial

__all__ = [
    "sq",
    "sq_monomial",
    "chi_sq",
    "chi_expansion",
    "chi_of_word_sum",
    "apply_word",
    "apply_word_sum",
    "total_sq",
    "verify_relation",
    "monomials_of_degree",
]


@lru_cache(maxsize=1 << 18)
def sq_monomial(k: int, exps: tuple) -> tuple:
    """Exponent tuples of the terms of Sq^k(x^exps)."""
    if k == 0:
        return (exps,)
    if k > sum(exps):
        return ()
    n = len(exps)
    # suffix capacity: the largest amount variables i.. can still absorb
    cap = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        cap[i] = cap[i + 1] + exps[i]
    out: list = []
    cur = list(exps)

    def rec(i: int, rest: int) -> None:
        if rest == 0:
            out.append(tuple(cur))
            return
        if i == n or rest > cap[i]:
            return
        d = exps[i]
        s = d & ((1 << rest.bit_length()) - 1) if rest < d else d
        # walk all submasks of d that do not exceed rest
        while True:
            if s <= rest:
                cur[i] = d + s
                rec(i + 1, rest - s)
            if s == 0:
                break
            s = (s - 1) & d
        cur[i] = d

    rec(0, k)
    return tuple(out)


def _toggle(acc: set, items: Iterable) -> None:
    for t in items:
        if t in acc:
            acc.remove(t)
        else:
            acc.add(t)


def sq(k: int, p: Polynomial) -> Polynomial:
    """Sq^k(p)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return p
    acc: set = set()
    for e in p.exponent_set:
        _toggle(acc, sq_monomial(k, e))
    return Polynomial._from_reduced(p.n, frozenset(acc))


def total_sq(p: Polynomial, max_degree: int) -> list[Polynomial]:
    """[Sq^0 p, Sq^1 p, ..., Sq^(max_degree - deg p) p]."""
    degs = p.degrees()
    base = max(degs) if degs else 0
    if max_degree < base:
        raise ValueError(f"max_degree {max_degree} below degree {base}")
    return [sq(k, p) for k in range(max_degree - base + 1)]


def apply_word(word: Sequence[int], p: Polynomial) -> Polynomial:
    """Apply the composite Sq^{w_1} Sq^{w_2} ... Sq^{w_r}; the last acts first."""
    for k in reversed(word):
        p = sq(k, p)
        if p.is_zero():
            break
    return p


def apply_word_sum(words: Iterable[Sequence[int]], p: Polynomial) -> Polynomial:
    out = Polynomial.zero(p.n)
    for w in words:
        out = out + apply_word(w, p)
    return out


_CHI_LOCK = threading.Lock()
_CHI_WORDS: dict[int, frozenset] = {0: frozenset({()})}


def chi_expansion(k: int) -> frozenset:
    """chi(Sq^k) as an F_2-sum of composition words, from
    chi(Sq^k) = sum_{i=1..k} Sq^i chi(Sq^{k-i}).

    Words are tuples of square indices with Sq^0 factors dropped; the sum is
    reduced mod 2 but not rewritten by Adem relations, so it grows like
    2^(k-1) in the worst case.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    words = _CHI_WORDS.get(k)
    if words is not None:
        return words
    for j in range(1, k + 1):
        if j in _CHI_WORDS:
            continue
        acc: set = set()
        for i in range(1, j + 1):
            _toggle(acc, ((i,) + w for w in _CHI_WORDS[j - i]))
        # concurrent fills compute the same value; first writer wins
        with _CHI_LOCK:
            _CHI_WORDS.setdefault(j, frozenset(acc))
    return _CHI_WORDS[k]


def chi_sq(k: int, p: Polynomial) -> Polynomial:
    """chi(Sq^k)(p) via the conjugation recursion evaluated on ``p``.

    chi_j(p) = sum_{i=1..j} Sq^i(chi_{j-i}(p)); this touches O(k^2) squares
    instead of expanding every word of ``chi_expansion(k)``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    vals = [p]
    for j in range(1, k + 1):
        acc = Polynomial.zero(p.n)
        for i in range(1, j + 1):
            prev = vals[j - i]
            if not prev.is_zero():
                acc = acc + sq(i, prev)
        vals.append(acc)
    return vals[k]


def chi_of_word_sum(words: Iterable[Sequence[int]]) -> frozenset:
    """chi applied to a sum of words: chi is an anti-automorphism, so each
    word maps to the reversed product of the conjugates of its letters."""
    acc: set = set()
    for w in words:
        terms = {()}
        for letter in reversed(w):
            nxt: set = set()
            for prefix in terms:
                _toggle(nxt, (prefix + c for c in chi_expansion(letter)))
            terms = nxt
        _toggle(acc, terms)
    return frozenset(acc)


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, d: int) -> tuple:
    """All exponent tuples of degree ``d`` in ``n`` variables, lexicographically
    descending."""
    if n == 1:
        return ((d,),)
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


def verify_relation(
    lhs: Sequence[int],
    rhs: Sequence[Sequence[int]],
    n: int,
    dmax: int,
) -> bool:
    """Check a relation between composites of squares through the action.

    ``lhs`` is one word and ``rhs`` a list of words (their F_2 sum); words
    read left to right as written, e.g. ``[1, 2]`` is Sq^1 Sq^2. The check
    runs on every monomial of P^d(n) for 0 <= d <= dmax.
    """
    grades = {sum(lhs)} | {sum(w) for w in rhs}
    if len(grades) > 1:
        raise ValueError(f"relation is not homogeneous: grades {sorted(grades)}")
    for d in range(dmax + 1):
        for e in monomials_of_degree(n, d):
            p = Polynomial(n, [e])
            if apply_word(lhs, p) != apply_word_sum(rhs, p):
                return False
    return True


def sq_by_cartan_expansion(k: int, m: Monomial) -> Polynomial:
    """Reference evaluation: write the monomial as a product of single
    variables and apply the Cartan formula factor by factor.

    Exponential in the degree; used only to cross-check :func:`sq_monomial`.
    """
    n = m.n
    factors = [i for i, e in enumerate(m.exponents) for _ in range(e)]
    acc: set = set()
    # each factor x contributes Sq^0 x = x or Sq^1 x = x^2
    for choice in product((0, 1), repeat=len(factors)):
        if sum(choice) != k:
            continue
        exps = [0] * n
        for var, c in zip(factors, choice):
            exps[var] += 1 + c
        _toggle(acc, [tuple(exps)])
    return Polynomial(n, acc)
