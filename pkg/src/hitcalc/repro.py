"""Reproduction checks: each function verifies one acceptance criterion and
returns (passed, detail). ``run_all`` times them against their budgets."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Callable

from . import cohit
from .blocks import (
    Block,
    OmegaVector,
    cmp_left,
    cmp_right,
    descending_omegas,
    is_semistandard,
    mu,
    omega_of_exponents,
)
from .poly import Polynomial
from .splice import straighten
from .steenrod import chi_sq, monomials_of_degree, sq
from .tableaux import enumerate_ssyt, hook_count, iter_partitions, semistandard_blocks, staircase

P43_GENERATORS = [
    (3, 1, 0),
    (3, 0, 1),
    (1, 3, 0),
    (1, 2, 1),
    (0, 3, 1),
    (0, 1, 3),
    (1, 1, 2),
    (1, 0, 3),
]

# blocks of the P^7(4) example, as exponent tuples
P74_BLOCKS = {
    "C": (1, 2, 2, 2),
    "E": (4, 1, 1, 1),
    "F": (2, 2, 2, 1),
    "G": (2, 2, 1, 2),
    "H": (2, 1, 2, 2),
}

RANDOM_INSTANCES = 200


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    @property
    def within_budget(self) -> bool:
        return self.seconds <= self.budget

    @property
    def ok(self) -> bool:
        return self.passed and self.within_budget

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        timing = f"{self.seconds:.2f}s/{self.budget:g}s"
        return f"[{status}] criterion {self.number:2d}: {self.title} ({timing}) {self.detail}"


def unique_degrees(nmax: int = 3, dmax: int = 16) -> list[tuple[int, int, OmegaVector]]:
    """(n, d, omega) for every degree with exactly one descending omega."""
    out = []
    for n in range(1, nmax + 1):
        for d in range(dmax + 1):
            ws = descending_omegas(d, n)
            if len(ws) == 1:
                out.append((n, d, ws[0]))
    return out


def check_steinberg(long_running: bool = False) -> tuple[bool, str]:
    expected = {2: 2, 3: 8, 4: 64}
    if long_running:
        expected[5] = 1024
    parts, ok = [], True
    for n, want in expected.items():
        d = 2**n - n - 1
        t0 = time.perf_counter()
        got = cohit.hit_space(n, d, use_cache=False).cohit_dim
        dt = time.perf_counter() - t0
        good = got == want and (n == 5 or dt < 1.0)
        ok &= good
        parts.append(f"Q^{d}({n})={got}{'' if good else f' want {want}'} in {dt:.2f}s")
    return ok, "; ".join(parts)


def check_p43_generators() -> tuple[bool, str]:
    hs = cohit.hit_space(3, 4)
    polys = [Polynomial.monomial(e) for e in P43_GENERATORS]
    none_hit = not any(cohit.is_hit(p) for p in polys)
    pairwise = all(not cohit.are_equivalent(p, q) for p, q in combinations(polys, 2))
    span_rank = hs.rank_with_columns(hs.index[e] for e in P43_GENERATORS) - hs.rank
    ok = none_hit and pairwise and span_rank == 8 == hs.cohit_dim
    return ok, f"none hit={none_hit}, pairwise inequivalent={pairwise}, class rank={span_rank}, dim Q^4(3)={hs.cohit_dim}"


def check_hook_formula() -> tuple[bool, str]:
    checked, bad = 0, []
    for size in range(0, 11):
        for shape in iter_partitions(size):
            for m in range(1, 6):
                checked += 1
                if len(enumerate_ssyt(shape, m)) != hook_count(shape, m):
                    bad.append((tuple(shape), m))
    stair = [hook_count(staircase(n), n) == 2 ** comb(n, 2) for n in range(1, 9)]
    ok = not bad and all(stair)
    return ok, f"{checked} (shape, m) pairs, mismatches={bad[:3]}, staircase n<=8 ok={all(stair)}"


def _blocks_with_omega(n: int, d: int, w: OmegaVector) -> list[Block]:
    return [Block(e) for e in monomials_of_degree(n, d) if omega_of_exponents(e) == w]


def check_straightening() -> tuple[bool, str]:
    total, bad = 0, []
    for n, d, w in unique_degrees():
        for b in _blocks_with_omega(n, d, w):
            total += 1
            out = straighten(b)
            shape_ok = all(is_semistandard(g) and g.omega() == w for g in out.blocks)
            if not shape_ok or not cohit.is_hit(Polynomial(n, [b.exponents]) + out):
                bad.append((n, d, str(b)))
    return not bad, f"{total} blocks in {len(unique_degrees())} degrees, failures={bad[:3]}"


def check_spanning_bound() -> tuple[bool, str]:
    bad, equal_at = [], []
    for n, d, _ in unique_degrees():
        dim, count = cohit.cohit_dim(n, d), len(semistandard_blocks(d, n))
        if dim > count:
            bad.append((n, d, dim, count))
        if d == 2**n - n - 1:
            equal_at.append((n, d, dim == count == 2 ** comb(n, 2)))
    ok = not bad and all(e for *_, e in equal_at) and len(equal_at) == 3
    return ok, f"violations={bad}, Steinberg equality={equal_at}"


def check_lower_blocks_hit() -> tuple[bool, str]:
    total, bad = 0, []
    for n, d, w in unique_degrees():
        for e in monomials_of_degree(n, d):
            v = omega_of_exponents(e)
            if cmp_left(v, w) < 0 or cmp_right(v, w) < 0:
                total += 1
                if not cohit.is_hit(Polynomial(n, [e])):
                    bad.append((n, d, e))
    return not bad, f"{total} lower blocks checked, not hit={bad[:3]}"


def check_p74() -> tuple[bool, str]:
    poly = {k: Polynomial.monomial(e) for k, e in P74_BLOCKS.items()}
    c_fgh = cohit.is_hit(poly["C"] + poly["F"] + poly["G"] + poly["H"])
    q13 = cohit.omega_quotient_dim(4, 7, (1, 3))
    target = OmegaVector((1, 3))
    lower = [e for e in monomials_of_degree(4, 7) if omega_of_exponents(e) < target]
    lower_omegas = sorted({tuple(omega_of_exponents(e)) for e in lower})
    survives = not cohit.in_hits_plus_span(poly["C"], lower)
    ok = c_fgh and q13 >= 1 and survives and lower_omegas == [(1, 1, 1)]
    return ok, (
        f"C+F+G+H hit={c_fgh}, dim Q^(1,3)(4)={q13}, "
        f"C survives modulo hits+span{lower_omegas}={survives}"
    )


def check_peterson() -> tuple[bool, str]:
    bad = []
    for n in range(1, 4):
        for d in range(21):
            if (cohit.cohit_dim(n, d) == 0) != (mu(d) > n):
                bad.append((n, d))
    return not bad, f"63 (n, d) pairs, mismatches={bad}"


def _random_poly(rng: random.Random, n: int, d: int, max_terms: int = 4) -> Polynomial:
    mons = monomials_of_degree(n, d)
    k = rng.randint(1, min(max_terms, len(mons)))
    return Polynomial(n, rng.sample(mons, k))


def _orders_lower(e: tuple, f: tuple) -> bool:
    a, b = omega_of_exponents(e), omega_of_exponents(f)
    return cmp_left(a, b) < 0 and cmp_right(a, b) < 0


def check_action_properties(seed: int = 2024, instances: int = RANDOM_INSTANCES) -> tuple[bool, str]:
    rng = random.Random(seed)
    fails: dict[str, int] = {}

    def record(name: str, good: bool) -> None:
        fails.setdefault(name, 0)
        if not good:
            fails[name] += 1

    for _ in range(instances):
        # Cartan
        n = rng.randint(1, 4)
        df = rng.randint(0, 6)
        dg = rng.randint(0, 12 - df)
        f, g = _random_poly(rng, n, df), _random_poly(rng, n, dg)
        k = rng.randint(0, df + dg + 1)
        rhs = Polynomial.zero(n)
        for i in range(k + 1):
            rhs = rhs + sq(i, f) * sq(k - i, g)
        record("cartan", sq(k, f * g) == rhs)

        # fractal
        n = rng.randint(1, 4)
        j = rng.choice((1, 2))
        p = _random_poly(rng, n, rng.randint(0, 12 >> j))
        pp = p ** (1 << j)
        s = rng.randint(0, p.homogeneous_degree + 1)
        r = rng.randint(0, pp.homogeneous_degree + 1)
        good = sq(s << j, pp) == sq(s, p) ** (1 << j)
        if r % (1 << j):
            good &= sq(r, pp).is_zero()
        record("fractal", good)

        # instability
        n = rng.randint(1, 4)
        p = _random_poly(rng, n, rng.randint(0, 6))
        deg = p.homogeneous_degree
        record("instability", sq(deg + rng.randint(1, 3), p).is_zero() and sq(deg, p) == p * p)

        # squares lower both orders
        n = rng.randint(1, 4)
        e = rng.choice(monomials_of_degree(n, rng.randint(1, 11)))
        k = rng.randint(1, 12 - sum(e)) if sum(e) < 12 else 1
        image = sq(k, Polynomial(n, [e]))
        record("order_lowering", all(_orders_lower(t, e) for t in image.exponent_set))

        # chi-trick with k = deg v
        n = rng.randint(1, 3)
        dv = rng.randint(0, 5)
        du = rng.randint(0, 10 - 2 * dv)
        u, v = _random_poly(rng, n, du), _random_poly(rng, n, dv)
        record("chi_trick", cohit.is_hit(u * sq(dv, v) + v * chi_sq(dv, u)))

        # square-free: chi(Sq^k) and Sq^k differ on square-free monomials only by
        # terms with an exponent >= 4
        n = rng.randint(1, 4)
        m = rng.randint(1, n)
        ys = rng.sample(range(n), m)
        y = Polynomial(n, [tuple(1 if i in ys else 0 for i in range(n))])
        k = rng.randint(0, 12 - m)
        diff = chi_sq(k, y) + sq(k, y)
        record("square_free_chi", all(max(t) >= 4 for t in diff.exponent_set))

    ok = all(v == 0 for v in fails.values())
    summary = ", ".join(f"{k}:{instances - v}/{instances}" for k, v in fails.items())
    return ok, summary


def series_chi(m: int, k: int) -> Polynomial:
    """Degree m+k part of prod_i (y_i + y_i^2 + y_i^4 + ...) in P(m)."""
    terms = []
    for choice in product(range(k.bit_length() + 1), repeat=m):
        if sum((1 << a) - 1 for a in choice) == k:
            terms.append(tuple(1 << a for a in choice))
    return Polynomial(m, terms)


def check_chi_series() -> tuple[bool, str]:
    bad = []
    for m in range(1, 6):
        y = Polynomial(m, [(1,) * m])
        for k in range(9):
            if chi_sq(k, y) != series_chi(m, k):
                bad.append((m, k))
    return not bad, f"45 (m, k) pairs, mismatches={bad}"


@dataclass
class Criterion:
    number: int
    title: str
    budget: float
    check: Callable[[], tuple[bool, str]]


CRITERIA = [
    Criterion(1, "Steinberg degrees", 3.0, check_steinberg),
    Criterion(2, "degree-4 generators of P(3)", 1.0, check_p43_generators),
    Criterion(3, "hook formula vs enumeration", 10.0, check_hook_formula),
    Criterion(4, "straightening", 60.0, check_straightening),
    Criterion(5, "spanning bound", 60.0, check_spanning_bound),
    Criterion(6, "lower blocks are hit", 60.0, check_lower_blocks_hit),
    Criterion(7, "P^7(4) example", 5.0, check_p74),
    Criterion(8, "Peterson vanishing", 60.0, check_peterson),
    Criterion(9, "Steenrod action properties", 30.0, check_action_properties),
    Criterion(10, "chi series consistency", 5.0, check_chi_series),
]


def run_criterion(c: Criterion, long_running: bool = False) -> CriterionResult:
    t0 = time.perf_counter()
    if c.number == 1:
        passed, detail = check_steinberg(long_running)
    else:
        passed, detail = c.check()
    dt = time.perf_counter() - t0
    budget = c.budget if not (long_running and c.number == 1) else float("inf")
    return CriterionResult(c.number, c.title, passed, detail, dt, budget)


def run_all(long_running: bool = False) -> list[CriterionResult]:
    return [run_criterion(c, long_running) for c in CRITERIA]
