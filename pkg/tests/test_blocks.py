from itertools import product

import pytest
from hypothesis import given, strategies as st

from hitcalc.blocks import (
    AmbiguousOmegaError,
    Block,
    BlockParseError,
    OmegaVector,
    alpha,
    alpha_count,
    block_of,
    cmp_left,
    cmp_right,
    cp,
    cp_inverse,
    descending_omegas,
    ferrers_block,
    is_descending,
    is_semistandard,
    monomial_of,
    mu,
    omega,
    omega_of_exponents,
    parse_omega,
    row_regular_partition,
)
from hitcalc.poly import Monomial
from hitcalc.steenrod import monomials_of_degree
from hitcalc.tableaux import Partition, Tableau, iter_partitions

from conftest import exponents


def mu_brute(d):
    """Fewest numbers of the form 2^j - 1 (j >= 1) summing to d."""
    spikes = [2**j - 1 for j in range(1, d.bit_length() + 2) if 2**j - 1 <= d]
    best = {0: 0}
    for total in range(1, d + 1):
        best[total] = min((best[total - s] + 1 for s in spikes if s <= total), default=None) if spikes else None
    return best[d]


@pytest.mark.parametrize("d, expected", [(17, 3), (0, 0), (6, 2), (7, 1), (12, 4), (1, 1)])
def test_mu_examples(d, expected):
    assert mu(d) == expected


@pytest.mark.parametrize("d", range(0, 80))
def test_mu_matches_brute_force(d):
    assert mu(d) == mu_brute(d)


@pytest.mark.parametrize("d, expected", [(17, 2), (0, 0), (7, 3), (8, 1)])
def test_alpha_count(d, expected):
    assert alpha_count(d) == expected


def test_block_of_x1cubed_x2():
    b = block_of(Monomial((3, 1, 0)))
    assert b.rows == ((1, 1), (1, 0), (0, 0))
    assert str(b) == "11/1/0"
    assert b.omega() == (2, 1)
    assert b.alpha() == (2, 1, 0)


def test_zero_block_has_no_columns():
    b = Block((0, 0))
    assert b.columns == 0
    assert b.omega() == ()
    assert b.rows == ((), ())


def test_omega_of_C():
    assert omega(Block((1, 2, 2, 2))) == (1, 3)
    assert alpha(Block((1, 2, 2, 2))) == (1, 1, 1, 1)


def test_block_entries_are_one_based():
    b = Block((2, 1))
    assert (b.entry(1, 1), b.entry(1, 2), b.entry(2, 1), b.entry(2, 5)) == (0, 1, 1, 0)
    with pytest.raises(IndexError):
        b.entry(0, 1)


def test_parse_pads_missing_rows():
    b = Block.parse("01/1", 4)
    assert b.exponents == (2, 1, 0, 0)
    assert Block.parse("0110/0") == Block((6, 0))


@pytest.mark.parametrize("text", ["", "12/1", "1//1", "a"])
def test_parse_rejects(text):
    with pytest.raises(BlockParseError):
        Block.parse(text, 3)


def test_parse_rejects_too_many_rows():
    with pytest.raises(BlockParseError):
        Block.parse("1/1/1", 2)


def test_omega_vector_normalizes_trailing_zeros():
    assert OmegaVector((1, 1, 0)) == OmegaVector((1, 1))
    assert parse_omega("2, 1,0") == (2, 1)
    assert OmegaVector((1, 3)).weight == 7


def test_cp_examples():
    assert cp(Block((3, 1, 0))).rows == ((1, 1), (2,))
    assert cp(Block((1, 3, 0))).rows == ((1, 2), (2,))


def test_cp_inverse_validates():
    with pytest.raises(ValueError):
        cp_inverse(Tableau([[2], [1]]), 3)
    with pytest.raises(ValueError):
        cp_inverse(Tableau([[4]]), 3)


@pytest.mark.parametrize(
    "exps, expected",
    [((3, 1, 0), True), ((2, 1, 1), False), ((1, 2, 1), True), ((1, 1, 1), True), ((0, 1), True), ((2, 3), False)],
)
def test_is_semistandard(exps, expected):
    assert is_semistandard(Block(exps)) is expected


def test_order_examples():
    assert cmp_left((2, 1), (1, 3)) == 1
    assert cmp_right((2, 1), (1, 3)) == 1
    assert cmp_left((1, 1), (1, 1, 0)) == 0
    assert cmp_right((1, 1), (1, 1, 0)) == 0


def test_ferrers_examples():
    assert ferrers_block((2, 1), 3) == Block((3, 1, 0))
    assert ferrers_block((3, 2, 1), 4) == Block((7, 3, 1, 0))
    assert ferrers_block((), 2) == Block((0, 0))
    with pytest.raises(ValueError):
        ferrers_block((1, 1, 1), 2)


def test_descending_omegas_examples():
    assert descending_omegas(4, 3) == [(2, 1)]
    assert descending_omegas(7, 4) == [(1, 1, 1), (3, 2)]
    assert descending_omegas(0, 5) == [()]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("d", range(0, 20))
def test_descending_omegas_match_exhaustive(d, n):
    seen = {omega_of_exponents(e) for e in monomials_of_degree(n, d)}
    expected = sorted(w for w in seen if is_descending(w))
    assert descending_omegas(d, n) == expected


def test_row_regular_examples():
    assert row_regular_partition(4, 3) == (2, 1, 0)
    assert row_regular_partition(11, 4) == (3, 2, 1, 0)
    assert row_regular_partition(7, 4) is None


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("d", range(0, 30))
def test_row_regular_gives_unique_omega(d, n):
    lam = row_regular_partition(d, n)
    if lam is None:
        return
    assert sum(2**p - 1 for p in lam) == d
    assert descending_omegas(d, n) == [Partition(lam).conjugate()]


@given(exponents(max_exp=12))
def test_roundtrips(exps):
    b = Block(exps)
    assert monomial_of(block_of(Monomial(exps))) == Monomial(exps)
    assert cp_inverse(cp(b), b.n) == b
    assert Block.parse(str(b), b.n) == b


@given(exponents(max_exp=12))
def test_weight_of_omega_is_degree(exps):
    b = Block(exps)
    assert b.omega().weight == b.degree
    assert all(v <= b.n for v in b.omega())


@given(exponents(max_exp=12))
def test_semistandard_block_iff_semistandard_tableau(exps):
    b = Block(exps)
    if is_semistandard(b):
        assert b.omega().is_descending
    if b.omega().is_descending:
        assert is_semistandard(b) == cp(b).is_semistandard()
        assert cp(b).shape == Partition(b.omega()).conjugate()


@pytest.mark.parametrize("lam", [p for s in range(8) for p in iter_partitions(s) if len(p) <= 4])
def test_ferrers_omega_is_conjugate(lam):
    assert ferrers_block(lam, 4).omega() == lam.conjugate()


omegas = st.lists(st.integers(0, 4), max_size=5)


@given(omegas, omegas, omegas)
def test_orders_are_total_and_transitive(a, b, c):
    for cmp in (cmp_left, cmp_right):
        assert cmp(a, b) == -cmp(b, a)
        assert (cmp(a, b) == 0) == (OmegaVector(a) == OmegaVector(b))
        if cmp(a, b) <= 0 and cmp(b, c) <= 0:
            assert cmp(a, c) <= 0
        assert cmp(list(a) + [0, 0], b) == cmp(a, b)


@given(omegas, omegas)
def test_left_order_matches_tuple_order(a, b):
    x, y = OmegaVector(a), OmegaVector(b)
    assert cmp_left(a, b) == (x > y) - (x < y)


def test_ambiguous_omega_error_carries_candidates():
    err = AmbiguousOmegaError(7, 4, descending_omegas(7, 4))
    assert err.omegas == [(1, 1, 1), (3, 2)]
