import pytest
from hypothesis import given, strategies as st

from hitcalc.blocks import Block, cp_inverse, descending_omegas, ferrers_block, is_semistandard, omega_of_exponents
from hitcalc.cohit import dim_p, is_hit
from hitcalc.poly import Polynomial
from hitcalc.splice import (
    BlockSum,
    NonDescendingError,
    SpliceError,
    _level_measure,
    first_violation,
    k_splice,
    straighten,
)
from hitcalc.steenrod import monomials_of_degree
from hitcalc.tableaux import Partition, enumerate_ssyt

SEMISTANDARD_21 = {"11/1/0", "11/0/1", "1/11/0", "1/01/1", "0/11/1", "0/1/11", "1/1/01", "1/0/11"}


def rows(*texts):
    return Block.parse("/".join(texts))


def unique_degrees(limit=2000):
    for n in range(1, 5):
        for d in range(0, 25):
            ws = descending_omegas(d, n)
            if len(ws) == 1 and dim_p(n, d) <= limit:
                yield n, d, ws[0]


def test_k_splice_three_choices():
    b = rows("01", "1", "01", "1", "1")
    out = k_splice(b, 2, 2, {1, 3})
    assert len(out.blocks) == 3
    expected = set()
    for T in [(2, 4), (2, 5), (4, 5)]:
        e = [1, 1, 1, 1, 1]
        for i in T:
            e[i - 1] = 2
        expected.add(tuple(e))
    assert out.exponent_set == expected


def test_k_splice_without_partner_is_zero():
    assert k_splice(rows("01", "11"), 1, 2, {1}).is_zero()


def test_k_splice_single():
    out = k_splice(Block((2, 1, 1)), 1, 2, {1})
    assert out.exponent_set == {(1, 2, 1), (1, 1, 2)}


@pytest.mark.parametrize(
    "args",
    [(1, 1, {1}), (2, 2, {1}), (1, 2, {2}), (1, 2, {4})],
)
def test_k_splice_rejects(args):
    with pytest.raises(SpliceError):
        k_splice(Block((2, 1, 1)), *args)


@given(st.lists(st.integers(0, 63), min_size=2, max_size=5), st.data())
def test_k_splice_preserves_alpha_and_omega(exps, data):
    b = Block(exps)
    col = data.draw(st.integers(2, 6))
    hi, lo = 1 << (col - 1), 1 << (col - 2)
    cand = [i + 1 for i, e in enumerate(exps) if e & hi and not e & lo]
    if not cand:
        return
    S = data.draw(st.sets(st.sampled_from(cand), min_size=1))
    for g in k_splice(b, len(S), col, S).blocks:
        assert g.alpha() == b.alpha()
        assert g.omega() == b.omega()


def test_first_violation_examples():
    b = Block((2, 1, 1))
    assert first_violation(b, 1) == 1
    assert first_violation(b, 2) is None
    f = ferrers_block((2, 1), 3)
    assert all(first_violation(f, r) is None for r in range(1, 4))


def test_straighten_fixed_point():
    b = Block((3, 1, 0))
    assert straighten(b) == BlockSum.of([b], 3)


def test_straighten_single_splice():
    assert straighten(Block((2, 1, 1))).exponent_set == {(1, 2, 1), (1, 1, 2)}


def test_straighten_rejects_non_descending():
    with pytest.raises(NonDescendingError) as info:
        straighten(Block.parse("01/01", 3))
    assert info.value.column == 1


def test_straighten_degree_four_lands_in_semistandard_set():
    for e in monomials_of_degree(3, 4):
        b = Block(e)
        if b.omega() == (2, 1):
            assert {str(g) for g in straighten(b).blocks} <= SEMISTANDARD_21


def test_single_splice_can_break_a_deeper_level():
    # splicing x1^2 x2^5 x3 at level 1 gives x1 x2^5 x3^2, whose top two rows
    # have omega (2, 0, 1); the straightening loop must revisit level 2
    g = Block((2, 5, 1))
    assert first_violation(g, 1) == 1 and first_violation(g, 2) is None
    out = k_splice(g, 1, 2, {1})
    assert (1, 5, 2) in out.exponent_set
    assert omega_of_exponents((1, 5)) == (2, 0, 1)
    assert first_violation(Block((1, 5, 2)), 2) == 2


def test_level_measure_increases_under_splices():
    # each splice step at the deepest violating level raises the measure
    g = Block((2, 5, 1))
    before = _level_measure(g.exponents)
    for h in k_splice(g, 1, 2, {1}).exponent_set:
        assert _level_measure(h) > before


@pytest.mark.parametrize("n, d, w", list(unique_degrees()))
def test_straighten_output_is_semistandard_and_equivalent(n, d, w):
    allowed = {cp_inverse(t, n) for t in enumerate_ssyt(Partition(w).conjugate(), n)}
    for e in monomials_of_degree(n, d):
        b = Block(e)
        if b.omega() != w:
            continue
        out = straighten(b, check=True)
        assert set(out.blocks) <= allowed
        assert all(is_semistandard(g) and g.omega() == w for g in out.blocks)
        assert is_hit(Polynomial(n, [e]) + out)


@given(st.lists(st.integers(0, 31), min_size=1, max_size=4))
def test_straighten_any_descending_block(exps):
    b = Block(exps)
    if not b.omega().is_descending:
        with pytest.raises(NonDescendingError):
            straighten(b)
        return
    out = straighten(b, check=True)
    assert all(is_semistandard(g) and g.omega() == b.omega() for g in out.blocks)
    if is_semistandard(b):
        assert out.blocks == [b]


def test_block_sum_is_a_polynomial():
    s = BlockSum.of([Block((1, 2)), Block((2, 1)), Block((1, 2))], 2)
    assert s.exponent_set == {(2, 1)}
    assert isinstance(s + s, BlockSum) and (s + s).is_zero()
