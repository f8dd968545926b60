import numpy as np
import pytest
from hypothesis import given, strategies as st

from hitcalc import gf2
from hitcalc._gf2_py import int_to_row, row_to_int
from hitcalc.gf2 import F2Matrix, backends, words_for

BACKENDS = backends()


def dense_rank(a):
    """Plain row reduction over F_2 on a 0/1 matrix."""
    a = np.array(a, dtype=np.uint8) % 2
    rank, (rows, cols) = 0, a.shape
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r, c]), None)
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        for r in range(rows):
            if r != rank and a[r, c]:
                a[r] ^= a[rank]
        rank += 1
    return rank


matrices = st.integers(1, 150).flatmap(
    lambda cols: st.lists(st.lists(st.integers(0, 1), min_size=cols, max_size=cols), max_size=40)
    .map(lambda rows: np.array(rows, dtype=np.uint8).reshape(len(rows), cols))
)


def test_compiled_backend_is_available():
    assert "python" in BACKENDS
    assert "cython" in BACKENDS, "extension not built; run pip install -e . --no-build-isolation"


def test_backend_selection():
    assert gf2.BACKEND in BACKENDS
    assert gf2.EchelonBuilder is BACKENDS[gf2.BACKEND]


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_builder_basics(name):
    b = BACKENDS[name](130)
    assert b.rank == 0
    assert b.add_sparse([[0, 129], [129], [0]]) == 2
    assert b.rank == 2
    assert list(b.pivots()) == [0, 129]
    assert b.add_sparse([[5, 64], [5, 64]]) == 1
    red = b.reduce_dense(F2Matrix.from_sparse([[0, 5, 64], [1]], 130).bits)
    assert not red[0].any() and red[1].any()
    c = b.copy()
    c.add_sparse([[7]])
    assert (b.rank, c.rank) == (3, 4)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_builder_ignores_zero_rows(name):
    b = BACKENDS[name](10)
    assert b.add_sparse([[], [3, 3]]) == 0
    assert b.rank == 0
    assert b.basis().size == 0


@given(matrices)
def test_rank_matches_reference(a):
    assert F2Matrix.from_dense(a).rank == dense_rank(a)


@given(matrices)
def test_backends_agree(a):
    m = F2Matrix.from_dense(a)
    results = []
    for cls in BACKENDS.values():
        b = cls(m.cols)
        if m.rows:
            b.add_dense(m.bits)
        results.append((b.rank, tuple(b.pivots()), b.basis().tobytes()))
    assert all(r == results[0] for r in results)


@given(matrices)
def test_echelon_form(a):
    m = F2Matrix.from_dense(a)
    e = m.echelon()
    assert e.is_echelon()
    assert e.rank == e.rows <= min(m.rows, m.cols)
    assert list(e.pivots) == sorted(set(e.pivots))
    # same row space: every original row reduces to zero
    if m.rows:
        assert e.contains(m.bits).all()
        assert e.stack(m).rank == e.rank


@given(matrices)
def test_dense_roundtrip(a):
    assert np.array_equal(F2Matrix.from_dense(a).to_dense(), a)


@given(st.integers(0, 2**200 - 1))
def test_int_row_roundtrip(v):
    w = words_for(200)
    assert row_to_int(int_to_row(v, w)) == v


def test_wrong_width_rejected():
    with pytest.raises(ValueError):
        F2Matrix(np.zeros((1, 3), dtype=np.uint64), 64)


def test_row_support():
    m = F2Matrix.from_sparse([[0, 63, 64, 99]], 100)
    assert m.row_support(0) == [0, 63, 64, 99]
