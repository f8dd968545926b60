import pytest
from hypothesis import given, strategies as st

from hitcalc.poly import Monomial, Polynomial, PolyParseError, add, mul, parse_poly, render

from conftest import exponents, polynomials


def P(n, *terms):
    return Polynomial(n, terms)


def test_monomial_keeps_zero_exponents():
    m = Monomial((0, 3, 0))
    assert m.exponents == (0, 3, 0)
    assert m.degree == 3
    assert m.n == 3


def test_monomial_rejects_negative():
    with pytest.raises(ValueError):
        Monomial((1, -1))


def test_add_self_is_zero():
    f = P(2, (2, 1), (1, 2))
    assert (f + f).is_zero()


def test_add_disjoint_terms():
    assert add(P(2, (2, 1)), P(2, (1, 2))) == P(2, (2, 1), (1, 2))


def test_add_cancels():
    assert add(P(2, (2, 1), (1, 2)), P(2, (1, 2))) == P(2, (2, 1))


def test_duplicate_terms_cancel_on_construction():
    assert P(2, (1, 1), (1, 1)).is_zero()
    assert P(2, (1, 1), (1, 1), (1, 1)) == P(2, (1, 1))


def test_mul_examples():
    x1, x2 = Polynomial.variable(1, 2), Polynomial.variable(2, 2)
    assert mul(P(2, (1, 1)), x1) == P(2, (2, 1))
    assert mul(x1 + x2, x1 + x2) == P(2, (2, 0), (0, 2))
    p = P(2, (3, 0), (1, 1))
    assert p * Polynomial.one(2) == p


def test_mul_by_zero():
    assert (P(3, (1, 2, 0)) * Polynomial.zero(3)).is_zero()


def test_mixing_variable_counts_fails():
    with pytest.raises(ValueError):
        P(2, (1, 0)) + P(3, (1, 0, 0))


@pytest.mark.parametrize(
    "text, n, expected",
    [
        ("x1^3*x2", 3, [(3, 1, 0)]),
        ("x1*x2^2+x1^2*x2", 2, [(1, 2), (2, 1)]),
        ("x1 * x2 + x2*x1", 2, []),
        ("1", 2, [(0, 0)]),
        ("0", 2, []),
        ("x2^0", 2, [(0, 0)]),
    ],
)
def test_parse(text, n, expected):
    assert parse_poly(text, n) == Polynomial(n, expected)


@pytest.mark.parametrize("text", ["x9", "x0", "x1^", "x1++x2", "y1", "x1*", ""])
def test_parse_errors(text):
    with pytest.raises(PolyParseError):
        parse_poly(text, 3)


def test_parse_error_reports_position():
    with pytest.raises(PolyParseError) as info:
        parse_poly("x1+x9", 3)
    assert info.value.pos == 3


def test_render_canonical_order():
    assert render(P(2, (1, 2), (2, 1))) == "x1^2*x2+x1*x2^2"
    assert render(Polynomial.zero(3)) == "0"
    assert render(Polynomial.one(3)) == "1"


def test_degrees():
    p = P(3, (1, 0, 0), (1, 1, 1))
    assert p.degrees() == {1, 3}
    assert p.homogeneous_degree is None
    assert P(3, (2, 1, 0)).homogeneous_degree == 3


@given(polynomials(), polynomials(), polynomials())
def test_add_laws(p, q, r):
    if not (p.n == q.n == r.n):
        return
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert (p + p).is_zero()


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(*(polynomials(n, max_exp=3, max_terms=3) for _ in range(3)))))
def test_ring_laws(triple):
    p, q, r = triple
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polynomials())
def test_render_parse_roundtrip(p):
    assert parse_poly(render(p), p.n) == p


@given(polynomials())
def test_json_roundtrip(p):
    assert Polynomial.from_json(p.to_json(), p.n) == p


@given(exponents(), exponents())
def test_monomial_product_adds_exponents(a, b):
    if len(a) != len(b):
        return
    prod = Monomial(a) * Monomial(b)
    assert prod.exponents == tuple(x + y for x, y in zip(a, b))
    assert prod.degree == sum(a) + sum(b)
