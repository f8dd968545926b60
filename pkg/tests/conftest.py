import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hitcalc.poly import Polynomial
from hitcalc.steenrod import monomials_of_degree

settings.register_profile("hitcalc", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("hitcalc")


@st.composite
def exponents(draw, n=None, max_exp=6):
    if n is None:
        n = draw(st.integers(1, 4))
    return tuple(draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n)))


@st.composite
def polynomials(draw, n=None, max_exp=4, max_terms=5):
    if n is None:
        n = draw(st.integers(1, 4))
    terms = draw(st.lists(exponents(n, max_exp), max_size=max_terms))
    return Polynomial(n, terms)


@st.composite
def homogeneous(draw, n, d, max_terms=4):
    mons = monomials_of_degree(n, d)
    picked = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=max_terms, unique=True))
    return Polynomial(n, picked)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    from hitcalc import cohit

    monkeypatch.setenv(cohit.CACHE_ENV, str(tmp_path))
    cohit.clear_cache()
    yield tmp_path
    cohit.clear_cache()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
