from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ifsemigroups import IFSubset, Semigroup, library_entry, validate_ifs


@pytest.fixture
def worked_subject() -> IFSubset:
    # the worked three-point example: mu = (.3, .1, .5), nu = (.4, .25, .3)
    return validate_ifs(3, ["0.3", "0.1", "0.5"], ["0.4", "0.25", "0.3"])


@pytest.fixture
def leftzero2() -> Semigroup:
    return library_entry("leftzero2").semigroup


@pytest.fixture
def mod2() -> Semigroup:
    return library_entry("cyclic2").semigroup


@pytest.fixture
def null2() -> Semigroup:
    return library_entry("null2").semigroup


@pytest.fixture
def semilattice2() -> Semigroup:
    return library_entry("semilattice2").semigroup


@pytest.fixture
def monogenic2() -> Semigroup:
    return library_entry("monogenic2").semigroup


grades = st.fractions(min_value=0, max_value=1, max_denominator=12)


@st.composite
def subjects(draw, order: int | None = None, nonempty: bool = True):
    """Exact-rational subjects; nu is scaled into [0, 1 - mu] pointwise."""
    n = order if order is not None else draw(st.integers(min_value=1, max_value=4))
    mu = []
    nu = []
    for _ in range(n):
        m = draw(grades)
        mu.append(m)
        nu.append(draw(grades) * (1 - m))
    if nonempty and not any(mu):
        bump = draw(st.integers(min_value=0, max_value=n - 1))
        mu[bump] = draw(st.fractions(min_value=Fraction(1, 12), max_value=1,
                                     max_denominator=12))
        nu[bump] = draw(grades) * (1 - mu[bump])
    return IFSubset(n, tuple(mu), tuple(nu))


@st.composite
def small_semigroups(draw):
    """A random associative table of order 1..3, built by rejection."""
    n = draw(st.integers(min_value=1, max_value=3))
    while True:
        rows = tuple(
            tuple(draw(st.integers(min_value=0, max_value=n - 1)) for _ in range(n))
            for _ in range(n)
        )
        ok = all(
            rows[rows[x][y]][z] == rows[x][rows[y][z]]
            for x in range(n)
            for y in range(n)
            for z in range(n)
        )
        if ok:
            return Semigroup(n, rows)
