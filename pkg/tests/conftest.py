import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from foliatlas.chern import SheafClass
from foliatlas.ring import CohClass
from foliatlas.varieties import P3, Q3

small = st.integers(min_value=-12, max_value=12)
rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
nus = st.sampled_from([1, 2, 3, 5])
varieties = st.sampled_from([P3, Q3])
classes = st.builds(CohClass, rationals, rationals, rationals, rationals)
units = st.builds(CohClass, rationals.filter(bool), rationals, rationals, rationals)
ranks = st.integers(min_value=1, max_value=3)


@st.composite
def sheaf_classes(draw, rank=None):
    r = draw(ranks) if rank is None else rank
    return SheafClass.from_coefficients(r, draw(small), draw(small), draw(small))


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-40, 40), rng.randint(1, 12))


def random_class(rng: random.Random) -> CohClass:
    return CohClass(*(random_fraction(rng) for _ in range(4)))


def random_sheaf(rng: random.Random, rank=None) -> SheafClass:
    r = rng.randint(1, 3) if rank is None else rank
    return SheafClass.from_coefficients(r, *(rng.randint(-12, 12) for _ in range(3)))


@pytest.fixture(params=[P3, Q3], ids=["P3", "Q3"])
def builtin(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
