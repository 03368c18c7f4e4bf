import json
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from distp3.poly import Poly
from distp3.report import fixture_names, load_fixture

settings.register_profile("default", deadline=None)
settings.load_profile("default")

TESTS = Path(__file__).parent
GOLDEN = TESTS / "golden"

# fixtures that describe valid distributions (the printed variant fails the Euler check)
VALID_FIXTURES = [n for n in fixture_names() if not n.endswith("_printed")]

small_ints = st.integers(min_value=-5, max_value=5)
monomials = st.tuples(*[st.integers(min_value=0, max_value=3)] * 4)


@st.composite
def polys(draw, max_terms=4):
    terms = draw(st.dictionaries(monomials, st.fractions(min_value=-4, max_value=4, max_denominator=3),
                                 max_size=max_terms))
    return Poly(terms)


@st.composite
def homogeneous_polys(draw, degree=None, max_terms=4):
    from distp3.poly import homogeneous_monomials
    deg = draw(st.integers(min_value=0, max_value=3)) if degree is None else degree
    mons = homogeneous_monomials(deg)
    chosen = draw(st.lists(st.sampled_from(mons), max_size=max_terms))
    return Poly({m: draw(small_ints) for m in chosen})


@pytest.fixture(scope="session")
def generic_specs():
    return json.loads((TESTS / "data" / "generic_specs.json").read_text(encoding="utf-8"))


def fixture_coefficients(name):
    return load_fixture(name)["coefficients"]


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
