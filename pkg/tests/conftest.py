from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from formalgeom import multiindex as mi
from formalgeom.dual import DualFunctional
from formalgeom.lie import heisenberg, so3
from formalgeom.pbw import PbwElement
from formalgeom.scalar import Scalar

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 6))
scalars = st.builds(Scalar, rationals, rationals)
real_scalars = st.builds(Scalar, rationals)


def elements(alg, max_degree, max_terms=4):
    basis = mi.up_to(alg.dim, max_degree)
    return st.dictionaries(st.sampled_from(basis), scalars, max_size=max_terms).map(
        lambda d: PbwElement(alg, d))


def tables(alg, order, max_terms=8):
    basis = mi.up_to(alg.dim, order)
    return st.dictionaries(st.sampled_from(basis), scalars, max_size=max_terms).map(
        lambda d: DualFunctional.from_table(alg, d, order))


ALGEBRAS = {"heisenberg": heisenberg(), "so3": so3()}


@pytest.fixture(params=sorted(ALGEBRAS))
def algebra(request):
    return ALGEBRAS[request.param]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
