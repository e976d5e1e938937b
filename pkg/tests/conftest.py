import numpy as np
import pytest
from hypothesis import settings, strategies as st

from semicomm.constructors import builtin_algebra, random_rees_spec, rees_matrix
from semicomm.corpus import enumerate_semigroups

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

SMALL = [S for n in (1, 2, 3) for S in enumerate_semigroups(n)]
NAMED = ["paper_S2", "trivial", "LZ3", "RZ2", "RB2x3", "N3", "C2", "C3", "S3", "C2+0", "C2*LZ2*RZ2"]


def rees_from_seed(seed, **kw):
    spec = random_rees_spec(np.random.default_rng(seed), **kw)
    return spec, rees_matrix(spec)


small_semigroups = st.sampled_from(SMALL)
named_algebras = st.sampled_from(NAMED).map(builtin_algebra)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture(scope="session")
def order4():
    return list(enumerate_semigroups(4))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
