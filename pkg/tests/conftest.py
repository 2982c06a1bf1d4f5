import random

import pytest
from hypothesis import settings, strategies as st

from cubicbase.perm import Permutation

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def perms(draw, n=None, min_n=1, max_n=7):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    return Permutation(draw(st.permutations(range(n))))


@st.composite
def small_groups(draw, min_n=2, max_n=6, max_gens=3):
    """Generators of a random subgroup of Sym(n), n small enough for brute force."""
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(1, max_gens))
    return n, [Permutation(draw(st.permutations(range(n)))) for _ in range(k)]


def closure(n, gens):
    """Every element of <gens>, by breadth-first multiplication."""
    e = Permutation.identity(n)
    seen = {e}
    queue = [e]
    for x in queue:
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=lambda k: (not k.isdigit(), int(k) if k.isdigit() else 0)):
            terminalreporter.write_line(RESULTS[key])
