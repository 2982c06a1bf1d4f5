import math

import pytest
from hypothesis import given, strategies as st

from cubicbase.perm import Permutation, compose, identity, inverse

from conftest import perms


def test_right_action_product():
    p = Permutation([1, 2, 0])
    q = Permutation([0, 2, 1])
    # (p * q)[i] = q[p[i]]
    assert list(p * q) == [q[p[i]] for i in range(3)]
    assert compose(p, q) == p * q


def test_from_cycles_and_cycles():
    p = Permutation.from_cycles(6, [(0, 1, 2), (4, 5)])
    assert list(p) == [1, 2, 0, 3, 5, 4]
    assert sorted(p.cycles()) == [(0, 1, 2), (4, 5)]
    assert p.order() == 6
    assert p.fixed_points() == [3]


def test_checked_rejects_non_permutations():
    with pytest.raises(ValueError):
        Permutation.checked([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation.checked([0, 3])


@given(st.data())
def test_group_axioms(data):
    n = data.draw(st.integers(1, 8))
    a, b, c = (data.draw(perms(n=n)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == identity(n) == a.inverse() * a
    assert inverse(a * b) == b.inverse() * a.inverse()


@given(perms(max_n=9))
def test_order_is_lcm_of_cycle_lengths(p):
    lengths = [len(c) for c in p.cycles()] or [1]
    assert p.order() == math.lcm(*lengths)
    assert (p ** p.order()).is_identity()


@given(st.data())
def test_conjugation_operator(data):
    n = data.draw(st.integers(1, 8))
    p, g = data.draw(perms(n=n)), data.draw(perms(n=n))
    assert p ** g == g.inverse() * p * g
    # conjugation relabels cycles by g
    assert sorted(tuple(sorted(g[x] for x in c)) for c in p.cycles()) == sorted(
        tuple(sorted(c)) for c in (p ** g).cycles()
    )


@given(perms(max_n=8), st.integers(-5, 5))
def test_integer_powers(p, k):
    expected = identity(p.degree)
    base = p if k >= 0 else p.inverse()
    for _ in range(abs(k)):
        expected = expected * base
    assert p ** k == expected


@given(st.data())
def test_commutator(data):
    n = data.draw(st.integers(1, 7))
    a, b = data.draw(perms(n=n)), data.draw(perms(n=n))
    assert a.commutator(b) == a.inverse() * b.inverse() * a * b
