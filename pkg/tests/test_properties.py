import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bootperm import grid as g
from bootperm import properties as pr
from bootperm.perm import compose, is_separable


def perm_of(n):
    return st.permutations(range(1, n + 1))


def test_generators_produce_valid_objects():
    rng = random.Random(0)
    for _ in range(500):
        assert is_separable(pr.random_separable(rng, rng.randint(1, 9)))
        t = pr.random_tree(rng, rng.randint(1, 9))
        assert t.leaves >= 1
        rows, cols = rng.randint(2, 8), rng.randint(2, 8)
        r1, r2 = pr.random_corner_pair(rng, rows, cols)
        assert g.share_corner(r1, r2)
        assert r1.fits(rows, cols) and r2.fits(rows, cols)


@pytest.mark.parametrize("name", sorted(pr.PROPERTY_SUITES))
def test_suites_small_run(name):
    assert pr.PROPERTY_SUITES[name](random.Random(1), 300) == []


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(perm_of), st.integers(1, 5).flatmap(perm_of), st.integers(1, 5).flatmap(perm_of), st.data())
def test_associativity_hypothesis(a, b, c, data):
    i = data.draw(st.integers(1, len(a)))
    j = data.draw(st.integers(i, i + len(b) - 1))
    assert compose(compose(a, i, b), j, c) == compose(a, i, compose(b, j - i + 1, c))
    if i < len(a):
        j = data.draw(st.integers(i + 1, len(a)))
        assert compose(compose(a, i, b), j + len(b) - 1, c) == compose(compose(a, j, c), i, b)
