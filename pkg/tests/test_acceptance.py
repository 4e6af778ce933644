"""Acceptance criteria, each at its stated scale and with literal expected values.

Run with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per criterion
is printed in the terminal summary.  ``python3 tests/test_acceptance.py`` runs
the same checks without pytest.
"""

import random
import time
from itertools import permutations

import pytest

from bootperm import census, grid, models, operad
from bootperm.perm import Permutation, compose, is_separable, to_grid
from bootperm.properties import PROPERTY_SUITES

SEED = 20261016
CASES = 10_000


def perms(n):
    return (Permutation._trusted(p) for p in permutations(range(1, n + 1)))


@pytest.mark.criterion(1, "percolating iff separable on all of S_n, n <= 8")
def test_criterion_01_percolation_equals_separability():
    start = time.perf_counter()
    total = mismatches = 0
    for n in range(1, 9):
        for p in perms(n):
            total += 1
            mismatches += grid.is_percolating(to_grid(p)) != is_separable(p)
    assert total == 46233
    assert mismatches == 0
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(2, "separable counts are the large Schroeder numbers")
def test_criterion_02_separable_counts():
    by_enumeration = [sum(1 for p in perms(n) if is_separable(p)) for n in range(1, 9)]
    assert by_enumeration == [1, 2, 6, 22, 90, 394, 1806, 8558]
    assert [models.count_bicolored_trees(n) for n in (9, 10)] == [41586, 206098]


@pytest.mark.criterion(3, "generator counts |G_n| for n = 2..9")
def test_criterion_03_generator_counts():
    brute = operad.Filtration(cap=8)
    assert [len(brute.generators(n)) for n in range(2, 9)] == [2, 0, 2, 6, 46, 354, 3106]
    assert operad.generator_counts(9) == [2, 0, 2, 6, 46, 354, 3106, 29926]


@pytest.mark.criterion(4, "G_4 and G_5 element listings")
def test_criterion_04_small_generator_sets():
    assert {str(p) for p in operad.generators(4)} == {"2413", "3142"}
    assert {str(p) for p in operad.generators(5)} == {"42513", "31524", "35142", "24153", "41352", "25314"}
    assert {str(p) for p in operad.generators(5, method="bruteforce")} == {
        "42513", "31524", "35142", "24153", "41352", "25314"
    }


@pytest.mark.criterion(5, "filtration tables P_4..P_7 up to arity 9; brute force = fast for k <= 7")
def test_criterion_05_filtration_tables():
    table = {
        4: [2, 6, 24, 114, 590, 3182, 17522, 97594],
        5: [2, 6, 24, 120, 674, 3950, 23390, 138394],
        6: [2, 6, 24, 120, 720, 4686, 30842, 200034],
        7: [2, 6, 24, 120, 720, 5040, 37214, 270834],
    }
    for m, row in table.items():
        assert operad.filtration_counts(m, 9).as_list() == row
    brute = operad.Filtration(cap=7)
    for m in range(2, 8):
        for k in range(1, 8):
            level = brute.level(m, k)
            for p in permutations(range(1, k + 1)):
                assert (p in level) == operad.membership_fast(p, m), (p, m)


@pytest.mark.criterion(6, "cycle criterion equals generator membership, 4 <= n <= 8")
def test_criterion_06_presentation_oracle():
    mismatches = 0
    for n in range(4, 9):
        for p in perms(n):
            mismatches += models.is_generator_by_cycle(p) != operad.is_generator(p)
    assert mismatches == 0


@pytest.mark.criterion(7, "simple permutation counts by series inversion")
def test_criterion_07_simple_counts():
    series = operad.simple_counts_series(10)
    assert series[3:] == [2, 6, 46, 338, 2926, 28146, 298526]
    assert operad.simple_counts_direct(9) == series[:9]


@pytest.mark.criterion(8, "minimal percolating set census n = 1..6 and size bounds")
def test_criterion_08_minimal_census():
    start = time.perf_counter()
    assert [census.minimal_census(n).total for n in range(1, 6)] == [1, 2, 14, 130, 1615]
    assert time.perf_counter() - start < 60
    assert census.minimal_census(6).total == 23140
    for n in range(1, 6):
        spread = census.minimal_census(n, sizes=(1, n * n))
        for size, count in spread.by_size.items():
            if count:
                assert n <= size <= (n + 2) ** 2 / 6


@pytest.mark.criterion(9, "fixed regression values")
def test_criterion_09_regressions():
    assert str(compose("31425", 3, "231")) == "3156427"
    assert str(compose("231", 1, "231")) == "34251"
    assert str(compose("3142", 4, "123")) == "516234"
    assert models.to_chord("42513").points == (0, 4, 2, 5, 1, 3)
    assert str(models.step_family(8, 2)) == "24681357"


@pytest.mark.criterion(10, "randomized property suites, 10^4 seeded cases each")
def test_criterion_10_property_suites():
    violations = {}
    for name, suite in PROPERTY_SUITES.items():
        bad = suite(random.Random(SEED), CASES)
        if bad:
            violations[name] = bad[:3]
    assert not violations


@pytest.mark.criterion(11, "separable permutations, bicoloured trees and SP networks agree, arity <= 8")
def test_criterion_11_cross_model_counts():
    for n in range(1, 9):
        separable = sum(1 for p in perms(n) if is_separable(p))
        trees = models.generate_bicolored_trees(n)
        networks = models.generate_sp_networks(n)
        assert separable == len(trees) == len(set(trees)) == len(networks) == len(set(networks))
        assert {models.tree_to_perm(t) for t in trees} == {p for p in perms(n) if is_separable(p)}


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if not name.startswith("test_criterion_"):
            continue
        number, title = fn.pytestmark[0].args
        try:
            fn()
            status = "PASS"
        except AssertionError:
            status, failed = "FAIL", failed + 1
        print(f"{status} criterion {number:2d}: {title}", flush=True)
    sys.exit(1 if failed else 0)
