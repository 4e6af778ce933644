import random
from itertools import permutations

import pytest

from bootperm import operad
from bootperm.errors import CapExceeded
from bootperm.grid import is_percolating
from bootperm.perm import (
    Permutation,
    all_permutations,
    as_perm,
    compose,
    decompose,
    dihedral_images,
    is_separable,
    is_simple,
    simple_nodes,
    to_grid,
)
from bootperm.properties import random_separable

FILT = operad.Filtration(cap=7)


def test_separable_in_every_level():
    rng = random.Random(5)
    for _ in range(50):
        p = random_separable(rng, rng.randint(1, 7))
        for m in range(2, 8):
            assert operad.membership_bruteforce(p, m, FILT)
            assert operad.membership_fast(p, m)


def test_membership_examples():
    assert not operad.membership_bruteforce("2413", 3, FILT)
    assert operad.membership_bruteforce("2413", 4, FILT)
    assert not operad.membership_fast("2413", 3)
    assert operad.membership_fast("2413", 4)
    assert operad.membership_fast("3156427", 4)
    twice = compose("2413", 1, "2413")
    assert len(simple_nodes(decompose(twice))) == 2
    assert not operad.membership_fast(twice, 6)
    assert not operad.membership_bruteforce(twice, 6, FILT)
    assert operad.core_arity(twice) == 7
    # two simple nodes yet inside P_7: the extra point is a separable attachment
    padded = as_perm("35247168")
    assert len(simple_nodes(decompose(padded))) == 2
    assert operad.core_arity(padded) == 7
    assert operad.membership_fast(padded, 7) and not operad.membership_fast(padded, 6)


def test_fast_and_bruteforce_agree_exhaustively():
    for k in range(1, 8):
        for m in range(2, 8):
            level = FILT.level(m, k)
            for p in permutations(range(1, k + 1)):
                assert (p in level) == operad.membership_fast(p, m), (p, m)


def test_fast_and_bruteforce_agree_sampled_at_8():
    filt = operad.Filtration(cap=8)
    rng = random.Random(8)
    levels = {m: filt.level(m, 8) for m in (4, 6, 7)}
    for _ in range(3000):
        p = list(range(1, 9))
        rng.shuffle(p)
        for m, level in levels.items():
            assert (tuple(p) in level) == operad.membership_fast(p, m)


def test_filtration_nested_and_stable():
    for k in range(2, 8):
        sizes = [len(FILT.level(m, k)) for m in range(2, 8)]
        assert sizes == sorted(sizes)
        for m in range(k, 8):
            assert len(FILT.level(m, k)) == len(list(permutations(range(k))))


def test_generators_examples():
    assert operad.generators(3) == set()
    assert {str(p) for p in operad.generators(4)} == {"2413", "3142"}
    assert {str(p) for p in operad.generators(5)} == {"42513", "31524", "35142", "24153", "41352", "25314"}
    for n in range(2, 7):
        assert operad.generators(n) == operad.generators(n, method="bruteforce")
    with pytest.raises(CapExceeded):
        operad.generators(10)


def test_generators_are_non_percolating():
    for n in range(4, 8):
        for p in operad.generators(n):
            assert not is_percolating(to_grid(p))


@pytest.mark.parametrize("n", range(4, 8))
def test_generators_closed_under_dihedral_group(n):
    gens = operad.generators(n)
    for p in gens:
        assert dihedral_images(p) <= gens


def test_generators_versus_simples():
    for n in range(4, 7):
        assert operad.generators(n) == {p for p in all_permutations(n) if is_simple(p)}
    extra = {p for p in operad.generators(7) if not is_simple(p)}
    assert len(extra) == 16
    base = {as_perm("2413"), as_perm("3142")}
    witnesses = {compose(a, i, b) for a in base for b in base for i in range(1, 5)}
    assert extra == witnesses


def test_filtration_counts_rows():
    assert operad.filtration_counts(2, 9).as_list() == [2, 6, 22, 90, 394, 1806, 8558, 41586]
    assert operad.filtration_counts(3, 8).as_list() == [2, 6, 22, 90, 394, 1806, 8558]
    rep = operad.filtration_counts(5, 8)
    assert rep.as_list() == [2, 6, 24, 120, 674, 3950, 23390]
    assert rep.generator_counts == {2: 2, 3: 0, 4: 2, 5: 6}
    assert rep.rows()[0] == (5, 2, 2)
    with pytest.raises(CapExceeded):
        operad.filtration_counts(4, 10)


def test_generator_counts():
    assert operad.generator_counts(7) == [2, 0, 2, 6, 46, 354]
    assert operad.generator_counts(8)[-1] == 3106


def test_series_inversion():
    f = operad.factorial_series(8)
    inv = f.inverse()
    assert f.compose(inv).coeffs[:8] == (1, 0, 0, 0, 0, 0, 0, 0)
    assert operad.simple_counts_series(10) == [1, 2, 0, 2, 6, 46, 338, 2926, 28146, 298526]


def test_series_requires_unit_linear_term():
    with pytest.raises(ValueError):
        operad.IntSeries((0, 1, 2)).inverse()


def test_simple_counts_direct():
    assert operad.simple_counts_direct(8) == operad.simple_counts_series(8)


def test_nonconsecutive_cycles():
    assert operad.nonconsecutive_cycle_count(3) == 0
    assert operad.nonconsecutive_cycle_count(5) == 2
    assert operad.nonconsecutive_cycle_count(7) == 46
    assert operad.generator_cycle_shift() == 1
    with pytest.raises(CapExceeded):
        operad.nonconsecutive_cycle_count(13)
