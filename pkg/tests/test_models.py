import random

import pytest

from bootperm import models as md
from bootperm.errors import InvalidStep, MalformedDiagram, NotSeparable, PositionOutOfRange
from bootperm.grid import is_percolating
from bootperm.operad import is_generator
from bootperm.perm import all_permutations, as_perm, complement, compose, is_separable, is_simple, reverse, to_grid
from bootperm.properties import random_perm, random_tree

RED3 = md.corolla(md.RED, 3)


def test_to_chord_examples():
    assert md.to_chord("3142").points == (0, 3, 1, 4, 2)
    assert md.to_chord("42513").points == (0, 4, 2, 5, 1, 3)
    assert md.to_chord("1").points == (0, 1)
    assert str(md.to_chord("42513")) == "0→4→2→5→1→3→0"


def test_from_chord_examples():
    assert str(md.from_chord(md.ChordDiagram((0, 2, 4, 6, 8, 1, 3, 5, 7)))) == "24681357"
    assert md.from_chord(md.ChordDiagram((0, 1))) == (1,)
    for bad in [(1, 0), (0, 2), (0,), (0, 1, 1)]:
        with pytest.raises(MalformedDiagram):
            md.ChordDiagram(bad)


def test_chord_roundtrip():
    rng = random.Random(1)
    for _ in range(200):
        p = random_perm(rng, rng.randint(1, 10))
        assert md.from_chord(md.to_chord(p)) == p


def test_chord_compose_examples():
    got = md.chord_compose(md.to_chord("3142"), 4, md.to_chord("123"))
    assert got == md.to_chord("516234")
    unit = md.ChordDiagram((0, 1))
    d = md.to_chord("42513")
    for i in range(1, 6):
        assert md.chord_compose(d, i, unit) == d
    with pytest.raises(PositionOutOfRange):
        md.chord_compose(d, 6, unit)


def test_chord_compose_matches_permutations():
    rng = random.Random(2)
    for _ in range(500):
        a, b = random_perm(rng, rng.randint(1, 7)), random_perm(rng, rng.randint(1, 7))
        i = rng.randint(1, len(a))
        glued = md.chord_compose(md.to_chord(a), i, md.to_chord(b))
        assert md.from_chord(glued) == compose(a, i, b)


def test_dihedral_actions():
    d = md.to_chord("42513")
    x = d
    for _ in range(6):
        x = md.shift_T(x)
    assert x == d
    assert md.reverse_S(md.reverse_S(d)) == d
    assert md.reverse_S(md.shift_T(md.reverse_S(d))) == md.shift_T_inverse(d)
    assert md.from_chord(md.reverse_S(d)) == complement("42513")
    assert md.from_chord(md.reverse_orientation(d)) == reverse("42513")
    assert md.shift_T(md.to_chord("1234")) == md.to_chord("1234")
    assert md.shift_T(d) == md.to_chord("24153")


def test_dihedral_actions_preserve_generators():
    for n in range(4, 7):
        for p in all_permutations(n):
            d = md.to_chord(p)
            images = [md.shift_T(d), md.reverse_S(d), md.reverse_orientation(d)]
            for img in images:
                assert md.is_generator_by_cycle(md.from_chord(img)) == md.is_generator_by_cycle(p)


def test_is_generator_by_cycle():
    assert md.is_generator_by_cycle("2413")
    assert md.is_generator_by_cycle("3142")
    assert not md.is_generator_by_cycle("1234")
    assert not md.is_generator_by_cycle("368795412")
    with pytest.raises(ValueError):
        md.is_generator_by_cycle("231")


@pytest.mark.parametrize("n", range(4, 8))
def test_cycle_criterion_matches_filtration(n):
    for p in all_permutations(n):
        assert md.is_generator_by_cycle(p) == is_generator(p)


def test_step_family():
    assert str(md.step_family(8, 2)) == "24681357" == str(md.family_E(4))
    assert str(md.step_family(8, 4)) == "48372615" == str(md.family_E_prime(4))
    for bad in [(8, 1), (8, 8), (8, 3), (9, 5)]:
        with pytest.raises(InvalidStep):
            md.step_family(*bad)


def test_step_family_is_simple_and_non_percolating():
    for n in range(4, 11):
        for s in range(2, n):
            try:
                p = md.step_family(n, s)
            except InvalidStep:
                continue
            assert is_simple(p)
            assert not is_percolating(to_grid(p))
            assert md.is_generator_by_cycle(p)


def test_tree_to_perm_examples():
    assert str(md.tree_to_perm(md.corolla(md.RED, 2))) == "12"
    assert str(md.tree_to_perm(md.corolla(md.BLUE, 2))) == "21"
    assert str(md.tree_to_perm(md.corolla(md.RED, 4))) == "1234"
    assert md.tree_to_perm(md.TREE_LEAF) == (1,)


def test_perm_to_tree():
    assert md.perm_to_tree("12") == md.corolla(md.RED, 2)
    with pytest.raises(NotSeparable):
        md.perm_to_tree("2413")
    for n in range(1, 7):
        for p in all_permutations(n):
            if is_separable(p):
                assert md.tree_to_perm(md.perm_to_tree(p)) == p


def test_tree_validation():
    with pytest.raises(ValueError):
        md.BicoloredTree(md.RED, (md.TREE_LEAF,))
    with pytest.raises(ValueError):
        md.BicoloredTree(md.RED, (md.TREE_LEAF, RED3))


def test_tree_compose_examples():
    assert md.tree_compose(RED3, 2, RED3) == md.corolla(md.RED, 5)
    blue2 = md.corolla(md.BLUE, 2)
    grafted = md.tree_compose(RED3, 2, blue2)
    assert grafted == md.BicoloredTree(md.RED, (md.TREE_LEAF, blue2, md.TREE_LEAF))
    assert str(md.tree_to_perm(grafted)) == "1324"
    with pytest.raises(PositionOutOfRange):
        md.tree_compose(RED3, 4, blue2)


def test_tree_compose_matches_permutations():
    rng = random.Random(4)
    for _ in range(500):
        a, b = random_tree(rng, rng.randint(1, 7)), random_tree(rng, rng.randint(1, 7))
        i = rng.randint(1, a.leaves)
        got = md.tree_to_perm(md.tree_compose(a, i, b))
        assert got == compose(md.tree_to_perm(a), i, md.tree_to_perm(b))


def test_tree_counts():
    assert md.count_bicolored_trees(1) == 1
    assert md.count_bicolored_trees(3) == 6
    assert md.count_bicolored_trees(6) == 394
    assert [md.count_bicolored_trees(n) for n in (9, 10)] == [41586, 206098]
    for n in range(1, 8):
        trees = md.generate_bicolored_trees(n)
        assert len(trees) == len(set(trees)) == md.count_bicolored_trees(n)
        assert all(t.leaves == n for t in trees)


def test_sp_examples():
    chain = md.sp_from_tree(md.corolla(md.BLUE, 4))
    assert chain.kind == "series" and chain.edges == 4
    assert md.sp_realize(chain) == [(1, "+", "v1"), (2, "v1", "v2"), (3, "v2", "v3"), (4, "v3", "−")]
    bundle = md.sp_from_tree(md.corolla(md.RED, 4))
    assert bundle.kind == "parallel"
    assert md.sp_realize(bundle) == [(k, "+", "−") for k in range(1, 5)]


def _paths_ok(edges):
    # connected, acyclic, and every vertex lies on a source-to-sink path
    out, inc = {}, {}
    for _, u, v in edges:
        out.setdefault(u, []).append(v)
        inc.setdefault(v, []).append(u)
    nodes = set(out) | set(inc)
    if md.SOURCE in inc or md.SINK in out:
        return False
    for v in nodes - {md.SOURCE, md.SINK}:
        if v not in out or v not in inc:
            return False
    order, stack = [], [md.SOURCE]
    indeg = {v: len(inc.get(v, [])) for v in nodes}
    while stack:
        u = stack.pop()
        order.append(u)
        for v in out.get(u, []):
            indeg[v] -= 1
            if indeg[v] == 0:
                stack.append(v)
    return len(order) == len(nodes)


def test_sp_networks():
    for m in range(1, 8):
        nets = md.generate_sp_networks(m)
        assert len(nets) == len(set(nets)) == md.count_bicolored_trees(m)
        for net in nets:
            assert net.edges == m
            assert md.sp_from_tree(md.sp_to_tree(net)) == net
            edges = md.sp_realize(net)
            assert [e[0] for e in edges] == list(range(1, m + 1))
            assert _paths_ok(edges)


def test_sp_dot():
    dot = md.sp_to_dot(md.sp_realize(md.sp_from_tree(md.perm_to_tree("132"))))
    assert dot.startswith("digraph")
    assert '"+" [label="+"]' in dot and '"−" [label="−"]' in dot
    assert dot.count("->") == 3


def test_separable_perm_sp_roundtrip():
    for p in all_permutations(5):
        if is_separable(p):
            net = md.sp_from_tree(md.perm_to_tree(p))
            assert md.tree_to_perm(md.sp_to_tree(net)) == as_perm(p)
