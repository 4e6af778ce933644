"""Seeded randomized property checks.

Each ``check_*`` function draws ``cases`` random instances from ``rng`` and
returns the list of counterexamples it found (empty when the property holds).
The test-suite and the ``verify`` command both run these.
"""

from __future__ import annotations

import random

from . import grid as g
from . import models as md
from .perm import (
    Permutation,
    compose,
    contains_pattern,
    direct_sum,
    skew_sum,
)


def random_perm(rng: random.Random, n: int) -> Permutation:
    entries = list(range(1, n + 1))
    rng.shuffle(entries)
    return Permutation._trusted(entries)


def random_separable(rng: random.Random, n: int) -> Permutation:
    if n == 1:
        return Permutation._trusted((1,))
    k = rng.randint(1, n - 1)
    join = direct_sum if rng.random() < 0.5 else skew_sum
    return join(random_separable(rng, k), random_separable(rng, n - k))


def random_tree(rng: random.Random, n: int, forbid: str | None = None) -> md.BicoloredTree:
    if n == 1:
        return md.TREE_LEAF
    colors = [c for c in (md.RED, md.BLUE) if c != forbid]
    color = rng.choice(colors)
    # split n leaves into at least two ordered parts
    cuts = sorted(rng.sample(range(1, n), rng.randint(1, n - 1)))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
    return md.BicoloredTree(color, tuple(random_tree(rng, s, color) for s in sizes))


def random_grid(rng: random.Random, max_side: int = 8, density: float | None = None) -> g.GridConfig:
    rows, cols = rng.randint(1, max_side), rng.randint(1, max_side)
    p = rng.random() * 0.6 if density is None else density
    cells = [(i, j) for i in range(1, rows + 1) for j in range(1, cols + 1) if rng.random() < p]
    return g.GridConfig.from_cells(rows, cols, cells)


def random_subconfig(rng: random.Random, config: g.GridConfig, keep: float = 0.5) -> g.GridConfig:
    return g.GridConfig.from_cells(
        config.rows, config.cols, [c for c in config.iter_red() if rng.random() < keep]
    )


# ---------------------------------------------------------------------------
# operad axioms


def check_associativity(rng: random.Random, cases: int, max_arity: int = 6) -> list:
    bad = []
    for _ in range(cases):
        k, l, m = (rng.randint(1, max_arity) for _ in range(3))
        a, b, c = random_perm(rng, k), random_perm(rng, l), random_perm(rng, m)
        for i in range(1, k + 1):
            ab = compose(a, i, b)
            for j in range(i, i + l):
                if compose(ab, j, c) != compose(a, i, compose(b, j - i + 1, c)):
                    bad.append(("sequential", a, i, b, j, c))
            for j in range(i + 1, k + 1):
                if compose(ab, j + l - 1, c) != compose(compose(a, j, c), i, b):
                    bad.append(("parallel", a, i, b, j, c))
    return bad


def check_pattern_lemma(rng: random.Random, cases: int, max_arity: int = 6) -> list:
    """Both factors are patterns of a composite; pattern containment is an ideal."""
    bad = []
    for _ in range(cases):
        a = random_perm(rng, rng.randint(1, max_arity))
        b = random_perm(rng, rng.randint(1, max_arity))
        i = rng.randint(1, len(a))
        ab = compose(a, i, b)
        if not (contains_pattern(ab, a) and contains_pattern(ab, b)):
            bad.append(("lemma", a, i, b))
        tau = random_perm(rng, rng.randint(2, 4))
        if contains_pattern(b, tau):
            j = rng.randint(1, len(b))
            if not (contains_pattern(ab, tau) and contains_pattern(compose(b, j, a), tau)):
                bad.append(("ideal", a, i, b, tau))
    return bad


# ---------------------------------------------------------------------------
# grid dynamics


def check_closure_operator(rng: random.Random, cases: int, max_side: int = 8) -> list:
    """Closure is extensive, monotone and idempotent."""
    bad = []
    for _ in range(cases):
        sigma = random_grid(rng, max_side)
        tau = random_subconfig(rng, sigma, rng.random())
        cs, ct = g.closure(sigma), g.closure(tau)
        if not sigma.issubset(cs):
            bad.append(("extensive", sigma))
        if not ct.issubset(cs):
            bad.append(("monotone", tau, sigma))
        if g.closure(cs) != cs:
            bad.append(("idempotent", sigma))
    return bad


def check_final_structure(rng: random.Random, cases: int, max_side: int = 8) -> list:
    """Fixpoint test agrees with the rectangle/2-collar description; finals meet to finals."""
    bad = []
    for _ in range(cases):
        sigma = random_grid(rng, max_side)
        if g.is_final(sigma) != g.is_final_structural(sigma):
            bad.append(("agreement", sigma))
        a = g.closure(sigma)
        b = g.closure(random_grid_like(rng, a))
        if not g.is_final_structural(a) or not g.is_final(a):
            bad.append(("closure-final", sigma))
        for rect in g.rect_components(a):
            ring = g.collar(g.CellSet(a.rows, a.cols, frozenset(rect.cells())), 2)
            if any(c in a for c in ring.cells):
                bad.append(("collar", a, rect))
        meet = a.intersection(b)
        if not g.is_final(meet):
            bad.append(("intersection", a, b))
    return bad


def random_grid_like(rng: random.Random, like: g.GridConfig) -> g.GridConfig:
    p = rng.random() * 0.5
    cells = [(i, j) for i in range(1, like.rows + 1) for j in range(1, like.cols + 1) if rng.random() < p]
    return g.GridConfig.from_cells(like.rows, like.cols, cells)


def random_corner_pair(rng: random.Random, rows: int, cols: int):
    """Two rectangles of a ``rows`` x ``cols`` grid that share only a corner point."""
    # pivot cell (i, j) is a corner of the first rectangle
    while True:
        i = rng.randint(1, rows)
        j = rng.randint(1, cols - 1)
        down = rng.random() < 0.5
        if down and i == rows or not down and i == 1:
            continue
        if down:
            r1 = g.Rect(rng.randint(1, i), rng.randint(1, j), i, j)
            r2 = g.Rect(i + 1, j + 1, rng.randint(i + 1, rows), rng.randint(j + 1, cols))
        else:
            r1 = g.Rect(i, rng.randint(1, j), rng.randint(i, rows), j)
            r2 = g.Rect(rng.randint(1, i - 1), j + 1, i - 1, rng.randint(j + 1, cols))
        return r1, r2


def _spanning_subset(rng: random.Random, rows: int, cols: int, rect: g.Rect) -> g.GridConfig:
    cells = list(rect.cells())
    while True:
        p = rng.uniform(0.2, 0.7)
        chosen = [c for c in cells if rng.random() < p]
        config = g.GridConfig.from_cells(rows, cols, chosen)
        if g.spans(config, rect):
            return config


def check_union_lemma(rng: random.Random, cases: int, max_side: int = 8) -> list:
    bad = []
    for _ in range(cases):
        rows, cols = rng.randint(2, max_side), rng.randint(2, max_side)
        r1, r2 = random_corner_pair(rng, rows, cols)
        assert g.share_corner(r1, r2)
        s1 = _spanning_subset(rng, rows, cols, r1)
        s2 = _spanning_subset(rng, rows, cols, r2)
        if not g.spans(s1.union(s2), g.bounding_rect(r1, r2)):
            bad.append((r1, r2, s1, s2))
    return bad


def check_insertion_lemma(rng: random.Random, cases: int, max_side: int = 5) -> list:
    bad = []
    done = 0
    while done < cases:
        sigma = random_grid(rng, max_side)
        if len(sigma) == 0 or g.is_percolating(sigma):
            continue
        cell = rng.choice(sorted(sigma.red))
        tau = random_grid(rng, 3)
        done += 1
        if g.is_percolating(g.substitute_at(sigma, cell, tau)):
            bad.append((sigma, cell, tau))
    return bad


# ---------------------------------------------------------------------------
# models


def check_chord_morphism(rng: random.Random, cases: int, max_arity: int = 8) -> list:
    bad = []
    for _ in range(cases):
        a = random_perm(rng, rng.randint(1, max_arity))
        b = random_perm(rng, rng.randint(1, max_arity))
        i = rng.randint(1, len(a))
        glued = md.chord_compose(md.to_chord(a), i, md.to_chord(b))
        if md.from_chord(glued) != compose(a, i, b):
            bad.append((a, i, b))
        if md.from_chord(md.to_chord(a)) != a:
            bad.append(("roundtrip", a))
    return bad


def check_tree_morphism(rng: random.Random, cases: int, max_leaves: int = 8) -> list:
    bad = []
    for _ in range(cases):
        a = random_tree(rng, rng.randint(1, max_leaves))
        b = random_tree(rng, rng.randint(1, max_leaves))
        i = rng.randint(1, a.leaves)
        lhs = md.tree_to_perm(md.tree_compose(a, i, b))
        if lhs != compose(md.tree_to_perm(a), i, md.tree_to_perm(b)):
            bad.append((a, i, b))
        if md.perm_to_tree(md.tree_to_perm(a)) != a:
            bad.append(("roundtrip", a))
    return bad


def check_dihedral_relations(rng: random.Random, cases: int, max_arity: int = 9) -> list:
    bad = []
    for _ in range(cases):
        n = rng.randint(1, max_arity)
        d = md.to_chord(random_perm(rng, n))
        x = d
        for _ in range(n + 1):
            x = md.shift_T(x)
        if x != d:
            bad.append(("T^(n+1)", d))
        if md.reverse_S(md.reverse_S(d)) != d:
            bad.append(("S^2", d))
        if md.reverse_S(md.shift_T(md.reverse_S(d))) != md.shift_T_inverse(d):
            bad.append(("STS", d))
        if md.shift_T(md.shift_T_inverse(d)) != d:
            bad.append(("T^-1", d))
    return bad


PROPERTY_SUITES = {
    "operad associativity": check_associativity,
    "pattern lemma and ideal": check_pattern_lemma,
    "closure operator": check_closure_operator,
    "final configurations": check_final_structure,
    "union lemma": check_union_lemma,
    "insertion lemma": check_insertion_lemma,
    "chord morphism": check_chord_morphism,
    "tree morphism": check_tree_morphism,
    "dihedral relations": check_dihedral_relations,
}
