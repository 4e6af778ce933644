"""Acceptance checks behind ``bootperm verify``.

``quick`` runs every check at a reduced scale that finishes in well under a
minute.  ``full`` runs each at its published scale and adds the expensive
extensions (|G_9|, the 6 x 6 census, the arity-8 percolation sweep).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import permutations

from . import census, grid, models, operad
from .perm import Permutation, compose, is_separable, to_grid
from .properties import PROPERTY_SUITES

LEVELS = ("quick", "full")

SCHROEDER = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098]
GENERATOR_COUNTS = {2: 2, 3: 0, 4: 2, 5: 6, 6: 46, 7: 354, 8: 3106, 9: 29926}
G4 = {"2413", "3142"}
G5 = {"24153", "25314", "31524", "35142", "41352", "42513"}
FILTRATION_TABLE = {
    4: [2, 6, 24, 114, 590, 3182, 17522, 97594],
    5: [2, 6, 24, 120, 674, 3950, 23390, 138394],
    6: [2, 6, 24, 120, 720, 4686, 30842, 200034],
    7: [2, 6, 24, 120, 720, 5040, 37214, 270834],
}
SIMPLE_COUNTS = {4: 2, 5: 6, 6: 46, 7: 338, 8: 2926, 9: 28146, 10: 298526}
MINIMAL_CENSUS = {1: 1, 2: 2, 3: 14, 4: 130, 5: 1615, 6: 23140}


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed: float = 0.0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "elapsed": round(self.elapsed, 3),
        }


def _perms(n: int):
    return (Permutation._trusted(p) for p in permutations(range(1, n + 1)))


def check_percolation_separability(full: bool):
    top = 8 if full else 7
    total = bad = 0
    for n in range(1, top + 1):
        for p in _perms(n):
            total += 1
            if grid.is_percolating(to_grid(p)) != is_separable(p):
                bad += 1
    return bad == 0, f"n=1..{top}: {total} permutations, {bad} mismatches"


def check_schroeder_counts(full: bool):
    top = 8 if full else 7
    enum = [sum(1 for p in _perms(n) if is_separable(p)) for n in range(1, top + 1)]
    trees = [models.count_bicolored_trees(n) for n in (9, 10)]
    ok = enum == SCHROEDER[:top] and trees == SCHROEDER[8:10]
    return ok, f"enumerated {enum}, trees(9,10)={trees}"


def check_generator_counts(full: bool):
    top = 9 if full else 8
    got = operad.generator_counts(top)
    want = [GENERATOR_COUNTS[n] for n in range(2, top + 1)]
    return got == want, f"n=2..{top}: {got}"


def check_small_generators(full: bool):
    g4 = {str(p) for p in operad.generators(4)}
    g5 = {str(p) for p in operad.generators(5)}
    return g4 == G4 and g5 == G5, f"G4={sorted(g4)} G5={sorted(g5)}"


def check_filtration_table(full: bool):
    top = 9 if full else 8
    wrong = []
    for m, row in FILTRATION_TABLE.items():
        got = operad.filtration_counts(m, top).as_list()
        if got != row[: top - 1]:
            wrong.append((m, got))
    # the generative closure and the tiling test must agree on every permutation
    brute_top = 7 if full else 6
    mismatches = 0
    filt = operad.Filtration(cap=brute_top)
    for m in range(2, brute_top + 1):
        for k in range(1, brute_top + 1):
            level = filt.level(m, k)
            for p in permutations(range(1, k + 1)):
                if (p in level) != operad.membership_fast(p, m):
                    mismatches += 1
    ok = not wrong and mismatches == 0
    return ok, f"k<={top} rows wrong: {wrong}; brute/fast mismatches (k<={brute_top}): {mismatches}"


def check_presentation(full: bool):
    top = 8 if full else 7
    total = bad = 0
    for n in range(4, top + 1):
        for p in _perms(n):
            total += 1
            if models.is_generator_by_cycle(p) != operad.is_generator(p):
                bad += 1
    return bad == 0, f"n=4..{top}: {total} permutations, {bad} mismatches"


def check_simple_counts(full: bool):
    series = operad.simple_counts_series(10)
    got = {n: series[n - 1] for n in range(4, 11)}
    top = 9 if full else 8
    direct = operad.simple_counts_direct(top)
    ok = got == SIMPLE_COUNTS and direct == series[:top]
    return ok, f"series n=4..10 {list(got.values())}; direct n<={top} agrees={direct == series[:top]}"


def check_minimal_census(full: bool):
    top = 6 if full else 5
    got = {n: census.minimal_census(n).total for n in range(1, top + 1)}
    want = {n: MINIMAL_CENSUS[n] for n in range(1, top + 1)}
    # every minimal set lies between n and the Morris bound
    spread = census.minimal_census(4, sizes=(1, 16))
    in_range = all(
        c == 0 or 4 <= s <= census.morris_bound(4) for s, c in spread.by_size.items()
    )
    return got == want and in_range, f"census {list(got.values())}; sizes for n=4: {spread.by_size}"


def check_regressions(full: bool):
    cases = [
        (str(compose("31425", 3, "231")), "3156427"),
        (str(compose("231", 1, "231")), "34251"),
        (str(compose("3142", 4, "123")), "516234"),
        (models.to_chord("42513").points, (0, 4, 2, 5, 1, 3)),
        (str(models.step_family(8, 2)), "24681357"),
    ]
    bad = [(got, want) for got, want in cases if got != want]
    return not bad, "all regression values match" if not bad else f"mismatches {bad}"


def check_properties(full: bool, seed: int = 20261016):
    cases = 10_000 if full else 2_000
    failures = {}
    for name, suite in PROPERTY_SUITES.items():
        bad = suite(random.Random(seed), cases)
        if bad:
            failures[name] = len(bad)
    detail = f"{len(PROPERTY_SUITES)} suites x {cases} cases; violations {failures or 'none'}"
    return not failures, detail


def check_cross_model(full: bool):
    top = 8 if full else 7
    rows = []
    for n in range(1, top + 1):
        perms = sum(1 for p in _perms(n) if is_separable(p))
        trees = len(models.generate_bicolored_trees(n))
        nets = len(models.generate_sp_networks(n))
        rows.append((n, perms, trees, nets))
    ok = all(a == b == c for _, a, b, c in rows)
    return ok, f"arity<= {top}: " + " ".join(f"{a}" for _, a, _, _ in rows)


CHECKS = [
    ("percolating iff separable", check_percolation_separability),
    ("separable counts", check_schroeder_counts),
    ("generator counts", check_generator_counts),
    ("G4 and G5 listings", check_small_generators),
    ("filtration table", check_filtration_table),
    ("cycle presentation", check_presentation),
    ("simple counts", check_simple_counts),
    ("minimal census", check_minimal_census),
    ("regression values", check_regressions),
    ("property suites", check_properties),
    ("cross-model counts", check_cross_model),
]


def run_checks(level: str = "quick", only: list[str] | None = None) -> list[CheckResult]:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    full = level == "full"
    results = []
    for name, fn in CHECKS:
        if only and name not in only:
            continue
        start = time.perf_counter()
        try:
            passed, detail = fn(full)
        except Exception as exc:  # a crash is a failed check, not an abort
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, passed, detail, time.perf_counter() - start))
    return results


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results) if results else 0
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.name:<{width}}  {r.elapsed:7.2f}s  {r.detail}")
    return "\n".join(lines)
