"""Exhaustive counts of minimal percolating sets on small square grids.

Candidate sets are built one row at a time as bitmasks and pruned with two
necessary conditions for percolation: the first and last row (and column)
must contain a red cell, and no two consecutive rows (or columns) can both be
empty.  A blue cell in a band of empty rows can see at most one red neighbour
from outside the band, so such a band never fills.

For sets of exactly ``n`` cells in an ``n`` x ``n`` grid a third condition
applies.  The perimeter of the red region never grows under the update rule and
the full grid has perimeter ``4n``, so ``n`` red cells must have the maximal
perimeter ``4n``, i.e. no two of them are orthogonally adjacent.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .grid import GridConfig, _closure_bits, _full_mask

DEFAULT_MAX_N = 7


def morris_bound(n: int) -> int:
    """Largest size a minimal percolating set of the n x n grid can have."""
    return (n + 2) ** 2 // 6


@dataclass
class CensusResult:
    n: int
    sizes: tuple[int, int]
    by_size: dict = field(default_factory=dict)
    examined: int = 0

    @property
    def total(self) -> int:
        return sum(self.by_size.values())


def _row_options(n: int, independent: bool) -> list[int]:
    opts = []
    for m in range(1 << n):
        if independent and m & (m >> 1):
            continue
        opts.append(m)
    return opts


def _columns_ok(colbits: int, n: int) -> bool:
    if not colbits & 1 or not colbits >> (n - 1) & 1:
        return False
    for k in range(n - 1):
        if not (colbits >> k) & 3:
            return False
    return True


def _search_from(n: int, lo: int, hi: int, first_row: int, independent: bool):
    """Count minimal percolating sets whose first row mask is ``first_row``."""
    w = n + 1
    full = _full_mask(n, n)
    options = _row_options(n, independent)
    counts: Counter = Counter()
    examined = 0

    def minimal(bits: int) -> bool:
        rest = bits
        while rest:
            low = rest & -rest
            rest ^= low
            if _closure_bits(bits ^ low, w, full) == full:
                return False
        return True

    def dfs(row: int, bits: int, size: int, prev: int, prev_empty: bool, colbits: int):
        nonlocal examined
        if row == n:
            if size < lo or prev == 0 or not _columns_ok(colbits, n):
                return
            examined += 1
            if _closure_bits(bits, w, full) == full and minimal(bits):
                counts[size] += 1
            return
        budget = hi - size
        for m in options:
            pc = m.bit_count()
            if pc > budget:
                continue
            if m == 0 and prev_empty:
                continue
            if independent and m & prev:
                continue
            # rows after this one: no two consecutive empty and the last one red
            if budget - pc < (n - row) // 2:
                continue
            dfs(row + 1, bits | (m << (row * w)), size + pc, m, m == 0, colbits | m)

    pc = first_row.bit_count()
    if first_row and pc <= hi:
        dfs(1, first_row, pc, first_row, False, first_row)
    return counts, examined


def minimal_census(
    n: int,
    sizes: tuple[int, int] | None = None,
    max_n: int = DEFAULT_MAX_N,
    workers: int = 1,
) -> CensusResult:
    """Count minimal percolating sets of the ``n`` x ``n`` grid.

    By default only sets of the minimum possible size ``n`` are counted, which
    is the census tabulated as A145901.  Pass ``sizes=(lo, hi)`` to count every
    size in that range; sizes above :func:`morris_bound` never occur.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise BudgetExceeded(f"census for n={n} exceeds the configured limit n<={max_n}")
    lo, hi = sizes if sizes is not None else (n, n)
    lo = max(lo, n)
    hi = min(hi, morris_bound(n))
    result = CensusResult(n=n, sizes=(lo, hi))
    if lo > hi:
        return result
    independent = hi == n
    firsts = [m for m in _row_options(n, independent) if m]
    total: Counter = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_search_from, n, lo, hi, m, independent) for m in firsts]
            parts = [f.result() for f in futures]
    else:
        parts = [_search_from(n, lo, hi, m, independent) for m in firsts]
    for counts, examined in parts:
        total.update(counts)
        result.examined += examined
    result.by_size = {s: total[s] for s in range(lo, hi + 1)}
    return result


def minimal_sets(n: int, size: int | None = None, max_n: int = 5) -> list[GridConfig]:
    """List minimal percolating sets of one size by brute force over all subsets.

    Independent of the pruned search above; intended for small ``n``.
    """
    from itertools import combinations

    from .grid import is_minimal_percolating

    if n > max_n:
        raise BudgetExceeded(f"brute-force listing for n={n} exceeds limit {max_n}")
    size = n if size is None else size
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    found = []
    for chosen in combinations(cells, size):
        g = GridConfig.from_cells(n, n, chosen)
        if is_minimal_percolating(g):
            found.append(g)
    return found
