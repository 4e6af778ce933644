"""Permutations as elements of the non-symmetric operad of permutations.

Permutations are kept 1-based in one-line notation, so ``Permutation((3, 1, 4, 2, 5))``
is the permutation usually written ``31425``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial
from typing import Iterator, Sequence, Union

from .errors import CapExceeded, MalformedTree, ParseError, PositionOutOfRange

MAX_ENUM_ARITY = 10


class Permutation(tuple):
    """An immutable permutation of ``{1..n}`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, entries: Sequence[int] = ()):
        entries = tuple(int(x) for x in entries)
        n = len(entries)
        if n == 0 or sorted(entries) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {entries!r}")
        return tuple.__new__(cls, entries)

    @classmethod
    def _trusted(cls, entries) -> "Permutation":
        # skips validation; only for entries already known to be a bijection
        return tuple.__new__(cls, entries)

    @property
    def arity(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self)!r})"


def parse_perm(text: str) -> Permutation:
    """Parse ``"31425"`` or ``"10,1,2,...,9"``."""
    text = text.strip()
    try:
        if "," in text:
            entries = [int(tok) for tok in text.split(",")]
        else:
            if not text.isdigit():
                raise ValueError(text)
            entries = [int(ch) for ch in text]
        return Permutation(entries)
    except ValueError as exc:
        raise ParseError(f"malformed permutation {text!r}") from exc


def format_perm(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(str(x) for x in p)
    return ",".join(str(x) for x in p)


def as_perm(p) -> Permutation:
    if isinstance(p, Permutation):
        return p
    if isinstance(p, str):
        return parse_perm(p)
    if isinstance(p, int):
        return parse_perm(str(p))
    return Permutation(p)


def standardize(seq: Sequence[int]) -> tuple:
    """Replace values by their ranks, e.g. ``(5, 2, 9) -> (2, 1, 3)``."""
    rank = {v: k for k, v in enumerate(sorted(seq), 1)}
    return tuple(rank[v] for v in seq)


# ---------------------------------------------------------------------------
# operad structure


def compose(a, i: int, b) -> Permutation:
    """Partial composition ``a o_i b``: inflate the ``i``-th entry of ``a`` by ``b``."""
    a = as_perm(a)
    b = as_perm(b)
    m, n = len(a), len(b)
    if not 1 <= i <= m:
        raise PositionOutOfRange(f"position {i} not in 1..{m}")
    ai = a[i - 1]
    shift = n - 1
    out = [x + shift if x > ai else x for x in a[: i - 1]]
    out.extend(y + ai - 1 for y in b)
    out.extend(x + shift if x > ai else x for x in a[i:])
    return Permutation._trusted(out)


def _compose_raw(a: tuple, i: int, b: tuple) -> tuple:
    # hot-path variant of compose on plain tuples
    ai = a[i - 1]
    shift = len(b) - 1
    return (
        tuple(x + shift if x > ai else x for x in a[: i - 1])
        + tuple(y + ai - 1 for y in b)
        + tuple(x + shift if x > ai else x for x in a[i:])
    )


def direct_sum(a, b) -> Permutation:
    a, b = as_perm(a), as_perm(b)
    k = len(a)
    return Permutation._trusted(a + tuple(y + k for y in b))


def skew_sum(a, b) -> Permutation:
    a, b = as_perm(a), as_perm(b)
    k = len(b)
    return Permutation._trusted(tuple(x + k for x in a) + b)


def contains_pattern(sigma, tau) -> bool:
    """True iff ``tau`` occurs in ``sigma`` as a pattern (backtracking search)."""
    sigma, tau = tuple(as_perm(sigma)), tuple(as_perm(tau))
    n, m = len(sigma), len(tau)
    if m > n:
        return False
    # chosen[k] holds the value of sigma matched to tau[k]
    chosen: list[int] = []

    def consistent(val: int) -> bool:
        k = len(chosen)
        t = tau[k]
        for prev_t, prev_v in zip(tau, chosen):
            if (prev_t < t) != (prev_v < val):
                return False
        return True

    def search(start: int) -> bool:
        k = len(chosen)
        if k == m:
            return True
        for j in range(start, n - (m - k) + 1):
            if consistent(sigma[j]):
                chosen.append(sigma[j])
                if search(j + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


# ---------------------------------------------------------------------------
# separability and simplicity

_SEPARABLE_OBSTRUCTIONS = ((2, 4, 1, 3), (3, 1, 4, 2))


def is_separable_by_patterns(sigma) -> bool:
    """Separable iff ``sigma`` avoids both 2413 and 3142."""
    sigma = tuple(as_perm(sigma))
    if len(sigma) < 4:
        return True
    for idx in combinations(range(len(sigma)), 4):
        if standardize([sigma[j] for j in idx]) in _SEPARABLE_OBSTRUCTIONS:
            return False
    return True


def _split_point(p: tuple) -> tuple[int, str] | None:
    n = len(p)
    hi = 0
    for k in range(n - 1):
        hi = max(hi, p[k])
        if hi == k + 1:
            return k + 1, "plus"
    lo = n + 1
    for k in range(n - 1):
        lo = min(lo, p[k])
        if lo == n - k:
            return k + 1, "minus"
    return None


def is_separable_by_splitting(sigma) -> bool:
    """Separable iff it splits recursively into direct/skew sum blocks down to singletons."""
    stack = [tuple(as_perm(sigma))]
    while stack:
        p = stack.pop()
        if len(p) <= 2:
            continue
        split = _split_point(p)
        if split is None:
            return False
        k = split[0]
        stack.append(standardize(p[:k]))
        stack.append(standardize(p[k:]))
    return True


def is_separable(sigma) -> bool:
    return is_separable_by_splitting(sigma)


def is_simple(sigma) -> bool:
    """No block of 2..n-1 consecutive positions carries a set of consecutive values.

    1, 12 and 21 count as simple.
    """
    p = tuple(as_perm(sigma))
    n = len(p)
    if n <= 2:
        return True
    for lo in range(n - 1):
        mn = mx = p[lo]
        for hi in range(lo + 1, n):
            v = p[hi]
            if v < mn:
                mn = v
            elif v > mx:
                mx = v
            if mx - mn == hi - lo and hi - lo + 1 < n:
                return False
    return True


# ---------------------------------------------------------------------------
# substitution decomposition


@dataclass(frozen=True)
class Leaf:
    @property
    def arity(self) -> int:
        return 1


@dataclass(frozen=True)
class Plus:
    children: tuple

    @property
    def arity(self) -> int:
        return sum(c.arity for c in self.children)


@dataclass(frozen=True)
class Minus:
    children: tuple

    @property
    def arity(self) -> int:
        return sum(c.arity for c in self.children)


@dataclass(frozen=True)
class Simple:
    skeleton: Permutation
    children: tuple

    @property
    def arity(self) -> int:
        return sum(c.arity for c in self.children)


DecompositionTree = Union[Leaf, Plus, Minus, Simple]
LEAF = Leaf()


def _maximal_blocks(p: tuple) -> list[tuple[int, int]]:
    # For a sum- and skew-indecomposable p the maximal proper intervals partition
    # the positions; scanning left to right, take the longest one starting at lo.
    n = len(p)
    blocks = []
    lo = 0
    while lo < n:
        best = lo
        mn = mx = p[lo]
        for hi in range(lo + 1, n):
            mn = min(mn, p[hi])
            mx = max(mx, p[hi])
            if mx - mn == hi - lo and hi - lo + 1 < n:
                best = hi
        blocks.append((lo, best + 1))
        lo = best + 1
    return blocks


def _decompose(p: tuple):
    n = len(p)
    if n == 1:
        return LEAF
    split = _split_point(p)
    if split is not None:
        kind = split[1]
        parts = []
        rest = p
        # peel off indecomposable components of the same kind one at a time
        while True:
            s = _split_point(rest)
            if s is None or s[1] != kind:
                parts.append(rest)
                break
            k = s[0]
            parts.append(standardize(rest[:k]))
            rest = standardize(rest[k:])
        children = tuple(_decompose(standardize(c)) for c in parts)
        return Plus(children) if kind == "plus" else Minus(children)
    blocks = _maximal_blocks(p)
    skeleton = standardize([p[lo] for lo, _ in blocks])
    children = tuple(_decompose(standardize(p[lo:hi])) for lo, hi in blocks)
    return Simple(Permutation._trusted(skeleton), children)


def decompose(sigma) -> DecompositionTree:
    """Canonical substitution decomposition with maximal linear (Plus/Minus) nodes."""
    return _decompose(tuple(as_perm(sigma)))


def eval_tree(tree: DecompositionTree) -> Permutation:
    """Inflate every node skeleton by its children; inverse of :func:`decompose`."""
    if isinstance(tree, Leaf):
        return Permutation._trusted((1,))
    if isinstance(tree, (Plus, Minus)):
        if len(tree.children) < 2:
            raise MalformedTree("linear node needs at least two children")
        parts = [eval_tree(c) for c in tree.children]
        join = direct_sum if isinstance(tree, Plus) else skew_sum
        out = parts[0]
        for part in parts[1:]:
            out = join(out, part)
        return out
    if isinstance(tree, Simple):
        skel = tree.skeleton
        if len(skel) != len(tree.children):
            raise MalformedTree("skeleton arity differs from number of children")
        if len(skel) < 4 or not is_simple(skel):
            raise MalformedTree(f"skeleton {skel} is not a simple permutation of arity >= 4")
        out = Permutation(skel)
        for i in range(len(skel), 0, -1):
            out = compose(out, i, eval_tree(tree.children[i - 1]))
        return out
    raise MalformedTree(f"unknown node {tree!r}")


def simple_nodes(tree: DecompositionTree) -> list[Simple]:
    found = []
    stack = [tree]
    while stack:
        node = stack.pop()
        if isinstance(node, Simple):
            found.append(node)
        if not isinstance(node, Leaf):
            stack.extend(node.children)
    return found


def tree_str(tree: DecompositionTree) -> str:
    if isinstance(tree, Leaf):
        return "."
    inner = ", ".join(tree_str(c) for c in tree.children)
    if isinstance(tree, Plus):
        return f"+({inner})"
    if isinstance(tree, Minus):
        return f"-({inner})"
    return f"{tree.skeleton}({inner})"


# ---------------------------------------------------------------------------
# bridges and enumeration


def to_grid(sigma):
    """Permutation matrix as a grid: column ``j`` is red in row ``sigma_j``."""
    from .grid import GridConfig

    sigma = as_perm(sigma)
    n = len(sigma)
    return GridConfig.from_cells(n, n, [(v, j) for j, v in enumerate(sigma, 1)])


def all_permutations(n: int, cap: int = MAX_ENUM_ARITY) -> Iterator[Permutation]:
    """Every permutation of ``1..n`` in lexicographic order."""
    if n < 1:
        raise ValueError("arity must be positive")
    if n > cap:
        raise CapExceeded(f"arity {n} exceeds enumeration cap {cap} ({factorial(n)} permutations)")
    for p in permutations(range(1, n + 1)):
        yield Permutation._trusted(p)


def reverse(sigma) -> Permutation:
    return Permutation._trusted(tuple(reversed(as_perm(sigma))))


def complement(sigma) -> Permutation:
    sigma = as_perm(sigma)
    n = len(sigma)
    return Permutation._trusted(tuple(n + 1 - x for x in sigma))


def inverse(sigma) -> Permutation:
    sigma = as_perm(sigma)
    out = [0] * len(sigma)
    for j, v in enumerate(sigma, 1):
        out[v - 1] = j
    return Permutation._trusted(out)


def dihedral_images(sigma) -> set[Permutation]:
    """Images of the permutation matrix under the 8 symmetries of the square."""
    sigma = as_perm(sigma)
    seen = {sigma}
    frontier = [sigma]
    while frontier:
        p = frontier.pop()
        for q in (reverse(p), complement(p), inverse(p)):
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return seen
