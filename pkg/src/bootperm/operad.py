"""The filtration P_2 < P_3 < ... of the permutation operad and related counts.

``P_m`` is the bimodule over the separable permutations generated by the
generator sets ``G_2 .. G_m``, where ``G_n`` is every permutation of arity ``n``
not already in ``P_{n-1}``.  Two independent membership tests are provided:

* :class:`Filtration` builds every ``P_m(k)`` literally, closing the generators
  under single left actions ``a o_i t`` and right actions ``t o_j a`` with
  separable ``a``, one arity at a time.
* :func:`core_arity` reads membership off the substitution decomposition.  An
  element of ``P_m`` is a separable context around one block that splits into
  at most ``m`` separable intervals, so the smallest ``m`` that works is the
  fewest separable intervals needed to tile the smallest interval containing
  every simple node of arity >= 4.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .errors import CapExceeded
from .perm import (
    Leaf,
    Minus,
    Plus,
    Simple,
    _compose_raw,
    _decompose,
    as_perm,
    is_separable_by_splitting,
    is_simple,
)

BRUTE_FORCE_CAP = 8
FAST_CAP = 9


# ---------------------------------------------------------------------------
# brute-force closure


@lru_cache(maxsize=None)
def separable_of_arity(k: int) -> tuple:
    return tuple(p for p in permutations(range(1, k + 1)) if is_separable_by_splitting(p))


class Filtration:
    """Literal bottom-up construction of the sets ``P_m(k)``.

    Each composition strictly raises arity, so ``P_m(k)`` only needs the sets of
    smaller arity.  Results are memoised per ``(m, k)``.
    """

    def __init__(self, cap: int = BRUTE_FORCE_CAP):
        self.cap = cap
        self._levels: dict[tuple[int, int], frozenset] = {}
        self._generators: dict[int, frozenset] = {2: frozenset({(1, 2), (2, 1)})}

    def generators(self, n: int) -> frozenset:
        if n < 2:
            return frozenset()
        if n not in self._generators:
            self._check(n)
            below = self.level(n - 1, n)
            self._generators[n] = frozenset(p for p in permutations(range(1, n + 1)) if p not in below)
        return self._generators[n]

    def level(self, m: int, k: int) -> frozenset:
        """The set ``P_m(k)`` as a frozenset of tuples."""
        if m < 2:
            raise ValueError("module index starts at 2")
        self._check(k)
        key = (m, k)
        if key in self._levels:
            return self._levels[key]
        if k == 1:
            out = frozenset({(1,)})
        else:
            found = set(self.generators(k)) if k <= m else set()
            for r in range(2, k + 1):
                lower = self.level(m, k - r + 1)
                for a in separable_of_arity(r):
                    for t in lower:
                        for i in range(1, r + 1):
                            found.add(_compose_raw(a, i, t))
                        for j in range(1, len(t) + 1):
                            found.add(_compose_raw(t, j, a))
            out = frozenset(found)
        self._levels[key] = out
        return out

    def contains(self, sigma, m: int) -> bool:
        sigma = tuple(as_perm(sigma))
        return sigma in self.level(m, len(sigma))

    def _check(self, k: int):
        if k > self.cap:
            raise CapExceeded(f"arity {k} exceeds brute-force cap {self.cap}")


_default_filtration = Filtration()


def membership_bruteforce(sigma, m: int, filtration: Filtration | None = None) -> bool:
    return (filtration or _default_filtration).contains(sigma, m)


# ---------------------------------------------------------------------------
# decomposition-based membership


def _tiles(node) -> tuple[bool, int]:
    """(is the block separable, fewest separable intervals tiling it)."""
    if isinstance(node, Leaf):
        return True, 1
    infos = [_tiles(c) for c in node.children]
    if isinstance(node, Simple):
        return False, sum(t for _, t in infos)
    if all(sep for sep, _ in infos):
        return True, 1
    return False, _linear_tiles(infos)


def _linear_tiles(infos) -> int:
    # a run of separable children merges into one separable interval
    count = 0
    in_run = False
    for sep, tiles in infos:
        if sep:
            if not in_run:
                count += 1
            in_run = True
        else:
            count += tiles
            in_run = False
    return count


def _core_of_tree(node) -> int:
    while True:
        if isinstance(node, Leaf):
            return 2
        infos = [_tiles(c) for c in node.children]
        if isinstance(node, Simple):
            return sum(t for _, t in infos)
        bad = [idx for idx, (sep, _) in enumerate(infos) if not sep]
        if not bad:
            return 2
        if len(bad) == 1:
            node = node.children[bad[0]]
            continue
        return _linear_tiles(infos[bad[0] : bad[-1] + 1])


def core_arity(sigma) -> int:
    """Smallest ``m >= 2`` with ``sigma`` in ``P_m``."""
    return _core_of_tree(_decompose(tuple(as_perm(sigma))))


def membership_fast(sigma, m: int) -> bool:
    return core_arity(sigma) <= m


def is_generator(sigma) -> bool:
    """True iff ``sigma`` lies in ``G_n`` for its arity ``n``."""
    sigma = tuple(as_perm(sigma))
    n = len(sigma)
    return n >= 2 and core_arity(sigma) == n


# ---------------------------------------------------------------------------
# tables


@lru_cache(maxsize=None)
def core_histogram(k: int) -> dict:
    """How many permutations of arity ``k`` have each core arity."""
    hist: Counter = Counter()
    for p in permutations(range(1, k + 1)):
        hist[_core_of_tree(_decompose(p))] += 1
    return dict(hist)


def _check_cap(k: int, cap: int):
    if k > cap:
        raise CapExceeded(f"arity {k} exceeds cap {cap}")


def generators(n: int, cap: int = FAST_CAP, method: str = "fast") -> set:
    """The generator set ``G_n``, i.e. arity-``n`` permutations outside ``P_{n-1}``."""
    from .perm import Permutation

    if n < 2:
        raise ValueError("generators start at arity 2")
    _check_cap(n, cap)
    if method == "bruteforce":
        return {Permutation._trusted(p) for p in Filtration(cap=max(cap, n)).generators(n)}
    if n == 2:
        return {Permutation._trusted((1, 2)), Permutation._trusted((2, 1))}
    return {
        Permutation._trusted(p) for p in permutations(range(1, n + 1)) if _core_of_tree(_decompose(p)) == n
    }


@dataclass
class FiltrationReport:
    m: int
    counts: dict = field(default_factory=dict)  # arity -> |P_m(arity)|
    generator_counts: dict = field(default_factory=dict)  # n -> |G_n|, n = 2..m

    def rows(self) -> list[tuple[int, int, int]]:
        return [(self.m, k, c) for k, c in sorted(self.counts.items())]

    def as_list(self) -> list[int]:
        return [self.counts[k] for k in sorted(self.counts)]


def filtration_counts(m: int, max_arity: int, cap: int = FAST_CAP) -> FiltrationReport:
    if m < 2:
        raise ValueError("module index starts at 2")
    _check_cap(max_arity, cap)
    report = FiltrationReport(m=m)
    for k in range(2, max_arity + 1):
        hist = core_histogram(k)
        report.counts[k] = sum(c for core, c in hist.items() if core <= m)
    for n in range(2, min(m, max_arity) + 1):
        report.generator_counts[n] = core_histogram(n).get(n, 0)
    return report


def generator_counts(n_max: int, cap: int = FAST_CAP) -> list[int]:
    """``|G_n|`` for ``n = 2..n_max``."""
    _check_cap(n_max, cap)
    return [core_histogram(n).get(n, 0) for n in range(2, n_max + 1)]


# ---------------------------------------------------------------------------
# power series


@dataclass(frozen=True)
class IntSeries:
    """Formal power series ``c_1 x + c_2 x^2 + ...`` truncated after ``len(coeffs)`` terms."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    def __getitem__(self, n: int) -> int:
        """Coefficient of ``x**n`` (n >= 1)."""
        if n < 1:
            return 0
        return self.coeffs[n - 1]

    def __len__(self) -> int:
        return len(self.coeffs)

    def compose(self, other: "IntSeries") -> "IntSeries":
        """``self(other(x))`` truncated to the shorter precision."""
        order = min(len(self), len(other))
        inner = [0] + list(other.coeffs[:order])
        power = [1] + [0] * order
        out = [0] * (order + 1)
        for k in range(1, order + 1):
            power = _mul(power, inner, order)
            c = self.coeffs[k - 1]
            if c:
                for d in range(order + 1):
                    out[d] += c * power[d]
        return IntSeries(tuple(out[1:]))

    def inverse(self) -> "IntSeries":
        """Compositional inverse via Lagrange inversion.

        ``[x^n] G = (1/n) [x^(n-1)] (x / F(x))^n``.
        """
        if not self.coeffs or self.coeffs[0] == 0:
            raise ValueError("functional inverse needs a nonzero linear coefficient")
        order = len(self.coeffs)
        # x / F(x) = 1 / (c_1 + c_2 x + ...)
        ratio = _reciprocal([Fraction(c) for c in self.coeffs], order)
        out = []
        power = [Fraction(1)] + [Fraction(0)] * (order - 1)
        for n in range(1, order + 1):
            power = _mul(power, ratio, order - 1)
            value = power[n - 1] / n
            if value.denominator != 1:
                raise ValueError("inverse series has non-integer coefficients")
            out.append(int(value))
        return IntSeries(tuple(out))


def _mul(a, b, order: int):
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            out[i + j] += x * y
    return out


def _reciprocal(c, order: int):
    # 1 / (c[0] + c[1] x + ...) up to x**(order - 1)
    inv = [Fraction(0)] * order
    inv[0] = 1 / c[0]
    for n in range(1, order):
        acc = sum(c[k] * inv[n - k] for k in range(1, min(n, len(c) - 1) + 1))
        inv[n] = -acc / c[0]
    return inv


def factorial_series(order: int) -> IntSeries:
    coeffs = []
    f = 1
    for n in range(1, order + 1):
        f *= n
        coeffs.append(f)
    return IntSeries(tuple(coeffs))


SMALL_SIMPLE_COUNTS = {1: 1, 2: 2, 3: 0}


def simple_counts_series(n_max: int) -> list[int]:
    """Number of simple permutations for ``n = 1..n_max``.

    For ``n >= 4`` this is ``-c_n + 2 (-1)^(n+1)`` with ``c_n`` the coefficients
    of the compositional inverse of ``sum n! x^n``; smaller ``n`` are listed
    directly.
    """
    if n_max < 1:
        return []
    inv = factorial_series(max(n_max, 4)).inverse()
    out = []
    for n in range(1, n_max + 1):
        if n < 4:
            out.append(SMALL_SIMPLE_COUNTS[n])
        else:
            out.append(-inv[n] + (-1) ** (n + 1) * 2)
    return out


def simple_counts_direct(n_max: int, cap: int = FAST_CAP) -> list[int]:
    _check_cap(n_max, cap)
    return [sum(1 for p in permutations(range(1, n + 1)) if is_simple(p)) for n in range(1, n_max + 1)]


# ---------------------------------------------------------------------------
# cyclic arrangements


def nonconsecutive_cycle_count(p: int, cap: int = 12) -> int:
    """Circular arrangements of ``1..p`` with no two neighbours differing by 1 mod ``p``.

    Rotations are identified (1 is placed first); the two directions of travel
    count separately.
    """
    if p < 1:
        raise ValueError("p must be positive")
    if p > cap:
        raise CapExceeded(f"p={p} exceeds cap {cap}")

    def close(a: int, b: int) -> bool:
        return (a - b) % p in (1 % p, (p - 1) % p)

    if p == 1:
        return 0 if close(1, 1) else 1
    count = 0
    seq = [1]
    used = 1 << 1

    def extend():
        nonlocal count, used
        if len(seq) == p:
            if not close(seq[-1], seq[0]):
                count += 1
            return
        last = seq[-1]
        for v in range(2, p + 1):
            if used >> v & 1 or close(last, v):
                continue
            used |= 1 << v
            seq.append(v)
            extend()
            seq.pop()
            used ^= 1 << v

    extend()
    return count


def generator_cycle_shift(n_range=range(4, 9), shifts=range(-3, 4)) -> int | None:
    """The offset ``s`` with ``nonconsecutive_cycle_count(n + s) == |G_n|`` across ``n_range``."""
    counts = {n: c for n, c in zip(range(2, max(n_range) + 1), generator_counts(max(n_range)))}
    for s in shifts:
        if all(n + s >= 1 and nonconsecutive_cycle_count(n + s) == counts[n] for n in n_range):
            return s
    return None
