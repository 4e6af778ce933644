"""Alternative models of permutations and of separable permutations.

* Chord diagrams: the permutation ``s_1 .. s_n`` becomes the oriented
  Hamiltonian cycle ``0 -> s_1 -> ... -> s_n -> 0`` on ``n + 1`` points of a
  circle labelled ``0..n`` clockwise.
* Bicoloured trees: planar rooted trees whose internal vertices have at least
  two children and alternate in colour.  A red vertex is a direct sum of its
  children and a blue vertex a skew sum, so a red corolla is the identity
  permutation and a blue corolla its mirror image.
* Plane series-parallel networks: blue vertices become series chains and red
  vertices parallel bundles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import InvalidStep, MalformedDiagram, NotSeparable, PositionOutOfRange
from .perm import Leaf, Minus, Permutation, Plus, as_perm, decompose, direct_sum, skew_sum

RED = "red"
BLUE = "blue"

# colour of the vertex that maps to a direct sum (identity-like block)
SUM_COLOR = RED


# ---------------------------------------------------------------------------
# chord diagrams


@dataclass(frozen=True)
class ChordDiagram:
    points: tuple

    def __post_init__(self):
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        if not pts or pts[0] != 0 or sorted(pts) != list(range(len(pts))) or len(pts) < 2:
            raise MalformedDiagram(f"not a Hamiltonian cycle starting at 0: {pts!r}")

    @property
    def arity(self) -> int:
        return len(self.points) - 1

    def edges(self) -> list[tuple[int, int]]:
        pts = self.points
        return [(pts[k], pts[(k + 1) % len(pts)]) for k in range(len(pts))]

    def __str__(self) -> str:
        return "→".join(str(p) for p in self.points) + "→0"


def to_chord(sigma) -> ChordDiagram:
    return ChordDiagram((0,) + tuple(as_perm(sigma)))


def from_chord(d: ChordDiagram) -> Permutation:
    if not isinstance(d, ChordDiagram):
        d = ChordDiagram(tuple(d))
    return Permutation(d.points[1:])


def chord_compose(a: ChordDiagram, i: int, b: ChordDiagram) -> ChordDiagram:
    """Glue ``b`` at its point 0 onto the ``i``-th point visited by ``a``.

    The path of ``b`` replaces that point in the cycle of ``a``; the points of
    ``b`` land on the arc just after the glued label ``l``, so they are numbered
    ``l .. l + |b| - 1`` and the points of ``a`` beyond ``l`` move up by ``|b| - 1``.
    """
    m, n = a.arity, b.arity
    if not 1 <= i <= m:
        raise PositionOutOfRange(f"position {i} not in 1..{m}")
    glued = a.points[i]
    shift = n - 1
    cycle = []
    for k, label in enumerate(a.points):
        if k == i:
            cycle.extend(glued - 1 + q for q in b.points[1:])
        else:
            cycle.append(label + shift if label > glued else label)
    return ChordDiagram(tuple(cycle))


def _rotate_to_zero(labels: list[int]) -> tuple:
    k = labels.index(0)
    return tuple(labels[k:] + labels[:k])


def shift_T(d: ChordDiagram) -> ChordDiagram:
    """Move every label one step clockwise, ``l -> l + 1 mod (n + 1)``."""
    size = d.arity + 1
    return ChordDiagram(_rotate_to_zero([(p + 1) % size for p in d.points]))


def shift_T_inverse(d: ChordDiagram) -> ChordDiagram:
    size = d.arity + 1
    return ChordDiagram(_rotate_to_zero([(p - 1) % size for p in d.points]))


def reverse_S(d: ChordDiagram) -> ChordDiagram:
    """Mirror the labelled circle, ``l -> -l mod (n + 1)``.

    Mirroring turns the clockwise cycle counter-clockwise.  On permutations this
    is the complement ``s_k -> n + 1 - s_k``, i.e. flipping the matrix upside down.
    """
    size = d.arity + 1
    return ChordDiagram(tuple((-p) % size for p in d.points))


def reverse_orientation(d: ChordDiagram) -> ChordDiagram:
    """Traverse the same cycle backwards; the reverse permutation."""
    return ChordDiagram((0,) + tuple(reversed(d.points[1:])))


def is_generator_by_cycle(sigma) -> bool:
    """True iff the cycle of ``sigma`` never joins two neighbouring circle points."""
    sigma = as_perm(sigma)
    n = len(sigma)
    if n < 4:
        raise ValueError("the cycle criterion applies from arity 4")
    size = n + 1
    cycle = (0,) + tuple(sigma)
    for k in range(size):
        if (cycle[k] - cycle[(k + 1) % size]) % size in (1, n):
            return False
    return True


def step_family(n: int, s: int) -> Permutation:
    """The cycle ``0, s, 2s, ..., ns`` (mod ``n + 1``) read as a permutation."""
    if not 2 <= s <= n - 1 or gcd(s, n + 1) != 1:
        raise InvalidStep(f"step {s} is not a unit of Z/{n + 1} other than +-1")
    return Permutation([(k * s) % (n + 1) for k in range(1, n + 1)])


def family_E(m: int) -> Permutation:
    if m < 2:
        raise ValueError("E(m) needs m >= 2")
    return step_family(2 * m, 2)


def family_E_prime(m: int) -> Permutation:
    if m < 2:
        raise ValueError("E'(m) needs m >= 2")
    return step_family(2 * m, m)


# ---------------------------------------------------------------------------
# bicoloured trees


@dataclass(frozen=True)
class BicoloredTree:
    color: str | None = None
    children: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if self.color is None:
            if self.children:
                raise ValueError("a leaf has no children")
            return
        if self.color not in (RED, BLUE):
            raise ValueError(f"unknown colour {self.color!r}")
        if len(self.children) < 2:
            raise ValueError("internal vertices need at least two children")
        for c in self.children:
            if c.color == self.color:
                raise ValueError("adjacent vertices share a colour")

    @property
    def is_leaf(self) -> bool:
        return self.color is None

    @property
    def leaves(self) -> int:
        if self.is_leaf:
            return 1
        return sum(c.leaves for c in self.children)

    def __str__(self) -> str:
        if self.is_leaf:
            return "."
        tag = "R" if self.color == RED else "B"
        return f"{tag}(" + " ".join(str(c) for c in self.children) + ")"


TREE_LEAF = BicoloredTree()


def corolla(color: str, n: int) -> BicoloredTree:
    return BicoloredTree(color, (TREE_LEAF,) * n)


def tree_to_perm(t: BicoloredTree) -> Permutation:
    if t.is_leaf:
        return Permutation((1,))
    join = direct_sum if t.color == SUM_COLOR else skew_sum
    parts = [tree_to_perm(c) for c in t.children]
    out = parts[0]
    for p in parts[1:]:
        out = join(out, p)
    return out


def perm_to_tree(sigma) -> BicoloredTree:
    other = BLUE if SUM_COLOR == RED else RED

    def convert(node) -> BicoloredTree:
        if isinstance(node, Leaf):
            return TREE_LEAF
        if isinstance(node, Plus):
            return BicoloredTree(SUM_COLOR, tuple(convert(c) for c in node.children))
        if isinstance(node, Minus):
            return BicoloredTree(other, tuple(convert(c) for c in node.children))
        raise NotSeparable(f"{as_perm(sigma)} is not separable")

    return convert(decompose(sigma))


def tree_compose(a: BicoloredTree, i: int, b: BicoloredTree) -> BicoloredTree:
    """Graft ``b`` onto leaf ``i`` of ``a``, merging the join if the colours agree."""
    if not 1 <= i <= a.leaves:
        raise PositionOutOfRange(f"leaf {i} not in 1..{a.leaves}")
    if a.is_leaf:
        return b

    def graft(node: BicoloredTree, i: int) -> BicoloredTree:
        out = []
        for c in node.children:
            size = c.leaves
            if 1 <= i <= size:
                if c.is_leaf:
                    if not b.is_leaf and b.color == node.color:
                        out.extend(b.children)
                    else:
                        out.append(b)
                else:
                    out.append(graft(c, i))
            else:
                out.append(c)
            i -= size
        return BicoloredTree(node.color, tuple(out))

    return graft(a, i)


@lru_cache(maxsize=None)
def _rooted_counts(n: int) -> tuple:
    """Trees with ``k`` leaves and a root of one fixed colour, for ``k = 0..n``."""
    # child[k]: a leaf (k == 1) or a tree whose root has the other colour
    # seqs[k]: ordered sequences of one or more children with k leaves in total
    rooted = [0] * (n + 1)
    child = [0] * (n + 1)
    seqs = [0] * (n + 1)
    child[1] = seqs[1] = 1
    for k in range(2, n + 1):
        rooted[k] = sum(child[first] * seqs[k - first] for first in range(1, k))
        child[k] = rooted[k]
        seqs[k] = rooted[k] + child[k]
    return tuple(rooted)


def count_bicolored_trees(n: int) -> int:
    """Bicoloured trees with ``n`` leaves, by recurrence on the root colour."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    return 2 * _rooted_counts(n)[n]


def generate_bicolored_trees(n: int, root: str | None = None) -> list[BicoloredTree]:
    """All bicoloured trees with ``n`` leaves (optionally fixing the root colour)."""
    if n == 1:
        return [TREE_LEAF] if root is None else []
    colors = (RED, BLUE) if root is None else (root,)
    out = []
    for color in colors:
        other = BLUE if color == RED else RED
        for kids in _child_sequences(n, other, n - 1):
            out.append(BicoloredTree(color, kids))
    return out


def _child_sequences(n: int, color: str, largest: int) -> list[tuple]:
    # ordered sequences of subtrees (leaves or ``color``-rooted) with n leaves in
    # total, each subtree having at most ``largest`` leaves
    if n == 0:
        return [()]
    seqs = []
    for first in range(1, min(n, largest) + 1):
        heads = [TREE_LEAF] if first == 1 else generate_bicolored_trees(first, color)
        for head in heads:
            for tail in _child_sequences(n - first, color, largest):
                seqs.append((head,) + tail)
    return seqs


# ---------------------------------------------------------------------------
# plane series-parallel networks


@dataclass(frozen=True)
class SPNetwork:
    kind: str  # "edge", "series" or "parallel"
    children: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if self.kind == "edge":
            if self.children:
                raise ValueError("an edge has no children")
            return
        if self.kind not in ("series", "parallel"):
            raise ValueError(f"unknown network kind {self.kind!r}")
        if len(self.children) < 2:
            raise ValueError("series/parallel nodes need at least two parts")
        for c in self.children:
            if c.kind == self.kind:
                raise ValueError("nested series (or parallel) parts must be flattened")

    @property
    def edges(self) -> int:
        if self.kind == "edge":
            return 1
        return sum(c.edges for c in self.children)

    def __str__(self) -> str:
        if self.kind == "edge":
            return "e"
        tag = "S" if self.kind == "series" else "P"
        return f"{tag}(" + " ".join(str(c) for c in self.children) + ")"


EDGE = SPNetwork("edge")


def sp_from_tree(t: BicoloredTree) -> SPNetwork:
    if t.is_leaf:
        return EDGE
    kind = "series" if t.color == BLUE else "parallel"
    return SPNetwork(kind, tuple(sp_from_tree(c) for c in t.children))


def sp_to_tree(net: SPNetwork) -> BicoloredTree:
    if net.kind == "edge":
        return TREE_LEAF
    color = BLUE if net.kind == "series" else RED
    return BicoloredTree(color, tuple(sp_to_tree(c) for c in net.children))


SOURCE = "+"
SINK = "−"


def sp_realize(net: SPNetwork) -> list[tuple[int, str, str]]:
    """Two-terminal digraph of ``net`` as ``(label, tail, head)`` triples.

    Series parts run left to right and parallel parts top to bottom; edges are
    labelled ``1..m`` in that order and inner vertices ``v1, v2, ...`` in order
    of creation.
    """
    edges: list[tuple[int, str, str]] = []
    counter = [0]

    def fresh() -> str:
        counter[0] += 1
        return f"v{counter[0]}"

    def walk(node: SPNetwork, u: str, v: str):
        if node.kind == "edge":
            edges.append((len(edges) + 1, u, v))
        elif node.kind == "parallel":
            for c in node.children:
                walk(c, u, v)
        else:
            stops = [u] + [fresh() for _ in node.children[1:]] + [v]
            for k, c in enumerate(node.children):
                walk(c, stops[k], stops[k + 1])

    walk(net, SOURCE, SINK)
    return edges


def sp_to_text(edges) -> str:
    return "".join(f"{label}: {u} -> {v}\n" for label, u, v in edges)


def sp_to_dot(edges) -> str:
    lines = ["digraph SP {", "  rankdir=LR;"]
    lines.append(f'  "{SOURCE}" [label="{SOURCE}"];')
    lines.append(f'  "{SINK}" [label="{SINK}"];')
    for label, u, v in edges:
        lines.append(f'  "{u}" -> "{v}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def generate_sp_networks(m: int, top: str | None = None) -> list[SPNetwork]:
    """All alternating series-parallel expressions with ``m`` edges."""
    if m == 1:
        return [EDGE] if top is None else []
    kinds = ("series", "parallel") if top is None else (top,)
    out = []
    for kind in kinds:
        other = "parallel" if kind == "series" else "series"
        for parts in _part_sequences(m, other, m - 1):
            out.append(SPNetwork(kind, parts))
    return out


def _part_sequences(m: int, kind: str, largest: int) -> list[tuple]:
    if m == 0:
        return [()]
    seqs = []
    for first in range(1, min(m, largest) + 1):
        heads = [EDGE] if first == 1 else generate_sp_networks(first, kind)
        for head in heads:
            for tail in _part_sequences(m - first, kind, largest):
                seqs.append((head,) + tail)
    return seqs
