"""Two-neighbour bootstrap percolation on rectangular grids.

Cells are addressed 1-based as ``(row, col)`` with row 1 at the top.  The red
cells of a configuration are stored as one Python integer used as a bitboard:
cell ``(i, j)`` lives at bit ``(i - 1) * (cols + 1) + (j - 1)``.  The extra bit
per row is a permanently clear guard column, so horizontal shifts never wrap
from one row into the next and a whole update step is a handful of shifts and
boolean ops regardless of grid size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CellNotRed, NotFinal, ParseError, PositionOutOfRange

Cell = tuple[int, int]


@lru_cache(maxsize=None)
def _full_mask(rows: int, cols: int) -> int:
    w = cols + 1
    row = (1 << cols) - 1
    mask = 0
    for r in range(rows):
        mask |= row << (r * w)
    return mask


def _bit(cols: int, i: int, j: int) -> int:
    return 1 << ((i - 1) * (cols + 1) + (j - 1))


@dataclass(frozen=True)
class GridConfig:
    rows: int
    cols: int
    bits: int = 0

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid dimensions must be positive")
        if self.bits & ~_full_mask(self.rows, self.cols):
            raise ValueError("red cells outside the grid")

    @classmethod
    def from_cells(cls, rows: int, cols: int, cells: Iterable[Cell]) -> "GridConfig":
        bits = 0
        for i, j in cells:
            if not (1 <= i <= rows and 1 <= j <= cols):
                raise PositionOutOfRange(f"cell {(i, j)} outside {rows}x{cols} grid")
            bits |= _bit(cols, i, j)
        return cls(rows, cols, bits)

    @classmethod
    def empty(cls, rows: int, cols: int) -> "GridConfig":
        return cls(rows, cols, 0)

    @classmethod
    def full(cls, rows: int, cols: int) -> "GridConfig":
        return cls(rows, cols, _full_mask(rows, cols))

    @property
    def red(self) -> frozenset:
        return frozenset(self.iter_red())

    def iter_red(self) -> Iterator[Cell]:
        w = self.cols + 1
        bits = self.bits
        while bits:
            low = bits & -bits
            idx = low.bit_length() - 1
            yield idx // w + 1, idx % w + 1
            bits ^= low

    def is_red(self, i: int, j: int) -> bool:
        return bool(self.bits & _bit(self.cols, i, j))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= self.rows and 1 <= j <= self.cols and self.is_red(i, j)

    def with_bits(self, bits: int) -> "GridConfig":
        return GridConfig(self.rows, self.cols, bits)

    def union(self, other: "GridConfig") -> "GridConfig":
        _same_shape(self, other)
        return self.with_bits(self.bits | other.bits)

    def intersection(self, other: "GridConfig") -> "GridConfig":
        _same_shape(self, other)
        return self.with_bits(self.bits & other.bits)

    def issubset(self, other: "GridConfig") -> bool:
        _same_shape(self, other)
        return self.bits & ~other.bits == 0

    def __str__(self) -> str:
        return format_grid(self)


def _same_shape(a: GridConfig, b: GridConfig):
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("grids have different dimensions")


@dataclass(frozen=True)
class Rect:
    top: int
    left: int
    bottom: int
    right: int

    def __post_init__(self):
        if self.top > self.bottom or self.left > self.right or self.top < 1 or self.left < 1:
            raise ValueError(f"degenerate rectangle {self}")

    @property
    def height(self) -> int:
        return self.bottom - self.top + 1

    @property
    def width(self) -> int:
        return self.right - self.left + 1

    def fits(self, rows: int, cols: int) -> bool:
        return self.bottom <= rows and self.right <= cols

    def cells(self) -> Iterator[Cell]:
        for i in range(self.top, self.bottom + 1):
            for j in range(self.left, self.right + 1):
                yield i, j

    def mask(self, rows: int, cols: int) -> int:
        if not self.fits(rows, cols):
            raise PositionOutOfRange(f"{self} does not fit a {rows}x{cols} grid")
        w = cols + 1
        row = ((1 << self.width) - 1) << (self.left - 1)
        m = 0
        for i in range(self.top - 1, self.bottom):
            m |= row << (i * w)
        return m


def bounding_rect(a: Rect, b: Rect) -> Rect:
    return Rect(min(a.top, b.top), min(a.left, b.left), max(a.bottom, b.bottom), max(a.right, b.right))


def share_corner(a: Rect, b: Rect) -> bool:
    """Non-overlapping rectangles touching only diagonally at one corner."""
    for r1, r2 in ((a, b), (b, a)):
        if r1.bottom + 1 == r2.top and r1.right + 1 == r2.left:
            return True
        if r1.top - 1 == r2.bottom and r1.right + 1 == r2.left:
            return True
    return False


@dataclass(frozen=True)
class CellSet:
    """Cells of a ``rows`` x ``cols`` grid with colours ignored."""

    rows: int
    cols: int
    cells: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(self.cells))
        for i, j in self.cells:
            if not (1 <= i <= self.rows and 1 <= j <= self.cols):
                raise PositionOutOfRange(f"cell {(i, j)} outside {self.rows}x{self.cols} grid")

    def as_grid(self) -> GridConfig:
        return GridConfig.from_cells(self.rows, self.cols, self.cells)


# ---------------------------------------------------------------------------
# dynamics


def _neighbour_shifts(bits: int, w: int, full: int):
    return bits >> w, (bits << w) & full, (bits >> 1) & full, (bits << 1) & full


def _step_bits(bits: int, w: int, full: int) -> int:
    u, d, left, right = _neighbour_shifts(bits, w, full)
    at_least_two = (u & d) | ((u | d) & (left | right)) | (left & right)
    return bits | at_least_two


def _closure_bits(bits: int, w: int, full: int) -> int:
    while True:
        nxt = _step_bits(bits, w, full)
        if nxt == bits:
            return bits
        bits = nxt


def _dilate(bits: int, w: int, full: int) -> int:
    u, d, left, right = _neighbour_shifts(bits, w, full)
    return bits | u | d | left | right


def percolate_step(config: GridConfig) -> GridConfig:
    """One synchronous update: blue cells with two or more red neighbours turn red."""
    full = _full_mask(config.rows, config.cols)
    return config.with_bits(_step_bits(config.bits, config.cols + 1, full))


def closure(config: GridConfig) -> GridConfig:
    full = _full_mask(config.rows, config.cols)
    return config.with_bits(_closure_bits(config.bits, config.cols + 1, full))


def closure_steps(config: GridConfig) -> list[GridConfig]:
    """The initial configuration followed by every configuration up to the fixpoint."""
    steps = [config]
    while True:
        nxt = percolate_step(steps[-1])
        if nxt == steps[-1]:
            return steps
        steps.append(nxt)


def is_percolating(config: GridConfig) -> bool:
    full = _full_mask(config.rows, config.cols)
    return _closure_bits(config.bits, config.cols + 1, full) == full


def is_minimal_percolating(config: GridConfig) -> bool:
    full = _full_mask(config.rows, config.cols)
    w = config.cols + 1
    if _closure_bits(config.bits, w, full) != full:
        return False
    rest = config.bits
    while rest:
        low = rest & -rest
        rest ^= low
        if _closure_bits(config.bits ^ low, w, full) == full:
            return False
    return True


def spans(config: GridConfig, region: Rect) -> bool:
    mask = region.mask(config.rows, config.cols)
    return closure(config).bits & mask == mask


def collar(cells: CellSet, k: int) -> CellSet:
    """Cells within Manhattan distance ``k`` of ``cells``, minus ``cells`` itself."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    base = cells.as_grid()
    full = _full_mask(cells.rows, cells.cols)
    w = cells.cols + 1
    grown = base.bits
    for _ in range(k):
        grown = _dilate(grown, w, full)
    return CellSet(cells.rows, cells.cols, base.with_bits(grown & ~base.bits).red)


# ---------------------------------------------------------------------------
# structure of final configurations


def _components(bits: int, w: int, full: int) -> list[int]:
    comps = []
    while bits:
        comp = bits & -bits
        while True:
            grown = _dilate(comp, w, full) & bits
            if grown == comp:
                break
            comp = grown
        comps.append(comp)
        bits &= ~comp
    return comps


def _bounding(bits: int, rows: int, cols: int) -> Rect:
    w = cols + 1
    rowmask = (1 << cols) - 1
    top = bottom = None
    colbits = 0
    for r in range(rows):
        line = (bits >> (r * w)) & rowmask
        if line:
            if top is None:
                top = r + 1
            bottom = r + 1
            colbits |= line
    left = (colbits & -colbits).bit_length()
    right = colbits.bit_length()
    return Rect(top, left, bottom, right)


def _rect_pieces(config: GridConfig) -> list[tuple[int, Rect]]:
    full = _full_mask(config.rows, config.cols)
    w = config.cols + 1
    return [(c, _bounding(c, config.rows, config.cols)) for c in _components(config.bits, w, full)]


def is_final(config: GridConfig) -> bool:
    return percolate_step(config) == config


def is_final_structural(config: GridConfig) -> bool:
    """Every 4-connected red component is a full rectangle whose 2-collar holds no red cell."""
    full = _full_mask(config.rows, config.cols)
    w = config.cols + 1
    for comp, rect in _rect_pieces(config):
        if comp != rect.mask(config.rows, config.cols):
            return False
        ball = _dilate(_dilate(comp, w, full), w, full)
        if ball & ~comp & config.bits:
            return False
    return True


def rect_components(config: GridConfig) -> list[Rect]:
    """Rectangles making up a final configuration, sorted by (top, left)."""
    if not is_final(config):
        raise NotFinal("configuration is not a fixpoint of the update rule")
    rects = []
    for comp, rect in _rect_pieces(config):
        assert comp == rect.mask(config.rows, config.cols), "final component is not rectangular"
        rects.append(rect)
    return sorted(rects, key=lambda r: (r.top, r.left))


# ---------------------------------------------------------------------------
# substitution and renormalisation


def substitute_at(sigma: GridConfig, cell: Cell, tau: GridConfig) -> GridConfig:
    """Replace red cell ``(i, j)`` of ``sigma`` by the whole of ``tau``.

    The rest of row ``i`` is stretched to height ``tau.rows`` and the rest of
    column ``j`` to width ``tau.cols``, each stretched cell keeping its colour.
    """
    i, j = cell
    if cell not in sigma:
        raise CellNotRed(f"cell {cell} is not red")
    p, q = tau.rows, tau.cols
    rows, cols = sigma.rows + p - 1, sigma.cols + q - 1

    def source(k: int, pivot: int, span: int) -> int:
        if k < pivot:
            return k
        if k < pivot + span:
            return pivot
        return k - span + 1

    red = []
    for r in range(1, rows + 1):
        sr = source(r, i, p)
        for c in range(1, cols + 1):
            sc = source(c, j, q)
            if sr == i and sc == j:
                if tau.is_red(r - i + 1, c - j + 1):
                    red.append((r, c))
            elif sigma.is_red(sr, sc):
                red.append((r, c))
    return GridConfig.from_cells(rows, cols, red)


def fine_grain(config: GridConfig, k: int) -> GridConfig:
    """Blow every cell up into a ``k`` x ``k`` block of the same colour."""
    if k < 1:
        raise ValueError("k must be at least 1")
    red = [
        ((i - 1) * k + a, (j - 1) * k + b)
        for i, j in config.iter_red()
        for a in range(1, k + 1)
        for b in range(1, k + 1)
    ]
    return GridConfig.from_cells(config.rows * k, config.cols * k, red)


def find_fine_grain_counterexample(max_side: int = 4, k: int = 2) -> GridConfig | None:
    """Smallest percolating configuration whose ``k``-fold fine-graining does not percolate.

    Grids are scanned by increasing area, then by red-cell count.
    """
    shapes = sorted(
        ((r, c) for r in range(1, max_side + 1) for c in range(1, max_side + 1)),
        key=lambda rc: (rc[0] * rc[1], rc),
    )
    for rows, cols in shapes:
        full = _full_mask(rows, cols)
        w = cols + 1
        positions = [1 << ((i * w) + j) for i in range(rows) for j in range(cols)]
        candidates = []
        for subset in range(1 << len(positions)):
            bits = 0
            for idx, bit in enumerate(positions):
                if subset >> idx & 1:
                    bits |= bit
            if _closure_bits(bits, w, full) == full:
                candidates.append(bits)
        candidates.sort(key=lambda b: (b.bit_count(), b))
        for bits in candidates:
            g = GridConfig(rows, cols, bits)
            if not is_percolating(fine_grain(g, k)):
                return g
    return None


def family_A(m: int) -> GridConfig:
    """Red cells at (1,3k-1), (1,3k), (3k-1,1), (3k,1) for k = 1..m on a 3m x 3m grid."""
    if m < 1:
        raise ValueError("m must be at least 1")
    cells = []
    for k in range(1, m + 1):
        cells += [(1, 3 * k - 1), (1, 3 * k), (3 * k - 1, 1), (3 * k, 1)]
    return GridConfig.from_cells(3 * m, 3 * m, cells)


# ---------------------------------------------------------------------------
# text and svg formats


def format_grid(config: GridConfig) -> str:
    lines = [f"{config.rows} {config.cols}"]
    for i in range(1, config.rows + 1):
        lines.append("".join("#" if config.is_red(i, j) else "." for j in range(1, config.cols + 1)))
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> GridConfig:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty grid text")
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise ParseError(f"bad header line {lines[0]!r}")
    rows, cols = int(header[0]), int(header[1])
    if rows < 1 or cols < 1:
        raise ParseError("grid dimensions must be positive")
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(f"expected {rows} rows, found {len(body)}")
    red = []
    for i, line in enumerate(body, 1):
        if len(line) != cols or set(line) - {"#", "."}:
            raise ParseError(f"row {i} must be {cols} characters of '#' or '.'")
        red.extend((i, j) for j, ch in enumerate(line, 1) if ch == "#")
    return GridConfig.from_cells(rows, cols, red)


RED_FILL = "#d94f4f"
BLUE_FILL = "#4f86d9"


def to_svg(config: GridConfig, cell: int = 20) -> str:
    width, height = config.cols * cell, config.rows * cell
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for i in range(1, config.rows + 1):
        for j in range(1, config.cols + 1):
            fill = RED_FILL if config.is_red(i, j) else BLUE_FILL
            parts.append(
                f'<rect x="{(j - 1) * cell}" y="{(i - 1) * cell}" width="{cell}" height="{cell}" '
                f'fill="{fill}" stroke="#ffffff"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
