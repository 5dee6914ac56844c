"""
Diagrams in the square grid ``[n] x [n]``.

A diagram is stored as one bitmask per column: bit ``i - 1`` of
``cols[j - 1]`` is set iff the box ``(i, j)`` (row ``i``, column ``j``,
matrix coordinates) belongs to the diagram.

Text format: one line per row, ``#`` for a box and ``.`` for a blank,
e.g. the diagram ``({2,3,4}, {}, {1,2}, {3})`` is::

    ..#.
    #.#.
    #..#
    #...
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .permcore import MAX_N, Composition, PermLike, as_perm

__all__ = [
    "Diagram", "RStats", "rothe", "skyline", "gale_leq", "mask_gale_leq",
    "diagram_leq", "weight", "r1_local", "r_stats", "below", "r1_below",
    "configuration_class",
]


def _bits(mask: int) -> list[int]:
    """Rows (1-based) present in a column mask, top to bottom."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _mask(rows: Iterable[int]) -> int:
    m = 0
    for r in rows:
        m |= 1 << (r - 1)
    return m


@dataclass(frozen=True)
class Diagram:
    n: int
    cols: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(int(c) for c in self.cols)
        object.__setattr__(self, "cols", cols)
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"grid size {self.n} outside 0..{MAX_N}")
        if len(cols) != self.n:
            raise ValueError(f"expected {self.n} columns, got {len(cols)}")
        full = (1 << self.n) - 1
        if any(c & ~full or c < 0 for c in cols):
            raise ValueError("box outside the grid")

    # -- constructors -------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Diagram:
        return cls(n, (0,) * n)

    @classmethod
    def from_boxes(cls, n: int, boxes: Iterable[tuple[int, int]]) -> Diagram:
        cols = [0] * n
        for i, j in boxes:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"box {(i, j)} outside [{n}]x[{n}]")
            cols[j - 1] |= 1 << (i - 1)
        return cls(n, tuple(cols))

    @classmethod
    def from_columns(cls, n: int, columns: Iterable[Iterable[int]]) -> Diagram:
        columns = list(columns)
        if len(columns) != n:
            raise ValueError(f"expected {n} columns, got {len(columns)}")
        for col in columns:
            for r in col:
                if not 1 <= r <= n:
                    raise ValueError(f"row {r} outside [{n}]")
        return cls(n, tuple(_mask(c) for c in columns))

    @classmethod
    def parse(cls, text: str) -> Diagram:
        """Parse the ``.``/``#`` row format.  Blank lines are ignored."""
        rows = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        n = len(rows)
        boxes = []
        for i, line in enumerate(rows, 1):
            if len(line) != n:
                raise ValueError(f"row {i} has {len(line)} cells, expected {n}")
            for j, ch in enumerate(line, 1):
                if ch == "#":
                    boxes.append((i, j))
                elif ch != ".":
                    raise ValueError(f"bad cell {ch!r} at row {i}, column {j}")
        return cls.from_boxes(n, boxes)

    @classmethod
    def from_json(cls, data: str | dict) -> Diagram:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_boxes(data["n"], [tuple(b) for b in data["boxes"]])

    # -- views --------------------------------------------------------------

    @property
    def boxes(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for j, c in enumerate(self.cols, 1)
                         for i in _bits(c))

    @property
    def columns(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(c)) for c in self.cols)

    def __contains__(self, box: tuple[int, int]) -> bool:
        i, j = box
        return 1 <= j <= self.n and bool(self.cols[j - 1] >> (i - 1) & 1)

    def __len__(self) -> int:
        return sum(c.bit_count() for c in self.cols)

    def sorted_boxes(self) -> list[tuple[int, int]]:
        return sorted(self.boxes)

    def to_text(self) -> str:
        return "\n".join(
            "".join("#" if (i, j) in self else "." for j in range(1, self.n + 1))
            for i in range(1, self.n + 1))

    def to_dict(self) -> dict:
        return {"n": self.n, "boxes": [list(b) for b in self.sorted_boxes()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def __str__(self) -> str:
        return self.to_text()

    # -- edits --------------------------------------------------------------

    def move(self, src: tuple[int, int], dst: tuple[int, int]) -> Diagram:
        """Move a box within its column to a blank cell."""
        (i, j), (k, l) = src, dst
        if j != l or src not in self or dst in self:
            raise ValueError(f"cannot move {src} to {dst}")
        cols = list(self.cols)
        cols[j - 1] ^= (1 << (i - 1)) | (1 << (k - 1))
        return Diagram(self.n, tuple(cols))


class RStats(NamedTuple):
    r1: int
    r2: int
    r3: int

    @property
    def total(self) -> int:
        return self.r1 + self.r2 + self.r3


def rothe(w: PermLike) -> Diagram:
    """Boxes ``(i, j)`` with ``w(i) > j`` and ``w^{-1}(j) > i``."""
    w = as_perm(w)
    winv = w.inverse()
    n = w.n
    return Diagram.from_boxes(n, [(i, j) for i in range(1, n + 1)
                                  for j in range(1, n + 1)
                                  if w(i) > j and winv(j) > i])


def skyline(alpha: Composition | Iterable[int], n: int | None = None) -> Diagram:
    """Left-justified rows of lengths ``alpha_i`` in a grid of size ``n``."""
    parts = alpha.parts if isinstance(alpha, Composition) else tuple(alpha)
    if n is None:
        n = len(parts)
    if len(parts) > n:
        raise ValueError(f"{len(parts)} parts do not fit a grid of size {n}")
    if any(a > n for a in parts):
        raise ValueError(f"part exceeds grid size {n} in {parts}")
    return Diagram.from_boxes(n, [(i, j) for i, a in enumerate(parts, 1)
                                  for j in range(1, a + 1)])


def gale_leq(R: Iterable[int], S: Iterable[int]) -> bool:
    """Gale order on equal-size sets: sorted ``r_k <= s_k`` for all ``k``."""
    r, s = sorted(R), sorted(S)
    if len(r) != len(s):
        raise ValueError(f"Gale order needs equal sizes, got {len(r)} and {len(s)}")
    return all(a <= b for a, b in zip(r, s))


def mask_gale_leq(r: int, s: int) -> bool:
    """:func:`gale_leq` on row bitmasks; ``False`` on a size mismatch."""
    if r.bit_count() != s.bit_count():
        return False
    # R <= S iff every prefix [1..t] holds at least as many rows of R as of S
    rest = s
    while rest:
        low = rest & -rest
        prefix = (low << 1) - 1
        if (r & prefix).bit_count() < (s & prefix).bit_count():
            return False
        rest ^= low
    return True


def diagram_leq(C: Diagram, D: Diagram) -> bool:
    if C.n != D.n:
        raise ValueError(f"grid mismatch: {C.n} vs {D.n}")
    return all(mask_gale_leq(c, d) for c, d in zip(C.cols, D.cols))


def weight(D: Diagram) -> tuple[int, ...]:
    """Per-row box counts."""
    return tuple(sum(c >> i & 1 for c in D.cols) for i in range(D.n))


def r1_local(D: Diagram, i: int, j: int) -> int:
    """Blank cells above the box ``(i, j)`` in its column."""
    if (i, j) not in D:
        raise ValueError(f"{(i, j)} is not a box of the diagram")
    above = D.cols[j - 1] & ((1 << (i - 1)) - 1)
    return (i - 1) - above.bit_count()


def r_stats(D: Diagram) -> RStats:
    """
    Count the configurations (A), (B)/(B'), (C)/(C')/(C'') by scanning every
    row/column tuple.  Only the drawn cells are constrained.
    """
    n = D.n
    box = [[(i, j) in D for j in range(1, n + 1)] for i in range(1, n + 1)]
    rows, cols = range(n), range(n)

    r1 = sum(1 for j in cols for a, b in itertools.combinations(rows, 2)
             if not box[a][j] and box[b][j])

    r2 = 0
    for a, b, c in itertools.combinations(rows, 3):
        for j, k in itertools.combinations(cols, 2):
            if (not box[a][j] and not box[a][k] and box[b][j] and box[b][k]
                    and box[c][j] != box[c][k]):
                r2 += 1

    r3 = 0
    for a, b, c, d in itertools.combinations(rows, 4):
        for j in cols:
            if box[a][j] or not box[b][j]:
                continue
            for k in cols:
                if not box[c][k] and box[d][k]:
                    r3 += 1
    return RStats(r1, r2, r3)


def below(D: Diagram, i: int, shift: bool = False) -> Diagram:
    """
    Boxes strictly below row ``i``.  With ``shift=True`` the rows are
    renumbered so that row ``i + 1`` becomes row 1; this is the diagram
    living in the grid of rows ``i+1..n`` (padded with empty rows at the
    bottom), whose statistics only see cells below row ``i``.
    """
    if not 0 <= i <= D.n:
        raise ValueError(f"row {i} outside 0..{D.n}")
    cols = tuple(c >> i << i for c in D.cols)
    if shift:
        cols = tuple(c >> i for c in cols)
    return Diagram(D.n, cols)


def r1_below(D: Diagram, i: int) -> int:
    """(A)-configurations with both cells strictly below row ``i``."""
    return r_stats(below(D, i, shift=True)).r1


def configuration_class(D: Diagram, cells: Iterable[tuple[int, int]]) -> str | None:
    """
    Which configuration of (A), (B), (B'), (C), (C'), (C'') the given cells
    form inside ``D``, or ``None``.
    """
    cells = sorted(set(cells))
    inD = [c in D for c in cells]
    rows = sorted({i for i, _ in cells})
    colset = sorted({j for _, j in cells})
    if len(cells) == 2:
        (a, j), (b, k) = cells
        if j == k and not inD[0] and inD[1]:
            return "A"
        return None
    if len(cells) == 6:
        if len(rows) != 3 or len(colset) != 2:
            return None
        (a, b, c), (j, k) = rows, colset
        if ((a, j) in D or (a, k) in D or (b, j) not in D or (b, k) not in D):
            return None
        left, right = (c, j) in D, (c, k) in D
        if left and not right:
            return "B"
        if right and not left:
            return "B'"
        return None
    if len(cells) == 4:
        if len(rows) != 4:
            return None
        by_row = {i: j for i, j in cells}
        a, b, c, d = rows
        j1, j2 = by_row[a], by_row[c]
        if by_row[b] != j1 or by_row[d] != j2:
            return None
        if (a, j1) in D or (b, j1) not in D or (c, j2) in D or (d, j2) not in D:
            return None
        if j1 < j2:
            return "C"
        return "C'" if j1 > j2 else "C''"
    return None
