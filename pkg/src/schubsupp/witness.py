"""
Constructive lower-bound witnesses.

:func:`full_witness` runs three procedures on a diagram ``D``:

* ``algorithm1``: a chain ``C^1 < ... < C^{r1} < D`` obtained by
  repeatedly lifting the top-left-most box that has a blank above it;
* ``algorithm2(D, i1, i2)``: for each row pair, lifts boxes of row ``i2``
  over a moving pivot in row ``i1`` (one diagram per (B)/(B') configuration
  on those rows);
* ``algorithm3(D, i, j)``: for each box with a blank above it, combines
  lifts of that box with the ``algorithm1`` chain of the rows below it.

Together they produce ``r1 + r2 + r3`` diagrams below ``D`` with pairwise
distinct weights; :meth:`WitnessSet.check` verifies that claim for one
diagram and reports any failure as data.

:func:`pattern_witnesses` maps pattern occurrences of ``w`` to
configurations inside the Rothe diagram ``D(w)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .diagram import (Diagram, RStats, configuration_class, mask_gale_leq,
                      r1_local, r_stats, rothe)
from .permcore import Permutation, PermLike, as_perm, pattern_occurrences

__all__ = [
    "algorithm1", "algorithm1_moves", "algorithm2", "algorithm3", "algorithm3_step0",
    "full_witness", "WitnessSet", "Counterexample", "check_masks",
    "PATTERN_TABLE", "PATTERN_COEFFICIENTS", "PatternWitness",
    "pattern_witnesses", "all_pattern_witnesses", "recover_positions",
]

Cols = tuple[int, ...]


def _has(cols, i: int, j: int) -> bool:
    return bool(cols[j - 1] >> (i - 1) & 1)


def _lift_top(mask: int, rows_upto: int) -> int:
    """Slide the boxes in rows ``1..rows_upto`` of a column to the top."""
    low = (1 << rows_upto) - 1
    k = (mask & low).bit_count()
    return (mask & ~low) | ((1 << k) - 1)


# ---------------------------------------------------------------------------
# Algorithm 1
# ---------------------------------------------------------------------------

def _alg1(cols: Cols, n: int, floor: int = 0) -> tuple[list[Cols], list]:
    """
    Production order ``C^{r1}, C^{r1-1}, ..., C^1`` and the moves made.
    Rows ``<= floor`` are outside the grid.
    """
    cur = list(cols)
    out: list[Cols] = []
    moves = []
    while True:
        hit = None
        # the top-left-most box with a blank anywhere above it always has
        # the cell directly above it blank
        for i in range(floor + 2, n + 1):
            bit, up = 1 << (i - 1), 1 << (i - 2)
            for j in range(n):
                if cur[j] & bit and not cur[j] & up:
                    hit = (i, j + 1)
                    break
            if hit:
                break
        if hit is None:
            return out, moves
        i, j = hit
        cur[j - 1] ^= (1 << (i - 1)) | (1 << (i - 2))
        out.append(tuple(cur))
        moves.append(((i, j), (i - 1, j)))


def algorithm1(D: Diagram) -> list[Diagram]:
    """The chain ``[C^1, ..., C^{r1}]``, increasing in Gale order."""
    chain, _ = _alg1(D.cols, D.n)
    return [Diagram(D.n, c) for c in reversed(chain)]


def algorithm1_moves(D: Diagram) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Box moves ``(from, to)`` in the order the procedure performs them."""
    return _alg1(D.cols, D.n)[1]


# ---------------------------------------------------------------------------
# Algorithm 2
# ---------------------------------------------------------------------------

def _r2_table(cols: Cols, n: int, i1: int, i2: int) -> dict[tuple[int, int], int]:
    """Non-zero ``r2(D; i1, i2; a, b)`` for column pairs ``a < b``."""
    above = (1 << (i1 - 1)) - 1
    table = {}
    for a, b in combinations(range(1, n + 1), 2):
        ca, cb = cols[a - 1], cols[b - 1]
        if not (ca >> (i1 - 1) & 1 and cb >> (i1 - 1) & 1):
            continue
        if (ca >> (i2 - 1) & 1) == (cb >> (i2 - 1) & 1):
            continue
        both_blank = (~(ca | cb)) & above
        if both_blank:
            table[(a, b)] = both_blank.bit_count()
    return table


def _alg2(cols: Cols, n: int, i1: int, i2: int) -> list[Cols]:
    r2 = _r2_table(cols, n, i1, i2)
    if not r2:
        return []

    def r2_of(j: int, jp: int) -> int:
        return r2.get((j, jp) if j < jp else (jp, j), 0)

    # Step 0
    cur = [_lift_top(c, i1 - 1) for c in cols]
    out: list[Cols] = []
    while True:
        # Step 1: leftmost pivot
        pivot = None
        partners: list[int] = []
        for j in range(1, n + 1):
            if not (_has(cur, i1, j) and not _has(cur, i2, j)):
                continue
            partners = [jp for jp in range(1, n + 1)
                        if _has(cur, i1, jp) and _has(cur, i2, jp) and r2_of(j, jp) > 0]
            if partners:
                pivot = j
                break
        if pivot is None:
            return out
        j = pivot
        m = 1
        while True:
            # Step 2
            js = [jp for jp in partners if r2_of(j, jp) >= m]
            moved = list(cur)
            for jp in js:
                moved[jp - 1] ^= (1 << (i2 - 1)) | (1 << (i1 - m - 1))
                out.append(tuple(moved))
            # Step 3
            if any(r2_of(j, jp) > m for jp in partners):
                m += 1
                continue
            cur[j - 1] ^= (1 << (i1 - 1)) | (1 << (i1 - 2))
            break


def algorithm2(D: Diagram, i1: int, i2: int) -> list[Diagram]:
    """The set ``S_{i1,i2}(D)`` in generation order."""
    if not 1 < i1 < i2 <= D.n:
        raise ValueError(f"need 1 < i1 < i2 <= {D.n}, got {(i1, i2)}")
    return [Diagram(D.n, c) for c in _alg2(D.cols, D.n, i1, i2)]


# ---------------------------------------------------------------------------
# Algorithm 3
# ---------------------------------------------------------------------------

def _alg3_top(cols: Cols, i: int, j: int) -> list[int]:
    # Step 0: rows above i, plus row i left of column j, slide to the top
    top_mask = (1 << i) - 1
    return [(_lift_top(c, i) if c_idx < j else _lift_top(c, i - 1)) & top_mask
            for c_idx, c in enumerate(cols, 1)]


def _alg3(cols: Cols, n: int, i: int, j: int) -> list[Cols]:
    col = cols[j - 1]
    lift = (i - 1) - (col & ((1 << (i - 1)) - 1)).bit_count()
    if not col >> (i - 1) & 1 or lift == 0:
        raise ValueError(f"{(i, j)} is not a box with a blank above it")
    top = _alg3_top(cols, i, j)
    # Step 1: algorithm 1 on the rows below i
    lower = tuple(c >> i << i for c in cols)
    chain, _ = _alg1(lower, n, floor=i)
    chain.reverse()
    out: list[Cols] = []
    for low in chain:
        base = [t | b for t, b in zip(top, low)]
        for q in range(1, lift + 1):
            c = list(base)
            if q > 1:
                c[j - 1] ^= (1 << (i - 1)) | (1 << (i - q))
            out.append(tuple(c))
    return out


def algorithm3(D: Diagram, i: int, j: int) -> list[Diagram]:
    """``T_{i,j}(D)``, ordered by chain index then by lift height."""
    return [Diagram(D.n, c) for c in _alg3(D.cols, D.n, i, j)]


def algorithm3_step0(D: Diagram, i: int, j: int) -> Diagram:
    """The diagram after Step 0 of Algorithm 3, before any pivot lift."""
    if r1_local(D, i, j) == 0:
        raise ValueError(f"{(i, j)} is not a PIVOT")
    top = _alg3_top(D.cols, i, j)
    return Diagram(D.n, tuple(t | (c >> i << i) for t, c in zip(top, D.cols)))


def _pivots(cols: Cols, n: int) -> list[tuple[int, int]]:
    out = []
    for i in range(2, n + 1):
        for j in range(1, n + 1):
            c = cols[j - 1]
            if c >> (i - 1) & 1 and (c & ((1 << (i - 1)) - 1)).bit_count() < i - 1:
                out.append((i, j))
    return out


# ---------------------------------------------------------------------------
# full witness set and its validation
# ---------------------------------------------------------------------------

@dataclass
class Counterexample:
    """A failed witness invariant, kept as inspectable data."""

    kind: str
    diagram: Diagram
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "diagram": self.diagram.to_text(),
                "boxes": self.diagram.to_dict()["boxes"], "detail": self.detail}


@dataclass
class WitnessSet:
    source: Diagram
    chain1: list[Diagram]
    sets2: dict[tuple[int, int], list[Diagram]]
    sets3: dict[tuple[int, int], list[Diagram]]

    @property
    def total(self) -> int:
        return (len(self.chain1) + sum(map(len, self.sets2.values()))
                + sum(map(len, self.sets3.values())))

    def labelled(self):
        for p, C in enumerate(self.chain1, 1):
            yield ("alg1", p), C
        for key, group in self.sets2.items():
            for t, C in enumerate(group, 1):
                yield ("alg2", key, t), C
        for key, group in self.sets3.items():
            for t, C in enumerate(group, 1):
                yield ("alg3", key, t), C

    def check(self, stats: RStats | None = None) -> list[Counterexample]:
        D = self.source
        return check_masks(
            D.cols, D.n,
            [c.cols for c in self.chain1],
            {k: [c.cols for c in v] for k, v in self.sets2.items()},
            {k: [c.cols for c in v] for k, v in self.sets3.items()},
            stats or r_stats(D))

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_text(),
            "total": self.total,
            "algorithm1": [c.to_text() for c in self.chain1],
            "algorithm2": {f"{a},{b}": [c.to_text() for c in v]
                           for (a, b), v in self.sets2.items()},
            "algorithm3": {f"{a},{b}": [c.to_text() for c in v]
                           for (a, b), v in self.sets3.items()},
        }


def _witness_masks(cols: Cols, n: int):
    chain, _ = _alg1(cols, n)
    chain.reverse()
    sets2 = {}
    for i1 in range(2, n + 1):
        for i2 in range(i1 + 1, n + 1):
            s = _alg2(cols, n, i1, i2)
            if s:
                sets2[(i1, i2)] = s
    sets3 = {}
    for i, j in _pivots(cols, n):
        t = _alg3(cols, n, i, j)
        if t:
            sets3[(i, j)] = t
    return chain, sets2, sets3


def full_witness(D: Diagram) -> WitnessSet:
    chain, sets2, sets3 = _witness_masks(D.cols, D.n)
    wrap = lambda cs: [Diagram(D.n, c) for c in cs]  # noqa: E731
    return WitnessSet(D, wrap(chain),
                      {k: wrap(v) for k, v in sets2.items()},
                      {k: wrap(v) for k, v in sets3.items()})


@lru_cache(maxsize=None)
def _nibbles(n: int) -> tuple[int, ...]:
    """Packed per-row weight of every column mask."""
    out = []
    for m in range(1 << n):
        out.append(sum(1 << (4 * i) for i in range(n) if m >> i & 1))
    return tuple(out)


def _packed_weight(cols: Cols, table) -> int:
    return sum(table[c] for c in cols)


def _unpack(p: int, n: int) -> list[int]:
    return [(p >> (4 * i)) & 0xF for i in range(n)]


def check_masks(cols: Cols, n: int, chain, sets2, sets3,
                stats: RStats | tuple[int, int, int]) -> list[Counterexample]:
    """
    Validate a witness set given as column-mask tuples: counts match the
    r-statistics, every witness is strictly below the source, and all
    weights (the source's included) are pairwise distinct.
    """
    bad: list[Counterexample] = []
    r1, r2, r3 = stats
    got = (len(chain), sum(map(len, sets2.values())), sum(map(len, sets3.values())))
    D = None

    def diag():
        nonlocal D
        if D is None:
            D = Diagram(n, cols)
        return D

    if got != (r1, r2, r3):
        bad.append(Counterexample("count", diag(),
                                  {"expected": [r1, r2, r3], "got": list(got)}))
    table = _nibbles(n)
    seen = {_packed_weight(cols, table): ("source",)}

    def visit(label, c):
        if c == cols or not all(mask_gale_leq(a, b) for a, b in zip(c, cols)):
            bad.append(Counterexample("not_below", diag(), {
                "witness": list(label), "boxes": Diagram(n, c).to_dict()["boxes"]}))
        p = _packed_weight(c, table)
        other = seen.get(p)
        if other is not None:
            bad.append(Counterexample("weight_collision", diag(), {
                "first": list(other), "second": list(label),
                "weight": _unpack(p, n)}))
        else:
            seen[p] = label

    for p, c in enumerate(chain, 1):
        visit(("alg1", p), c)
    for key, group in sets2.items():
        for t, c in enumerate(group, 1):
            visit(("alg2", list(key), t), c)
    for key, group in sets3.items():
        for t, c in enumerate(group, 1):
            visit(("alg3", list(key), t), c)
    return bad


# ---------------------------------------------------------------------------
# pattern witnesses
# ---------------------------------------------------------------------------

# coefficient a_u of p_u(w) in the pattern lower bound
PATTERN_COEFFICIENTS: dict[str, int] = {
    "132": 1, "1432": 1, "13254": 1, "14253": 3, "14352": 1, "15243": 4,
    "15324": 1, "15342": 2, "15432": 1, "24153": 1, "25143": 2, "35142": 1,
}

# Per pattern u, one entry per generated subdiagram: its configuration class
# and its cells as (r, k), meaning the box (i_r, w(i_k)) for an occurrence
# i_1 < ... < i_m of u in w.
PATTERN_TABLE: dict[str, list[tuple[str, tuple[tuple[int, int], ...]]]] = {
    "132": [("A", ((1, 3), (2, 3)))],
    "1432": [("B", ((1, 4), (1, 3), (2, 4), (2, 3), (3, 4), (3, 3)))],
    "13254": [("C", ((1, 3), (2, 3), (3, 5), (4, 5)))],
    "14253": [
        ("B'", ((1, 3), (1, 5), (2, 3), (2, 5), (4, 3), (4, 5))),
        ("C", ((1, 3), (2, 3), (3, 5), (4, 5))),
        ("C''", ((1, 5), (2, 5), (3, 5), (4, 5))),
    ],
    "14352": [("B", ((1, 5), (1, 3), (2, 5), (2, 3), (4, 5), (4, 3)))],
    "15243": [
        ("B'", ((1, 3), (1, 5), (2, 3), (2, 5), (4, 3), (4, 5))),
        ("C", ((1, 3), (2, 3), (3, 5), (4, 5))),
        ("C'", ((1, 4), (2, 4), (3, 5), (4, 5))),
        ("C''", ((1, 5), (2, 5), (3, 5), (4, 5))),
    ],
    "15324": [("B", ((1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)))],
    "15342": [
        ("B", ((1, 5), (1, 3), (2, 5), (2, 3), (4, 5), (4, 3))),
        ("B", ((1, 5), (1, 4), (2, 5), (2, 4), (3, 5), (3, 4))),
    ],
    "15432": [("B", ((1, 5), (1, 3), (2, 5), (2, 3), (4, 5), (4, 3)))],
    "24153": [("C''", ((1, 5), (2, 5), (3, 5), (4, 5)))],
    "25143": [
        ("C'", ((1, 4), (2, 4), (3, 5), (4, 5))),
        ("C''", ((1, 5), (2, 5), (3, 5), (4, 5))),
    ],
    "35142": [("C'", ((1, 4), (2, 4), (3, 5), (4, 5)))],
}


def _cells(w: Permutation, occ: tuple[int, ...], spec) -> frozenset[tuple[int, int]]:
    return frozenset((occ[r - 1], w(occ[k - 1])) for r, k in spec)


def _self_check():
    for u, entries in PATTERN_TABLE.items():
        if len(entries) != PATTERN_COEFFICIENTS[u]:
            raise AssertionError(f"pattern {u}: {len(entries)} entries, "
                                 f"coefficient {PATTERN_COEFFICIENTS[u]}")
        perm = Permutation.parse(u)
        occ = tuple(range(1, perm.n + 1))
        D = rothe(perm)
        for label, spec in entries:
            got = configuration_class(D, _cells(perm, occ, spec))
            if got != label:
                raise AssertionError(f"pattern {u}: entry {spec} is {got}, expected {label}")


_self_check()


@dataclass(frozen=True)
class PatternWitness:
    pattern: Permutation
    occurrence: tuple[int, ...]
    subdiagrams: tuple[frozenset[tuple[int, int]], ...]
    classes: tuple[str, ...]


def pattern_witnesses(w: PermLike, u: PermLike) -> list[PatternWitness]:
    """One record per occurrence of ``u`` in ``w``, carrying ``a_u`` box sets."""
    w, u = as_perm(w), as_perm(u)
    key = str(u)
    if key not in PATTERN_TABLE:
        raise ValueError(f"no witness construction for pattern {key}")
    entries = PATTERN_TABLE[key]
    out = []
    for occ in pattern_occurrences(w, u):
        out.append(PatternWitness(
            u, occ,
            tuple(_cells(w, occ, spec) for _, spec in entries),
            tuple(label for label, _ in entries)))
    return out


def all_pattern_witnesses(w: PermLike) -> list[PatternWitness]:
    w = as_perm(w)
    out = []
    for u in PATTERN_TABLE:
        out.extend(pattern_witnesses(w, u))
    return out


def recover_positions(w: PermLike, cells) -> tuple[int, ...]:
    """
    Positions of the occurrence that generated a configuration in ``D(w)``:
    the rows of its cells plus ``w^{-1}`` of the columns that identify it.
    """
    w = as_perm(w)
    winv = w.inverse()
    cells = sorted(cells)
    rows = sorted({i for i, _ in cells})
    if len(cells) == 2:
        extra = {winv(cells[0][1])}
    elif len(cells) == 6:
        extra = {winv(j) for j in {j for _, j in cells}}
    elif len(cells) == 4:
        lowest = max(cells)
        extra = {winv(lowest[1])}
    else:
        raise ValueError(f"{len(cells)} cells is not a configuration")
    return tuple(sorted(set(rows) | extra))
