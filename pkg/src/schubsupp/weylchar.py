"""
Supports of the dual character of a flagged Weyl module, computed directly
from the diagram: the supports are exactly the weights ``wt(C)`` of the
diagrams ``C <= D`` (columnwise Gale order).

Weights are additive over columns, so the enumeration runs column by column
and keeps only the distinct partial weights after each column.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .diagram import Diagram

__all__ = [
    "SupportSet", "ResourceCapExceeded", "DEFAULT_CAP",
    "column_downset", "downset_masks", "support_set", "theta_D", "theta_many",
]

# work cap on partial-weight products; override with SCHUBSUPP_CAP
DEFAULT_CAP = int(os.environ.get("SCHUBSUPP_CAP", str(10**8)))


class ResourceCapExceeded(RuntimeError):
    """The enumeration would exceed the configured work cap."""


@dataclass(frozen=True)
class SupportSet:
    weights: frozenset[tuple[int, ...]]

    @property
    def theta(self) -> int:
        return len(self.weights)

    def to_dict(self) -> dict:
        return {"theta": self.theta,
                "weights": [list(w) for w in sorted(self.weights)]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


@lru_cache(maxsize=None)
def downset_masks(mask: int, n: int) -> tuple[int, ...]:
    """All row sets (as masks) below ``mask`` in Gale order, ascending."""
    rows = [i for i in range(1, n + 1) if mask >> (i - 1) & 1]
    out: list[int] = []

    # choose r_1 < r_2 < ... with r_t <= s_t
    def rec(t: int, lo: int, acc: int):
        if t == len(rows):
            out.append(acc)
            return
        for r in range(lo, rows[t] + 1):
            rec(t + 1, r + 1, acc | 1 << (r - 1))

    rec(0, 1, 0)
    return tuple(sorted(out))


def column_downset(S, n: int) -> list[frozenset[int]]:
    """``{R : |R| = |S|, R <= S}`` as row sets."""
    S = set(S)
    if any(not 1 <= s <= n for s in S):
        raise ValueError(f"{sorted(S)} is not a subset of [{n}]")
    mask = sum(1 << (s - 1) for s in S)
    return [frozenset(i for i in range(1, n + 1) if m >> (i - 1) & 1)
            for m in downset_masks(mask, n)]


def support_set(D: Diagram, cap: int = DEFAULT_CAP,
                backend: str | None = None) -> SupportSet:
    packed = kernels.support_packed(D.cols, D.n, downset_masks, backend, cap)
    if packed is None:
        raise ResourceCapExceeded(f"support enumeration exceeded cap {cap}")
    return SupportSet(frozenset(kernels.unpack_weight(p, D.n) for p in packed))


def theta_D(D: Diagram, cap: int = DEFAULT_CAP, backend: str | None = None) -> int:
    return support_set(D, cap, backend).theta


def theta_many(diagrams, n: int, cap: int = DEFAULT_CAP, backend: str | None = None):
    """Vector of ``theta_D`` over a batch of same-size diagrams (or column arrays)."""
    cols = [d.cols if isinstance(d, Diagram) else d for d in diagrams]
    out = kernels.theta_batch(cols, n, downset_masks, backend, cap)
    if (out < 0).any():
        raise ResourceCapExceeded(f"support enumeration exceeded cap {cap}")
    return out
