"""
Batched numeric kernels for the exhaustive diagram sweeps.

Each kernel has two backends with identical results:

* ``numba``: explicit loops compiled with ``@njit`` (the default when numba
  imports cleanly);
* ``numpy``: a vectorised / pure-numpy path, selected by setting the
  environment variable ``SCHUBSUPP_NO_NUMBA=1`` or passing
  ``backend="numpy"``.

Diagrams arrive as an ``(N, n)`` integer array of column bitmasks (bit
``i - 1`` set iff row ``i`` is a box).  Weight vectors are packed one
nibble per row (row ``i`` in bits ``4(i-1)..4i-1``), which is exact for
``n <= 15``.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "BACKEND", "available_backends", "r_stats_batch", "theta_batch",
    "support_packed", "unpack_weight", "NIBBLE",
]

NIBBLE = 4

try:
    from numba import njit
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

if os.environ.get("SCHUBSUPP_NO_NUMBA", "").strip() not in ("", "0"):
    BACKEND = "numpy"
else:
    BACKEND = "numba" if _HAVE_NUMBA else "numpy"


def available_backends() -> list[str]:
    return ["numba", "numpy"] if _HAVE_NUMBA else ["numpy"]


def _pick(backend: str | None) -> str:
    b = backend or BACKEND
    if b not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {b!r}")
    if b == "numba" and not _HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    return b


def unpack_weight(packed: int, n: int) -> tuple[int, ...]:
    return tuple((int(packed) >> (NIBBLE * k)) & 0xF for k in range(n))


# ---------------------------------------------------------------------------
# r-statistics
# ---------------------------------------------------------------------------

def _r_stats_loops(cols, n):
    N = cols.shape[0]
    out = np.zeros((N, 3), np.int64)
    box = np.zeros((n, n), np.bool_)
    for d in range(N):
        for i in range(n):
            for j in range(n):
                box[i, j] = (cols[d, j] >> i) & 1
        r1 = 0
        for j in range(n):
            blanks = 0
            for i in range(n):
                if box[i, j]:
                    r1 += blanks
                else:
                    blanks += 1
        r2 = 0
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    for j in range(n):
                        if box[a, j] or not box[b, j]:
                            continue
                        for k in range(j + 1, n):
                            if (not box[a, k]) and box[b, k] and box[c, j] != box[c, k]:
                                r2 += 1
        r3 = 0
        for a in range(n):
            for b in range(a + 1, n):
                for j in range(n):
                    if box[a, j] or not box[b, j]:
                        continue
                    for c in range(b + 1, n):
                        for e in range(c + 1, n):
                            for k in range(n):
                                if (not box[c, k]) and box[e, k]:
                                    r3 += 1
        out[d, 0] = r1
        out[d, 1] = r2
        out[d, 2] = r3
    return out


def _r_stats_numpy(cols: np.ndarray, n: int) -> np.ndarray:
    rows = np.arange(n)
    B = ((cols[:, None, :] >> rows[None, :, None]) & 1).astype(np.int64)  # (N, row, col)
    blank = 1 - B
    blanks_above = np.cumsum(blank, axis=1) - blank
    boxes_below = np.cumsum(B[:, ::-1], axis=1)[:, ::-1] - B
    r1 = (B * blanks_above).sum(axis=(1, 2))

    bb = blank[:, :, :, None] * blank[:, :, None, :]
    both_blank_above = np.cumsum(bb, axis=1) - bb
    both_box = B[:, :, :, None] * B[:, :, None, :]
    one_box = B[:, :, :, None] ^ B[:, :, None, :]
    one_box_below = np.cumsum(one_box[:, ::-1], axis=1)[:, ::-1] - one_box
    tri = np.triu(np.ones((n, n), np.int64), 1)
    r2 = (both_blank_above * both_box * one_box_below * tri).sum(axis=(1, 2, 3))

    up = (B * blanks_above).sum(axis=2)          # (N, row): r1 of the upper pair ending here
    down = (blank * boxes_below).sum(axis=2)     # (N, row): lower pairs starting here
    up_strictly_above = np.cumsum(up, axis=1) - up
    r3 = (down * up_strictly_above).sum(axis=1)
    return np.stack([r1, r2, r3], axis=1).astype(np.int64)


# ---------------------------------------------------------------------------
# support sets
# ---------------------------------------------------------------------------

def _support_one(colmasks, offsets, values, slot, cap):
    """Distinct packed weights over all column choices; ``-1`` work on cap."""
    cur = np.zeros(1, np.int64)
    work = 0
    for j in range(colmasks.shape[0]):
        s = slot[colmasks[j]]
        inc = values[offsets[s]:offsets[s + 1]]
        if inc.shape[0] == 1:
            cur = cur + inc[0]
            continue
        work += cur.shape[0] * inc.shape[0]
        if work > cap:
            return cur, -1
        nxt = (cur.reshape(-1, 1) + inc.reshape(1, -1)).ravel()
        cur = np.unique(nxt)
    return cur, work


def _support_one_loops(colmasks, offsets, values, slot, cap):
    # loop form of _support_one: np.unique is slow under numba, sort + compact is not
    cur = np.zeros(1, np.int64)
    work = 0
    for j in range(colmasks.shape[0]):
        s = slot[colmasks[j]]
        lo, hi = offsets[s], offsets[s + 1]
        m = cur.shape[0]
        k = hi - lo
        if k == 1:
            cur += values[lo]
            continue
        work += m * k
        if work > cap:
            return cur, -1
        nxt = np.empty(m * k, np.int64)
        for a in range(m):
            for b in range(k):
                nxt[a * k + b] = cur[a] + values[lo + b]
        nxt.sort()
        u = 1
        for t in range(1, nxt.shape[0]):
            if nxt[t] != nxt[u - 1]:
                nxt[u] = nxt[t]
                u += 1
        cur = nxt[:u].copy()
    return cur, work


def _theta_many(cols, offsets, values, slot, cap):
    N = cols.shape[0]
    out = np.zeros(N, np.int64)
    for d in range(N):
        cur, work = _support_one(cols[d], offsets, values, slot, cap)
        out[d] = cur.shape[0] if work >= 0 else -1
    return out


if _HAVE_NUMBA:
    _r_stats_nb = njit(cache=True)(_r_stats_loops)
    _support_one_nb = njit(cache=True)(_support_one_loops)

    @njit(cache=True)
    def _theta_many_nb(cols, offsets, values, slot, cap):
        N = cols.shape[0]
        out = np.zeros(N, np.int64)
        for d in range(N):
            cur, work = _support_one_nb(cols[d], offsets, values, slot, cap)
            out[d] = cur.shape[0] if work >= 0 else -1
        return out


def _as_cols(cols) -> np.ndarray:
    arr = np.asarray(cols, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr[None, :]
    return np.ascontiguousarray(arr)


def r_stats_batch(cols, n: int, backend: str | None = None,
                  chunk: int = 8192) -> np.ndarray:
    """``(N, 3)`` array of ``(r1, r2, r3)`` for a batch of diagrams."""
    arr = _as_cols(cols)
    if arr.shape[1] != n:
        raise ValueError(f"expected {n} columns, got {arr.shape[1]}")
    if _pick(backend) == "numba":
        return _r_stats_nb(arr, n)
    parts = [_r_stats_numpy(arr[s:s + chunk], n) for s in range(0, len(arr), chunk)]
    return np.concatenate(parts) if parts else np.zeros((0, 3), np.int64)


def _downset_table(masks, n: int, downsets):
    """CSR table of packed row-weights of each mask's Gale down-set."""
    slot = np.full(1 << n, -1, np.int64)
    offsets = [0]
    values: list[int] = []
    for s, m in enumerate(sorted(set(int(x) for x in masks))):
        slot[m] = s
        for r in downsets(m, n):
            values.append(_pack_rows(r))
        offsets.append(len(values))
    return (np.asarray(offsets, np.int64), np.asarray(values, np.int64), slot)


def _pack_rows(mask: int) -> int:
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out += 1 << (NIBBLE * i)
        mask >>= 1
        i += 1
    return out


def theta_batch(cols, n: int, downsets, backend: str | None = None,
                cap: int = 10**8) -> np.ndarray:
    """
    Number of distinct weights ``wt(C)`` over ``C <= D`` for each diagram.
    ``downsets(mask, n)`` yields the Gale down-set of a column as masks.
    Entries are ``-1`` where the work cap was hit.
    """
    arr = _as_cols(cols)
    offsets, values, slot = _downset_table(arr.ravel(), n, downsets)
    if _pick(backend) == "numba":
        return _theta_many_nb(arr, offsets, values, slot, cap)
    return _theta_many(arr, offsets, values, slot, cap)


def support_packed(colmasks, n: int, downsets, backend: str | None = None,
                   cap: int = 10**8) -> np.ndarray | None:
    """Sorted packed weights for one diagram, ``None`` if the cap was hit."""
    arr = np.ascontiguousarray(np.asarray(colmasks, dtype=np.int64))
    offsets, values, slot = _downset_table(arr, n, downsets)
    fn = _support_one_nb if _pick(backend) == "numba" else _support_one
    cur, work = fn(arr, offsets, values, slot, cap)
    return None if work < 0 else np.sort(cur)
