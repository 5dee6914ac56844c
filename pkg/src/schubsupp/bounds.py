"""
Lower bounds on the number of supports, extremal values over ``S_n``, the
pattern-expansion coefficients ``c_u`` / ``d_u``, and the sweeps that check
all of them.

Permutation sweeps run over ``S_n`` in lexicographic order in chunks of
``CHUNK`` permutations.  Chunks are independent (each owns a fresh
Schubert cache), so they can be farmed out to worker processes and a sweep
can resume from a checkpoint file after interruption.
"""

from __future__ import annotations

import itertools
import json
import logging
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import kernels
from .diagram import Diagram, r_stats, rothe, skyline
from .permcore import (Composition, Permutation, PermLike, as_perm, is_layered,
                       macdonald_nu, pattern_profile)
from .poly import SchubertCache, is_zero_one, key_polynomial
from .weylchar import support_set, theta_D, theta_many
from .witness import PATTERN_COEFFICIENTS, _witness_masks, check_masks

log = logging.getLogger(__name__)

__all__ = [
    "CHUNK", "BoundReport", "schubert_lower_bound", "key_bound_terms",
    "key_lower_bound", "diagram_lower_bound", "schubert_report", "key_report",
    "diagram_report", "CoefficientTable", "coefficient_tables", "ExtremalRow",
    "extremal_search", "ConjectureReport", "conjecture_sweep", "SweepResult",
    "verify_thm11", "verify_thm12", "verify_thm14", "verify_keyres",
    "verify_witness", "verify_macdonald", "verify_prop21", "verify_prop21_keys",
    "verify_pattern_witnesses", "expansion_residuals", "perm_records",
    "TABLE4", "TABLE3", "all_diagrams",
]

CHUNK = 10_000

# nonzero (c_u, d_u) for u in S_m, m <= 5
TABLE4: dict[str, tuple[int, int]] = {
    "132": (1, 1), "1432": (1, 1), "12453": (1, 1), "15342": (2, 2),
    "12534": (1, 1), "15423": (1, 1), "12543": (5, 4), "15432": (3, 3),
    "13254": (3, 2), "21453": (1, 1), "13524": (3, 2), "21534": (1, 1),
    "13542": (4, 3), "21543": (5, 4), "14253": (3, 3), "24153": (1, 1),
    "14352": (1, 1), "25143": (2, 2), "14523": (1, 1), "31524": (1, 1),
    "14532": (1, 1), "31542": (2, 2), "15243": (4, 4), "35142": (1, 1),
    "15324": (1, 1),
}

# n -> (alpha_n, attainers, beta_n, attainers)
TABLE3: dict[int, tuple[int, tuple[str, ...], int, tuple[str, ...]]] = {
    1: (1, ("1",), 1, ("1",)),
    2: (1, ("12", "21"), 1, ("12", "21")),
    3: (2, ("132",), 2, ("132",)),
    4: (5, ("1432",), 5, ("1432",)),
    5: (14, ("12543", "15432", "21543"), 14, ("15432",)),
    6: (84, ("126543", "216543"), 65, ("126543", "216543")),
    7: (660, ("1327654",), 347, ("1276543", "2176543")),
    8: (9438, ("13287654",), 2151, ("13287654",)),
    9: (163592, ("132987654",), 17319, ("132987654",)),
}


# ---------------------------------------------------------------------------
# single-subject bounds
# ---------------------------------------------------------------------------

_PATTERN_KEYS = {tuple(int(ch) for ch in u): a for u, a in PATTERN_COEFFICIENTS.items()}


def _schubert_bound_from_profile(profile) -> int:
    return 1 + sum(a * profile.get(u, 0) for u, a in _PATTERN_KEYS.items())


def schubert_lower_bound(w: PermLike) -> int:
    """``1 + p_132 + p_1432 + p_13254 + 3 p_14253 + ... + p_35142``."""
    return _schubert_bound_from_profile(pattern_profile(w, 5))


def key_bound_terms(alpha: Composition | Iterable[int]) -> tuple[int, int, int]:
    """The three inversion sums; they equal ``r1, r2, r3`` of the skyline diagram."""
    a = alpha.parts if isinstance(alpha, Composition) else tuple(alpha)
    n = len(a)
    s1 = sum(a[j] - a[i] for i, j in itertools.combinations(range(n), 2) if a[i] < a[j])
    s2 = sum((a[j] - a[k]) * (a[k] - a[i])
             for i, j, k in itertools.combinations(range(n), 3)
             if a[i] < a[k] < a[j])
    s3 = sum((a[j] - a[i]) * (a[l] - a[k])
             for i, j, k, l in itertools.combinations(range(n), 4)
             if a[i] < a[j] and a[k] < a[l])
    return s1, s2, s3


def key_lower_bound(alpha: Composition | Iterable[int]) -> int:
    return 1 + sum(key_bound_terms(alpha))


def diagram_lower_bound(D: Diagram) -> int:
    return 1 + r_stats(D).total


@dataclass(frozen=True)
class BoundReport:
    subject: str
    theta: int
    nu_or_spec: int | None
    lower_bound: int
    zero_one: bool | None = None

    @property
    def slack(self) -> int:
        return self.theta - self.lower_bound

    @property
    def holds(self) -> bool:
        upper = self.nu_or_spec if self.nu_or_spec is not None else self.theta
        return self.lower_bound <= self.theta <= upper

    def to_dict(self) -> dict:
        return {"subject": self.subject, "theta": self.theta,
                "nu_or_spec": self.nu_or_spec, "lower_bound": self.lower_bound,
                "slack": self.slack, "zero_one": self.zero_one}


def schubert_report(w: PermLike) -> BoundReport:
    w = as_perm(w)
    f = SchubertCache().get(w)
    return BoundReport(str(w), theta_D(rothe(w)), f.specialize_ones(),
                       schubert_lower_bound(w), is_zero_one(f))


def key_report(alpha: Composition | Iterable[int]) -> BoundReport:
    a = alpha if isinstance(alpha, Composition) else Composition(tuple(alpha))
    f = key_polynomial(a)
    grid = max(len(a), max(a.parts))
    return BoundReport(str(a), theta_D(skyline(a, grid)), f.specialize_ones(),
                       key_lower_bound(a), is_zero_one(f))


def diagram_report(D: Diagram) -> BoundReport:
    return BoundReport(D.to_text().replace("\n", "/"), theta_D(D), None,
                       diagram_lower_bound(D))


# ---------------------------------------------------------------------------
# chunked permutation sweeps
# ---------------------------------------------------------------------------

def _chunks(total: int, start: int = 0) -> list[tuple[int, int]]:
    return [(s, min(s + CHUNK, total)) for s in range(start, total, CHUNK)]


def perm_records(n: int, start: int, stop: int, lower: bool = False):
    """
    ``(word, nu, theta)`` (plus the pattern lower bound when ``lower``) for
    the permutations of ``S_n`` with lexicographic index in ``[start, stop)``.
    ``nu`` comes from the Schubert polynomial, ``theta`` from the diagram.
    """
    cache = SchubertCache()
    words = list(itertools.islice(itertools.permutations(range(1, n + 1)), start, stop))
    thetas = theta_many([rothe(w).cols for w in words], n)
    out = []
    for word, th in zip(words, thetas):
        nu = cache.get(word).specialize_ones()
        rec = (word, nu, int(th))
        if lower:
            rec += (_schubert_bound_from_profile(pattern_profile(word, 5)),)
        out.append(rec)
    return out


def _load_checkpoint(path, task: str, n: int):
    if not path or not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    if data.get("task") != task or data.get("n") != n:
        raise ValueError(f"checkpoint {path} belongs to {data.get('task')} n={data.get('n')}")
    return data


def _save_checkpoint(path, task: str, n: int, nxt: int, state: dict):
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        json.dump({"schema": 1, "task": task, "n": n, "next": nxt, "state": state}, fh)
    os.replace(tmp, path)


def _sweep(task: str, n: int, job: Callable, fold: Callable, state: dict,
           workers: int = 1, checkpoint: str | None = None,
           progress: Callable[[int, int], None] | None = None) -> dict:
    """Run ``job(n, start, stop)`` over all chunks, folding results into ``state``."""
    total = math.factorial(n)
    start = 0
    saved = _load_checkpoint(checkpoint, task, n)
    if saved:
        start, state = saved["next"], saved["state"]
        log.info("resuming %s n=%d at %d/%d", task, n, start, total)
    chunks = _chunks(total, start)
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = pool.map(job, *zip(*[(n, a, b) for a, b in chunks]))
            for (a, b), res in zip(chunks, results):
                state = fold(state, res)
                _after_chunk(task, n, b, total, state, checkpoint, progress)
    else:
        for a, b in chunks:
            state = fold(state, job(n, a, b))
            _after_chunk(task, n, b, total, state, checkpoint, progress)
    return state


def _after_chunk(task, n, done, total, state, checkpoint, progress):
    if checkpoint:
        _save_checkpoint(checkpoint, task, n, done, state)
    if progress:
        progress(done, total)


# ---------------------------------------------------------------------------
# extremal values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtremalRow:
    n: int
    alpha: int
    alpha_set: tuple[str, ...]
    beta: int
    beta_set: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"n": self.n, "alpha": self.alpha, "alpha_attainers": list(self.alpha_set),
                "beta": self.beta, "beta_attainers": list(self.beta_set)}


def _extremal_job(n: int, start: int, stop: int):
    return [(w, nu, th) for w, nu, th in perm_records(n, start, stop)]


def _merge_max(best: int, words: list, value: int, word) -> tuple[int, list]:
    if value > best:
        return value, [list(word)]
    if value == best:
        words.append(list(word))
    return best, words


def _extremal_fold(state: dict, records) -> dict:
    a, aw, b, bw = state["alpha"], state["alpha_set"], state["beta"], state["beta_set"]
    for word, nu, th in records:
        a, aw = _merge_max(a, aw, nu, word)
        b, bw = _merge_max(b, bw, th, word)
    return {"alpha": a, "alpha_set": aw, "beta": b, "beta_set": bw}


def _fmt(word) -> str:
    return str(Permutation(tuple(word)))


def extremal_search(n: int, workers: int = 1, checkpoint: str | None = None,
                    progress=None) -> ExtremalRow:
    """``alpha_n = max nu_w`` and ``beta_n = max theta_w`` with full argmax sets."""
    state = _sweep("extremal", n, _extremal_job, _extremal_fold,
                   {"alpha": 0, "alpha_set": [], "beta": 0, "beta_set": []},
                   workers, checkpoint, progress)
    key = lambda ws: tuple(sorted(_fmt(w) for w in ws))  # noqa: E731
    return ExtremalRow(n, state["alpha"], key(state["alpha_set"]),
                       state["beta"], key(state["beta_set"]))


# ---------------------------------------------------------------------------
# c_u / d_u
# ---------------------------------------------------------------------------

@dataclass
class CoefficientTable:
    """``(c_u, d_u)`` for every ``u`` in ``S_1 .. S_M``, keyed by word."""

    max_m: int
    entries: dict[tuple[int, ...], tuple[int, int]]
    nu: dict[tuple[int, ...], int] = field(repr=False, default_factory=dict)
    theta: dict[tuple[int, ...], int] = field(repr=False, default_factory=dict)

    def __getitem__(self, u: PermLike) -> tuple[int, int]:
        return self.entries[as_perm(u).word]

    def nonzero(self, max_m: int | None = None) -> list[tuple[str, int, int]]:
        """Rows with ``c != 0`` or ``d != 0``, ordered by size then word."""
        top = self.max_m if max_m is None else max_m
        rows = [(u, c, d) for u, (c, d) in self.entries.items()
                if len(u) <= top and (c or d)]
        rows.sort(key=lambda r: (len(r[0]), r[0]))
        return [(_fmt(u), c, d) for u, c, d in rows]

    def negatives(self) -> list[tuple[str, int, int]]:
        return [(_fmt(u), c, d) for u, (c, d) in sorted(self.entries.items())
                if c < 0 or d < 0]

    def stability_violations(self) -> list[str]:
        return [_fmt(u) for u, (c, d) in sorted(self.entries.items())
                if u[-1] == len(u) and (c or d)]

    def to_tsv(self, max_m: int | None = None) -> str:
        lines = ["permutation\tc_u\td_u"]
        lines += [f"{u}\t{c}\t{d}" for u, c, d in self.nonzero(max_m)]
        return "\n".join(lines) + "\n"


def coefficient_tables(M: int = 6) -> CoefficientTable:
    """
    ``c_u = nu_u - 1 - sum c_s p_s(u)`` and ``d_u = theta_u - 1 - sum d_s p_s(u)``
    over all shorter patterns ``s``.  Negative values are legal output.
    """
    entries: dict[tuple[int, ...], tuple[int, int]] = {}
    nus, thetas = {}, {}
    for m in range(1, M + 1):
        words = list(itertools.permutations(range(1, m + 1)))
        cache = SchubertCache()
        th = theta_many([rothe(w).cols for w in words], m)
        for u, t in zip(words, th):
            nu = cache.get(u).specialize_ones()
            nus[u], thetas[u] = nu, int(t)
            c, d = nu - 1, int(t) - 1
            for s, cnt in pattern_profile(u, m - 1).items():
                cs, ds = entries[s]
                c -= cs * cnt
                d -= ds * cnt
            entries[u] = (c, d)
    return CoefficientTable(M, entries, nus, thetas)


def expansion_residuals(table: CoefficientTable, n: int) -> list[tuple[str, int, int]]:
    """``w`` in ``S_n`` where ``1 + sum c_u p_u(w) != nu_w`` or the ``d`` analogue fails."""
    if n > table.max_m:
        raise ValueError(f"table only reaches m={table.max_m}")
    bad = []
    for w in itertools.permutations(range(1, n + 1)):
        cs = ds = 1
        for u, cnt in pattern_profile(w, n).items():
            c, d = table.entries[u]
            cs += c * cnt
            ds += d * cnt
        if cs != table.nu[w] or ds != table.theta[w]:
            bad.append((_fmt(w), cs - table.nu[w], ds - table.theta[w]))
    return bad


@dataclass
class ConjectureReport:
    n: int
    non_layered_beta: list[str]
    negative_d: list[tuple[str, int, int]]
    negative_c: list[tuple[str, int, int]]
    d_exceeds_c: list[tuple[str, int, int]]
    zero_d_positive_c: list[tuple[str, int, int]]
    sign_mismatch_small: list[tuple[str, int, int]]
    extremal: list[ExtremalRow]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "non_layered_beta_attainers": self.non_layered_beta,
            "negative_d": [list(r) for r in self.negative_d],
            "negative_c": [list(r) for r in self.negative_c],
            "d_exceeds_c": [list(r) for r in self.d_exceeds_c],
            "d_zero_c_positive": [list(r) for r in self.zero_d_positive_c],
            "sign_mismatch_m_le_5": [list(r) for r in self.sign_mismatch_small],
            "extremal": [r.to_dict() for r in self.extremal],
        }


def conjecture_sweep(n: int, workers: int = 1) -> ConjectureReport:
    """
    Evidence for the layered-maximiser and ``d_u >= 0`` conjectures on
    ``S_1 .. S_n``; all findings are returned, none are raised.
    """
    rows = [extremal_search(m, workers) for m in range(1, n + 1)]
    non_layered = [w for r in rows for w in r.beta_set if not is_layered(w)]
    table = coefficient_tables(n)
    items = sorted(table.entries.items())
    return ConjectureReport(
        n=n,
        non_layered_beta=non_layered,
        negative_d=[(_fmt(u), c, d) for u, (c, d) in items if d < 0],
        negative_c=[(_fmt(u), c, d) for u, (c, d) in items if c < 0],
        d_exceeds_c=[(_fmt(u), c, d) for u, (c, d) in items if d > c],
        zero_d_positive_c=[(_fmt(u), c, d) for u, (c, d) in items if d == 0 and c > 0],
        sign_mismatch_small=[(_fmt(u), c, d) for u, (c, d) in items
                             if len(u) <= 5 and (c > 0) != (d > 0)],
        extremal=rows,
    )


# ---------------------------------------------------------------------------
# verification sweeps
# ---------------------------------------------------------------------------

@dataclass
class SweepResult:
    scope: str
    checked: int
    violations: list[dict]
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"scope": self.scope, "checked": self.checked,
                "violations": self.violations, "ok": self.ok, **self.info}


def _thm11_job(n: int, start: int, stop: int):
    bad, slack = [], 0
    for word, nu, th, lb in perm_records(n, start, stop, lower=True):
        if not lb <= th <= nu:
            bad.append({"w": _fmt(word), "lower_bound": lb, "theta": th, "nu": nu})
        slack = max(slack, th - lb)
    return stop - start, bad, slack


def _count_fold(state: dict, res) -> dict:
    cnt, bad, slack = res
    return {"checked": state["checked"] + cnt,
            "violations": state["violations"] + bad,
            "max_slack": max(state["max_slack"], slack)}


def verify_thm11(n: int, workers: int = 1, checkpoint: str | None = None,
                 progress=None) -> SweepResult:
    """Pattern bound <= theta_w <= nu_w over all of ``S_n``."""
    st = _sweep("thm11", n, _thm11_job, _count_fold,
                {"checked": 0, "violations": [], "max_slack": 0},
                workers, checkpoint, progress)
    return SweepResult("thm11", st["checked"], st["violations"],
                       {"n": n, "max_slack": st["max_slack"]})


def all_diagrams(grid: int) -> np.ndarray:
    """Column masks of every diagram in ``[grid] x [grid]``."""
    total = 1 << (grid * grid)
    bits = np.arange(total, dtype=np.int64)
    full = (1 << grid) - 1
    return np.stack([(bits >> (grid * j)) & full for j in range(grid)], axis=1)


def random_diagrams(grid: int, count: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, 1 << grid, size=(count, grid), dtype=np.int64)


def _diagram_set(grid: int, samples: int, seed: int) -> np.ndarray:
    if samples:
        return random_diagrams(grid, samples, seed)
    if grid > 5:
        raise ValueError("exhaustive sweeps stop at grid 5; pass samples")
    return all_diagrams(grid)


def verify_thm12(grid: int, samples: int = 0, seed: int = 0,
                 backend: str | None = None) -> SweepResult:
    """``1 + r1 + r2 + r3 <= theta_D`` for every (or sampled) diagram."""
    cols = _diagram_set(grid, samples, seed)
    stats = kernels.r_stats_batch(cols, grid, backend)
    th = theta_many(cols, grid, backend=backend)
    lower = 1 + stats.sum(axis=1)
    bad_idx = np.nonzero(lower > th)[0]
    bad = [{"diagram": Diagram(grid, tuple(cols[k])).to_text(),
            "lower_bound": int(lower[k]), "theta": int(th[k])} for k in bad_idx]
    return SweepResult("thm12", len(cols), bad,
                       {"grid": grid, "max_slack": int((th - lower).max()) if len(th) else 0})


def verify_witness(grid: int, samples: int = 0, seed: int = 0,
                   backend: str | None = None) -> SweepResult:
    """Run the three algorithms on every diagram and validate the witnesses."""
    cols = _diagram_set(grid, samples, seed)
    stats = kernels.r_stats_batch(cols, grid, backend)
    bad = []
    total = 0
    for row, st in zip(cols.tolist(), stats.tolist()):
        c = tuple(row)
        chain, s2, s3 = _witness_masks(c, grid)
        total += len(chain) + sum(map(len, s2.values())) + sum(map(len, s3.values()))
        bad.extend(cx.to_dict() for cx in check_masks(c, grid, chain, s2, s3, st))
    return SweepResult("witness", len(cols), bad, {"grid": grid, "witnesses": total})


def _random_compositions(count: int, max_len: int, max_part: int, seed: int):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_len)
        yield tuple(rng.randint(0, max_part) for _ in range(n))


def verify_keyres(count: int = 1000, max_len: int = 8, max_part: int = 8,
                  seed: int = 0, backend: str | None = None) -> SweepResult:
    """r-statistics of skyline diagrams equal the three inversion sums."""
    grid = max(max_len, max_part)
    alphas = list(_random_compositions(count, max_len, max_part, seed))
    cols = [skyline(a, grid).cols for a in alphas]
    stats = kernels.r_stats_batch(cols, grid, backend)
    bad = []
    for a, st in zip(alphas, stats.tolist()):
        want = key_bound_terms(a)
        if tuple(st) != want:
            bad.append({"alpha": list(a), "r_stats": st, "sums": list(want)})
    return SweepResult("keyres", len(alphas), bad, {"max_len": max_len, "max_part": max_part})


def verify_thm14(count: int = 500, max_len: int = 6, max_part: int = 6,
                 seed: int = 0) -> SweepResult:
    """``key bound <= theta_{D(alpha)} <= kappa_alpha(1,...,1)``."""
    bad, n_checked = [], 0
    for a in _random_compositions(count, max_len, max_part, seed):
        rep = key_report(a)
        n_checked += 1
        if not rep.holds:
            bad.append(rep.to_dict())
    return SweepResult("thm14", n_checked, bad)


def _macdonald_job(n: int, start: int, stop: int):
    cache = SchubertCache()
    bad = []
    words = itertools.islice(itertools.permutations(range(1, n + 1)), start, stop)
    for w in words:
        nu = cache.get(w).specialize_ones()
        m = macdonald_nu(w)
        if m != nu:
            bad.append({"w": _fmt(w), "macdonald": m, "specialization": nu})
    return stop - start, bad, 0


def verify_macdonald(n: int, workers: int = 1) -> SweepResult:
    st = _sweep("macdonald", n, _macdonald_job, _count_fold,
                {"checked": 0, "violations": [], "max_slack": 0}, workers)
    return SweepResult("macdonald", st["checked"], st["violations"], {"n": n})


def _prop21_job(n: int, start: int, stop: int):
    cache = SchubertCache()
    bad = []
    words = itertools.islice(itertools.permutations(range(1, n + 1)), start, stop)
    for w in words:
        poly_sup = cache.get(w).supports()
        diag_sup = set(support_set(rothe(w)).weights)
        if poly_sup != diag_sup:
            bad.append({"w": _fmt(w), "only_poly": sorted(poly_sup - diag_sup),
                        "only_diagram": sorted(diag_sup - poly_sup)})
    return stop - start, bad, 0


def _prop21_one(w) -> dict | None:
    poly_sup = SchubertCache().get(w).supports()
    diag_sup = set(support_set(rothe(w)).weights)
    if poly_sup == diag_sup:
        return None
    return {"w": _fmt(w), "only_poly": sorted(poly_sup - diag_sup),
            "only_diagram": sorted(diag_sup - poly_sup)}


def verify_prop21(n: int, workers: int = 1, samples: int = 0,
                  seed: int = 0) -> SweepResult:
    """
    Polynomial supports equal the weights of diagrams below ``D(w)``, over
    all of ``S_n`` or over ``samples`` random permutations.
    """
    if samples:
        rng = random.Random(seed)
        words = [tuple(rng.sample(range(1, n + 1), n)) for _ in range(samples)]
        bad = [r for r in map(_prop21_one, words) if r]
        return SweepResult("prop21", len(words), bad, {"n": n, "samples": samples})
    st = _sweep("prop21", n, _prop21_job, _count_fold,
                {"checked": 0, "violations": [], "max_slack": 0}, workers)
    return SweepResult("prop21", st["checked"], st["violations"], {"n": n})


def verify_prop21_keys(count: int = 500, max_len: int = 6, max_part: int = 5,
                       seed: int = 0) -> SweepResult:
    """Key polynomial supports equal the weights below the skyline diagram."""
    bad = []
    alphas = list(_random_compositions(count, max_len, max_part, seed))
    for a in alphas:
        grid = max(len(a), max(a))
        pad = (0,) * (grid - len(a))
        poly_sup = {e + pad for e in key_polynomial(a).supports()}
        diag_sup = set(support_set(skyline(a, grid)).weights)
        if poly_sup != diag_sup:
            bad.append({"alpha": list(a), "only_poly": sorted(poly_sup - diag_sup),
                        "only_diagram": sorted(diag_sup - poly_sup)})
    return SweepResult("prop21_keys", len(alphas), bad)


def verify_pattern_witnesses(n: int) -> SweepResult:
    """Pattern subdiagrams of ``D(w)`` are distinct and number ``bound - 1``."""
    from .diagram import configuration_class
    from .witness import all_pattern_witnesses, recover_positions

    bad, checked = [], 0
    for w in Permutation.all(n):
        checked += 1
        D = rothe(w)
        subs = []
        for pw in all_pattern_witnesses(w):
            for cells, label in zip(pw.subdiagrams, pw.classes):
                subs.append(cells)
                if configuration_class(D, cells) != label:
                    bad.append({"w": str(w), "pattern": str(pw.pattern),
                                "occurrence": list(pw.occurrence), "problem": "class"})
                if recover_positions(w, cells) != pw.occurrence:
                    bad.append({"w": str(w), "pattern": str(pw.pattern),
                                "occurrence": list(pw.occurrence), "problem": "recovery"})
        if len(set(subs)) != len(subs):
            bad.append({"w": str(w), "problem": "duplicate subdiagram"})
        if len(subs) != schubert_lower_bound(w) - 1:
            bad.append({"w": str(w), "problem": "count",
                        "subdiagrams": len(subs), "bound": schubert_lower_bound(w)})
        if len(subs) > r_stats(D).total:
            bad.append({"w": str(w), "problem": "exceeds r-statistics"})
    return SweepResult("witness_patterns", checked, bad, {"n": n})
