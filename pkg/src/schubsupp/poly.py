"""
Exact sparse polynomials with integer coefficients, divided differences,
and Schubert / key polynomials.

Exponent vectors are packed into a single Python int, one byte per
variable (variable ``x_k`` occupies bits ``8(k-1) .. 8k-1``), so a term map
is a plain ``dict[int, int]``.  Python ints never overflow, so coefficient
growth needs no guard.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Iterator, Mapping

from .permcore import Composition, Permutation, PermLike, as_perm

__all__ = [
    "SparsePoly", "pack", "unpack", "divided_difference", "demazure",
    "schubert", "key_polynomial", "iter_schubert", "SchubertCache",
    "specialize_ones", "supports", "theta_from_poly", "is_zero_one",
]

_BITS = 8
_MASK = (1 << _BITS) - 1


def pack(exps: Iterable[int]) -> int:
    key = 0
    for k, e in enumerate(exps):
        if not 0 <= e <= _MASK:
            raise OverflowError(f"exponent {e} does not fit in a byte")
        key |= e << (_BITS * k)
    return key


def unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * k)) & _MASK for k in range(nvars))


class SparsePoly:
    """
    Immutable polynomial in ``x_1, ..., x_nvars``.

    ``terms`` maps exponent tuples to non-zero integer coefficients.
    """

    __slots__ = ("nvars", "_t")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        t: dict[int, int] = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has length != {nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if c:
                k = pack(exps)
                t[k] = t.get(k, 0) + c
                if not t[k]:
                    del t[k]
        self._t = t

    @classmethod
    def _raw(cls, nvars: int, packed: dict[int, int]) -> SparsePoly:
        p = cls.__new__(cls)
        p.nvars = nvars
        p._t = packed
        return p

    @classmethod
    def one(cls, nvars: int) -> SparsePoly:
        return cls._raw(nvars, {0: 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> SparsePoly:
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return {unpack(k, self.nvars): c for k, c in self._t.items()}

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        for k, c in self._t.items():
            yield unpack(k, self.nvars), c

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self._t == other._t

    def __hash__(self):
        return hash((self.nvars, frozenset(self._t.items())))

    def _check(self, other: SparsePoly):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other: SparsePoly) -> SparsePoly:
        self._check(other)
        t = dict(self._t)
        for k, c in other._t.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return SparsePoly._raw(self.nvars, t)

    def __neg__(self) -> SparsePoly:
        return SparsePoly._raw(self.nvars, {k: -c for k, c in self._t.items()})

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return self + (-other)

    def __mul__(self, other: SparsePoly | int) -> SparsePoly:
        if isinstance(other, int):
            if not other:
                return SparsePoly._raw(self.nvars, {})
            return SparsePoly._raw(self.nvars, {k: c * other for k, c in self._t.items()})
        self._check(other)
        n = self.nvars
        t: dict[int, int] = {}
        for k1, c1 in self._t.items():
            e1 = unpack(k1, n)
            for k2, c2 in other._t.items():
                k = pack(a + b for a, b in zip(e1, unpack(k2, n)))
                t[k] = t.get(k, 0) + c1 * c2
        return SparsePoly._raw(n, {k: c for k, c in t.items() if c})

    __rmul__ = __mul__

    def swap(self, i: int) -> SparsePoly:
        """Exchange ``x_i`` and ``x_{i+1}``."""
        sh = _BITS * (i - 1)
        lo, hi = _MASK << sh, _MASK << (sh + _BITS)
        t = {}
        for k, c in self._t.items():
            p = (k & lo) >> sh
            q = (k & hi) >> (sh + _BITS)
            t[(k & ~(lo | hi)) | (q << sh) | (p << (sh + _BITS))] = c
        return SparsePoly._raw(self.nvars, t)

    def times_var(self, i: int) -> SparsePoly:
        step = 1 << (_BITS * (i - 1))
        for k in self._t:
            if (k >> (_BITS * (i - 1))) & _MASK == _MASK:
                raise OverflowError("exponent does not fit in a byte")
        return SparsePoly._raw(self.nvars, {k + step: c for k, c in self._t.items()})

    def specialize_ones(self) -> int:
        return sum(self._t.values())

    def supports(self) -> set[tuple[int, ...]]:
        return {unpack(k, self.nvars) for k in self._t}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.items())

    def to_dict(self) -> dict:
        return {"nvars": self.nvars,
                "terms": [{"exponents": list(e), "coefficient": c}
                          for e, c in self.sorted_terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: str | dict) -> SparsePoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["nvars"], {tuple(t["exponents"]): t["coefficient"]
                                   for t in data["terms"]})

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars}, {self.terms!r})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for exps, c in sorted(self.items(), reverse=True):
            mono = "*".join(f"x{k}" if e == 1 else f"x{k}^{e}"
                            for k, e in enumerate(exps, 1) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def divided_difference(f: SparsePoly, i: int) -> SparsePoly:
    """
    ``(f - s_i f) / (x_i - x_{i+1})``, term by term:
    ``x_i^p x_{i+1}^q -> sum_{t=q}^{p-1} x_i^t x_{i+1}^{p+q-1-t}`` for
    ``p > q``, the negated mirror image for ``p < q``, and 0 for ``p == q``.
    """
    if not 1 <= i < f.nvars:
        raise ValueError(f"index {i} outside 1..{f.nvars - 1}")
    sh = _BITS * (i - 1)
    sh2 = sh + _BITS
    lo, hi = _MASK << sh, _MASK << sh2
    keep = ~(lo | hi)
    t: dict[int, int] = {}
    get = t.get
    for k, c in f._t.items():
        p = (k & lo) >> sh
        q = (k & hi) >> sh2
        if p == q:
            continue
        if p < q:
            p, q, c = q, p, -c
        base = k & keep
        s = p + q - 1
        for e in range(q, p):
            key = base | (e << sh) | ((s - e) << sh2)
            v = get(key, 0) + c
            if v:
                t[key] = v
            else:
                del t[key]
    return SparsePoly._raw(f.nvars, t)


def demazure(f: SparsePoly, i: int) -> SparsePoly:
    """``pi_i f = d_i(x_i f)``."""
    return divided_difference(f.times_var(i), i)


def _staircase(n: int) -> SparsePoly:
    return SparsePoly.monomial(tuple(n - k for k in range(1, n + 1)))


class SchubertCache:
    """
    Memo table for Schubert polynomials of one ``S_n``, keyed by word.
    A plain dict; per-process use is the intended concurrency model.
    """

    def __init__(self):
        self._memo: dict[tuple[int, ...], SparsePoly] = {}

    def __len__(self) -> int:
        return len(self._memo)

    def clear(self):
        self._memo.clear()

    def get(self, w: PermLike, strategy: str = "first") -> SparsePoly:
        w = as_perm(w)
        memo = self._memo if strategy == "first" else {}
        chain: list[tuple[tuple[int, ...], int]] = []
        word = w.word
        n = len(word)
        # walk up to w0 (or a cached ancestor), then come back down
        while word not in memo:
            asc = [i for i in range(1, n) if word[i - 1] < word[i]]
            if not asc:
                memo[word] = _staircase(n)
                break
            i = asc[0] if strategy == "first" else asc[-1]
            chain.append((word, i))
            lst = list(word)
            lst[i - 1], lst[i] = lst[i], lst[i - 1]
            word = tuple(lst)
        f = memo[word]
        for up, i in reversed(chain):
            f = divided_difference(f, i)
            memo[up] = f
        return memo[w.word]


_default_cache = SchubertCache()


def schubert(w: PermLike, strategy: str = "first",
             cache: SchubertCache | None = None) -> SparsePoly:
    """
    Schubert polynomial from ``x_1^{n-1} ... x_{n-1}`` by divided
    differences.  ``strategy`` picks the first or last ascent at every step;
    the result does not depend on it.
    """
    if strategy not in ("first", "last"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "last":
        return SchubertCache().get(w, "last")
    return (cache or _default_cache).get(w, strategy)


def iter_schubert(n: int) -> Iterator[tuple[Permutation, SparsePoly]]:
    """
    Every Schubert polynomial of ``S_n``, longest permutations first.
    Only two length levels are alive at a time, so ``S_8`` fits in memory.
    """
    levels: dict[int, list[tuple[int, ...]]] = {}
    for word in itertools.permutations(range(1, n + 1)):
        ell = sum(1 for a in range(n) for b in range(a + 1, n) if word[a] > word[b])
        levels.setdefault(ell, []).append(word)
    top = n * (n - 1) // 2
    prev = {tuple(range(n, 0, -1)): _staircase(n)}
    yield Permutation(tuple(range(n, 0, -1))), prev[tuple(range(n, 0, -1))]
    for ell in range(top - 1, -1, -1):
        cur = {}
        for word in levels[ell]:
            i = next(k for k in range(1, n) if word[k - 1] < word[k])
            up = list(word)
            up[i - 1], up[i] = up[i], up[i - 1]
            f = divided_difference(prev[tuple(up)], i)
            cur[word] = f
            yield Permutation(word), f
        prev = cur


def key_polynomial(alpha: Composition | Iterable[int], strategy: str = "first") -> SparsePoly:
    """``x^alpha`` if weakly decreasing, else ``d_i x_i kappa_{s_i alpha}``."""
    a = alpha if isinstance(alpha, Composition) else Composition(tuple(alpha))
    parts = list(a.parts)
    n = len(parts)
    steps = []
    while True:
        inv = [i for i in range(1, n) if parts[i - 1] < parts[i]]
        if not inv:
            break
        i = inv[0] if strategy == "first" else inv[-1]
        steps.append(i)
        parts[i - 1], parts[i] = parts[i], parts[i - 1]
    f = SparsePoly.monomial(parts)
    for i in reversed(steps):
        f = demazure(f, i)
    return f


def specialize_ones(f: SparsePoly) -> int:
    return f.specialize_ones()


def supports(f: SparsePoly) -> set[tuple[int, ...]]:
    return f.supports()


def theta_from_poly(f: SparsePoly) -> int:
    return len(f)


def is_zero_one(f: SparsePoly) -> bool:
    return all(c in (0, 1) for c in f._t.values())
