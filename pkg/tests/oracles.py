"""Slow, independent reference implementations used as test oracles."""

import itertools
from collections import Counter


def brute_pattern_count(w, u):
    m = len(u)
    order = sorted(range(m), key=lambda k: u[k])
    count = 0
    for idx in itertools.combinations(range(len(w)), m):
        vals = [w[i] for i in idx]
        if sorted(range(m), key=lambda k: vals[k]) == order:
            count += 1
    return count


def inversions(w):
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def apply_word(n, letters):
    w = list(range(1, n + 1))
    for a in letters:
        w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def brute_reduced_words(w):
    n, ell = len(w), inversions(w)
    return {word for word in itertools.product(range(1, n), repeat=ell)
            if apply_word(n, word) == tuple(w)}


def schubert_by_compatible_sequences(w):
    """Sum over reduced words and their compatible sequences of x_{i_1}...x_{i_l}."""
    n = len(w)
    terms = Counter()
    for a in brute_reduced_words(w):
        ell = len(a)

        # sequences must be weakly increasing, strictly where the word ascends
        def rec2(k, acc):
            if k == ell:
                terms[tuple(acc.count(v) for v in range(1, n + 1))] += 1
                return
            lo = 1
            if k:
                lo = acc[-1] + (1 if a[k - 1] < a[k] else 0)
            for i in range(lo, a[k] + 1):
                rec2(k + 1, acc + [i])

        rec2(0, [])
    return dict(terms)


def gale_downset(S, n):
    S = sorted(S)
    return [R for R in itertools.combinations(range(1, n + 1), len(S))
            if all(r <= s for r, s in zip(R, S))]


def brute_supports(columns, n):
    """{wt(C) : C <= D} by taking the product of column down-sets."""
    downs = [gale_downset(col, n) for col in columns]
    out = set()
    for choice in itertools.product(*downs):
        wt = [0] * n
        for col in choice:
            for r in col:
                wt[r - 1] += 1
        out.add(tuple(wt))
    return out


def brute_configurations(box, n):
    """r1, r2, r3 straight from the pictures: ``box[i][j]`` is 0-based."""
    r1 = r2 = r3 = 0
    for j in range(n):
        for a in range(n):
            for b in range(a + 1, n):
                if not box[a][j] and box[b][j]:
                    r1 += 1
    for a, b, c in itertools.combinations(range(n), 3):
        for j, k in itertools.combinations(range(n), 2):
            top = not box[a][j] and not box[a][k]
            mid = box[b][j] and box[b][k]
            if top and mid and (box[c][j] + box[c][k]) == 1:
                r2 += 1
    for a, b, c, d in itertools.combinations(range(n), 4):
        for j in range(n):
            for k in range(n):
                if not box[a][j] and box[b][j] and not box[c][k] and box[d][k]:
                    r3 += 1
    return r1, r2, r3
