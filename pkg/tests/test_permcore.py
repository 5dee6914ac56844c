import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from oracles import apply_word, brute_pattern_count, brute_reduced_words, inversions
from schubsupp.permcore import (Composition, Permutation, is_dominant, is_layered,
                                layered, macdonald_nu, parse_word, pattern_count,
                                pattern_occurrences, pattern_profile, reduced_words,
                                standardize)
from schubsupp.poly import SchubertCache

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


def test_parse_digit_and_comma_forms():
    assert parse_word("1432") == (1, 4, 3, 2)
    assert parse_word("10,1,2,3,4,5,6,7,8,9") == (10, 1, 2, 3, 4, 5, 6, 7, 8, 9)
    assert str(Permutation.parse("10,1,2,3,4,5,6,7,8,9")) == "10,1,2,3,4,5,6,7,8,9"


@pytest.mark.parametrize("text,pos", [("14x2", 3), ("1,4,,2", 3), ("1,a", 2)])
def test_parse_error_names_position(text, pos):
    with pytest.raises(ValueError, match=f"position {pos}"):
        parse_word(text)


@pytest.mark.parametrize("word", ["1223", "124", "0213"])
def test_permutation_rejects_non_bijections(word):
    with pytest.raises(ValueError):
        Permutation.parse(word)


def test_basic_permutation_ops():
    w = Permutation.parse("1432")
    assert w(2) == 4
    assert w.inverse() == w
    assert w.length() == 3
    assert Permutation.longest(4).word == (4, 3, 2, 1)
    assert [str(p) for p in Permutation.all(3)] == ["123", "132", "213", "231", "312", "321"]
    assert Permutation.parse("2413").inverse() == Permutation.parse("3142")


def test_composition():
    a = Composition.parse("1,3,0,2")
    assert a.parts == (1, 3, 0, 2)
    assert a.swap(1).parts == (3, 1, 0, 2)
    assert not a.is_weakly_decreasing()
    with pytest.raises(ValueError):
        Composition(())


def test_pattern_count_examples():
    assert pattern_count("1432", "132") == 3
    assert pattern_count("123456", "132") == 0
    assert pattern_count("15432", "1432") == 4
    assert pattern_count("132", "1432") == 0


def test_pattern_occurrences_examples():
    assert pattern_occurrences("1432", "132") == [(1, 2, 3), (1, 2, 4), (1, 3, 4)]
    assert pattern_occurrences("321", "123") == []
    assert pattern_occurrences("1432", "1432") == [(1, 2, 3, 4)]


def test_reduced_words_examples():
    assert reduced_words("123") == [()]
    assert reduced_words("132") == [(2,)]
    assert reduced_words("321") == [(1, 2, 1), (2, 1, 2)]


def test_macdonald_examples():
    assert macdonald_nu("132") == 2
    assert macdonald_nu("1234") == 1
    assert macdonald_nu("1432") == 5


def test_layered_examples():
    assert str(layered((2, 3, 2, 1))) == "21543768"
    assert layered((5,)) == Permutation.longest(5)
    assert layered((1, 1, 1)) == Permutation.identity(3)
    with pytest.raises(ValueError):
        layered(())


def test_is_dominant_examples():
    assert is_dominant("321")
    assert not is_dominant("132")
    # 2143 contains 1,4,3 as a 132 pattern
    assert not is_dominant("2143")
    assert is_dominant("3412")


@given(perms, perms)
def test_pattern_count_matches_brute_force(w, u):
    assert pattern_count(w, u) == brute_pattern_count(w, u)
    occ = pattern_occurrences(w, u)
    assert len(occ) == pattern_count(w, u)
    for t in occ:
        assert list(t) == sorted(t)
        assert standardize([w[i - 1] for i in t]) == u


@given(perms)
def test_pattern_profile_totals(w):
    prof = pattern_profile(w, 3)
    n = len(w)
    for k in range(1, min(n, 3) + 1):
        assert sum(c for u, c in prof.items() if len(u) == k) == math.comb(n, k)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple))
def test_reduced_words_match_brute_force(w):
    words = reduced_words(w)
    assert words
    assert set(words) == brute_reduced_words(w)
    for word in words:
        assert len(word) == inversions(w)
        assert apply_word(len(w), word) == w


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3))
def test_layered_inversions(b):
    w = layered(b)
    assert w.length() == sum(math.comb(x, 2) for x in b)
    assert is_layered(w)


def test_macdonald_matches_specialization_and_dominance():
    cache = SchubertCache()
    for n in range(1, 6):
        for w in itertools.permutations(range(1, n + 1)):
            nu = macdonald_nu(w)
            assert nu == cache.get(w).specialize_ones()
            assert is_dominant(w) == (nu == 1)
