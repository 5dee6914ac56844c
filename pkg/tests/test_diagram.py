import itertools

import pytest
from hypothesis import given, strategies as st

from oracles import brute_configurations, gale_downset
from schubsupp.diagram import (Diagram, below, configuration_class, diagram_leq,
                               gale_leq, mask_gale_leq, r1_below, r1_local, r_stats,
                               rothe, skyline, weight)
from schubsupp.permcore import pattern_count

FIG5 = Diagram.parse("""
....
#.#.
.##.
...#
""")

FIG7 = Diagram.parse("""
.#..#.
#..#.#
.###..
#.....
.#...#
#..#..
""")


def diagrams(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n)
        .map(lambda cols: Diagram(n, tuple(cols))))


def test_text_and_json_round_trip():
    D = Diagram.from_columns(4, [{2, 3, 4}, set(), {1, 2}, {3}])
    assert D.to_text() == "..#.\n#.#.\n#..#\n#..."
    assert Diagram.parse(D.to_text()) == D
    assert Diagram.from_json(D.to_json()) == D
    assert D.to_json() == '{"n":4,"boxes":[[1,3],[2,1],[2,3],[3,1],[3,4],[4,1]]}'


def test_constructor_validation():
    with pytest.raises(ValueError):
        Diagram.from_boxes(3, [(4, 1)])
    with pytest.raises(ValueError):
        Diagram.parse("#.\n#")
    with pytest.raises(ValueError):
        Diagram.parse("#x\n..")


def test_rothe_examples():
    assert rothe("1432").boxes == {(2, 2), (2, 3), (3, 2)}
    assert rothe("12345").boxes == frozenset()
    assert rothe("4321").boxes == {(i, j) for i in range(1, 5) for j in range(1, 5) if i + j <= 4}


def test_skyline_examples():
    D = skyline((1, 3, 0, 2))
    assert [sorted(j for i2, j in D.boxes if i2 == i) for i in range(1, 5)] == [[1], [1, 2, 3], [], [1, 2]]
    assert len(skyline((0, 0, 0))) == 0
    assert skyline((3, 2, 1)).boxes == {(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)}
    with pytest.raises(ValueError):
        skyline((0, 4, 1))


def test_gale_examples():
    assert gale_leq({1, 3}, {2, 3})
    assert not gale_leq({2}, {1})
    assert gale_leq(set(), set())
    with pytest.raises(ValueError):
        gale_leq({1}, {1, 2})


def test_diagram_leq_examples():
    assert diagram_leq(FIG5, FIG5)
    assert diagram_leq(Diagram.empty(3), Diagram.empty(3))
    assert diagram_leq(Diagram.from_boxes(2, [(1, 1)]), Diagram.from_boxes(2, [(2, 1)]))
    assert not diagram_leq(Diagram.from_boxes(2, [(1, 1)]), Diagram.from_boxes(2, [(1, 2)]))
    with pytest.raises(ValueError):
        diagram_leq(Diagram.empty(2), Diagram.empty(3))


def test_weight_examples():
    D = Diagram.from_columns(4, [{2, 3, 4}, set(), {1, 2}, {3}])
    assert weight(D) == (1, 2, 2, 1)
    assert weight(Diagram.empty(3)) == (0, 0, 0)
    assert weight(skyline((1, 3, 0, 2))) == (1, 3, 0, 2)


def test_r1_local_examples():
    assert r1_local(FIG5, 2, 1) == 1
    assert r1_local(rothe("1432"), 3, 2) == 1
    assert r1_local(FIG5, 4, 4) == 3
    assert r1_local(Diagram.from_boxes(2, [(1, 2)]), 1, 2) == 0
    with pytest.raises(ValueError):
        r1_local(FIG5, 1, 1)


def test_r_stats_examples():
    assert r_stats(Diagram.empty(4)) == (0, 0, 0)
    assert r_stats(rothe("1432")) == (3, 1, 0)
    assert r_stats(FIG5).r1 == 8
    assert r_stats(FIG5).total == r_stats(FIG5).r1 + r_stats(FIG5).r2 + r_stats(FIG5).r3


def test_below_examples():
    assert below(FIG7, 0) == FIG7
    assert below(FIG7, 6) == Diagram.empty(6)
    assert below(FIG7, 3).boxes == {b for b in FIG7.boxes if b[0] > 3}
    shifted = below(FIG7, 3, shift=True)
    assert shifted.boxes == {(i - 3, j) for i, j in FIG7.boxes if i > 3}


def test_configuration_classes():
    D = rothe("1432")
    assert configuration_class(D, [(1, 2), (2, 2)]) == "A"
    assert configuration_class(D, [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)]) == "B"
    assert configuration_class(D, [(1, 2), (2, 2), (3, 3), (4, 3)]) is None
    C = Diagram.parse("""
    ....
    #...
    ....
    .#..
    """)
    assert configuration_class(C, [(1, 1), (2, 1), (3, 2), (4, 2)]) == "C"
    C2 = Diagram.parse("""
    ....
    .#..
    ....
    #...
    """)
    assert configuration_class(C2, [(1, 2), (2, 2), (3, 1), (4, 1)]) == "C'"


@given(diagrams(5))
def test_r_stats_match_brute_force(D):
    box = [[(i, j) in D for j in range(1, D.n + 1)] for i in range(1, D.n + 1)]
    assert tuple(r_stats(D)) == brute_configurations(box, D.n)


@given(diagrams(6))
def test_r1_decomposition(D):
    assert r_stats(D).r1 == sum(r1_local(D, i, j) for i, j in D.boxes)


def _lemma_r3(D):
    return sum(r1_local(D, i, j) * r1_below(D, i) for i, j in D.boxes)


def test_r3_pivot_decomposition_exhaustive_4x4():
    for bits in range(1 << 16):
        D = Diagram(4, tuple((bits >> (4 * j)) & 15 for j in range(4)))
        assert r_stats(D).r3 == _lemma_r3(D)


@given(diagrams(6))
def test_r3_pivot_decomposition_random(D):
    assert r_stats(D).r3 == _lemma_r3(D)


def test_rothe_r1_counts_132_patterns():
    for n in range(1, 7):
        for w in itertools.permutations(range(1, n + 1)):
            D = rothe(w)
            assert len(D) == sum(1 for i, j in itertools.combinations(range(n), 2) if w[i] > w[j])
            assert r_stats(D).r1 == pattern_count(w, (1, 3, 2))


@given(st.lists(st.integers(0, 31), min_size=1, max_size=5), st.lists(st.integers(0, 31), min_size=1, max_size=5))
def test_mask_gale_matches_set_gale(xs, ys):
    for r, s in zip(xs, ys):
        R = {i + 1 for i in range(5) if r >> i & 1}
        S = {i + 1 for i in range(5) if s >> i & 1}
        expect = len(R) == len(S) and gale_leq(R, S)
        assert mask_gale_leq(r, s) == expect


def test_gale_partial_order_and_strict_weight_change_3x3():
    n = 3
    all_d = [Diagram(n, tuple((b >> (n * j)) & 7 for j in range(n))) for b in range(1 << 9)]
    for D in all_d:
        downs = [gale_downset(col, n) for col in D.columns]
        for choice in itertools.product(*downs):
            C = Diagram.from_columns(n, choice)
            assert diagram_leq(C, D)
            if C != D:
                assert weight(C) != weight(D)
                assert not diagram_leq(D, C)


@given(diagrams(4), diagrams(4), diagrams(4))
def test_diagram_leq_transitive(A, B, C):
    if A.n == B.n == C.n and diagram_leq(A, B) and diagram_leq(B, C):
        assert diagram_leq(A, C)
