import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_pattern_count
from schubsupp import bounds
from schubsupp.bounds import (TABLE4, coefficient_tables, conjecture_sweep,
                              diagram_lower_bound, expansion_residuals, extremal_search,
                              key_bound_terms, key_lower_bound, key_report,
                              schubert_lower_bound, schubert_report)
from schubsupp.diagram import Diagram, r_stats, rothe, skyline
from schubsupp.permcore import is_layered
from schubsupp.witness import PATTERN_COEFFICIENTS


def test_schubert_lower_bound_examples():
    assert schubert_lower_bound("4321") == 1
    assert schubert_lower_bound("1432") == 5
    assert schubert_lower_bound("15432") == 12


def test_key_lower_bound_examples():
    assert key_lower_bound((3, 2, 2, 0)) == 1
    assert key_lower_bound((1, 3, 0, 2)) == 11
    assert key_bound_terms((1, 3, 0, 2)) == (5, 1, 4)
    assert key_lower_bound((0, 1)) == 2


def test_diagram_lower_bound_examples():
    assert diagram_lower_bound(Diagram.empty(3)) == 1
    assert diagram_lower_bound(rothe("1432")) == 5 == schubert_lower_bound("1432")
    assert diagram_lower_bound(skyline((1, 3, 0, 2))) == 11


def test_reports():
    rep = schubert_report("15432")
    assert (rep.theta, rep.nu_or_spec, rep.lower_bound, rep.slack) == (14, 14, 12, 2)
    assert rep.holds and rep.zero_one
    rep = key_report((0, 1))
    assert rep.to_dict() == {"subject": "0,1", "theta": 2, "nu_or_spec": 2,
                             "lower_bound": 2, "slack": 0, "zero_one": True}


def test_schubert_bound_against_brute_patterns():
    rng = random.Random(1)
    pats = {tuple(map(int, u)): a for u, a in PATTERN_COEFFICIENTS.items()}
    for _ in range(100):
        w = tuple(rng.sample(range(1, 8), 7))
        assert schubert_lower_bound(w) == 1 + sum(a * brute_pattern_count(w, u)
                                                  for u, a in pats.items())


@settings(max_examples=200)
@given(st.lists(st.integers(0, 8), min_size=1, max_size=8))
def test_key_sums_equal_skyline_r_stats(alpha):
    D = skyline(alpha, max(8, len(alpha)))
    assert tuple(r_stats(D)) == key_bound_terms(alpha)


@pytest.mark.parametrize("n", range(1, 7))
def test_extremal_rows(n):
    row = extremal_search(n)
    a, aset, b, bset = bounds.TABLE3[n]
    assert (row.alpha, row.alpha_set, row.beta, row.beta_set) == (a, aset, b, bset)
    assert all(is_layered(w) for w in row.beta_set)


def test_extremal_checkpoint_resume(tmp_path, monkeypatch):
    monkeypatch.setattr(bounds, "CHUNK", 100)
    path = str(tmp_path / "state.json")
    seen = []
    row = extremal_search(6, checkpoint=path, progress=lambda d, t: seen.append(d))
    assert seen[-1] == 720 and len(seen) == 8
    data = json.load(open(path))
    assert data["next"] == 720 and data["task"] == "extremal"
    # an interrupted run picks up from the saved index
    data["next"] = 300
    data["state"] = {"alpha": 0, "alpha_set": [], "beta": 0, "beta_set": []}
    json.dump(data, open(path, "w"))
    partial = extremal_search(6, checkpoint=path)
    tail = bounds.perm_records(6, 300, 720)
    assert partial.alpha == max(nu for _, nu, _ in tail)
    assert partial.beta == max(th for _, _, th in tail)
    assert partial.alpha < row.alpha
    assert row.alpha_set == ("126543", "216543")
    with pytest.raises(ValueError):
        bounds.verify_thm11(6, checkpoint=path)


def test_extremal_workers_match_serial(monkeypatch):
    monkeypatch.setattr(bounds, "CHUNK", 200)
    assert extremal_search(6, workers=2) == extremal_search(6)


def test_coefficient_table_examples():
    T = coefficient_tables(5)
    assert T["132"] == (1, 1)
    assert T["12543"] == (5, 4)
    assert T["15243"] == (4, 4)
    assert T["1243"] == (0, 0)
    assert dict((u, (c, d)) for u, c, d in T.nonzero()) == TABLE4
    assert T.to_tsv().splitlines()[:3] == ["permutation\tc_u\td_u", "132\t1\t1", "1432\t1\t1"]


def test_coefficient_table_stability_and_expansion_m6():
    T = coefficient_tables(6)
    assert T.stability_violations() == []
    assert expansion_residuals(T, 6) == []
    assert T["136245"] == (1, 0) and T["146235"] == (1, 0)
    with pytest.raises(ValueError):
        expansion_residuals(T, 7)


def test_conjecture_sweep_small():
    rep = conjecture_sweep(1)
    assert rep.non_layered_beta == [] and rep.negative_d == []
    rep = conjecture_sweep(6)
    assert rep.non_layered_beta == [] and rep.negative_d == []
    assert rep.zero_d_positive_c == [("136245", 1, 0), ("146235", 1, 0)]
    assert rep.sign_mismatch_small == []
    assert rep.d_exceeds_c == []


def test_small_sweeps_clean():
    for res in (bounds.verify_thm11(5), bounds.verify_thm12(3), bounds.verify_thm14(50),
                bounds.verify_keyres(100), bounds.verify_witness(3),
                bounds.verify_macdonald(4), bounds.verify_prop21(5),
                bounds.verify_prop21(6, samples=20), bounds.verify_prop21_keys(50),
                bounds.verify_pattern_witnesses(5)):
        assert res.ok, res.to_dict()
    assert bounds.verify_thm12(4, samples=10).checked == 10
    with pytest.raises(ValueError):
        bounds.verify_thm12(6)


def test_all_diagrams_enumerates_grid():
    cols = bounds.all_diagrams(2)
    assert cols.shape == (16, 2)
    assert len({tuple(r) for r in cols.tolist()}) == 16


def test_conjecture_sweep_through_7():
    rep = conjecture_sweep(7)
    assert rep.non_layered_beta == [] and rep.negative_d == [] and rep.negative_c == []
    assert [r.beta for r in rep.extremal] == [bounds.TABLE3[n][2] for n in range(1, 8)]
