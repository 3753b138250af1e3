"""Subset-sum enumeration engines, multisets, profiles, and the cache."""

import math
import os

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rootcoh import (
    BudgetExceededError,
    lambda_p_weights,
    max_column_profile,
    phi_sums,
    root_system,
)
from rootcoh.exterior import (
    WeightMultiset,
    _root_matrix,
    _sums_by_combinations,
    _sums_by_split,
    cache_filename,
    decode_vectors,
    encode_vectors,
    greedy_column_profile,
    subset_sums_reference,
    sum_vectors,
)
from rootcoh.rootsys import Weight


def as_dict(ms: WeightMultiset) -> dict:
    return {w.coords: m for w, m in ms.entries}


def test_phi_sums_degree_zero():
    for name in ("A1", "B3", "G2"):
        rs = root_system(name)
        ms = phi_sums(rs, 0, "-")
        assert as_dict(ms) == {(0,) * rs.rank: 1}


def test_phi_sums_full_degree_is_minus_two_rho():
    for name in ("A2", "C3", "F4"):
        rs = root_system(name)
        ms = phi_sums(rs, rs.num_positive_roots, "-")
        assert as_dict(ms) == {(-2,) * rs.rank: 1}


def test_phi_sums_g2_single_roots():
    g2 = root_system("G2")
    ms = phi_sums(g2, 1, "-")
    expected = {tuple(-c for c in r.weight.coords): 1 for r in g2.positive_roots}
    assert as_dict(ms) == expected


def test_phi_sums_out_of_range():
    g2 = root_system("G2")
    with pytest.raises(Exception):
        phi_sums(g2, 7, "-")
    with pytest.raises(Exception):
        phi_sums(g2, -1, "-")


def test_lambda_p_weights_examples():
    a2 = root_system("A2")
    rho = a2.rho
    assert as_dict(lambda_p_weights(a2, 1, rho)) == {
        (-1, 2): 1,
        (2, -1): 1,
        (0, 0): 1,
    }
    assert as_dict(lambda_p_weights(a2, 0, Weight.of(4, 5))) == {(4, 5): 1}
    assert as_dict(lambda_p_weights(a2, 3, rho)) == {(-1, -1): 1}


def test_totals_are_binomials():
    for name in ("A3", "B3", "G2", "D4"):
        rs = root_system(name)
        n = rs.num_positive_roots
        for p in range(n + 1):
            assert phi_sums(rs, p, "-").total == math.comb(n, p)


def test_sign_symmetry():
    for name in ("A2", "B3", "G2"):
        rs = root_system(name)
        for p in range(rs.num_positive_roots + 1):
            plus = phi_sums(rs, p, "+")
            minus = phi_sums(rs, p, "-")
            assert as_dict(minus) == as_dict(plus.negate())


def test_complement_symmetry():
    # multiplicity of 0 at degree p equals multiplicity of -2*rho at degree N-p
    for name in ("A3", "B3", "G2"):
        rs = root_system(name)
        n = rs.num_positive_roots
        zero = (0,) * rs.rank
        bottom = (-2,) * rs.rank
        for p in range(n + 1):
            m0 = as_dict(phi_sums(rs, p, "-")).get(zero, 0)
            m1 = as_dict(phi_sums(rs, n - p, "-")).get(bottom, 0)
            assert m0 == m1


def test_reference_enumeration_agrees():
    for name in ("A2", "B2", "A3", "G2"):
        rs = root_system(name)
        rows = [r.weight.coords for r in rs.positive_roots]
        for p in range(rs.num_positive_roots + 1):
            ref = subset_sums_reference(rows, p)
            got = {w.coords: m for w, m in phi_sums(rs, p, "+").entries}
            assert got == ref


def test_engines_agree_on_all_degrees():
    for name in ("B3", "G2", "D4"):
        rs = root_system(name)
        mat = _root_matrix(rs, -1)
        sweep = _sums_by_split(mat)
        for p in range(rs.num_positive_roots + 1):
            keys, counts = _sums_by_combinations(mat, p)
            np.testing.assert_array_equal(keys, sweep[p][0])
            np.testing.assert_array_equal(counts, sweep[p][1])


def test_threaded_split_matches_serial():
    rs = root_system("B4")
    mat = _root_matrix(rs, -1)
    serial = _sums_by_split(mat, threads=1)
    threaded = _sums_by_split(mat, threads=4)
    for (k1, c1), (k2, c2) in zip(serial, threaded):
        np.testing.assert_array_equal(k1, k2)
        np.testing.assert_array_equal(c1, c2)


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_encode_decode_round_trip(data):
    rank = data.draw(st.integers(1, 8))
    rows = data.draw(
        st.lists(
            st.tuples(*[st.integers(-60, 60) for _ in range(rank)]),
            min_size=1,
            max_size=20,
        )
    )
    arr = np.array(rows, dtype=np.int64)
    keys = encode_vectors(arr, rank)
    back = decode_vectors(keys, rank)
    np.testing.assert_array_equal(arr, back)
    # encoded order is lexicographic order
    order = np.argsort(keys, kind="stable")
    assert [tuple(arr[i]) for i in order] == sorted(map(tuple, rows))


def test_max_column_profile_examples():
    for name in ("A3", "D4", "E6"):
        rs = root_system(name)
        assert max_column_profile(rs, 1) == (2,) * rs.rank
    g2 = root_system("G2")
    assert max_column_profile(g2, 3)[1] == 6
    for name in ("A2", "B3", "F4"):
        rs = root_system(name)
        assert max_column_profile(rs, rs.num_positive_roots) == (2,) * rs.rank


def test_profile_matches_greedy_everywhere():
    for name in ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"):
        rs = root_system(name)
        for p in range(rs.num_positive_roots + 1):
            assert max_column_profile(rs, p) == greedy_column_profile(rs, p)


def test_profile_unimodal_shape():
    # rises while positive entries last, flat across the zeros, then falls
    for name in ("A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"):
        rs = root_system(name)
        n = rs.num_positive_roots
        for i in range(rs.rank):
            col = [r.weight.coords[i] for r in rs.positive_roots]
            m1 = sum(1 for v in col if v > 0)
            m3 = sum(1 for v in col if v == 0)
            series = [greedy_column_profile(rs, p)[i] for p in range(n + 1)]
            for p in range(1, n + 1):
                step = series[p] - series[p - 1]
                if p <= m1:
                    assert step > 0
                elif p <= m1 + m3:
                    assert step == 0
                else:
                    assert step < 0


def test_budget_refusal():
    e6 = root_system("E6")
    with pytest.raises(BudgetExceededError):
        phi_sums(e6, 18, "-")
    # small budgets refuse small jobs too
    g2 = root_system("G2")
    with pytest.raises(BudgetExceededError):
        phi_sums(g2, 3, "-", budget=10)


def test_large_rank_small_degree_runs():
    e8 = root_system("E8")
    ms = phi_sums(e8, 2, "-")
    assert ms.total == math.comb(120, 2)


def test_cache_round_trip(tmp_path):
    g2 = root_system("G2")
    plain = phi_sums(g2, 2, "-")
    cached_write = phi_sums(g2, 2, "-", cache_dir=tmp_path)
    assert cached_write == plain
    fname = cache_filename(g2, 2, -1)
    assert fname == "G2_2_minus.wms"
    assert (tmp_path / fname).exists()
    cached_read = phi_sums(g2, 2, "-", cache_dir=tmp_path)
    assert cached_read == plain
    assert not [p for p in os.listdir(tmp_path) if ".tmp" in p]


def test_cache_rejects_foreign_header(tmp_path):
    g2 = root_system("G2")
    phi_sums(g2, 2, "-", cache_dir=tmp_path)
    bad = tmp_path / cache_filename(g2, 3, -1)
    (tmp_path / cache_filename(g2, 2, -1)).rename(bad)
    with pytest.raises(Exception):
        phi_sums(g2, 3, "-", cache_dir=tmp_path)


def test_multiset_json_round_trip():
    b2 = root_system("B2")
    ms = phi_sums(b2, 2, "-")
    doc = ms.to_json_dict()
    assert WeightMultiset.from_json_dict(doc) == ms
    assert doc["schema"] == "rootcoh/1"


def test_entries_sorted_lexicographically():
    for name in ("B3", "G2"):
        rs = root_system(name)
        ms = phi_sums(rs, 2, "-")
        coords = [w.coords for w, _ in ms.entries]
        assert coords == sorted(coords)
