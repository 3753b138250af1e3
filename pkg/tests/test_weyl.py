"""Dot action, regularization, and the dimension formula."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from rootcoh import bwb, dot_reflect, pairing, root_system, weyl_dim
from rootcoh.rootsys import Weight
from rootcoh.weyl import BwbOutcome, WeylError, degree_by_inversions, is_singular

SMALL_TYPES = ("A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2")


def test_pairing_rho_against_simple_coroots():
    for name in ("A4", "B3", "F4", "G2", "E6"):
        rs = root_system(name)
        for i in range(rs.rank):
            assert pairing(rs, rs.rho, rs.simple_root(i)) == 1


def test_pairing_examples():
    g2 = root_system("G2")
    highest_short = g2.root_by_coords((1, 2))
    assert pairing(g2, g2.rho, highest_short) == g2.coxeter_number - 1 == 5
    a2 = root_system("A2")
    assert pairing(a2, Weight.of(-1, 2), a2.root_by_coords((1, 1))) == 1


def test_pairing_dimension_mismatch():
    a2 = root_system("A2")
    with pytest.raises(WeylError):
        pairing(a2, Weight.of(1, 2, 3), a2.simple_root(0))


def test_dot_reflect_examples():
    a2 = root_system("A2")
    assert dot_reflect(a2, 0, Weight.of(0, 0)) == Weight.of(-2, 1)
    for name in ("A2", "B2", "G2", "C3"):
        rs = root_system(name)
        for i in range(rs.rank):
            minus_alpha = -rs.simple_root(i).weight
            assert dot_reflect(rs, i, minus_alpha) == Weight.zero(rs.rank)


@settings(max_examples=200, deadline=None)
@given(
    name=st.sampled_from(SMALL_TYPES),
    data=st.data(),
)
def test_dot_reflect_is_an_involution(name, data):
    rs = root_system(name)
    coords = data.draw(
        st.tuples(*[st.integers(-10, 10) for _ in range(rs.rank)])
    )
    i = data.draw(st.integers(0, rs.rank - 1))
    mu = Weight(coords)
    assert dot_reflect(rs, i, dot_reflect(rs, i, mu)) == mu


def test_bwb_zero_weight():
    for name in ("A1", "B3", "E7", "G2"):
        rs = root_system(name)
        out = bwb(rs, Weight.zero(rs.rank))
        assert out == BwbOutcome.concentrated(0, Weight.zero(rs.rank), 1)


def test_bwb_minus_rho_is_singular():
    for name in ("A2", "C3", "F4"):
        rs = root_system(name)
        assert bwb(rs, -rs.rho).is_singular


def test_bwb_minus_simple_root():
    for name in ("A2", "B2", "D4", "F4", "G2", "E6"):
        rs = root_system(name)
        for i in range(rs.rank):
            out = bwb(rs, -rs.simple_root(i).weight)
            assert not out.is_singular
            assert out.degree == 1
            assert out.dominant == Weight.zero(rs.rank)
            assert out.dim == 1


def test_bwb_singular_iff_coroot_scan():
    for name in ("A2", "B2", "G2"):
        rs = root_system(name)
        for coords in itertools.product(range(-6, 7), repeat=rs.rank):
            lam = Weight(coords)
            scan = is_singular(rs, tuple(c + 1 for c in coords))
            assert bwb(rs, lam).is_singular == scan


def test_bwb_degree_matches_inversion_count():
    for name in ("A3", "C3", "G2"):
        rs = root_system(name)
        rng = random.Random(7)
        for _ in range(300):
            lam = Weight(tuple(rng.randint(-8, 8) for _ in range(rs.rank)))
            out = bwb(rs, lam)
            inv = degree_by_inversions(rs, lam)
            if out.is_singular:
                assert inv is None
            else:
                assert out.degree == inv


def test_bwb_pivot_choice_is_irrelevant():
    rng = random.Random(20240809)
    names = ("A1", "A2", "A3", "B2", "B3", "C3", "G2")
    for _ in range(1000):
        rs = root_system(rng.choice(names))
        lam = Weight(tuple(rng.randint(-8, 8) for _ in range(rs.rank)))
        reference = bwb(rs, lam)

        def random_negative(x):
            return rng.choice([i for i, c in enumerate(x) if c < 0])

        assert bwb(rs, lam, pivot=random_negative) == reference


def test_bwb_pivot_must_be_negative():
    a2 = root_system("A2")
    with pytest.raises(WeylError):
        bwb(a2, Weight.of(-3, 4), pivot=lambda x: 1)


def test_weyl_dim_trivial_and_a1():
    for name in ("A1", "B4", "E6"):
        rs = root_system(name)
        assert weyl_dim(rs, Weight.zero(rs.rank)) == 1
    a1 = root_system("A1")
    for n in range(11):
        assert weyl_dim(a1, Weight.of(n)) == n + 1


def test_weyl_dim_adjoint_of_a2():
    a2 = root_system("A2")
    assert weyl_dim(a2, Weight.of(1, 1)) == 2 * a2.num_positive_roots + a2.rank == 8


def test_weyl_dim_known_values():
    g2 = root_system("G2")
    assert weyl_dim(g2, Weight.of(0, 1)) == 7
    assert weyl_dim(g2, Weight.of(1, 0)) == 14
    b3 = root_system("B3")
    assert weyl_dim(b3, Weight.of(1, 0, 0)) == 7
    assert weyl_dim(b3, Weight.of(0, 0, 1)) == 8
    e8 = root_system("E8")
    assert weyl_dim(e8, e8.rho) == 2**120


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(WeylError):
        weyl_dim(root_system("A2"), Weight.of(-1, 0))


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_weyl_dim_diagram_automorphisms(data):
    a3 = root_system("A3")
    c = data.draw(st.tuples(*[st.integers(0, 6) for _ in range(3)]))
    assert weyl_dim(a3, Weight(c)) == weyl_dim(a3, Weight(c[::-1]))
    d4 = root_system("D4")
    c4 = data.draw(st.tuples(*[st.integers(0, 4) for _ in range(4)]))
    swapped = (c4[0], c4[1], c4[3], c4[2])
    assert weyl_dim(d4, Weight(c4)) == weyl_dim(d4, Weight(swapped))


def test_weyl_dim_e6_reversal():
    e6 = root_system("E6")
    lam = Weight.of(1, 2, 0, 3, 1, 2)
    flipped = Weight.of(2, 2, 1, 3, 0, 1)
    assert weyl_dim(e6, lam) == weyl_dim(e6, flipped)


def test_outcome_json_round_trip():
    rs = root_system("B2")
    for lam in (Weight.of(2, 3), Weight.of(-4, 1), -rs.rho):
        out = bwb(rs, lam)
        doc = out.to_json_dict()
        assert BwbOutcome.from_json_dict(doc) == out
    singular_doc = bwb(rs, -rs.rho).to_json_dict()
    assert singular_doc == {"kind": "singular"}
