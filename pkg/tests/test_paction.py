from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from partialhopf.corpus import GROUPS, diagonal_action, groupoid_actions, groupoids, weak_hopf_algebras
from partialhopf.errors import BoundExceeded, NotAGroupoidAlgebra, NotARightIdeal, NotSymmetric, NotUnitalSubalgebra
from partialhopf.exactlin import Subspace
from partialhopf.groupoid import dual_groupoid_algebra, groupoid_algebra, pair_groupoid
from partialhopf.paction import (
    PartialActionMap, algebra_to_groupoid_action, check_module_algebra, check_partial_action, check_symmetric,
    classify_ground_field, classify_ground_field_oracle, derived_identity_suite, ground_field_action,
    ground_field_check, ground_field_is_global, groupoid_to_algebra_action, groupoid_unit_relation,
    hopf_iff_epsilon, induced_partial_action, right_HL_module,
)
from partialhopf.wha import FinDimAlgebra

GROUPOIDS = sorted(groupoids())

# counts from the brute-force oracle
EXPECTED = {"Z2": (2, 1), "Z3": (2, 1), "pair2": (2, 0), "pair3": (3, 0), "Z2+Z2": (4, 2), "Z3+Z2": (4, 2)}


@pytest.mark.parametrize("name", GROUPOIDS)
def test_classification_matches_oracle(groupoids, name):
    G = groupoids[name]
    found = classify_ground_field(G)
    assert sorted(ga.lam for ga in found) == classify_ground_field_oracle(G)
    assert (len(found), sum(ga.is_global for ga in found)) == EXPECTED[name]


def test_oracle_respects_bound():
    with pytest.raises(BoundExceeded):
        classify_ground_field_oracle(pair_groupoid(3), bound=8)


@pytest.mark.parametrize("name", GROUPOIDS)
def test_hopf_iff_counit_is_an_action(groupoids, name):
    assert hopf_iff_epsilon(groupoid_algebra(groupoids[name])) == (name in GROUPS)


def test_component_indicator_is_convolution_idempotent(groupoids):
    G = groupoids["Z3+Z2"]
    H = groupoid_algebra(G)
    for k in (1, 2):
        lam = tuple(int(G.r[g] == f"e{k}") for g in G.arrows)
        assert ground_field_check(H, lam) and ground_field_is_global(H, lam)


def test_any_subgroup_of_a_component_acts(groupoids):
    G = groupoids["Z3+Z2"]
    H = groupoid_algebra(G)
    for V in (("e1",), ("e2",), ("e2", "a_2")):
        assert ground_field_check(H, tuple(int(g in V) for g in G.arrows))


@given(st.sampled_from(["pair2", "pair3", "Z2+Z2", "Z3+Z2"]).flatmap(
    lambda name: st.tuples(st.just(name), st.lists(st.sampled_from([-1, 0, 1, 2]),
                                                   min_size=len(groupoids()[name]), max_size=len(groupoids()[name])))))
def test_only_subgroup_indicators_act_on_the_field(case):
    name, lam = case
    G = groupoids()[name]
    lam = tuple(Fraction(x) for x in lam)
    valid = {ga.lam for ga in classify_ground_field(G)}
    assert ground_field_check(groupoid_algebra(G), lam) == (lam in valid)


def test_ground_field_actions_pass_all_suites(symmetric_actions):
    for name, p in symmetric_actions.items():
        assert check_partial_action(p).ok, name
        assert check_symmetric(p), name
        rep = derived_identity_suite(p)
        assert rep.ok, (name, str(rep))
        assert right_HL_module(p).report.ok, name
        assert groupoid_unit_relation(p).ok, name
        assert p.is_global == check_module_algebra(p, composition_only=True).ok


@pytest.mark.parametrize("name", sorted(groupoid_actions()))
def test_groupoid_roundtrip_is_exact(name):
    pga = groupoid_actions()[name]
    p = groupoid_to_algebra_action(pga)
    back = algebra_to_groupoid_action(p)
    assert back.certificate.ok
    assert back == pga
    assert groupoid_to_algebra_action(back) == p


def test_algebra_roundtrip_on_ground_field(groupoids):
    for G in groupoids.values():
        H = groupoid_algebra(G)
        for ga in classify_ground_field(G):
            p = ground_field_action(H, ga.lam)
            assert groupoid_to_algebra_action(algebra_to_groupoid_action(p)) == p


def test_globality_of_groupoid_examples():
    acts = {k: groupoid_to_algebra_action(v) for k, v in groupoid_actions().items()}
    assert {k: p.is_global for k, p in acts.items()} == {
        "pair2/Q2-swap": True, "pair2/Q2-split": False, "pair2/Q4-partial": False,
        "Z2/Q2-swap": True, "Z2/Q2-partial": False, "Z2+Z2/Q2-swap": True,
    }


def test_unit_acts_as_projection_onto_ideals():
    p = groupoid_to_algebra_action(groupoid_actions()["pair2/Q4-partial"])
    H = p.H
    # delta_g . 1 is the unit of D_g
    assert [p(H.basis(i), p.one) for i in range(4)] == [(1, 1, 0, 0), (0, 0, 1, 1), (1, 0, 0, 0), (0, 0, 1, 0)]


def test_non_partial_table_is_rejected():
    H = weak_hopf_algebras()["Q[Z2]"]
    p = ground_field_action(H, (1, 2))
    assert not check_partial_action(p).ok
    assert not ground_field_check(H, (1, 2))


def test_reconstruction_needs_groupoid_algebra():
    G = pair_groupoid(2)
    H = dual_groupoid_algebra(G)
    p = ground_field_action(H, H.coalg.counit)
    with pytest.raises(NotAGroupoidAlgebra):
        algebra_to_groupoid_action(p)


def test_reconstruction_needs_symmetry(monkeypatch):
    p = groupoid_to_algebra_action(groupoid_actions()["pair2/Q2-split"])
    monkeypatch.setattr(PartialActionMap, "is_symmetric", property(lambda self: False))
    with pytest.raises(NotSymmetric):
        algebra_to_groupoid_action(p)


def test_restricting_a_global_action_to_an_ideal():
    # Z2 swapping two idempotents, restricted to Q p0: only the identity survives
    pga = groupoid_actions()["Z2/Q2-swap"]
    glob = groupoid_to_algebra_action(pga)
    A = Subspace.span([(1, 0)], 2)
    p = induced_partial_action(glob, A, (1, 0))
    assert p == ground_field_action(glob.H, (1, 0))
    assert check_partial_action(p).ok and not p.is_global


def test_induced_action_input_errors():
    glob = groupoid_to_algebra_action(groupoid_actions()["Z2/Q2-swap"])
    with pytest.raises(NotUnitalSubalgebra):
        induced_partial_action(glob, Subspace.span([(1, 0)], 2), (1, 1))
    # upper triangular 2x2 matrices on E11, E12, E22; E11 spans no right ideal
    upper = FinDimAlgebra.from_triples(3, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)], (1, 0, 1))
    zero = (0, 0, 0)
    B = PartialActionMap(glob.H, upper, [[zero] * 3] * 2)
    with pytest.raises(NotARightIdeal):
        induced_partial_action(B, Subspace.span([(1, 0, 0)], 3), (1, 0, 0))


def test_diagonal_action_helper_builds_valid_actions():
    pga = diagonal_action(pair_groupoid(2), 2, {"e1": [0], "e2": [1], "g12": [], "g21": []},
                          {"e1": {0: 0}, "e2": {1: 1}, "g12": {}, "g21": {}})
    assert pga == groupoid_actions()["pair2/Q2-split"]
