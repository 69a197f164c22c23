import pytest

from partialhopf.corpus import groupoid_actions
from partialhopf.errors import WellDefinednessFailure
from partialhopf.exactlin import ONE
from partialhopf.groupoid import groupoid_algebra, pair_groupoid
from partialhopf.paction import PartialActionMap, ground_field_action, groupoid_to_algebra_action
from partialhopf.smash import (
    balancing_relations, build_partial_smash, build_smash, check_unit_iff_global, tensor_over_HL, verify_smash,
)


def pair2_ground():
    G = pair_groupoid(2)
    return G, ground_field_action(groupoid_algebra(G), (1, 0, 0, 0))


def test_pair_groupoid_ground_field_dimensions():
    # A = Q, H = Q[pair2], V = {e1}: 4 ambient tensors, 2 relations, 2 classes, 1-dim corner
    _, p = pair2_ground()
    s = build_smash(p)
    assert (s.quot.ambient_dim, s.quot.relations.dim, s.dim) == (4, 2, 2)
    assert build_partial_smash(s).dim == 1
    assert [s.class_label(x) for x in range(s.dim)] == ["1#e1", "1#g12"]


def test_right_unit_fails_outside_the_isotropy_group():
    G, p = pair2_ground()
    s = build_smash(p)
    one = s.left_unit
    nonzero = []
    for g in G.arrows:
        if g == "e1":
            continue
        x = s.cls((ONE,), p.H.basis(G.index[g]))
        assert s.mul(x, one) == (0,) * s.dim
        if any(x):
            nonzero.append(g)
    assert nonzero == ["g12"]
    assert s.right_unit_failures() == [1]


def test_all_symmetric_smash_products_verify(symmetric_actions):
    seen = set()
    for name, p in symmetric_actions.items():
        s = build_smash(p)
        assert s.report.ok, name
        ps = build_partial_smash(s)
        assert ps.report.ok
        right, glob = check_unit_iff_global(p, s)
        seen.add(glob)
        assert right == glob
        assert (ps.dim == s.dim) == glob
    assert seen == {True, False}


def test_balancing_relations_vanish_in_quotient():
    p = groupoid_to_algebra_action(groupoid_actions()["pair2/Q4-partial"])
    q = tensor_over_HL(p)
    for r in balancing_relations(p):
        assert q.project_sparse(r) == {}


def test_global_smash_is_unital():
    p = groupoid_to_algebra_action(groupoid_actions()["pair2/Q2-swap"])
    s = build_smash(p)
    assert s.right_unit_holds
    u = s.left_unit
    for x in range(s.dim):
        b = s.basis(x)
        assert s.mul(u, b) == b == s.mul(b, u)


def test_corner_table_matches_ambient_product():
    p = groupoid_to_algebra_action(groupoid_actions()["Z2/Q2-partial"])
    ps = build_partial_smash(build_smash(p))
    d = ps.dim
    V = ps.subspace
    s = ps.smash
    for a in range(d):
        for b in range(d):
            assert V.from_coordinates(ps.mult[a][b]) == s.mul(V.basis[a], V.basis[b])


def test_non_action_breaks_well_definedness():
    # delta_g12 . 1 = 2 is not a partial action; the product stops being well defined
    _, p = pair2_ground()
    act = [list(r) for r in p.act]
    act[2][0] = (2,)
    bad = PartialActionMap(p.H, p.A, act)
    with pytest.raises(WellDefinednessFailure):
        build_smash(bad)
    assert not verify_smash(build_smash(bad, verify=False)).ok
