import pytest
from hypothesis import given
from hypothesis import strategies as st

from partialhopf.corpus import groupoid_actions
from partialhopf.errors import NotAGroup, NotAGroupoid, NotAnIdentity
from partialhopf.exactlin import Matrix
from partialhopf.groupoid import (
    FiniteGroupoid, GroupTable, PartialGroupoidAction, check_groupoid_paction, cyclic_group,
    disjoint_union_of_groups, groupoid_algebra, isotropy_group, pair_groupoid, subgroups,
    subgroups_of_isotropy, validate_group, validate_groupoid,
)
from partialhopf.io import groupoid_from_dict, groupoid_to_dict


def klein():
    els = ("e", "a", "b", "c")
    m = {}
    for x in els:
        for y in els:
            if x == "e":
                m[(x, y)] = y
            elif y == "e":
                m[(x, y)] = x
            elif x == y:
                m[(x, y)] = "e"
            else:
                m[(x, y)] = ({"a", "b", "c"} - {x, y}).pop()
    return GroupTable(els, m, "e")


def n_divisors(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


@given(st.integers(1, 12))
def test_cyclic_subgroups_match_divisor_count(n):
    assert len(subgroups(cyclic_group(n))) == n_divisors(n)


def test_klein_four_group_has_five_subgroups():
    assert len(subgroups(validate_group(klein()))) == 5


@pytest.mark.parametrize("name", ["Z2", "Z3", "pair2", "pair3", "Z2+Z2", "Z3+Z2"])
def test_corpus_groupoids_validate(groupoids, name):
    assert validate_groupoid(groupoids[name]).ok


def test_pair_groupoid_shape():
    G = pair_groupoid(3)
    assert len(G) == 9
    assert G.identities == ("e1", "e2", "e3")
    assert G.mul("g12", "g23") == "g13"
    assert G.mul("g23", "g12") is None
    assert (G.d["g12"], G.r["g12"]) == ("e2", "e1")
    assert [len(isotropy_group(G, e).elements) for e in G.identities] == [1, 1, 1]


def test_disjoint_union_labels_and_isotropy():
    G = disjoint_union_of_groups([cyclic_group(3), cyclic_group(2)])
    assert G.identities == ("e1", "e2")
    assert isotropy_group(G, "e1").elements == ("e1", "a_1", "a2_1")
    with pytest.raises(NotAnIdentity):
        isotropy_group(G, "a_1")
    # subgroups of the isotropy groups: 2 of Z3, 2 of Z2
    assert [V for _, V in subgroups_of_isotropy(G)] == [("e1",), ("a2_1", "a_1", "e1"), ("e2",), ("a_2", "e2")]


def test_broken_group_is_rejected():
    t = cyclic_group(3)
    m = dict(t.mult)
    m[("a", "a")] = "a"
    with pytest.raises(NotAGroup):
        validate_group(GroupTable(t.elements, m, "e"))


def test_broken_groupoid_is_reported():
    G = pair_groupoid(2)
    comp = dict(G.comp)
    comp[("g12", "g21")] = "e2"
    bad = FiniteGroupoid(G.arrows, G.d, G.r, G.inv, comp)
    assert not validate_groupoid(bad).ok


def test_loader_rejects_products_of_non_composable_arrows():
    d = groupoid_to_dict(pair_groupoid(2))
    d["comp"].append(["g12", "g12", "e1"])
    with pytest.raises(NotAGroupoid):
        groupoid_from_dict(d)


def test_groupoid_json_roundtrip(groupoids):
    for G in groupoids.values():
        assert groupoid_from_dict(groupoid_to_dict(G)) == G


def test_groupoid_algebra_basis_follows_arrows():
    G = pair_groupoid(2)
    H = groupoid_algebra(G)
    assert H.labels == G.arrows
    assert H.one == (1, 1, 0, 0)


@pytest.mark.parametrize("name", sorted(groupoid_actions()))
def test_corpus_groupoid_actions_pass(name):
    rep = check_groupoid_paction(groupoid_actions()[name])
    assert rep.ok, str(rep)


def test_scaled_isomorphism_is_not_multiplicative():
    pga = groupoid_actions()["pair2/Q2-swap"]
    isos = dict(pga.isos)
    isos["g12"] = isos["g12"].scale(2)
    bad = PartialGroupoidAction(pga.groupoid, pga.A, pga.ideals, pga.units, isos)
    failed = check_groupoid_paction(bad).failed()
    assert "iso_multiplicative" in failed


def test_non_central_unit_is_caught():
    pga = groupoid_actions()["pair2/Q4-partial"]
    units = dict(pga.units)
    units["g12"] = (1, 1, 0, 0)  # idempotent, but not the unit of D_g12
    bad = PartialGroupoidAction(pga.groupoid, pga.A, pga.ideals, units, pga.isos)
    assert "unit_in_ideal" in check_groupoid_paction(bad).failed()


def test_isos_with_wrong_shape_fail():
    pga = groupoid_actions()["pair2/Q2-swap"]
    isos = dict(pga.isos)
    isos["g12"] = Matrix.zeros(2, 1)
    bad = PartialGroupoidAction(pga.groupoid, pga.A, pga.ideals, pga.units, isos)
    assert "iso_bijective" in check_groupoid_paction(bad).failed()
