import dataclasses

import pytest

from partialhopf.corpus import groupoid_actions
from partialhopf.errors import IllDefined
from partialhopf.exactlin import Matrix, Subspace, unit_vec
from partialhopf.globalize import (
    check_globalization, check_ideal_iff_symmetric, check_minimality, convolution_algebra,
    diagonal_globalization, enlarged_globalization, globalization_morphism, largest_null_submodule,
    standard_globalization,
)
from partialhopf.groupoid import cyclic_group, group_as_groupoid, groupoid_algebra, pair_groupoid
from partialhopf.paction import ground_field_action, groupoid_to_algebra_action, induced_partial_action


def pair2_ground(lam=(1, 0, 0, 0)):
    return ground_field_action(groupoid_algebra(pair_groupoid(2)), lam)


def z2_counit():
    H = groupoid_algebra(group_as_groupoid(cyclic_group(2)))
    return ground_field_action(H, H.coalg.counit)


def induced(g):
    """The partial action induced on theta(A) by the global action on B."""
    img = Subspace.span(g.theta_B.columns(), g.B.dim)
    return induced_partial_action(g.B_action, img, g.theta_B @ g.p.A.one)


def test_convolution_algebra_is_a_module_algebra():
    p = pair2_ground()
    F = convolution_algebra(p.H, p.A)
    assert F.report.ok
    # unit is eps (x) 1_A, and eps(delta_g) = 1 for every arrow
    assert F.alg.unit == (1, 1, 1, 1)
    f = unit_vec(4, F.index(2, 0))
    assert F.evaluate(f, p.H.basis(2)) == (1,) and F.evaluate(f, p.H.basis(3)) == (0,)


def test_pair_groupoid_ground_field_globalization():
    p = pair2_ground()
    g = standard_globalization(p)
    assert (g.ambient.dim, g.B.dim, g.has_unit) == (4, 2, True)
    assert check_minimality(g)
    assert check_ideal_iff_symmetric(g) == (True, True)
    # restricting the global action back to theta(A) gives lambda again
    assert induced(g) == p


def test_every_symmetric_action_globalizes(symmetric_actions):
    for name, p in symmetric_actions.items():
        g = standard_globalization(p)
        rep = check_globalization(g)
        assert rep.ok, (name, str(rep))
        assert check_ideal_iff_symmetric(g) == (True, True)
        assert check_minimality(g), name
        # induced action agrees with p through theta: I_i T = T P_i
        ind = induced(g)
        img = Subspace.span(g.theta_B.columns(), g.B.dim)
        T = Matrix.from_columns([img.coordinates(t) for t in g.theta_B.columns()], p.A.dim)
        for i in range(p.H.dim):
            h = p.H.basis(i)
            assert ind.matrix(h) @ T == T @ p.matrix(h), name
        assert globalization_morphism(g, g).matrix == Matrix.identity(g.B.dim)


def test_global_action_is_its_own_globalization():
    p = groupoid_to_algebra_action(groupoid_actions()["pair2/Q2-swap"])
    g = standard_globalization(p)
    assert g.B.dim == p.A.dim
    assert g.theta_image == g.B


def test_minimal_globalizations_are_isomorphic(symmetric_actions):
    for p in list(symmetric_actions.values())[:8]:
        std = standard_globalization(p)
        diag = diagonal_globalization(std)
        assert check_globalization(diag).ok
        assert check_minimality(diag)
        phi = globalization_morphism(diag, std)
        assert phi.report.ok and phi.bijective


def test_enlarged_globalization_is_not_minimal():
    p = z2_counit()
    std = standard_globalization(p)
    big = enlarged_globalization(std)
    assert check_globalization(big).ok
    assert not check_minimality(big)
    assert largest_null_submodule(big).dim > 0
    phi = globalization_morphism(big, std)
    assert phi.report.ok and phi.surjective and not phi.injective


def test_enlarged_needs_hopf():
    with pytest.raises(ValueError):
        enlarged_globalization(standard_globalization(pair2_ground()))


def test_scaled_theta_is_not_multiplicative():
    g = standard_globalization(pair2_ground())
    bad = dataclasses.replace(g, theta=g.theta.scale(2), flags={})
    failed = check_globalization(bad).failed()
    assert "theta_multiplicative" in failed


def test_spurious_vector_in_B_is_caught():
    g = standard_globalization(pair2_ground())
    extra = next(unit_vec(4, k) for k in range(4) if not g.B.contains(unit_vec(4, k)))
    bad = dataclasses.replace(g, B=g.B + Subspace.span([extra], 4), flags={})
    assert "B_generated_by_theta" in check_globalization(bad).failed()


def test_morphism_between_different_actions_is_ill_defined():
    g1 = standard_globalization(pair2_ground((1, 0, 0, 0)))
    g2 = standard_globalization(pair2_ground((0, 1, 0, 0)))
    with pytest.raises(IllDefined):
        globalization_morphism(g1, g2)
