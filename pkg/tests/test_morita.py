import pytest

from partialhopf import morita
from partialhopf.corpus import groupoid_actions
from partialhopf.errors import AntipodeNotInvertible, IllDefined, NotSymmetric
from partialhopf.exactlin import Subspace
from partialhopf.globalize import standard_globalization
from partialhopf.groupoid import cyclic_group, group_as_groupoid, groupoid_algebra, pair_groupoid
from partialhopf.morita import (
    build_M_N, build_psi, check_context_associativity, check_morita_surjectivity, check_inverse_antipode_image,
    witness_identity,
)
from partialhopf.paction import ground_field_action, groupoid_to_algebra_action
from partialhopf.smash import build_smash


def pair2_ground():
    return ground_field_action(groupoid_algebra(pair_groupoid(2)), (1, 0, 0, 0))


@pytest.fixture(scope="module")
def contexts(symmetric_actions):
    return {name: build_M_N(p) for name, p in symmetric_actions.items()}


def test_surjective_context_on_every_symmetric_action(contexts):
    for name, ctx in contexts.items():
        assert check_morita_surjectivity(ctx) == (True, True), name
        assert check_context_associativity(ctx), name
        assert ctx.report.ok, (name, str(ctx.report))
        assert ctx.report.passed("witness_identity")


def test_pair_groupoid_ground_field_context():
    ctx = build_M_N(pair2_ground())
    dims = (ctx.corner.dim, ctx.AH.dim, ctx.g.B.dim, ctx.BH.dim, ctx.M_full.dim, ctx.M_corner.dim, ctx.N.dim)
    assert dims == (1, 2, 2, 4, 2, 1, 2)
    assert check_morita_surjectivity(ctx) == (True, True)
    assert ctx.has_unit_B


def test_global_action_gives_trivial_context():
    ctx = build_M_N(groupoid_to_algebra_action(groupoid_actions()["pair2/Q2-swap"]))
    full = Subspace.full(ctx.BH.dim)
    assert ctx.M_full == ctx.M_corner == ctx.N == full
    assert ctx.psi.matrix.rank == ctx.BH.dim


def test_psi_transports_the_left_unit(contexts):
    for ctx in contexts.values():
        P = ctx.psi.matrix
        u = P @ ctx.AH.left_unit
        for m in ctx.M_corner.basis:
            assert ctx.BH.mul(u, m) == m


def test_psi_is_injective_with_a_left_inverse(contexts):
    for ctx in contexts.values():
        rep = ctx.psi.report
        assert rep.ok
        assert rep.passed("psi_prime_left_inverse") and rep.passed("psi_multiplicative")
        assert ctx.psi.matrix.rank == ctx.AH.dim


def test_inverse_antipode_acts_inside_theta_image(symmetric_actions):
    for p in symmetric_actions.values():
        assert check_inverse_antipode_image(standard_globalization(p)).ok


def test_corner_alone_does_not_generate_BH():
    ctx = build_M_N(pair2_ground())
    mul = ctx.BH.mul
    NM = Subspace.span([mul(n, m) for n in ctx.N.basis for m in ctx.M_corner.basis], ctx.BH.dim)
    assert NM.dim < ctx.BH.dim
    MN = Subspace.span([mul(m, n) for m in ctx.M_corner.basis for n in ctx.N.basis], ctx.BH.dim)
    assert MN == ctx.M_corner


def test_witness_identity_standalone():
    ctx = build_M_N(pair2_ground())
    rep = witness_identity(ctx)
    assert rep.ok and rep.counts["witness_identity"] == 4 * 1 * 4


def test_non_symmetric_input_is_rejected():
    H = groupoid_algebra(group_as_groupoid(cyclic_group(2)))
    with pytest.raises(NotSymmetric):
        build_M_N(ground_field_action(H, (1, 2)))


def test_singular_antipode_is_rejected(monkeypatch):
    monkeypatch.setattr(morita, "antipode_inverse", lambda H: None)
    with pytest.raises(AntipodeNotInvertible):
        build_M_N(pair2_ground())


def test_scaled_theta_makes_psi_ill_defined():
    p = pair2_ground()
    g = standard_globalization(p)
    AH, BH = build_smash(p), build_smash(g.B_action)
    with pytest.raises(IllDefined):
        build_psi(AH, BH, g.theta_B.scale(2))
