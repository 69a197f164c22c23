import pytest
from hypothesis import given
from hypothesis import strategies as st

from partialhopf.corpus import GROUPS, weak_hopf_algebras
from partialhopf.errors import DimensionMismatch
from partialhopf.exactlin import Matrix, Subspace, unit_vec, vscale
from partialhopf.groupoid import cyclic_group, disjoint_union_of_groups, groupoid_algebra, pair_groupoid
from partialhopf.wha import (
    FinDimAlgebra, FinDimCoalgebra, WeakHopfAlgebra, antipode_inverse, canonical_projections, check_algebra,
    check_coalgebra, check_weak_bialgebra, check_weak_hopf, diagonal_algebra, find_unit, lemma_suite, subalgebra,
)

CORPUS = sorted(weak_hopf_algebras(include_duals=True))


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_passes_axioms_and_derived_identities(whas, name):
    H = whas[name]
    assert check_weak_hopf(H).ok
    rep = lemma_suite(H)
    assert rep.ok, str(rep)
    assert not rep.skipped


@pytest.mark.parametrize("name", CORPUS)
def test_counital_maps_are_idempotent_projections(whas, name):
    H = whas[name]
    for M in (H.eps_L_matrix, H.eps_R_matrix):
        assert M @ M == M
    pr = canonical_projections(H)
    assert pr.HL.dim == pr.HR.dim
    for z in pr.HL.basis:
        assert H.S(pr.S_R_inv_of(z)) == z


def test_groupoid_counital_maps_pick_target_and_source(groupoids):
    # eps_L(delta_g) = delta_{r(g)}, eps_R(delta_g) = delta_{d(g)}, by expanding the definitions
    for G in groupoids.values():
        H = groupoid_algebra(G)
        idx = G.index
        for g in G.arrows:
            assert H.eps_L(H.basis(idx[g])) == unit_vec(H.dim, idx[G.r[g]])
            assert H.eps_R(H.basis(idx[g])) == unit_vec(H.dim, idx[G.d[g]])
        assert H.HL.dim == H.HR.dim == len(G.identities)


def test_only_groups_give_hopf_algebras(groupoids):
    for name, G in groupoids.items():
        assert groupoid_algebra(G).is_hopf() == (name in GROUPS)


@st.composite
def small_groupoids(draw):
    if draw(st.booleans()):
        return pair_groupoid(draw(st.integers(1, 3)))
    orders = draw(st.lists(st.integers(1, 4), min_size=1, max_size=3))
    return disjoint_union_of_groups([cyclic_group(n) for n in orders])


@given(small_groupoids())
def test_every_groupoid_algebra_is_weak_hopf(G):
    H = groupoid_algebra(G)
    assert check_weak_hopf(H).ok
    assert lemma_suite(H).ok


vectors = st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=2), min_size=9, max_size=9)


@given(vectors, vectors)
def test_antipode_reverses_products_on_random_elements(x, y):
    H = weak_hopf_algebras(include_duals=True)["Q^pair3"]
    x, y = tuple(x), tuple(y)
    assert H.S(H.mul(x, y)) == H.mul(H.S(y), H.S(x))
    assert H.eps_L(H.eps_L(x)) == H.eps_L(x)


def test_perturbed_unit_is_caught():
    H = weak_hopf_algebras()["Q[Z2]"]
    bad = FinDimAlgebra(H.dim, H.alg.mult, vscale(2, H.one))
    assert set(check_algebra(bad).failed()) == {"unit_left", "unit_right"}


def test_bad_counit_is_caught():
    H = weak_hopf_algebras()["Q[pair2]"]
    bad = FinDimCoalgebra(H.dim, H.coalg.delta, vscale(2, H.coalg.counit))
    assert set(check_coalgebra(bad).failed()) == {"counit_left", "counit_right"}


def test_identity_antipode_on_Z3_fails():
    H = weak_hopf_algebras()["Q[Z3]"]
    bad = WeakHopfAlgebra(H.alg, H.coalg, Matrix.identity(3))
    failed = check_weak_hopf(bad).failed()
    assert {"antipode_eps_L", "antipode_eps_R"} <= set(failed)


def test_forcing_delta_one_to_be_one_tensor_one_breaks_weak_axioms():
    H = weak_hopf_algebras()["Q[pair2]"]
    entries = [e for e in H.coalg.entries() if e[0] != 0]
    entries += [(0, i, j, 1) for i in (0, 1) for j in (0, 1) if (i, j) != (1, 1)]
    K = WeakHopfAlgebra(H.alg, FinDimCoalgebra.from_entries(H.dim, entries, H.coalg.counit), H.antipode)
    assert "delta_multiplicative" in check_weak_bialgebra(K).failed()
    assert not check_weak_hopf(K).ok


def test_antipode_inverse_of_groupoid_algebra_is_itself(groupoids):
    for G in groupoids.values():
        H = groupoid_algebra(G)
        assert antipode_inverse(H) == H.antipode


def test_singular_antipode_has_no_inverse():
    H = weak_hopf_algebras()["Q[Z2]"]
    assert antipode_inverse(WeakHopfAlgebra(H.alg, H.coalg, Matrix.zeros(2, 2))) is None


def test_units_of_subalgebras():
    D = diagonal_algebra(3)
    assert find_unit(D) == (1, 1, 1)
    S = subalgebra(D, Subspace.span([(1, 0, 0), (0, 1, 0)], 3))
    assert S.unit == (1, 1)
    nil = FinDimAlgebra.from_triples(2, [(0, 0, 1, 1)])
    assert find_unit(nil) is None
    rep = check_algebra(nil)
    assert rep.passed("associativity") and rep.failed() == ["unit_present"]


def test_shape_errors():
    H = weak_hopf_algebras()["Q[Z2]"]
    with pytest.raises(DimensionMismatch):
        WeakHopfAlgebra(H.alg, H.coalg, Matrix.identity(3))
    with pytest.raises(DimensionMismatch):
        FinDimAlgebra(2, [[(1, 0)]])
