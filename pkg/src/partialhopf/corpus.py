"""Named examples used by the tests, the scripts and the acceptance run."""
from __future__ import annotations

from .exactlin import ONE, Matrix, Subspace, unit_vec, vadd, zero_vec
from .groupoid import (
    FiniteGroupoid, PartialGroupoidAction, cyclic_group, disjoint_union_of_groups,
    dual_groupoid_algebra, group_as_groupoid, groupoid_algebra, pair_groupoid,
)
from .paction import classify_ground_field, ground_field_action, groupoid_to_algebra_action
from .wha import diagonal_algebra


def groupoids() -> dict:
    return {
        "Z2": group_as_groupoid(cyclic_group(2)),
        "Z3": group_as_groupoid(cyclic_group(3)),
        "pair2": pair_groupoid(2),
        "pair3": pair_groupoid(3),
        "Z2+Z2": disjoint_union_of_groups([cyclic_group(2), cyclic_group(2)]),
        "Z3+Z2": disjoint_union_of_groups([cyclic_group(3), cyclic_group(2)]),
    }


GROUPS = ("Z2", "Z3")


def weak_hopf_algebras(include_duals: bool = False) -> dict:
    out = {f"Q[{k}]": groupoid_algebra(G) for k, G in groupoids().items()}
    if include_duals:
        out.update({f"Q^{k}": dual_groupoid_algebra(G) for k, G in groupoids().items()})
    return out


def _span_units(n, idx) -> Subspace:
    return Subspace.span([unit_vec(n, i) for i in idx], n)


def _unit_of(n, idx):
    v = zero_vec(n)
    for i in idx:
        v = vadd(v, unit_vec(n, i))
    return v


def diagonal_action(G: FiniteGroupoid, n: int, supports: dict, moves: dict) -> PartialGroupoidAction:
    """A partial action on ``Q^n`` (orthogonal idempotents ``p_i``).

    ``supports[g]`` lists the ``p_i`` spanning ``D_g`` and ``moves[g]`` maps each
    index of ``D_{g^-1}`` to its image index in ``D_g``.
    """
    A = diagonal_algebra(n)
    ideals = {g: _span_units(n, supports[g]) for g in G.arrows}
    units = {g: _unit_of(n, supports[g]) for g in G.arrows}
    isos = {}
    for g in G.arrows:
        src = sorted(supports[G.inv[g]])
        isos[g] = Matrix.from_columns([unit_vec(n, moves[g][i]) for i in src], n) if src \
            else Matrix.zeros(n, 0)
    return PartialGroupoidAction(G, A, ideals, units, isos)


def groupoid_actions() -> dict:
    """Symmetric partial groupoid actions on algebras with nontrivial ideals."""
    gs = groupoids()
    P2, Z2, Z2Z2 = gs["pair2"], gs["Z2"], gs["Z2+Z2"]
    ident = lambda idx: {i: i for i in idx}
    return {
        "pair2/Q2-swap": diagonal_action(
            P2, 2,
            {"e1": [0], "e2": [1], "g12": [0], "g21": [1]},
            {"e1": ident([0]), "e2": ident([1]), "g12": {1: 0}, "g21": {0: 1}}),
        "pair2/Q2-split": diagonal_action(
            P2, 2,
            {"e1": [0], "e2": [1], "g12": [], "g21": []},
            {"e1": ident([0]), "e2": ident([1]), "g12": {}, "g21": {}}),
        "pair2/Q4-partial": diagonal_action(
            P2, 4,
            {"e1": [0, 1], "e2": [2, 3], "g12": [0], "g21": [2]},
            {"e1": ident([0, 1]), "e2": ident([2, 3]), "g12": {2: 0}, "g21": {0: 2}}),
        "Z2/Q2-swap": diagonal_action(
            Z2, 2, {"e": [0, 1], "a": [0, 1]}, {"e": ident([0, 1]), "a": {0: 1, 1: 0}}),
        "Z2/Q2-partial": diagonal_action(
            Z2, 2, {"e": [0, 1], "a": [0]}, {"e": ident([0, 1]), "a": {0: 0}}),
        "Z2+Z2/Q2-swap": diagonal_action(
            Z2Z2, 2,
            {"e1": [0, 1], "a_1": [0, 1], "e2": [], "a_2": []},
            {"e1": ident([0, 1]), "a_1": {0: 1, 1: 0}, "e2": {}, "a_2": {}}),
    }


def ground_field_actions() -> dict:
    out = {}
    for name, G in groupoids().items():
        H = groupoid_algebra(G)
        for ga in classify_ground_field(G):
            out[f"{name}/ground[{ga.e}:{','.join(ga.V)}]"] = ground_field_action(H, ga.lam)
    return out


def symmetric_actions() -> dict:
    """Every symmetric partial action of a groupoid algebra in the corpus."""
    out = ground_field_actions()
    for name, pga in groupoid_actions().items():
        out[name] = groupoid_to_algebra_action(pga)
    return out


__all__ = [
    "groupoids", "GROUPS", "weak_hopf_algebras", "diagonal_action",
    "groupoid_actions", "ground_field_actions", "symmetric_actions",
]
