"""Partial actions ``h . a`` of a weak Hopf algebra on an algebra, given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import (
    BoundExceeded, ConsistencyError, DimensionMismatch, NotAGroupoidAlgebra, NotAPartialAction,
    NotARightIdeal, NotSymmetric, NotUnitalSubalgebra,
)
from .exactlin import ONE, ZERO, Matrix, Subspace, Vector, dense, vec
from .groupoid import (
    FiniteGroupoid, PartialGroupoidAction, check_groupoid_paction, groupoid_algebra,
    subgroups_of_isotropy,
)
from .report import VerificationReport
from .wha import FinDimAlgebra, WeakHopfAlgebra, _acc, antipode_inverse, ground_field


def _sp(v) -> dict:
    return {i: x for i, x in enumerate(v) if x}


class PartialActionMap:
    """The bilinear map ``(h_i, a_j) -> act[i][j]``.

    ``A`` may lack a unit only when the map is used as a global action (the
    globalization side); every partial-action check needs ``1_A``.
    """

    def __init__(self, H: WeakHopfAlgebra, A: FinDimAlgebra, act):
        if len(act) != H.dim or any(len(row) != A.dim for row in act):
            raise DimensionMismatch(f"action table must be {H.dim} x {A.dim}")
        self.H = H
        self.A = A
        self.act = tuple(tuple(vec(v) for v in row) for row in act)
        if any(len(v) != A.dim for row in self.act for v in row):
            raise DimensionMismatch("action values must be vectors of A")
        self._sp = tuple(tuple(_sp(v) for v in row) for row in self.act)

    @classmethod
    def from_matrices(cls, H, A, mats):
        """``mats[i]`` is the matrix of ``a -> h_i . a``."""
        return cls(H, A, [m.columns() for m in mats])

    def __eq__(self, other):
        if not isinstance(other, PartialActionMap):
            return NotImplemented
        return (self.H, self.A, self.act) == (other.H, other.A, other.act)

    def __hash__(self):
        return hash(self.act)

    def __repr__(self):
        return f"PartialActionMap(dim H={self.H.dim}, dim A={self.A.dim})"

    @property
    def one(self) -> Vector:
        return self.A.one

    def act_sp(self, h: dict, a: dict) -> dict:
        out: dict = {}
        for i, x in h.items():
            row = self._sp[i]
            for j, y in a.items():
                xy = x * y
                for k, c in row[j].items():
                    _acc(out, k, xy * c)
        return out

    def __call__(self, h: Vector, a: Vector) -> Vector:
        return dense(self.A.dim, self.act_sp(_sp(h), _sp(a)))

    def matrix(self, h: Vector) -> Matrix:
        return Matrix.from_columns([self(h, self.A.basis(j)) for j in range(self.A.dim)], self.A.dim)

    @cached_property
    def on_unit(self) -> tuple:
        """``h_i . 1_A`` as sparse dicts."""
        one = _sp(self.one)
        return tuple(self.act_sp({i: ONE}, one) for i in range(self.H.dim))

    @cached_property
    def is_partial(self) -> bool:
        return check_partial_action(self).ok

    @cached_property
    def is_symmetric(self) -> bool:
        return check_symmetric(self)

    @cached_property
    def is_global(self) -> bool:
        return is_global(self)


def _require_unit(p: PartialActionMap):
    if p.A.unit is None:
        raise NotAPartialAction("partial actions need a unital algebra")


# -- axioms --------------------------------------------------------------------

def check_partial_action(p: PartialActionMap, report: VerificationReport | None = None) -> VerificationReport:
    rep = report or VerificationReport("partial action")
    _require_unit(p)
    H, A = p.H, p.A
    nH, nA = H.dim, A.dim
    mul = A.mul_sparse
    one_H = _sp(H.one)
    for j in range(nA):
        rep.check("unit_acts_trivially", (j,), p.act_sp(one_H, {j: ONE}), {j: ONE})
    for i in range(nH):
        d = H.delta_basis(i)
        for j, k in product(range(nA), repeat=2):
            lhs = p.act_sp({i: ONE}, mul({j: ONE}, {k: ONE}))
            rhs: dict = {}
            for (a, b), c in d.items():
                for key, x in mul(p._sp[a][j], p._sp[b][k]).items():
                    _acc(rhs, key, c * x)
            rep.check("action_multiplicative", (i, j, k), lhs, rhs)
    for i, k in product(range(nH), repeat=2):
        d = H.delta_basis(i)
        for j in range(nA):
            lhs = p.act_sp({i: ONE}, p._sp[k][j])
            rhs = {}
            for (a, b), c in d.items():
                for key, x in mul(p.on_unit[a], p.act_sp(H.alg.mul_basis(b, k), {j: ONE})).items():
                    _acc(rhs, key, c * x)
            rep.check("partial_composition", (i, k, j), lhs, rhs)
    return rep


def _symmetric_report(p: PartialActionMap, rep: VerificationReport) -> VerificationReport:
    H, A = p.H, p.A
    mul = A.mul_sparse
    for i, k in product(range(H.dim), repeat=2):
        d = H.delta_basis(i)
        for j in range(A.dim):
            lhs = p.act_sp({i: ONE}, p._sp[k][j])
            rhs: dict = {}
            for (a, b), c in d.items():
                for key, x in mul(p.act_sp(H.alg.mul_basis(a, k), {j: ONE}), p.on_unit[b]).items():
                    _acc(rhs, key, c * x)
            rep.check("partial_composition_symmetric", (i, k, j), lhs, rhs)
    return rep


def check_symmetric(p: PartialActionMap) -> bool:
    _require_unit(p)
    return _symmetric_report(p, VerificationReport("symmetry")).ok


def is_global(p: PartialActionMap) -> bool:
    """``h . 1_A == eps_L(h) . 1_A`` for every basis ``h``; cross-checked against ``h.(k.a) = hk.a``."""
    _require_unit(p)
    H = p.H
    one = _sp(p.one)
    ok = all(p.on_unit[i] == p.act_sp(_sp(H.eps_L(H.basis(i))), one) for i in range(H.dim))
    if ok:
        rep = check_module_algebra(p, composition_only=True)
        if not rep.ok:
            raise ConsistencyError(f"unit criterion holds but the action is not global:\n{rep}")
    return ok


def check_module_algebra(p: PartialActionMap, report: VerificationReport | None = None,
                         composition_only: bool = False) -> VerificationReport:
    """Global action axioms; ``A`` need not be unital."""
    rep = report or VerificationReport("module algebra")
    H, A = p.H, p.A
    nH, nA = H.dim, A.dim
    mul = A.mul_sparse
    if not composition_only:
        one_H = _sp(H.one)
        for j in range(nA):
            rep.check("unit_acts_trivially", (j,), p.act_sp(one_H, {j: ONE}), {j: ONE})
        for i in range(nH):
            d = H.delta_basis(i)
            for j, k in product(range(nA), repeat=2):
                lhs = p.act_sp({i: ONE}, mul({j: ONE}, {k: ONE}))
                rhs: dict = {}
                for (a, b), c in d.items():
                    for key, x in mul(p._sp[a][j], p._sp[b][k]).items():
                        _acc(rhs, key, c * x)
                rep.check("action_multiplicative", (i, j, k), lhs, rhs)
    for i, k in product(range(nH), repeat=2):
        hk = H.alg.mul_basis(i, k)
        for j in range(nA):
            rep.check("action_associative", (i, k, j), p.act_sp({i: ONE}, p._sp[k][j]),
                      p.act_sp(hk, {j: ONE}))
    return rep


# -- consequences --------------------------------------------------------------

def derived_identity_suite(p: PartialActionMap, report: VerificationReport | None = None) -> VerificationReport:
    """Identities that every partial action satisfies, checked on basis tuples.

    The ones needing symmetry (and an invertible antipode) are skipped, with
    a note, when those hypotheses fail.
    """
    rep = report or VerificationReport("partial action identities")
    _require_unit(p)
    H, A = p.H, p.A
    nH, nA = H.dim, A.dim
    mul = A.mul_sparse
    hmul = H.alg.mul_sparse
    act = p.act_sp
    one = _sp(p.one)
    HL, HR = H.HL, H.HR
    sym = p.is_symmetric
    d1 = H.delta_one

    def sweep(d, f):
        out: dict = {}
        for key, c in d.items():
            for k, x in f(*key).items():
                _acc(out, k, c * x)
        return out

    for w_i, w in enumerate(HR.basis):
        ws = _sp(w)
        for k, j in product(range(nH), range(nA)):
            rep.check("HR_composes_globally", (w_i, k, j), act(ws, p._sp[k][j]), act(hmul(ws, {k: ONE}), {j: ONE}))
    if sym:
        for z_i, z in enumerate(HL.basis):
            zs = _sp(z)
            for k, j in product(range(nH), range(nA)):
                rep.check("HL_composes_globally", (z_i, k, j), act(zs, p._sp[k][j]),
                          act(hmul(zs, {k: ONE}), {j: ONE}))
    else:
        rep.skip("HL_composes_globally", "action is not symmetric")

    for i, k in product(range(nH), repeat=2):
        for a, b in product(range(nA), repeat=2):
            lhs = mul(p._sp[i][a], p._sp[k][b])
            rhs = sweep(d1, lambda u, v: mul(act(hmul({u: ONE}, {i: ONE}), {a: ONE}),
                                             act(hmul({v: ONE}, {k: ONE}), {b: ONE})))
            rep.check("product_splits_over_delta_one", (i, k, a, b), lhs, rhs)
            rhs = sweep(H.delta_basis(i), lambda u, v: act(
                {u: ONE}, mul({a: ONE}, act(hmul(H.S_sparse(v), {k: ONE}), {b: ONE}))))
            rep.check("product_through_antipode", (i, k, a, b), lhs, rhs)

    Sinv = antipode_inverse(H)
    if sym and Sinv is not None:
        Sinv_cols = [_sp(c) for c in Sinv.columns()]
        for i, k in product(range(nH), repeat=2):
            for a, b in product(range(nA), repeat=2):
                lhs = mul(p._sp[i][a], p._sp[k][b])
                rhs = sweep(H.delta_basis(k), lambda u, v: act(
                    {v: ONE}, mul(act(hmul(Sinv_cols[u], {i: ONE}), {a: ONE}), {b: ONE})))
                rep.check("product_through_inverse_antipode", (i, k, a, b), lhs, rhs)
        for k in range(nH):
            lhs: dict = {}
            for (u, v, w), c in H.delta2(H.basis(k)).items():
                for key, x in hmul({v: ONE}, Sinv_cols[u]).items():
                    _acc(lhs, (key, w), c * x)
            rhs = H.t_mul(d1, _outer_unit_left(H, k))
            rep.check("inverse_antipode_delta_identity", (k,), lhs, rhs)
    else:
        reason = "action is not symmetric" if not sym else "antipode is not invertible"
        rep.skip("product_through_inverse_antipode", reason)

    for z_i, z in enumerate(HL.basis):
        zs = _sp(z)
        for a, b in product(range(nA), repeat=2):
            rep.check("HL_pulls_out_right", (z_i, a, b), mul(act(zs, {a: ONE}), {b: ONE}),
                      act(zs, mul({a: ONE}, {b: ONE})))
        for k, a in product(range(nH), range(nA)):
            rep.check("HL_unit_factor", (z_i, k, a), mul(act(zs, one), p._sp[k][a]), act(zs, p._sp[k][a]))
    for w_i, w in enumerate(HR.basis):
        ws = _sp(w)
        for a, b in product(range(nA), repeat=2):
            rep.check("HR_pulls_out_left", (w_i, a, b), mul({a: ONE}, act(ws, {b: ONE})),
                      act(ws, mul({a: ONE}, {b: ONE})))
        for k, a in product(range(nH), range(nA)):
            rep.check("HR_unit_factor", (w_i, k, a), mul(p._sp[k][a], act(ws, one)),
                      act(hmul(ws, {k: ONE}), {a: ONE}))
        rep.check("HR_unit_through_eps_L", (w_i,), act(_sp(H.eps_L(w)), one), act(ws, one))

    for i, k in product(range(nH), repeat=2):
        for a, b in product(range(nA), repeat=2):
            lhs = act({i: ONE}, mul({a: ONE}, p._sp[k][b]))
            rhs = sweep(H.delta_basis(i), lambda u, v: mul(p._sp[u][a], act(hmul({v: ONE}, {k: ONE}), {b: ONE})))
            rep.check("acts_on_product_with_acted", (i, k, a, b), lhs, rhs)
            if sym:
                lhs = act({i: ONE}, mul(p._sp[k][a], {b: ONE}))
                rhs = sweep(H.delta_basis(i), lambda u, v: mul(act(hmul({u: ONE}, {k: ONE}), {a: ONE}), p._sp[v][b]))
                rep.check("acts_on_acted_times_product", (i, k, a, b), lhs, rhs)
    if not sym:
        rep.skip("acts_on_acted_times_product", "action is not symmetric")
    return rep


def _outer_unit_left(H: WeakHopfAlgebra, k: int) -> dict:
    """``1 (x) e_k`` as a two-leg tensor."""
    return {(i, k): x for i, x in _sp(H.one).items()}


# -- constructions ---------------------------------------------------------------

def induced_partial_action(B_action: PartialActionMap, A_subspace: Subspace, one_A: Vector,
                           labels=None) -> PartialActionMap:
    """``h . a = 1_A (h |> a)`` on a right ideal ``A`` of ``B``, in RREF coordinates of ``A``."""
    B = B_action.A
    if A_subspace.dim == 0:
        raise NotUnitalSubalgebra("the zero subspace has no unit")
    if not A_subspace.contains(one_A):
        raise NotUnitalSubalgebra("one_A is not in the subspace")
    basis = A_subspace.basis
    for x in basis:
        for k in range(B.dim):
            if not A_subspace.contains(B.mul(x, B.basis(k))):
                raise NotARightIdeal("subspace is not a right ideal of B")
    for x in basis:
        if B.mul(one_A, x) != x or B.mul(x, one_A) != x:
            raise NotUnitalSubalgebra("one_A is not a unit of the subspace")
    table = [[A_subspace.coordinates(B.mul(x, y)) for y in basis] for x in basis]
    A = FinDimAlgebra(A_subspace.dim, table, A_subspace.coordinates(one_A), labels)
    H = B_action.H
    act = [[A_subspace.coordinates(B.mul(one_A, B_action(H.basis(i), x))) for x in basis]
           for i in range(H.dim)]
    return PartialActionMap(H, A, act)


@dataclass
class RightHLModule:
    """``a <| z`` for each RREF basis vector ``z`` of ``H_L``."""

    HL_basis: tuple
    matrices: tuple
    report: VerificationReport


def right_HL_module(p: PartialActionMap) -> RightHLModule:
    _require_unit(p)
    H, A = p.H, p.A
    pr = H.projections
    HL = pr.HL
    nA = A.dim
    one = p.one

    def rmat(z):
        w = pr.S_R_inv_of(z)
        return Matrix.from_columns([p(w, A.basis(j)) for j in range(nA)], nA)

    mats = tuple(rmat(z) for z in HL.basis)
    rep = VerificationReport("right HL-module")
    rep.check("right_unit", (), rmat(H.one), Matrix.identity(nA))
    for a, z in enumerate(HL.basis):
        for b, y in enumerate(HL.basis):
            rep.check("right_module_associative", (a, b), rmat(y) @ rmat(z), rmat(H.mul(z, y)))
        w = pr.S_R_inv_of(z)
        for j in range(nA):
            x = A.basis(j)
            rep.check("right_action_as_product", (a, j), mats[a].column(j), A.mul(x, p(w, one)))
            rep.check("right_action_via_HL", (a, j), mats[a].column(j), A.mul(x, p(z, one)))
    return RightHLModule(tuple(HL.basis), mats, rep)


# -- groupoid correspondence ---------------------------------------------------------

def groupoid_to_algebra_action(pga: PartialGroupoidAction, H: WeakHopfAlgebra | None = None) -> PartialActionMap:
    """``delta_g . a = alpha_g(a 1_{g^-1})``."""
    rep = check_groupoid_paction(pga)
    if not rep.ok:
        raise NotAPartialAction(f"not a partial groupoid action:\n{rep}")
    G, A = pga.groupoid, pga.A
    H = H or groupoid_algebra(G)
    act = []
    for g in G.arrows:
        u = pga.units[G.inv[g]]
        act.append([pga.alpha(g, A.mul(A.basis(j), u)) for j in range(A.dim)])
    return PartialActionMap(H, A, act)


def _groupoid_of(H: WeakHopfAlgebra) -> FiniteGroupoid:
    G = H.groupoid
    if G is None or groupoid_algebra(G) != H:
        raise NotAGroupoidAlgebra("H does not carry a matching groupoid")
    return G


def algebra_to_groupoid_action(p: PartialActionMap) -> PartialGroupoidAction:
    """``D_g = delta_g . A``, ``1_g = delta_g . 1_A``, ``alpha_g = delta_g .`` on ``D_{g^-1}``.

    The intermediate facts the correspondence rests on are asserted and kept
    in ``certificate``.
    """
    G = _groupoid_of(p.H)
    _require_unit(p)
    if not p.is_partial:
        raise NotAPartialAction(str(check_partial_action(p)))
    if not p.is_symmetric:
        raise NotSymmetric("the correspondence needs a symmetric partial action")
    A, H = p.A, p.H
    n = A.dim
    idx = G.index
    one = p.one
    rep = VerificationReport("groupoid action from algebra action")
    ideals, units, isos = {}, {}, {}
    for g in G.arrows:
        i = idx[g]
        ideals[g] = Subspace.span([p.act[i][j] for j in range(n)], n)
        units[g] = p(H.basis(i), one)
    for g in G.arrows:
        u, D = units[g], ideals[g]
        gi = idx[G.inv[g]]
        rep.check("unit_idempotent", (g,), A.mul(u, u), u)
        for j in range(n):
            x = A.basis(j)
            ux = A.mul(u, x)
            rep.check("unit_central", (g, j), ux, A.mul(x, u))
            rep.check("unit_via_inverse_arrow", (g, j), ux, p(H.basis(idx[g]), p.act[gi][j]))
        rep.check("ideal_generated_by_unit", (g,), D, Subspace.span([A.mul(u, A.basis(j)) for j in range(n)], n))
        Dr = ideals[G.r[g]]
        rep.check("ideal_cut_from_target", (g,), D, Subspace.span([A.mul(x, u) for x in Dr.basis], n))
    for g in G.arrows:
        src = ideals[G.inv[g]]
        i = idx[g]
        isos[g] = Matrix.from_columns([p(H.basis(i), x) for x in src.basis], n) if src.dim \
            else Matrix.zeros(n, 0)
    pga = PartialGroupoidAction(G, A, ideals, units, isos)
    for g in G.arrows:
        src = ideals[G.inv[g]]
        back = [pga.alpha(G.inv[g], pga.alpha(g, x)) for x in src.basis]
        rep.check("inverse_iso", (g,), tuple(back), tuple(src.basis))
    rep.extend(check_groupoid_paction(pga))
    if not rep.ok:
        raise ConsistencyError(f"groupoid action reconstruction failed:\n{rep}")
    pga.certificate = rep
    return pga


# -- ground field --------------------------------------------------------------

def ground_field_action(H: WeakHopfAlgebra, lam) -> PartialActionMap:
    lam = vec(lam)
    if len(lam) != H.dim:
        raise DimensionMismatch("lambda must be a covector on H")
    return PartialActionMap(H, ground_field(), [[(x,)] for x in lam])


def ground_field_check(H: WeakHopfAlgebra, lam) -> bool:
    """``lam(1) = 1`` and ``lam(h) lam(g) = lam(h_1) lam(h_2 g)`` on basis pairs."""
    lam = vec(lam)
    if sum((x * y for x, y in zip(lam, H.one)), ZERO) != ONE:
        return False
    ev = lambda d: sum((c * lam[k] for k, c in d.items()), ZERO)
    for i, j in product(range(H.dim), repeat=2):
        rhs = sum((c * lam[a] * ev(H.alg.mul_basis(b, j)) for (a, b), c in H.delta_basis(i).items()), ZERO)
        if lam[i] * lam[j] != rhs:
            return False
    return True


def ground_field_is_global(H: WeakHopfAlgebra, lam) -> bool:
    """``lam`` multiplicative, ``lam(1) = 1`` and idempotent under convolution."""
    lam = vec(lam)
    if sum((x * y for x, y in zip(lam, H.one)), ZERO) != ONE:
        return False
    ev = lambda d: sum((c * lam[k] for k, c in d.items()), ZERO)
    for i, j in product(range(H.dim), repeat=2):
        if ev(H.alg.mul_basis(i, j)) != lam[i] * lam[j]:
            return False
    for i in range(H.dim):
        if sum((c * lam[a] * lam[b] for (a, b), c in H.delta_basis(i).items()), ZERO) != lam[i]:
            return False
    return True


@dataclass(frozen=True)
class GroundFieldAction:
    lam: tuple
    e: str = None
    V: tuple = ()
    is_global: bool = False


def classify_ground_field(G: FiniteGroupoid) -> list:
    """Indicator functions of the subgroups of the isotropy groups."""
    H = groupoid_algebra(G)
    out = []
    for e, V in subgroups_of_isotropy(G):
        Vs = set(V)
        lam = tuple(ONE if g in Vs else ZERO for g in G.arrows)
        if not ground_field_check(H, lam):
            raise ConsistencyError(f"indicator of {V} at {e} is not a partial action")
        out.append(GroundFieldAction(lam, e, V, ground_field_is_global(H, lam)))
    return out


def classify_ground_field_oracle(G: FiniteGroupoid, bound: int = 16) -> list:
    """Every 0/1 covector passing the ground-field criterion, by exhaustive search."""
    if len(G) > bound:
        raise BoundExceeded(f"{len(G)} arrows exceeds the oracle bound {bound}")
    H = groupoid_algebra(G)
    n = len(G)
    found = []
    for bits in product((ZERO, ONE), repeat=n):
        if ground_field_check(H, bits):
            found.append(bits)
    return sorted(found)


def hopf_iff_epsilon(H: WeakHopfAlgebra) -> bool:
    via_eps = ground_field_check(H, H.coalg.counit)
    if via_eps != H.is_hopf():
        raise ConsistencyError("counit criterion disagrees with the direct Hopf test")
    return via_eps


def groupoid_unit_relation(p: PartialActionMap) -> VerificationReport:
    """``(delta_g . 1) a = delta_g . (delta_{g^-1} . a) = a (delta_g . 1)`` for groupoid algebras."""
    G = _groupoid_of(p.H)
    rep = VerificationReport("groupoid unit relation")
    A, idx = p.A, G.index
    for g in G.arrows:
        i, gi = idx[g], idx[G.inv[g]]
        u = p.on_unit[i]
        for j in range(A.dim):
            mid = p.act_sp({i: ONE}, p._sp[gi][j])
            rep.check("unit_times_element", (g, j), A.mul_sparse(u, {j: ONE}), mid)
            rep.check("element_times_unit", (g, j), A.mul_sparse({j: ONE}, u), mid)
    return rep


__all__ = [
    "PartialActionMap", "GroundFieldAction", "RightHLModule", "check_partial_action",
    "check_symmetric", "check_module_algebra", "derived_identity_suite", "is_global",
    "induced_partial_action", "right_HL_module", "groupoid_to_algebra_action",
    "algebra_to_groupoid_action", "ground_field_action", "ground_field_check",
    "ground_field_is_global", "classify_ground_field", "classify_ground_field_oracle",
    "hopf_iff_epsilon", "groupoid_unit_relation",
]
