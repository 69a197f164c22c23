"""The Morita context between the partial smash product and ``B # H``.

Everything lives inside ``B # H`` (quotient coordinates of the smash product
built from the global action on ``B``). ``M_full = Psi(A # H)`` is the right
``B # H``-module, ``M_corner = Psi(A #_ H)`` is where the round pairing lands.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import AntipodeNotInvertible, ClosureFailure, IllDefined, NotSymmetric
from .exactlin import ONE, Matrix, Subspace, _Echelon, dense, inverse
from .globalize import Globalization, standard_globalization
from .paction import PartialActionMap
from .report import VerificationReport
from .smash import PartialSmashAlgebra, SmashAlgebra, build_partial_smash, build_smash
from .wha import _acc, antipode_inverse


def _sp(v) -> dict:
    return {i: x for i, x in enumerate(v) if x}


def _theta_tensor(theta_B: Matrix, nH: int, t: dict) -> dict:
    """``theta (x) id`` on a sparse ambient tensor of ``A (x) H``."""
    out: dict = {}
    for k, c in t.items():
        a, h = divmod(k, nH)
        for b, x in enumerate(theta_B.column(a)):
            if x:
                _acc(out, b * nH + h, c * x)
    return out


@dataclass
class Psi:
    """``[a (x) h] -> [theta(a) (x) h]`` and its left inverse on the image."""

    matrix: Matrix
    left_inverse: Matrix
    report: VerificationReport


def build_psi(AH: SmashAlgebra, BH: SmashAlgebra, theta_B: Matrix) -> Psi:
    nH = AH.nH
    qa, qb = AH.quot, BH.quot
    rep = VerificationReport("Psi")
    for r, rel in enumerate(qa.relations.basis):
        rep.check("psi_balanced", (r,), qb.project_sparse(_theta_tensor(theta_B, nH, _sp(rel))), {})
    if not rep.ok:
        raise IllDefined(str(rep))
    cols = [dense(BH.dim, qb.project_sparse(_theta_tensor(theta_B, nH, {qa.free[x]: ONE})))
            for x in range(AH.dim)]
    P = Matrix.from_columns(cols, BH.dim)

    # Psi' on theta(A) (x)_{H_L} H: [theta(a_j) (x) h_i] -> [a_j (x) h_i], extended linearly
    X, Y = [], []
    for j, i in product(range(AH.nA), range(nH)):
        X.append(dense(BH.dim, qb.project_sparse(_theta_tensor(theta_B, nH, {j * nH + i: ONE}))))
        Y.append(dense(AH.dim, qa.project_sparse({j * nH + i: ONE})))
    ech = _Echelon(BH.dim)
    J = [t for t, x in enumerate(X) if ech.add(x)]
    W = Subspace.span([X[t] for t in J], BH.dim)
    XJ = Matrix.from_columns([W.coordinates(X[t]) for t in J], len(J))
    YJ = Matrix.from_columns([Y[t] for t in J], AH.dim)
    L = YJ @ inverse(XJ) if J else Matrix.zeros(AH.dim, 0)
    for t, (x, y) in enumerate(zip(X, Y)):
        rep.check("psi_prime_well_defined", (t,), L @ W.coordinates(x), y)
    for x in range(AH.dim):
        e = tuple(ONE if k == x else 0 for k in range(AH.dim))
        rep.check("psi_prime_left_inverse", (x,), L @ W.coordinates(P.column(x)), e)
    rep.record("psi_injective", (), P.rank == AH.dim, P.rank, AH.dim)
    for x, y in product(range(AH.dim), repeat=2):
        lhs = P @ dense(AH.dim, AH.table[(x, y)])
        rep.check("psi_multiplicative", (x, y), lhs, BH.mul(P.column(x), P.column(y)))
    if not rep.ok:
        raise IllDefined(str(rep))
    return Psi(P, L, rep)


@dataclass
class MoritaContextData:
    p: PartialActionMap
    g: Globalization
    AH: SmashAlgebra
    corner: PartialSmashAlgebra
    BH: SmashAlgebra
    psi: Psi
    M_full: Subspace
    M_corner: Subspace
    N: Subspace
    report: VerificationReport
    flags: dict = field(default_factory=dict)

    @property
    def M(self) -> Subspace:
        return self.M_full

    def pairing_round(self, m, n):
        """``(m, n)``, landing in ``Psi(A #_ H)``."""
        return self.BH.mul(m, n)

    def pairing_square(self, n, m):
        """``[n, m]``, landing in ``B # H``."""
        return self.BH.mul(n, m)

    @property
    def has_unit_B(self) -> bool:
        return self.g.has_unit


def _n_generator(ctx_B: PartialActionMap, BH: SmashAlgebra, theta_B: Matrix, i: int, j: int) -> dict:
    """``(h_1 |> theta(a_j)) (x) h_2`` for ``h = h_i``, projected."""
    nH = BH.nH
    t: dict = {}
    for (h1, h2), c in ctx_B.H.delta_basis(i).items():
        for b, x in ctx_B.act_sp({h1: ONE}, _sp(theta_B.column(j))).items():
            _acc(t, b * nH + h2, c * x)
    return BH.quot.project_sparse(t)


def _closure(rep, label, BH, left, right, target: Subspace):
    for (u, x), (v, y) in product(enumerate(left), enumerate(right)):
        rep.record(label, (u, v), target.contains(BH.mul(x, y)))


def check_inverse_antipode_image(g: Globalization, report: VerificationReport | None = None) -> VerificationReport:
    """``S_R^{-1}(z) |> theta(a) = theta(1_A) (S_R^{-1}(z) |> theta(a))`` for ``z`` in ``H_L``."""
    rep = report or VerificationReport("inverse antipode on theta(A)")
    H, A, amb = g.p.H, g.p.A, g.ambient
    one = g.theta_of(A.one)
    pr = H.projections
    for z_i, z in enumerate(pr.HL.basis):
        w = pr.S_R_inv_of(z)
        for j, t in enumerate(g.theta_cols):
            wt = g.action(w, t)
            rep.check("HR_inverse_acts_inside_image", (z_i, j), wt, amb.mul(one, wt))
    return rep


def build_M_N(p: PartialActionMap, g: Globalization | None = None, verify: bool = True) -> MoritaContextData:
    if not p.is_symmetric:
        raise NotSymmetric("the Morita context needs a symmetric partial action")
    if antipode_inverse(p.H) is None:
        raise AntipodeNotInvertible("the antipode must be invertible")
    g = g or standard_globalization(p)
    AH = build_smash(p, verify=verify)
    corner = build_partial_smash(AH)
    BH = build_smash(g.B_action, verify=verify)
    theta_B = g.theta_B
    psi = build_psi(AH, BH, theta_B)
    P = psi.matrix

    m_full = P.columns()
    m_corner = [P @ v for v in corner.subspace.basis]
    n_gens = [dense(BH.dim, _n_generator(g.B_action, BH, theta_B, i, j))
              for i in range(p.H.dim) for j in range(p.A.dim)]
    M_full = Subspace.span(m_full, BH.dim)
    M_corner = Subspace.span(m_corner, BH.dim)
    N = Subspace.span(n_gens, BH.dim)

    rep = VerificationReport("Morita context")
    rep.extend(psi.report)
    check_inverse_antipode_image(g, rep)
    bh = [BH.basis(x) for x in range(BH.dim)]
    _closure(rep, "M_right_BH_module", BH, M_full.basis, bh, M_full)
    _closure(rep, "N_left_BH_module", BH, bh, N.basis, N)
    _closure(rep, "M_left_corner_module", BH, M_corner.basis, M_full.basis, M_full)
    _closure(rep, "N_right_corner_module", BH, N.basis, M_corner.basis, N)
    u = P @ AH.left_unit
    for x, m in enumerate(M_corner.basis):
        rep.check("psi_unit_acts_on_corner", (x,), BH.mul(u, m), m)
    if not rep.ok:
        raise ClosureFailure(str(rep))
    return MoritaContextData(p, g, AH, corner, BH, psi, M_full, M_corner, N, rep)


def witness_identity(ctx: MoritaContextData, report: VerificationReport | None = None) -> VerificationReport:
    """``(h_1 |> theta(a) # h_2)(theta(1_A) # S(h_3) g) = h |> theta(a) # g`` on basis triples."""
    rep = report or VerificationReport("witness identity")
    BH, g, H = ctx.BH, ctx.g, ctx.p.H
    act, theta_B = g.B_action, g.theta_B
    nH = H.dim
    one = _sp(theta_B @ ctx.p.A.one)
    qb = BH.quot
    for i, j in product(range(nH), range(ctx.p.A.dim)):
        ta = _sp(theta_B.column(j))
        d2 = H.delta2(H.basis(i))
        for k in range(nH):
            lhs: dict = {}
            for (h1, h2, h3), c in d2.items():
                left: dict = {}
                for b, x in act.act_sp({h1: ONE}, ta).items():
                    left[b * nH + h2] = left.get(b * nH + h2, 0) + x
                right: dict = {}
                for s, y in H.S_sparse(h3).items():
                    for m, z in H.alg._sp[s][k]:
                        for b, w in one.items():
                            _acc(right, b * nH + m, y * z * w)
                for key, v in BH.raw(left, right).items():
                    _acc(lhs, key, c * v)
            rhs: dict = {}
            for b, x in act.act_sp({i: ONE}, ta).items():
                rhs[b * nH + k] = x
            rep.check("witness_identity", (i, j, k), qb.project_sparse(lhs), qb.project_sparse(rhs))
    return rep


def check_morita_surjectivity(ctx: MoritaContextData) -> tuple:
    """``(span(M N) = Psi(A #_ H), span(N M) = B # H)``."""
    BH = ctx.BH
    MN = Subspace.span([BH.mul(m, n) for m in ctx.M_full.basis for n in ctx.N.basis], BH.dim)
    NM = Subspace.span([BH.mul(n, m) for n in ctx.N.basis for m in ctx.M_full.basis], BH.dim)
    pair = (MN == ctx.M_corner, NM == Subspace.full(BH.dim))
    rep = ctx.report
    rep.record("round_pairing_onto_corner", (), pair[0], MN.dim, ctx.M_corner.dim)
    rep.record("square_pairing_onto_BH", (), pair[1], NM.dim, BH.dim)
    witness_identity(ctx, rep)
    return pair


def check_context_associativity(ctx: MoritaContextData, report: VerificationReport | None = None) -> bool:
    """``(m, n) m' = m [n, m']`` and ``[n, m] n' = n (m, n')`` on basis triples."""
    rep = report or ctx.report
    mul = ctx.BH.mul
    Ms, Ns = ctx.M_full.basis, ctx.N.basis
    ok = True
    for (a, m), (b, n) in product(enumerate(Ms), enumerate(Ns)):
        mn, nm = mul(m, n), mul(n, m)
        for c, m2 in enumerate(Ms):
            ok &= rep.check("round_then_act", (a, b, c), mul(mn, m2), mul(m, mul(n, m2)))
        for c, n2 in enumerate(Ns):
            ok &= rep.check("square_then_act", (b, a, c), mul(nm, n2), mul(n, mul(m, n2)))
    return bool(ok)


__all__ = [
    "Psi", "MoritaContextData", "build_psi", "build_M_N", "check_morita_surjectivity",
    "check_context_associativity", "witness_identity", "check_inverse_antipode_image",
]
