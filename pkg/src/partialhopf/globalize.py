"""Globalizations of partial actions inside ``Hom(H, A)`` and comparison maps between them.

``Hom(H, A)`` has basis ``f_{i,j} = h_i^* (x) a_j`` at index ``i * dim A + j``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .errors import ConsistencyError, GlobalizationAxiomFailure, IllDefined
from .exactlin import (
    ONE, ZERO, Matrix, Subspace, Vector, _Echelon, dense, inverse, kernel, zero_vec,
)
from .paction import PartialActionMap, check_module_algebra
from .report import VerificationReport
from .wha import FinDimAlgebra, WeakHopfAlgebra, _acc, find_unit, subalgebra


def _sp(v) -> dict:
    return {i: x for i, x in enumerate(v) if x}


# -- convolution algebra -------------------------------------------------------

@dataclass(eq=False)
class ConvolutionAlgebra:
    H: WeakHopfAlgebra
    A: FinDimAlgebra
    alg: FinDimAlgebra
    action: PartialActionMap
    report: VerificationReport

    @property
    def dim(self) -> int:
        return self.alg.dim

    def index(self, i: int, j: int) -> int:
        return i * self.A.dim + j

    def evaluate(self, f: Vector, h: Vector) -> Vector:
        """``f(h)`` as a vector of ``A``."""
        nA = self.A.dim
        out = [ZERO] * nA
        for i, x in enumerate(h):
            if x:
                for j in range(nA):
                    out[j] += x * f[i * nA + j]
        return tuple(out)


def convolution_algebra(H: WeakHopfAlgebra, A: FinDimAlgebra, verify: bool = True) -> ConvolutionAlgebra:
    """``(f * g)(h) = f(h_1) g(h_2)`` and ``(h |> f)(k) = f(kh)``."""
    nH, nA = H.dim, A.dim
    n = nH * nA
    # f_{i,j} * f_{l,m} = sum_k [coefficient of h_i (x) h_l in Delta(h_k)] f_{k, a_j a_m}
    triples = []
    for k in range(nH):
        for (i, l), c in H.delta_basis(k).items():
            for j, m in product(range(nA), repeat=2):
                for t, x in A._sp[j][m]:
                    triples.append((i * nA + j, l * nA + m, k * nA + t, c * x))
    unit = None
    if A.unit is not None:
        u = [ZERO] * n
        for i, e in enumerate(H.coalg.counit):
            if e:
                for j, x in enumerate(A.unit):
                    u[i * nA + j] += e * x
        unit = tuple(u)
    labels = [f"{H.labels[i]}*.{A.labels[j]}" for i in range(nH) for j in range(nA)]
    alg = FinDimAlgebra.from_triples(n, triples, unit, labels)
    # h_s |> f_{i,j} = sum_k mu[k][s][i] f_{k,j}
    act = []
    for s in range(nH):
        row = []
        for i in range(nH):
            for j in range(nA):
                v = [ZERO] * n
                for k in range(nH):
                    c = H.alg.mult[k][s][i]
                    if c:
                        v[k * nA + j] += c
                row.append(tuple(v))
        act.append(row)
    action = PartialActionMap(H, alg, act)
    rep = VerificationReport("convolution algebra")
    if verify:
        check_module_algebra(action, rep)
    return ConvolutionAlgebra(H, A, alg, action, rep)


# -- globalizations ------------------------------------------------------------

@dataclass(eq=False)
class Globalization:
    """A module algebra ``ambient`` (acted on by ``action``), the subspace ``B``
    and the embedding ``theta: A -> B`` (columns are ``theta(a_j)``).
    """

    p: PartialActionMap
    ambient: FinDimAlgebra
    action: PartialActionMap
    B: Subspace
    theta: Matrix
    name: str = "globalization"
    flags: dict = field(default_factory=dict)

    def theta_of(self, a: Vector) -> Vector:
        return self.theta @ a

    @cached_property
    def theta_cols(self) -> tuple:
        return tuple(self.theta.columns())

    @cached_property
    def generators(self) -> list:
        """``h_i |> theta(a_j)`` in the order ``(i, j)``."""
        act = self.action
        return [act(self.p.H.basis(i), t) for i in range(self.p.H.dim) for t in self.theta_cols]

    @cached_property
    def theta_image(self) -> Subspace:
        return Subspace.span(self.theta_cols, self.ambient.dim)

    @cached_property
    def B_algebra(self) -> FinDimAlgebra:
        return subalgebra(self.ambient, self.B)

    @cached_property
    def has_unit(self) -> bool:
        return self.B_algebra.unit is not None

    @cached_property
    def B_action(self) -> PartialActionMap:
        """The global action restricted to ``B``, in RREF coordinates of ``B``."""
        H = self.p.H
        act = [[self.B.coordinates(self.action(H.basis(i), b)) for b in self.B.basis] for i in range(H.dim)]
        return PartialActionMap(H, self.B_algebra, act)

    @cached_property
    def theta_B(self) -> Matrix:
        return Matrix.from_columns([self.B.coordinates(t) for t in self.theta_cols], self.B.dim)


def _phi(p: PartialActionMap) -> Matrix:
    """``phi(a)(h) = h . a`` as a matrix ``A -> Hom(H, A)``."""
    nH, nA = p.H.dim, p.A.dim
    cols = []
    for j in range(nA):
        v = [ZERO] * (nH * nA)
        for i in range(nH):
            for k, x in p._sp[i][j].items():
                v[i * nA + k] = x
        cols.append(tuple(v))
    return Matrix.from_columns(cols, nH * nA)


def _closure_report(g: Globalization, rep: VerificationReport):
    M, B = g.ambient, g.B
    H = g.p.H
    for a, x in enumerate(B.basis):
        for i in range(H.dim):
            rep.record("B_closed_under_action", (i, a), B.contains(g.action(H.basis(i), x)))
        for b, y in enumerate(B.basis):
            rep.record("B_closed_under_product", (a, b), B.contains(M.mul(x, y)))


def standard_globalization(p: PartialActionMap, F: ConvolutionAlgebra | None = None) -> Globalization:
    """``B = H |> phi(A)`` inside ``Hom(H, A)`` with ``phi(a)(h) = h . a``."""
    F = F or convolution_algebra(p.H, p.A)
    theta = _phi(p)
    g = Globalization(p, F.alg, F.action, Subspace.zero(F.dim), theta, name="standard")
    g.B = Subspace.span(g.generators, F.dim)
    rep = VerificationReport("standard globalization")
    _closure_report(g, rep)
    check_globalization(g, rep)
    if not rep.ok:
        raise GlobalizationAxiomFailure(str(rep))
    g.flags["report"] = rep
    return g


def check_globalization(g: Globalization, report: VerificationReport | None = None) -> VerificationReport:
    rep = report or VerificationReport("globalization")
    p = g.p
    H, A, M = p.H, p.A, g.ambient
    nA = A.dim
    th = g.theta_cols
    rep.check("theta_injective", (), g.theta.rank, nA)
    for j, k in product(range(nA), repeat=2):
        rep.check("theta_multiplicative", (j, k), g.theta_of(A.mul(A.basis(j), A.basis(k))), M.mul(th[j], th[k]))
    for j in range(nA):
        rep.record("theta_in_B", (j,), g.B.contains(th[j]))
    img = g.theta_image
    gens = g.generators
    for j in range(nA):
        for t, x in enumerate(gens):
            rep.record("theta_image_right_ideal", (j, t), img.contains(M.mul(th[j], x)))
    one = g.theta_of(A.one)
    for i, j in product(range(H.dim), range(nA)):
        rep.check("induced_action_matches", (i, j), g.theta_of(p.act[i][j]),
                  M.mul(one, gens[i * nA + j]))
    rep.check("B_generated_by_theta", (), Subspace.span(gens, M.dim), g.B)
    for i in range(H.dim):
        for a, b in product(range(g.B.dim), repeat=2):
            x, y = g.B.basis[a], g.B.basis[b]
            lhs = g.action(H.basis(i), M.mul(x, y))
            rhs: dict = {}
            for (u, v), c in H.delta_basis(i).items():
                for k, z in M.mul_sparse(g.action.act_sp({u: ONE}, _sp(x)), g.action.act_sp({v: ONE}, _sp(y))).items():
                    _acc(rhs, k, c * z)
            rep.check("B_module_algebra", (i, a, b), lhs, dense(M.dim, rhs))
    for i, k in product(range(H.dim), repeat=2):
        hk = H.mul(H.basis(i), H.basis(k))
        for a, x in enumerate(g.B.basis):
            rep.check("B_action_associative", (i, k, a),
                      g.action(H.basis(i), g.action(H.basis(k), x)), g.action(hk, x))
    return rep


def check_ideal_iff_symmetric(g: Globalization) -> tuple:
    """``(theta(A) is a two-sided ideal of B, the action is symmetric)``; must agree."""
    M = g.ambient
    img = g.theta_image
    two_sided = all(img.contains(M.mul(x, t)) for x in g.generators for t in g.theta_cols)
    pair = (two_sided, g.p.is_symmetric)
    g.flags["is_ideal"] = two_sided
    if pair[0] != pair[1]:
        raise ConsistencyError(f"ideal {pair[0]} but symmetric {pair[1]}")
    return pair


def largest_null_submodule(g: Globalization) -> Subspace:
    """``{m in B : theta(1_A) * (h_i |> m) = 0 for all i}`` as an ambient subspace."""
    M, B, H = g.ambient, g.B, g.p.H
    one = g.theta_of(g.p.A.one)
    if B.dim == 0:
        return Subspace.zero(M.dim)
    rows = []
    for i in range(H.dim):
        cols = [M.mul(one, g.action(H.basis(i), b)) for b in B.basis]
        m = Matrix.from_columns(cols, M.dim)
        rows.extend(m.rows)
    ker = kernel(Matrix(rows, B.dim))
    return Subspace.span([B.from_coordinates(k) for k in ker.basis], M.dim)


def check_minimality(g: Globalization) -> bool:
    minimal = largest_null_submodule(g).dim == 0
    g.flags["is_minimal"] = minimal
    return minimal


# -- comparison -----------------------------------------------------------------

@dataclass
class GlobalizationMorphism:
    """``Phi: B_other -> B_std`` in RREF coordinates of the two subspaces."""

    matrix: Matrix
    report: VerificationReport
    surjective: bool
    injective: bool

    @property
    def bijective(self) -> bool:
        return self.surjective and self.injective


def globalization_morphism(g_other: Globalization, g_std: Globalization) -> GlobalizationMorphism:
    """``sum h_i |> theta(a) -> sum h_i |> phi(a)``, with its consistency checked."""
    Bo, Bs = g_other.B, g_std.B
    X = [Bo.coordinates(x) for x in g_other.generators]
    Y = [Bs.coordinates(y) for y in g_std.generators]
    ech = _Echelon(Bo.dim)
    J = [t for t, x in enumerate(X) if ech.add(x)]
    if len(J) != Bo.dim:
        raise IllDefined("the generators do not span B_other")
    XJ = Matrix.from_columns([X[t] for t in J], Bo.dim) if J else Matrix.zeros(0, 0)
    YJ = Matrix.from_columns([Y[t] for t in J], Bs.dim) if J else Matrix.zeros(Bs.dim, 0)
    Phi = YJ @ inverse(XJ) if J else Matrix.zeros(Bs.dim, 0)
    for t, (x, y) in enumerate(zip(X, Y)):
        if Phi @ x != y:
            raise IllDefined(f"generator {t} is sent to two different values")
    rep = VerificationReport("globalization morphism")
    Ms, Mo = g_std.ambient, g_other.ambient
    H = g_std.p.H
    for a, b in product(range(Bo.dim), repeat=2):
        xy = Bo.coordinates(Mo.mul(Bo.basis[a], Bo.basis[b]))
        fa, fb = Bs.from_coordinates(Phi.column(a)), Bs.from_coordinates(Phi.column(b))
        rep.check("multiplicative", (a, b), Phi @ xy, Bs.coordinates(Ms.mul(fa, fb)))
    for i, a in product(range(H.dim), range(Bo.dim)):
        hb = Bo.coordinates(g_other.action(H.basis(i), Bo.basis[a]))
        rep.check("equivariant", (i, a), Phi @ hb,
                  Bs.coordinates(g_std.action(H.basis(i), Bs.from_coordinates(Phi.column(a)))))
    for j, t in enumerate(g_other.theta_cols):
        rep.check("sends_theta_to_phi", (j,), Phi @ Bo.coordinates(t), Bs.coordinates(g_std.theta_cols[j]))
    rk = Phi.rank
    surj = rk == Bs.dim
    rep.record("surjective", (), surj, rk, Bs.dim)
    return GlobalizationMorphism(Phi, rep, surj, rk == Bo.dim)


# -- other globalizations, for comparison -----------------------------------------

def product_algebra(A1: FinDimAlgebra, A2: FinDimAlgebra) -> FinDimAlgebra:
    n1, n = A1.dim, A1.dim + A2.dim
    triples = [(i, j, k, c) for i, j, k, c in A1.triples()]
    triples += [(n1 + i, n1 + j, n1 + k, c) for i, j, k, c in A2.triples()]
    unit = None
    if A1.unit is not None and A2.unit is not None:
        unit = A1.unit + A2.unit
    return FinDimAlgebra.from_triples(n, triples, unit, [f"{l}'" for l in A1.labels] + [f"{l}''" for l in A2.labels])


def diagonal_globalization(std: Globalization) -> Globalization:
    """``theta = (phi, phi)`` into ``Hom(H,A) x Hom(H,A)``; minimal, so equivalent to ``std``."""
    M = product_algebra(std.ambient, std.ambient)
    n1 = std.ambient.dim
    H = std.p.H
    act = []
    for i in range(H.dim):
        row = [tuple(v) + zero_vec(n1) for v in std.action.act[i]]
        row += [zero_vec(n1) + tuple(v) for v in std.action.act[i]]
        act.append(row)
    action = PartialActionMap(H, M, act)
    theta = Matrix.from_columns([t + t for t in std.theta_cols], 2 * n1)
    g = Globalization(std.p, M, action, Subspace.zero(2 * n1), theta, name="diagonal")
    g.B = Subspace.span(g.generators, 2 * n1)
    return g


def enlarged_globalization(std: Globalization) -> Globalization:
    """``Hom(H,A) (x) C`` with ``C = H``, product ``xy = eps(y) x`` and the regular action.

    The action is diagonal, ``h |> (f (x) c) = (h_1 |> f) (x) h_2 c``, and
    ``theta(a) = phi(a) (x) 1``. This is a globalization only when ``H`` is a
    Hopf algebra (``eps`` multiplicative), and it is usually not minimal.
    """
    H = std.p.H
    if not H.is_hopf():
        raise ValueError("the enlarged globalization needs a Hopf algebra")
    F = std.ambient
    nF, nH = F.dim, H.dim
    n = nF * nH
    eps = H.coalg.counit
    triples = []
    for f1, f2 in product(range(nF), repeat=2):
        for k, x in F._sp[f1][f2]:
            for c1, c2 in product(range(nH), repeat=2):
                if eps[c2]:
                    triples.append((f1 * nH + c1, f2 * nH + c2, k * nH + c1, x * eps[c2]))
    M = FinDimAlgebra.from_triples(n, triples, None, [f"{F.labels[f]}@{H.labels[c]}" for f in range(nF) for c in range(nH)])
    M = FinDimAlgebra(n, M.mult, find_unit(M), M.labels)
    act = []
    for i in range(H.dim):
        row = []
        for f in range(nF):
            for c in range(nH):
                v = [ZERO] * n
                for (u, w), x in H.delta_basis(i).items():
                    for k, y in std.action._sp[u][f].items():
                        for m, z in H.alg._sp[w][c]:
                            v[k * nH + m] += x * y * z
                row.append(tuple(v))
        act.append(row)
    action = PartialActionMap(H, M, act)
    one = H.one
    theta = Matrix.from_columns(
        [tuple(t[f] * one[c] for f in range(nF) for c in range(nH)) for t in std.theta_cols], n)
    g = Globalization(std.p, M, action, Subspace.zero(n), theta, name="enlarged")
    g.B = Subspace.span(g.generators, n)
    return g


__all__ = [
    "ConvolutionAlgebra", "Globalization", "GlobalizationMorphism", "convolution_algebra",
    "standard_globalization", "check_globalization", "check_ideal_iff_symmetric",
    "largest_null_submodule", "check_minimality", "globalization_morphism",
    "product_algebra", "diagonal_globalization", "enlarged_globalization",
]
