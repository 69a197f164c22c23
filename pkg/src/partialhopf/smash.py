"""Smash product ``A # H = A (x)_{H_L} H`` of a partial (or global) action.

Elements of ``A (x) H`` use the Kronecker index ``a * dim H + h``. The
quotient by the balancing relations keeps the RREF-complement normal form of
``exactlin.QuotientSpace``, so each basis class is represented by a single
ambient basis tensor.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ConsistencyError, WellDefinednessFailure
from .exactlin import ONE, Matrix, QuotientSpace, Subspace, Vector, dense, quotient, unit_vec
from .paction import PartialActionMap
from .report import VerificationReport
from .wha import _acc


def _sp(v) -> dict:
    return {i: x for i, x in enumerate(v) if x}


def balancing_relations(p: PartialActionMap) -> list:
    """``(a <| z) (x) h - a (x) zh`` with ``a <| z = S_R^{-1}(z) . a``, as sparse ambient vectors."""
    H, A = p.H, p.A
    nH = H.dim
    pr = H.projections
    rels = []
    for z in pr.HL.basis:
        w = _sp(pr.S_R_inv_of(z))
        zs = _sp(z)
        for a in range(A.dim):
            az = p.act_sp(w, {a: ONE})
            for h in range(nH):
                r: dict = {}
                for k, x in az.items():
                    _acc(r, k * nH + h, x)
                for k, x in H.alg.mul_sparse(zs, {h: ONE}).items():
                    _acc(r, a * nH + k, -x)
                if r:
                    rels.append(r)
    return rels


def tensor_over_HL(p: PartialActionMap) -> QuotientSpace:
    n = p.A.dim * p.H.dim
    rels = [dense(n, r) for r in balancing_relations(p)]
    return quotient(n, Subspace.span(rels, n))


class SmashAlgebra:
    """``(a # h)(b # g) = a (h_1 . b) # h_2 g`` on the balanced tensor product.

    ``table[(x, y)]`` is the sparse product of quotient basis classes.
    ``left_unit`` is ``[1_A (x) 1_H]`` (None when ``A`` has no unit).
    """

    def __init__(self, p: PartialActionMap, quot: QuotientSpace | None = None):
        self.p = p
        self.A, self.H = p.A, p.H
        self.nA, self.nH = p.A.dim, p.H.dim
        self.quot = quot or tensor_over_HL(p)
        self.dim = self.quot.dim
        self._raw_cache: dict = {}
        self.table = {}
        for x, y in product(range(self.dim), repeat=2):
            self.table[(x, y)] = self.quot.project_sparse(self.raw_basis(self.quot.free[x], self.quot.free[y]))
        self.left_unit = None
        if self.A.unit is not None:
            self.left_unit = self.cls(self.A.unit, self.H.one)
        self.report = VerificationReport("smash product")

    # ambient level
    def raw_basis(self, i: int, j: int) -> dict:
        """Product of ambient basis tensors ``i`` and ``j`` before projecting."""
        key = (i, j)
        hit = self._raw_cache.get(key)
        if hit is not None:
            return hit
        nH = self.nH
        a, h = divmod(i, nH)
        b, g = divmod(j, nH)
        p, H, A = self.p, self.H, self.A
        out: dict = {}
        for (h1, h2), c in H.delta_basis(h).items():
            left = A.mul_sparse({a: ONE}, p._sp[h1][b])
            if not left:
                continue
            right = H.alg._sp[h2][g]
            for k, x in left.items():
                for m, y in right:
                    _acc(out, k * nH + m, c * x * y)
        self._raw_cache[key] = out
        return out

    def raw(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, x in u.items():
            for j, y in v.items():
                for k, c in self.raw_basis(i, j).items():
                    _acc(out, k, x * y * c)
        return out

    # quotient level
    def cls(self, a: Vector, h: Vector) -> Vector:
        """The class of ``a (x) h``."""
        t: dict = {}
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(h):
                    if y:
                        t[i * self.nH + j] = x * y
        return dense(self.dim, self.quot.project_sparse(t))

    def mul_sparse(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for x, s in u.items():
            for y, t in v.items():
                for k, c in self.table[(x, y)].items():
                    _acc(out, k, s * t * c)
        return out

    def mul(self, u: Vector, v: Vector) -> Vector:
        return dense(self.dim, self.mul_sparse(_sp(u), _sp(v)))

    def basis(self, x: int) -> Vector:
        return unit_vec(self.dim, x)

    def class_label(self, x: int) -> str:
        """``a#h`` for the ambient tensor representing class ``x``."""
        a, h = divmod(self.quot.free[x], self.nH)
        return f"{self.A.labels[a]}#{self.H.labels[h]}"

    def right_matrix(self, u: Vector) -> Matrix:
        return Matrix.from_columns([self.mul(self.basis(x), u) for x in range(self.dim)], self.dim)

    def right_unit_failures(self) -> list:
        """Basis classes ``x`` with ``x [1 # 1] != x``."""
        if self.left_unit is None:
            return list(range(self.dim))
        return [x for x in range(self.dim) if self.mul(self.basis(x), self.left_unit) != self.basis(x)]

    @property
    def right_unit_holds(self) -> bool:
        return not self.right_unit_failures()


def verify_smash(s: SmashAlgebra, report: VerificationReport | None = None) -> VerificationReport:
    rep = report or s.report
    q = s.quot
    n = q.ambient_dim
    for r_i, r in enumerate(q.relations.basis):
        rs = _sp(r)
        for j in range(n):
            rep.check("relation_left_annihilates", (r_i, j), q.project_sparse(s.raw(rs, {j: ONE})), {})
            rep.check("relation_right_annihilates", (r_i, j), q.project_sparse(s.raw({j: ONE}, rs)), {})
    d = s.dim
    for x, y in product(range(d), repeat=2):
        xy = s.table[(x, y)]
        for z in range(d):
            rep.check("associativity", (x, y, z), s.mul_sparse(xy, {z: ONE}),
                      s.mul_sparse({x: ONE}, s.table[(y, z)]))
    if s.left_unit is not None:
        u = _sp(s.left_unit)
        for x in range(d):
            rep.check("left_unit", (x,), s.mul_sparse(u, {x: ONE}), {x: ONE})
    return rep


def build_smash(p: PartialActionMap, verify: bool = True) -> SmashAlgebra:
    s = SmashAlgebra(p)
    if verify:
        verify_smash(s)
        if not s.report.ok:
            raise WellDefinednessFailure(str(s.report))
    return s


@dataclass
class PartialSmashAlgebra:
    """The corner ``(A # H)[1 # 1]`` with its unit ``[1 # 1]``.

    ``subspace`` lives in the quotient coordinates of ``smash``; ``mult`` is
    the product in the RREF coordinates of ``subspace``.
    """

    smash: SmashAlgebra
    subspace: Subspace
    mult: tuple
    unit: Vector
    report: VerificationReport

    @property
    def dim(self) -> int:
        return self.subspace.dim


def build_partial_smash(s: SmashAlgebra) -> PartialSmashAlgebra:
    if s.left_unit is None:
        raise ValueError("the corner needs a unital algebra")
    u = s.left_unit
    corner = Subspace.span([s.mul(s.basis(x), u) for x in range(s.dim)], s.dim)
    rep = VerificationReport("partial smash product")
    basis = corner.basis
    table = []
    for a, x in enumerate(basis):
        row = []
        for b, y in enumerate(basis):
            xy = s.mul(x, y)
            ok = rep.record("corner_closed", (a, b), corner.contains(xy))
            row.append(corner.coordinates(xy) if ok else None)
        table.append(tuple(row))
    rep.record("unit_in_corner", (), corner.contains(u))
    for a, x in enumerate(basis):
        rep.check("corner_left_unit", (a,), s.mul(u, x), x)
        rep.check("corner_right_unit", (a,), s.mul(x, u), x)
    if not rep.ok:
        raise ConsistencyError(str(rep))
    return PartialSmashAlgebra(s, corner, tuple(table), corner.coordinates(u), rep)


def check_unit_iff_global(p: PartialActionMap, s: SmashAlgebra) -> tuple:
    """``(right unit holds, action is global)``; the two must agree."""
    pair = (s.right_unit_holds, p.is_global)
    if pair[0] != pair[1]:
        raise ConsistencyError(f"right unit {pair[0]} but global {pair[1]}")
    return pair


__all__ = [
    "SmashAlgebra", "PartialSmashAlgebra", "balancing_relations", "tensor_over_HL",
    "build_smash", "verify_smash", "build_partial_smash", "check_unit_iff_global",
]


