"""Finite groupoids, their algebras, and partial groupoid actions.

Composition convention: ``gh`` exists iff ``d(g) == r(h)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import DimensionMismatch, NotAGroup, NotAGroupoid, NotAnIdentity
from .exactlin import ONE, ZERO, Matrix, Subspace, unit_vec, zero_vec
from .report import VerificationReport
from .wha import FinDimAlgebra, FinDimCoalgebra, WeakHopfAlgebra


@dataclass(frozen=True)
class GroupTable:
    elements: tuple
    mult: dict  # (a, b) -> ab
    identity: str

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))

    @property
    def order(self):
        return len(self.elements)

    def inverse(self, a):
        for b in self.elements:
            if self.mult[(a, b)] == self.identity:
                return b
        raise NotAGroup(f"{a} has no inverse")


def validate_group(t: GroupTable) -> GroupTable:
    els = set(t.elements)
    if len(els) != len(t.elements) or not els:
        raise NotAGroup("elements must be distinct and non-empty")
    if t.identity not in els:
        raise NotAGroup("identity is not an element")
    for a, b in product(t.elements, repeat=2):
        if t.mult.get((a, b)) not in els:
            raise NotAGroup(f"product {a}*{b} missing or outside the set")
    for a in t.elements:
        if t.mult[(t.identity, a)] != a or t.mult[(a, t.identity)] != a:
            raise NotAGroup(f"identity law fails at {a}")
        if not any(t.mult[(a, b)] == t.identity == t.mult[(b, a)] for b in t.elements):
            raise NotAGroup(f"{a} has no inverse")
    m = t.mult
    for a, b, c in product(t.elements, repeat=3):
        if m[(m[(a, b)], c)] != m[(a, m[(b, c)])]:
            raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")
    return t


def cyclic_group(n: int, gen: str = "a", identity: str = "e") -> GroupTable:
    labels = [identity] + [gen if k == 1 else f"{gen}{k}" for k in range(1, n)]
    mult = {(labels[i], labels[j]): labels[(i + j) % n] for i in range(n) for j in range(n)}
    return GroupTable(tuple(labels), mult, identity)


@dataclass(frozen=True, eq=False)
class FiniteGroupoid:
    """Arrows with source ``d``, target ``r``, inverses and the partial product.

    Arrow order fixes the basis order of the groupoid algebra.
    """

    arrows: tuple
    d: dict
    r: dict
    inv: dict
    comp: dict  # (g, h) -> gh, only for composable pairs
    index: dict = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "index", {g: i for i, g in enumerate(self.arrows)})

    def __eq__(self, other):
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return (self.arrows, self.d, self.r, self.inv, self.comp) == \
            (other.arrows, other.d, other.r, other.inv, other.comp)

    def __hash__(self):
        return hash(self.arrows)

    def __len__(self):
        return len(self.arrows)

    @property
    def identities(self) -> tuple:
        seen = {self.d[g] for g in self.arrows}
        return tuple(g for g in self.arrows if g in seen)

    def composable(self, g, h) -> bool:
        return self.d[g] == self.r[h]

    def mul(self, g, h):
        return self.comp.get((g, h))


def validate_groupoid(G: FiniteGroupoid) -> VerificationReport:
    rep = VerificationReport("groupoid")
    A = G.arrows
    if not A:
        rep.record("non_empty", (), False)
        return rep
    aset = set(A)
    if len(aset) != len(A):
        rep.record("distinct_arrows", (), False)
        return rep
    for name, m in (("d", G.d), ("r", G.r), ("inv", G.inv)):
        ok = set(m) == aset and set(m.values()) <= aset
        rep.record(f"{name}_total", (), ok)
        if not ok:
            return rep
    for (g, h), gh in G.comp.items():
        rep.record("product_in_set", (g, h), g in aset and h in aset and gh in aset)
    if not rep.ok:
        return rep
    for g, h in product(A, repeat=2):
        rep.record("defined_iff_composable", (g, h), ((g, h) in G.comp) == G.composable(g, h))
    for g, h in G.comp:
        gh = G.comp[(g, h)]
        rep.check("source_of_product", (g, h), G.d[gh], G.d[h])
        rep.check("target_of_product", (g, h), G.r[gh], G.r[g])
    m = G.comp.get
    for g, h, k in product(A, repeat=3):
        gh, hk = m((g, h)), m((h, k))
        left = m((gh, k)) if gh is not None else None
        right = m((g, hk)) if hk is not None else None
        rep.check("associativity", (g, h, k), left, right)
        rep.record("triple_defined_iff_pairs", (g, h, k),
                   (right is not None) == (gh is not None and hk is not None))
    for g in A:
        rep.check("right_identity", (g,), m((g, G.d[g])), g)
        rep.check("left_identity", (g,), m((G.r[g], g)), g)
        gi = G.inv[g]
        rep.check("inverse_left", (g,), m((gi, g)), G.d[g])
        rep.check("inverse_right", (g,), m((g, gi)), G.r[g])
        rep.check("inverse_involutive", (g,), G.inv[gi], g)
    for e in G.identities:
        rep.record("identity_is_unit_loop", (e,), G.inv[e] == e == G.d[e] == G.r[e])
    return rep


def _check(G: FiniteGroupoid) -> FiniteGroupoid:
    rep = validate_groupoid(G)
    if not rep.ok:
        raise NotAGroupoid(str(rep))
    return G


def group_as_groupoid(t: GroupTable) -> FiniteGroupoid:
    validate_group(t)
    e = t.identity
    return FiniteGroupoid(t.elements, {g: e for g in t.elements}, {g: e for g in t.elements},
                          {g: t.inverse(g) for g in t.elements}, dict(t.mult))


def disjoint_union_of_groups(groups) -> FiniteGroupoid:
    """Component ``k`` (from 1) gets identity ``e{k}`` and arrows ``{label}_{k}``."""
    arrows, d, r, inv, comp = [], {}, {}, {}, {}
    for k, t in enumerate(groups, 1):
        try:
            validate_group(t)
        except NotAGroup as exc:
            raise NotAGroup(f"component {k}: {exc}") from None
        name = {g: (f"e{k}" if g == t.identity else f"{g}_{k}") for g in t.elements}
        for g in t.elements:
            arrows.append(name[g])
            d[name[g]] = r[name[g]] = name[t.identity]
            inv[name[g]] = name[t.inverse(g)]
        for (a, b), c in t.mult.items():
            comp[(name[a], name[b])] = name[c]
    return _check(FiniteGroupoid(tuple(arrows), d, r, inv, comp))


def pair_groupoid(n: int) -> FiniteGroupoid:
    """Arrows ``(i, j)`` for objects ``1..n``: ``e{i}`` on the diagonal, ``g{i}{j}`` off it.

    ``(i, j)`` has target ``(i, i)`` and source ``(j, j)``, so ``(i, j)(j, k) = (i, k)``.
    """
    if n < 1:
        raise ValueError("need at least one object")
    lab = lambda i, j: f"e{i}" if i == j else f"g{i}{j}" if n < 10 else f"g{i}_{j}"
    pairs = [(i, i) for i in range(1, n + 1)] + \
        [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    arrows = tuple(lab(*p) for p in pairs)
    d = {lab(i, j): lab(j, j) for i, j in pairs}
    r = {lab(i, j): lab(i, i) for i, j in pairs}
    inv = {lab(i, j): lab(j, i) for i, j in pairs}
    comp = {(lab(i, j), lab(j, k)): lab(i, k) for i, j in pairs for k in range(1, n + 1)}
    return _check(FiniteGroupoid(arrows, d, r, inv, comp))


def isotropy_group(G: FiniteGroupoid, e) -> GroupTable:
    if e not in G.identities:
        raise NotAnIdentity(f"{e!r} is not an identity of the groupoid")
    loops = tuple(g for g in G.arrows if G.d[g] == e == G.r[g])
    return GroupTable(loops, {(a, b): G.comp[(a, b)] for a in loops for b in loops}, e)


def subgroups(t: GroupTable) -> list:
    """All subgroups as sorted label tuples; brute force over subsets containing the identity."""
    others = [g for g in t.elements if g != t.identity]
    found = []
    for k in range(len(others) + 1):
        for extra in combinations(others, k):
            s = {t.identity, *extra}
            if all(t.mult[(a, b)] in s for a in s for b in s):
                # finite and closed under products, hence closed under inverses
                found.append(tuple(g for g in t.elements if g in s))
    return found


def subgroups_of_isotropy(G: FiniteGroupoid) -> list:
    """Pairs ``(e, V)`` sorted by identity label, subgroup size, then arrow labels."""
    out = []
    for e in G.identities:
        for V in subgroups(isotropy_group(G, e)):
            out.append((e, tuple(sorted(V))))
    return sorted(out, key=lambda p: (p[0], len(p[1]), p[1]))


def groupoid_algebra(G: FiniteGroupoid) -> WeakHopfAlgebra:
    _check(G)
    n = len(G)
    idx = G.index
    triples = [(idx[g], idx[h], idx[gh], ONE) for (g, h), gh in G.comp.items()]
    unit = [ZERO] * n
    for e in G.identities:
        unit[idx[e]] = ONE
    alg = FinDimAlgebra.from_triples(n, triples, unit, labels=G.arrows)
    coalg = FinDimCoalgebra.from_entries(n, [(i, i, i, ONE) for i in range(n)], (ONE,) * n)
    S = Matrix.from_columns([unit_vec(n, idx[G.inv[g]]) for g in G.arrows], n)
    return WeakHopfAlgebra(alg, coalg, S, groupoid=G)


def dual_groupoid_algebra(G: FiniteGroupoid) -> WeakHopfAlgebra:
    """Functions on the arrows: pointwise product, ``Delta(p_g) = sum_{xy=g} p_x (x) p_y``.

    Not cocommutative once some arrow has more than one factorization, which
    makes it a useful non-trivial test case.
    """
    _check(G)
    n = len(G)
    idx = G.index
    triples = [(i, i, i, ONE) for i in range(n)]
    alg = FinDimAlgebra.from_triples(n, triples, (ONE,) * n, labels=[f"p_{g}" for g in G.arrows])
    entries = [(idx[gh], idx[g], idx[h], ONE) for (g, h), gh in G.comp.items()]
    ids = set(G.identities)
    counit = tuple(ONE if g in ids else ZERO for g in G.arrows)
    coalg = FinDimCoalgebra.from_entries(n, entries, counit)
    S = Matrix.from_columns([unit_vec(n, idx[G.inv[g]]) for g in G.arrows], n)
    return WeakHopfAlgebra(alg, coalg, S)


# -- partial groupoid actions --------------------------------------------------

@dataclass(eq=False)
class PartialGroupoidAction:
    """Ideals ``D_g`` with units ``1_g`` and isomorphisms ``alpha_g: D_{g^-1} -> D_g``.

    ``isos[g]`` has one column per RREF basis vector of ``D_{g^-1}``, holding
    its image as a vector of ``A``.
    """

    groupoid: FiniteGroupoid
    A: FinDimAlgebra
    ideals: dict  # g -> Subspace
    units: dict  # g -> vector
    isos: dict  # g -> Matrix
    certificate: VerificationReport | None = field(default=None, compare=False, repr=False)

    def alpha(self, g, x):
        return self.isos[g] @ self.ideals[self.groupoid.inv[g]].coordinates(x)

    def __eq__(self, other):
        if not isinstance(other, PartialGroupoidAction):
            return NotImplemented
        return (self.groupoid == other.groupoid and self.A == other.A
                and self.ideals == other.ideals and self.units == other.units
                and self.isos == other.isos)


def _is_two_sided_ideal(A: FinDimAlgebra, D: Subspace, of: Subspace) -> bool:
    return all(D.contains(A.mul(x, y)) and D.contains(A.mul(y, x))
               for x in D.basis for y in of.basis)


def _check_composition(pga: PartialGroupoidAction, rep: VerificationReport):
    G, A = pga.groupoid, pga.A
    n = A.dim
    for e in G.identities:
        D = pga.ideals[e]
        rep.check("identity_acts_trivially", (e,), pga.isos[e], D.coordinate_matrix())
    for g, h in product(G.arrows, repeat=2):
        if not G.composable(g, h):
            continue
        gh = G.comp[(g, h)]
        hi, gi, ghi = G.inv[h], G.inv[g], G.inv[gh]
        inter = pga.ideals[gi].intersect(pga.ideals[h])
        pre = [pga.alpha(hi, x) for x in inter.basis]
        rep.record("preimage_in_domain_of_product", (g, h),
                   all(pga.ideals[ghi].contains(x) for x in pre))
        for k, x in enumerate(pre):
            if pga.ideals[ghi].contains(x):
                rep.check("composition", (g, h, k), pga.alpha(g, pga.alpha(h, x)), pga.alpha(gh, x))
        for k in range(n):
            x = A.basis(k)
            inner = A.mul(pga.alpha(h, A.mul(x, pga.units[hi])), pga.units[gi])
            rep.check("composition_through_units", (g, h, k), pga.alpha(g, inner),
                      A.mul(pga.alpha(gh, A.mul(x, pga.units[ghi])), pga.units[g]))


def check_groupoid_paction(pga: PartialGroupoidAction) -> VerificationReport:
    """Axioms of a partial groupoid action with unital ideals on ``A = sum D_e``.

    The ideal conditions and the centrality of the units are checked
    separately, neither is inferred from the other.
    """
    rep = VerificationReport("partial groupoid action")
    G, A = pga.groupoid, pga.A
    n = A.dim
    full = Subspace.full(n)
    for g in G.arrows:
        if g not in pga.ideals or g not in pga.units or g not in pga.isos:
            raise DimensionMismatch(f"arrow {g} lacks an ideal, a unit or an isomorphism")
    for e in G.identities:
        rep.record("identity_ideal_of_A", (e,), _is_two_sided_ideal(A, pga.ideals[e], full))
    for g in G.arrows:
        D, u = pga.ideals[g], pga.units[g]
        rep.record("ideal_of_target_ideal", (g,),
                   D <= pga.ideals[G.r[g]] and _is_two_sided_ideal(A, D, pga.ideals[G.r[g]]))
        rep.record("unit_in_ideal", (g,), D.contains(u))
        for k, x in enumerate(D.basis):
            rep.check("unit_of_ideal_left", (g, k), A.mul(u, x), x)
            rep.check("unit_of_ideal_right", (g, k), A.mul(x, u), x)
        for k in range(n):
            x = A.basis(k)
            rep.check("unit_central", (g, k), A.mul(u, x), A.mul(x, u))
    for g in G.arrows:
        src, dst = pga.ideals[G.inv[g]], pga.ideals[g]
        M = pga.isos[g]
        if M.shape != (n, src.dim):
            raise DimensionMismatch(f"isomorphism for {g} has shape {M.shape}")
        imgs = M.columns()
        rep.record("iso_into_target", (g,), all(dst.contains(v) for v in imgs))
        rep.record("iso_bijective", (g,), src.dim == dst.dim and M.rank == dst.dim)
        for a, x in enumerate(src.basis):
            for b, y in enumerate(src.basis):
                xy = A.mul(x, y)
                lhs = pga.alpha(g, xy) if src.contains(xy) else None
                rep.check("iso_multiplicative", (g, a, b), lhs, A.mul(imgs[a], imgs[b]))
    structural = ("ideal_of_target_ideal", "unit_in_ideal", "unit_of_ideal_left", "iso_into_target")
    if any(rep.n_failed.get(k) for k in structural):
        rep.skip("composition", "ideals, units or isomorphisms already malformed")
    else:
        _check_composition(pga, rep)
    ids = G.identities
    rep.check("identity_ideals_span_A", (), Subspace.span(
        [b for e in ids for b in pga.ideals[e].basis], n), full)
    rep.check("identity_ideals_independent", (), sum(pga.ideals[e].dim for e in ids), n)
    for e, f in combinations(ids, 2):
        rep.check("identity_units_orthogonal", (e, f), A.mul(pga.units[e], pga.units[f]), zero_vec(n))
    return rep


__all__ = [
    "GroupTable", "FiniteGroupoid", "PartialGroupoidAction", "validate_group", "validate_groupoid",
    "cyclic_group", "group_as_groupoid", "disjoint_union_of_groups", "pair_groupoid",
    "isotropy_group", "subgroups", "subgroups_of_isotropy", "groupoid_algebra",
    "dual_groupoid_algebra", "check_groupoid_paction",]
