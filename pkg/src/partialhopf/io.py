"""JSON file formats. Rationals are strings ``"p/q"`` (``"p"`` when ``q = 1``)."""
from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError, NotAGroupoid
from .exactlin import Q, Matrix, Subspace, fmt
from .groupoid import FiniteGroupoid, PartialGroupoidAction, groupoid_algebra, validate_groupoid
from .paction import PartialActionMap
from .wha import FinDimAlgebra, FinDimCoalgebra, WeakHopfAlgebra


def _q(x) -> str:
    return fmt(Q(x))


def _vec_out(v) -> list:
    return [_q(x) for x in v]


def _scalar(x):
    try:
        return Q(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"bad rational {x!r}: {exc}") from None


def _vec_in(v) -> tuple:
    return tuple(_scalar(x) for x in v)


def _need(d: dict, *keys):
    missing = [k for k in keys if k not in d]
    if missing:
        raise InputError(f"missing field(s): {', '.join(missing)}")


# -- algebras ----------------------------------------------------------------

def algebra_to_dict(A: FinDimAlgebra) -> dict:
    return {
        "dim": A.dim,
        "labels": list(A.labels),
        "mult": [[i, j, k, _q(c)] for i, j, k, c in A.triples()],
        "unit": None if A.unit is None else _vec_out(A.unit),
    }


def algebra_from_dict(d: dict) -> FinDimAlgebra:
    _need(d, "dim", "mult")
    unit = d.get("unit")
    triples = [(i, j, k, _scalar(c)) for i, j, k, c in d["mult"]]
    return FinDimAlgebra.from_triples(d["dim"], triples, None if unit is None else _vec_in(unit), d.get("labels"))


def wha_to_dict(H: WeakHopfAlgebra) -> dict:
    out = algebra_to_dict(H.alg)
    out["delta"] = [[i, j, k, _q(c)] for i, j, k, c in H.coalg.entries()]
    out["counit"] = _vec_out(H.coalg.counit)
    out["antipode"] = [_vec_out(r) for r in H.antipode.rows]
    return out


def wha_from_dict(d: dict) -> WeakHopfAlgebra:
    if "groupoid" in d:
        return groupoid_algebra(groupoid_from_dict(d["groupoid"]))
    _need(d, "dim", "mult", "unit", "delta", "counit", "antipode")
    alg = algebra_from_dict(d)
    n = alg.dim
    coalg = FinDimCoalgebra.from_entries(n, [(i, j, k, _scalar(c)) for i, j, k, c in d["delta"]], _vec_in(d["counit"]))
    S = Matrix([_vec_in(r) for r in d["antipode"]], n)
    return WeakHopfAlgebra(alg, coalg, S)


# -- groupoids ---------------------------------------------------------------

def groupoid_to_dict(G: FiniteGroupoid) -> dict:
    return {
        "arrows": list(G.arrows),
        "d": {g: G.d[g] for g in G.arrows},
        "r": {g: G.r[g] for g in G.arrows},
        "inv": {g: G.inv[g] for g in G.arrows},
        "comp": [[g, h, G.comp[(g, h)]] for g in G.arrows for h in G.arrows if (g, h) in G.comp],
    }


def groupoid_from_dict(d: dict) -> FiniteGroupoid:
    _need(d, "arrows", "d", "r", "inv", "comp")
    comp = {}
    for g, h, gh in d["comp"]:
        if d["d"].get(g) != d["r"].get(h):
            raise NotAGroupoid(f"product {g}{h} listed but d({g}) != r({h})")
        comp[(g, h)] = gh
    G = FiniteGroupoid(tuple(d["arrows"]), dict(d["d"]), dict(d["r"]), dict(d["inv"]), comp)
    rep = validate_groupoid(G)
    if not rep.ok:
        raise NotAGroupoid(str(rep))
    return G


# -- actions -----------------------------------------------------------------

def action_to_dict(p: PartialActionMap) -> dict:
    H = p.H
    h = {"groupoid": groupoid_to_dict(H.groupoid)} if H.groupoid is not None else wha_to_dict(H)
    act = [[i, j, _vec_out(p.act[i][j])] for i in range(H.dim) for j in range(p.A.dim) if any(p.act[i][j])]
    return {"H": h, "A": algebra_to_dict(p.A), "act": act}


def action_from_dict(d: dict) -> PartialActionMap:
    _need(d, "H", "A", "act")
    H = wha_from_dict(d["H"])
    A = algebra_from_dict(d["A"])
    zero = (Q(0),) * A.dim
    table = [[zero] * A.dim for _ in range(H.dim)]
    for i, j, v in d["act"]:
        table[i][j] = _vec_in(v)
    return PartialActionMap(H, A, table)


def groupoid_action_to_dict(pga: PartialGroupoidAction) -> dict:
    G = pga.groupoid
    return {
        "groupoid": groupoid_to_dict(G),
        "A": algebra_to_dict(pga.A),
        "ideals": {g: [_vec_out(b) for b in pga.ideals[g].basis] for g in G.arrows},
        "units": {g: _vec_out(pga.units[g]) for g in G.arrows},
        "isos": {g: [_vec_out(c) for c in pga.isos[g].columns()] for g in G.arrows},
    }


def groupoid_action_from_dict(d: dict) -> PartialGroupoidAction:
    """``isos[g]`` lists the images of the RREF basis of ``D_{g^-1}``, in order."""
    _need(d, "groupoid", "A", "ideals", "units", "isos")
    G = groupoid_from_dict(d["groupoid"])
    A = algebra_from_dict(d["A"])
    ideals = {g: Subspace.span([_vec_in(v) for v in d["ideals"][g]], A.dim) for g in G.arrows}
    units = {g: _vec_in(d["units"][g]) for g in G.arrows}
    isos = {}
    for g in G.arrows:
        cols = [_vec_in(c) for c in d["isos"][g]]
        if len(cols) != ideals[G.inv[g]].dim:
            raise InputError(f"iso for {g} needs {ideals[G.inv[g]].dim} columns, got {len(cols)}")
        isos[g] = Matrix.from_columns(cols, A.dim)
    return PartialGroupoidAction(G, A, ideals, units, isos)


# -- files ---------------------------------------------------------------------

def load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: {exc}") from None


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=1, sort_keys=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


__all__ = [
    "algebra_to_dict", "algebra_from_dict", "wha_to_dict", "wha_from_dict",
    "groupoid_to_dict", "groupoid_from_dict", "action_to_dict", "action_from_dict",
    "groupoid_action_to_dict", "groupoid_action_from_dict", "load_json", "dump_json",
]
