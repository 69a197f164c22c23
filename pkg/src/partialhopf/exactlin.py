"""Exact linear algebra over the rationals.

Vectors are plain tuples of ``Fraction``. ``Matrix`` acts on column vectors.
``Subspace`` keeps a reduced row-echelon basis, so two equal subspaces have
identical bases and equality is a plain comparison.

Everything here is immutable once built.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotInvertible

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def fmt(q: Fraction) -> str:
    return str(q)


# -- vectors -----------------------------------------------------------------

def vec(xs: Iterable) -> Vector:
    return tuple(Q(x) for x in xs)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Vector) -> Vector:
    c = Q(c)
    return tuple(c * a for a in u)


def is_zero(u: Vector) -> bool:
    return not any(u)


def lincomb(n: int, terms: Iterable) -> Vector:
    """Sum of ``c * v`` over ``(c, v)`` pairs, in dimension ``n``."""
    out = [ZERO] * n
    for c, v in terms:
        if not c:
            continue
        for k, x in enumerate(v):
            if x:
                out[k] += c * x
    return tuple(out)


def support(u: Vector):
    return [(i, x) for i, x in enumerate(u) if x]


def dense(n: int, sparse: dict) -> Vector:
    out = [ZERO] * n
    for k, x in sparse.items():
        out[k] += x
    return tuple(out)


# -- Kronecker conventions (shared by every module) --------------------------

def tensor_index(i: int, j: int, n2: int) -> int:
    """Position of ``e_i (x) e_j`` when the second factor has dimension ``n2``."""
    return i * n2 + j


def tensor_split(k: int, n2: int) -> tuple[int, int]:
    return divmod(k, n2)


def tensor_vec(u: Vector, v: Vector) -> Vector:
    return tuple(a * b for a in u for b in v)


def tensor_map(f: "Matrix", g: "Matrix") -> "Matrix":
    rows = []
    for fr in f.rows:
        for gr in g.rows:
            rows.append(tuple(a * b for a in fr for b in gr))
    return Matrix(rows, f.ncols * g.ncols)


# -- matrices ----------------------------------------------------------------

class Matrix:
    """Dense exact matrix; ``M @ v`` applies it to a column vector."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionMismatch("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch(f"row of length {len(r)} in a {ncols}-column matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vec(n, i) for i in range(n)], n)

    @classmethod
    def zeros(cls, r: int, c: int) -> "Matrix":
        return cls([zero_vec(c)] * r, c)

    @classmethod
    def from_columns(cls, cols: Sequence[Vector], nrows: int) -> "Matrix":
        cols = [vec(c) for c in cols]
        for c in cols:
            if len(c) != nrows:
                raise DimensionMismatch(f"column of length {len(c)}, expected {nrows}")
        return cls([tuple(c[i] for c in cols) for i in range(nrows)], len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix.from_columns(self.rows, self.ncols)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} for a {self.shape} matrix")
        nz = support(v)
        return tuple(sum((r[j] * x for j, x in nz), ZERO) for r in self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if other.nrows != self.ncols:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            cols = [self.apply(c) for c in other.columns()]
            return Matrix.from_columns(cols, self.nrows)
        return self.apply(tuple(other))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix([vadd(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix([vsub(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c) -> "Matrix":
        return Matrix([vscale(c, r) for r in self.rows], self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(fmt(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    @property
    def rank(self) -> int:
        return len(_Echelon.of(self.ncols, self.rows).pivots)


# -- row reduction -----------------------------------------------------------

class _Echelon:
    """Incremental reduced row-echelon basis on sparse rows.

    Rows are dicts ``col -> Fraction``; each stored row has a leading 1 and is
    zero in every other pivot column.
    """

    def __init__(self, n: int):
        self.n = n
        self.pivots: dict[int, dict] = {}

    @classmethod
    def of(cls, n: int, vectors: Iterable) -> "_Echelon":
        e = cls(n)
        for v in vectors:
            e.add(v)
        return e

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        for p, prow in self.pivots.items():
            c = row.get(p)
            if c:
                for k, x in prow.items():
                    y = row.get(k, ZERO) - c * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        return row

    def add(self, v) -> bool:
        if isinstance(v, dict):
            row = {k: Q(x) for k, x in v.items() if x}
        else:
            if len(v) != self.n:
                raise DimensionMismatch(f"vector of length {len(v)} in dimension {self.n}")
            row = {k: Q(x) for k, x in enumerate(v) if x}
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = ONE / row[p]
        row = {k: x * inv for k, x in row.items()}
        for q, qrow in self.pivots.items():
            c = qrow.get(p)
            if c:
                for k, x in row.items():
                    y = qrow.get(k, ZERO) - c * x
                    if y:
                        qrow[k] = y
                    else:
                        qrow.pop(k, None)
        self.pivots[p] = row
        return True

    def rows(self) -> list[Vector]:
        return [dense(self.n, self.pivots[p]) for p in sorted(self.pivots)]


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form, zero rows kept at the bottom."""
    e = _Echelon.of(m.ncols, m.rows)
    rows = e.rows()
    rows += [zero_vec(m.ncols)] * (m.nrows - len(rows))
    return Matrix(rows, m.ncols)


def kernel(m: Matrix) -> "Subspace":
    e = _Echelon.of(m.ncols, m.rows)
    piv = sorted(e.pivots)
    free = [j for j in range(m.ncols) if j not in e.pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = ONE
        for p in piv:
            c = e.pivots[p].get(f)
            if c:
                v[p] = -c
        basis.append(tuple(v))
    return Subspace.span(basis, m.ncols)


def image(m: Matrix) -> "Subspace":
    return Subspace.span(m.columns(), m.nrows)


def solve(m: Matrix, b: Vector) -> Vector | None:
    """A particular solution of ``m x = b``, or None when inconsistent."""
    aug = [tuple(r) + (Q(c),) for r, c in zip(m.rows, b)]
    e = _Echelon.of(m.ncols + 1, aug)
    if m.ncols in e.pivots:
        return None
    x = [ZERO] * m.ncols
    for p, row in e.pivots.items():
        x[p] = row.get(m.ncols, ZERO)
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise NotInvertible(f"non-square {m.shape} matrix")
    n = m.nrows
    aug = [tuple(r) + unit_vec(n, i) for i, r in enumerate(m.rows)]
    e = _Echelon.of(2 * n, aug)
    if not all(i in e.pivots for i in range(n)):
        raise NotInvertible("singular matrix")
    rows = e.rows()
    return Matrix([r[n:] for r in rows[:n]], n)


# -- subspaces and quotients ---------------------------------------------------

class Subspace:
    """A subspace of Q^n with its canonical RREF basis."""

    __slots__ = ("ambient_dim", "basis", "pivots", "_pivot_rows")

    def __init__(self, ambient_dim: int, echelon: _Echelon):
        self.ambient_dim = ambient_dim
        self.pivots = tuple(sorted(echelon.pivots))
        self._pivot_rows = {p: dict(echelon.pivots[p]) for p in self.pivots}
        self.basis = tuple(dense(ambient_dim, self._pivot_rows[p]) for p in self.pivots)

    @classmethod
    def span(cls, vectors: Iterable, n: int) -> "Subspace":
        return cls(n, _Echelon.of(n, vectors))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, _Echelon(n))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls.span([unit_vec(n, i) for i in range(n)], n)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.basis, self.ambient_dim)

    def _echelon(self) -> _Echelon:
        e = _Echelon(self.ambient_dim)
        e.pivots = {p: dict(r) for p, r in self._pivot_rows.items()}
        return e

    def residual(self, v: Vector) -> dict:
        row = {k: x for k, x in enumerate(v) if x}
        for p, prow in self._pivot_rows.items():
            c = row.get(p)
            if c:
                for k, x in prow.items():
                    y = row.get(k, ZERO) - c * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        return row

    def contains(self, v: Vector) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        return not self.residual(v)

    __contains__ = contains

    def coordinates(self, v: Vector) -> Vector:
        """Coordinates of ``v`` in the RREF basis; ``v`` must lie in the subspace."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def from_coordinates(self, c: Sequence) -> Vector:
        return lincomb(self.ambient_dim, zip(c, self.basis))

    def coordinate_matrix(self) -> Matrix:
        """Matrix taking basis coordinates to ambient vectors."""
        return Matrix.from_columns(self.basis, self.ambient_dim) if self.basis \
            else Matrix.zeros(self.ambient_dim, 0)

    def issubspace(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubspace(other)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("sum of subspaces in different ambients")
        e = self._echelon()
        for b in other.basis:
            e.add(b)
        return Subspace(self.ambient_dim, e)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("intersection of subspaces in different ambients")
        if not self.dim or not other.dim:
            return Subspace.zero(self.ambient_dim)
        # x = sum a_i u_i = sum b_j w_j
        cols = list(self.basis) + [vscale(-1, w) for w in other.basis]
        ker = kernel(Matrix.from_columns(cols, self.ambient_dim))
        vs = [self.from_coordinates(k[: self.dim]) for k in ker.basis]
        return Subspace.span(vs, self.ambient_dim)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"


class QuotientSpace:
    """``Q^n / relations`` with the RREF-complement normal form.

    Quotient coordinates are the ambient coordinates at the non-pivot columns
    of the relation basis; ``section`` puts them back with zeros in the
    pivot columns.
    """

    __slots__ = ("ambient_dim", "relations", "free", "_proj")

    def __init__(self, ambient_dim: int, relations: Subspace):
        if relations.ambient_dim != ambient_dim:
            raise DimensionMismatch("relations live in a different ambient space")
        self.ambient_dim = ambient_dim
        self.relations = relations
        piv = set(relations.pivots)
        self.free = tuple(j for j in range(ambient_dim) if j not in piv)
        pos = {f: i for i, f in enumerate(self.free)}
        proj = []
        for a in range(ambient_dim):
            if a in pos:
                proj.append({pos[a]: ONE})
            else:
                row = relations._pivot_rows[a]
                proj.append({pos[k]: -x for k, x in row.items() if k != a})
        self._proj = tuple(proj)

    @property
    def dim(self) -> int:
        return len(self.free)

    def project_sparse(self, w) -> dict:
        """Project a vector (tuple or sparse dict) to sparse quotient coordinates."""
        items = w.items() if isinstance(w, dict) else enumerate(w)
        out: dict = {}
        for a, c in items:
            if not c:
                continue
            for k, x in self._proj[a].items():
                y = out.get(k, ZERO) + c * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
        return out

    def project(self, w: Vector) -> Vector:
        if len(w) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(w)} in ambient {self.ambient_dim}")
        return dense(self.dim, self.project_sparse(w))

    def section(self, q: Vector) -> Vector:
        if len(q) != self.dim:
            raise DimensionMismatch(f"quotient vector of length {len(q)}, expected {self.dim}")
        v = [ZERO] * self.ambient_dim
        for f, x in zip(self.free, q):
            v[f] = x
        return tuple(v)

    def project_matrix(self) -> Matrix:
        return Matrix.from_columns([dense(self.dim, p) for p in self._proj], self.dim) \
            if self.ambient_dim else Matrix.zeros(self.dim, 0)

    def section_matrix(self) -> Matrix:
        return Matrix.from_columns([self.section(unit_vec(self.dim, i)) for i in range(self.dim)],
                                   self.ambient_dim)

    def __repr__(self):
        return f"QuotientSpace(Q^{self.ambient_dim} / {self.relations.dim} relations)"


def quotient(ambient_dim: int, relations: Subspace) -> QuotientSpace:
    return QuotientSpace(ambient_dim, relations)
