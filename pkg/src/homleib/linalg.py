"""Exact dense linear algebra: reduced row echelon form, kernels, images,
subspace arithmetic, quotient spaces and induced maps.

Everything is immutable after construction and all arithmetic is exact;
equality of values is field equality, never approximate.  Vectors are plain
tuples of scalars, matrices are tuples of row tuples.  Subspace bases are
kept in canonical reduced row echelon form with pivots in increasing column
order, so equal subspaces compare equal as data and every reported basis is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import DimensionError, FieldMismatch, NotWellDefined
from .fields import Field


def vec_zero(field: Field, n: int) -> tuple:
    return (field.zero(),) * n


def vec_add(field: Field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: Field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field: Field, c, v):
    return tuple(field.mul(c, a) for a in v)


def vec_is_zero(field: Field, v) -> bool:
    z = field.zero()
    return all(a == z for a in v)


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError("entry grid does not match declared shape")

    @staticmethod
    def from_rows(field: Field, rows) -> "Matrix":
        rows = tuple(tuple(field.from_int(x) if isinstance(x, int) else x for x in r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        return Matrix(field, len(rows), ncols, rows)

    @staticmethod
    def zero(field: Field, rows: int, cols: int) -> "Matrix":
        return Matrix(field, rows, cols, tuple((field.zero(),) * cols for _ in range(rows)))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return Matrix(field, n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    def row(self, i) -> tuple:
        return self.entries[i]

    def col(self, j) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        if self.rows == 0 or self.cols == 0:
            return Matrix(self.field, self.cols, self.rows, tuple(() for _ in range(self.cols)))
        return Matrix(self.field, self.cols, self.rows, tuple(zip(*self.entries)))

    def apply(self, v) -> tuple:
        if len(v) != self.cols:
            raise DimensionError(f"vector length {len(v)} does not match {self.cols} columns")
        f = self.field
        out = [f.zero()] * self.rows
        for j, c in enumerate(v):
            if c == f.zero():
                continue
            for i in range(self.rows):
                e = self.entries[i][j]
                if e != f.zero():
                    out[i] = f.add(out[i], f.mul(e, c))
        return tuple(out)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatch("matrix product across different fields")
        if self.cols != other.rows:
            raise DimensionError("inner dimensions disagree")
        f = self.field
        ot = other.transpose().entries
        out = []
        for r in self.entries:
            row = []
            for c in ot:
                acc = f.zero()
                for a, b in zip(r, c):
                    if a != f.zero() and b != f.zero():
                        acc = f.add(acc, f.mul(a, b))
                row.append(acc)
            out.append(tuple(row))
        return Matrix(f, self.rows, other.cols, tuple(out))

    def add(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in sum")
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      tuple(vec_add(f, r, s) for r, s in zip(self.entries, other.entries)))

    def sub(self, other: "Matrix") -> "Matrix":
        f = self.field
        return self.add(Matrix(f, other.rows, other.cols,
                               tuple(vec_scale(f, f.neg(f.one()), r) for r in other.entries)))

    def is_zero(self) -> bool:
        z = self.field.zero()
        return all(e == z for r in self.entries for e in r)


@dataclass(frozen=True)
class RrefResult:
    reduced: Matrix
    rank: int
    pivots: tuple


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row echelon form, with rank and pivot columns."""
    f = m.field
    zero, one = f.zero(), f.one()
    rows = [list(r) for r in m.entries]
    pivots = []
    r = 0
    for c in range(m.cols):
        pivot_row = None
        for i in range(r, m.rows):
            if rows[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        if pv != one:
            inv = f.inv(pv)
            rows[r] = [f.mul(inv, x) for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c] != zero:
                coef = rows[i][c]
                rows[i] = [f.sub(x, f.mul(coef, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    reduced = Matrix(f, m.rows, m.cols, tuple(tuple(row) for row in rows))
    return RrefResult(reduced, len(pivots), tuple(pivots))


class RrefAccumulator:
    """Incremental reduced row echelon span builder.

    Rows are kept fully reduced against each other at all times, stored
    sparsely as {column: value}.  ``add`` reduces the incoming vector and
    reports whether it enlarged the span.  The result is identical to one
    shot ``rref`` of all inserted vectors.
    """

    def __init__(self, field: Field, ambient_dim: int):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows: dict[int, dict[int, object]] = {}  # pivot col -> sparse row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, sv: dict) -> dict:
        f = self.field
        zero = f.zero()
        for c in sorted(sv):
            if c not in self.rows:
                continue
            coef = sv.get(c, zero)
            if coef == zero:
                continue
            for cc, val in self.rows[c].items():
                nv = f.sub(sv.get(cc, zero), f.mul(coef, val))
                if nv == zero:
                    sv.pop(cc, None)
                else:
                    sv[cc] = nv
        return sv

    def reduce_vector(self, v) -> dict:
        zero = self.field.zero()
        sv = {i: x for i, x in enumerate(v) if x != zero}
        return self._reduce(sv)

    def contains(self, v) -> bool:
        return not self.reduce_vector(v)

    def add(self, v) -> bool:
        f = self.field
        zero = f.zero()
        sv = self.reduce_vector(v)
        if not sv:
            return False
        pivot = min(sv)
        inv = f.inv(sv[pivot])
        sv = {c: f.mul(inv, x) for c, x in sv.items()}
        # back-substitute the new pivot into existing rows
        for pc, row in self.rows.items():
            coef = row.get(pivot)
            if coef is None:
                continue
            for cc, val in sv.items():
                nv = f.sub(row.get(cc, zero), f.mul(coef, val))
                if nv == zero:
                    row.pop(cc, None)
                else:
                    row[cc] = nv
        self.rows[pivot] = sv
        return True

    def basis_matrix(self) -> Matrix:
        zero = self.field.zero()
        rows = []
        for pc in sorted(self.rows):
            dense = [zero] * self.ambient_dim
            for c, val in self.rows[pc].items():
                dense[c] = val
            rows.append(tuple(dense))
        return Matrix(self.field, len(rows), self.ambient_dim, tuple(rows))


@dataclass(frozen=True)
class Subspace:
    """A subspace of a coordinate space, held as a canonical RREF basis."""

    ambient_dim: int
    basis: Matrix  # rows = basis vectors, reduced echelon, no zero rows
    # cached echelon data; identity is determined by the basis alone
    _pivots: tuple = dc_field(init=False, compare=False, repr=False)
    _sparse_rows: tuple = dc_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        f = self.basis.field
        zero = f.zero()
        pivots = []
        sparse = []
        for r in self.basis.entries:
            support = tuple((j, x) for j, x in enumerate(r) if x != zero)
            sparse.append(support)
            pivots.append(support[0][0] if support else -1)
        object.__setattr__(self, "_pivots", tuple(pivots))
        object.__setattr__(self, "_sparse_rows", tuple(sparse))

    @staticmethod
    def span(field: Field, ambient_dim: int, vectors) -> "Subspace":
        acc = RrefAccumulator(field, ambient_dim)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector length {len(v)} in ambient dimension {ambient_dim}")
            acc.add(v)
        return Subspace(ambient_dim, acc.basis_matrix())

    @staticmethod
    def zero(field: Field, ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix(field, 0, ambient_dim, ()))

    @staticmethod
    def full(field: Field, ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(field, ambient_dim))

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.rows

    def pivots(self) -> tuple:
        return self._pivots

    def reduce(self, v) -> tuple:
        """Canonical representative of v modulo this subspace (zeros at pivots)."""
        f = self.field
        zero = f.zero()
        w = list(v)
        for support, p in zip(self._sparse_rows, self._pivots):
            c = w[p]
            if c != zero:
                for j, x in support:
                    w[j] = f.sub(w[j], f.mul(c, x))
        return tuple(w)

    def contains(self, v) -> bool:
        return vec_is_zero(self.field, self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis.entries)

    def add(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("subspace sum in different ambient spaces")
        return Subspace.span(self.field, self.ambient_dim,
                             list(self.basis.entries) + list(other.basis.entries))

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("intersection in different ambient spaces")
        f = self.field
        h, k = self.dim, other.dim
        if h == 0 or k == 0:
            return Subspace.zero(f, self.ambient_dim)
        # columns are the stacked basis vectors; kernel elements (a, b) give
        # a.H + b.K = 0, so a.H lies in both row spaces
        cols = list(self.basis.entries) + list(other.basis.entries)
        mat = Matrix(f, self.ambient_dim, h + k, tuple(zip(*cols)))
        ker = kernel_basis(mat)
        vecs = []
        for w in ker:
            v = [f.zero()] * self.ambient_dim
            for i in range(h):
                if w[i] != f.zero():
                    for j in range(self.ambient_dim):
                        v[j] = f.add(v[j], f.mul(w[i], self.basis.entries[i][j]))
            vecs.append(tuple(v))
        return Subspace.span(f, self.ambient_dim, vecs)


def kernel_basis(m: Matrix) -> list:
    """Canonical basis of the null space of ``m`` (solutions of m.x = 0)."""
    f = m.field
    res = rref(m)
    pivot_set = set(res.pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [f.zero()] * m.cols
        v[fc] = f.one()
        for r, pc in enumerate(res.pivots):
            v[pc] = f.neg(res.reduced.entries[r][fc])
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b) -> tuple | None:
    """One exact solution of m.x = b (free variables set to zero), or None."""
    f = m.field
    aug = Matrix(f, m.rows, m.cols + 1,
                 tuple(r + (bb,) for r, bb in zip(m.entries, b)))
    res = rref(aug)
    x = [f.zero()] * m.cols
    for r, pc in enumerate(res.pivots):
        if pc == m.cols:
            return None  # inconsistent system
        x[pc] = res.reduced.entries[r][m.cols]
    return tuple(x)


@dataclass(frozen=True)
class LinearMap:
    """A linear map given by its matrix; columns are images of basis vectors."""

    domain_dim: int
    codomain_dim: int
    matrix: Matrix

    def __post_init__(self):
        if (self.matrix.rows, self.matrix.cols) != (self.codomain_dim, self.domain_dim):
            raise DimensionError("matrix shape must be codomain x domain")

    @staticmethod
    def from_columns(field: Field, codomain_dim: int, columns) -> "LinearMap":
        columns = list(columns)
        rows = tuple(zip(*columns)) if columns else tuple(() for _ in range(codomain_dim))
        if columns:
            return LinearMap(len(columns), codomain_dim, Matrix(field, codomain_dim, len(columns), rows))
        return LinearMap(0, codomain_dim, Matrix(field, codomain_dim, 0, tuple(() for _ in range(codomain_dim))))

    @staticmethod
    def identity(field: Field, n: int) -> "LinearMap":
        return LinearMap(n, n, Matrix.identity(field, n))

    @staticmethod
    def zero(field: Field, domain_dim: int, codomain_dim: int) -> "LinearMap":
        return LinearMap(domain_dim, codomain_dim, Matrix.zero(field, codomain_dim, domain_dim))

    @property
    def field(self) -> Field:
        return self.matrix.field

    def apply(self, v) -> tuple:
        return self.matrix.apply(v)

    def column(self, j) -> tuple:
        return self.matrix.col(j)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self after inner."""
        if inner.codomain_dim != self.domain_dim:
            raise DimensionError("composition shapes disagree")
        return LinearMap(inner.domain_dim, self.codomain_dim, self.matrix.mul(inner.matrix))

    def add(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.domain_dim, self.codomain_dim, self.matrix.add(other.matrix))

    def sub(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.domain_dim, self.codomain_dim, self.matrix.sub(other.matrix))

    def rank(self) -> int:
        return rref(self.matrix).rank

    def image(self) -> Subspace:
        return Subspace.span(self.field, self.codomain_dim,
                             [self.matrix.col(j) for j in range(self.domain_dim)])

    def kernel(self) -> Subspace:
        return Subspace.span(self.field, self.domain_dim, kernel_basis(self.matrix))

    def is_surjective(self) -> bool:
        return self.rank() == self.codomain_dim

    def is_injective(self) -> bool:
        return self.rank() == self.domain_dim

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def preimage(self, v) -> tuple | None:
        return solve(self.matrix, v)

    def section(self) -> "LinearMap":
        """A right inverse on the image: columns solve self.x = e_k.

        Deterministic (free variables zero).  Raises if not surjective.
        """
        f = self.field
        cols = []
        for k in range(self.codomain_dim):
            e = tuple(f.one() if i == k else f.zero() for i in range(self.codomain_dim))
            x = solve(self.matrix, e)
            if x is None:
                raise NotWellDefined(f"no preimage for coordinate {k}; map is not surjective")
            cols.append(x)
        return LinearMap.from_columns(f, self.domain_dim, cols)


def kernel(f: LinearMap) -> Subspace:
    return f.kernel()


@dataclass(frozen=True)
class QuotientSpace:
    """Ambient space modulo a relation subspace, with canonical coordinates.

    Quotient coordinates are the non-pivot columns of the relation RREF in
    increasing order; ``lift`` places coordinates there and zeros at pivots,
    so project(lift(q)) = q exactly.
    """

    ambient_dim: int
    relations: Subspace
    coset_basis: tuple = dc_field(init=False)

    def __post_init__(self):
        pivots = set(self.relations.pivots())
        object.__setattr__(self, "coset_basis",
                           tuple(c for c in range(self.ambient_dim) if c not in pivots))

    @property
    def field(self) -> Field:
        return self.relations.field

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.relations.dim

    def project(self, v) -> tuple:
        if len(v) != self.ambient_dim:
            raise DimensionError("vector does not live in the ambient space")
        w = self.relations.reduce(v)
        return tuple(w[c] for c in self.coset_basis)

    def lift(self, q) -> tuple:
        if len(q) != self.dim:
            raise DimensionError("coordinate vector does not match quotient dimension")
        f = self.field
        v = [f.zero()] * self.ambient_dim
        for c, x in zip(self.coset_basis, q):
            v[c] = x
        return tuple(v)

    def lift_unit(self, k) -> tuple:
        f = self.field
        v = [f.zero()] * self.ambient_dim
        v[self.coset_basis[k]] = f.one()
        return tuple(v)

    def projection_map(self) -> LinearMap:
        f = self.field
        cols = [self.project(tuple(f.one() if i == j else f.zero() for i in range(self.ambient_dim)))
                for j in range(self.ambient_dim)]
        return LinearMap.from_columns(f, self.dim, cols)

    def section_map(self) -> LinearMap:
        return LinearMap.from_columns(self.field, self.ambient_dim,
                                      [self.lift_unit(k) for k in range(self.dim)])


def quotient(field: Field, ambient_dim: int, relations) -> QuotientSpace:
    return QuotientSpace(ambient_dim, Subspace.span(field, ambient_dim, relations))


def induced_map(f: LinearMap, src: QuotientSpace, dst: QuotientSpace) -> LinearMap:
    """The map on quotient coordinates, provided f carries relations into relations."""
    if f.domain_dim != src.ambient_dim or f.codomain_dim != dst.ambient_dim:
        raise DimensionError("map does not connect the two ambient spaces")
    for r in src.relations.basis.entries:
        w = f.apply(r)
        if not dst.relations.contains(w):
            raise NotWellDefined(
                "map does not descend to the quotient", witness=(r, w))
    cols = [dst.project(f.apply(src.lift_unit(k))) for k in range(src.dim)]
    return LinearMap.from_columns(f.field, dst.dim, cols)
