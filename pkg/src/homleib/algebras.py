"""Hom-Leibniz algebras given by structure constants and a twist map.

An algebra is a coordinate space with a bilinear bracket, stored as the
table c[i][j] = [e_i, e_j] (a coordinate vector), and a linear twist whose
matrix columns are the images of the basis.  Validation checks the
Hom-Leibniz identity

    [t(x), [y, z]] = [[x, y], t(z)] - [[x, z], t(y)]

and multiplicativity t[x, y] = [t(x), t(y)] on basis tuples, which suffices
by multilinearity.  All values are immutable and all operations pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionError,
    FieldMismatch,
    NotAlphaStable,
    NotAnIdeal,
    NotEndomorphism,
    ParentMismatch,
    StructureError,
)
from .fields import Field
from .linalg import (
    LinearMap,
    Matrix,
    QuotientSpace,
    RrefAccumulator,
    Subspace,
    induced_map,
    vec_add,
    vec_is_zero,
    vec_sub,
    vec_zero,
)
from .report import ValidationReport


def default_labels(dim: int, prefix: str = "e") -> tuple:
    return tuple(f"{prefix}{i + 1}" for i in range(dim))


@dataclass(frozen=True)
class HomLeibnizAlgebra:
    field: Field
    dim: int
    c: tuple  # c[i][j] = coordinates of the bracket of basis vectors i, j
    twist: Matrix
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != self.dim:
            raise StructureError("label count does not match dimension")
        if len(self.c) != self.dim or any(len(row) != self.dim for row in self.c):
            raise StructureError("structure table must be dim x dim")
        for row in self.c:
            for v in row:
                if len(v) != self.dim:
                    raise StructureError("bracket values must be coordinate vectors")
        if (self.twist.rows, self.twist.cols) != (self.dim, self.dim):
            raise StructureError("twist matrix must be dim x dim")
        if self.twist.field != self.field:
            raise FieldMismatch("twist matrix over the wrong field")

    @staticmethod
    def from_brackets(field: Field, dim: int, brackets: dict, twist=None, labels=None) -> "HomLeibnizAlgebra":
        """Build from sparse bracket data {(i, j): {k: coeff}}."""
        table = [[vec_zero(field, dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), val in brackets.items():
            v = [field.zero()] * dim
            for k, coeff in val.items():
                v[k] = field.from_int(coeff) if isinstance(coeff, int) else coeff
            table[i][j] = tuple(v)
        tw = twist if twist is not None else Matrix.identity(field, dim)
        if isinstance(tw, LinearMap):
            tw = tw.matrix
        return HomLeibnizAlgebra(field, dim, tuple(tuple(r) for r in table), tw,
                                 tuple(labels) if labels else default_labels(dim))

    @staticmethod
    def abelian(field: Field, dim: int, twist=None, labels=None) -> "HomLeibnizAlgebra":
        return HomLeibnizAlgebra.from_brackets(field, dim, {}, twist, labels)

    def bracket(self, x, y) -> tuple:
        f = self.field
        zero = f.zero()
        out = [zero] * self.dim
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            for j, yj in enumerate(y):
                if yj == zero:
                    continue
                coeff = f.mul(xi, yj)
                cij = self.c[i][j]
                for k in range(self.dim):
                    if cij[k] != zero:
                        out[k] = f.add(out[k], f.mul(coeff, cij[k]))
        return tuple(out)

    def apply_twist(self, x) -> tuple:
        return self.twist.apply(x)

    def unit(self, i) -> tuple:
        f = self.field
        return tuple(f.one() if k == i else f.zero() for k in range(self.dim))

    def basis_vectors(self) -> list:
        return [self.unit(i) for i in range(self.dim)]

    def twist_map(self) -> LinearMap:
        return LinearMap(self.dim, self.dim, self.twist)

    def is_abelian(self) -> bool:
        return all(vec_is_zero(self.field, v) for row in self.c for v in row)

    def is_skew(self) -> bool:
        """Bracket skew-symmetry: [x, x] = 0, hence a Hom-Lie algebra."""
        f = self.field
        for i in range(self.dim):
            if not vec_is_zero(f, self.c[i][i]):
                return False
            for j in range(i + 1, self.dim):
                if not vec_is_zero(f, vec_add(f, self.c[i][j], self.c[j][i])):
                    return False
        return True

    def validate(self) -> ValidationReport:
        rep = ValidationReport(subject="hom-leibniz algebra")
        f = self.field
        tw = [self.apply_twist(self.unit(i)) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = self.apply_twist(self.c[i][j])
                rhs = self.bracket(tw[i], tw[j])
                if lhs != rhs:
                    rep.record("multiplicativity", (self.labels[i], self.labels[j]),
                               f"twist[{self.labels[i]},{self.labels[j]}] != [twist {self.labels[i]}, twist {self.labels[j]}]")
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    lhs = self.bracket(tw[i], self.c[j][k])
                    rhs = vec_sub(f, self.bracket(self.c[i][j], tw[k]),
                                  self.bracket(self.c[i][k], tw[j]))
                    if lhs != rhs:
                        rep.record("hom-leibniz identity",
                                   (self.labels[i], self.labels[j], self.labels[k]))
        rep.flags["hom_lie"] = self.is_skew()
        rep.flags["abelian"] = self.is_abelian()
        return rep

    def require_valid(self):
        rep = self.validate()
        if not rep.valid:
            v = rep.violations[0]
            raise StructureError(f"invalid algebra: {v.law} fails at {v.witness}")
        return self


@dataclass(frozen=True)
class AlgebraHom:
    source: HomLeibnizAlgebra
    target: HomLeibnizAlgebra
    map: LinearMap

    def __post_init__(self):
        if self.map.domain_dim != self.source.dim or self.map.codomain_dim != self.target.dim:
            raise DimensionError("homomorphism matrix does not match the algebras")

    def apply(self, v) -> tuple:
        return self.map.apply(v)

    def validate(self) -> ValidationReport:
        rep = ValidationReport(subject="algebra homomorphism")
        src, tgt = self.source, self.target
        cols = [self.map.column(i) for i in range(src.dim)]
        for i in range(src.dim):
            for j in range(src.dim):
                if self.map.apply(src.c[i][j]) != tgt.bracket(cols[i], cols[j]):
                    rep.record("bracket preservation", (src.labels[i], src.labels[j]))
        for i in range(src.dim):
            if self.map.apply(src.apply_twist(src.unit(i))) != tgt.apply_twist(cols[i]):
                rep.record("twist compatibility", (src.labels[i],))
        return rep

    def is_homomorphism(self) -> bool:
        return self.validate().valid

    def compose(self, inner: "AlgebraHom") -> "AlgebraHom":
        return AlgebraHom(inner.source, self.target, self.map.compose(inner.map))


@dataclass(frozen=True)
class IdealHandle:
    parent: HomLeibnizAlgebra
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != self.parent.dim:
            raise DimensionError("subspace does not live in the parent algebra")

    @property
    def dim(self) -> int:
        return self.space.dim

    def ideal_witness(self):
        """None when this is a twist-stable two-sided ideal, else a witness."""
        L, S = self.parent, self.space
        for h in S.basis.entries:
            for j in range(L.dim):
                e = L.unit(j)
                for tag, v in (("left", L.bracket(h, e)), ("right", L.bracket(e, h))):
                    if not S.contains(v):
                        return (tag, h, L.labels[j], v)
        for h in S.basis.entries:
            w = L.apply_twist(h)
            if not S.contains(w):
                return ("twist", h, w)
        return None

    def is_ideal(self) -> bool:
        return self.ideal_witness() is None

    def require_ideal(self):
        w = self.ideal_witness()
        if w is None:
            return self
        if w[0] == "twist":
            raise NotAlphaStable("subspace is not stable under the twist", witness=w)
        raise NotAnIdeal("bracket escapes the subspace", witness=w)


def validate_algebra(candidate: HomLeibnizAlgebra) -> ValidationReport:
    return candidate.validate()


def commutator(h: IdealHandle, k: IdealHandle) -> Subspace:
    """Span of all brackets [h, k] and [k, h] over bases of the two subspaces."""
    if h.parent != k.parent:
        raise ParentMismatch("commutator of ideals of different algebras")
    L = h.parent
    vecs = []
    for a in h.space.basis.entries:
        for b in k.space.basis.entries:
            vecs.append(L.bracket(a, b))
            vecs.append(L.bracket(b, a))
    return Subspace.span(L.field, L.dim, vecs)


def derived_subspace(L: HomLeibnizAlgebra) -> Subspace:
    full = IdealHandle(L, Subspace.full(L.field, L.dim))
    return commutator(full, full)


def center(L: HomLeibnizAlgebra) -> Subspace:
    """Solutions of [x, e_j] = 0 = [e_j, x] for every basis vector e_j."""
    f = L.field
    rows = []
    for j in range(L.dim):
        for k in range(L.dim):
            rows.append(tuple(L.c[i][j][k] for i in range(L.dim)))
            rows.append(tuple(L.c[j][i][k] for i in range(L.dim)))
    if not rows:
        return Subspace.full(f, L.dim)
    mat = Matrix(f, len(rows), L.dim, tuple(rows))
    return LinearMap(L.dim, len(rows), mat).kernel()


def quotient_algebra(L: HomLeibnizAlgebra, ideal: IdealHandle):
    """The quotient algebra with its induced bracket and twist, plus the projection."""
    if ideal.parent != L:
        raise ParentMismatch("ideal of a different algebra")
    ideal.require_ideal()
    q = QuotientSpace(L.dim, ideal.space)
    reps = [q.lift_unit(k) for k in range(q.dim)]
    table = tuple(tuple(q.project(L.bracket(ra, rb)) for rb in reps) for ra in reps)
    twist = induced_map(L.twist_map(), q, q)
    labels = tuple(L.labels[c] for c in q.coset_basis)
    quot = HomLeibnizAlgebra(L.field, q.dim, table, twist.matrix, labels)
    proj = AlgebraHom(L, quot, q.projection_map())
    return quot, proj


@dataclass(frozen=True)
class Predicates:
    perfect: bool
    alpha_perfect: bool
    alpha_surjective: bool
    abelian: bool

    def to_dict(self) -> dict:
        return {
            "perfect": self.perfect,
            "alpha_perfect": self.alpha_perfect,
            "alpha_surjective": self.alpha_surjective,
            "abelian": self.abelian,
        }


def twist_image_bracket_span(L: HomLeibnizAlgebra) -> Subspace:
    """Span of [t(L), t(L)] where t is the twist."""
    img = L.twist_map().image()
    handle = IdealHandle(L, img)
    return commutator(handle, handle)


def predicates(L: HomLeibnizAlgebra) -> Predicates:
    return Predicates(
        perfect=derived_subspace(L).dim == L.dim,
        alpha_perfect=twist_image_bracket_span(L).dim == L.dim,
        alpha_surjective=L.twist_map().rank() == L.dim,
        abelian=L.is_abelian(),
    )


def squares_ideal(L: HomLeibnizAlgebra) -> Subspace:
    """Smallest twist-stable two-sided ideal containing all squares [x, x].

    Seeded with the basis squares and the polarized sums [e_i, e_j] + [e_j, e_i]
    (characteristic is never 2), then closed under bracketing with basis
    vectors on both sides and under the twist until the dimension stabilizes.
    """
    f = L.field
    acc = RrefAccumulator(f, L.dim)
    queue = []

    def push(v):
        if acc.add(v):
            queue.append(v)

    for i in range(L.dim):
        push(L.c[i][i])
        for j in range(i + 1, L.dim):
            push(vec_add(f, L.c[i][j], L.c[j][i]))
    while queue:
        v = queue.pop()
        push(L.apply_twist(v))
        for j in range(L.dim):
            e = L.unit(j)
            push(L.bracket(v, e))
            push(L.bracket(e, v))
    return Subspace(L.dim, acc.basis_matrix())


def lieization(L: HomLeibnizAlgebra):
    """Quotient by the squares ideal; the result is a Hom-Lie algebra."""
    return quotient_algebra(L, IdealHandle(L, squares_ideal(L)))


def yau_twist(L: HomLeibnizAlgebra, endo: Matrix) -> HomLeibnizAlgebra:
    """Twist a Leibniz algebra (identity twist) along a bracket endomorphism:
    the new bracket is [x, y]' = [endo(x), endo(y)] and the new twist is endo."""
    if L.twist != Matrix.identity(L.field, L.dim):
        raise StructureError("twisting requires a Leibniz algebra with identity twist")
    if (endo.rows, endo.cols) != (L.dim, L.dim):
        raise DimensionError("endomorphism matrix has the wrong shape")
    cols = [endo.col(j) for j in range(L.dim)]
    for i in range(L.dim):
        for j in range(L.dim):
            if endo.apply(L.c[i][j]) != L.bracket(cols[i], cols[j]):
                raise NotEndomorphism("map does not preserve the bracket",
                                      witness=(L.labels[i], L.labels[j]))
    table = tuple(tuple(L.bracket(cols[i], cols[j]) for j in range(L.dim)) for i in range(L.dim))
    return HomLeibnizAlgebra(L.field, L.dim, table, endo, L.labels)


def subalgebra(L: HomLeibnizAlgebra, space: Subspace, label_prefix: str = "s"):
    """Materialize a bracket- and twist-closed subspace as a standalone algebra.

    Returns the algebra on the subspace basis together with the inclusion.
    """
    if space.ambient_dim != L.dim:
        raise DimensionError("subspace of a different space")
    f = L.field
    basis = list(space.basis.entries)
    k = len(basis)

    def coords(v):
        # solve against the basis rows; RREF makes this a direct read-off
        w = list(v)
        out = [f.zero()] * k
        for idx, (row, p) in enumerate(zip(basis, space.pivots())):
            c = w[p]
            if c != f.zero():
                out[idx] = c
                for jj in range(space.ambient_dim):
                    if row[jj] != f.zero():
                        w[jj] = f.sub(w[jj], f.mul(c, row[jj]))
        if not vec_is_zero(f, tuple(w)):
            raise StructureError("subspace is not closed under bracket and twist")
        return tuple(out)

    table = tuple(tuple(coords(L.bracket(a, b)) for b in basis) for a in basis)
    twist_cols = [coords(L.apply_twist(a)) for a in basis]
    twist = LinearMap.from_columns(f, k, twist_cols).matrix
    labels = default_labels(k, label_prefix)
    sub = HomLeibnizAlgebra(f, k, table, twist, labels)
    incl = AlgebraHom(sub, L, LinearMap.from_columns(f, L.dim, basis))
    return sub, incl


def twist_image_subalgebra(L: HomLeibnizAlgebra, label_prefix: str = "a"):
    return subalgebra(L, L.twist_map().image(), label_prefix)


def direct_sum(A: HomLeibnizAlgebra, B: HomLeibnizAlgebra) -> HomLeibnizAlgebra:
    if A.field != B.field:
        raise FieldMismatch("direct sum across different fields")
    f = A.field
    n = A.dim + B.dim

    def emb_a(v):
        return tuple(v) + vec_zero(f, B.dim)

    def emb_b(v):
        return vec_zero(f, A.dim) + tuple(v)

    table = [[vec_zero(f, n) for _ in range(n)] for _ in range(n)]
    for i in range(A.dim):
        for j in range(A.dim):
            table[i][j] = emb_a(A.c[i][j])
    for i in range(B.dim):
        for j in range(B.dim):
            table[A.dim + i][A.dim + j] = emb_b(B.c[i][j])
    twist_cols = [emb_a(A.twist.col(j)) for j in range(A.dim)]
    twist_cols += [emb_b(B.twist.col(j)) for j in range(B.dim)]
    twist = LinearMap.from_columns(f, n, twist_cols).matrix
    labels = tuple(f"{x}.1" for x in A.labels) + tuple(f"{x}.2" for x in B.labels)
    return HomLeibnizAlgebra(f, n, tuple(tuple(r) for r in table), twist, labels)


def scalar_vec(field: Field, entries) -> tuple:
    return tuple(field.from_int(x) if isinstance(x, int) else x for x in entries)
