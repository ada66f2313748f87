"""Homology of a Hom-Leibniz algebra with coefficients in a co-representation.

The degree-n chain space is M tensored with n copies of L, basis ordered
row-major over (m, x_1, ..., x_n).  The boundary has three summand
families: the head right-action term, the alternating left-action terms
with sign (-1)^i, and the bracket-insertion terms with sign (-1)^(j+1)
and the twisted coefficient in front.  The squared boundary vanishing is
checked in tests, never assumed: it would fail loudly under any
sign-convention misreading.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .errors import StructureError
from .algebras import HomLeibnizAlgebra
from .linalg import LinearMap, Matrix, RrefAccumulator, Subspace, vec_is_zero, vec_zero
from .report import ValidationReport


@dataclass(frozen=True)
class CoRepresentation:
    """Coefficients for homology: a space with a twist and two operations of
    the algebra on it satisfying the five co-representation identities."""

    algebra: HomLeibnizAlgebra
    space_dim: int
    twist: Matrix
    left: tuple   # left[x][m] in coefficient coordinates
    right: tuple  # right[m][x] in coefficient coordinates

    def __post_init__(self):
        dl, dm = self.algebra.dim, self.space_dim
        if (self.twist.rows, self.twist.cols) != (dm, dm):
            raise StructureError("coefficient twist must be square of the space dimension")
        if len(self.left) != dl or any(len(r) != dm for r in self.left):
            raise StructureError("left operation tensor must be algebra x space")
        if len(self.right) != dm or any(len(r) != dl for r in self.right):
            raise StructureError("right operation tensor must be space x algebra")
        for grid in (self.left, self.right):
            for row in grid:
                for v in row:
                    if len(v) != dm:
                        raise StructureError("operation values must be coefficient vectors")

    @property
    def field(self):
        return self.algebra.field

    def act_left(self, x, m) -> tuple:
        f = self.field
        zero = f.zero()
        out = [zero] * self.space_dim
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            for j, mj in enumerate(m):
                if mj == zero:
                    continue
                c = f.mul(xi, mj)
                val = self.left[i][j]
                for k in range(self.space_dim):
                    if val[k] != zero:
                        out[k] = f.add(out[k], f.mul(c, val[k]))
        return tuple(out)

    def act_right(self, m, x) -> tuple:
        f = self.field
        zero = f.zero()
        out = [zero] * self.space_dim
        for j, mj in enumerate(m):
            if mj == zero:
                continue
            for i, xi in enumerate(x):
                if xi == zero:
                    continue
                c = f.mul(mj, xi)
                val = self.right[j][i]
                for k in range(self.space_dim):
                    if val[k] != zero:
                        out[k] = f.add(out[k], f.mul(c, val[k]))
        return tuple(out)

    def apply_twist(self, m) -> tuple:
        return self.twist.apply(m)

    def validate(self) -> ValidationReport:
        L = self.algebra
        f = self.field
        rep = ValidationReport(subject="hom-co-representation",
                               axiom_status={k: True for k in "abcde"})
        tl = [L.apply_twist(L.unit(i)) for i in range(L.dim)]
        tm = [self.apply_twist(_unit(f, self.space_dim, i)) for i in range(self.space_dim)]
        lbl, lbm = L.labels, tuple(f"m{i+1}" for i in range(self.space_dim))
        for x in range(L.dim):
            for m in range(self.space_dim):
                # d) t_M(x.m) = t(x).t_M(m)
                if self.apply_twist(self.left[x][m]) != self.act_left(tl[x], tm[m]):
                    rep.record("d", (lbl[x], lbm[m]))
                # e) t_M(m.x) = t_M(m).t(x)
                if self.apply_twist(self.right[m][x]) != self.act_right(tm[m], tl[x]):
                    rep.record("e", (lbm[m], lbl[x]))
                for y in range(L.dim):
                    bxy = L.c[x][y]
                    # a) [x,y].t_M(m) = t(x).(y.m) - t(y).(x.m)
                    lhs = self.act_left(bxy, tm[m])
                    rhs = _sub(f, self.act_left(tl[x], self.left[y][m]),
                               self.act_left(tl[y], self.left[x][m]))
                    if lhs != rhs:
                        rep.record("a", (lbl[x], lbl[y], lbm[m]))
                    # b) t_M(m).[x,y] = (y.m).t(x) - t(y).(m.x)
                    lhs = self.act_right(tm[m], bxy)
                    rhs = _sub(f, self.act_right(self.left[y][m], tl[x]),
                               self.act_left(tl[y], self.right[m][x]))
                    if lhs != rhs:
                        rep.record("b", (lbm[m], lbl[x], lbl[y]))
                    # c) (m.x).t(y) = - t(y).(m.x)
                    lhs = self.act_right(self.right[m][x], tl[y])
                    rhs = tuple(f.neg(v) for v in self.act_left(tl[y], self.right[m][x]))
                    if lhs != rhs:
                        rep.record("c", (lbm[m], lbl[x], lbl[y]))
        return rep


def _unit(field, n, i):
    return tuple(field.one() if k == i else field.zero() for k in range(n))


def _sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def validate_corep(c: CoRepresentation) -> ValidationReport:
    return c.validate()


def trivial_corep(L: HomLeibnizAlgebra, space_dim: int = 1, twist: Matrix | None = None) -> CoRepresentation:
    """Zero operations; the default twist is the identity (scalar coefficients)."""
    f = L.field
    z = vec_zero(f, space_dim)
    tw = twist if twist is not None else Matrix.identity(f, space_dim)
    return CoRepresentation(
        L, space_dim, tw,
        tuple(tuple(z for _ in range(space_dim)) for _ in range(L.dim)),
        tuple(tuple(z for _ in range(L.dim)) for _ in range(space_dim)))


def adjoint_corep(L: HomLeibnizAlgebra) -> CoRepresentation:
    """The algebra on itself: x.m = -[m, x] from the left, m.x = [m, x]."""
    f = L.field
    left = tuple(tuple(tuple(f.neg(v) for v in L.c[m][x]) for m in range(L.dim))
                 for x in range(L.dim))
    right = tuple(tuple(L.c[m][x] for x in range(L.dim)) for m in range(L.dim))
    return CoRepresentation(L, L.dim, L.twist, left, right)


def chain_dim(L: HomLeibnizAlgebra, M: CoRepresentation, n: int) -> int:
    return M.space_dim * L.dim ** n


def _index(L_dim: int, m_idx: int, xs: tuple) -> int:
    out = m_idx
    for x in xs:
        out = out * L_dim + x
    return out


def boundary_column(L: HomLeibnizAlgebra, M: CoRepresentation, n: int,
                    m_idx: int, xs: tuple) -> dict:
    """Sparse image of the basis chain m (x) x_1 (x) ... (x) x_n under the
    degree-n boundary, as {row index: coefficient}."""
    f = L.field
    zero = f.zero()
    dl = L.dim
    tw = [L.apply_twist(L.unit(i)) for i in range(dl)]
    out: dict[int, object] = {}

    def scatter(sign_positive: bool, head, slots):
        # head is a coefficient vector, slots are algebra coordinate vectors
        for combo in iter_product(*[range(dl)] * len(slots)):
            coeff = None
            ok = True
            for v, idx in zip(slots, combo):
                if v[idx] == zero:
                    ok = False
                    break
                coeff = v[idx] if coeff is None else f.mul(coeff, v[idx])
            if not ok:
                continue
            for hm, hv in enumerate(head):
                if hv == zero:
                    continue
                total = hv if coeff is None else f.mul(hv, coeff)
                if not sign_positive:
                    total = f.neg(total)
                key = _index(dl, hm, combo)
                cur = f.add(out.get(key, zero), total)
                if cur == zero:
                    out.pop(key, None)
                else:
                    out[key] = cur

    m_vec = _unit(f, M.space_dim, m_idx)
    # head family: m acted by x_1 on the right, the rest twisted
    scatter(True, M.right[m_idx][xs[0]], [tw[x] for x in xs[1:]])
    # left-action family, i = 2..n with sign (-1)^i
    for i in range(2, n + 1):
        head = M.left[xs[i - 1]][m_idx]
        slots = [tw[x] for k, x in enumerate(xs) if k != i - 1]
        scatter(i % 2 == 0, head, slots)
    # bracket insertion family over pairs i < j, sign (-1)^(j+1)
    tm = M.apply_twist(m_vec)
    for j in range(2, n + 1):
        for i in range(1, j):
            slots = []
            for k, x in enumerate(xs, start=1):
                if k == j:
                    continue
                slots.append(L.c[xs[i - 1]][xs[j - 1]] if k == i else tw[x])
            scatter((j + 1) % 2 == 0, tm, slots)
    return out


def boundary_matrix(L: HomLeibnizAlgebra, M: CoRepresentation, n: int) -> LinearMap:
    """The exact degree-n boundary as a dense linear map."""
    if n < 1:
        raise ValueError("the boundary is defined for degree at least 1")
    f = L.field
    rows_dim = chain_dim(L, M, n - 1)
    cols = []
    for m_idx in range(M.space_dim):
        for xs in iter_product(*[range(L.dim)] * n):
            col = [f.zero()] * rows_dim
            for k, v in boundary_column(L, M, n, m_idx, xs).items():
                col[k] = v
            cols.append(tuple(col))
    return LinearMap.from_columns(f, rows_dim, cols)


def squared_boundary_is_zero(L: HomLeibnizAlgebra, M: CoRepresentation, n: int) -> bool:
    """Sparse check that the degree-n boundary followed by degree n-1 vanishes."""
    f = L.field
    zero = f.zero()
    lower: dict[int, dict] = {}
    dl = L.dim

    def lower_col(idx):
        if idx not in lower:
            m_idx, rest = divmod(idx, dl ** (n - 1))
            xs = []
            for k in range(n - 1):
                q, rest = divmod(rest, dl ** (n - 2 - k))
                xs.append(q)
            lower[idx] = boundary_column(L, M, n - 1, m_idx, tuple(xs))
        return lower[idx]

    for m_idx in range(M.space_dim):
        for xs in iter_product(*[range(dl)] * n):
            image = boundary_column(L, M, n, m_idx, xs)
            acc: dict[int, object] = {}
            for idx, coeff in image.items():
                for k, v in lower_col(idx).items():
                    cur = f.add(acc.get(k, zero), f.mul(coeff, v))
                    if cur == zero:
                        acc.pop(k, None)
                    else:
                        acc[k] = cur
            if acc:
                return False
    return True


@dataclass(frozen=True)
class HomologyResult:
    degree: int
    dim: int
    representatives: tuple  # chain-space coordinate vectors spanning a complement


def homology(L: HomLeibnizAlgebra, M: CoRepresentation, n: int) -> HomologyResult:
    """Dimension of cycles modulo boundaries in degree n, with canonical
    representatives (degree 0 is the cokernel of the first boundary)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    f = L.field
    if n == 0:
        cycles = Subspace.full(f, M.space_dim)
    else:
        cycles = boundary_matrix(L, M, n).kernel()
    img = boundary_matrix(L, M, n + 1).image()
    acc = RrefAccumulator(f, chain_dim(L, M, n))
    for v in img.basis.entries:
        acc.add(v)
    reps = []
    for v in cycles.basis.entries:
        if acc.add(v):
            reps.append(v)
    return HomologyResult(n, cycles.dim - img.dim, tuple(reps))


def homology_dim(L: HomLeibnizAlgebra, M: CoRepresentation, n: int) -> int:
    return homology(L, M, n).dim


def coinvariants_dim(M: CoRepresentation) -> int:
    """Closed form in degree zero: the space modulo all right-action values."""
    span = Subspace.span(M.field, M.space_dim,
                         [M.right[m][x] for m in range(M.space_dim) for x in range(M.algebra.dim)])
    return M.space_dim - span.dim


def degree_one_trivial_closed_form(L: HomLeibnizAlgebra, M: CoRepresentation) -> int:
    """Closed form in degree one for trivial operations: the chain space
    modulo (twisted coefficients) tensor (brackets)."""
    from .algebras import derived_subspace

    f = L.field
    if any(not vec_is_zero(f, v) for grid in (M.left, M.right) for row in grid for v in row):
        raise StructureError("closed form requires trivial operations")
    der = derived_subspace(L)
    tm_image = LinearMap(M.space_dim, M.space_dim, M.twist).image()
    vecs = []
    for u in tm_image.basis.entries:
        for b in der.basis.entries:
            vec = [f.zero()] * (M.space_dim * L.dim)
            for i, ui in enumerate(u):
                if ui == f.zero():
                    continue
                for j, bj in enumerate(b):
                    if bj != f.zero():
                        vec[i * L.dim + j] = f.mul(ui, bj)
            vecs.append(tuple(vec))
    rel = Subspace.span(f, M.space_dim * L.dim, vecs)
    return M.space_dim * L.dim - rel.dim
