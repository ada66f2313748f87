"""Hom-associative algebras and their degree-one Hochschild invariants.

From an algebra A with product p and twist t, the degree-three Hochschild
boundary sends a (x) b (x) c to  ab (x) t(c) - t(a) (x) bc + ca (x) t(b).
The quotient of A (x) A by its image carries a Hom-Leibniz bracket
(commutator in each leg) and a map phi onto the commutator subspace [A, A];
the kernel of phi is the first Hochschild homology.  The Milnor-type
variant divides A (x) A by two further commutator-shaped families.  The
exact-sequence certificate ties all of these together through three tensor
products and a snake construction, with every joint checked by exact rank
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphaIdentityFails, InternalInconsistency, StructureError
from .actions import HomAction, MutualActions
from .algebras import (
    AlgebraHom,
    HomLeibnizAlgebra,
    IdealHandle,
    commutator,
    derived_subspace,
    subalgebra,
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
from .report import ExactnessReport, ValidationReport
from .tensorprod import build_tensor, factor_maps, induced_tensor_map


@dataclass(frozen=True)
class HomAssociativeAlgebra:
    field: Field
    dim: int
    p: tuple  # p[i][j] = coordinates of the product of basis vectors i, j
    twist: Matrix
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != self.dim:
            raise StructureError("label count does not match dimension")
        if len(self.p) != self.dim or any(len(row) != self.dim for row in self.p):
            raise StructureError("product table must be dim x dim")
        for row in self.p:
            for v in row:
                if len(v) != self.dim:
                    raise StructureError("product values must be coordinate vectors")
        if (self.twist.rows, self.twist.cols) != (self.dim, self.dim):
            raise StructureError("twist matrix must be dim x dim")

    @staticmethod
    def from_products(field: Field, dim: int, products: dict, twist=None, labels=None) -> "HomAssociativeAlgebra":
        table = [[vec_zero(field, dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), val in products.items():
            v = [field.zero()] * dim
            for k, coeff in val.items():
                v[k] = field.from_int(coeff) if isinstance(coeff, int) else coeff
            table[i][j] = tuple(v)
        tw = twist if twist is not None else Matrix.identity(field, dim)
        labels = tuple(labels) if labels else tuple(f"a{i + 1}" for i in range(dim))
        return HomAssociativeAlgebra(field, dim, tuple(tuple(r) for r in table), tw, labels)

    def unit(self, i) -> tuple:
        f = self.field
        return tuple(f.one() if k == i else f.zero() for k in range(self.dim))

    def product(self, x, y) -> tuple:
        f = self.field
        zero = f.zero()
        out = [zero] * self.dim
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            for j, yj in enumerate(y):
                if yj == zero:
                    continue
                c = f.mul(xi, yj)
                pij = self.p[i][j]
                for k in range(self.dim):
                    if pij[k] != zero:
                        out[k] = f.add(out[k], f.mul(c, pij[k]))
        return tuple(out)

    def commutator_vec(self, x, y) -> tuple:
        f = self.field
        return vec_sub(f, self.product(x, y), self.product(y, x))

    def apply_twist(self, x) -> tuple:
        return self.twist.apply(x)

    def is_commutative(self) -> bool:
        return all(self.p[i][j] == self.p[j][i]
                   for i in range(self.dim) for j in range(self.dim))

    def validate(self) -> ValidationReport:
        rep = ValidationReport(subject="hom-associative algebra")
        tw = [self.apply_twist(self.unit(i)) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                if self.apply_twist(self.p[i][j]) != self.product(tw[i], tw[j]):
                    rep.record("multiplicativity", (self.labels[i], self.labels[j]))
                for k in range(self.dim):
                    lhs = self.product(tw[i], self.p[j][k])
                    rhs = self.product(self.p[i][j], tw[k])
                    if lhs != rhs:
                        rep.record("hom-associativity",
                                   (self.labels[i], self.labels[j], self.labels[k]))
        rep.flags["commutative"] = self.is_commutative()
        return rep

    def require_valid(self) -> "HomAssociativeAlgebra":
        rep = self.validate()
        if not rep.valid:
            v = rep.violations[0]
            raise StructureError(f"invalid hom-associative algebra: {v.law} at {v.witness}")
        return self


def validate_homassoc(candidate: HomAssociativeAlgebra) -> ValidationReport:
    return candidate.validate()


def yau_twist_assoc(A: HomAssociativeAlgebra, endo: Matrix) -> HomAssociativeAlgebra:
    """Twist an associative algebra (identity twist) along an algebra
    endomorphism: the new product is endo applied to the old product."""
    if A.twist != Matrix.identity(A.field, A.dim):
        raise StructureError("twisting requires an associative algebra with identity twist")
    cols = [endo.col(j) for j in range(A.dim)]
    for i in range(A.dim):
        for j in range(A.dim):
            if endo.apply(A.p[i][j]) != A.product(cols[i], cols[j]):
                raise StructureError(f"map is not an algebra endomorphism at {(A.labels[i], A.labels[j])}")
    table = tuple(tuple(endo.apply(A.p[i][j]) for j in range(A.dim)) for i in range(A.dim))
    return HomAssociativeAlgebra(A.field, A.dim, table, endo, A.labels)


def to_leibniz(A: HomAssociativeAlgebra) -> HomLeibnizAlgebra:
    """The commutator algebra: bracket xy - yx with the same twist."""
    table = tuple(tuple(A.commutator_vec(A.unit(i), A.unit(j)) for j in range(A.dim))
                  for i in range(A.dim))
    return HomLeibnizAlgebra(A.field, A.dim, table, A.twist, A.labels)


def hochschild_boundary(A: HomAssociativeAlgebra) -> LinearMap:
    """The degree-three boundary A (x) A (x) A -> A (x) A, columns over basis
    triples in row-major order."""
    f = A.field
    n = A.dim

    def tens(u, v):
        out = [f.zero()] * (n * n)
        for i, ui in enumerate(u):
            if ui == f.zero():
                continue
            for j, vj in enumerate(v):
                if vj != f.zero():
                    out[i * n + j] = f.add(out[i * n + j], f.mul(ui, vj))
        return tuple(out)

    tw = [A.apply_twist(A.unit(i)) for i in range(n)]
    cols = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                v = tens(A.p[a][b], tw[c])
                v = vec_sub(f, v, tens(tw[a], A.p[b][c]))
                v = vec_add(f, v, tens(A.p[c][a], tw[b]))
                cols.append(v)
    return LinearMap.from_columns(f, n * n, cols)


@dataclass(frozen=True)
class HochschildModule:
    parent: HomAssociativeAlgebra
    commutator_algebra: HomLeibnizAlgebra   # A with the commutator bracket
    boundary: LinearMap                     # degree-three Hochschild boundary
    presentation: QuotientSpace             # A (x) A modulo the boundary image
    algebra: HomLeibnizAlgebra              # the quotient with its bracket and twist
    phi: LinearMap                          # quotient -> A, class of a (x) b to ab - ba
    commutator_space: Subspace              # [A, A] inside A

    @property
    def first_homology_dim(self) -> int:
        return self.algebra.dim - self.commutator_space.dim

    def first_homology(self) -> Subspace:
        return self.phi.kernel()


def hochschild_module(A: HomAssociativeAlgebra) -> HochschildModule:
    """The quotient of A (x) A by the boundary image, as a Hom-Leibniz algebra
    with the commutator-by-commutator bracket, plus the evaluation onto the
    commutator subspace.  Well-definedness of bracket, twist and evaluation
    on the quotient is certified."""
    f = A.field
    n = A.dim
    lb = to_leibniz(A)
    b3 = hochschild_boundary(A)
    pres = QuotientSpace(n * n, b3.image())

    def tens(u, v):
        out = [f.zero()] * (n * n)
        for i, ui in enumerate(u):
            if ui == f.zero():
                continue
            for j, vj in enumerate(v):
                if vj != f.zero():
                    out[i * n + j] = f.add(out[i * n + j], f.mul(ui, vj))
        return tuple(out)

    def fold_commutator(x):
        out = vec_zero(f, n)
        for i in range(n):
            for j in range(n):
                c = x[i * n + j]
                if c != f.zero():
                    out = vec_add(f, out, tuple(f.mul(c, w) for w in lb.c[i][j]))
        return out

    def amb_bracket(x, y):
        return tens(fold_commutator(x), fold_commutator(y))

    twist_cols = []
    for i in range(n):
        ti = A.apply_twist(A.unit(i))
        for j in range(n):
            twist_cols.append(tens(ti, A.apply_twist(A.unit(j))))
    twist_amb = LinearMap.from_columns(f, n * n, twist_cols)

    gens = [tuple(f.one() if g == h else f.zero() for h in range(n * n)) for g in range(n * n)]
    for r in pres.relations.basis.entries:
        if not pres.relations.contains(twist_amb.apply(r)):
            raise InternalInconsistency("twist does not preserve the boundary image")
        if not vec_is_zero(f, fold_commutator(r)):
            raise InternalInconsistency("evaluation does not kill the boundary image")
        for g in gens:
            if not pres.relations.contains(amb_bracket(r, g)) or \
               not pres.relations.contains(amb_bracket(g, r)):
                raise InternalInconsistency("bracket does not preserve the boundary image")

    reps = [pres.lift_unit(k) for k in range(pres.dim)]
    table = tuple(tuple(pres.project(amb_bracket(ra, rb)) for rb in reps) for ra in reps)
    twist = induced_map(twist_amb, pres, pres)
    labels = tuple(f"{A.labels[g // n]}#{A.labels[g % n]}" for g in pres.coset_basis)
    algebra = HomLeibnizAlgebra(f, pres.dim, table, twist.matrix, labels)
    valg = algebra.validate()
    if not valg.valid:
        raise InternalInconsistency("quotient bracket fails validation",
                                    witness=valg.violations[0].witness)
    phi = LinearMap.from_columns(f, n, [fold_commutator(r) for r in reps])
    comm_space = derived_subspace(lb)
    if phi.image() != comm_space:
        raise InternalInconsistency("evaluation image differs from the commutator subspace")
    return HochschildModule(A, lb, b3, pres, algebra, phi, comm_space)


def cyclic_identity_holds(h: HochschildModule) -> bool:
    """[a,b] (x) t(c) - t(a) (x) [b,c] + [c,a] (x) t(b) lies in the boundary
    image, for all basis triples."""
    A = h.parent
    f = A.field
    n = A.dim

    def tens(u, v):
        out = [f.zero()] * (n * n)
        for i, ui in enumerate(u):
            if ui == f.zero():
                continue
            for j, vj in enumerate(v):
                if vj != f.zero():
                    out[i * n + j] = f.add(out[i * n + j], f.mul(ui, vj))
        return tuple(out)

    lb = h.commutator_algebra
    tw = [A.apply_twist(A.unit(i)) for i in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                v = tens(lb.c[a][b], tw[c])
                v = vec_sub(f, v, tens(tw[a], lb.c[b][c]))
                v = vec_add(f, v, tens(lb.c[c][a], tw[b]))
                if not h.presentation.relations.contains(v):
                    return False
    return True


def boundary_ideal_agreement(A: HomAssociativeAlgebra) -> AlgebraHom:
    """The boundary quotient arises from the tensor square of the commutator
    algebra by dividing out the two-sided twist-stable ideal generated by
    the boundary-shaped elements  ab * t(c) - t(a) * bc + ca * t(b)
    instantiated through both generator blocks; this builds both sides and
    returns the verified isomorphism.

    The description holds on noncommutative instances.  A commutative
    algebra has an abelian commutator algebra with trivial adjoint actions,
    its tensor square splits into two unidentified copies, and the quotient
    stays strictly bigger than the boundary quotient; that mismatch raises
    here and is expected.
    """
    f = A.field
    n = A.dim
    lb = to_leibniz(A)
    h = hochschild_module(A)
    t = build_tensor(MutualActions.adjoint(lb))
    T = t.algebra

    # ideal generated by the boundary shapes inside the tensor square
    acc = RrefAccumulator(f, T.dim)
    queue = []

    def push(v):
        if acc.add(v):
            queue.append(v)

    tw = [A.apply_twist(A.unit(i)) for i in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                v = t.embed_mn(A.p[a][b], tw[c])
                v = vec_sub(f, v, t.embed_mn(tw[a], A.p[b][c]))
                v = vec_add(f, v, t.embed_mn(A.p[c][a], tw[b]))
                push(t.presentation.project(v))
                w = t.embed_nm(A.p[a][b], tw[c])
                w = vec_sub(f, w, t.embed_nm(tw[a], A.p[b][c]))
                w = vec_add(f, w, t.embed_nm(A.p[c][a], tw[b]))
                push(t.presentation.project(w))
    while queue:
        v = queue.pop()
        push(T.apply_twist(v))
        for j in range(T.dim):
            e = T.unit(j)
            push(T.bracket(v, e))
            push(T.bracket(e, v))
    ideal = Subspace(T.dim, acc.basis_matrix())

    from .algebras import quotient_algebra

    quot, proj = quotient_algebra(T, IdealHandle(T, ideal))
    if quot.dim != h.algebra.dim:
        raise InternalInconsistency(
            "tensor-square quotient has a different dimension than the boundary quotient")

    # generator comparison: both tensor blocks evaluate to plain tensor classes
    cols = []
    for i in range(n):
        for j in range(n):
            cols.append(h.presentation.project(_plain_tensor(f, n, i, j)))
    for j in range(n):
        for i in range(n):
            cols.append(h.presentation.project(_plain_tensor(f, n, j, i)))
    amb = LinearMap.from_columns(f, h.algebra.dim, cols)
    for r in t.presentation.relations.basis.entries:
        if not vec_is_zero(f, amb.apply(r)):
            raise InternalInconsistency("comparison does not kill the tensor relations")
    on_square = amb.compose(t.presentation.section_map())
    for v in ideal.basis.entries:
        if not vec_is_zero(f, on_square.apply(v)):
            raise InternalInconsistency("comparison does not kill the boundary ideal")
    sec = proj.map.section()
    iso = AlgebraHom(quot, h.algebra, on_square.compose(sec))
    rep = iso.validate()
    if not rep.valid:
        raise InternalInconsistency("comparison map is not a homomorphism",
                                    witness=rep.violations[0].witness)
    if not (iso.map.is_injective() and iso.map.is_surjective()):
        raise InternalInconsistency("comparison map is not bijective")
    return iso


def _plain_tensor(f, n, i, j):
    out = [f.zero()] * (n * n)
    out[i * n + j] = f.one()
    return tuple(out)


def alpha_identity_witness(A: HomAssociativeAlgebra):
    """None when commutators of A with the image of (twist - identity)
    vanish, else a witnessing pair of basis indices."""
    f = A.field
    shift = LinearMap(A.dim, A.dim, A.twist).sub(LinearMap.identity(f, A.dim))
    img = shift.image()
    for i in range(A.dim):
        ei = A.unit(i)
        for w in img.basis.entries:
            if not vec_is_zero(f, A.commutator_vec(ei, w)):
                return (A.labels[i], w)
    return None


def alpha_identity_holds(A: HomAssociativeAlgebra) -> bool:
    return alpha_identity_witness(A) is None


def milnor_relations(A: HomAssociativeAlgebra) -> Subspace:
    """Boundary image plus t(a) (x) [b,c] and [a,b] (x) t(c) over basis triples."""
    f = A.field
    n = A.dim
    lb = to_leibniz(A)
    b3 = hochschild_boundary(A)
    acc = RrefAccumulator(f, n * n)
    for v in b3.image().basis.entries:
        acc.add(v)

    def tens(u, v):
        out = [f.zero()] * (n * n)
        for i, ui in enumerate(u):
            if ui == f.zero():
                continue
            for j, vj in enumerate(v):
                if vj != f.zero():
                    out[i * n + j] = f.add(out[i * n + j], f.mul(ui, vj))
        return tuple(out)

    tw = [A.apply_twist(A.unit(i)) for i in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                acc.add(tens(tw[a], lb.c[b][c]))
                acc.add(tens(lb.c[a][b], tw[c]))
    return Subspace(n * n, acc.basis_matrix())


@dataclass(frozen=True)
class FirstHomologies:
    hh1_alpha_dim: int
    hh1_milnor_dim: int
    alpha_identity_holds: bool
    quotient_dim: int
    commutator_dim: int

    def to_dict(self) -> dict:
        return {
            "hh1_alpha_dim": self.hh1_alpha_dim,
            "hh1_milnor_dim": self.hh1_milnor_dim,
            "alpha_identity_holds": self.alpha_identity_holds,
            "commutator_quotient_dim": self.quotient_dim,
            "commutator_dim": self.commutator_dim,
        }


def first_homologies(A: HomAssociativeAlgebra) -> FirstHomologies:
    h = hochschild_module(A)
    milnor = A.dim * A.dim - milnor_relations(A).dim
    return FirstHomologies(
        hh1_alpha_dim=h.first_homology_dim,
        hh1_milnor_dim=milnor,
        alpha_identity_holds=alpha_identity_holds(A),
        quotient_dim=h.algebra.dim,
        commutator_dim=h.commutator_space.dim,
    )


def action_on_quotient(h: HochschildModule) -> HomAction:
    """The commutator algebra acting on the quotient algebra:
        a . (x # y) = [a,x] # t(y) - [a,y] # t(x)
        (x # y) . a = [x,a] # t(y) + t(x) # [y,a]
    certified to descend and to satisfy the action identities."""
    A = h.parent
    lb = h.commutator_algebra
    f = A.field
    n = A.dim
    pres = h.presentation

    def tens(u, v):
        out = [f.zero()] * (n * n)
        for i, ui in enumerate(u):
            if ui == f.zero():
                continue
            for j, vj in enumerate(v):
                if vj != f.zero():
                    out[i * n + j] = f.add(out[i * n + j], f.mul(ui, vj))
        return tuple(out)

    tw = [A.apply_twist(A.unit(i)) for i in range(n)]
    left_cols = {}
    right_cols = {}
    for a in range(n):
        for x in range(n):
            for y in range(n):
                g = x * n + y
                v = vec_sub(f, tens(lb.c[a][x], tw[y]), tens(lb.c[a][y], tw[x]))
                left_cols[(a, g)] = v
                w = vec_add(f, tens(lb.c[x][a], tw[y]), tens(tw[x], lb.c[y][a]))
                right_cols[(g, a)] = w

    for r in pres.relations.basis.entries:
        for a in range(n):
            for cols, key in ((left_cols, lambda g: (a, g)), (right_cols, lambda g: (g, a))):
                acc = vec_zero(f, n * n)
                for g in range(n * n):
                    if r[g] != f.zero():
                        acc = vec_add(f, acc, tuple(f.mul(r[g], t) for t in cols[key(g)]))
                if not pres.relations.contains(acc):
                    raise InternalInconsistency("action does not descend to the quotient")

    left = tuple(
        tuple(_combine(f, pres, left_cols, a, k, True) for k in range(h.algebra.dim))
        for a in range(n))
    right = tuple(
        tuple(_combine(f, pres, right_cols, a, k, False) for a in range(n))
        for k in range(h.algebra.dim))
    action = HomAction(lb, h.algebra, left, right)
    rep = action.validate()
    if not rep.valid:
        v = rep.violations[0]
        raise InternalInconsistency(f"quotient action identity {v.law}) fails at {v.witness}")
    return action


def _combine(f, pres, cols, a, k, left_side):
    rep_vec = pres.lift_unit(k)
    acc = None
    for g in range(len(rep_vec)):
        if rep_vec[g] != f.zero():
            key = (a, g) if left_side else (g, a)
            term = tuple(f.mul(rep_vec[g], t) for t in cols[key])
            acc = term if acc is None else vec_add(f, acc, term)
    out = acc if acc is not None else vec_zero(f, pres.ambient_dim)
    return pres.project(out)


def action_of_quotient(h: HochschildModule) -> HomAction:
    """The quotient algebra acting on the commutator algebra through the
    evaluation: (x # y) . a = [[x,y], a] and a . (x # y) = [a, [x,y]]."""
    lb = h.commutator_algebra
    f = lb.field
    left = tuple(
        tuple(lb.bracket(h.phi.column(k), lb.unit(j)) for j in range(lb.dim))
        for k in range(h.algebra.dim))
    right = tuple(
        tuple(lb.bracket(lb.unit(j), h.phi.column(k)) for k in range(h.algebra.dim))
        for j in range(lb.dim))
    return HomAction(h.algebra, lb, left, right)


def quotient_mutual_actions(h: HochschildModule) -> MutualActions:
    """Mutual actions of the commutator algebra and the quotient algebra;
    compatibility needs the twist-identity condition on commutators."""
    A = h.parent
    wit = alpha_identity_witness(A)
    if wit is not None:
        raise AlphaIdentityFails(
            f"commutator of {wit[0]} with a twist-shift value is nonzero", witness=wit)
    return MutualActions(action_on_quotient(h), action_of_quotient(h))


def sequence_check(A: HomAssociativeAlgebra) -> ExactnessReport:
    """Five-joint exactness certificate for the degree-one Hochschild
    comparison sequence

        A*H -> Ker(A*Q -> Q) -> Ker(A*C -> C) -> H -> Milnor -> C/[A,C] -> 0

    where Q is the boundary quotient algebra, H the kernel of its evaluation
    (the first Hochschild homology, an abelian algebra), C the commutator
    subalgebra, and Milnor the Milnor-type quotient.  Requires the
    twist-identity condition; certifies the two cokernel identifications and
    every joint by exact ranks.
    """
    A.require_valid()
    f = A.field
    n = A.dim
    wit = alpha_identity_witness(A)
    if wit is not None:
        raise AlphaIdentityFails(
            f"commutator of {wit[0]} with a twist-shift value is nonzero", witness=wit)
    rep = ExactnessReport(subject="hochschild comparison sequence")
    h = hochschild_module(A)
    lb = h.commutator_algebra
    rep.dims["quotient algebra"] = h.algebra.dim
    rep.dims["commutator subspace"] = h.commutator_space.dim
    rep.dims["first homology"] = h.first_homology_dim

    ma_q = quotient_mutual_actions(h)
    rep.check("mutual actions compatible", ma_q.is_compatible())
    t_aq = build_tensor(ma_q)
    rep.dims["tensor with quotient"] = t_aq.algebra.dim

    # commutator subalgebra with its bracket actions
    C_sub, incl_c = subalgebra(lb, h.commutator_space, "c")
    from .actions import bracket_action

    id_lb = AlgebraHom(lb, lb, LinearMap.identity(f, lb.dim))
    mn_c = bracket_action(lb, (lb, id_lb), (C_sub, incl_c))
    nm_c = bracket_action(lb, (C_sub, incl_c), (lb, id_lb))
    ma_c = MutualActions(mn_c, nm_c)
    t_ac = build_tensor(ma_c)
    rep.dims["tensor with commutator"] = t_ac.algebra.dim

    # first homology as an abelian algebra with restricted twist, trivial actions
    H_space = h.first_homology()
    hdim = H_space.dim
    h_twist_cols = []
    for v in H_space.basis.entries:
        w = h.algebra.apply_twist(v)
        if not H_space.contains(w):
            raise InternalInconsistency("twist does not preserve the first homology")
        h_twist_cols.append(_coords_in(f, H_space, w))
    H_alg = HomLeibnizAlgebra(
        f, hdim,
        tuple(tuple(vec_zero(f, hdim) for _ in range(hdim)) for _ in range(hdim)),
        LinearMap.from_columns(f, hdim, h_twist_cols).matrix if hdim else Matrix(f, 0, 0, ()),
        tuple(f"z{i + 1}" for i in range(hdim)))
    ma_h = MutualActions.trivial(lb, H_alg)
    t_ah = build_tensor(ma_h)
    rep.dims["tensor with first homology"] = t_ah.algebra.dim

    # row maps: include the homology, then evaluate through phi
    incl_h = AlgebraHom(H_alg, h.algebra,
                        LinearMap.from_columns(f, h.algebra.dim, list(H_space.basis.entries)))
    rep.check("homology includes as a homomorphism", incl_h.is_homomorphism())
    phi_hom = AlgebraHom(h.algebra, C_sub, _into_sub(f, incl_c, h.phi))
    rep.check("evaluation is a homomorphism onto the commutator subalgebra",
              phi_hom.is_homomorphism())
    id_a = AlgebraHom(lb, lb, LinearMap.identity(f, lb.dim))
    big_f = induced_tensor_map(id_a, incl_h, t_ah, t_aq)
    big_g = induced_tensor_map(id_a, phi_hom, t_aq, t_ac)
    rep.check("tensored evaluation surjective", big_g.map.is_surjective())
    rep.check("tensor row exact in the middle", big_f.map.image() == big_g.map.kernel())

    # columns: evaluation of each tensor product onto its second factor
    _, col_q = factor_maps(t_aq)
    _, col_c = factor_maps(t_ac)
    _, col_h = factor_maps(t_ah)
    rep.check("column over the homology tensor vanishes", col_h.map.is_zero())
    rep.check("column vanishes on the included homology tensor",
              col_q.map.compose(big_f.map).is_zero())

    # cokernel identifications
    im_col_q_ambient = Subspace.span(
        f, n * n,
        [_lift_through(h, t_aq.eval_n.column(g)) for g in range(t_aq.ambient_dim)])
    milnor = milnor_relations(A)
    extra = im_col_q_ambient.add(h.presentation.relations)
    rep.check("middle cokernel matches the Milnor-type homology", extra == milnor)
    im_col_c = Subspace.span(
        f, C_sub.dim, [col_c.map.column(j) for j in range(t_ac.algebra.dim)])
    two_sided = commutator(IdealHandle(lb, h.commutator_space),
                           IdealHandle(lb, Subspace.full(f, lb.dim)))
    two_sided_in_c = Subspace.span(
        f, C_sub.dim, [_coords_via(incl_c, v) for v in two_sided.basis.entries])
    rep.check("right cokernel matches the commutator quotient", im_col_c == two_sided_in_c)
    coker_c = QuotientSpace(C_sub.dim, im_col_c)
    rep.dims["commutator modulo inner"] = coker_c.dim

    # snake joints
    k_q = col_q.map.kernel()
    k_c = col_c.map.kernel()
    rep.dims["kernel over quotient tensor"] = k_q.dim
    rep.dims["kernel over commutator tensor"] = k_c.dim

    # joint 1: image of the homology tensor inside the quotient-tensor kernel
    im_f_cols = [big_f.map.column(j) for j in range(t_ah.algebra.dim)]
    rep.check("homology tensor lands in the kernel", all(k_q.contains(c) for c in im_f_cols))
    im_f = Subspace.span(f, t_aq.algebra.dim, im_f_cols)
    rep.check("exact at the quotient-tensor kernel",
              im_f == k_q.intersect(big_g.map.kernel()))

    # joint 2: image of the kernel over the quotient tensor in the next kernel
    im_k_cols = [big_g.map.apply(v) for v in k_q.basis.entries]
    rep.check("kernels map onward", all(k_c.contains(c) for c in im_k_cols))

    # connecting map into the homology
    delta_cols = []
    ok_lift = True
    for v in k_c.basis.entries:
        x = big_g.map.preimage(v)
        if x is None:
            ok_lift = False
            break
        w = col_q.map.apply(x)
        if not H_space.contains(w):
            ok_lift = False
            break
        delta_cols.append(_coords_in(f, H_space, w))
    rep.check("connecting lifts exist", ok_lift)
    if not ok_lift:
        return rep
    delta = LinearMap.from_columns(f, hdim, delta_cols)
    im_k = Subspace.span(f, t_ac.algebra.dim, im_k_cols)
    ker_delta = _expand_kernel(f, delta, k_c, t_ac.algebra.dim)
    rep.check("exact at the commutator-tensor kernel", im_k == ker_delta)

    # map from the homology into the Milnor quotient
    milnor_q = QuotientSpace(n * n, milnor)
    to_milnor_cols = [milnor_q.project(_lift_through(h, v)) for v in H_space.basis.entries]
    to_milnor = LinearMap.from_columns(f, milnor_q.dim, to_milnor_cols)
    im_delta = delta.image()
    ker_to_milnor = to_milnor.kernel()
    rep.check("exact at the first homology", im_delta == ker_to_milnor)

    # map from the Milnor quotient onto the commutator cokernel; the Milnor
    # relations must evaluate into the inner commutators for it to descend
    rep.check("commutator map descends to the Milnor quotient",
              all(im_col_c.contains(_fold_into_c(h, incl_c, r))
                  for r in milnor.basis.entries))
    to_coker_cols = []
    for k in range(milnor_q.dim):
        amb = milnor_q.lift_unit(k)
        val = _fold_into_c(h, incl_c, amb)
        to_coker_cols.append(coker_c.project(val))
    to_coker = LinearMap.from_columns(f, coker_c.dim, to_coker_cols)
    # exactness at the Milnor term
    im_to_m = to_milnor.image()
    ker_to_c = to_coker.kernel()
    rep.check("exact at the Milnor-type homology", im_to_m == ker_to_c)
    rep.check("onto the commutator cokernel", to_coker.rank() == coker_c.dim)
    return rep


def _coords_in(f, space: Subspace, v) -> tuple:
    out = [f.zero()] * space.dim
    w = list(v)
    for idx, (row, p) in enumerate(zip(space.basis.entries, space.pivots())):
        c = w[p]
        if c != f.zero():
            out[idx] = c
            for jj in range(space.ambient_dim):
                if row[jj] != f.zero():
                    w[jj] = f.sub(w[jj], f.mul(c, row[jj]))
    if not vec_is_zero(f, tuple(w)):
        raise InternalInconsistency("vector does not lie in the expected subspace")
    return tuple(out)


def _into_sub(f, incl: AlgebraHom, phi: LinearMap) -> LinearMap:
    cols = []
    for j in range(phi.domain_dim):
        v = phi.column(j)
        q = incl.map.preimage(v)
        if q is None or incl.map.apply(q) != tuple(v):
            raise InternalInconsistency("evaluation leaves the commutator subalgebra")
        cols.append(q)
    return LinearMap.from_columns(f, incl.source.dim, cols)


def _coords_via(incl: AlgebraHom, v) -> tuple:
    q = incl.map.preimage(v)
    if q is None or incl.map.apply(q) != tuple(v):
        raise InternalInconsistency("vector does not lie in the subalgebra")
    return q


def _lift_through(h: HochschildModule, q_coords) -> tuple:
    return h.presentation.lift(q_coords)


def _fold_into_c(h: HochschildModule, incl_c: AlgebraHom, amb) -> tuple:
    """Evaluate an ambient tensor vector through the commutator and read the
    result in commutator-subalgebra coordinates."""
    A = h.parent
    f = A.field
    n = A.dim
    out = vec_zero(f, n)
    for i in range(n):
        for j in range(n):
            c = amb[i * n + j]
            if c != f.zero():
                out = vec_add(f, out, tuple(f.mul(c, w) for w in h.commutator_algebra.c[i][j]))
    return _coords_via(incl_c, out)


def _expand_kernel(f, mapping: LinearMap, basis_space: Subspace, ambient: int) -> Subspace:
    vecs = []
    for w in mapping.kernel().basis.entries:
        vec = vec_zero(f, ambient)
        for coeff, bas in zip(w, basis_space.basis.entries):
            if coeff != f.zero():
                vec = vec_add(f, vec, tuple(f.mul(coeff, b) for b in bas))
        vecs.append(vec)
    return Subspace.span(f, ambient, vecs)
