"""Central and twist-central extensions, their classification, and the
universal constructions built from tensor squares.

An extension is a surjective homomorphism onto the base together with its
kernel.  It is central when the kernel brackets to zero with the whole
total algebra on both sides, and twist-central when the twist image of the
kernel does.  The universal central extension of a perfect algebra is its
tensor square under adjoint actions, mapping a generator x*y to [x, y];
the kernel dimension doubles as the second homology, which is certified
against the chain-complex computation in the test suite rather than taken
on faith.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    BaseMismatch,
    InternalInconsistency,
    KernelMismatch,
    NotAlphaPerfect,
    NotCentral,
    NotPerfect,
    NotSurjective,
)
from .algebras import (
    AlgebraHom,
    HomLeibnizAlgebra,
    IdealHandle,
    commutator,
    predicates,
    subalgebra,
    twist_image_bracket_span,
)
from .actions import MutualActions
from .linalg import (
    LinearMap,
    QuotientSpace,
    RrefAccumulator,
    Subspace,
    induced_map,
    vec_add,
    vec_is_zero,
    vec_zero,
)
from .report import ExactnessReport
from .tensorprod import (
    TensorProduct,
    build_tensor,
    commutator_map,
    ideal_sequence_certificate,
)


class ExtensionKind(Enum):
    CENTRAL = "central"
    ALPHA_CENTRAL_ONLY = "alpha-central-only"
    NEITHER = "neither"


@dataclass(frozen=True)
class Extension:
    total: HomLeibnizAlgebra
    base: HomLeibnizAlgebra
    proj: AlgebraHom
    kernel: Subspace

    @staticmethod
    def from_projection(proj: AlgebraHom, kernel: Subspace | None = None) -> "Extension":
        if not proj.map.is_surjective():
            raise NotSurjective("projection is not onto the base")
        rep = proj.validate()
        if not rep.valid:
            v = rep.violations[0]
            raise InternalInconsistency(f"projection fails {v.law} at {v.witness}")
        ker = proj.map.kernel()
        if kernel is not None and kernel != ker:
            raise KernelMismatch("declared kernel differs from the kernel of the projection")
        IdealHandle(proj.source, ker).require_ideal()
        return Extension(proj.source, proj.target, proj, ker)


def classify_extension(e: Extension) -> ExtensionKind:
    """Central when the kernel is bracket-inert in the total algebra on both
    sides; twist-central-only when only its twist image is."""
    K = e.total
    full = IdealHandle(K, Subspace.full(K.field, K.dim))
    ker_handle = IdealHandle(K, e.kernel)
    if commutator(ker_handle, full).dim == 0:
        return ExtensionKind.CENTRAL
    twisted = Subspace.span(K.field, K.dim,
                            [K.apply_twist(v) for v in e.kernel.basis.entries])
    if commutator(IdealHandle(K, twisted), full).dim == 0:
        return ExtensionKind.ALPHA_CENTRAL_ONLY
    return ExtensionKind.NEITHER


@dataclass(frozen=True)
class UniversalCentralExtension:
    tensor: TensorProduct
    extension: Extension
    kernel_dim: int


def universal_central_extension(L: HomLeibnizAlgebra) -> UniversalCentralExtension:
    """The tensor square of a perfect algebra over itself, with x*y -> [x, y]."""
    if not predicates(L).perfect:
        raise NotPerfect("the algebra does not equal its own bracket span")
    t = build_tensor(MutualActions.adjoint(L))
    psi = commutator_map(t)
    ext = Extension.from_projection(psi)
    if classify_extension(ext) is not ExtensionKind.CENTRAL:
        raise InternalInconsistency("tensor square projection is not central")
    return UniversalCentralExtension(t, ext, ext.kernel.dim)


def lift_against(uce: UniversalCentralExtension, other: Extension,
                 perturbation: LinearMap | None = None) -> AlgebraHom:
    """The unique lift of the universal extension through another central
    extension of the same base.

    Preimages of base elements are chosen through a deterministic section;
    ``perturbation`` adds a kernel-valued linear shift to that section, which
    must not change the result (uniqueness on perfect totals).
    """
    if other.base != uce.extension.base:
        raise BaseMismatch("extensions do not share a base")
    if classify_extension(other) is not ExtensionKind.CENTRAL:
        raise NotCentral("lifting target is not a central extension")
    L = uce.extension.base
    Kp = other.total
    f = L.field
    section = other.proj.map.section()
    if perturbation is not None:
        for j in range(perturbation.domain_dim):
            if not other.kernel.contains(perturbation.column(j)):
                raise KernelMismatch("perturbation must take values in the kernel")
        section = section.add(perturbation)
    t = uce.tensor
    dm, dn = t.m_side.dim, t.n_side.dim
    cols = []
    for i in range(dm):
        si = section.column(i)
        for j in range(dn):
            cols.append(Kp.bracket(si, section.column(j)))
    for j in range(dn):
        sj = section.column(j)
        for i in range(dm):
            cols.append(Kp.bracket(sj, section.column(i)))
    amb = LinearMap.from_columns(f, Kp.dim, cols)
    for r in t.presentation.relations.basis.entries:
        if not vec_is_zero(f, amb.apply(r)):
            raise InternalInconsistency("lift does not kill the tensor relations", witness=(r,))
    lift = AlgebraHom(t.algebra, Kp, amb.compose(t.presentation.section_map()))
    rep = lift.validate()
    if not rep.valid:
        raise InternalInconsistency("lift is not a homomorphism", witness=rep.violations[0].witness)
    if other.proj.map.compose(lift.map).matrix != uce.extension.proj.map.matrix:
        raise InternalInconsistency("lift does not commute over the base")
    return lift


@dataclass(frozen=True)
class AlphaUniversalCentralExtension:
    tensor: TensorProduct          # tensor square of the twist image subalgebra
    extension: Extension           # onto the original algebra
    presented: HomLeibnizAlgebra   # quotient presentation on the plain tensor space
    iso: AlgebraHom                # tensor square -> presentation, verified bijective


def universal_alpha_central_extension(L: HomLeibnizAlgebra) -> AlphaUniversalCentralExtension:
    """Universal twist-central extension of a twist-perfect algebra.

    Built as the tensor square of the twist image subalgebra; compared
    against the quotient presentation of the plain tensor space by the
    homology-style relation family, with the comparison map certified to be
    a bijective homomorphism.
    """
    if twist_image_bracket_span(L).dim != L.dim:
        raise NotAlphaPerfect("the twist image does not bracket onto the whole algebra")
    f = L.field
    A, incl = subalgebra(L, L.twist_map().image(), "a")
    t = build_tensor(MutualActions.adjoint(A))
    psi_a = commutator_map(t)
    proj = AlgebraHom(t.algebra, L, incl.map.compose(psi_a.map))
    ext = Extension.from_projection(proj)
    if classify_extension(ext) is not ExtensionKind.CENTRAL:
        raise InternalInconsistency("twist tensor square projection is not central")

    presented, iso = _presented_alpha_uce(L, A, incl, t)
    return AlphaUniversalCentralExtension(t, ext, presented, iso)


def _presented_alpha_uce(L, A, incl, t):
    """Quotient of the plain tensor space of the twist image by the span of
        -[x1,x2] (x) t(x3) + [x1,x3] (x) t(x2) + t(x1) (x) [x2,x3]
    over basis triples, with bracket u (x) v, u' (x) v' -> [u,v] (x) [u',v']."""
    f = L.field

    def a_coords(v):
        q = incl.map.preimage(v)
        if q is None or incl.map.apply(q) != tuple(v):
            raise InternalInconsistency("value escapes the twist image subalgebra")
        return q

    k = A.dim
    ambient = k * k

    def tens(u, v):
        out = [f.zero()] * ambient
        for i, ui in enumerate(u):
            if ui == f.zero():
                continue
            for j, vj in enumerate(v):
                if vj != f.zero():
                    out[i * k + j] = f.add(out[i * k + j], f.mul(ui, vj))
        return tuple(out)

    acc = RrefAccumulator(f, ambient)
    for i in range(L.dim):
        e1 = L.unit(i)
        for j in range(L.dim):
            for l in range(L.dim):
                b12 = a_coords(L.c[i][j])
                b13 = a_coords(L.c[i][l])
                b23 = a_coords(L.c[j][l])
                t1 = a_coords(L.apply_twist(e1))
                t2 = a_coords(L.apply_twist(L.unit(j)))
                t3 = a_coords(L.apply_twist(L.unit(l)))
                v = tuple(f.neg(x) for x in tens(b12, t3))
                v = vec_add(f, v, tens(b13, t2))
                v = vec_add(f, v, tens(t1, b23))
                if not vec_is_zero(f, v):
                    acc.add(v)
    pres = QuotientSpace(ambient, Subspace(ambient, acc.basis_matrix()))

    def amb_bracket(x, y):
        # factors through bracketing the two tensor legs
        bx = _fold_bracket(A, x, k)
        by = _fold_bracket(A, y, k)
        return tens(bx, by)

    twist_cols = []
    for i in range(k):
        ta = A.apply_twist(A.unit(i))
        for j in range(k):
            twist_cols.append(tens(ta, A.apply_twist(A.unit(j))))
    twist_amb = LinearMap.from_columns(f, ambient, twist_cols)

    gens = [tuple(f.one() if g == h else f.zero() for h in range(ambient)) for g in range(ambient)]
    for r in pres.relations.basis.entries:
        if not pres.relations.contains(twist_amb.apply(r)):
            raise InternalInconsistency("presentation twist does not preserve relations")
        for g in gens:
            if not pres.relations.contains(amb_bracket(r, g)) or \
               not pres.relations.contains(amb_bracket(g, r)):
                raise InternalInconsistency("presentation bracket does not preserve relations")

    reps = [pres.lift_unit(idx) for idx in range(pres.dim)]
    table = tuple(tuple(pres.project(amb_bracket(ra, rb)) for rb in reps) for ra in reps)
    twist = induced_map(twist_amb, pres, pres)
    labels = tuple(f"u{i + 1}" for i in range(pres.dim))
    presented = HomLeibnizAlgebra(f, pres.dim, table, twist.matrix, labels)
    rep = presented.validate()
    if not rep.valid:
        raise InternalInconsistency("presented algebra fails validation",
                                    witness=rep.violations[0].witness)

    # generator comparison: a*b in either block of the tensor square -> a (x) b
    cols = []
    for i in range(k):
        for j in range(k):
            cols.append(tens(A.unit(i), A.unit(j)))
    for j in range(k):
        for i in range(k):
            cols.append(tens(A.unit(j), A.unit(i)))
    comp_amb = LinearMap.from_columns(f, ambient, cols)
    for r in t.presentation.relations.basis.entries:
        if not pres.relations.contains(comp_amb.apply(r)):
            raise InternalInconsistency("comparison map does not preserve relations")
    comp = AlgebraHom(t.algebra, presented,
                      pres.projection_map().compose(comp_amb).compose(t.presentation.section_map()))
    crep = comp.validate()
    if not crep.valid:
        raise InternalInconsistency("comparison map is not a homomorphism",
                                    witness=crep.violations[0].witness)
    if not (comp.map.is_injective() and comp.map.is_surjective()):
        raise InternalInconsistency("comparison map is not bijective")
    return presented, comp


def _fold_bracket(A, x, k):
    """Apply the bilinear bracket to a tensor-space vector leg by leg:
    sum of x_{ij} [e_i, e_j]."""
    f = A.field
    out = vec_zero(f, k)
    for i in range(k):
        for j in range(k):
            c = x[i * k + j]
            if c != f.zero():
                out = vec_add(f, out, tuple(f.mul(c, w) for w in A.c[i][j]))
    return out


def six_term_check(L: HomLeibnizAlgebra, ideal_space: Subspace) -> ExactnessReport:
    """Four-term exactness certificate attached to an ideal of a perfect
    algebra:

        Ker(L*M -> M) -> Ker(L*L -> L) -> Ker(Q*Q -> Q) -> M/[L,M] -> 0

    with Q the quotient algebra.  The middle kernels realize the second
    homology of L and Q; the connecting map lifts through the tensor row and
    evaluates the commutator map.  Every joint is certified by exact ranks,
    together with the commutation and identification facts the construction
    depends on.
    """
    if not predicates(L).perfect:
        raise NotPerfect("six-term certificate requires a perfect algebra")
    f = L.field
    data = ideal_sequence_certificate(L, ideal_space)
    rep = ExactnessReport(subject="six-term sequence")
    for item in data.report.items:
        rep.check(f"row: {item.name}", item.ok, item.detail)

    from .tensorprod import factor_maps, induced_tensor_map

    psi_ll = commutator_map(data.t_ll)
    psi_qq = commutator_map(data.t_qq)
    # the column over L*M evaluates into the ideal (second factor)
    _, into_ideal = factor_maps(data.t_lm)
    k1 = into_ideal.map.kernel()
    k2 = psi_ll.map.kernel()
    k3 = psi_qq.map.kernel()
    rep.dims["kernel over ideal tensor"] = k1.dim
    rep.dims["second homology of the algebra"] = k2.dim
    rep.dims["second homology of the quotient"] = k3.dim

    # commutativity of the square the snake construction uses
    left_sq = data.proj.map.compose(psi_ll.map)
    right_sq = psi_qq.map.compose(data.tau.map)
    rep.check("projection commutes over the tensor row", left_sq.matrix == right_sq.matrix)

    # first map: include the ideal tensor into the square, then twist
    id_l = AlgebraHom(L, L, LinearMap.identity(f, L.dim))
    sigma2 = induced_tensor_map(id_l, data.incl, data.t_lm, data.t_ll)
    twist_ll = data.t_ll.algebra.twist_map()
    t1_cols = [twist_ll.apply(sigma2.map.apply(v)) for v in k1.basis.entries]
    rep.check("first map lands in the middle kernel",
              all(k2.contains(c) for c in t1_cols))
    im1 = Subspace.span(f, data.t_ll.algebra.dim, t1_cols)

    # second map: the quotient-induced tensor map, restricted to kernels
    t2_cols = [data.tau.map.apply(v) for v in k2.basis.entries]
    rep.check("second map lands in the quotient kernel",
              all(k3.contains(c) for c in t2_cols))

    rep.check("exact at the second homology of the algebra",
              im1 == k2.intersect(data.tau.map.kernel()))

    # cokernel target: ideal modulo the two-sided commutator with the algebra
    M_sub, incl = subalgebra(L, ideal_space, "m")
    two_sided = commutator(IdealHandle(L, ideal_space),
                           IdealHandle(L, Subspace.full(f, L.dim)))
    in_m = [incl.map.preimage(v) for v in two_sided.basis.entries]
    if any(q is None for q in in_m):
        raise InternalInconsistency("commutator with the algebra leaves the ideal")
    coker_q = QuotientSpace(M_sub.dim, Subspace.span(f, M_sub.dim, in_m))
    rep.dims["ideal modulo commutator"] = coker_q.dim

    # the big column's image equals that two-sided commutator: values of the
    # evaluation on the ideal tensor, then twisted values on the swapped one
    psi_big_cols = []
    for g in range(data.t_ml.ambient_dim):
        psi_big_cols.append(data.incl.map.apply(data.t_ml.eval_m.column(g)))
    for g in range(data.t_lm.ambient_dim):
        psi_big_cols.append(L.apply_twist(data.t_lm.eval_m.column(g)))
    im_psi = Subspace.span(f, L.dim, psi_big_cols)
    rep.check("column image equals the two-sided commutator", im_psi == two_sided)

    # connecting map: lift along the projection row, evaluate, read in the cokernel
    delta_cols = []
    ok_lift = True
    for v in k3.basis.entries:
        x = data.tau.map.preimage(v)
        if x is None:
            ok_lift = False
            break
        w = psi_ll.map.apply(x)
        q = incl.map.preimage(w)
        if q is None or incl.map.apply(q) != tuple(w):
            ok_lift = False
            break
        delta_cols.append(coker_q.project(q))
    rep.check("connecting map lifts exist", ok_lift)
    if ok_lift:
        delta = LinearMap.from_columns(f, coker_q.dim, delta_cols)
        im2_in_k3 = Subspace.span(f, data.t_qq.algebra.dim, t2_cols)
        ker_delta_vecs = []
        for w in delta.kernel().basis.entries:
            vec = vec_zero(f, data.t_qq.algebra.dim)
            for coeff, bas in zip(w, k3.basis.entries):
                if coeff != f.zero():
                    vec = vec_add(f, vec, tuple(f.mul(coeff, b) for b in bas))
            ker_delta_vecs.append(vec)
        ker_delta = Subspace.span(f, data.t_qq.algebra.dim, ker_delta_vecs)
        rep.check("exact at the second homology of the quotient", im2_in_k3 == ker_delta)
        rep.check("connecting map onto the ideal cokernel", delta.rank() == coker_q.dim)
    return rep
