"""The non-abelian tensor product of two Hom-Leibniz algebras acting
compatibly on each other.

The ambient space has one generator per elementary symbol: the block of
pure tensors m (x) n first, then the block n (x) m, row-major in basis
indices.  Ten multilinear relation families are instantiated on basis
tuples and spanned; the tensor product is the quotient.  Bilinearity is
built into the ambient space itself.

The bracket of two generators factors through the two evaluation maps

    eval_m(m*n) = m acted by n,   eval_m(n*m) = n acting on m   (into M)
    eval_n(m*n) = m acting on n,  eval_n(n*m) = n acted by m    (into N)

as [x, y] = eval_m(x) * eval_n(y), always landing in the first block.
Well-definedness of the bracket and of the induced twist on the quotient
is certified, never assumed; a failure aborts loudly since it would
contradict the construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BracketNotWellDefined, IncompatibleActions, InternalInconsistency, NotEquivariant
from .actions import HomAction, MutualActions
from .algebras import AlgebraHom, HomLeibnizAlgebra
from .linalg import (
    LinearMap,
    QuotientSpace,
    RrefAccumulator,
    Subspace,
    vec_add,
    vec_is_zero,
    vec_sub,
    vec_zero,
)
from .report import ExactnessReport


@dataclass(frozen=True)
class TensorProduct:
    actions: MutualActions
    presentation: QuotientSpace
    algebra: HomLeibnizAlgebra
    eval_m: LinearMap  # ambient -> M
    eval_n: LinearMap  # ambient -> N

    @property
    def m_side(self) -> HomLeibnizAlgebra:
        return self.actions.m_side

    @property
    def n_side(self) -> HomLeibnizAlgebra:
        return self.actions.n_side

    @property
    def ambient_dim(self) -> int:
        return self.presentation.ambient_dim

    def idx_mn(self, i: int, j: int) -> int:
        return i * self.n_side.dim + j

    def idx_nm(self, j: int, i: int) -> int:
        return self.m_side.dim * self.n_side.dim + j * self.m_side.dim + i

    def embed_mn(self, u, v) -> tuple:
        return _tens_mn(self.m_side, self.n_side, u, v)

    def embed_nm(self, v, u) -> tuple:
        return _tens_nm(self.m_side, self.n_side, v, u)

    def ambient_bracket(self, x, y) -> tuple:
        return self.embed_mn(self.eval_m.apply(x), self.eval_n.apply(y))

    def ambient_twist(self) -> LinearMap:
        return _ambient_twist(self.m_side, self.n_side)

    def generator_labels(self) -> tuple:
        return _generator_labels(self.m_side, self.n_side)


def _generator_labels(M, N) -> tuple:
    # the second block gets a prime so tensor squares stay unambiguous
    out = [f"{a}*{b}" for a in M.labels for b in N.labels]
    out += [f"{b}*{a}'" for b in N.labels for a in M.labels]
    return tuple(out)


def _tens_mn(M, N, u, v) -> tuple:
    f = M.field
    zero = f.zero()
    dm, dn = M.dim, N.dim
    out = [zero] * (2 * dm * dn)
    for i, ui in enumerate(u):
        if ui == zero:
            continue
        for j, vj in enumerate(v):
            if vj != zero:
                out[i * dn + j] = f.add(out[i * dn + j], f.mul(ui, vj))
    return tuple(out)


def _tens_nm(M, N, v, u) -> tuple:
    f = M.field
    zero = f.zero()
    dm, dn = M.dim, N.dim
    base = dm * dn
    out = [zero] * (2 * dm * dn)
    for j, vj in enumerate(v):
        if vj == zero:
            continue
        for i, ui in enumerate(u):
            if ui != zero:
                out[base + j * dm + i] = f.add(out[base + j * dm + i], f.mul(vj, ui))
    return tuple(out)


def _ambient_twist(M, N) -> LinearMap:
    f = M.field
    cols = []
    for i in range(M.dim):
        tm = M.apply_twist(M.unit(i))
        for j in range(N.dim):
            cols.append(_tens_mn(M, N, tm, N.apply_twist(N.unit(j))))
    for j in range(N.dim):
        tn = N.apply_twist(N.unit(j))
        for i in range(M.dim):
            cols.append(_tens_nm(M, N, tn, M.apply_twist(M.unit(i))))
    return LinearMap.from_columns(f, 2 * M.dim * N.dim, cols)


def _eval_maps(ma: MutualActions):
    """The two evaluation maps on ambient generators."""
    M, N = ma.m_side, ma.n_side
    f = M.field
    cols_m, cols_n = [], []
    for i in range(M.dim):
        for j in range(N.dim):
            cols_m.append(ma.nm.right[i][j])   # m acted by n, in M
            cols_n.append(ma.mn.left[i][j])    # m acting on n, in N
    for j in range(N.dim):
        for i in range(M.dim):
            cols_m.append(ma.nm.left[j][i])    # n acting on m, in M
            cols_n.append(ma.mn.right[j][i])   # n acted by m, in N
    eval_m = LinearMap.from_columns(f, M.dim, cols_m)
    eval_n = LinearMap.from_columns(f, N.dim, cols_n)
    return eval_m, eval_n


def relation_vectors(ma: MutualActions):
    """Yield the spanning relation instances over basis tuples.

    Families, with m, m' in M and n, n' in N (all basis vectors):
      r1  t(m) * [n,n']  - m.n * t(n')   + m.n' * t(n)              (block mn)
      r2  t(n) * [m,m']  - n.m * t(m')   + n.m' * t(m)              (block nm)
      r3  [m,m'] * t(n)  - (m>n) * t(m') + t(m) * (n<m')            (mixed)
      r4  [n,n'] * t(m)  - (n>m) * t(n') + t(n) * (m<n')            (mixed)
      r5  t(m) * (m'>n)  + t(m) * (n<m')                            (block mn)
      r6  t(n) * (n'>m)  + t(n) * (m<n')                            (block nm)
      r7  (m<n) * (m'>n')  - (m>n) * (m'<n')
      r8  (m<n) * (n'<m')  - (m>n) * (n'>m')
      r9  (n>m) * (m'>n')  - (n<m) * (m'<n')
      r10 (n>m) * (n'<m')  - (n<m) * (n'>m')
    where x>y is x acting on y from the left and x<y is x acted by y from
    the right.
    """
    M, N = ma.m_side, ma.n_side
    f = M.field
    dm, dn = M.dim, N.dim

    def t_m(i):
        return M.apply_twist(M.unit(i))

    def t_n(j):
        return N.apply_twist(N.unit(j))

    tm = [t_m(i) for i in range(dm)]
    tn = [t_n(j) for j in range(dn)]
    mn, nm = ma.mn, ma.nm

    for i in range(dm):
        for j in range(dn):
            for j2 in range(dn):
                # r1: t(m) * [n, n'] = m.n * t(n') - m.n' * t(n)
                v = _tens_mn(M, N, tm[i], N.c[j][j2])
                v = vec_sub(f, v, _tens_mn(M, N, nm.right[i][j], tn[j2]))
                v = vec_add(f, v, _tens_mn(M, N, nm.right[i][j2], tn[j]))
                yield v
                # r4: [n, n'] * t(m) = n.m * t(n') - t(n) * m.n'
                v = _tens_nm(M, N, N.c[j][j2], tm[i])
                v = vec_sub(f, v, _tens_mn(M, N, nm.left[j][i], tn[j2]))
                v = vec_add(f, v, _tens_nm(M, N, tn[j], nm.right[i][j2]))
                yield v
    for j in range(dn):
        for i in range(dm):
            for i2 in range(dm):
                # r2: t(n) * [m, m'] = n.m * t(m') - n.m' * t(m)
                v = _tens_nm(M, N, tn[j], M.c[i][i2])
                v = vec_sub(f, v, _tens_nm(M, N, mn.right[j][i], tm[i2]))
                v = vec_add(f, v, _tens_nm(M, N, mn.right[j][i2], tm[i]))
                yield v
                # r3: [m, m'] * t(n) = m.n * t(m') - t(m) * n.m'
                v = _tens_mn(M, N, M.c[i][i2], tn[j])
                v = vec_sub(f, v, _tens_nm(M, N, mn.left[i][j], tm[i2]))
                v = vec_add(f, v, _tens_mn(M, N, tm[i], mn.right[j][i2]))
                yield v
    for i in range(dm):
        for i2 in range(dm):
            for j in range(dn):
                # r5: t(m) * (m'.n) = - t(m) * (n.m')
                v = _tens_mn(M, N, tm[i], mn.left[i2][j])
                v = vec_add(f, v, _tens_mn(M, N, tm[i], mn.right[j][i2]))
                yield v
    for j in range(dn):
        for j2 in range(dn):
            for i in range(dm):
                # r6: t(n) * (n'.m) = - t(n) * (m.n')
                v = _tens_nm(M, N, tn[j], nm.left[j2][i])
                v = vec_add(f, v, _tens_nm(M, N, tn[j], nm.right[i][j2]))
                yield v
    for i in range(dm):
        for j in range(dn):
            for i2 in range(dm):
                for j2 in range(dn):
                    mdown = nm.right[i][j]   # m acted by n, in M
                    mup = mn.left[i][j]      # m acting on n, in N
                    ndown = mn.right[j][i]   # n acted by m, in N
                    nup = nm.left[j][i]      # n acting on m, in M
                    m2down = nm.right[i2][j2]
                    m2up = mn.left[i2][j2]
                    n2down = mn.right[j2][i2]
                    n2up = nm.left[j2][i2]
                    # r7: (m<n) * (m'>n') = (m>n) * (m'<n')
                    v = vec_sub(f, _tens_mn(M, N, mdown, m2up), _tens_nm(M, N, mup, m2down))
                    yield v
                    # r8: (m<n) * (n'<m') = (m>n) * (n'>m')
                    v = vec_sub(f, _tens_mn(M, N, mdown, n2down), _tens_nm(M, N, mup, n2up))
                    yield v
                    # r9: (n>m) * (m'>n') = (n<m) * (m'<n')
                    v = vec_sub(f, _tens_mn(M, N, nup, m2up), _tens_nm(M, N, ndown, m2down))
                    yield v
                    # r10: (n>m) * (n'<m') = (n<m) * (n'>m')
                    v = vec_sub(f, _tens_mn(M, N, nup, n2down), _tens_nm(M, N, ndown, n2up))
                    yield v


def build_tensor(ma: MutualActions, check: bool = True) -> TensorProduct:
    """Construct the tensor product algebra of compatibly acting algebras."""
    comp = ma.check_compatible()
    if not comp.valid:
        v = comp.violations[0]
        raise IncompatibleActions(f"compatibility {v.law} fails at {v.witness}", witness=v.witness)
    M, N = ma.m_side, ma.n_side
    f = M.field
    ambient = 2 * M.dim * N.dim
    acc = RrefAccumulator(f, ambient)
    for v in relation_vectors(ma):
        if not vec_is_zero(f, v):
            acc.add(v)
    pres = QuotientSpace(ambient, Subspace(ambient, acc.basis_matrix()))
    eval_m, eval_n = _eval_maps(ma)
    twist_amb = _ambient_twist(M, N)

    t = _assemble(ma, pres, eval_m, eval_n, twist_amb, check)
    return t


def _assemble(ma, pres, eval_m, eval_n, twist_amb, check) -> TensorProduct:
    M, N = ma.m_side, ma.n_side
    f = M.field
    ambient = pres.ambient_dim

    def amb_bracket(x, y):
        return _tens_mn(M, N, eval_m.apply(x), eval_n.apply(y))

    if check:
        gens = [tuple(f.one() if k == g else f.zero() for k in range(ambient)) for g in range(ambient)]
        for r in pres.relations.basis.entries:
            if not pres.relations.contains(twist_amb.apply(r)):
                raise InternalInconsistency("induced twist does not preserve the relations", witness=(r,))
            for g in gens:
                if not pres.relations.contains(amb_bracket(r, g)) or \
                   not pres.relations.contains(amb_bracket(g, r)):
                    raise BracketNotWellDefined("bracket does not preserve the relations", witness=(r,))

    reps = [pres.lift_unit(k) for k in range(pres.dim)]
    table = tuple(tuple(pres.project(amb_bracket(ra, rb)) for rb in reps) for ra in reps)
    twist_cols = [pres.project(twist_amb.apply(r)) for r in reps]
    twist = LinearMap.from_columns(f, pres.dim, twist_cols).matrix

    all_labels = _generator_labels(M, N)
    labels = tuple(all_labels[c] for c in pres.coset_basis)
    algebra = HomLeibnizAlgebra(f, pres.dim, table, twist, labels)
    if check:
        rep = algebra.validate()
        if not rep.valid:
            v = rep.violations[0]
            raise InternalInconsistency(
                f"tensor product fails {v.law} at {v.witness}", witness=v.witness)
    return TensorProduct(ma, pres, algebra, eval_m, eval_n)


def factor_maps(t: TensorProduct):
    """The two algebra homomorphisms from the tensor product onto values of
    the actions inside each factor."""
    pres = t.presentation
    for r in pres.relations.basis.entries:
        if not vec_is_zero(t.m_side.field, t.eval_m.apply(r)) or \
           not vec_is_zero(t.n_side.field, t.eval_n.apply(r)):
            raise InternalInconsistency("evaluation map does not kill the relations", witness=(r,))
    sec = pres.section_map()
    into_m = AlgebraHom(t.algebra, t.m_side, t.eval_m.compose(sec))
    into_n = AlgebraHom(t.algebra, t.n_side, t.eval_n.compose(sec))
    for hom, name in ((into_m, "first"), (into_n, "second")):
        rep = hom.validate()
        if not rep.valid:
            raise InternalInconsistency(
                f"evaluation onto the {name} factor is not a homomorphism",
                witness=rep.violations[0].witness)
    return into_m, into_n


def commutator_map(t: TensorProduct) -> AlgebraHom:
    """For the tensor square of one algebra under adjoint actions, the map
    sending a generator x*y to the bracket [x, y]."""
    into_m, into_n = factor_maps(t)
    if into_m.map.matrix != into_n.map.matrix:
        raise InternalInconsistency("the two factor maps disagree on a tensor square")
    return into_m


def outer_action(t: TensorProduct, side: str) -> HomAction:
    """The action of one factor on the tensor product algebra.

    For an actor a in the chosen factor and generators of the product:
    on the M side
        a . (m*n) = [a,m] * t(n) - (a.n) * t(m)
        a . (n*m) = (a.n) * t(m) - [a,m] * t(n)
        (m*n) . a = [m,a] * t(n) + t(m) * (n<a)
        (n*m) . a = (n<a) * t(m) + t(n) * [m,a]
    and symmetrically on the N side.
    """
    M, N = t.m_side, t.n_side
    f = M.field
    pres = t.presentation
    mn, nm = t.actions.mn, t.actions.nm
    dm, dn = M.dim, N.dim

    def project(v):
        return pres.project(v)

    left_cols = {}
    right_cols = {}
    if side == "m":
        actor = M
        for a in range(dm):
            for i in range(dm):
                for j in range(dn):
                    tmn_i, tnn_j = M.apply_twist(M.unit(i)), N.apply_twist(N.unit(j))
                    br = M.c[a][i]
                    an = mn.left[a][j]        # a acting on n, in N
                    g = i * dn + j
                    left_cols[(a, g)] = project(vec_sub(
                        f, _tens_mn(M, N, br, tnn_j), _tens_nm(M, N, an, tmn_i)))
                    g2 = dm * dn + j * dm + i
                    left_cols[(a, g2)] = project(vec_sub(
                        f, _tens_nm(M, N, an, tmn_i), _tens_mn(M, N, br, tnn_j)))
                    bra = M.c[i][a]
                    na = mn.right[j][a]       # n acted by a, in N
                    right_cols[(g, a)] = project(vec_add(
                        f, _tens_mn(M, N, bra, tnn_j), _tens_mn(M, N, tmn_i, na)))
                    right_cols[(g2, a)] = project(vec_add(
                        f, _tens_nm(M, N, na, tmn_i), _tens_nm(M, N, tnn_j, bra)))
    elif side == "n":
        actor = N
        for a in range(dn):
            for i in range(dm):
                for j in range(dn):
                    tmn_i, tnn_j = M.apply_twist(M.unit(i)), N.apply_twist(N.unit(j))
                    br = N.c[a][j]
                    am = nm.left[a][i]        # a acting on m, in M
                    g = i * dn + j
                    left_cols[(a, g)] = project(vec_sub(
                        f, _tens_mn(M, N, am, tnn_j), _tens_nm(M, N, br, tmn_i)))
                    g2 = dm * dn + j * dm + i
                    left_cols[(a, g2)] = project(vec_sub(
                        f, _tens_nm(M, N, br, tmn_i), _tens_mn(M, N, am, tnn_j)))
                    bra = N.c[j][a]
                    ma_v = nm.right[i][a]     # m acted by a, in M
                    right_cols[(g, a)] = project(vec_add(
                        f, _tens_mn(M, N, ma_v, tnn_j), _tens_mn(M, N, tmn_i, bra)))
                    right_cols[(g2, a)] = project(vec_add(
                        f, _tens_nm(M, N, bra, tmn_i), _tens_nm(M, N, tnn_j, ma_v)))
    else:
        raise ValueError("side must be 'm' or 'n'")

    # the formulas are linear in the ambient generator; they must kill the
    # relation subspace for the quotient action to be meaningful
    T = t.algebra
    ambient = 2 * dm * dn
    zero_q = vec_zero(f, T.dim)
    for r in pres.relations.basis.entries:
        for a in range(actor.dim):
            for cols, key in ((left_cols, lambda g: (a, g)), (right_cols, lambda g: (g, a))):
                acc = zero_q
                for g in range(ambient):
                    if r[g] != f.zero():
                        acc = vec_add(f, acc, tuple(f.mul(r[g], x) for x in cols[key(g)]))
                if not vec_is_zero(f, acc):
                    raise InternalInconsistency(
                        "outer action does not descend to the quotient", witness=(side, r))
    left = []
    for a in range(actor.dim):
        row = []
        for k in range(T.dim):
            rep_vec = pres.lift_unit(k)
            acc = vec_zero(f, T.dim)
            for g in range(ambient):
                if rep_vec[g] != f.zero():
                    acc = vec_add(f, acc, tuple(f.mul(rep_vec[g], x) for x in left_cols[(a, g)]))
            row.append(acc)
        left.append(tuple(row))
    right = []
    for k in range(T.dim):
        rep_vec = pres.lift_unit(k)
        row = []
        for a in range(actor.dim):
            acc = vec_zero(f, T.dim)
            for g in range(ambient):
                if rep_vec[g] != f.zero():
                    acc = vec_add(f, acc, tuple(f.mul(rep_vec[g], x) for x in right_cols[(g, a)]))
            row.append(acc)
        right.append(tuple(row))
    action = HomAction(actor, T, tuple(left), tuple(right))
    rep = action.validate()
    if not rep.valid:
        v = rep.violations[0]
        raise InternalInconsistency(
            f"outer action identity {v.law}) fails at {v.witness}", witness=v.witness)
    return action


def equivariance_witness(f_hom: AlgebraHom, g_hom: AlgebraHom,
                         src: MutualActions, dst: MutualActions):
    """None when (f, g) preserve the four action tensors, else a witness."""
    M, N = src.m_side, src.n_side
    for i in range(M.dim):
        em = M.unit(i)
        fm = f_hom.apply(em)
        for j in range(N.dim):
            en = N.unit(j)
            gn = g_hom.apply(en)
            if f_hom.apply(src.nm.left[j][i]) != dst.nm.act_left(gn, fm):
                return ("n acting on m", N.labels[j], M.labels[i])
            if f_hom.apply(src.nm.right[i][j]) != dst.nm.act_right(fm, gn):
                return ("m acted by n", M.labels[i], N.labels[j])
            if g_hom.apply(src.mn.left[i][j]) != dst.mn.act_left(fm, gn):
                return ("m acting on n", M.labels[i], N.labels[j])
            if g_hom.apply(src.mn.right[j][i]) != dst.mn.act_right(gn, fm):
                return ("n acted by m", N.labels[j], M.labels[i])
    return None


def tensor_identity_battery(t: TensorProduct) -> ExactnessReport:
    """Battery of identities tying the factor maps, the outer actions, the
    bracket and the twist of a tensor product:

      * the two factor-map kernels sit inside the center;
      * values of a factor map act trivially on its kernel;
      * factor maps intertwine outer actions with twisted brackets;
      * acting through a factor-map value equals bracketing with the twisted
        class, on either side and through either factor.

    All checks run over basis tuples with exact arithmetic.
    """
    from .algebras import center

    rep = ExactnessReport(subject="tensor pairing battery")
    M, N = t.m_side, t.n_side
    f = M.field
    T = t.algebra
    into_m, into_n = factor_maps(t)
    act_m = outer_action(t, "m")
    act_n = outer_action(t, "n")
    z = center(T)
    rep.check("first kernel inside the center", z.contains_subspace(into_m.map.kernel()))
    rep.check("second kernel inside the center", z.contains_subspace(into_n.map.kernel()))

    for name, hom, act, F in (("first", into_m, act_m, M), ("second", into_n, act_n, N)):
        ker = hom.map.kernel()
        ok = True
        for g in range(t.ambient_dim):
            v = hom.map.apply(t.presentation.project(_unit_vec(f, t.ambient_dim, g)))
            for k in ker.basis.entries:
                if not vec_is_zero(f, act.act_left(v, k)) or \
                   not vec_is_zero(f, act.act_right(k, v)):
                    ok = False
        rep.check(f"{name} factor values act trivially on the kernel", ok)

        ok_left = ok_right = True
        for a in range(F.dim):
            ta = F.apply_twist(F.unit(a))
            for k in range(T.dim):
                ek = T.unit(k)
                if hom.map.apply(act.act_left(F.unit(a), ek)) != \
                        F.bracket(ta, hom.map.apply(ek)):
                    ok_left = False
                if hom.map.apply(act.act_right(ek, F.unit(a))) != \
                        F.bracket(hom.map.apply(ek), ta):
                    ok_right = False
        rep.check(f"{name} factor map intertwines the left outer action", ok_left)
        rep.check(f"{name} factor map intertwines the right outer action", ok_right)

    twist_t = T.twist_map()
    ok_left = ok_right = True
    for g1 in range(t.ambient_dim):
        cls1 = t.presentation.project(_unit_vec(f, t.ambient_dim, g1))
        tw1 = twist_t.apply(cls1)
        vm = into_m.map.apply(cls1)
        vn = into_n.map.apply(cls1)
        for g2 in range(t.ambient_dim):
            cls2 = t.presentation.project(_unit_vec(f, t.ambient_dim, g2))
            br = T.bracket(tw1, cls2)
            if act_m.act_left(vm, cls2) != br or act_n.act_left(vn, cls2) != br:
                ok_left = False
            br2 = T.bracket(cls2, tw1)
            if act_m.act_right(cls2, vm) != br2 or act_n.act_right(cls2, vn) != br2:
                ok_right = False
    rep.check("acting through factor values is the twisted bracket, left", ok_left)
    rep.check("acting through factor values is the twisted bracket, right", ok_right)
    return rep


def _unit_vec(f, n, i):
    return tuple(f.one() if k == i else f.zero() for k in range(n))


def right_exactness_certificate(f_hom: AlgebraHom, g_hom: AlgebraHom,
                                ma1: MutualActions, ma2: MutualActions,
                                ma3: MutualActions) -> ExactnessReport:
    """Certificate that tensoring a short exact sequence with a fixed partner
    stays exact on the right.

    ``f_hom`` and ``g_hom`` form a short exact sequence of the first factors;
    the three mutual-action structures share the partner algebra and the
    maps preserve the actions.  Checks by exact rank arithmetic that the
    induced map of ``g_hom`` is onto and its kernel is the image of the map
    induced by ``f_hom``.
    """
    rep = ExactnessReport(subject="tensored right exactness")
    rep.check("f injective", f_hom.map.is_injective())
    rep.check("g surjective onto the third algebra", g_hom.map.is_surjective())
    rep.check("im f = ker g", f_hom.map.image() == g_hom.map.kernel())
    t1, t2, t3 = build_tensor(ma1), build_tensor(ma2), build_tensor(ma3)
    rep.dims["first tensor"] = t1.algebra.dim
    rep.dims["middle tensor"] = t2.algebra.dim
    rep.dims["third tensor"] = t3.algebra.dim
    idn = AlgebraHom(ma1.n_side, ma1.n_side, LinearMap.identity(f_hom.map.field, ma1.n_side.dim))
    big_f = induced_tensor_map(f_hom, idn, t1, t2)
    big_g = induced_tensor_map(g_hom, idn, t2, t3)
    rep.check("induced g surjective", big_g.map.is_surjective())
    rep.check("exact at the middle tensor", big_f.map.image() == big_g.map.kernel())
    return rep


@dataclass(frozen=True)
class IdealSequenceData:
    """The tensor row attached to an ideal: everything needed downstream."""

    t_ml: TensorProduct     # ideal with the whole algebra
    t_lm: TensorProduct     # whole algebra with the ideal
    t_ll: TensorProduct     # tensor square of the whole algebra
    t_qq: TensorProduct     # tensor square of the quotient
    incl: AlgebraHom        # ideal into the algebra
    proj: AlgebraHom        # algebra onto the quotient
    sigma: LinearMap        # (ideal*L) + (L*ideal) -> L*L
    tau: AlgebraHom         # L*L -> quotient square
    report: ExactnessReport


def ideal_sequence_certificate(L: HomLeibnizAlgebra, ideal_space) -> IdealSequenceData:
    """Exactness of   (M*L) + (L*M)  ->  L*L  ->  (L/M)*(L/M)  ->  0
    for a two-sided twist-stable ideal M, with the left map assembled from
    the two inclusion-induced maps (the second one twisted)."""
    from .algebras import IdealHandle, quotient_algebra, subalgebra

    f = L.field
    handle = IdealHandle(L, ideal_space)
    handle.require_ideal()
    M_sub, incl = subalgebra(L, ideal_space, "m")
    quot, proj = quotient_algebra(L, handle)
    id_l = AlgebraHom(L, L, LinearMap.identity(f, L.dim))

    ma_ml = _bracket_mutual(L, M_sub, incl, L, id_l)
    ma_lm = _bracket_mutual(L, L, id_l, M_sub, incl)
    ma_ll = MutualActions.adjoint(L)
    ma_qq = MutualActions.adjoint(quot)
    t_ml, t_lm = build_tensor(ma_ml), build_tensor(ma_lm)
    t_ll, t_qq = build_tensor(ma_ll), build_tensor(ma_qq)

    sigma1 = induced_tensor_map(incl, id_l, t_ml, t_ll)
    sigma2 = induced_tensor_map(id_l, incl, t_lm, t_ll)
    tau = induced_tensor_map(proj, proj, t_ll, t_qq)

    twist_ll = t_ll.algebra.twist_map()
    cols = [sigma1.map.column(j) for j in range(t_ml.algebra.dim)]
    cols += [twist_ll.apply(sigma2.map.column(j)) for j in range(t_lm.algebra.dim)]
    sigma = LinearMap.from_columns(f, t_ll.algebra.dim, cols)

    rep = ExactnessReport(subject="ideal tensor sequence")
    rep.dims["ideal tensor"] = t_ml.algebra.dim
    rep.dims["swapped ideal tensor"] = t_lm.algebra.dim
    rep.dims["tensor square"] = t_ll.algebra.dim
    rep.dims["quotient tensor square"] = t_qq.algebra.dim
    rep.check("projection map surjective", tau.map.is_surjective())
    rep.check("composite vanishes", tau.map.compose(sigma).is_zero())
    rep.check("exact at the tensor square", sigma.image() == tau.map.kernel())
    return IdealSequenceData(t_ml, t_lm, t_ll, t_qq, incl, proj, sigma, tau, rep)


def _bracket_mutual(parent: HomLeibnizAlgebra, A, incl_a: AlgebraHom,
                    B, incl_b: AlgebraHom) -> MutualActions:
    from .actions import bracket_action

    mn = bracket_action(parent, (A, incl_a), (B, incl_b))
    nm = bracket_action(parent, (B, incl_b), (A, incl_a))
    return MutualActions(mn, nm)


def induced_tensor_map(f_hom: AlgebraHom, g_hom: AlgebraHom,
                       t_src: TensorProduct, t_dst: TensorProduct) -> AlgebraHom:
    """Functoriality: the map of tensor products induced by a pair of
    action-preserving homomorphisms of the factors."""
    wit = equivariance_witness(f_hom, g_hom, t_src.actions, t_dst.actions)
    if wit is not None:
        raise NotEquivariant(f"maps do not preserve the actions at {wit}", witness=wit)
    M, N = t_src.m_side, t_src.n_side
    Md, Nd = t_dst.m_side, t_dst.n_side
    f = M.field
    cols = []
    for i in range(M.dim):
        fm = f_hom.apply(M.unit(i))
        for j in range(N.dim):
            cols.append(_tens_mn(Md, Nd, fm, g_hom.apply(N.unit(j))))
    for j in range(N.dim):
        gn = g_hom.apply(N.unit(j))
        for i in range(M.dim):
            cols.append(_tens_nm(Md, Nd, gn, f_hom.apply(M.unit(i))))
    amb = LinearMap.from_columns(f, 2 * Md.dim * Nd.dim, cols)
    for r in t_src.presentation.relations.basis.entries:
        if not t_dst.presentation.relations.contains(amb.apply(r)):
            raise InternalInconsistency("induced map does not preserve the relations", witness=(r,))
    sec = t_src.presentation.section_map()
    proj = t_dst.presentation.projection_map()
    hom = AlgebraHom(t_src.algebra, t_dst.algebra, proj.compose(amb).compose(sec))
    rep = hom.validate()
    if not rep.valid:
        raise InternalInconsistency("induced tensor map is not a homomorphism",
                                    witness=rep.violations[0].witness)
    return hom
