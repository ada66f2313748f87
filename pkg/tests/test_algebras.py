from __future__ import annotations

import random
from fractions import Fraction

import pytest

from homleib.errors import NotAnIdeal, NotEndomorphism, ParentMismatch, StructureError
from homleib.fields import Field
from homleib.linalg import Matrix, Subspace
from homleib.algebras import (
    HomLeibnizAlgebra,
    IdealHandle,
    center,
    commutator,
    derived_subspace,
    direct_sum,
    lieization,
    predicates,
    quotient_algebra,
    subalgebra,
    validate_algebra,
    yau_twist,
)
from homleib.generators import random_algebra

QQ = Field()


def span(field, dim, rows):
    return Subspace.span(field, dim, [tuple(field.from_int(x) for x in r) for r in rows])


class TestValidate:
    def test_nonlie_example_validates(self, nonlie2):
        rep = validate_algebra(nonlie2)
        assert rep.valid
        assert rep.flags["hom_lie"] is False

    def test_abelian_any_twist(self, abelian3):
        rep = validate_algebra(abelian3)
        assert rep.valid
        assert rep.flags["abelian"] is True

    def test_extra_entry_breaks_multiplicativity(self, field):
        # adding [e1, e2] = e1 breaks t[x, y] = [t x, t y] at the pair (e2, e2):
        # t[e2,e2] = e1 while [t e2, t e2] = 2 e1
        bad = HomLeibnizAlgebra.from_brackets(
            field, 2, {(1, 1): {0: 1}, (0, 1): {0: 1}},
            Matrix.from_rows(field, [[1, 1], [0, 1]]))
        rep = validate_algebra(bad)
        assert not rep.valid
        laws = {v.law for v in rep.violations}
        assert laws <= {"multiplicativity", "hom-leibniz identity"}
        assert ("e2", "e2") in {v.witness for v in rep.violations}

    def test_shape_mismatch(self, field):
        with pytest.raises(StructureError):
            HomLeibnizAlgebra(field, 2, ((), ()), Matrix.identity(field, 2), ("a", "b"))


class TestCommutatorCenter:
    def test_derived_of_nonlie2(self, nonlie2):
        der = derived_subspace(nonlie2)
        assert der.basis.entries == ((Fraction(1), Fraction(0)),)

    def test_commutator_of_abelian(self, abelian3):
        full = IdealHandle(abelian3, Subspace.full(QQ, 3))
        assert commutator(full, full).dim == 0

    def test_sl2_is_perfect(self, sl2):
        assert derived_subspace(sl2).dim == 3

    def test_parent_mismatch(self, nonlie2, sl2):
        h = IdealHandle(nonlie2, Subspace.full(QQ, 2))
        k = IdealHandle(sl2, Subspace.full(QQ, 3))
        with pytest.raises(ParentMismatch):
            commutator(h, k)

    def test_center_nonlie2(self, nonlie2):
        assert center(nonlie2).basis.entries == ((Fraction(1), Fraction(0)),)

    def test_center_abelian_is_everything(self, abelian3):
        assert center(abelian3).dim == 3

    def test_center_sl2_is_zero(self, sl2):
        assert center(sl2).dim == 0

    def test_commutator_contained_in_intersection(self, nonlie2, heis3):
        # two-sided commutator of ideals lands in their intersection
        for alg, rows_a, rows_b in (
                (nonlie2, [[1, 0]], [[1, 0], [0, 1]]),
                (heis3, [[0, 0, 1]], [[1, 0, 0], [0, 0, 1]])):
            a = IdealHandle(alg, span(QQ, alg.dim, rows_a))
            b = IdealHandle(alg, span(QQ, alg.dim, rows_b))
            comm = commutator(a, b)
            assert a.space.intersect(b.space).contains_subspace(comm)

    def test_surjective_twist_commutator_is_ideal(self, heis3):
        a = IdealHandle(heis3, span(QQ, 3, [[1, 0, 0], [0, 0, 1]]))
        b = IdealHandle(heis3, Subspace.full(QQ, 3))
        comm = commutator(a, b)
        assert IdealHandle(heis3, comm).is_ideal()


class TestQuotient:
    def test_quotient_by_derived(self, nonlie2):
        quot, proj = quotient_algebra(nonlie2, IdealHandle(nonlie2, span(QQ, 2, [[1, 0]])))
        assert quot.dim == 1
        assert quot.is_abelian()
        assert quot.twist == Matrix.identity(QQ, 1)
        assert proj.is_homomorphism()

    def test_quotient_by_zero_is_identity(self, sl2):
        quot, proj = quotient_algebra(sl2, IdealHandle(sl2, Subspace.zero(QQ, 3)))
        assert quot.c == sl2.c
        assert quot.twist == sl2.twist
        assert proj.map.matrix == Matrix.identity(QQ, 3)

    def test_non_ideal_refused(self, nonlie2):
        with pytest.raises(NotAnIdeal):
            quotient_algebra(nonlie2, IdealHandle(nonlie2, span(QQ, 2, [[0, 1]])))

    def test_random_quotients_validate(self):
        rng = random.Random(11)
        seen = 0
        while seen < 6:
            alg = random_algebra(QQ, rng)
            der = derived_subspace(alg)
            handle = IdealHandle(alg, der)
            if not handle.is_ideal():
                continue
            quot, proj = quotient_algebra(alg, handle)
            assert validate_algebra(quot).valid
            assert proj.is_homomorphism()
            seen += 1


class TestPredicates:
    def test_nonlie2(self, nonlie2):
        p = predicates(nonlie2)
        assert (p.perfect, p.alpha_perfect, p.alpha_surjective, p.abelian) == \
            (False, False, True, False)

    def test_sl2(self, sl2):
        p = predicates(sl2)
        assert p.perfect and p.alpha_perfect and p.alpha_surjective and not p.abelian

    def test_abelian(self, abelian3):
        p = predicates(abelian3)
        assert not p.perfect and not p.alpha_perfect and p.abelian


class TestLieization:
    def test_nonlie2_collapses_to_a_line(self, nonlie2):
        quot, proj = lieization(nonlie2)
        assert quot.dim == 1
        assert quot.is_skew()
        assert proj.is_homomorphism()

    def test_skew_input_unchanged(self, sl2):
        quot, proj = lieization(sl2)
        assert quot.dim == 3
        assert proj.map.matrix == Matrix.identity(QQ, 3)

    def test_abelian_unchanged(self, abelian3):
        quot, _ = lieization(abelian3)
        assert quot.dim == 3

    def test_random_outputs_are_skew(self):
        rng = random.Random(5)
        for _ in range(8):
            alg = random_algebra(QQ, rng)
            quot, proj = lieization(alg)
            assert quot.is_skew()
            for i in range(quot.dim):
                for j in range(quot.dim):
                    s = tuple(QQ.add(a, b) for a, b in zip(quot.c[i][j], quot.c[j][i]))
                    assert all(x == QQ.zero() for x in s)
            assert proj.is_homomorphism()


class TestYauTwist:
    def test_identity_twist_returns_input(self, sl2):
        twisted = yau_twist(sl2, Matrix.identity(QQ, 3))
        assert twisted.c == sl2.c
        assert twisted.twist == sl2.twist

    def test_abelian_any_endo(self):
        base = HomLeibnizAlgebra.abelian(QQ, 2)
        endo = Matrix.from_rows(QQ, [[1, 2], [0, 3]])
        twisted = yau_twist(base, endo)
        assert twisted.is_abelian()
        assert twisted.twist == endo

    def test_diagonal_automorphism_of_sl2(self, sl2_twisted):
        rep = validate_algebra(sl2_twisted)
        assert rep.valid
        p = predicates(sl2_twisted)
        assert p.perfect and p.alpha_perfect

    def test_non_endomorphism_rejected(self, sl2):
        bad = Matrix.from_rows(QQ, [[1, 0, 0], [0, 1, 0], [0, 1, 1]])
        with pytest.raises(NotEndomorphism):
            yau_twist(sl2, bad)


class TestSubalgebraDirectSum:
    def test_twist_image_subalgebra(self, sl2_twisted):
        sub, incl = subalgebra(sl2_twisted, sl2_twisted.twist_map().image())
        assert sub.dim == 3
        assert incl.is_homomorphism()

    def test_direct_sum_validates(self, sl2, nonlie2):
        s = direct_sum(sl2, nonlie2)
        assert s.dim == 5
        assert validate_algebra(s).valid
        assert derived_subspace(s).dim == 4
