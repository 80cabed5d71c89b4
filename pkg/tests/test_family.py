import itertools

import pytest

from monideal import (DimensionError, DomainError, FamilyParams, MonomialIdeal,
                      closure_generators, delta_set, divides, family_ideal,
                      is_strongly_generic, reduce_to_delta,
                      resolution_matrices, thm1_check)
from monideal.closure import InsideCertificate, bounding_box, np_membership

from conftest import box_points


class TestFamilyIdeal:
    def test_small_cases(self):
        assert family_ideal(FamilyParams(3, 2)).gens == \
            ((0, 2, 2), (2, 0, 2), (2, 2, 0))
        assert family_ideal(FamilyParams(3, 4)).gens == \
            ((0, 4, 4), (4, 0, 4), (4, 4, 0))
        I41 = family_ideal(FamilyParams(4, 1))
        assert len(I41.gens) == 4
        assert all(sum(g) == 3 and set(g) == {0, 1} for g in I41.gens)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            FamilyParams(2, 2)
        with pytest.raises(ValueError):
            FamilyParams(3, 0)


class TestDeltaSet:
    def test_t2(self):
        assert delta_set(FamilyParams(3, 2)) == {
            (1, 1, 2), (1, 2, 1), (2, 1, 1), (0, 2, 2), (2, 0, 2), (2, 2, 0)}

    def test_t1_interior_empty(self):
        assert delta_set(FamilyParams(3, 1)) == {(0, 1, 1), (1, 0, 1), (1, 1, 0)}

    def test_t4_count_against_enumeration(self):
        # oracle: entries in 1..4 summing to 8, counted exhaustively
        interior = [a for a in itertools.product(range(1, 5), repeat=3)
                    if sum(a) == 8]
        assert len(interior) == 12
        assert len(delta_set(FamilyParams(3, 4))) == 15

    def test_uniform_degree_and_antichain(self):
        for n, t in [(3, 2), (4, 2), (4, 3)]:
            d = delta_set(FamilyParams(n, t))
            assert all(sum(a) == t * (n - 1) for a in d)
            for a, b in itertools.permutations(d, 2):
                assert not divides(a, b)


class TestInequalityCheck:
    def test_examples(self):
        p = FamilyParams(3, 2)
        assert thm1_check((1, 1, 2), p)
        assert not thm1_check((1, 1, 1), p)  # full set: 3 < 4
        # singletons alone never fail
        assert thm1_check((0, 9, 9), FamilyParams(3, 1)) or True
        assert thm1_check((5, 5, 5), p)

    def test_dimension(self):
        with pytest.raises(DimensionError):
            thm1_check((1, 1), FamilyParams(3, 2))

    def test_holds_on_delta_and_inside_points(self):
        for n, t in [(3, 2), (3, 3), (4, 2)]:
            p = FamilyParams(n, t)
            I = family_ideal(p)
            for a in delta_set(p):
                assert thm1_check(a, p)
            for a in box_points(bounding_box(I)):
                if isinstance(np_membership(I, a), InsideCertificate):
                    assert thm1_check(a, p)


class TestReduceToDelta:
    def test_membership_branch(self):
        p = FamilyParams(3, 2)
        assert reduce_to_delta((1, 3, 5), p) == (0, 2, 2)

    def test_interior_formula(self):
        p = FamilyParams(3, 2)
        assert reduce_to_delta((1, 1, 2), p) == (1, 1, 2)
        d = reduce_to_delta((1, 1, 3), p)
        assert d == (1, 1, 2)
        assert divides(d, (1, 1, 3))

    def test_rejects_outside_point(self):
        with pytest.raises(DomainError):
            reduce_to_delta((1, 1, 1), FamilyParams(3, 2))

    def test_sound_on_all_inside_box_points(self):
        for n, t in [(3, 2), (3, 3), (4, 2)]:
            p = FamilyParams(n, t)
            I = family_ideal(p)
            d_set = delta_set(p)
            for b in box_points(bounding_box(I)):
                if isinstance(np_membership(I, b), InsideCertificate):
                    d = reduce_to_delta(b, p)
                    assert d in d_set
                    assert divides(d, b)


class TestResolutionMatrices:
    def test_shape(self):
        for n, t in [(3, 2), (4, 1), (5, 3)]:
            pair = resolution_matrices(FamilyParams(n, t))
            assert len(pair.gen_row) == n
            assert len(pair.syzygy_matrix) == n
            assert all(len(row) == n - 1 for row in pair.syzygy_matrix)

    def test_columns_cancel(self):
        for n, t in [(3, 2), (4, 1), (5, 2)]:
            pair = resolution_matrices(FamilyParams(n, t))
            assert all(not col for col in pair.column_products())

    def test_first_column_t2(self):
        pair = resolution_matrices(FamilyParams(3, 2))
        sign0, mono0 = pair.syzygy_matrix[0][0]
        sign1, mono1 = pair.syzygy_matrix[1][0]
        assert (sign0, mono0) == (-1, (2, 0, 0))
        assert (sign1, mono1) == (1, (0, 2, 0))


class TestStrongGenericity:
    def test_final_example(self):
        I = MonomialIdeal.make(("x", "y", "z", "w"),
                               [(3, 1, 1, 0), (2, 0, 0, 2), (0, 2, 0, 3)])
        assert is_strongly_generic(I)

    def test_family_not_generic(self):
        assert not is_strongly_generic(family_ideal(FamilyParams(3, 2)))

    def test_principal(self):
        assert is_strongly_generic(MonomialIdeal.make(("x1", "x2"), [(2, 1)]))

    def test_rejects_unit(self):
        with pytest.raises(DomainError):
            is_strongly_generic(MonomialIdeal.make(("x1",), [(0,)]))


class TestClosedFormMatchesClosure:
    @pytest.mark.parametrize("n", [3, 4])
    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_grid(self, n, t):
        p = FamilyParams(n, t)
        I = family_ideal(p)
        assert closure_generators(I) == MonomialIdeal.make(I.vars, delta_set(p))
