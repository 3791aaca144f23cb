from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from symdefect import oracle
from symdefect.reps import (
    GradedIrrep,
    GradedRep,
    Sign,
    UngradedRep,
    bar_sum_graded,
    bar_tensor_graded,
    closed_form_tensor_defect,
    closed_form_wedge2_defect,
    defect,
    dual,
    irrep,
    irrep_defect,
    tensor,
    wedge2,
)

from .strategies import graded_reps, keys, ungraded_reps


def V(lam, w):
    return irrep(lam, w)


class TestTypes:
    def test_sign_parsing(self):
        assert Sign.of("+") is Sign.PLUS
        assert Sign.of(-1) is Sign.MINUS
        with pytest.raises(ValueError):
            Sign.of("x")
        with pytest.raises(ValueError):
            Sign.of(0)

    def test_irrep_dims(self):
        k = GradedIrrep(3, "+")
        assert (k.dim, k.dim_even, k.dim_odd) == (4, 2, 2)
        k = GradedIrrep(2, "-")
        assert (k.dim, k.dim_even, k.dim_odd) == (3, 1, 2)
        assert repr(GradedIrrep(0, 1)) == "V(0,+)"

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            GradedIrrep(-1, 1)
        with pytest.raises(ValueError):
            UngradedRep.of(-2)

    def test_negative_multiplicity_rejected(self):
        with pytest.raises(ValueError):
            GradedRep({(1, 1): -1})

    def test_canonical_order_and_display(self):
        r = GradedRep({(1, -1): 2, (0, 1): 1, (1, 1): 1})
        assert str(r) == "V(0,+) + V(1,+) + 2*V(1,-)"
        assert str(GradedRep()) == "0"
        assert str(UngradedRep.of(1, 0, 0)) == "2*V(0) + V(1)"

    def test_equality_and_hash(self):
        a = GradedRep.of((2, 1), (0, -1))
        b = GradedRep({(0, -1): 1, (2, 1): 1})
        assert a == b and hash(a) == hash(b)
        assert a != GradedRep.of((2, 1))

    def test_counts_round_trip(self):
        r = GradedRep({(3, 1): 2, (0, -1): 1})
        assert GradedRep.from_counts(r.to_counts()) == r

    def test_scalar_multiple(self):
        r = V(1, 1) + V(0, -1)
        assert 3 * r == GradedRep({(1, 1): 3, (0, -1): 3})


class TestIrrepDefect:
    @pytest.mark.parametrize("lam", range(11))
    def test_plus_and_minus(self, lam):
        assert irrep_defect(lam, 1) == lam // 2
        assert irrep_defect(lam, -1) == -(lam // 2) - 1

    @pytest.mark.parametrize("lam", range(9))
    @pytest.mark.parametrize("w", [1, -1])
    def test_matches_matrix_model(self, lam, w):
        assert irrep_defect(lam, w) == oracle.oracle_defect(oracle.build_irrep(lam, w))


class TestOperations:
    def test_dual(self):
        assert dual(V(3, 1)) == V(3, -1)
        assert dual(V(2, -1)) == V(2, -1)

    def test_tensor_of_two_spin_halves(self):
        assert tensor(V(1, 1), V(1, 1)) == V(2, 1) + V(0, -1)

    def test_tensor_sign_rule(self):
        assert tensor(V(2, -1), V(1, 1)) == V(3, -1) + V(1, 1)

    def test_wedge2_irreducible(self):
        assert wedge2(V(3, 1)) == V(4, -1) + V(0, -1)
        assert wedge2(V(0, 1)) == GradedRep()
        assert wedge2(V(1, -1)) == V(0, -1)

    def test_wedge2_multiplicity(self):
        # wedge2(2V) = 2 wedge2(V) + V (x) V
        v = V(1, 1)
        assert wedge2(2 * v) == 2 * wedge2(v) + tensor(v, v)

    def test_bar_sum(self):
        assert bar_sum_graded(UngradedRep.of(2)) == V(2, 1) + V(2, -1)

    def test_bar_tensor_irreducible(self):
        assert bar_tensor_graded(UngradedRep.of(3)) == V(6, -1) + V(4, -1) + V(2, -1) + V(0, -1)

    def test_bar_tensor_distinct_summands(self):
        got = bar_tensor_graded(UngradedRep.of(1, 0))
        want = V(2, -1) + V(0, -1) + V(0, -1) + V(1, 1) + V(1, -1)
        assert got == want

    @pytest.mark.parametrize("p", [UngradedRep.of(1, 0), UngradedRep.of(0, 0), UngradedRep.of(2, 1)])
    def test_bar_constructions_match_matrix_model(self, p):
        assert bar_sum_graded(p) == oracle.decompose(oracle.build_bar_sum(p))
        assert bar_tensor_graded(p) == oracle.decompose(oracle.build_bar_tensor(p))


class TestClosedForms:
    def test_tensor_examples(self):
        assert closed_form_tensor_defect(1, 1, 1, 1) == defect(V(2, 1) + V(0, -1)) == 0
        assert closed_form_tensor_defect(2, 1, 2, 1) == 0
        assert closed_form_tensor_defect(2, 1, 2, -1) == -3

    def test_wedge2_examples(self):
        assert closed_form_wedge2_defect(3) == -4
        assert closed_form_wedge2_defect(2) == Fraction(-2)
        assert closed_form_wedge2_defect(0) == 0

    @pytest.mark.parametrize("lam", range(11))
    @pytest.mark.parametrize("w", [1, -1])
    def test_wedge2_matches_expansion(self, lam, w):
        assert closed_form_wedge2_defect(lam, w) == defect(wedge2(V(lam, w)))

    @given(keys, keys)
    def test_tensor_matches_expansion(self, a, b):
        assert closed_form_tensor_defect(*a, *b) == defect(tensor(V(*a), V(*b)))

    def test_invalid(self):
        with pytest.raises(ValueError):
            closed_form_tensor_defect(-1, 1, 0, 1)
        with pytest.raises(ValueError):
            closed_form_wedge2_defect(-1)


class TestProperties:
    @given(graded_reps())
    def test_dual_is_involution(self, r):
        assert dual(dual(r)) == r

    @given(graded_reps(), graded_reps())
    def test_tensor_commutes(self, a, b):
        assert tensor(a, b) == tensor(b, a)

    @given(graded_reps(3, 2), graded_reps(3, 2), graded_reps(3, 2))
    def test_tensor_distributes(self, a, b, c):
        assert tensor(a, b + c) == tensor(a, b) + tensor(a, c)

    @given(graded_reps(), graded_reps())
    def test_tensor_dimensions(self, a, b):
        t = tensor(a, b)
        assert t.dim == a.dim * b.dim
        assert t.dim_even == a.dim_even * b.dim_even + a.dim_odd * b.dim_odd

    @given(graded_reps(), graded_reps())
    def test_dual_of_tensor(self, a, b):
        assert dual(tensor(a, b)) == tensor(dual(a), dual(b))

    @given(graded_reps())
    def test_wedge2_dimensions(self, r):
        w = wedge2(r)
        assert w.dim == comb(r.dim, 2)
        assert w.dim_even == comb(r.dim_even, 2) + comb(r.dim_odd, 2)
        assert w.dim_odd == r.dim_even * r.dim_odd

    @given(graded_reps(3, 2), graded_reps(3, 2))
    def test_wedge2_of_sum(self, a, b):
        assert wedge2(a + b) == wedge2(a) + wedge2(b) + tensor(a, b)

    @given(graded_reps(), graded_reps())
    def test_defect_additive(self, a, b):
        assert defect(a + b) == defect(a) + defect(b)

    @given(ungraded_reps())
    def test_bar_sum_dimensions(self, p):
        g = bar_sum_graded(p)
        assert g.dim_even == g.dim_odd == p.dim
        assert defect(g) == -len(list(p))

    @given(ungraded_reps())
    def test_bar_tensor_dimensions(self, p):
        g = bar_tensor_graded(p)
        n = p.dim
        assert g.dim == n * n
        assert g.dim_even == comb(n, 2)
        assert g.dim_odd == comb(n + 1, 2)

    @given(ungraded_reps(), ungraded_reps())
    def test_bar_sum_additive(self, p, q):
        assert bar_sum_graded(p + q) == bar_sum_graded(p) + bar_sum_graded(q)

    @given(st.integers(0, 10))
    def test_bar_tensor_irreducible_defect(self, lam):
        assert 2 * defect(bar_tensor_graded(UngradedRep.of(lam))) == -(lam + 1) * (lam + 2)
