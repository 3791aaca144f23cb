"""Small worked values, each checked against the formal calculus and the matrix oracle."""

import pytest

from symdefect import oracle as O
from symdefect.linalg import ExactMatrix
from symdefect.reps import (
    GradedRep,
    UngradedRep,
    bar_sum_graded,
    bar_tensor_graded,
    closed_form_tensor_defect,
    closed_form_wedge2_defect,
    defect,
    dual,
    tensor,
    wedge2,
)
from symdefect.verify import enum_graded, enum_ungraded, GradedConstraint


def G(*pairs, **kw):
    return GradedRep({(l, w): m for l, w, m in pairs})


def model(r: GradedRep):
    return O.materialize(r)


DUALS = [
    (G((0, 1, 1)), G((0, 1, 1))),
    (G((3, 1, 1)), G((3, -1, 1))),
    (G((2, -1, 2)), G((2, -1, 2))),
]


@pytest.mark.parametrize("r, want", DUALS)
def test_dual_values(r, want):
    assert dual(r) == want == O.decompose(O.mdual(model(r)))


TENSORS = [
    (G((1, 1, 1)), G((1, 1, 1)), G((2, 1, 1), (0, -1, 1))),
    (G((2, 1, 1)), G((1, -1, 1)), G((3, -1, 1), (1, 1, 1))),
    (G((0, 1, 1)), G((3, -1, 1), (1, 1, 2)), G((3, -1, 1), (1, 1, 2))),
]


@pytest.mark.parametrize("a, b, want", TENSORS)
def test_tensor_values(a, b, want):
    assert tensor(a, b) == want == O.decompose(O.tprod(model(a), model(b)))


WEDGES = [
    (G((0, 1, 1)), GradedRep()),
    (G((3, 1, 1)), G((4, -1, 1), (0, -1, 1))),
    (G((1, 1, 2)), G((2, 1, 1), (0, -1, 3))),
    (G((4, 1, 1)), None),
]


@pytest.mark.parametrize("r, want", WEDGES)
def test_wedge2_values(r, want):
    got = O.decompose(O.mwedge2(model(r)))
    assert wedge2(r) == got
    if want is not None:
        assert got == want


DEFECTS = [
    (G((0, 1, 1)), 0),
    (G((2, -1, 1)), -2),
    (G((1, 1, 1), (1, -1, 1)), -1),
]


@pytest.mark.parametrize("r, want", DEFECTS)
def test_defect_values(r, want):
    assert defect(r) == want == O.oracle_defect(model(r))


BAR_SUMS = [
    (UngradedRep.of(0), G((0, 1, 1), (0, -1, 1))),
    (UngradedRep.of(1), G((1, 1, 1), (1, -1, 1))),
    (UngradedRep({2: 2}), G((2, 1, 2), (2, -1, 2))),
]


@pytest.mark.parametrize("p, want", BAR_SUMS)
def test_bar_sum_values(p, want):
    assert bar_sum_graded(p) == want == O.decompose(O.build_bar_sum(p))


BAR_TENSORS = [
    (UngradedRep.of(0), G((0, -1, 1))),
    (UngradedRep.of(3), G((6, -1, 1), (4, -1, 1), (2, -1, 1), (0, -1, 1))),
    (UngradedRep.of(1, 0), G((2, -1, 1), (0, -1, 2), (1, 1, 1), (1, -1, 1))),
]


@pytest.mark.parametrize("p, want", BAR_TENSORS)
def test_bar_tensor_values(p, want):
    assert bar_tensor_graded(p) == want == O.decompose(O.build_bar_tensor(p))


def test_bar_tensor_defect_value():
    assert O.oracle_defect(O.build_bar_tensor(UngradedRep.of(3))) == -10


@pytest.mark.parametrize(
    "args, want",
    [((0, 1, 0, 1), 0), ((2, 1, 2, 1), 0), ((3, 1, 1, -1), None), ((2, 1, 2, -1), None)],
)
def test_closed_tensor_values(args, want):
    l1, w1, l2, w2 = args
    m = O.tprod(O.build_irrep(l1, w1), O.build_irrep(l2, w2))
    assert closed_form_tensor_defect(*args) == O.oracle_defect(m)
    if want is not None:
        assert closed_form_tensor_defect(*args) == want


@pytest.mark.parametrize("lam, want", [(0, 0), (1, -1), (3, -4)])
@pytest.mark.parametrize("w", [1, -1])
def test_closed_wedge2_values(lam, w, want):
    assert closed_form_wedge2_defect(lam, w) == want == O.oracle_defect(O.mwedge2(O.build_irrep(lam, w)))


class TestMatrixModels:
    def test_trivial(self):
        m = O.build_irrep(0, 1)
        assert m.E.is_zero() and m.H.is_zero() and m.F.is_zero() and m.parity == (0,)

    def test_standard(self):
        m = O.build_irrep(1, 1)
        assert m.H == ExactMatrix.diag([1, -1]) and m.parity == (0, 1)

    def test_odd_highest_weight(self):
        m = O.build_irrep(2, -1).validate()
        assert m.H == ExactMatrix.diag([2, 0, -2]) and m.parity == (1, 0, 1)

    def test_direct_sum_of_lines(self):
        m = O.dsum(O.build_irrep(0, 1), O.build_irrep(0, -1))
        assert m.n == 2 and m.E.is_zero() and m.parity == (0, 1)

    def test_round_trips(self):
        assert O.decompose(O.build_irrep(5, -1)) == G((5, -1, 1))
        assert O.decompose(O.dsum(O.build_irrep(2, 1), O.build_irrep(2, 1))) == G((2, 1, 2))

    def test_defects(self):
        assert O.oracle_defect(O.build_irrep(0, 1)) == 0
        assert O.oracle_defect(O.build_irrep(2, -1)) == -2


class TestEnumerations:
    def test_ungraded(self):
        assert list(enum_ungraded(1)) == [UngradedRep.of(0)]
        assert list(enum_ungraded(2)) == [UngradedRep.of(1), UngradedRep({0: 2})]
        assert len(list(enum_ungraded(5))) == 7

    def test_graded_unconstrained(self):
        assert list(enum_graded(1)) == [G((0, 1, 1)), G((0, -1, 1))]


class TestVerifierCases:
    def test_gl_o_cases(self):
        assert defect(bar_tensor_graded(UngradedRep.of(1))) == -3
        assert defect(bar_tensor_graded(UngradedRep({0: 2}))) == -3
        assert O.oracle_defect(O.build_bar_tensor(UngradedRep({0: 2}))) == -3

    def test_o_oxo_cases(self):
        assert wedge2(G((1, 1, 1))) == G((0, -1, 1)) and defect(wedge2(G((1, 1, 1)))) == -1
        pair = G((0, 1, 1), (0, -1, 1))
        assert wedge2(pair) == G((0, -1, 1)) == O.decompose(O.mwedge2(model(pair)))

    def test_pi_pibar_cases(self):
        assert defect(bar_sum_graded(UngradedRep.of(0))) == -1
        assert defect(bar_sum_graded(UngradedRep.of(1))) == -1

    def test_gl_vv_cases(self):
        pi = G((1, 1, 1))
        prod = tensor(pi, dual(pi))
        assert prod == G((2, -1, 1), (0, 1, 1))
        assert defect(prod) == -2 == O.oracle_defect(O.tprod(model(pi), O.mdual(model(pi))))
        pair = G((0, 1, 1), (0, -1, 1))
        prod = tensor(pair, dual(pair))
        assert prod == G((0, 1, 2), (0, -1, 2))
        assert defect(prod) == -2 < 0

    def test_equal_parts_enumeration(self):
        both = GradedConstraint(require_self_dual=True, require_equal_parts=True)
        assert [r for r in enum_graded(2, both)] == [G((0, 1, 1), (0, -1, 1))]
        assert dual(G((1, 1, 1))) != G((1, 1, 1))
