from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
import randgen
from qsem.errors import BivalenceError, DimensionError, UndefinedWeakValueError, ZeroVectorError
from qsem.exact import ExactVector, Scalar, inner_product
from qsem.projector import Projector, from_ket, negate, tensor
from qsem.semantics import (
    FALSE,
    GAP,
    TRUE,
    ClassicalFalse,
    ClassicalTrue,
    Degree,
    Gap,
    SemanticsKind,
    State,
    Weak,
    bivalent,
    born_degree,
    evaluate,
    many_valued,
    probability_bridge_check,
    supervaluate,
    weak_value,
    weak_valued,
)

O, N = ExactVector([1, 0]), ExactVector([0, 1])
D1 = ExactVector([1, -1])
P_OA, P_NA = from_ket(O), from_ket(N)
P_O = tensor(P_OA, P_OA)
P_D1 = tensor(from_ket(D1), from_ket(D1))
P_NN = tensor(P_NA, P_NA)
PSI_NOT_O = State(ExactVector([0, 1, 1, 1]), "psi_notO")
PSI_D1 = State(ExactVector([1, -1, -1, 1]), "psi_D1")


class TestTruthValues:
    def test_degree_interior_only(self):
        assert Degree(Fraction(1, 12)).value == Fraction(1, 12)
        for bad in (0, 1, Fraction(3, 2), -1):
            with pytest.raises(ValueError):
                Degree(bad)

    def test_weak_unrestricted(self):
        assert Weak(-1).value == -1
        assert Weak(Scalar(2, 1)).value_text() == "2+1i"

    def test_text(self):
        assert str(Degree(Fraction(1, 4))) == "Degree(1/4)"
        assert [TRUE.value_text(), FALSE.value_text(), GAP.value_text()] == ["1", "0", None]
        assert str(Weak(Fraction(-1, 3))) == "Weak(-1/3)"

    def test_equality(self):
        assert ClassicalTrue() == TRUE
        assert Degree(Fraction(1, 2)) == Degree(Fraction(2, 4))
        assert Weak(1) != Weak(0)


class TestState:
    def test_zero_rejected(self):
        with pytest.raises(ZeroVectorError):
            State(ExactVector([0, 0]))

    def test_label_not_compared(self):
        assert State(O, "a") == State(O, "b")


class TestSupervaluate:
    def test_overlap_false_initially(self):
        assert supervaluate(P_O, PSI_NOT_O) == FALSE

    def test_click_true_after(self):
        assert supervaluate(P_D1, PSI_D1) == TRUE

    def test_gaps(self):
        assert supervaluate(P_D1, PSI_NOT_O) == GAP
        assert supervaluate(P_O, PSI_D1) == GAP

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            supervaluate(P_OA, PSI_D1)


class TestBivalent:
    def test_defined_on_eigenstates(self):
        assert bivalent(P_O, PSI_NOT_O) == FALSE

    def test_fails_on_gap(self):
        with pytest.raises(BivalenceError, match="no bivalent truth value"):
            bivalent(P_D1, PSI_NOT_O)


class TestBornDegree:
    def test_hardy_degrees(self):
        assert born_degree(P_D1, PSI_NOT_O) == Fraction(1, 12)
        assert born_degree(P_O, PSI_D1) == Fraction(1, 4)

    def test_identity(self):
        assert born_degree(Projector.identity(4), PSI_NOT_O) == 1

    def test_returns_plain_fraction(self):
        d = born_degree(P_D1, PSI_NOT_O)
        assert type(d) is Fraction and type(d.numerator) is int


class TestManyValued:
    def test_values(self):
        assert many_valued(P_D1, PSI_NOT_O) == Degree(Fraction(1, 12))
        assert many_valued(P_O, PSI_NOT_O) == FALSE
        assert many_valued(P_D1, PSI_D1) == TRUE


class TestWeak:
    def test_hardy_weak_values(self):
        assert weak_value(P_D1, PSI_NOT_O, PSI_D1) == 1
        assert weak_value(P_O, PSI_D1, PSI_NOT_O) == 0

    def test_negative_weak_value(self):
        assert weak_value(P_NN, PSI_NOT_O, PSI_D1) == -1

    def test_negative_agrees_with_float_oracle(self):
        arms, pre, post, _ = oracles.float_hardy()
        w = oracles.float_weak_value(np.kron(arms["N"], arms["N"]), pre, post)
        assert abs(w - (-1)) < 1e-12

    def test_orthogonal_pre_post(self):
        with pytest.raises(UndefinedWeakValueError, match="orthogonal"):
            weak_value(P_OA, State(O), State(N))
        with pytest.raises(UndefinedWeakValueError):
            weak_valued(P_OA, State(O), State(N))

    def test_weak_valued_dispatch(self):
        assert weak_valued(P_O, PSI_NOT_O, PSI_D1) == FALSE
        assert weak_valued(P_D1, PSI_NOT_O, PSI_D1) == Weak(1)
        assert weak_valued(P_O, PSI_D1, PSI_NOT_O) == Weak(0)


class TestBridge:
    def test_cases(self):
        assert probability_bridge_check(P_O, PSI_NOT_O)
        assert probability_bridge_check(P_D1, PSI_NOT_O)
        assert probability_bridge_check(Projector.identity(4), PSI_D1)


class TestEvaluate:
    def test_dispatch(self):
        assert evaluate(SemanticsKind.MANY_VALUED, P_O, PSI_D1) == Degree(Fraction(1, 4))
        assert evaluate(SemanticsKind.WEAK, P_D1, PSI_NOT_O, PSI_D1) == Weak(1)

    def test_post_rules(self):
        with pytest.raises(ValueError):
            evaluate(SemanticsKind.WEAK, P_D1, PSI_NOT_O)
        with pytest.raises(ValueError):
            evaluate(SemanticsKind.SUPERVALUATIONIST, P_D1, PSI_NOT_O, PSI_D1)


# -- properties ---------------------------------------------------------------


def _case(rnd, complex_=None):
    rint = rnd.randint
    if complex_ is None:
        complex_ = rnd.random() < 0.5
    dim = rint(2, 8)
    basis = randgen.orthogonal_basis(rint, dim, complex_)
    p = randgen.projector(rint, dim, complex_, basis=basis)
    psi = State(randgen.vector(rint, dim, complex_))
    return rint, dim, basis, p, psi


@settings(max_examples=150)
@given(st.randoms(use_true_random=False))
def test_bridge_biconditional(rnd):
    _, _, _, p, psi = _case(rnd)
    v, d = supervaluate(p, psi), born_degree(p, psi)
    assert 0 <= d <= 1
    assert isinstance(v, Gap) == (0 < d < 1)
    assert isinstance(v, ClassicalTrue) == (d == 1)
    assert isinstance(v, ClassicalFalse) == (d == 0)
    assert probability_bridge_check(p, psi)


@settings(max_examples=100)
@given(st.randoms(use_true_random=False))
def test_eigenstates_hit_both_branches(rnd):
    rint, dim, basis, p, _ = _case(rnd)
    k = p.rank
    if 0 < k:
        assert supervaluate(p, State(basis[0])) == TRUE
    if k < dim:
        assert supervaluate(p, State(basis[-1])) == FALSE


@settings(max_examples=50)
@given(st.randoms(use_true_random=False))
def test_super_truth_and_falsity(rnd):
    rint = rnd.randint
    dim = rint(1, 8)
    psi = State(randgen.vector(rint, dim, complex_=True))
    assert supervaluate(Projector.identity(dim), psi) == TRUE
    assert supervaluate(Projector.zero(dim), psi) == FALSE


@settings(max_examples=100)
@given(st.randoms(use_true_random=False))
def test_weak_equals_born_without_post_selection(rnd):
    _, _, _, p, psi = _case(rnd)
    assert weak_value(p, psi, psi) == born_degree(p, psi)


@settings(max_examples=100)
@given(st.randoms(use_true_random=False))
def test_weak_eigenstate_reduction(rnd):
    rint, dim, basis, p, _ = _case(rnd)
    phi = State(randgen.vector(rint, dim, True))
    if p.rank > 0:
        pre = State(basis[0])
        assume(not inner_product(phi.vector, pre.vector).is_zero())
        assert weak_value(p, pre, phi) == 1
    if p.rank < dim:
        pre = State(basis[-1])
        assume(not inner_product(phi.vector, pre.vector).is_zero())
        assert weak_value(p, pre, phi) == 0


@settings(max_examples=100)
@given(st.randoms(use_true_random=False))
def test_weak_additivity(rnd):
    rint, dim, basis, _, psi = _case(rnd)
    phi = State(randgen.vector(rint, dim, True))
    assume(not inner_product(phi.vector, psi.vector).is_zero())
    total = sum((weak_value(from_ket(b), psi, phi) for b in basis), Scalar(0))
    assert total == 1


@settings(max_examples=100)
@given(st.randoms(use_true_random=False))
def test_scale_invariance(rnd):
    rint, dim, _, p, psi = _case(rnd)
    phi = State(randgen.vector(rint, dim, True))
    a = randgen.nonzero_scalar(rint, complex_=True)
    b = randgen.nonzero_scalar(rint, complex_=True)
    psi2, phi2 = psi.scaled(a), phi.scaled(b)
    assert supervaluate(p, psi) == supervaluate(p, psi2)
    assert born_degree(p, psi) == born_degree(p, psi2)
    assert many_valued(p, psi) == many_valued(p, psi2)
    assert probability_bridge_check(p, psi2)
    if not inner_product(phi.vector, psi.vector).is_zero():
        assert weak_value(p, psi, phi) == weak_value(p, psi2, phi2)
        assert weak_valued(p, psi, phi) == weak_valued(p, psi2, phi2)


@settings(max_examples=60)
@given(st.randoms(use_true_random=False))
def test_born_degree_matches_float_oracle(rnd):
    _, _, _, p, psi = _case(rnd)
    expected = oracles.float_born(oracles.to_numpy(p.matrix), oracles.to_numpy(psi.vector))
    assert abs(float(born_degree(p, psi)) - expected) < 1e-9


def test_negation_complements_degree():
    for p in (P_O, P_D1, P_NN):
        for psi in (PSI_NOT_O, PSI_D1):
            assert born_degree(p, psi) + born_degree(negate(p), psi) == 1
