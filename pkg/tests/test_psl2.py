import math

import pytest

from src.errors import ContractViolation, DeterminantError
from src.psl2 import (
    IsometryClass,
    ProjectiveMatrix,
    classify,
    commutator,
    element_order,
    fricke_commutator_trace,
    is_involution,
    sl_order,
    translation_length,
)
from tests.conftest import make_field, mat, random_sl2


def test_determinant_is_checked(q5):
    with pytest.raises(DeterminantError):
        mat(q5, [["1", "1"], ["1", "1"]])
    with pytest.raises(DeterminantError):
        mat(q5, [["1", "0"]])


def test_equality_is_up_to_sign(q5):
    A = mat(q5, [["2", "1"], ["1", "1"]])
    assert A == -A
    assert hash(A) == hash(-A)
    assert A.canonical().equals_exactly((-A).canonical())
    assert A != mat(q5, [["1", "1"], ["0", "1"]])


def test_diagonal_and_inverse(q5):
    D = ProjectiveMatrix.diagonal(q5.pi)
    assert (D * D.inverse()).is_sl_identity()
    assert repr(D) == "[[5, 0], [0, 1/5]]"
    assert (D**-2).rows() == (("1/25", "0"), ("0", "25"))


def test_translation_length_and_classify(q5, f5):
    assert translation_length(ProjectiveMatrix.diagonal(q5.pi)) == 2
    assert translation_length(ProjectiveMatrix.diagonal(q5.pi**3)) == 6
    assert translation_length(mat(q5, [["0", "-1"], ["1", "0"]])) == 0
    assert classify(ProjectiveMatrix.diagonal(f5.t**-1)) == IsometryClass("hyperbolic", 2)
    assert classify(mat(f5, [["1", "t"], ["0", "1"]])) == IsometryClass("elliptic", 0)
    with pytest.raises(ValueError):
        IsometryClass("elliptic", 2)
    with pytest.raises(ValueError):
        IsometryClass("hyperbolic", 3)


@pytest.mark.parametrize(
    "rows, order, sl",
    [
        ([["1", "0"], ["0", "1"]], 1, 1),
        ([["0", "-1"], ["1", "0"]], 2, 4),
        ([["0", "-1"], ["1", "1"]], 3, 6),
        ([["0", "-1"], ["1", "-1"]], 3, 3),
        ([["1", "2"], ["0", "1"]], math.inf, math.inf),
    ],
)
def test_element_orders_over_q5(q5, rows, order, sl):
    A = mat(q5, rows)
    assert element_order(A) == order
    assert sl_order(A) == sl


def test_unipotent_has_infinite_order_in_characteristic_zero(q2):
    assert element_order(mat(q2, [["1", "2"], ["0", "1"]])) == math.inf


def test_unipotent_has_order_p_in_characteristic_p(f3):
    assert element_order(mat(f3, [["1", "1"], ["0", "1"]])) == 3


def test_order_over_extension():
    F = make_field("padic", 7, ext={"d": "2"})
    A = mat(F, [["0", "-1"], ["1", "s"]])
    assert element_order(A) == 4
    assert sl_order(A) == 8


def test_is_involution(q5):
    assert is_involution(mat(q5, [["0", "-1"], ["1", "0"]]))
    assert not is_involution(mat(q5, [["0", "-1"], ["1", "1"]]))
    with pytest.raises(ContractViolation):
        is_involution(ProjectiveMatrix.identity(q5))


@pytest.mark.parametrize("kind, p", [("padic", 2), ("padic", 3), ("padic", 5)])
def test_trace_identities_on_random_pairs(rng, kind, p):
    field = make_field(kind, p)
    for _ in range(350):
        X = random_sl2(field, rng)
        Y = random_sl2(field, rng)
        tx, ty, txy = X.trace(), Y.trace(), (X * Y).trace()
        # tr X tr Y = tr XY + tr XY^-1 holds for the chosen SL_2 representatives
        assert tx * ty == txy + (X * Y.inverse()).trace()
        assert commutator(X, Y).trace() == fricke_commutator_trace(tx, ty, txy)
        assert translation_length(X * Y) == translation_length(Y * X)
        assert translation_length(X) == translation_length(X.inverse())


def test_trace_identities_over_laurent(rng, f5):
    for _ in range(60):
        X = random_sl2(f5, rng)
        Y = random_sl2(f5, rng)
        tx, ty, txy = X.trace(), Y.trace(), (X * Y).trace()
        assert commutator(X, Y).trace() == fricke_commutator_trace(tx, ty, txy)


def test_length_is_conjugation_invariant(rng, q3):
    C = mat(q3, [["1", "1"], ["0", "1"]])
    for _ in range(50):
        X = random_sl2(q3, rng)
        assert translation_length(C * X * C.inverse()) == translation_length(X)


def test_trace_sum_identity_on_a_thousand_pairs(rng):
    fields = [make_field("padic", 3), make_field("padic", 7), make_field("laurent", 5)]
    for i in range(1200):
        field = fields[i % len(fields)]
        X = random_sl2(field, rng)
        Y = random_sl2(field, rng)
        assert X.trace() * Y.trace() == (X * Y).trace() + (X * Y.inverse()).trace()


@pytest.mark.parametrize("kind, p", [("padic", 3), ("padic", 5), ("laurent", 5)])
def test_length_of_powers_is_linear(rng, kind, p):
    field = make_field(kind, p)
    for _ in range(40):
        X = random_sl2(field, rng)
        length = translation_length(X)
        power = X
        for n in range(1, 6):
            assert translation_length(power) == n * length
            power = power * X
