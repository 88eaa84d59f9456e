import pytest

from src.errors import ClassificationError
from src.examples import ExampleSpec, companion, make_example, trace_for_psl_order
from src.examples.menu import cyclic_orders
from src.groupkit import (
    FiniteGroupId,
    closure_with_cap,
    cyclic_admissible,
    default_cap,
    element_orders,
    find_double_involution,
    finite_group_admissible,
    identify_finite_group,
)
from src.psl2 import ProjectiveMatrix, element_order
from tests.conftest import make_field, mat


def test_default_cap():
    assert default_cap(5) == 61
    assert default_cap(64) == 66


def test_closure_of_a_single_involution(q5):
    J = mat(q5, [["0", "-1"], ["1", "0"]])
    result = closure_with_cap([J])
    assert result.is_finite
    assert result.order == 2
    assert result.word(J) == "A"
    assert identify_finite_group(result.elements) == FiniteGroupId("C", 2)


def test_modular_pair_exceeds_the_cap_quickly(q5):
    S = mat(q5, [["0", "-1"], ["1", "0"]])
    T = mat(q5, [["0", "-1"], ["1", "1"]])
    result = closure_with_cap([S, T])
    assert not result.is_finite
    assert result.order is None
    assert result.steps <= 200


def test_closure_rejects_bad_arguments(q5):
    with pytest.raises(ValueError):
        closure_with_cap([])
    with pytest.raises(ValueError):
        closure_with_cap([ProjectiveMatrix.identity(q5)], cap=0)


@pytest.mark.parametrize(
    "config, group, order",
    [
        ({"kind": "padic", "p": 7}, "D3", 6),
        ({"kind": "padic", "p": 5}, "D2", 4),
        ({"kind": "padic", "p": 5}, "A4", 12),
        ({"kind": "padic", "p": 7}, "C4", 4),
        ({"kind": "laurent", "p": 3, "f": 2}, "D5", 10),
        ({"kind": "laurent", "p": 7}, "S4", 24),
    ],
)
def test_triangle_pairs_generate_the_named_group(config, group, order):
    field = make_field(**config)
    example = make_example(ExampleSpec("a", field.config, group, group=group))
    A, B, _ = example
    result = closure_with_cap([A, B])
    assert result.order == order
    assert str(identify_finite_group(result.elements)) == group


def test_element_order_multisets(q5):
    example = make_example(ExampleSpec("a", q5.config, "A4", group="A4"))
    A, B, _ = example
    elements = closure_with_cap([A, B]).elements
    assert element_orders(elements) == {1: 1, 2: 3, 3: 8}


def test_identify_rejects_sets_that_are_not_groups(q5):
    J = mat(q5, [["0", "-1"], ["1", "0"]])
    with pytest.raises(ClassificationError):
        identify_finite_group([J])
    with pytest.raises(ClassificationError):
        identify_finite_group([ProjectiveMatrix.identity(q5), J, J])
    T = mat(q5, [["0", "-1"], ["1", "1"]])
    with pytest.raises(ClassificationError):
        identify_finite_group([ProjectiveMatrix.identity(q5), J, T])


def test_finite_group_names_roundtrip():
    for name in ("C1", "C6", "D2", "D5", "A4", "S4", "A5"):
        assert str(FiniteGroupId.parse(name)) == name
    assert FiniteGroupId.parse("S4").order == 24
    assert FiniteGroupId.parse("D5").order == 10
    with pytest.raises(ValueError):
        FiniteGroupId.parse("Q8")
    with pytest.raises(ValueError):
        FiniteGroupId("C")


def test_admissibility_congruences(q2, q3, q5, q7, f3):
    assert not finite_group_admissible(FiniteGroupId("S4"), q5)
    assert finite_group_admissible(FiniteGroupId("S4"), q7)
    assert finite_group_admissible(FiniteGroupId("A4"), q3)
    assert not finite_group_admissible(FiniteGroupId("A4"), q2)
    assert not finite_group_admissible(FiniteGroupId("A4"), f3)
    assert finite_group_admissible(FiniteGroupId("D", 3), q2)
    assert not finite_group_admissible(FiniteGroupId("D", 3), make_field("laurent", 2))
    assert finite_group_admissible(FiniteGroupId("A5"), make_field("padic", 11))
    assert cyclic_admissible(3, q2)
    assert cyclic_admissible(3, q3)
    assert not cyclic_admissible(3, f3)
    assert not cyclic_admissible(4, q5)
    assert cyclic_admissible(3, make_field("laurent", 2, 2))


def test_double_involution_exists_only_for_the_amalgam(q5):
    g_example = make_example(ExampleSpec("g", q5.config, "D3 *_C2 D2", n=2, group="D3"))
    f_example = make_example(ExampleSpec("f", q5.config, "HNN(D3)", n=2, group="D3"))
    for example, found in ((g_example, True), (f_example, False)):
        A, B, _ = example
        G0 = closure_with_cap([A, B * A * B.inverse()])
        assert G0.order == 6
        assert (find_double_involution(G0.elements, B) is not None) == found


@pytest.mark.parametrize(
    "config, group",
    [({"kind": "padic", "p": 5}, "A4"), ({"kind": "padic", "p": 7}, "D3"), ({"kind": "laurent", "p": 7}, "S4")],
)
def test_closure_of_a_finite_group_is_idempotent(config, group):
    field = make_field(**config)
    A, B, _ = make_example(ExampleSpec("a", field.config, group, group=group))
    first = closure_with_cap([A, B])
    again = closure_with_cap(list(first.elements))
    assert again.is_finite
    assert again.elements == first.elements


@pytest.mark.parametrize(
    "config",
    [{"kind": "padic", "p": 5}, {"kind": "padic", "p": 7}, {"kind": "padic", "p": 13}, {"kind": "laurent", "p": 3, "f": 2}],
)
def test_cyclic_closure_is_identified_by_the_element_order(config):
    field = make_field(**config)
    seen = 0
    for n in cyclic_orders(field):
        trace = trace_for_psl_order(field, n)
        if trace is None or trace.d is not None:
            continue
        A = companion(trace.value(field))
        result = closure_with_cap([A])
        assert result.order == element_order(A) == n
        assert identify_finite_group(result.elements) == FiniteGroupId("C", n)
        seen += 1
    assert seen
