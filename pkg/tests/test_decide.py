import pytest

from src.decide import NON_QP_CAVEAT, Isomorphism, Verdict, analyze_element, decide, reduce_hyperbolic_pair
from src.errors import ContractViolation
from src.examples import ExampleSpec, make_example, realizable_examples
from src.psl2 import ProjectiveMatrix, conjugate
from src.report import parse_machine, render_machine, render_text
from tests.conftest import make_field, mat, random_sl2


def _modular_pair(field):
    return mat(field, [["0", "-1"], ["1", "0"]]), mat(field, [["0", "-1"], ["1", "1"]])


def test_modular_pair_is_not_discrete_over_q5(q5):
    verdict = decide(*_modular_pair(q5))
    assert not verdict.discrete
    assert verdict.render() == "false"
    assert verdict.failing_step == 7
    assert verdict.caveats == ()


def test_unipotent_pair_fails_at_the_order_check(q2):
    A = mat(q2, [["1", "2"], ["0", "1"]])
    B = mat(q2, [["1", "0"], ["2", "1"]])
    verdict = decide(A, B)
    assert verdict.render() == "false"
    assert verdict.failing_step == 5


def test_free_pair(q5):
    pi = q5.pi
    X = ProjectiveMatrix.diagonal(pi)
    g = ProjectiveMatrix(1 + pi**-2, pi**-1, pi**-1, q5.one)
    verdict = decide(X, g * X * g.inverse())
    assert verdict.render() == "true:case (b)"
    assert verdict.isomorphism == Isomorphism("free-rank-2")
    assert [s.step for s in verdict.step_trace] == [1, 4]


def test_reduction_shortens_until_elliptic(q5):
    X = ProjectiveMatrix.diagonal(q5.pi)
    U = mat(q5, [["1", "0"], ["1", "1"]])
    reduction = reduce_hyperbolic_pair(X, X * U)
    assert reduction.exit == "elliptic"
    assert reduction.X == U
    assert reduction.Y == X
    assert [m.step for m in reduction.moves] == [4, 3]


def test_identity_and_translation_give_z(q5):
    verdict = decide(ProjectiveMatrix.identity(q5), ProjectiveMatrix.diagonal(q5.pi**-1))
    assert verdict.render() == "true:case (e)"
    assert str(verdict.isomorphism) == "Z"


def test_decide_is_deterministic(q5):
    example = make_example(ExampleSpec("f", q5.config, "HNN(D3)", n=2, group="D3"))
    A, B, _ = example
    first, second = decide(A, B), decide(A, B)
    assert first.to_dict() == second.to_dict()
    assert first.render() == "true:case (f)"
    assert str(first.isomorphism) == "HNN(D3)"


def test_order_p_elements_break_the_contract_over_laurent(f3):
    A = mat(f3, [["0", "-1"], ["1", "-1"]])
    B = ProjectiveMatrix.diagonal(f3.t)
    with pytest.raises(ContractViolation):
        decide(A, B)


def test_laurent_verdicts_carry_the_caveat(f5):
    J = mat(f5, [["0", "-1"], ["1", "0"]])
    verdict = decide(J, ProjectiveMatrix.diagonal(f5.t))
    assert verdict.render() == "true:case (c)"
    assert NON_QP_CAVEAT in verdict.caveats


def test_generators_must_share_a_field(q5, q7):
    with pytest.raises(ContractViolation):
        decide(ProjectiveMatrix.identity(q5), ProjectiveMatrix.identity(q7))


def _corpus():
    pairs = []
    for p in (5, 7):
        field = make_field("padic", p)
        pairs.extend((ex.A, ex.B) for ex in realizable_examples(field))
        pairs.append(_modular_pair(field))
    return pairs


@pytest.mark.slow
def test_verdicts_are_swap_and_conjugation_invariant(rng):
    pairs = _corpus()
    assert len(pairs) >= 20
    for A, B in pairs:
        verdict = decide(A, B)
        swapped = decide(B, A)
        assert swapped.discrete == verdict.discrete
        assert swapped.case == verdict.case
        for _ in range(3):
            C = random_sl2(A.field, rng, -1, 1)
            moved = decide(conjugate(A, C), conjugate(B, C))
            assert moved.render() == verdict.render()
            assert moved.isomorphism == verdict.isomorphism


def test_machine_rendering_roundtrip(q5):
    example = make_example(ExampleSpec("c", q5.config, "C2 * C3", n=2, m=3))
    verdict = decide(example.A, example.B)
    parsed = parse_machine(render_machine(verdict), example.field)
    assert isinstance(parsed, Verdict)
    assert parsed.render() == verdict.render()
    assert parsed.isomorphism == verdict.isomorphism
    assert parsed.reduced_pair == verdict.reduced_pair
    assert [str(s) for s in parsed.step_trace] == [str(s) for s in verdict.step_trace]


def test_text_rendering_starts_with_the_verdict(q5):
    verdict = decide(*_modular_pair(q5))
    text = render_text(verdict, q5)
    lines = text.splitlines()
    assert lines[0] == "false"
    assert "field: Q_5" in lines
    assert any(line.startswith("  (7)") for line in lines)


def test_verdict_invariants(q5):
    pair = _modular_pair(q5)
    with pytest.raises(ValueError):
        Verdict(True, None, None, pair)
    with pytest.raises(ValueError):
        Verdict(True, "h", None, pair)


@pytest.mark.parametrize(
    "text",
    ["F2", "Z", "C3 x Z", "C2 * Z", "C2 * C3", "HNN(A4)", "S4 *_C4 D4", "A5"],
)
def test_isomorphism_names_roundtrip(text):
    assert str(Isomorphism.parse(text)) == text


def test_analyze_element(q5):
    report = analyze_element(ProjectiveMatrix.diagonal(q5.pi), "B")
    assert report.isometry == "hyperbolic"
    assert report.length == 2
    assert report.order is None
    J = analyze_element(mat(q5, [["0", "-1"], ["1", "0"]]))
    assert J.order == 2
    assert J.sl_order == 4
    assert J.fix_shape == "bi-infinite-ray"
    assert J.trace_valuation is None
    assert list(J.lines())[0] == "A: elliptic, l = 0, order = 2"


def test_infinite_order_elliptic_y_fails_at_step_7(q5):
    X = mat(q5, [["0", "-1"], ["1", "0"]])
    U = mat(q5, [["1", "1"], ["0", "1"]])
    verdict = decide(X, U)
    assert verdict.render() == "false"
    assert verdict.failing_step == 7
