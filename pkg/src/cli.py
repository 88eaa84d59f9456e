import argparse
import json
import logging
import math
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from src.btree import (
    axis_intersection,
    axis_vertices,
    ball,
    ball_graph,
    brute_force_fixed_at_distance,
    displacement_oracle,
    dump_dot,
    fix_ax_intersection,
    fix_shape,
    fixed_vertices,
)
from src.decide import analyze_element, decide
from src.document import InputDocument
from src.errors import ContractViolation, ExampleUnavailable, NonArchError
from src.examples import congruence_menu, generate_specs, make_example
from src.localfield import FieldConfig, get_field
from src.psl2 import ProjectiveMatrix, element_order, is_hyperbolic, translation_length
from src.report import render_machine, render_text

logger = logging.getLogger(__name__)


def _load(args) -> InputDocument:
    doc = InputDocument.load(args.document)
    logger.debug("loaded %s over %s", args.document, doc.field.label)
    return doc.with_overrides(
        radius=getattr(args, "radius", None),
        cap=getattr(args, "cap", None),
        precision=args.precision,
    )


def cmd_decide(args) -> int:
    doc = _load(args)
    A, B = doc.matrices()
    if B is None:
        raise ValueError("decide needs both matrices A and B")
    verdict = decide(A, B, cap=doc.options.cap)
    if args.format == "machine":
        print(render_machine(verdict))
    else:
        print(render_text(verdict, doc.local_field()))
    return 0


def cmd_analyze(args) -> int:
    doc = _load(args)
    A, B = doc.matrices()
    reports = [analyze_element(A, "A")]
    if B is not None:
        reports.append(analyze_element(B, "B"))
        reports.append(analyze_element(A * B, "AB"))
    if args.format == "machine":
        print(json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False))
        return 0
    print(f"field: {doc.local_field()}")
    for report in reports:
        for line in report.lines():
            print(line)
    return 0


def _field_from_args(args) -> FieldConfig:
    data = {"kind": args.kind, "p": args.p, "f": args.f}
    if args.precision is not None:
        data["hensel_precision"] = args.precision
    return FieldConfig.model_validate(data)


def cmd_make_example(args) -> int:
    field = get_field(_field_from_args(args))
    if args.list:
        for line in congruence_menu(field).lines():
            print(line)
        return 0
    if args.case is None:
        raise ValueError("--case is required unless --list is given")

    candidates = [s for s in generate_specs(field) if s.case == args.case]
    for attr in ("n", "m", "group"):
        wanted = getattr(args, attr)
        if wanted is not None:
            candidates = [s for s in candidates if getattr(s, attr) == wanted]
    if not candidates:
        raise ExampleUnavailable(f"case ({args.case}) with these parameters is not admitted for q = {field.q}")
    spec = candidates[0]

    example = make_example(spec)
    doc = InputDocument.model_validate(example.document())
    text = f"# {spec.label}\n# expected: {example.expected.render()} {spec.expected}\n" + doc.dump()
    if args.output:
        path = Path(args.output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        print(f"Wrote {spec.label} to {path}")
    else:
        print(text, end="")
    return 0


def _oracle_lines(M: ProjectiveMatrix, name: str, radius: int):
    result = displacement_oracle(M, radius)
    formula = translation_length(M)
    status = "stable" if result.stable else "lower bound"
    mark = "✓" if result.stable and result.value == formula else "✗"
    yield f"{name}: displacement {result.value} ({status} at radius {result.radius}), formula l = {formula} {mark}"
    if is_hyperbolic(M):
        return
    n = element_order(M)
    if n == math.inf or n == 1:
        return
    try:
        shape = fix_shape(M)
    except ContractViolation as exc:
        yield f"  Fix: {exc}"
        return
    counts = [brute_force_fixed_at_distance(M, k) for k in range(1, min(radius, 3) + 1)]
    yield f"  Fix shape: {shape}; fixed vertices at distance 1..{len(counts)}: {counts}"


def cmd_oracle(args) -> int:
    doc = _load(args)
    A, B = doc.matrices()
    radius = doc.options.radius
    field = doc.local_field()
    print(f"field: {field}, radius {radius}")
    for line in _oracle_lines(A, "A", radius):
        print(line)
    if B is not None:
        for line in _oracle_lines(B, "B", radius):
            print(line)
        if is_hyperbolic(A) and is_hyperbolic(B):
            inter = axis_intersection(A, B, radius)
            print(f"Ax(A) cap Ax(B): {inter.kind}" + (f", length {inter.length}" if inter.length is not None else ""))
        elif is_hyperbolic(B) and element_order(A) not in (1, math.inf):
            inter = fix_ax_intersection(A, B, radius)
            print(f"Fix(A) cap Ax(B): {inter.kind}" + (f", length {inter.length}" if inter.length is not None else ""))

    if args.dot:
        probe = ball(field, radius)
        fixed = fixed_vertices(A, radius) if not is_hyperbolic(A) else frozenset()
        axis = axis_vertices(B, radius) if B is not None and is_hyperbolic(B) else frozenset()
        path = dump_dot(ball_graph(probe, field, fixed, axis), args.dot)
        print(f"Wrote {len(probe)} vertices to {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nonarch",
        description="Discreteness of two-generator subgroups of PSL_2 over non-archimedean local fields",
    )
    parser.add_argument("--verbose", action="store_true", help="Log every algorithm step")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_common(p: argparse.ArgumentParser, document: bool = True) -> argparse.ArgumentParser:
        if document:
            p.add_argument("document", type=str, help="Path to a YAML input document")
            p.add_argument("--format", choices=["text", "machine"], default="text")
        p.add_argument("--precision", type=int, default=None, help="Hensel precision override")
        return p

    p = with_common(sub.add_parser("decide", help="Run the discreteness algorithm"))
    p.add_argument("--cap", type=int, default=None, help="Closure size cap")
    p.set_defaults(handler=cmd_decide)

    p = with_common(sub.add_parser("analyze", help="Lengths, orders and classes of A, B, AB"))
    p.set_defaults(handler=cmd_analyze)

    p = with_common(sub.add_parser("oracle", help="Tree probes around the base vertex"))
    p.add_argument("--radius", type=int, default=None, help="Probe radius")
    p.add_argument("--dot", type=str, default=None, help="Write the probed ball as a DOT file")
    p.set_defaults(handler=cmd_oracle)

    p = with_common(sub.add_parser("make-example", help="Emit an input document for a case"), document=False)
    p.add_argument("--kind", choices=["padic", "laurent"], default="padic")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--f", type=int, default=1)
    p.add_argument("--case", choices=list("abcdefg"), default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--group", type=str, default=None, help="G0 or finite group name, e.g. D3, A4")
    p.add_argument("--output", type=str, default=None)
    p.add_argument("--list", action="store_true", help="Print the congruence menu for q")
    p.set_defaults(handler=cmd_make_example)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.handler(args)
    except NonArchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"invalid document: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
