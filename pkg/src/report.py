"""Text and machine renderings of a Verdict.

The machine rendering is a block of `key: value` lines followed by a `json:` line
and the JSON form of `Verdict.to_dict()`; docs/OUTPUT_FORMAT.md describes it.
"""

import json
from typing import Dict, List

from src.decide import Verdict
from src.errors import ParseError
from src.localfield import LocalField

JSON_MARKER = "json:"


def render_text(verdict: Verdict, field: LocalField) -> str:
    X, Y = verdict.reduced_pair
    lines: List[str] = [verdict.render()]
    if verdict.isomorphism is not None:
        lines.append(f"isomorphism: {verdict.isomorphism}")
    lines.append(f"field: {field}")
    lines.append("reduced pair:")
    lines.append(f"  X = {X!r}")
    lines.append(f"  Y = {Y!r}")
    lines.append("steps:")
    lines.extend(f"  {step}" for step in verdict.step_trace)
    if verdict.caveats:
        lines.append("caveats:")
        lines.extend(f"  - {c}" for c in verdict.caveats)
    return "\n".join(lines)


def render_machine(verdict: Verdict) -> str:
    failing = verdict.failing_step
    keys = {
        "verdict": verdict.render(),
        "discrete": "true" if verdict.discrete else "false",
        "case": verdict.case or "-",
        "isomorphism": str(verdict.isomorphism) if verdict.isomorphism else "-",
        "failing_step": "-" if failing is None else str(failing),
        "steps": str(len(verdict.step_trace)),
    }
    lines = [f"{k}: {v}" for k, v in keys.items()]
    lines.append(JSON_MARKER)
    lines.append(json.dumps(verdict.to_dict(), indent=2, ensure_ascii=False))
    return "\n".join(lines)


def parse_machine(text: str, field: LocalField) -> Verdict:
    """Inverse of render_machine; the key lines must agree with the JSON block."""
    head, sep, body = text.partition("\n" + JSON_MARKER + "\n")
    if not sep:
        raise ParseError(f"machine report has no {JSON_MARKER!r} line")
    keys: Dict[str, str] = {}
    for line in head.splitlines():
        key, colon, value = line.partition(": ")
        if not colon:
            raise ParseError("expected 'key: value'", line, 0)
        keys[key] = value
    try:
        data = json.loads(body)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON block: {exc}") from exc
    verdict = Verdict.from_dict(data, field)
    if keys.get("verdict") != verdict.render():
        raise ParseError(f"key line verdict {keys.get('verdict')!r} disagrees with the JSON block")
    return verdict
