"""Result types of the decision procedure."""

import re
from dataclasses import dataclass, field
from typing import Any, Dict, Literal, Optional, Tuple

from src.localfield import LocalField
from src.psl2 import ProjectiveMatrix

IsoKind = Literal[
    "finite",
    "free-rank-2",
    "free-product",
    "free-product-z",
    "direct-product-z",
    "z",
    "hnn",
    "amalgam",
]

CASES = ("a", "b", "c", "d", "e", "f", "g")


@dataclass(frozen=True)
class Isomorphism:
    """Isomorphism type of a discrete group; `factors` are finite group names such as "C2" or "A4"."""

    kind: IsoKind
    factors: Tuple[str, ...] = ()

    def __str__(self) -> str:
        f = self.factors
        if self.kind == "finite":
            return f[0]
        if self.kind == "free-rank-2":
            return "F2"
        if self.kind == "free-product":
            return f"{f[0]} * {f[1]}"
        if self.kind == "free-product-z":
            return f"{f[0]} * Z"
        if self.kind == "direct-product-z":
            return f"{f[0]} x Z"
        if self.kind == "z":
            return "Z"
        if self.kind == "hnn":
            return f"HNN({f[0]})"
        return f"{f[0]} *_{f[1]} {f[2]}"

    @classmethod
    def parse(cls, text: str) -> "Isomorphism":
        text = text.strip()
        if text == "F2":
            return cls("free-rank-2")
        if text == "Z":
            return cls("z")
        match = re.fullmatch(r"HNN\((\w+)\)", text)
        if match:
            return cls("hnn", (match.group(1),))
        match = re.fullmatch(r"(\w+) \*_(\w+) (\w+)", text)
        if match:
            return cls("amalgam", match.groups())
        match = re.fullmatch(r"(\w+) \* Z", text)
        if match:
            return cls("free-product-z", (match.group(1),))
        match = re.fullmatch(r"(\w+) \* (\w+)", text)
        if match:
            return cls("free-product", match.groups())
        match = re.fullmatch(r"(\w+) x Z", text)
        if match:
            return cls("direct-product-z", (match.group(1),))
        if re.fullmatch(r"\w+", text):
            return cls("finite", (text,))
        raise ValueError(f"unrecognised isomorphism type {text!r}")


@dataclass(frozen=True)
class StepRecord:
    step: int
    decision: str
    scalars: Tuple[Tuple[str, str], ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {"step": self.step, "decision": self.decision, "scalars": dict(self.scalars)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StepRecord":
        return cls(int(data["step"]), data["decision"], tuple((k, str(v)) for k, v in data.get("scalars", {}).items()))

    def __str__(self) -> str:
        extra = ", ".join(f"{k}={v}" for k, v in self.scalars)
        return f"({self.step}) {self.decision}" + (f" [{extra}]" if extra else "")


@dataclass(frozen=True)
class Verdict:
    discrete: bool
    case: Optional[str]
    isomorphism: Optional[Isomorphism]
    reduced_pair: Tuple[ProjectiveMatrix, ProjectiveMatrix]
    step_trace: Tuple[StepRecord, ...] = ()
    caveats: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.discrete != (self.case is not None):
            raise ValueError("a verdict is discrete exactly when it carries a case letter")
        if self.case is not None and self.case not in CASES:
            raise ValueError(f"unknown case {self.case!r}")

    def render(self) -> str:
        return f"true:case ({self.case})" if self.discrete else "false"

    @property
    def failing_step(self) -> Optional[int]:
        if self.discrete or not self.step_trace:
            return None
        return self.step_trace[-1].step

    def to_dict(self) -> Dict[str, Any]:
        X, Y = self.reduced_pair
        return {
            "verdict": self.render(),
            "discrete": self.discrete,
            "case": self.case,
            "isomorphism": str(self.isomorphism) if self.isomorphism else None,
            "reduced_pair": {"X": [list(r) for r in X.rows()], "Y": [list(r) for r in Y.rows()]},
            "step_trace": [s.to_dict() for s in self.step_trace],
            "caveats": list(self.caveats),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any], field: LocalField) -> "Verdict":
        pair = data["reduced_pair"]
        iso = data.get("isomorphism")
        return cls(
            discrete=bool(data["discrete"]),
            case=data.get("case"),
            isomorphism=Isomorphism.parse(iso) if iso else None,
            reduced_pair=(
                ProjectiveMatrix.from_rows(field, pair["X"]),
                ProjectiveMatrix.from_rows(field, pair["Y"]),
            ),
            step_trace=tuple(StepRecord.from_dict(s) for s in data.get("step_trace", [])),
            caveats=tuple(data.get("caveats", [])),
        )
