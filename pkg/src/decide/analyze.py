import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

from src.btree import fix_shape
from src.errors import ContractViolation
from src.psl2 import ProjectiveMatrix, classify, element_order, sl_order


@dataclass(frozen=True)
class ElementReport:
    name: str
    trace: str
    trace_valuation: Optional[int]
    isometry: str
    length: int
    order: Optional[int]
    sl_order: Optional[int]
    fix_shape: Optional[str]

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.__dict__)

    def lines(self):
        order = "inf" if self.order is None else self.order
        yield f"{self.name}: {self.isometry}, l = {self.length}, order = {order}"
        v = "inf" if self.trace_valuation is None else self.trace_valuation
        yield f"  tr = {self.trace} (v = {v})"
        if self.fix_shape:
            yield f"  Fix = {self.fix_shape}"


def analyze_element(A: ProjectiveMatrix, name: str = "A") -> ElementReport:
    """Translation length, isometry class, orders and fixed-set shape of one element."""
    cls = classify(A)
    n = element_order(A)
    v = A.trace().valuation()
    shape = None
    if cls.tag == "elliptic" and n != math.inf and n > 1:
        try:
            shape = fix_shape(A)
        except ContractViolation:
            shape = None
    return ElementReport(
        name=name,
        trace=str(A.trace()),
        trace_valuation=None if v == math.inf else int(v),
        isometry=cls.tag,
        length=cls.length,
        order=None if n == math.inf else int(n),
        sl_order=None if n == math.inf else int(sl_order(A)),
        fix_shape=shape,
    )
