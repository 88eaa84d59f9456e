"""Traces zeta + zeta^-1 of elements of prescribed order.

Over Q_p the traces are rational or lie in a single quadratic extension; over
F_q((t)) they are constants of F_q found by scanning companion matrices.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from src.localfield import LocalField, Scalar
from src.psl2 import ProjectiveMatrix, element_order, sl_order

# SL_2 order -> (trace expression in s = sqrt(d), d)
_PADIC_SL_TRACES = {
    1: ("2", None),
    2: ("-2", None),
    3: ("-1", None),
    4: ("0", None),
    6: ("1", None),
    5: ("(-1 + s)/2", "5"),
    8: ("s", "2"),
    10: ("(1 + s)/2", "5"),
    12: ("s", "3"),
}

# PSL_2 order -> SL_2 order of the preferred representative
_PADIC_PSL_TO_SL = {1: 1, 2: 4, 3: 3, 4: 8, 5: 10, 6: 12}


@dataclass(frozen=True)
class TraceValue:
    """A trace as text in the grammar, valid in any field adjoining sqrt(d)."""

    expr: str
    d: Optional[str] = None

    def value(self, field: LocalField) -> Scalar:
        return field.coerce(self.expr)

    def __str__(self) -> str:
        if self.d is None:
            return self.expr
        return f"{self.expr} with s = sqrt({self.d})"


def companion(x: Scalar) -> ProjectiveMatrix:
    """[[0, -1], [1, x]], the determinant-one matrix of trace x."""
    field = x.field
    return ProjectiveMatrix(field.zero, -field.one, field.one, x)


def _split(field: LocalField, d: str) -> bool:
    n = int(d)
    return field.p != 2 and n % field.p != 0 and field.residue.is_square(n % field.p)


def _scan(field: LocalField, wanted: int, order_fn) -> Optional[TraceValue]:
    for c in field.residue.elements():
        x = field.constant(c)
        if order_fn(companion(x)) == wanted:
            return TraceValue(str(x))
    return None


@lru_cache(maxsize=None)
def trace_for_sl_order(field: LocalField, k: int) -> Optional[TraceValue]:
    """Trace of an SL_2 element of order exactly k, or None when K has none."""
    if field.kind == "laurent":
        return _scan(field, k, sl_order)
    entry = _PADIC_SL_TRACES.get(k)
    if entry is None:
        return None
    expr, d = entry
    if d is not None and not _split(field, d):
        return None
    return TraceValue(expr, d)


@lru_cache(maxsize=None)
def trace_for_psl_order(field: LocalField, n: int) -> Optional[TraceValue]:
    """Trace of a PSL_2 element of order exactly n; the smallest constant over F_q((t))."""
    if field.kind == "laurent":
        return _scan(field, n, element_order)
    k = _PADIC_PSL_TO_SL.get(n)
    return None if k is None else trace_for_sl_order(field, k)
