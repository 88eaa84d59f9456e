"""Recognition of finite subgroups of PSL_2(K): cyclic, dihedral, A4, S4, A5."""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Literal, Optional, Sequence

from src.errors import ClassificationError
from src.localfield import LocalField
from src.psl2 import ProjectiveMatrix, element_order

GroupTag = Literal["C", "D", "A4", "S4", "A5"]

_SPORADIC = {
    "A4": {1: 1, 2: 3, 3: 8},
    "S4": {1: 1, 2: 9, 3: 8, 4: 6},
    "A5": {1: 1, 2: 15, 3: 20, 5: 24},
}


@dataclass(frozen=True)
class FiniteGroupId:
    tag: GroupTag
    n: Optional[int] = None

    def __post_init__(self):
        if self.tag in ("C", "D") and (self.n is None or self.n < 1):
            raise ValueError(f"{self.tag} needs a positive index, got {self.n}")

    @property
    def order(self) -> int:
        if self.tag == "C":
            return self.n
        if self.tag == "D":
            return 2 * self.n
        return {"A4": 12, "S4": 24, "A5": 60}[self.tag]

    def __str__(self) -> str:
        if self.tag in ("C", "D"):
            return f"{self.tag}{self.n}"
        return self.tag

    @classmethod
    def parse(cls, text: str) -> "FiniteGroupId":
        if text in _SPORADIC:
            return cls(text)
        if text[:1] in ("C", "D") and text[1:].isdigit():
            return cls(text[0], int(text[1:]))
        raise ValueError(f"not a finite group name: {text!r}")


def element_orders(elements: Iterable[ProjectiveMatrix]) -> Dict[int, int]:
    """Multiset {order: count} of the element orders."""
    counts = Counter(element_order(g) for g in elements)
    return dict(sorted(counts.items()))


def _check_closed(elements: Sequence[ProjectiveMatrix]) -> None:
    members = set(elements)
    if len(members) != len(elements):
        raise ClassificationError("element list has repeated entries")
    if not any(g.is_identity() for g in members):
        raise ClassificationError("element set does not contain the identity")
    for g in elements:
        if g.inverse() not in members:
            raise ClassificationError(f"{g} has no inverse in the set")
        for h in elements:
            if g * h not in members:
                raise ClassificationError(f"set is not closed: {g} * {h} is missing")


def identify_finite_group(elements: Sequence[ProjectiveMatrix], check_closed: bool = True) -> FiniteGroupId:
    elements = list(elements)
    if check_closed:
        _check_closed(elements)
    N = len(elements)
    orders = element_orders(elements)
    if math.inf in orders:
        raise ClassificationError("finite set contains an element of infinite order")

    if N in orders:
        return FiniteGroupId("C", N)
    if N == 4 and orders.get(2) == 3:
        return FiniteGroupId("D", 2)
    if N % 2 == 0 and N // 2 > 2 and N // 2 in orders and orders.get(2, 0) >= N // 2:
        return FiniteGroupId("D", N // 2)
    for tag, multiset in _SPORADIC.items():
        if orders == multiset:
            return FiniteGroupId(tag)
    raise ClassificationError(f"group of order {N} with element orders {orders} is outside the classification")


def _pm1(q: int, modulus: int) -> bool:
    r = q % modulus
    return r == 1 % modulus or r == modulus - 1


def cyclic_admissible(n: int, field: LocalField) -> bool:
    q = field.q
    if n == 1:
        return True
    if _pm1(q, 2 * n):
        return True
    if q % 2 == 0 and _pm1(q, n):
        return True
    return field.is_qp and n == field.p and n in (2, 3)


def finite_group_admissible(group: FiniteGroupId, field: LocalField) -> bool:
    """Whether PSL_2(K) can contain the group, by the finite-subgroup congruences on q."""
    q = field.q
    if group.tag == "C":
        return cyclic_admissible(group.n, field)
    if group.tag == "D":
        if _pm1(q, 2 * group.n):
            return True
        return field.is_qp and field.p == 2 and group.n == 3
    if group.tag == "A4":
        return field.p > 3 or (field.is_qp and field.p == 3)
    if group.tag == "S4":
        return _pm1(q, 8)
    return _pm1(q, 10)
