"""Which groups each case (a)-(g) can produce for a given residue field size q."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.groupkit import FiniteGroupId, cyclic_admissible, finite_group_admissible
from src.localfield import LocalField


@dataclass(frozen=True)
class MenuEntry:
    case: str
    group: str
    condition: str
    order_x: Optional[int] = None

    def __str__(self) -> str:
        return f"({self.case}) {self.group}: {self.condition}"


@dataclass(frozen=True)
class CongruenceMenu:
    q: int
    finite: Tuple[MenuEntry, ...]
    cyclic_orders: Tuple[int, ...]
    direct_orders: Tuple[int, ...]
    hnn: Tuple[MenuEntry, ...]
    amalgam: Tuple[MenuEntry, ...]

    def finite_names(self) -> List[str]:
        return [e.group for e in self.finite]

    def hnn_names(self) -> List[str]:
        return [e.group for e in self.hnn]

    def amalgam_names(self) -> List[str]:
        return [e.group for e in self.amalgam]

    def lines(self):
        yield f"q = {self.q}"
        yield "(a) finite: " + ", ".join(self.finite_names())
        yield "(c)/(d) cyclic factors: " + ", ".join(f"C{n}" for n in self.cyclic_orders)
        yield "(e) C_n x Z for n in: " + ", ".join(str(n) for n in self.direct_orders)
        yield "(f) HNN bases: " + ", ".join(self.hnn_names())
        yield "(g) amalgams: " + ", ".join(self.amalgam_names())


def _residue(q: int, modulus: int) -> str:
    r = q % modulus
    return "-1" if r == modulus - 1 and modulus > 2 else str(r)


def _free_of_p(orders, field: LocalField) -> bool:
    """Over fields other than Q_p no element order may be divisible by p."""
    return field.is_qp or all(n % field.p for n in orders)


def cyclic_orders(field: LocalField) -> List[int]:
    return [n for n in range(2, field.q + 2) if cyclic_admissible(n, field) and _free_of_p([n], field)]


def direct_orders(field: LocalField) -> List[int]:
    q = field.q
    orders = [1]
    for n in range(2, q + 1):
        if not _free_of_p([n], field):
            continue
        if (q % 2 and q % (2 * n) == 1) or (q % 2 == 0 and q % n == 1):
            orders.append(n)
    return orders


def _finite_candidates(field: LocalField):
    q = field.q
    for n in range(2, q + 2):
        yield FiniteGroupId("C", n), [n]
    for n in range(2, max((q + 1) // 2, 3) + 1):
        yield FiniteGroupId("D", n), [2, n]
    yield FiniteGroupId("A4"), [2, 3]
    yield FiniteGroupId("S4"), [2, 3, 4]
    yield FiniteGroupId("A5"), [2, 3, 5]


def congruence_menu(field: LocalField) -> CongruenceMenu:
    q = field.q
    finite = []
    for group, orders in _finite_candidates(field):
        if finite_group_admissible(group, field) and _free_of_p(orders, field):
            finite.append(MenuEntry("a", str(group), _finite_condition(group, field)))

    hnn, amalgam = [], []
    if q % 4 == 1:
        k = 1
        while 4 * k + 2 <= 2 * q + 2:
            m = 2 * k + 1
            mod = 4 * k + 2
            if q % mod in (1, mod - 1) and _free_of_p([2, m], field):
                cond = f"q = 1 mod 4 and q = {_residue(q, mod)} mod {mod}"
                hnn.append(MenuEntry("f", f"D{m}", cond, 2))
                amalgam.append(MenuEntry("g", f"D{m} *_C2 D2", cond, 2))
            k += 1
    if q % 6 == 1 and _free_of_p([2, 3], field):
        hnn.append(MenuEntry("f", "A4", "q = 1 mod 6", 3))
        amalgam.append(MenuEntry("g", "A4 *_C3 D3", "q = 1 mod 6", 3))
    if q % 8 == 1 and _free_of_p([2, 3, 4], field):
        amalgam.append(MenuEntry("g", "S4 *_C4 D4", "q = 1 mod 8", 4))
    if q % 30 in (1, 19) and _free_of_p([2, 3, 5], field):
        amalgam.append(MenuEntry("g", "A5 *_C3 D3", f"q = {q % 30} mod 30", 3))
    if q % 10 == 1 and _free_of_p([2, 3, 5], field):
        amalgam.append(MenuEntry("g", "A5 *_C5 D5", "q = 1 mod 10", 5))

    return CongruenceMenu(
        q=q,
        finite=tuple(finite),
        cyclic_orders=tuple(cyclic_orders(field)),
        direct_orders=tuple(direct_orders(field)),
        hnn=tuple(hnn),
        amalgam=tuple(amalgam),
    )


def _finite_condition(group: FiniteGroupId, field: LocalField) -> str:
    q = field.q
    if group.tag == "C":
        n = group.n
        if q % (2 * n) in (1, 2 * n - 1):
            return f"q = {_residue(q, 2 * n)} mod {2 * n}"
        if q % 2 == 0 and q % n in (1 % n, n - 1):
            return f"q even and q = {_residue(q, n)} mod {n}"
        return f"K = Q_{field.p} and n = p"
    if group.tag == "D":
        if field.is_qp and field.p == 2 and group.n == 3:
            return "K = Q_2 and n = 3"
        return f"q = {_residue(q, 2 * group.n)} mod {2 * group.n}"
    if group.tag == "A4":
        return "p > 3" if field.p > 3 else "K = Q_3"
    if group.tag == "S4":
        return f"q = {_residue(q, 8)} mod 8"
    return f"q = {_residue(q, 10)} mod 10"
