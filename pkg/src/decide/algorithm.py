"""The two-generator discreteness algorithm for PSL_2 over a local field.

Steps are numbered (1)-(14) as in the step trace of every Verdict:

 (1) finite G                                   -> true:case (a)
 (2)-(4) pair reduction of hyperbolic lengths   -> true:case (b)
 (5) X of infinite order                        -> false
 (6) shorten Y within the coset <X>Y
 (7) Y elliptic                                 -> true:case (c) or false
 (8) l([X,Y]) > 0                               -> true:case (d)
 (9) [X,Y] of infinite order                    -> false
 (10) [X,Y] trivial                             -> true:case (e)
 (11) l([X,Y^2]) = 0                            -> false
 (12) G0 = <X, YXY^-1> infinite                 -> false
 (13) no g in G0 with g, gY involutions         -> true:case (f)
 (14) otherwise                                 -> true:case (g)
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

from src.decide.verdict import Isomorphism, StepRecord, Verdict
from src.errors import ClassificationError, ContractViolation
from src.groupkit import (
    FiniteGroupId,
    closure_with_cap,
    element_orders,
    find_double_involution,
    finite_group_admissible,
    identify_finite_group,
)
from src.localfield import LocalField
from src.psl2 import (
    ProjectiveMatrix,
    commutator,
    element_order,
    is_hyperbolic,
    translation_length as l,
)

logger = logging.getLogger(__name__)

NON_QP_CAVEAT = "non-Q_p field: no-order-p hypothesis assumed"


@dataclass(frozen=True)
class Reduction:
    X: ProjectiveMatrix
    Y: ProjectiveMatrix
    exit: Literal["elliptic", "free"]
    moves: Tuple[StepRecord, ...] = ()


def reduce_hyperbolic_pair(A: ProjectiveMatrix, B: ProjectiveMatrix) -> Reduction:
    """Steps (2)-(4): shorten the pair until l(X) = 0 or the lengths certify a free group.

    Every replacement strictly lowers l(X) + l(Y), so the loop terminates.
    """
    X, Y = A, B
    moves: List[StepRecord] = []
    while True:
        if l(X) > l(Y):
            X, Y = Y, X
            moves.append(StepRecord(3, "swap X and Y", (("l(X)", str(l(X))), ("l(Y)", str(l(Y))))))
        lx, ly = l(X), l(Y)
        if lx == 0:
            return Reduction(X, Y, "elliptic", tuple(moves))
        XY, XiY = X * Y, X.inverse() * Y
        l_xy, l_xiy = l(XY), l(XiY)
        m = min(l_xy, l_xiy)
        scalars = (("l(X)", str(lx)), ("l(Y)", str(ly)), ("m", str(m)))
        if m <= ly - lx:
            if l_xy == m:
                Y, word = XY, "XY"
            else:
                Y, word = XiY, "X^-1Y"
            moves.append(StepRecord(4, f"replace Y by {word}", scalars))
            logger.debug("reduction: Y <- %s, l(X)+l(Y) = %d", word, lx + m)
            continue
        moves.append(StepRecord(4, "m > l(Y) - l(X): free of rank two", scalars))
        return Reduction(X, Y, "free", tuple(moves))


class _Run:
    """Mutable bookkeeping for one decide call."""

    def __init__(self, field: LocalField, cap: Optional[int]):
        self.field = field
        self.cap = cap
        self.trace: List[StepRecord] = []
        self.caveats: List[str] = [] if field.is_qp else [NON_QP_CAVEAT]

    def record(self, step: int, decision: str, **scalars) -> None:
        entry = StepRecord(step, decision, tuple((k, str(v)) for k, v in scalars.items()))
        self.trace.append(entry)
        logger.debug("step %s", entry)

    def guard_order(self, n, what: str) -> None:
        if self.field.is_qp or n == math.inf:
            return
        if n % self.field.p == 0:
            raise ContractViolation(f"{what} has order {n}, divisible by p = {self.field.p}, over {self.field}")

    def guard_group(self, elements, what: str) -> None:
        for n in element_orders(elements):
            self.guard_order(n, f"an element of {what}")

    def identify(self, elements, what: str) -> FiniteGroupId:
        self.guard_group(elements, what)
        group = identify_finite_group(elements, check_closed=False)
        if not finite_group_admissible(group, self.field):
            raise ClassificationError(f"{what} = {group} violates the finite-subgroup congruences for q = {self.field.q}")
        return group

    def verdict(self, X, Y, case: Optional[str] = None, iso: Optional[Isomorphism] = None) -> Verdict:
        return Verdict(case is not None, case, iso, (X, Y), tuple(self.trace), tuple(self.caveats))


def decide(A: ProjectiveMatrix, B: ProjectiveMatrix, cap: Optional[int] = None) -> Verdict:
    """Decide whether <A, B> is discrete and, if so, classify it into cases (a)-(g)."""
    field = A.field
    if B.field != field:
        raise ContractViolation(f"generators over {A.field} and {B.field}")
    run = _Run(field, cap)

    # (1)
    if is_hyperbolic(A) or is_hyperbolic(B):
        run.record(1, "a generator is hyperbolic: G is infinite", **{"l(A)": l(A), "l(B)": l(B)})
    else:
        closure = closure_with_cap([A, B], cap)
        if closure.is_finite:
            group = run.identify(closure.elements, "G")
            run.record(1, "G is finite", order=closure.order, group=group)
            return run.verdict(A, B, "a", Isomorphism("finite", (str(group),)))
        run.record(1, f"closure exceeds cap {closure.cap}: G is infinite", steps=closure.steps)

    # (2)-(4)
    reduction = reduce_hyperbolic_pair(A, B)
    run.trace.extend(reduction.moves)
    X, Y = reduction.X, reduction.Y
    if reduction.exit == "free":
        return run.verdict(X, Y, "b", Isomorphism("free-rank-2"))

    # (5)
    n = element_order(X)
    if n == math.inf:
        run.record(5, "X is elliptic of infinite order", X=X, **{"tr(X)": X.trace()})
        return run.verdict(X, Y)
    run.guard_order(n, "X")
    run.record(5, "X has finite order", n=n)

    # (6)
    best_i, best_l = 0, l(Y)
    power = X
    for i in range(1, n):
        length = l(power * Y)
        if length < best_l:
            best_i, best_l = i, length
        power = power * X
    if best_i:
        Y = (X**best_i) * Y
        run.record(6, f"replace Y by X^{best_i}Y", i=best_i, **{"l(Y)": best_l})

    # (7)
    if l(Y) == 0:
        m = element_order(Y)
        l_xy = l(X * Y)
        if m != math.inf:
            run.guard_order(m, "Y")
        if m != math.inf and l_xy > 0:
            run.record(7, "Y elliptic of finite order and l(XY) > 0", n=n, m=m, **{"l(XY)": l_xy})
            return run.verdict(X, Y, "c", Isomorphism("free-product", (f"C{n}", f"C{m}")))
        if m == math.inf:
            run.record(7, "Y is elliptic of infinite order", Y=Y, **{"tr(Y)": Y.trace()})
        else:
            run.record(7, "Y elliptic of finite order but l(XY) = 0", m=m, **{"tr(XY)": (X * Y).trace()})
        return run.verdict(X, Y)

    # (8)
    C = commutator(X, Y)
    l_c = l(C)
    if l_c > 0:
        run.record(8, "l([X,Y]) > 0", **{"l([X,Y])": l_c})
        return run.verdict(X, Y, "d", Isomorphism("free-product-z", (f"C{n}",)))

    # (9)
    order_c = element_order(C)
    if order_c == math.inf:
        run.record(9, "[X,Y] is elliptic of infinite order", **{"tr([X,Y])": C.trace()})
        return run.verdict(X, Y)
    run.guard_order(order_c, "[X,Y]")

    # (10)
    if C.is_identity():
        run.record(10, "[X,Y] is trivial", n=n)
        if n == 1:
            return run.verdict(X, Y, "e", Isomorphism("z"))
        return run.verdict(X, Y, "e", Isomorphism("direct-product-z", (f"C{n}",)))

    # (11)
    C2 = commutator(X, Y * Y)
    if l(C2) == 0:
        run.record(11, "l([X,Y^2]) = 0", **{"tr([X,Y^2])": C2.trace()})
        return run.verdict(X, Y)

    # (12)
    conj = Y * X * Y.inverse()
    g0 = closure_with_cap([X, conj], run.cap, names=["X", "YXY^-1"])
    if not g0.is_finite:
        run.record(12, f"G0 = <X, YXY^-1> exceeds cap {g0.cap}: G0 is infinite", steps=g0.steps)
        return run.verdict(X, Y)
    group = run.identify(g0.elements, "G0")
    run.record(12, "G0 is finite", order=g0.order, group=group)

    # (13)
    g = find_double_involution(g0.elements, Y)
    if g is None:
        run.record(13, "no g in G0 with g and gY involutions", group=group)
        return run.verdict(X, Y, "f", Isomorphism("hnn", (str(group),)))

    # (14)
    run.record(14, "g and gY are involutions", g=g0.word(g), group=group)
    return run.verdict(X, Y, "g", Isomorphism("amalgam", (str(group), f"C{n}", f"D{n}")))
