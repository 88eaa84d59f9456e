"""Vertices of the Bruhat-Tits tree as lattice classes in Hermite form.

Every homothety class of O-lattices in K^2 has a unique basis matrix
[[pi^m, u], [0, 1]] with u taken mod pi^m. A vertex stores m and the nonzero
uniformiser digits of u below position m, so equality and hashing are
structural.
"""

import math
from dataclasses import dataclass
from typing import Iterator, Tuple

from src.localfield import LocalField, Scalar
from src.psl2 import ProjectiveMatrix

GL2 = Tuple[Scalar, Scalar, Scalar, Scalar]


@dataclass(frozen=True, order=True)
class TreeVertex:
    m: int
    digits: Tuple[Tuple[int, int], ...] = ()

    def offset(self, field: LocalField) -> Scalar:
        return field.from_digits(self.digits)

    def basis(self, field: LocalField) -> GL2:
        return (field.uniformiser**self.m, self.offset(field), field.zero, field.one)

    def __str__(self) -> str:
        if not self.digits:
            return f"[{self.m}]"
        body = ",".join(f"{c}@{i}" for i, c in self.digits)
        return f"[{self.m}|{body}]"


BASE_VERTEX = TreeVertex(0, ())


def base_vertex() -> TreeVertex:
    return BASE_VERTEX


def vertex_of(alpha: Scalar, beta: Scalar, gamma: Scalar, delta: Scalar) -> TreeVertex:
    """Class of the lattice spanned by the columns of [[alpha, beta], [gamma, delta]]."""
    det = alpha * delta - beta * gamma
    if det.is_zero():
        raise ValueError("lattice basis matrix is singular")
    v_gamma, v_delta = gamma.valuation(), delta.valuation()
    if v_delta <= v_gamma:
        u = beta / delta
        m = det.valuation() - 2 * v_delta
    else:
        u = alpha / gamma
        m = det.valuation() - 2 * v_gamma
    return TreeVertex(m, u.digits(m))


def apply(A: ProjectiveMatrix, v: TreeVertex) -> TreeVertex:
    field = A.field
    pm, u, _, _ = v.basis(field)
    return vertex_of(A.a * pm, A.a * u + A.b, A.c * pm, A.c * u + A.d)


def _digit_gap(x: Tuple[Tuple[int, int], ...], y: Tuple[Tuple[int, int], ...]):
    """Valuation of the difference of two digit expansions."""
    dx, dy = dict(x), dict(y)
    positions = sorted(set(dx) | set(dy))
    for i in positions:
        if dx.get(i, 0) != dy.get(i, 0):
            return i
    return math.inf


def vertex_distance(u: TreeVertex, w: TreeVertex) -> int:
    """|v(e1) - v(e2)| for the elementary divisors of M_u^-1 M_w."""
    # M_u^-1 M_w is homothetic to [[pi^{m_w}, u_w - u_u], [0, pi^{m_u}]]
    low = min(u.m, w.m, _digit_gap(u.digits, w.digits))
    return u.m + w.m - 2 * low


def neighbors(v: TreeVertex, field: LocalField) -> Iterator[TreeVertex]:
    """The q+1 neighbours: q children M_v [[pi, r], [0, 1]] and the parent M_v [[1, 0], [0, pi]]."""
    for r in range(field.q):
        yield TreeVertex(v.m + 1, v.digits + ((v.m, r),) if r else v.digits)
    yield TreeVertex(v.m - 1, tuple((i, c) for i, c in v.digits if i < v.m - 1))

