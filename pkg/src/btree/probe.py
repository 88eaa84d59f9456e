"""Brute-force probes of a finite ball around a vertex.

These are oracles: they check the closed-form answers of psl2 and the fixed-set
congruences by walking the tree.
"""

import logging
import math
import os
from dataclasses import dataclass, field as dataclass_field
from typing import FrozenSet, Iterator, List, Literal, Optional, Tuple

from src.errors import ContractViolation
from src.localfield import LocalField
from src.psl2 import ProjectiveMatrix, element_order, is_hyperbolic, translation_length
from src.btree.vertex import BASE_VERTEX, TreeVertex, apply, neighbors, vertex_distance

logger = logging.getLogger(__name__)

DEFAULT_MAX_RADIUS = 6

FixShape = Literal["two-adjacent", "single-vertex", "bi-infinite-ray"]


def max_radius() -> int:
    return int(os.environ.get("NONARCH_MAX_RADIUS", DEFAULT_MAX_RADIUS))


def _check_radius(radius: int) -> None:
    if radius < 0:
        raise ValueError(f"radius must be nonnegative, got {radius}")
    cap = max_radius()
    if radius > cap:
        raise ValueError(f"radius {radius} exceeds the configured maximum {cap} (NONARCH_MAX_RADIUS)")


def ball_size(q: int, radius: int) -> int:
    if radius == 0:
        return 1
    return 1 + (q + 1) * (q**radius - 1) // (q - 1)


@dataclass(frozen=True)
class BallProbe:
    center: TreeVertex
    radius: int
    layers: Tuple[Tuple[TreeVertex, ...], ...]

    @property
    def vertices(self) -> Tuple[TreeVertex, ...]:
        return tuple(v for layer in self.layers for v in layer)

    def sphere(self, k: int) -> Tuple[TreeVertex, ...]:
        return self.layers[k]

    def __len__(self) -> int:
        return sum(len(layer) for layer in self.layers)


def iter_layers(field: LocalField, center: TreeVertex, radius: int) -> Iterator[Tuple[TreeVertex, ...]]:
    seen = {center}
    layer: Tuple[TreeVertex, ...] = (center,)
    yield layer
    for _ in range(radius):
        nxt: List[TreeVertex] = []
        for v in layer:
            for w in neighbors(v, field):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        layer = tuple(nxt)
        yield layer


def ball(field: LocalField, radius: int, center: TreeVertex = BASE_VERTEX) -> BallProbe:
    _check_radius(radius)
    return BallProbe(center, radius, tuple(iter_layers(field, center, radius)))


def displacement(A: ProjectiveMatrix, v: TreeVertex) -> int:
    return vertex_distance(v, apply(A, v))


@dataclass(frozen=True)
class OracleResult:
    """Minimum displacement found within `radius`; `stable` certifies it is the global minimum."""

    value: int
    radius: int
    stable: bool
    witness: TreeVertex
    history: Tuple[int, ...] = dataclass_field(default=())

    @property
    def is_lower_bound(self) -> bool:
        return not self.stable


def displacement_oracle(A: ProjectiveMatrix, radius: int, center: TreeVertex = BASE_VERTEX) -> OracleResult:
    """Minimise d(v, Av) over growing balls, stopping at the first stable radius.

    The minimum over the ball of radius r is l(A) + 2 max(0, dist(center, Min A) - r),
    so two equal consecutive minima mean the translation length has been reached.
    """
    _check_radius(radius)
    best = math.inf
    witness = center
    history: List[int] = []
    for r, layer in enumerate(iter_layers(A.field, center, radius)):
        for v in layer:
            d = displacement(A, v)
            if d < best:
                best, witness = d, v
        history.append(best)
        if r >= 1 and history[-1] == history[-2]:
            return OracleResult(best, r, True, witness, tuple(history))
    logger.warning("displacement oracle unstable at radius %d: %d is a lower bound", radius, best)
    return OracleResult(best, radius, False, witness, tuple(history))


def fixed_vertices(A: ProjectiveMatrix, radius: int, center: TreeVertex = BASE_VERTEX) -> FrozenSet[TreeVertex]:
    probe = ball(A.field, radius, center)
    return frozenset(v for v in probe.vertices if apply(A, v) == v)


def axis_vertices(B: ProjectiveMatrix, radius: int, center: TreeVertex = BASE_VERTEX) -> FrozenSet[TreeVertex]:
    length = translation_length(B)
    if length == 0:
        raise ContractViolation("axis of an elliptic element is undefined")
    probe = ball(B.field, radius, center)
    return frozenset(v for v in probe.vertices if displacement(B, v) == length)


def fixed_vertices_at_distance(A: ProjectiveMatrix, k: int) -> int:
    """Roots of lambda^2 - tr(A) lambda + 1 in O/pi^k, for A elliptic fixing the base vertex."""
    if is_hyperbolic(A):
        raise ContractViolation("fixed vertex count needs an elliptic element")
    if k < 1:
        raise ValueError(f"distance must be positive, got {k}")
    if apply(A, BASE_VERTEX) != BASE_VERTEX:
        raise ContractViolation("element does not fix the base vertex; conjugate it first")
    field = A.field
    tr = A.trace()
    count = 0
    for x in field.residue_ring(k):
        if (x * x - tr * x + 1).valuation() >= k:
            count += 1
    return count


def brute_force_fixed_at_distance(A: ProjectiveMatrix, k: int) -> int:
    probe = ball(A.field, k)
    return sum(1 for v in probe.sphere(k) if apply(A, v) == v)


def fix_shape(A: ProjectiveMatrix) -> FixShape:
    """Shape of Fix(A) for elliptic A of finite order n, read off the congruences on q."""
    if is_hyperbolic(A):
        raise ContractViolation("fix_shape needs an elliptic element")
    n = element_order(A)
    if n == math.inf:
        raise ContractViolation("fix_shape needs an element of finite order")
    if n == 1:
        raise ContractViolation("the identity fixes the whole tree")
    field = A.field
    q = field.q
    if n % field.p == 0:
        if field.is_qp and n == field.p and n in (2, 3):
            return "two-adjacent"
        raise ContractViolation(f"element of order {n} divisible by p = {field.p} over {field}")
    modulus = n if q % 2 == 0 else 2 * n
    if q % modulus == 1 % modulus:
        return "bi-infinite-ray"
    if q % modulus == modulus - 1:
        return "single-vertex"
    raise ContractViolation(f"no element of order {n} exists over a field with q = {q}")


IntersectionKind = Literal["empty", "path", "exceeds"]


@dataclass(frozen=True)
class Intersection:
    kind: IntersectionKind
    length: Optional[int]
    vertices: FrozenSet[TreeVertex]
    radius: int


def _intersection_type(common: FrozenSet[TreeVertex], center: TreeVertex, radius: int) -> Intersection:
    if not common:
        return Intersection("empty", None, common, radius)
    if any(vertex_distance(center, v) == radius for v in common):
        return Intersection("exceeds", None, common, radius)
    diameter = max(vertex_distance(u, w) for u in common for w in common)
    if diameter != len(common) - 1:
        raise ContractViolation(f"intersection of {len(common)} vertices is not a path")
    return Intersection("path", diameter, common, radius)


def fix_ax_intersection(
    A: ProjectiveMatrix, B: ProjectiveMatrix, radius: int, center: TreeVertex = BASE_VERTEX
) -> Intersection:
    """Fix(A) cap Ax(B) inside ball(center, radius); "exceeds" when it reaches the boundary sphere."""
    if is_hyperbolic(A) or not is_hyperbolic(B):
        raise ContractViolation("fix_ax_intersection needs A elliptic and B hyperbolic")
    common = fixed_vertices(A, radius, center) & axis_vertices(B, radius, center)
    return _intersection_type(common, center, radius)


def axis_intersection(
    X: ProjectiveMatrix, Y: ProjectiveMatrix, radius: int, center: TreeVertex = BASE_VERTEX
) -> Intersection:
    if not (is_hyperbolic(X) and is_hyperbolic(Y)):
        raise ContractViolation("axis_intersection needs two hyperbolic elements")
    common = axis_vertices(X, radius, center) & axis_vertices(Y, radius, center)
    return _intersection_type(common, center, radius)


def reflection_check(g: ProjectiveMatrix, Y: ProjectiveMatrix, y: TreeVertex) -> bool:
    """g (Y y) == Y^-1 y."""
    return apply(g, apply(Y, y)) == apply(Y.inverse(), y)
