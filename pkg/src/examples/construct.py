"""Generator pairs realizing each case (a)-(g), with the verdict they must produce."""

import logging
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

from src.decide import Isomorphism, Verdict
from src.errors import ExampleUnavailable, MalformedScalarError
from src.examples.menu import congruence_menu
from src.examples.traces import TraceValue, companion, trace_for_psl_order, trace_for_sl_order
from src.groupkit import FiniteGroupId
from src.localfield import FieldConfig, LocalField, Scalar, get_field, primitive_root_of_unity
from src.psl2 import ProjectiveMatrix, fricke_commutator_trace

logger = logging.getLogger(__name__)

# (G0, variant, order of X) -> (SL order of the trace t = tr A, SL order of s = tr ABAB^-1)
_TABLE = {
    ("A4", "f", 3): (6, 6),
    ("A4", "g", 3): (6, 4),
    ("S4", "g", 4): (8, 6),
    ("A5", "g", 5): (10, 6),
    ("A5", "g", 3): (6, 10),
}

# (order of x, order of y, order of xy) in the triangle presentation <x, y | x^a, y^b, (xy)^c>
_TRIANGLES = {"A4": (2, 3, 3), "S4": (2, 3, 4), "A5": (2, 3, 5)}


@dataclass(frozen=True)
class ExampleSpec:
    """One row of the congruence menu: a case letter, its parameters and the expected group."""

    case: str
    field: FieldConfig
    expected: str
    n: Optional[int] = None
    m: Optional[int] = None
    group: Optional[str] = None

    @property
    def isomorphism(self) -> Isomorphism:
        return Isomorphism.parse(self.expected)

    @property
    def label(self) -> str:
        return f"{self.field.label} ({self.case}) {self.expected}"


@dataclass(frozen=True)
class Example:
    spec: ExampleSpec
    field: LocalField
    A: ProjectiveMatrix
    B: ProjectiveMatrix
    expected: Verdict
    parameters: Tuple[Tuple[str, str], ...] = dc_field(default=())

    def __iter__(self):
        return iter((self.A, self.B, self.expected))

    def document(self) -> Dict[str, Any]:
        """The example as an input document (see the `decide` subcommand)."""
        return {
            "field": self.field.config.model_dump(mode="json", exclude_none=True),
            "A": [list(row) for row in self.A.rows()],
            "B": [list(row) for row in self.B.rows()],
        }


class _Carrier:
    """Collects the square roots an example needs; at most one may be adjoined."""

    def __init__(self, base: LocalField):
        self.base = base
        self.d: Optional[str] = None

    def need(self, value: Optional[TraceValue], what: str) -> TraceValue:
        if value is None:
            raise ExampleUnavailable(f"{self.base} has no element realizing {what}")
        self.adjoin(value.d)
        return value

    def adjoin(self, d: Optional[str]) -> None:
        if d is None or d == self.d:
            return
        if self.d is not None:
            raise ExampleUnavailable(f"needs both sqrt({self.d}) and sqrt({d}); only one quadratic extension is supported")
        self.d = d

    def field(self) -> LocalField:
        if self.d is None:
            return self.base
        try:
            return get_field(self.base.config.with_ext(self.d))
        except MalformedScalarError as exc:
            logger.warning("non-split discriminant d = %s over %s: %s", self.d, self.base, exc)
            raise ExampleUnavailable(f"d = {self.d} does not give a split extension of {self.base}: {exc}") from exc


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def _skeleton(A: ProjectiveMatrix, B: ProjectiveMatrix, spec: ExampleSpec) -> Verdict:
    return Verdict(True, spec.case, spec.isomorphism, (A, B))


def _params(**values) -> Tuple[Tuple[str, str], ...]:
    return tuple((k, str(v)) for k, v in values.items())


# --- case (a) ---------------------------------------------------------------


def _triangle(base: LocalField, a: int, b: int, c: int):
    """x of order a and y of order b with xy of order c, solved for y's entries.

    With x the companion matrix of trace ta, y = [[alpha, beta], [gamma, delta]] has
    delta = tb - alpha, beta = tc + gamma - ta*delta, and gamma is a root of
    gamma^2 + (tc - ta*delta) gamma + 1 - alpha*delta.
    """
    if base.p == 2:
        raise ExampleUnavailable("triangle pairs need odd residue characteristic")
    traces = [trace_for_psl_order(base, k) for k in (a, b, c)]
    for k, tv in zip((a, b, c), traces):
        if tv is None:
            raise ExampleUnavailable(f"{base} has no element of order {k}")
        if tv.d is not None:
            raise ExampleUnavailable(f"order {k} needs sqrt({tv.d}) and the pair would need a second square root")
    ta, tb, tc = (tv.value(base) for tv in traces)
    if fricke_commutator_trace(ta, tb, tc) == 2:
        tc = -tc

    if base.kind == "laurent":
        alphas = [base.constant(r) for r in base.residue.elements()]
    else:
        alphas = [base.base(r) for r in range(2 * base.p)]

    fallback = None
    for alpha in alphas:
        delta = tb - alpha
        lin = tc - ta * delta
        disc = lin * lin - 4 * (1 - alpha * delta)
        root = _exact_sqrt(base, disc)
        if root is not None:
            return _finish_triangle(base, None, ta, tb, tc, alpha, root)
        if fallback is None and base.kind == "padic" and disc.valuation() == 0 and base.residue.is_square(disc.residue()):
            fallback = (alpha, disc)
    if fallback is None:
        raise ExampleUnavailable(f"no split discriminant for the ({a}, {b}, {c}) triangle over {base}")
    alpha, disc = fallback
    return _finish_triangle(base, str(disc), ta, tb, tc, alpha, None)


def _exact_sqrt(base: LocalField, x: Scalar) -> Optional[Scalar]:
    if x.is_zero():
        return base.zero
    if base.kind == "padic":
        r = _rational_sqrt(x.value)
        return None if r is None else base.base(r)
    roots = base.residue.sqrt_all(x.residue())
    return base.constant(min(roots)) if roots else None


def _finish_triangle(base, d, ta, tb, tc, alpha, root):
    carrier = _Carrier(base)
    carrier.adjoin(d)
    F = carrier.field()
    ta, tb, tc, alpha = (F.coerce(v) for v in (ta, tb, tc, alpha))
    root = F.s if root is None else F.coerce(root)
    delta = tb - alpha
    lin = tc - ta * delta
    gamma = (root - lin) / 2
    beta = tc + gamma - ta * delta
    x = companion(ta)
    y = ProjectiveMatrix(alpha, beta, gamma, delta)
    return F, x, y, _params(tr_x=ta, tr_y=tb, tr_xy=tc)


def _case_a(spec: ExampleSpec, base: LocalField):
    group = FiniteGroupId.parse(spec.group)
    if group.tag == "C":
        carrier = _Carrier(base)
        tv = carrier.need(trace_for_psl_order(base, group.n), f"order {group.n}")
        F = carrier.field()
        x = companion(tv.value(F))
        return F, x, x * x, _params(t=tv)
    shape = (2, 2, group.n) if group.tag == "D" else _TRIANGLES[group.tag]
    return _triangle(base, *shape)


# --- cases (b)-(e) ----------------------------------------------------------


def _case_b(spec: ExampleSpec, base: LocalField):
    pi = base.pi
    X = ProjectiveMatrix.diagonal(pi)
    g = ProjectiveMatrix(1 + pi**-2, pi**-1, pi**-1, base.one)
    return base, X, g * X * g.inverse(), _params(u=pi**-1, w=pi**-1)


def _case_c(spec: ExampleSpec, base: LocalField):
    carrier = _Carrier(base)
    tv_t = carrier.need(trace_for_psl_order(base, spec.n), f"order {spec.n}")
    tv_s = carrier.need(trace_for_psl_order(base, spec.m), f"order {spec.m}")
    F = carrier.field()
    t, s = tv_t.value(F), tv_s.value(F)
    pi = F.pi
    A = companion(t)
    B = ProjectiveMatrix(F.zero, -(pi**-1), pi, s)
    return F, A, B, _params(t=t, s=s)


def _case_d(spec: ExampleSpec, base: LocalField):
    carrier = _Carrier(base)
    tv = carrier.need(trace_for_psl_order(base, spec.n), f"order {spec.n}")
    F = carrier.field()
    t = tv.value(F)
    pi = F.pi
    A = ProjectiveMatrix(F.zero, pi**2, -(pi**-2), t)
    B = ProjectiveMatrix(pi**2, pi - 1, F.one, pi**-1)
    return F, A, B, _params(t=t)


def _case_e(spec: ExampleSpec, base: LocalField):
    n = spec.n or 1
    carrier = _Carrier(base)
    if n == 1:
        F = base
        lam = F.one
    elif base.kind == "laurent":
        k = 2 * n if base.q % 2 else n
        root = primitive_root_of_unity(k, base)
        if root is None:
            raise ExampleUnavailable(f"no primitive {k}-th root of unity in {base}")
        F, lam = base, root.value
    elif n in (2, 3):
        carrier.adjoin("-1" if n == 2 else "-3")
        F = carrier.field()
        lam = F.s if n == 2 else (1 + F.s) / 2
    else:
        raise ExampleUnavailable(f"a primitive {2 * n}-th root of unity is not quadratic over Q")
    A = ProjectiveMatrix.diagonal(lam)
    B = ProjectiveMatrix.diagonal(F.pi**-1)
    return F, A, B, _params(lam=lam)


# --- cases (f) and (g) ------------------------------------------------------


def table_orders(group: str, variant: str, order_x: int) -> Tuple[int, int]:
    """SL_2 orders of the traces t and s in the table of values for (G0, variant)."""
    if group.startswith("D"):
        m = int(group[1:])
        return (4, 2 * m) if variant == "f" else (4, m)
    try:
        return _TABLE[(group, variant, order_x)]
    except KeyError:
        raise ExampleUnavailable(f"no ({variant}) row for {group} with X of order {order_x}") from None


def _case_fg(spec: ExampleSpec, base: LocalField):
    order_x = spec.n or 2
    t_order, s_order = table_orders(spec.group, spec.case, order_x)
    traces = []
    for k in (t_order, s_order):
        tv = trace_for_sl_order(base, k)
        if tv is None:
            raise ExampleUnavailable(f"{base} has no element of SL_2 order {k}")
        if tv.d is not None:
            raise ExampleUnavailable(f"trace {tv} is irrational and a would need a second square root")
        traces.append(tv.value(base))
    t, s = traces

    pi = base.pi
    R = -(s - t * t + 2) * pi**2 / (pi**2 - 1) ** 2
    d = (t * t - 4) / 4 + R

    root = _rational_sqrt(d.value) if base.kind == "padic" else None
    if root is not None:
        F, r = base, base.base(root)
    else:
        carrier = _Carrier(base)
        carrier.adjoin(str(d))
        F = carrier.field()
        r = F.s
    t, R = F.coerce(t), F.coerce(R)
    half = t / 2
    A = ProjectiveMatrix(half + r, F.one, -R, half - r)
    B = ProjectiveMatrix.diagonal(F.pi)
    return F, A, B, _params(t=t, s=F.coerce(s), a=half + r, d=d)


_BUILDERS = {
    "a": _case_a,
    "b": _case_b,
    "c": _case_c,
    "d": _case_d,
    "e": _case_e,
    "f": _case_fg,
    "g": _case_fg,
}


def make_example(spec: ExampleSpec) -> Example:
    """Exact generators A, B for `spec` and the verdict decide must return for them.

    Raises ExampleUnavailable when the field cannot carry the required traces with
    at most one split quadratic extension.
    """
    base = get_field(spec.field.without_ext())
    builder = _BUILDERS.get(spec.case)
    if builder is None:
        raise ExampleUnavailable(f"unknown case {spec.case!r}")
    F, A, B, params = builder(spec, base)
    logger.debug("example %s over %s: A = %r, B = %r", spec.label, F, A, B)
    return Example(spec, F, A, B, _skeleton(A, B, spec), params)


def generate_specs(field: LocalField) -> List[ExampleSpec]:
    """Every example the congruence menu admits for the field's q, realizable or not."""
    cfg = field.config.without_ext()
    menu = congruence_menu(field)
    specs: List[ExampleSpec] = []
    for entry in menu.finite:
        specs.append(ExampleSpec("a", cfg, entry.group, group=entry.group))
    specs.append(ExampleSpec("b", cfg, "F2"))
    cyclic = menu.cyclic_orders
    for i, n in enumerate(cyclic):
        for m in cyclic[i:]:
            specs.append(ExampleSpec("c", cfg, f"C{n} * C{m}", n=n, m=m))
    for n in cyclic:
        specs.append(ExampleSpec("d", cfg, f"C{n} * Z", n=n))
    for n in menu.direct_orders:
        specs.append(ExampleSpec("e", cfg, "Z" if n == 1 else f"C{n} x Z", n=n))
    for entry in menu.hnn:
        specs.append(ExampleSpec("f", cfg, f"HNN({entry.group})", n=entry.order_x, group=entry.group))
    for entry in menu.amalgam:
        group = entry.group.split()[0]
        specs.append(ExampleSpec("g", cfg, entry.group, n=entry.order_x, group=group))
    return specs


def realizable_examples(field: LocalField) -> Iterator[Example]:
    """make_example over generate_specs, logging and skipping unavailable rows."""
    for spec in generate_specs(field):
        try:
            yield make_example(spec)
        except ExampleUnavailable as exc:
            logger.warning("skipping %s: %s", spec.label, exc)
