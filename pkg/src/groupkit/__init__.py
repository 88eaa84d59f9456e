from .closure import ClosureResult, closure_with_cap, default_cap
from .identify import (
    FiniteGroupId,
    cyclic_admissible,
    element_orders,
    finite_group_admissible,
    identify_finite_group,
)
from .involution import find_double_involution

__all__ = [
    "ClosureResult",
    "FiniteGroupId",
    "closure_with_cap",
    "cyclic_admissible",
    "default_cap",
    "element_orders",
    "find_double_involution",
    "finite_group_admissible",
    "identify_finite_group",
]
