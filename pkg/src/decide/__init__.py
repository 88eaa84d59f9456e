from .algorithm import NON_QP_CAVEAT, Reduction, decide, reduce_hyperbolic_pair
from .analyze import ElementReport, analyze_element
from .verdict import CASES, Isomorphism, StepRecord, Verdict

__all__ = [
    "CASES",
    "ElementReport",
    "Isomorphism",
    "NON_QP_CAVEAT",
    "Reduction",
    "StepRecord",
    "Verdict",
    "analyze_element",
    "decide",
    "reduce_hyperbolic_pair",
]
