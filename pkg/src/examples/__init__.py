from .construct import (
    Example,
    ExampleSpec,
    generate_specs,
    make_example,
    realizable_examples,
    table_orders,
)
from .menu import CongruenceMenu, MenuEntry, congruence_menu
from .traces import TraceValue, companion, trace_for_psl_order, trace_for_sl_order

__all__ = [
    "CongruenceMenu",
    "Example",
    "ExampleSpec",
    "MenuEntry",
    "TraceValue",
    "companion",
    "congruence_menu",
    "generate_specs",
    "make_example",
    "realizable_examples",
    "table_orders",
    "trace_for_psl_order",
    "trace_for_sl_order",
]
