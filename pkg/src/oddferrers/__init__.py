"""Self-conjugate odd Ferrers graphs, their partition classes, the bijections
between them, and a mock theta series count oracle."""

from .partitions import Partition, Hook, HookList, conjugate, is_self_conjugate, hook_decompose, hooks_compose, weight
from .ferrers import (
    OddFerrersGraph,
    graph_weight,
    row_sums,
    is_self_conjugate_graph,
    weighted_hook_sums,
    interior_sum,
    render_ascii,
)
from .classes import (
    ClassId,
    is_in_O,
    is_in_S,
    is_in_D,
    is_in_DO,
    enumerate_O,
    enumerate_S,
    enumerate_D,
    enumerate_DO,
    count,
)
from .bijections import (
    phi,
    phi_inverse,
    sc_to_distinct_odd,
    distinct_odd_to_sc,
    o_to_d,
    d_to_o,
    d_to_do,
    do_to_d,
)
from .qseries import TruncatedSeries, series_add, series_mul, series_invert, pochhammer_q_odd, nu_series, p_nu

__all__ = [
    "Partition", "Hook", "HookList", "conjugate", "is_self_conjugate",
    "hook_decompose", "hooks_compose", "weight",
    "OddFerrersGraph", "graph_weight", "row_sums", "is_self_conjugate_graph",
    "weighted_hook_sums", "interior_sum", "render_ascii",
    "ClassId", "is_in_O", "is_in_S", "is_in_D", "is_in_DO",
    "enumerate_O", "enumerate_S", "enumerate_D", "enumerate_DO", "count",
    "phi", "phi_inverse", "sc_to_distinct_odd", "distinct_odd_to_sc",
    "o_to_d", "d_to_o", "d_to_do", "do_to_d",
    "TruncatedSeries", "series_add", "series_mul", "series_invert",
    "pochhammer_q_odd", "nu_series", "p_nu",
]

__version__ = "0.1.0"
