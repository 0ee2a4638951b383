"""Odd Ferrers graphs: Ferrers shapes whose first row and first column carry
weight 1 and whose interior cells carry weight 2."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSelfConjugate
from .partitions import Partition, hook_decompose, is_self_conjugate


@dataclass(frozen=True)
class OddFerrersGraph:
    """An odd Ferrers graph, identified by its underlying (nonempty) shape.

    Cell weights are a rule, not data: 1 if the cell lies in the first row or
    first column, 2 otherwise.
    """

    shape: Partition

    def __post_init__(self):
        if not self.shape:
            raise ValueError("odd Ferrers graph shape must be nonempty")

    @classmethod
    def from_text(cls, text: str) -> OddFerrersGraph:
        return cls(Partition.from_text(text))

    def to_text(self) -> str:
        return self.shape.to_text()


def graph_weight(g: OddFerrersGraph) -> int:
    """Total cell weight: 2*cells minus the border cells (first row + first column)."""
    cells = g.shape.weight
    border = g.shape.parts[0] + len(g.shape.parts) - 1
    return 2 * cells - border


def row_sums(g: OddFerrersGraph) -> tuple[int, ...]:
    """Per-row weight sums, top row first; this is how a graph names a partition."""
    out = []
    for i, row in enumerate(g.shape.parts):
        if i == 0:
            out.append(row)
        else:
            # first cell is border, the remaining row-1 cells weigh 2
            out.append(1 + 2 * (row - 1))
    return tuple(out)


def is_self_conjugate_graph(g: OddFerrersGraph) -> bool:
    return is_self_conjugate(g.shape)


def weighted_hook_sums(g: OddFerrersGraph) -> tuple[int, ...]:
    """Weight of each principal hook: the outermost hook is all border (weight 1
    per cell), inner hooks are all interior (weight 2 per cell)."""
    if not is_self_conjugate_graph(g):
        raise NotSelfConjugate(f"shape {g.shape.parts} is not self-conjugate")
    arms = hook_decompose(g.shape).arms
    return tuple((2 * a - 1) if i == 0 else 2 * (2 * a - 1) for i, a in enumerate(arms))


def interior_sum(g: OddFerrersGraph) -> int:
    """Sum of the interior 2s, i.e. everything except the outermost hook."""
    sums = weighted_hook_sums(g)
    return sum(sums[1:])


def render_ascii(g: OddFerrersGraph) -> str:
    """One line per row, each cell printed as its weight digit."""
    lines = []
    for i, row in enumerate(g.shape.parts):
        lines.append("".join("1" if (i == 0 or j == 0) else "2" for j in range(row)))
    return "\n".join(lines)


def to_json_dict(g: OddFerrersGraph) -> dict:
    return {
        "shape": list(g.shape.parts),
        "weight": graph_weight(g),
        "row_sums": list(row_sums(g)),
    }
