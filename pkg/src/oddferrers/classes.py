"""Membership predicates and canonical-order enumerators for the four
partition classes: O (self-conjugate odd Ferrers graphs of 2n+1),
S (self-conjugate partitions of 4n+1 into odd parts),
D (distinct parts, one dominant odd part, evens of the form 4k+2, weight 2n+1),
DO (distinct odd parts in consecutive 4k+3/4k+1 pairs under a 4k+1 head,
weight 4n+1)."""
from __future__ import annotations

from enum import Enum
from typing import Iterator

from .ferrers import OddFerrersGraph, graph_weight, is_self_conjugate_graph
from .partitions import Partition, HookList, hooks_compose, is_self_conjugate


class ClassId(Enum):
    O = "O"
    S = "S"
    D = "D"
    DO = "DO"


def is_in_S(p: Partition, n: int) -> bool:
    """Self-conjugate partition of 4n+1 with every part odd."""
    return (
        p.weight == 4 * n + 1
        and all(x % 2 == 1 for x in p.parts)
        and is_self_conjugate(p)
    )


def is_in_O(g: OddFerrersGraph, n: int) -> bool:
    """Self-conjugate odd Ferrers graph of total weight 2n+1."""
    return graph_weight(g) == 2 * n + 1 and is_self_conjugate_graph(g)


def is_in_D(p: Partition, n: int) -> bool:
    """Distinct parts summing to 2n+1: exactly one odd part, every even part
    of the form 4k+2, and the odd part greater than half the greatest even part.

    A single odd part with no even parts qualifies vacuously.
    """
    if p.weight != 2 * n + 1:
        return False
    if len(set(p.parts)) != len(p.parts):
        return False
    odds = [x for x in p.parts if x % 2 == 1]
    evens = [x for x in p.parts if x % 2 == 0]
    if len(odds) != 1:
        return False
    if any(e % 4 != 2 for e in evens):
        return False
    return not evens or 2 * odds[0] > max(evens)


def is_in_DO(p: Partition, n: int) -> bool:
    """Odd number of distinct odd parts summing to 4n+1, alternating between
    the forms 4k+3 and 4k+1 below a 4k+1 head, with each 4k+3/4k+1 pair
    sharing the same k (so paired parts differ by exactly 2)."""
    parts = p.parts
    if p.weight != 4 * n + 1:
        return False
    if len(parts) % 2 == 0 or len(set(parts)) != len(parts):
        return False
    if any(x % 2 == 0 for x in parts):
        return False
    if parts[0] % 4 != 1:
        return False
    for j in range(1, len(parts), 2):
        if parts[j] % 4 != 3 or parts[j] - parts[j + 1] != 2:
            return False
    return True


def _iter_O_shapes(n: int) -> Iterator[tuple[int, ...]]:
    """Arm sequences a_1 > ... > a_d >= 1 with (2a_1-1) + sum 2(2a_i-1) = 2n+1."""
    target = 2 * n + 1

    def inner(remaining: int, below: int, arms: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield hooks_compose(HookList.from_arms(arms)).parts
            return
        # interior hooks contribute 2(2a-1) = 4a-2
        amax = min(below - 1, (remaining + 2) // 4)
        for a in range(amax, 0, -1):
            yield from inner(remaining - (4 * a - 2), a, arms + [a])

    # outermost hook contributes 2a_1 - 1
    for a1 in range((target + 1) // 2, 0, -1):
        yield from inner(target - (2 * a1 - 1), a1, [a1])


def enumerate_O(n: int) -> list[OddFerrersGraph]:
    shapes = sorted(_iter_O_shapes(n), reverse=True)
    return [OddFerrersGraph(Partition(s)) for s in shapes]


def _iter_S_parts(n: int) -> Iterator[tuple[int, ...]]:
    """Compose strictly decreasing odd hook cell counts summing to 4n+1, then
    keep only results with all parts odd."""
    target = 4 * n + 1

    def inner(remaining: int, below: int, arms: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            parts = hooks_compose(HookList.from_arms(arms)).parts
            if all(x % 2 == 1 for x in parts):
                yield parts
            return
        cmax = min(below - 2, remaining)
        if cmax % 2 == 0:
            cmax -= 1
        for c in range(cmax, 0, -2):
            yield from inner(remaining - c, c, arms + [(c + 1) // 2])

    yield from inner(target, target + 2, [])


def enumerate_S(n: int) -> list[Partition]:
    return [Partition(t) for t in sorted(_iter_S_parts(n), reverse=True)]


def _iter_D_parts(n: int) -> Iterator[tuple[int, ...]]:
    """Choose distinct parts congruent to 2 mod 4; the leftover odd part must
    exceed half the greatest even part."""
    target = 2 * n + 1

    def inner(remaining: int, below: int, evens: list[int]) -> Iterator[tuple[int, ...]]:
        w = remaining
        if w >= 1 and (not evens or 2 * w > evens[0]):
            yield tuple(sorted(evens + [w], reverse=True))
        emax = below - 4 if evens else remaining - 1
        emax = min(emax, remaining - 1)
        emax -= (emax - 2) % 4
        for e in range(emax, 1, -4):
            yield from inner(remaining - e, e, evens + [e])

    yield from inner(target, 0, [])


def enumerate_D(n: int) -> list[Partition]:
    return [Partition(t) for t in sorted(_iter_D_parts(n), reverse=True)]


def _iter_DO_parts(n: int) -> Iterator[tuple[int, ...]]:
    """A head part of the form 4k+1 followed by pairs (x+2, x) with x of the
    form 4k+1, strictly decreasing."""
    target = 4 * n + 1

    def pairs(remaining: int, below: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(acc)
            return
        # pair (x+2, x) contributes 2x+2; x = 4k+1, x+2 < below
        xmax = min(below - 3, (remaining - 2) // 2)
        xmax -= (xmax - 1) % 4
        for x in range(xmax, 0, -4):
            yield from pairs(remaining - (2 * x + 2), x, acc + [x + 2, x])

    for head in range(target, 0, -4):
        yield from pairs(target - head, head, [head])


def enumerate_DO(n: int) -> list[Partition]:
    return [Partition(t) for t in sorted(_iter_DO_parts(n), reverse=True)]


def count(c: ClassId, n: int) -> int:
    """Class cardinality at index n, without materializing the sorted list."""
    iters = {
        ClassId.O: _iter_O_shapes,
        ClassId.S: _iter_S_parts,
        ClassId.D: _iter_D_parts,
        ClassId.DO: _iter_DO_parts,
    }
    return sum(1 for _ in iters[c](n))


def to_json_dict(c: ClassId, n: int) -> dict:
    if c is ClassId.O:
        members = [list(g.shape.parts) for g in enumerate_O(n)]
    else:
        enum = {ClassId.S: enumerate_S, ClassId.D: enumerate_D, ClassId.DO: enumerate_DO}[c]
        members = [list(p.parts) for p in enum(n)]
    return {"class": c.value, "n": n, "count": len(members), "members": members}
