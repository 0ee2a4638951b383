"""The hook-doubling bijection between self-conjugate odd Ferrers graphs of
2n+1 and self-conjugate partitions of 4n+1 into odd parts, its inverse, the
classical self-conjugate <-> distinct-odd-parts correspondence, and the two
induced bijections on the D and DO classes."""
from __future__ import annotations

from .errors import (
    MalformedDClass,
    MalformedDOClass,
    MalformedSClass,
    NotDistinctOdd,
    NotSelfConjugate,
)
from .ferrers import OddFerrersGraph, graph_weight, weighted_hook_sums
from .classes import is_in_D, is_in_S
from .partitions import (
    HookList,
    Partition,
    hook_decompose,
    hooks_compose,
    is_self_conjugate,
)


def phi(g: OddFerrersGraph, check: bool = False) -> Partition:
    """Map a self-conjugate odd Ferrers graph of weight 2n+1 to a
    self-conjugate partition of 4n+1 into odd parts.

    The outermost weighted hook sum s1 becomes a hook of 2*s1 - 1 cells; every
    interior hook sum s becomes a pair of hooks with s+1 and s-1 cells.

    With check=True the class membership of the output is verified (this is
    the content of the equinumerosity theorem, not redundant plumbing).
    """
    sums = weighted_hook_sums(g)
    counts = [2 * sums[0] - 1]
    for s in sums[1:]:
        counts.extend((s + 1, s - 1))
    result = hooks_compose(HookList.from_arms([(c + 1) // 2 for c in counts]))
    if check:
        n = (graph_weight(g) - 1) // 2
        if not is_in_S(result, n):
            raise MalformedSClass(f"phi output {result.parts} is not in S at n={n}")
    return result


def phi_inverse(p: Partition) -> OddFerrersGraph:
    """Explicit inverse of phi."""
    counts = hook_decompose(p).cell_counts
    m = len(counts)
    if m % 2 == 0:
        raise MalformedSClass(f"even number of hooks ({m}) in {p.parts}")
    sums = [(counts[0] + 1) // 2]
    for i in range(1, m, 2):
        if counts[i] - counts[i + 1] != 2:
            raise MalformedSClass(
                f"hook cell counts {counts[i]},{counts[i + 1]} do not differ by 2"
            )
        sums.append(counts[i] - 1)
    arms = [(sums[0] + 1) // 2]
    for s in sums[1:]:
        if (s + 2) % 4 != 0:
            raise MalformedSClass(f"interior hook sum {s} is not 2 mod 4")
        arms.append((s + 2) // 4)
    if any(a >= b for a, b in zip(arms[1:], arms)):
        raise MalformedSClass(f"recovered arms {arms} not strictly decreasing")
    return OddFerrersGraph(hooks_compose(HookList.from_arms(arms)))


def sc_to_distinct_odd(p: Partition) -> Partition:
    """Principal hook cell counts of a self-conjugate partition, as parts."""
    if not is_self_conjugate(p):
        raise NotSelfConjugate(f"{p.parts} is not self-conjugate")
    return Partition(hook_decompose(p).cell_counts)


def distinct_odd_to_sc(p: Partition) -> Partition:
    """Inverse of sc_to_distinct_odd: each distinct odd part c becomes a hook
    of arm (c+1)/2."""
    if len(set(p.parts)) != len(p.parts) or any(x % 2 == 0 for x in p.parts):
        raise NotDistinctOdd(f"{p.parts} is not a partition into distinct odd parts")
    return hooks_compose(HookList.from_arms([(c + 1) // 2 for c in p.parts]))


def o_to_d(g: OddFerrersGraph) -> Partition:
    """Weighted hook sums of the graph, as a partition."""
    return Partition(tuple(sorted(weighted_hook_sums(g), reverse=True)))


def d_to_o(p: Partition) -> OddFerrersGraph:
    """Inverse of o_to_d: the odd part w gives the border arm (w+1)/2, each
    even part e an interior arm (e+2)/4."""
    odds = [x for x in p.parts if x % 2 == 1]
    evens = sorted((x for x in p.parts if x % 2 == 0), reverse=True)
    if len(odds) != 1:
        raise MalformedDClass(f"{p.parts} does not have exactly one odd part")
    if any((e + 2) % 4 != 0 for e in evens):
        raise MalformedDClass(f"even parts of {p.parts} are not all 2 mod 4")
    arms = [(odds[0] + 1) // 2] + [(e + 2) // 4 for e in evens]
    if any(a >= b for a, b in zip(arms[1:], arms)):
        raise MalformedDClass(f"recovered arms {arms} not strictly decreasing")
    return OddFerrersGraph(hooks_compose(HookList.from_arms(arms)))


def d_to_do(p: Partition) -> Partition:
    """Replace the odd part w by 2w-1 and each even part e by the pair e+1, e-1.

    Pinned by property tests to the composition sc_to_distinct_odd(phi(d_to_o(p))).
    """
    n = (p.weight - 1) // 2
    if not is_in_D(p, n):
        raise MalformedDClass(f"{p.parts} is not a D-class partition")
    parts = []
    for x in p.parts:
        if x % 2 == 1:
            parts.append(2 * x - 1)
        else:
            parts.extend((x + 1, x - 1))
    return Partition(tuple(sorted(parts, reverse=True)))


def do_to_d(p: Partition) -> Partition:
    """Inverse of d_to_do: the head becomes (head+1)/2, each consecutive pair
    differing by 2 collapses to its even midpoint."""
    parts = p.parts
    if len(parts) % 2 == 0 or not parts:
        raise MalformedDOClass(f"{p.parts} does not have an odd number of parts")
    out = [(parts[0] + 1) // 2]
    for j in range(1, len(parts), 2):
        if parts[j] - parts[j + 1] != 2:
            raise MalformedDOClass(
                f"parts {parts[j]},{parts[j + 1]} of {p.parts} do not differ by 2"
            )
        out.append(parts[j] - 1)
    return Partition(tuple(sorted(out, reverse=True)))
