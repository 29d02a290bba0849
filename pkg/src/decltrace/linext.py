"""Linear extensions of finite posets: generation, counting, restriction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .model import Trace
from .relations import BinaryRelation, is_antisymmetric, restrict


@dataclass(frozen=True)
class Poset:
    """A finite poset over global activity indices.

    ``order`` must be reflexive, transitive, and antisymmetric on
    ``elements``; the empty poset is allowed.
    """

    elements: frozenset[int]
    order: BinaryRelation


def _check_antisymmetric(poset: Poset) -> None:
    if not is_antisymmetric(poset.order):
        raise ValueError("order is not antisymmetric")


def linear_extensions(poset: Poset) -> list[Trace]:
    """Every arrangement of the elements compatible with the order.

    Generated by repeatedly emitting a minimal element of what remains,
    trying candidates in ascending index order, so the output is sorted
    lexicographically.
    """
    _check_antisymmetric(poset)
    elements = sorted(poset.elements)
    size = len(elements)
    local = {x: at for at, x in enumerate(elements)}
    predecessors = [0] * size
    for x in elements:
        for y in elements:
            if y != x and poset.order.has(y, x):
                predecessors[local[x]] |= 1 << local[y]
    out: list[Trace] = []
    sequence: list[int] = []

    def walk(remaining: int) -> None:
        if not remaining:
            out.append(tuple(sequence))
            return
        for at, x in enumerate(elements):
            bit = 1 << at
            if remaining & bit and not predecessors[at] & remaining:
                sequence.append(x)
                walk(remaining & ~bit)
                sequence.pop()

    walk((1 << size) - 1)
    return out


def count_linear_extensions(poset: Poset) -> int:
    """Count linear extensions without generating them.

    Dynamic programming over the down-set lattice: peeling a maximal element
    from a down-set keeps it a down-set, and each extension corresponds to
    one full peeling path.
    """
    _check_antisymmetric(poset)
    elements = sorted(poset.elements)
    size = len(elements)
    local = {x: at for at, x in enumerate(elements)}
    successors = [0] * size
    for x in elements:
        for y in elements:
            if y != x and poset.order.has(x, y):
                successors[local[x]] |= 1 << local[y]
    memo: dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        known = memo.get(mask)
        if known is not None:
            return known
        total = 0
        for at in range(size):
            bit = 1 << at
            if mask & bit and not successors[at] & mask:
                total += count(mask & ~bit)
        memo[mask] = total
        return total

    return count((1 << size) - 1)


def restrict_extension(trace: Trace, subset: Iterable[int]) -> Trace:
    """Drop every item outside ``subset``, keeping the remaining order."""
    keep = set(subset)
    return tuple(x for x in trace if x in keep)


def induced_subposet(poset: Poset, subset: Iterable[int]) -> Poset:
    """The poset on ``subset`` with comparabilities inherited unchanged."""
    keep = frozenset(subset) & poset.elements
    return Poset(keep, restrict(poset.order, keep))
