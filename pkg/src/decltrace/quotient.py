"""Condensing a preorder to the partial order of its mutual-reachability
classes, and moving down-sets between the two levels."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .relations import BinaryRelation, is_preorder


@dataclass(frozen=True)
class QuotientPoset:
    """Mutual-reachability classes of a preorder with the induced order.

    Classes are numbered by their smallest member, which fixes a
    deterministic ordering for everything downstream.  ``class_of`` maps an
    activity index to its class index (-1 outside the ground subset).
    """

    classes: tuple[frozenset[int], ...]
    order: BinaryRelation
    class_of: tuple[int, ...]


def condense(pre: BinaryRelation) -> QuotientPoset:
    """Collapse mutually reachable elements; the result order is a partial order."""
    if not is_preorder(pre):
        raise ValueError("relation is not a preorder")
    indices = pre.member_indices()
    class_of = [-1] * pre.n
    classes: list[frozenset[int]] = []
    for i in indices:
        if class_of[i] >= 0:
            continue
        group = [j for j in indices if pre.has(i, j) and pre.has(j, i)]
        for j in group:
            class_of[j] = len(classes)
        classes.append(frozenset(group))
    reps = [min(group) for group in classes]
    k = len(classes)
    rows = []
    for a in range(k):
        row = 0
        for b in range(k):
            if pre.has(reps[a], reps[b]):
                row |= 1 << b
        rows.append(row)
    order = BinaryRelation(k, tuple(rows), (1 << k) - 1)
    return QuotientPoset(tuple(classes), order, tuple(class_of))


def expand_downset(quotient: QuotientPoset, class_downset: Iterable[int]) -> frozenset[int]:
    """Union the member activities of a down-set of classes.

    This map is a bijection between down-sets of the quotient and down-sets
    of the original preorder.
    """
    chosen = set(class_downset)
    k = len(quotient.classes)
    for c in chosen:
        if not 0 <= c < k:
            raise ValueError(f"no class with index {c}")
        for d in range(k):
            if quotient.order.has(d, c) and d not in chosen:
                raise ValueError("not a down-set of the quotient")
    out: set[int] = set()
    for c in chosen:
        out |= quotient.classes[c]
    return frozenset(out)
