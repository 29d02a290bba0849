"""Enumeration of the possible trace images of a process.

A subset of the alphabet is realizable as the image of some trace exactly
when it is a down-set of the occurrence preorder whose induced ordering law
is antisymmetric.  Each such image is certified here as a ``DownSet``.

Enumeration walks a lexicographic tree of antichains of the quotient poset
(the generator sets form an independence system, so a failed node prunes
its whole subtree) and expands each antichain back to activity level.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .model import DeclarativeProcess, expand_successors
from .quotient import QuotientPoset, condense
from .relations import (
    BinaryRelation,
    closure,
    implied_occurrence,
    is_antisymmetric,
    order_preserving,
    restrict,
)


class Independence(Enum):
    INDEPENDENT = "independent"
    FAILS_ANTICHAIN = "fails_antichain"
    FAILS_ANTISYMMETRY = "fails_antisymmetry"


@dataclass(frozen=True)
class DownSet:
    """A realizable trace image with its induced ordering law.

    ``members`` is closed downward under the occurrence preorder, ``order``
    is the antisymmetric closure of the order-preserving relation restricted
    to ``members``, and ``generator`` is the maximal-element antichain whose
    downward closure gives ``members`` back.
    """

    members: frozenset[int]
    order: BinaryRelation
    generator: frozenset[int]


@dataclass(frozen=True)
class PossimContext:
    """Precomputed relations shared by independence checks for one process."""

    process: DeclarativeProcess
    occurrence: BinaryRelation
    ordering: BinaryRelation
    quotient: QuotientPoset

    @classmethod
    def of(cls, process: DeclarativeProcess) -> "PossimContext":
        expanded = expand_successors(process)
        occurrence = implied_occurrence(expanded)
        return cls(expanded, occurrence, order_preserving(expanded), condense(occurrence))


def max_elements(subset: Iterable[int], preorder: BinaryRelation) -> frozenset[int]:
    """Elements of ``subset`` with nothing strictly above them in ``subset``.

    On a preorder "strictly above" means related upward but not back, so a
    whole mutual-reachability class at the top counts as maximal.
    """
    items = sorted(set(subset))
    return frozenset(
        x
        for x in items
        if all(not preorder.has(x, y) or preorder.has(y, x) for y in items)
    )


def downward_closure(subset: Iterable[int], preorder: BinaryRelation) -> frozenset[int]:
    """Everything lying below some element of ``subset``; always a down-set."""
    targets = set(subset)
    return frozenset(
        x for x in preorder.member_indices() if any(preorder.has(x, y) for y in targets)
    )


def _strictly_comparable(x: int, y: int, preorder: BinaryRelation) -> bool:
    forward = preorder.has(x, y)
    backward = preorder.has(y, x)
    return forward != backward


def is_independent(
    candidate: Iterable[int], ctx: PossimContext
) -> tuple[Independence, DownSet | None]:
    """Decide whether ``candidate`` generates a realizable image.

    The four steps: check the antichain property, close downward, restrict
    the order-preserving relation and close it, then test antisymmetry.
    Mutually reachable elements do not violate the antichain property; only
    strict comparability does.
    """
    items = sorted(set(candidate))
    for at, x in enumerate(items):
        for y in items[at + 1 :]:
            if _strictly_comparable(x, y, ctx.occurrence):
                return Independence.FAILS_ANTICHAIN, None
    members = downward_closure(items, ctx.occurrence)
    order = closure(restrict(ctx.ordering, members))
    if not is_antisymmetric(order):
        return Independence.FAILS_ANTISYMMETRY, None
    return Independence.INDEPENDENT, DownSet(members, order, max_elements(members, ctx.occurrence))


def enumerate_possim(process: DeclarativeProcess) -> list[DownSet]:
    """All realizable trace images, each exactly once.

    Output is sorted by (size, member indices); the empty image is always
    present and comes first.
    """
    ctx = PossimContext.of(process)
    quotient = ctx.quotient
    k = len(quotient.classes)
    class_down = [
        frozenset().union(
            *(quotient.classes[d] for d in range(k) if quotient.order.has(d, c))
        )
        for c in range(k)
    ]
    n = ctx.occurrence.n
    empty_order = BinaryRelation(n, (0,) * n, 0)
    found = [DownSet(frozenset(), empty_order, frozenset())]

    def walk(chain: list[int], members: frozenset[int], generator: frozenset[int], start: int) -> None:
        for c in range(start, k):
            if any(quotient.order.has(c, d) or quotient.order.has(d, c) for d in chain):
                continue
            grown = members | class_down[c]
            order = closure(restrict(ctx.ordering, grown))
            if not is_antisymmetric(order):
                # No extension of this antichain can recover antisymmetry;
                # the whole subtree is dead.
                continue
            grown_generator = generator | quotient.classes[c]
            found.append(DownSet(grown, order, grown_generator))
            chain.append(c)
            walk(chain, grown, grown_generator, c + 1)
            chain.pop()

    walk([], frozenset(), frozenset(), 0)
    found.sort(key=lambda downset: (len(downset.members), sorted(downset.members)))
    return found
