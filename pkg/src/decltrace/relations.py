"""Dense binary relations over activity indices, plus the relations a
constraint set induces.

Relations are stored as one integer bitmask per row: bit j of ``rows[i]``
means (i, j) is related.  A relation also carries a ``members`` mask naming
the ground subset it currently lives on, so restrictions keep global
indexing instead of renumbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .model import ConstraintKind, DeclarativeProcess


def _mask(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class BinaryRelation:
    n: int
    rows: tuple[int, ...]
    members: int

    def __post_init__(self) -> None:
        full = (1 << self.n) - 1
        if self.members & ~full:
            raise ValueError("members mask outside the ground set")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one row per ground-set index")
        for i, row in enumerate(self.rows):
            if row & ~self.members or (row and not self.members >> i & 1):
                raise ValueError("all pairs must lie inside the members mask")

    @classmethod
    def from_pairs(
        cls, n: int, pairs: Iterable[tuple[int, int]] = (), members: Iterable[int] | None = None
    ) -> "BinaryRelation":
        mask = (1 << n) - 1 if members is None else _mask(members)
        rows = [0] * n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"pair ({i}, {j}) outside the ground set")
            rows[i] |= 1 << j
        return cls(n, tuple(rows), mask)

    def has(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.rows):
            for j in _bits(row):
                yield i, j

    def member_indices(self) -> list[int]:
        return list(_bits(self.members))


def closure(rel: BinaryRelation) -> BinaryRelation:
    """Reflexive transitive closure on the relation's members."""
    rows = list(rel.rows)
    indices = rel.member_indices()
    for i in indices:
        rows[i] |= 1 << i
    for k in indices:
        bit = 1 << k
        reach = rows[k]
        for i in indices:
            if rows[i] & bit:
                rows[i] |= reach
    return BinaryRelation(rel.n, tuple(rows), rel.members)


def transpose(rel: BinaryRelation) -> BinaryRelation:
    rows = [0] * rel.n
    for i, j in rel.pairs():
        rows[j] |= 1 << i
    return BinaryRelation(rel.n, tuple(rows), rel.members)


def restrict(rel: BinaryRelation, subset: Iterable[int]) -> BinaryRelation:
    """Keep only pairs with both endpoints in ``subset``; indices are global."""
    wanted = _mask(subset)
    if wanted & ~((1 << rel.n) - 1):
        raise ValueError("subset outside the ground set")
    members = rel.members & wanted
    rows = tuple(rel.rows[i] & wanted if members >> i & 1 else 0 for i in range(rel.n))
    return BinaryRelation(rel.n, rows, members)


def is_antisymmetric(rel: BinaryRelation) -> bool:
    for i, j in rel.pairs():
        if i != j and rel.rows[j] >> i & 1:
            return False
    return True


def is_preorder(rel: BinaryRelation) -> bool:
    return closure(rel) == rel


def is_partial_order(rel: BinaryRelation) -> bool:
    return is_preorder(rel) and is_antisymmetric(rel)


def hasse_pairs(rel: BinaryRelation) -> list[tuple[int, int]]:
    """Cover pairs of a partial order: (i, j) with nothing strictly between."""
    strict = [rel.rows[i] & ~(1 << i) for i in range(rel.n)]
    covers = []
    for i in rel.member_indices():
        for j in _bits(strict[i]):
            if not any(strict[k] >> j & 1 for k in _bits(strict[i] & ~(1 << j))):
                covers.append((i, j))
    return covers


def _require_expanded(process: DeclarativeProcess) -> None:
    if any(c.kind is ConstraintKind.SUCCESSOR for c in process.constraints):
        raise ValueError("expand successor constraints first")


def implied_occurrence(process: DeclarativeProcess) -> BinaryRelation:
    """The occurrence preorder: (a, b) present when b occurring forces a.

    ``prec a b`` and ``resp b a`` both contribute the pair (a, b); the base
    pairs are then closed reflexively and transitively.
    """
    _require_expanded(process)
    pairs = []
    for c in process.constraints:
        if c.kind is ConstraintKind.PRECEDENCE:
            pairs.append((c.source.index, c.target.index))
        else:
            pairs.append((c.target.index, c.source.index))
    return closure(BinaryRelation.from_pairs(process.n, pairs))


def order_preserving(process: DeclarativeProcess) -> BinaryRelation:
    """Pairwise ordering obligations: (a, b) when a must precede b if both occur.

    Deliberately not closed: transiting through an activity that does not
    occur would manufacture ordering obligations that do not exist.
    """
    _require_expanded(process)
    pairs = [(c.source.index, c.target.index) for c in process.constraints]
    return BinaryRelation.from_pairs(process.n, pairs)


def order_on_downset(process: DeclarativeProcess, downset: Iterable[int]) -> BinaryRelation:
    """The ordering law inside one occurrence-closed image.

    Restriction strictly before closure; the reverse order is wrong in
    general (see ``order_preserving``).
    """
    return closure(restrict(order_preserving(process), downset))
