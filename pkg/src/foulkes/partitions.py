"""Exact integer-partition arithmetic.

Partitions are weakly decreasing tuples of positive integers.  This module
provides conjugation, the dominance order, enumeration in descending
lexicographic order, diagonal-hook diagnostics and the two constructions the
constituent formulas need: the conjugate-join (column lengths add) and the
doubled partition with prescribed diagonal hook lengths.
"""

from __future__ import annotations

from enum import Enum
from functools import total_ordering
from math import factorial
from operator import index as _as_int
from typing import Iterable, Iterator, Sequence

from .errors import InternalConsistencyError

__all__ = [
    "Partition",
    "DominanceRelation",
    "parse_partition",
    "dominance_compare",
    "dominates",
    "dominance_minimal_elements",
    "dominance_maximal_elements",
    "conjugate_join",
    "double_from_distinct",
    "diagonal_hook_lengths",
    "dimension",
    "partitions_of",
    "distinct_part_partitions_of",
]


@total_ordering
class Partition:
    """A weakly decreasing sequence of positive integers.

    Instances are immutable and hashable.  Comparison operators give the
    lexicographic order on part sequences: the first differing part decides,
    and a proper prefix is smaller.
    """

    __slots__ = ("parts", "weight", "_conj")

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(_as_int(p) for p in parts)
        for i, p in enumerate(ps):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {ps}")
            if i and ps[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {ps}")
        self.parts = ps
        self.weight = sum(ps)
        self._conj: Partition | None = None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other: "Partition"):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts < other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based; zero beyond the last part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """The partition of column lengths of the Young diagram (memoized)."""
        if self._conj is None:
            cols = [0] * (self.parts[0] if self.parts else 0)
            for p in self.parts:
                for j in range(p):
                    cols[j] += 1
            conj = Partition(cols)
            conj._conj = self
            self._conj = conj
        return self._conj


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated partition; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(tok) for tok in text.split(","))


class DominanceRelation(Enum):
    STRICTLY_BELOW = "strictly-below"
    EQUAL = "equal"
    STRICTLY_ABOVE = "strictly-above"
    INCOMPARABLE = "incomparable"


def dominance_compare(lam: Partition, mu: Partition) -> DominanceRelation:
    """Compare two partitions of equal weight in the dominance order.

    ``STRICTLY_ABOVE`` means every prefix sum of ``lam`` is at least the
    matching prefix sum of ``mu``, with at least one strict inequality.
    Partitions of different weights live in different posets and raise.
    """
    if lam.weight != mu.weight:
        raise ValueError(
            f"dominance is only defined between equal weights: |{lam}|={lam.weight} "
            f"vs |{mu}|={mu.weight}"
        )
    if lam.parts == mu.parts:
        return DominanceRelation.EQUAL
    lam_ge = mu_ge = True
    sa = sb = 0
    for i in range(1, max(len(lam), len(mu)) + 1):
        sa += lam.part(i)
        sb += mu.part(i)
        if sa < sb:
            lam_ge = False
        elif sb < sa:
            mu_ge = False
    if lam_ge:
        return DominanceRelation.STRICTLY_ABOVE
    if mu_ge:
        return DominanceRelation.STRICTLY_BELOW
    return DominanceRelation.INCOMPARABLE


def dominates(lam: Partition, mu: Partition) -> bool:
    """Whether ``lam`` weakly dominates ``mu``."""
    return dominance_compare(lam, mu) in (
        DominanceRelation.EQUAL,
        DominanceRelation.STRICTLY_ABOVE,
    )


def _check_equal_weights(items: Sequence[Partition]) -> None:
    weights = {p.weight for p in items}
    if len(weights) > 1:
        raise ValueError(f"mixed weights in partition set: {sorted(weights)}")


def dominance_minimal_elements(partitions: Iterable[Partition]) -> set[Partition]:
    """The partitions in the set that strictly dominate no other member."""
    items = list(set(partitions))
    _check_equal_weights(items)
    return {
        p
        for p in items
        if not any(
            dominance_compare(p, q) is DominanceRelation.STRICTLY_ABOVE for q in items
        )
    }


def dominance_maximal_elements(partitions: Iterable[Partition]) -> set[Partition]:
    """The partitions in the set strictly dominated by no other member."""
    items = list(set(partitions))
    _check_equal_weights(items)
    return {
        p
        for p in items
        if not any(
            dominance_compare(p, q) is DominanceRelation.STRICTLY_BELOW for q in items
        )
    }


def conjugate_join(partitions: Sequence[Partition]) -> Partition:
    """Combine partitions by adding column lengths.

    Returns the partition whose conjugate is the componentwise sum of the
    conjugates of the inputs.  Occurrence counts of combined family tuples
    add, so their types combine exactly this way.
    """
    cols: list[int] = []
    for p in partitions:
        for i, c in enumerate(p.conjugate().parts):
            if i < len(cols):
                cols[i] += c
            else:
                cols.append(c)
    return Partition(cols).conjugate()


def diagonal_hook_lengths(lam: Partition) -> tuple[int, ...]:
    """Hook lengths of the boxes on the leading diagonal."""
    conj = lam.conjugate()
    hooks = []
    i = 1
    while lam.part(i) >= i:
        hooks.append(lam.part(i) + conj.part(i) - 2 * i + 1)
        i += 1
    return tuple(hooks)


def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of this shape (hook-length formula)."""
    conj = lam.conjugate()
    prod = 1
    for i, row in enumerate(lam.parts, start=1):
        for j in range(1, row + 1):
            prod *= row - j + conj.part(j) - i + 1
    quot, rem = divmod(factorial(lam.weight), prod)
    if rem:
        raise InternalConsistencyError(f"hook product does not divide {lam.weight}!")
    return quot


def double_from_distinct(alpha: Partition) -> Partition:
    """Double a strictly decreasing partition into a partition of twice its weight.

    The result is the unique partition whose leading diagonal hook lengths are
    ``2*alpha_i`` and whose i-th row is ``alpha_i + i`` for each part of
    ``alpha``.  The output is re-verified against the hook-length description
    because the two characterizations are redundant.
    """
    parts = alpha.parts
    if any(parts[i] <= parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must be strictly decreasing: {alpha}")
    if not parts:
        return Partition()
    r = len(parts)
    rows = [parts[i] + i + 1 for i in range(r)]
    # Column j (1-based, j <= r) has length alpha_j + j - 1; rows below the
    # diagonal read off those column lengths.
    cols = [parts[i] + i for i in range(r)]
    for i in range(r + 1, parts[0] + 1):
        rows.append(sum(1 for c in cols if c >= i))
    lam = Partition(rows)
    hooks = diagonal_hook_lengths(lam)
    ok = (
        lam.weight == 2 * alpha.weight
        and len(hooks) == r
        and all(hooks[i] == 2 * parts[i] for i in range(r))
        and all(lam.part(i + 1) == parts[i] + i + 1 for i in range(r))
    )
    if not ok:
        raise InternalConsistencyError(
            f"doubled partition {lam} fails the hook characterization of {alpha}"
        )
    return lam


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n``, in descending lexicographic order."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    bound = n if max_part is None else min(max_part, n)
    buf: list[int] = []

    def rec(remaining: int, top: int) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(buf)
            return
        for p in range(min(remaining, top), 0, -1):
            buf.append(p)
            yield from rec(remaining - p, p)
            buf.pop()

    yield from rec(n, bound)


def distinct_part_partitions_of(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` with strictly decreasing parts, descending lex order."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    buf: list[int] = []

    def rec(remaining: int, top: int) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(buf)
            return
        for p in range(min(remaining, top), 0, -1):
            buf.append(p)
            yield from rec(remaining - p, p - 1)
            buf.pop()

    yield from rec(n, n)
