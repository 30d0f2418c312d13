"""Families of m-subsets and m-multisets under majorization.

A block is a sorted tuple of ``m`` positive integers, strictly increasing for
set blocks.  ``B`` majorizes ``A`` (written ``A <= B`` here) when the r-th
smallest element of ``A`` is at most the r-th smallest element of ``B`` for
every ``r``.  A family is *closed* when it is a down-set (order ideal) for
majorization, and the covering moves of the order are the single decrements
``i+1 -> i`` inside one block that yield a valid block.

Ground-set bound used throughout the enumeration code: a closed family of
``n`` blocks containing a block with maximum element ``x`` already contains
the blocks ``{1,..,m-1,y}`` for ``m <= y <= x`` (sets), respectively
``{1,..,1,y}`` for ``1 <= y <= x`` (multisets), so ``x <= m + n - 1``
(sets) or ``x <= n`` (multisets).  Enumeration over the bounded ground set is
therefore finite and complete.
"""

from __future__ import annotations

import itertools
from collections import Counter
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .partitions import Partition, dominance_minimal_elements

__all__ = [
    "BlockKind",
    "Block",
    "Family",
    "FamilyTuple",
    "validate_block",
    "majorizes",
    "lower_covers",
    "colex_key",
    "is_closed",
    "tuple_is_closed",
    "closure",
    "tuple_closure",
    "occurrence_counts",
    "family_type",
    "tuple_type",
    "enumerate_closed_families",
    "enumerate_minimal_tuple_types",
    "is_minimal_tuple",
    "colex_initial_segment",
    "down_set_family",
    "tuple_to_json",
    "tuple_from_json",
]

Block = tuple[int, ...]


class BlockKind(str, Enum):
    SET = "set"
    MULTISET = "multiset"


def validate_block(block: Iterable[int], m: int, kind: BlockKind) -> Block:
    """Normalize a block to a sorted tuple and check it fits the kind."""
    b = tuple(sorted(int(x) for x in block))
    if len(b) != m:
        raise ValueError(f"block {b} does not have {m} elements")
    if b and b[0] < 1:
        raise ValueError(f"block elements must be positive: {b}")
    if kind is BlockKind.SET and any(b[i] == b[i + 1] for i in range(len(b) - 1)):
        raise ValueError(f"set blocks may not repeat elements: {b}")
    return b


def majorizes(a: Block, b: Block) -> bool:
    """Whether ``a <= b`` in majorization: elementwise on sorted sequences."""
    if len(a) != len(b):
        raise ValueError(f"blocks of different size are incomparable: {a} vs {b}")
    return all(x <= y for x, y in zip(a, b))


def colex_key(block: Block) -> tuple[int, ...]:
    """Sort key for the colexicographic order (largest differing element decides)."""
    return tuple(reversed(block))


def lower_covers(block: Block, kind: BlockKind) -> list[Block]:
    """Blocks covered by ``block``: decrement one element where valid.

    For multisets a value repeated several times yields a single cover (the
    decrement that keeps the tuple sorted).
    """
    out = []
    for r, v in enumerate(block):
        if v == 1:
            continue
        prev = block[r - 1] if r else 0
        ok = (v - 1 > prev) if kind is BlockKind.SET else (v - 1 >= prev)
        if ok:
            out.append(block[:r] + (v - 1,) + block[r + 1 :])
    return out


class Family:
    """A family of distinct blocks sharing one size ``m`` and one kind.

    Blocks are stored sorted in colexicographic order so equal families have
    identical serializations.
    """

    __slots__ = ("m", "kind", "blocks")

    def __init__(self, m: int, kind: BlockKind | str, blocks: Iterable[Iterable[int]]):
        if m < 1:
            raise ValueError("block size m must be at least 1")
        kind = BlockKind(kind)
        normalized = [validate_block(b, m, kind) for b in blocks]
        ordered = tuple(sorted(normalized, key=colex_key))
        for i in range(len(ordered) - 1):
            if ordered[i] == ordered[i + 1]:
                raise ValueError(f"family blocks must be distinct: {ordered[i]}")
        self.m = m
        self.kind = kind
        self.blocks = ordered

    @property
    def size(self) -> int:
        """Number of blocks; the family has shape (m^size)."""
        return len(self.blocks)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Family)
            and self.m == other.m
            and self.kind == other.kind
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.m, self.kind, self.blocks))

    def __repr__(self) -> str:
        return f"Family(m={self.m}, kind={self.kind.value!r}, blocks={list(self.blocks)!r})"


class FamilyTuple:
    """A nonempty sequence of families sharing ``m`` and kind.

    Component families may repeat; distinctness of blocks holds only within
    each component.
    """

    __slots__ = ("m", "kind", "families")

    def __init__(self, families: Sequence[Family]):
        fams = tuple(families)
        if not fams:
            raise ValueError("a family tuple needs at least one component")
        m, kind = fams[0].m, fams[0].kind
        for f in fams:
            if f.m != m or f.kind != kind:
                raise ValueError("all component families must share m and kind")
        self.m = m
        self.kind = kind
        self.families = fams

    @property
    def shapes(self) -> tuple[int, ...]:
        """Block counts of the components: shapes (m^{n_1}), ..., (m^{n_k})."""
        return tuple(f.size for f in self.families)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FamilyTuple) and self.families == other.families

    def __hash__(self) -> int:
        return hash(self.families)

    def __repr__(self) -> str:
        return f"FamilyTuple({list(self.families)!r})"


def occurrence_counts(obj: Family | FamilyTuple) -> Counter[int]:
    """Total occurrences of each positive integer across all blocks."""
    families = obj.families if isinstance(obj, FamilyTuple) else (obj,)
    counts: Counter[int] = Counter()
    for fam in families:
        for block in fam.blocks:
            counts.update(block)
    return counts


def _type_from_counts(counts: Mapping[int, int]) -> Partition | None:
    top = max(counts, default=0)
    seq = [counts.get(i, 0) for i in range(1, top + 1)]
    if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)) or (seq and seq[-1] == 0):
        return None
    return Partition(seq).conjugate()


def family_type(fam: Family) -> Partition | None:
    """The partition whose conjugate lists the occurrence counts, if defined."""
    return _type_from_counts(occurrence_counts(fam))


def tuple_type(t: FamilyTuple) -> Partition | None:
    """Type of a family tuple: counts add across components.

    Returns ``None`` when the count sequence is not weakly decreasing (not
    every tuple possesses a type).
    """
    return _type_from_counts(occurrence_counts(t))


def is_closed(fam: Family) -> bool:
    """Whether the family is a down-set in the majorization order.

    Equivalent to the definition with arbitrary majorized blocks because the
    covering moves are the single decrements.
    """
    blocks = set(fam.blocks)
    return all(
        cover in blocks for b in fam.blocks for cover in lower_covers(b, fam.kind)
    )


def tuple_is_closed(t: FamilyTuple) -> bool:
    """A tuple is closed when every component family is closed."""
    return all(is_closed(f) for f in t.families)


def closure(fam: Family) -> Family:
    """Rewrite blocks downward until the family is an order ideal.

    Each step replaces one block ``A`` containing ``i+1`` by
    ``A - {i+1} + {i}`` when that block is valid and absent from the family,
    always choosing the lexicographically smallest applicable ``(block, i)``
    pair, so the result is deterministic.  The shape is preserved, and the
    type never increases in dominance when it was defined to begin with.
    """
    blocks = set(fam.blocks)
    while True:
        move = None
        for a in sorted(blocks):
            # lower_covers scans positions left to right, i.e. ascending i.
            for b in lower_covers(a, fam.kind):
                if b not in blocks:
                    move = (a, b)
                    break
            if move:
                break
        if move is None:
            return Family(fam.m, fam.kind, blocks)
        blocks.discard(move[0])
        blocks.add(move[1])


def tuple_closure(t: FamilyTuple) -> FamilyTuple:
    """Componentwise closure of a family tuple."""
    return FamilyTuple([closure(f) for f in t.families])


def down_set_family(m: int, kind: BlockKind | str, generators: Iterable[Iterable[int]]) -> Family:
    """The smallest closed family containing the given blocks."""
    kind = BlockKind(kind)
    gens = [validate_block(b, m, kind) for b in generators]
    seen: set[Block] = set()
    stack = list(gens)
    while stack:
        b = stack.pop()
        if b in seen:
            continue
        seen.add(b)
        stack.extend(lower_covers(b, kind))
    return Family(m, kind, seen)


def _colex_sets_bounded(k: int, top: int) -> Iterator[Block]:
    if k == 0:
        yield ()
        return
    for mx in range(k, top + 1):
        for rest in _colex_sets_bounded(k - 1, mx - 1):
            yield rest + (mx,)


def _colex_multisets_bounded(k: int, top: int) -> Iterator[Block]:
    if k == 0:
        yield ()
        return
    for mx in range(1, top + 1):
        for rest in _colex_multisets_bounded(k - 1, mx):
            yield rest + (mx,)


def _colex_blocks(m: int, kind: BlockKind) -> Iterator[Block]:
    """All blocks over the positive integers, in colexicographic order."""
    if kind is BlockKind.SET:
        for mx in itertools.count(m):
            for rest in _colex_sets_bounded(m - 1, mx - 1):
                yield rest + (mx,)
    else:
        for mx in itertools.count(1):
            for rest in _colex_multisets_bounded(m - 1, mx):
                yield rest + (mx,)


def _bounded_blocks(m: int, n: int, kind: BlockKind) -> tuple[Block, ...]:
    top = m + n - 1 if kind is BlockKind.SET else n
    if kind is BlockKind.SET:
        return tuple(_colex_sets_bounded(m, top))
    return tuple(_colex_multisets_bounded(m, top))


@lru_cache(maxsize=None)
def _closed_families(m: int, n: int, kind: BlockKind) -> tuple[Family, ...]:
    if n == 0:
        return (Family(m, kind, []),)
    blocks = _bounded_blocks(m, n, kind)
    covers = {b: lower_covers(b, kind) for b in blocks}
    out: list[Family] = []
    chosen: list[Block] = []
    chosen_set: set[Block] = set()

    # Colex order is a linear extension of majorization, so every ideal is
    # produced exactly once by adding its blocks in colex order, each block
    # only after all its covers.
    def extend(start: int) -> None:
        if len(chosen) == n:
            out.append(Family(m, kind, chosen))
            return
        need = n - len(chosen)
        for idx in range(start, len(blocks)):
            if len(blocks) - idx < need:
                break
            b = blocks[idx]
            if all(c in chosen_set for c in covers[b]):
                chosen.append(b)
                chosen_set.add(b)
                extend(idx + 1)
                chosen.pop()
                chosen_set.discard(b)

    extend(0)
    return tuple(out)


def enumerate_closed_families(m: int, n: int, kind: BlockKind | str) -> Iterator[Family]:
    """Exactly the closed families of shape (m^n), each once.

    Deterministic order given by the colex-prefix search.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    yield from _closed_families(m, n, BlockKind(kind))


def _tuple_sort_key(t: FamilyTuple):
    return tuple(f.blocks for f in t.families)


def enumerate_minimal_tuple_types(
    m: int, shapes: Sequence[int], kind: BlockKind | str
) -> dict[Partition, FamilyTuple]:
    """Dominance-minimal types over all tuples with the given block counts.

    Minimal tuples are closed, and closing any tuple weakly lowers its type,
    so it suffices to scan the Cartesian product of closed families per
    component.  Returns each minimal type with its lexicographically least
    closed witness tuple, keys sorted in descending lexicographic order.
    """
    kind = BlockKind(kind)
    if not shapes or any(nj < 1 for nj in shapes):
        raise ValueError("each component must contain at least one block")
    lists = [_closed_families(m, nj, kind) for nj in shapes]
    best: dict[Partition, FamilyTuple] = {}
    for combo in itertools.product(*lists):
        t = FamilyTuple(combo)
        ty = tuple_type(t)
        if ty is None:  # closed tuples always have a type
            raise AssertionError(f"closed tuple without type: {t}")
        held = best.get(ty)
        if held is None or _tuple_sort_key(t) < _tuple_sort_key(held):
            best[ty] = t
    minimal = dominance_minimal_elements(best.keys())
    return {ty: best[ty] for ty in sorted(minimal, reverse=True)}


@lru_cache(maxsize=None)
def _closed_tuple_types(m: int, shapes: tuple[int, ...], kind: BlockKind) -> frozenset[Partition]:
    lists = [_closed_families(m, nj, kind) for nj in shapes]
    return frozenset(
        tuple_type(FamilyTuple(combo)) for combo in itertools.product(*lists)
    )


def is_minimal_tuple(t: FamilyTuple) -> bool:
    """Whether no tuple of the same shapes has a strictly dominated type."""
    ty = tuple_type(t)
    if ty is None:
        raise ValueError("tuple has no defined type")
    types = _closed_tuple_types(t.m, tuple(sorted(t.shapes)), t.kind)
    return ty in dominance_minimal_elements(types | {ty})


def colex_initial_segment(m: int, n: int, kind: BlockKind | str) -> Family:
    """The family of the first ``n`` blocks in colexicographic order.

    Colex extends majorization, so initial segments are always closed; they
    realize the lexicographically least type of their shape.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    kind = BlockKind(kind)
    return Family(m, kind, itertools.islice(_colex_blocks(m, kind), n))


def tuple_to_json(t: FamilyTuple) -> dict:
    """JSON form: {"m": 2, "kind": "set", "families": [[[1,2],[1,3]], ...]}."""
    return {
        "m": t.m,
        "kind": t.kind.value,
        "families": [[list(b) for b in f.blocks] for f in t.families],
    }


def tuple_from_json(data: Mapping) -> FamilyTuple:
    """Inverse of :func:`tuple_to_json`."""
    m = int(data["m"])
    kind = BlockKind(data["kind"])
    return FamilyTuple([Family(m, kind, fam) for fam in data["families"]])
