import itertools
import random

import pytest

from foulkes.families import (
    BlockKind,
    Family,
    FamilyTuple,
    _bounded_blocks,
    closure,
    colex_initial_segment,
    colex_key,
    down_set_family,
    enumerate_closed_families,
    enumerate_minimal_tuple_types,
    family_type,
    is_closed,
    is_minimal_tuple,
    lower_covers,
    majorizes,
    tuple_closure,
    tuple_from_json,
    tuple_is_closed,
    tuple_to_json,
    tuple_type,
)
from foulkes.partitions import Partition, dominates, parse_partition

P = parse_partition
SET = BlockKind.SET
MULTI = BlockKind.MULTISET


class TestBlocks:
    def test_majorizes_examples(self):
        assert majorizes((1, 3), (2, 4))
        assert not majorizes((2, 3), (1, 5))
        assert not majorizes((1, 5), (2, 3))
        assert majorizes((1, 1), (1, 1))

    def test_majorizes_size_mismatch(self):
        with pytest.raises(ValueError):
            majorizes((1, 2), (1, 2, 3))

    def test_set_block_validation(self):
        with pytest.raises(ValueError):
            Family(2, SET, [(1, 1)])
        with pytest.raises(ValueError):
            Family(2, SET, [(0, 1)])
        with pytest.raises(ValueError):
            Family(2, SET, [(1, 2), (2, 1)])  # duplicates after sorting

    def test_decrement_moves_generate_majorization(self):
        # transitive closure of single decrements == the majorization order
        for kind, blocks in (
            (SET, _bounded_blocks(2, 5, SET)),
            (SET, _bounded_blocks(3, 4, SET)),
            (MULTI, _bounded_blocks(2, 5, MULTI)),
            (MULTI, _bounded_blocks(3, 4, MULTI)),
        ):
            universe = set(blocks)
            for b in blocks:
                reach = {b}
                frontier = [b]
                while frontier:
                    cur = frontier.pop()
                    for c in lower_covers(cur, kind):
                        if c not in reach:
                            reach.add(c)
                            frontier.append(c)
                below = {a for a in universe if majorizes(a, b)}
                assert reach == below, (kind, b)

    def test_colex_extends_majorization(self):
        for kind in (SET, MULTI):
            blocks = _bounded_blocks(3, 5, kind)
            for a, b in itertools.combinations(blocks, 2):
                if majorizes(a, b) and a != b:
                    assert colex_key(a) < colex_key(b)


def brute_is_closed(fam: Family) -> bool:
    blocks = set(fam.blocks)
    top = max((b[-1] for b in fam.blocks), default=0)
    if fam.kind is SET:
        universe = itertools.combinations(range(1, top + 1), fam.m)
    else:
        universe = itertools.combinations_with_replacement(range(1, top + 1), fam.m)
    for a in universe:
        if a in blocks:
            continue
        if any(majorizes(a, b) for b in blocks):
            return False
    return True


class TestClosedness:
    def test_examples(self):
        assert is_closed(Family(2, SET, [(1, 2), (1, 3), (1, 4)]))
        assert not is_closed(Family(2, SET, [(2, 4)]))
        ideal = down_set_family(2, SET, [(2, 4)])
        assert ideal == Family(2, SET, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
        assert is_closed(ideal)

    def test_matches_brute_force(self):
        rng = random.Random(7)
        for kind in (SET, MULTI):
            for m in (2, 3):
                blocks = _bounded_blocks(m, 5, kind)
                for _ in range(300):
                    n = rng.randint(1, 5)
                    fam = Family(m, kind, rng.sample(blocks, n))
                    assert is_closed(fam) == brute_is_closed(fam)


class TestClosure:
    def test_single_block_trace(self):
        # {2,4} -> {1,4} -> {1,3} -> {1,2}
        assert closure(Family(2, SET, [(2, 4)])) == Family(2, SET, [(1, 2)])

    def test_fixed_point(self):
        fam = Family(2, SET, [(1, 2), (1, 3), (2, 3)])
        assert closure(fam) == fam

    def test_multiset_example(self):
        got = closure(Family(2, MULTI, [(1, 1), (2, 2)]))
        assert got == Family(2, MULTI, [(1, 1), (1, 2)])

    def test_random_families_weakly_decrease_type(self):
        rng = random.Random(2024)
        for _ in range(400):
            kind = rng.choice((SET, MULTI))
            m = rng.randint(1, 3)
            n = rng.randint(1, 6)
            blocks = _bounded_blocks(m, n + 2, kind)
            fam = Family(m, kind, rng.sample(blocks, min(n, len(blocks))))
            closed = closure(fam)
            assert is_closed(closed)
            assert closed.size == fam.size
            before = family_type(fam)
            after = family_type(closed)
            assert after is not None
            if before is not None:
                assert dominates(before, after)


class TestTypes:
    def test_golden_set_tuple(self):
        t = FamilyTuple(
            [Family(2, SET, [(1, 2), (1, 3), (1, 4)]), Family(2, SET, [(1, 2)])]
        )
        assert tuple_type(t) == P("4,2,1,1")

    def test_golden_multiset_tuple(self):
        t = FamilyTuple(
            [Family(2, MULTI, [(1, 1), (1, 2), (1, 3)]), Family(2, MULTI, [(1, 1)])]
        )
        ty = tuple_type(t)
        assert ty == P("3,1,1,1,1,1")
        assert ty.conjugate() == P("6,1,1")

    def test_undefined_type(self):
        assert tuple_type(FamilyTuple([Family(2, SET, [(2, 3)])])) is None

    def test_occurrence_counts_sum(self):
        from foulkes.families import occurrence_counts

        rng = random.Random(5)
        for _ in range(50):
            kind = rng.choice((SET, MULTI))
            m = rng.randint(1, 3)
            fams = []
            for _ in range(rng.randint(1, 3)):
                pool = _bounded_blocks(m, 6, kind)
                fams.append(Family(m, kind, rng.sample(pool, rng.randint(1, 4))))
            t = FamilyTuple(fams)
            counts = occurrence_counts(t)
            assert sum(counts.values()) == t.m * sum(t.shapes)

    def test_closed_families_always_have_types(self):
        for kind in (SET, MULTI):
            for m in (1, 2, 3):
                for n in range(0, 5):
                    for fam in enumerate_closed_families(m, n, kind):
                        if n:
                            assert family_type(fam) is not None


class TestEnumeration:
    def test_unique_small_set_family(self):
        assert list(enumerate_closed_families(2, 2, SET)) == [
            Family(2, SET, [(1, 2), (1, 3)])
        ]

    def test_shape_2_4_contains_example(self):
        fams = list(enumerate_closed_families(2, 4, SET))
        assert Family(2, SET, [(1, 2), (1, 3), (1, 4), (2, 3)]) in fams

    def test_empty_shape(self):
        for kind in (SET, MULTI):
            assert list(enumerate_closed_families(3, 0, kind)) == [Family(3, kind, [])]

    def test_matches_brute_force_filter(self):
        # all n-subsets of the bounded block poset containing the bottom block
        for kind in (SET, MULTI):
            for m in (2, 3):
                for n in range(1, 6):
                    blocks = _bounded_blocks(m, n, kind)
                    bottom = blocks[0]
                    brute = {
                        Family(m, kind, (bottom,) + rest)
                        for rest in itertools.combinations(blocks[1:], n - 1)
                        if is_closed(Family(m, kind, (bottom,) + rest))
                    }
                    got = set(enumerate_closed_families(m, n, kind))
                    assert got == brute, (kind, m, n)


class TestMinimalTuples:
    def test_golden_example_set(self):
        got = enumerate_minimal_tuple_types(2, (3, 1), SET)
        assert set(got) == {P("4,2,1,1"), P("3,3,2")}
        assert got[P("4,2,1,1")] == FamilyTuple(
            [Family(2, SET, [(1, 2), (1, 3), (1, 4)]), Family(2, SET, [(1, 2)])]
        )
        assert got[P("3,3,2")] == FamilyTuple(
            [Family(2, SET, [(1, 2), (1, 3), (2, 3)]), Family(2, SET, [(1, 2)])]
        )

    def test_golden_example_multiset(self):
        got = enumerate_minimal_tuple_types(2, (3, 1), MULTI)
        assert set(got) == {P("3,1,1,1,1,1"), P("2,2,2,1,1")}
        assert {ty.conjugate() for ty in got} == {P("6,1,1"), P("5,3")}

    def test_single_block_components(self):
        for m in (1, 2, 3, 4):
            got = enumerate_minimal_tuple_types(m, (1,), SET)
            assert set(got) == {Partition([m])}
            witness = got[Partition([m])]
            assert witness.families[0].blocks == (tuple(range(1, m + 1)),)

    def test_witnesses_are_closed_and_minimal(self):
        for kind in (SET, MULTI):
            for shapes in ((3,), (2, 2), (3, 1), (2, 1, 1)):
                for ty, witness in enumerate_minimal_tuple_types(2, shapes, kind).items():
                    assert tuple_is_closed(witness)
                    assert tuple_type(witness) == ty
                    assert is_minimal_tuple(witness)


class TestIsMinimalTuple:
    def test_closed_but_not_minimal(self):
        p1 = down_set_family(2, SET, [(2, 4)])
        p2 = down_set_family(2, SET, [(1, 5)])
        t = FamilyTuple([p1, p2])
        assert tuple_is_closed(t)
        assert tuple_type(t) == P("5,4,4,2,1,1,1")
        assert not is_minimal_tuple(t)

    def test_golden_tuple_is_minimal(self):
        t = FamilyTuple(
            [Family(2, SET, [(1, 2), (1, 3), (1, 4)]), Family(2, SET, [(1, 2)])]
        )
        assert is_minimal_tuple(t)

    def test_undefined_type_raises(self):
        with pytest.raises(ValueError):
            is_minimal_tuple(FamilyTuple([Family(2, SET, [(2, 3)])]))


class TestColexSegments:
    def test_examples(self):
        assert colex_initial_segment(2, 4, SET) == Family(
            2, SET, [(1, 2), (1, 3), (2, 3), (1, 4)]
        )
        assert colex_initial_segment(3, 4, SET) == Family(
            3, SET, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
        )
        assert colex_initial_segment(2, 1, MULTI) == Family(2, MULTI, [(1, 1)])

    def test_segment_type_of_2_4(self):
        assert family_type(colex_initial_segment(2, 4, SET)) == P("4,3,1")

    def test_segments_are_closed_with_lex_least_type(self):
        for kind in (SET, MULTI):
            for m in (1, 2, 3):
                for n in range(1, 7):
                    seg = colex_initial_segment(m, n, kind)
                    assert is_closed(seg)
                    seg_type = family_type(seg)
                    all_types = {
                        family_type(f) for f in enumerate_closed_families(m, n, kind)
                    }
                    assert seg_type == min(all_types)

    def test_matches_sorted_combinations(self):
        import itertools as it

        blocks = sorted(it.combinations(range(1, 9), 3), key=colex_key)[:12]
        assert colex_initial_segment(3, 12, SET) == Family(3, SET, blocks)


class TestJson:
    def test_round_trip(self):
        t = FamilyTuple(
            [Family(2, SET, [(1, 2), (1, 3), (1, 4)]), Family(2, SET, [(1, 2)])]
        )
        data = tuple_to_json(t)
        assert data == {
            "m": 2,
            "kind": "set",
            "families": [[[1, 2], [1, 3], [1, 4]], [[1, 2]]],
        }
        assert tuple_from_json(data) == t

    def test_closure_tuple(self):
        t = FamilyTuple([Family(2, SET, [(2, 4)]), Family(2, SET, [(1, 3)])])
        closed = tuple_closure(t)
        assert tuple_is_closed(closed)
        assert closed.shapes == t.shapes
