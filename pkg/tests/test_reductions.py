"""Reduction constructions: chunk building, witnesses, drawing instances."""

import dataclasses

import pytest

from untangling import (
    DistIcorInstance,
    ThreePartitionInstance,
    chunk_property_check,
    classify,
    crossings,
    exact_3partition,
    reduce_3p_to_disticor,
    reduce_disticor_to_cu,
    witness_3p_to_disticor,
)
from untangling.errors import InvalidInstance, NotAWitness, NotDistinct, PropertyViolation
from untangling.reductions import expected_chunk_length


@pytest.fixture(scope="module")
def reduced_m1():
    return reduce_3p_to_disticor(ThreePartitionInstance((9, 9, 12), 30))


def test_instance_validation():
    with pytest.raises(InvalidInstance):
        ThreePartitionInstance((1, 1, 2), 4)  # violates the quarter bounds
    with pytest.raises(InvalidInstance):
        ThreePartitionInstance((9, 9), 30)
    with pytest.raises(NotDistinct):
        DistIcorInstance(((1, 2), (2, 3)), 1)


def test_chunk_sizes_match_closed_form(reduced_m1):
    red = reduced_m1
    assert red.scale == 1 and red.x == 90 and red.block == 300
    assert red.instance.m_target == 300
    for i, ch in enumerate(red.chunks):
        assert len(ch.ranks) == expected_chunk_length(red, i)
        assert len(ch.ranks) == (red.source.a[i] + red.x) * 3 * red.source.m * (
            red.source.k - red.source.a[i] + 1
        )


def test_normalization_applies_when_needed():
    red = reduce_3p_to_disticor(ThreePartitionInstance((3, 3, 4), 10))
    assert red.scale == 3
    assert red.source.a == (9, 9, 12) and red.source.k == 30


def test_ranks_are_a_bijection(reduced_m1):
    all_ranks = [r for ch in reduced_m1.chunks for r in ch.ranks]
    assert sorted(all_ranks) == list(range(1, len(all_ranks) + 1))


def test_reduction_is_deterministic():
    a = reduce_3p_to_disticor(ThreePartitionInstance((9, 9, 12), 30))
    b = reduce_3p_to_disticor(ThreePartitionInstance((9, 9, 12), 30))
    assert a.instance == b.instance


def test_witness_m1_projection_is_full_range(reduced_m1):
    w = witness_3p_to_disticor(reduced_m1, [(0, 1, 2)])
    assert len(w.ranks) == reduced_m1.instance.m_target
    assert all(a < b for a, b in zip(w.ranks, w.ranks[1:]))
    assert list(w.projection) == list(range(1, reduced_m1.block + 1))


def test_witness_m2():
    inst = ThreePartitionInstance((12, 12, 18, 12, 12, 18), 42)
    ok, triplets = exact_3partition(inst.a, inst.k)
    assert ok
    red = reduce_3p_to_disticor(inst)
    w = witness_3p_to_disticor(red, triplets)
    assert len(w.ranks) == red.instance.m_target == 2 * red.block
    assert all(a < b for a, b in zip(w.ranks, w.ranks[1:]))


def test_witness_rejects_bad_partition(reduced_m1):
    with pytest.raises(NotAWitness):
        witness_3p_to_disticor(reduced_m1, [(0, 1, 1)])
    inst = ThreePartitionInstance((12, 12, 18, 12, 12, 18), 42)
    red = reduce_3p_to_disticor(inst)
    with pytest.raises(NotAWitness):
        witness_3p_to_disticor(red, [(0, 1, 3), (2, 4, 5)])  # triplet sums miss K


def test_chunk_properties_pass(reduced_m1):
    report = chunk_property_check(reduced_m1)
    assert report.checked == ("i", "ii", "iii", "iv", "v")


def test_chunk_properties_catch_mutation(reduced_m1):
    ch0 = reduced_m1.chunks[0]
    ranks = list(ch0.ranks)
    ranks[10], ranks[500] = ranks[500], ranks[10]
    bad = dataclasses.replace(
        reduced_m1, chunks=(dataclasses.replace(ch0, ranks=tuple(ranks)),) + reduced_m1.chunks[1:]
    )
    with pytest.raises(PropertyViolation):
        chunk_property_check(bad)


def test_reduce_disticor_fig3():
    inst = DistIcorInstance(((2, 5), (1, 8, 4), (6, 7, 9, 3)), 5)
    d, budget = reduce_disticor_to_cu(inst)
    assert d.order == tuple(f"v{i}" for i in range(10))
    assert budget == 9 - 5
    cycles = {
        frozenset({("v0", "v2"), ("v2", "v5"), ("v0", "v5")}),
        frozenset({("v0", "v1"), ("v1", "v8"), ("v4", "v8"), ("v0", "v4")}),
        frozenset({("v0", "v6"), ("v6", "v7"), ("v7", "v9"), ("v3", "v9"), ("v0", "v3")}),
    }
    assert frozenset(d.graph.edges) == frozenset(e for c in cycles for e in c)


def test_reduce_disticor_increasing_chunk_is_planar():
    inst = DistIcorInstance(((1, 2, 3, 4, 5),), 5)
    d, budget = reduce_disticor_to_cu(inst)
    assert budget == 0
    assert len(crossings(d)) == 0


def test_reduce_disticor_requires_distinct():
    inst = DistIcorInstance(((1, 2), (3, 4)), 2, distinct=False)
    with pytest.raises(NotDistinct):
        reduce_disticor_to_cu(inst)


def test_reduced_drawings_classify_almost_planar_or_planar():
    inst = DistIcorInstance(((2, 5), (1, 8, 4), (6, 7, 9, 3)), 5)
    d, _ = reduce_disticor_to_cu(inst)
    assert classify(d).kind in ("planar", "almost-planar", "not-almost-planar")
    assert len(crossings(d)) > 0
