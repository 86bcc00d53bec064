"""General untangler: bound, planarity, witness validity, tight instances."""

from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from untangling import (
    CircularDrawing,
    cycle_graph,
    exact_min_untangle,
    gen_fig5,
    gen_random,
    gen_tight_general,
    general_bound,
    lccs,
    planar_circular_order,
    untangle_general,
    verify_untangling,
)
from untangling.errors import InvalidN, Unsupported
from untangling.model import cyclic_equal, restriction


def test_planar_input_needs_no_moves():
    g = cycle_graph(7)
    d = CircularDrawing(g, g.vertices)
    assert len(untangle_general(d)) == 0


def test_tight_n6_matches_exact_oracle():
    d = gen_tight_general(6)
    assert general_bound(6) == 2
    u = untangle_general(d)
    rep = verify_untangling(d, u)
    assert rep.planar_ok and rep.moved_count == 2
    assert exact_min_untangle(d).moved_count == 2


def test_fig5_n8_within_bound_optimum_three():
    d = gen_fig5(8)
    assert general_bound(8) == 4
    u = untangle_general(d)
    rep = verify_untangling(d, u)
    assert rep.planar_ok and rep.moved_count <= 4
    assert exact_min_untangle(d).moved_count == 3


@pytest.mark.parametrize("n,expect", [(4, 1), (6, 2), (11, 6)])
def test_gen_tight_values(n, expect):
    d = gen_tight_general(n)
    assert general_bound(n) == expect
    # a cycle's planar order is unique up to reflection: the exact answer is
    # two common-cyclic-subsequence computations
    base = tuple(d.graph.vertices)
    rev = (base[0],) + tuple(reversed(base[1:]))
    best = max(len(lccs(d.order, base)), len(lccs(d.order, rev)))
    assert n - best == expect
    if n <= 9:
        assert exact_min_untangle(d).moved_count == expect


def test_gen_tight_out_of_range():
    with pytest.raises(Unsupported):
        gen_tight_general(20)
    with pytest.raises(InvalidN):
        gen_tight_general(3)


def test_cycle_shift_equals_monotone_complement():
    # for cycles, the optimum equals n minus the best monotone cyclic
    # subsequence of the rank sequence, cross-checked with the full oracle
    import random

    rng = random.Random("cycle-shift")
    for n in (5, 6, 7, 8, 9):
        g = cycle_graph(n)
        for _ in range(4):
            order = list(g.vertices)
            rng.shuffle(order)
            d = CircularDrawing(g, order)
            base = planar_circular_order(g).order
            rev = (base[0],) + tuple(reversed(base[1:]))
            best = max(len(lccs(d.order, base)), len(lccs(d.order, rev)))
            assert exact_min_untangle(d).moved_count == len(d.order) - best


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000), st.integers(5, 24))
def test_untangle_general_properties(seed, n):
    d = gen_random(n, seed, "outerplanar-order-perturbed")
    u = untangle_general(d)
    rep = verify_untangling(d, u)
    assert rep.planar_ok and rep.fixed_set_ok
    assert rep.moved_count <= general_bound(n)
    # the fixed vertices form a cyclic subsequence of both the input order
    # and the final order by construction
    fixed = [v for v in d.order if v not in u.moved_set()]
    assert cyclic_equal(restriction(d.order, fixed), restriction(rep.result.order, fixed))


def test_disconnected_graphs_supported():
    d = gen_random(12, 5, "disconnected")
    u = untangle_general(d)
    rep = verify_untangling(d, u)
    assert rep.planar_ok and rep.moved_count <= general_bound(12)


def test_general_bound_values():
    assert [general_bound(n) for n in (2, 3, 4, 6, 11)] == [0, 0, 1, 2, 6]
    assert general_bound(8) == 8 - isqrt(6) - 2 == 4
