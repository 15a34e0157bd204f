from __future__ import annotations

import pytest
from hypothesis import assume, given

from conftest import multigraphs
from edgesplit.coloring import EdgeColoring, is_proper, partition_relative
from edgesplit.decompose import (
    MAX_AUX_SWAPS,
    DecompositionError,
    DescentState,
    OverlapTrace,
    decompose_class1_pair,
    decompose_max_subgraph,
    eliminate_odd_cycles,
    normalize_max_subgraph,
    odd_cycles,
    part_degrees,
    reduce_missing_overlap,
    split_by_missing_pair,
    split_minimal_class,
    verify_decomposition,
)
from edgesplit.multigraph import build
from edgesplit.oracle import chromatic_index, max_delta_colorable_size, max_delta_colorable_subgraph_exact
from edgesplit.structures import make_shannon


def degrees(g, dec):
    return max(part_degrees(g, dec.part1), default=0), max(part_degrees(g, dec.part2), default=0)


def sub_chi(g, edges):
    return chromatic_index(g.subgraph(edges)[0]).chi


def assert_partition(g, dec):
    assert sorted(dec.part1 + dec.part2) == list(range(g.m))
    res = verify_decomposition(g, dec)
    assert res["ok"], res["problems"]
    assert sub_chi(g, dec.part1) + sub_chi(g, dec.part2) >= chromatic_index(g).chi
    return res


def test_split_by_missing_pair_triangle(k3):
    phi = EdgeColoring(k3, 3, (1, 2, 3))
    # vertex 0 misses 3, vertex 1 misses 2
    dec = split_by_missing_pair(k3, phi, 0, 1)
    assert (len(dec.part1), len(dec.part2)) == (2, 1)
    assert dec.targets == (2, 1)
    assert_partition(k3, dec)


def test_split_by_missing_pair_max_degree_vertex(s4):
    phi = chromatic_index(s4).certificate
    dec = split_by_missing_pair(s4, phi, 0, 1)
    assert degrees(s4, dec) == (4, 2)


def test_split_by_missing_pair_shared_color(k3):
    phi = EdgeColoring(k3, 4, (1, 2, 3))
    with pytest.raises(DecompositionError, match="missing at both"):
        split_by_missing_pair(k3, phi, 0, 1)


@pytest.mark.parametrize("name, parts", [("k3", (2, 1)), ("pet", (3, 1)), ("s4", (4, 2))])
def test_split_minimal_class(request, name, parts):
    g = request.getfixturevalue(name)
    dec = split_minimal_class(g)
    assert degrees(g, dec) == parts
    res = assert_partition(g, dec)
    assert res["part1"]["class_I"] and res["part2"]["class_I"]
    sizes = dec.counters["E1_sizes"]
    assert all(b < a for a, b in zip(sizes, sizes[1:])) and len(sizes) <= g.m


def test_class_one_rejected():
    with pytest.raises(DecompositionError, match="class I"):
        split_minimal_class(build(3, [(0, 1), (1, 2)]))


def test_normalize_s4(s4):
    state = normalize_max_subgraph(s4, max_delta_colorable_subgraph_exact(s4))
    assert max(part_degrees(s4, state.h2)) <= 2
    assert len(state.h1) == 4


def test_normalize_fixpoint(pet):
    state = normalize_max_subgraph(pet, max_delta_colorable_subgraph_exact(pet))
    assert len(state.t_trace) == 1 and state.t == 0 and not state.exchanges


def test_eliminate_odd_cycles_s4(s4):
    state = normalize_max_subgraph(s4, max_delta_colorable_subgraph_exact(s4))
    state = eliminate_odd_cycles(s4, state, 6)
    assert not odd_cycles(s4, state.h2)
    assert sub_chi(s4, state.h2) == 2


def test_eliminate_odd_cycles_identity(s4):
    state = normalize_max_subgraph(s4, max_delta_colorable_subgraph_exact(s4))
    state = eliminate_odd_cycles(s4, state, 6)
    again = eliminate_odd_cycles(s4, state, 6)
    assert again.h2 == state.h2 and again.odd_trace[-1] == 0


def test_eliminate_odd_cycles_precondition():
    g = make_shannon(5)
    state = normalize_max_subgraph(g, max_delta_colorable_subgraph_exact(g))
    with pytest.raises(DecompositionError):
        eliminate_odd_cycles(g, state)


@pytest.mark.parametrize("name", ["k3", "pet"])
def test_maxsub_simple_gives_matching(request, name):
    g = request.getfixturevalue(name)
    dec = decompose_max_subgraph(g)
    assert dec.part2 and max(part_degrees(g, dec.part2)) == 1
    assert len(dec.part1) == max_delta_colorable_size(g)
    assert_partition(g, dec)


def test_maxsub_heuristic_is_labeled(s4):
    dec = decompose_max_subgraph(s4, certified=False)
    assert not dec.certified
    assert max(part_degrees(s4, dec.part2)) <= 2


@pytest.mark.parametrize("name, parts", [("k3", (2, 1)), ("pet", (3, 1)), ("s4", (4, 2))])
@pytest.mark.parametrize("shortcut", [True, False])
def test_class1_pair(request, name, parts, shortcut):
    g = request.getfixturevalue(name)
    dec = decompose_class1_pair(g, shortcut=shortcut)
    assert degrees(g, dec) == parts
    res = assert_partition(g, dec)
    assert res["part1"]["chi"] == parts[0] and res["part2"]["chi"] == parts[1]


def test_class1_pair_triangle_sizes(k3):
    dec = decompose_class1_pair(k3)
    assert (len(dec.part1), len(dec.part2)) == (2, 1)


def test_verify_catches_moved_edge(pet):
    dec = decompose_class1_pair(pet)
    moved = dec.part1[0]
    dec.part1, dec.part2 = dec.part1[1:], dec.part2 + (moved,)
    res = verify_decomposition(pet, dec)
    assert not res["ok"] and any("inconsistently" in p for p in res["problems"])


# overlap-reduction instances: (n, edges, colors, x, y, k, first step)
OVERLAP = [
    (5, [(0, 1), (0, 2), (1, 2), (3, 4)], (1, 3, 2, 1), 0, 3, 1, "swap P_y(2,1)"),
    (5, [(0, 1), (0, 1), (0, 2), (0, 4), (0, 4), (1, 2), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4)],
     (5, 2, 1, 6, 3, 3, 6, 1, 2, 4, 5), 0, 1, 1, "z1 frees a common color; swap P_y(4,1)"),
    (7, [(0, 3), (0, 4), (0, 6), (1, 2), (1, 5), (1, 5), (2, 3), (2, 6), (3, 4), (4, 5)],
     (4, 1, 2, 2, 3, 1, 3, 4, 2, 4), 0, 6, 1, "z2 misses a common color; swap at z1; swap P_y(3,4)"),
    (9, [(0, 5), (0, 7), (1, 3), (1, 4), (1, 6), (1, 6), (3, 5), (3, 5), (3, 8), (4, 6), (4, 6), (5, 7),
         (7, 8), (7, 8)],
     (1, 3, 3, 2, 5, 4, 4, 5, 1, 1, 3, 2, 5, 4), 3, 8, 1,
     "z2 frees a common color; z2 misses a common color; swap at z1; swap P_y(2,4)"),
]


@pytest.mark.parametrize("n, edges, colors, x, y, k, step", OVERLAP)
def test_overlap_pass(n, edges, colors, x, y, k, step):
    g = build(n, edges)
    phi = EdgeColoring(g, g.max_degree + k, colors)
    before = len(partition_relative(phi, x, y)[0])
    trace = OverlapTrace()
    out = reduce_missing_overlap(g, phi, x, y, k, trace)
    assert trace.steps == [step]
    assert is_proper(out) and out.is_total()
    assert len(partition_relative(out, x, y)[0]) < before
    assert trace.aux_swaps[0] <= MAX_AUX_SWAPS
    # step 1 alone is a single swap with no auxiliary changes
    if step.startswith("swap P_y"):
        assert trace.aux_swaps == [0]


def test_overlap_rejects_empty_common_set(k3):
    # 01=1, 02=2, 12=3: vertices 0 and 1 share no missing color
    phi = EdgeColoring(k3, 3, (1, 2, 3))
    with pytest.raises(DecompositionError, match="no color is missing"):
        reduce_missing_overlap(k3, phi, 0, 1, 1)


def test_overlap_rejects_heavy_pair(s3):
    phi = chromatic_index(s3).certificate
    with pytest.raises(DecompositionError):
        reduce_missing_overlap(s3, phi, 0, 2, 1)


@given(multigraphs(max_n=5, max_m=10))
def test_decompositions_on_random_class_two(g):
    ci = chromatic_index(g)
    assume(ci.chi > g.max_degree)
    k = ci.chi - g.max_degree
    dec = decompose_class1_pair(g)
    assert degrees(g, dec) == (g.max_degree, k)
    res = assert_partition(g, dec)
    assert res["part1"]["class_I"] and res["part2"]["class_I"]
    dec = decompose_max_subgraph(g)
    assert max(part_degrees(g, dec.part2), default=0) <= g.multiplicity
    assert_partition(g, dec)
    assert isinstance(normalize_max_subgraph(g, max_delta_colorable_subgraph_exact(g)), DescentState)


K5 = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_normalize_exchanges_from_forced_start():
    # a maximum 4-colorable subgraph of K5 that leaves both edges 01 and 02 at vertex 0
    g = build(5, K5)
    phi = EdgeColoring(g, 4, (0, 0, 1, 2, 3, 2, 4, 4, 1, 3))
    assert len(phi.colored_edges()) == max_delta_colorable_size(g) == 8
    state = normalize_max_subgraph(g, phi, certified=True)
    assert state.t_trace[0] == 2 and state.t == 0
    assert len(state.exchanges) == 1 and len(state.h1) == 8
    assert is_proper(state.coloring)


def test_odd_cycle_removed_from_forced_start():
    # mu = 2, chi' = Delta + 2; H2 starts as the triangle 0-1-2
    edges = [(0, 1), (0, 2), (0, 3), (0, 3), (0, 4), (0, 4), (1, 2), (1, 3), (1, 3), (1, 4), (1, 4),
             (2, 3), (2, 3), (2, 4), (2, 4)]
    g = build(5, edges)
    phi = EdgeColoring(g, 6, (0, 1, 2, 3, 0, 4, 2, 1, 6, 0, 5, 4, 5, 3, 6))
    chi = chromatic_index(g).chi
    assert chi == g.max_degree + 2
    state = normalize_max_subgraph(g, phi, certified=True)
    assert state.t == 0 and state.odd_cycles == 1
    state = eliminate_odd_cycles(g, state, chi)
    assert state.odd_trace == [1, 0]
    assert sub_chi(g, state.h2) == 2 and len(state.h1) == len(phi.colored_edges())


def test_heuristic_start_from_nothing(pet):
    state = normalize_max_subgraph(pet, EdgeColoring.empty(pet, 3), certified=False)
    assert state.t == 0 and all(b < a for a, b in zip(state.t_trace, state.t_trace[1:]))
    assert max(part_degrees(pet, state.h2)) <= 1
