import random

import pytest

from circol import generators as gen
from circol.bounds import theorem1_bound
from circol.colouring import (
    Options,
    PrecolouredClique,
    canonical_relabel,
    colour_bounded_circumference,
    fragment_colour,
)
from circol.cycles import circumference
from circol.errors import PreconditionError
from circol.graph import Graph
from circol.verify import verify_fragmentation


def test_forest_gets_proper_two_colouring():
    G = Graph(6, [(0, 1), (1, 2), (1, 3), (3, 4)])
    col, _ = fragment_colour(G, 2)
    assert len(set(col)) == 2
    assert all(col[u] != col[v] for u, v in G.edges())


def test_complete_graph_uses_one_colour():
    col, _ = fragment_colour(gen.complete(5), 5)
    assert col == [0] * 5


def test_petersen_two_colours():
    P = gen.petersen()
    col, _ = fragment_colour(P, 9)
    assert len(set(col)) == 2
    assert sorted(col.count(c) for c in set(col)) == [1, 9]


def test_clique_must_be_adjacent():
    with pytest.raises(PreconditionError):
        fragment_colour(gen.path(3), 2, PrecolouredClique((0, 2), (7, 7)))


def test_clique_validation():
    with pytest.raises(PreconditionError):
        PrecolouredClique((0, 1, 2), (0, 0, 0))
    with pytest.raises(PreconditionError):
        PrecolouredClique((0,), (-1,))
    with pytest.raises(PreconditionError):
        fragment_colour(gen.path(3), 2, PrecolouredClique((5,), (0,)))


def test_equal_colours_on_an_edge_in_a_forest():
    G = gen.path(5)
    C = PrecolouredClique((1, 2), (7, 7))
    col, _ = fragment_colour(G, 2, C)
    assert col[1] == col[2] == 7
    report = verify_fragmentation(G, col, 2, C.as_dict())
    assert report.ok, report.to_text()


def test_precoloured_k5():
    G = gen.complete(5)
    C = PrecolouredClique((0, 1), (9, 9))
    col, _ = fragment_colour(G, 5, C)
    assert col[0] == col[1] == 9
    assert verify_fragmentation(G, col, 5, C.as_dict()).ok


def test_bounded_circumference_examples():
    col, k = colour_bounded_circumference(gen.path(6))
    assert k == 2 and len(set(col)) == 2
    col, k = colour_bounded_circumference(gen.cycle(9))
    assert k == 9 and len(set(col)) <= theorem1_bound(9)
    assert verify_fragmentation(gen.cycle(9), col, 9).ok
    col, k = colour_bounded_circumference(gen.complete(4))
    assert k == 4 and len(set(col)) == 1


def test_k_below_circumference_is_refused():
    with pytest.raises(PreconditionError):
        fragment_colour(gen.complete(5), 4)
    with pytest.raises(PreconditionError):
        fragment_colour(gen.cycle(5), 3, opts=Options(assert_circumference=True))
    with pytest.raises(PreconditionError):
        fragment_colour(gen.cycle(3), 1)


def test_trace_structure():
    G = gen.tree_closure(2, 2)
    col, trace = fragment_colour(G, 4, opts=Options(emit_trace=True))
    lines = trace.lines()
    assert lines[0].startswith("0 separation k=4 n=7 S=0")
    branches = {node.branch for _, node in trace.walk()}
    assert branches <= {"base", "separation", "k-reduction", "cycle-deletion"}


def test_k_reduction_in_trace():
    # K4 with k = 6: the circumference is 4, so k drops before deleting the cycle
    _, trace = fragment_colour(gen.complete(4), 6, opts=Options(emit_trace=True))
    assert [n.branch for _, n in trace.walk()] == ["k-reduction", "cycle-deletion"]
    _, trace = fragment_colour(gen.complete(4), 6, opts=Options(emit_trace=True,
                                                              recompute_circumference=False))
    assert [n.branch for _, n in trace.walk()] == ["cycle-deletion"]


def test_relabel():
    assert canonical_relabel([5, 5, 2, 7, 2]) == [0, 0, 1, 2, 1]


def test_random_graphs_with_cycle_assertions():
    rng = random.Random(3)
    for i in range(120):
        G = gen.random_graph(rng.randint(1, 14), rng.uniform(0.1, 0.5), i)
        k = max(2, circumference(G))
        col, _ = fragment_colour(G, k, opts=Options(assert_circumference=True))
        assert verify_fragmentation(G, col, k).ok


def test_larger_k_than_needed_still_verifies():
    G = gen.wheel(8)
    for k in range(8, 20):
        col, _ = fragment_colour(G, k)
        assert verify_fragmentation(G, col, k).ok


def _traced_cases():
    rng = random.Random(17)
    cases = [gen.petersen(), gen.wheel(12), gen.tree_closure(3, 2), gen.complete(7)]
    cases += [gen.random_graph(rng.randint(5, 14), 0.4, 500 + i) for i in range(40)]
    for G in cases:
        k = max(2, circumference(G))
        yield G, k, fragment_colour(G, k, opts=Options(emit_trace=True))


def test_cycle_deletion_palettes_are_disjoint():
    seen = 0
    for _, _, (_, trace) in _traced_cases():
        for _, node in trace.walk():
            if node.branch == "cycle-deletion":
                seen += 1
                p = node.palettes
                groups = [set(p["clique"]), set(p["cycle"]), set(p["rest"])]
                assert sum(map(len, groups)) == len(set().union(*groups))
    assert seen > 10


def test_recursion_measure_decreases():
    for _, _, (_, trace) in _traced_cases():
        for _, node in trace.walk():
            for child in node.children:
                assert child.k + child.n < node.k + node.n or (
                    node.branch == "k-reduction" and child.k < node.k)
