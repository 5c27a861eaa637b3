import pytest

from circol import generators as gen
from circol.errors import InfeasibleError
from circol.extremal import (
    build_extremal,
    check_forced_degree,
    extremal_order,
    forced_degree,
    verify_structural,
)
from circol.oracle import min_fragmentation_colours


def test_small_instances():
    G = build_extremal(1, 3)
    assert G == gen.star(3).__class__(4, [(0, 3), (1, 3), (2, 3)])
    G = build_extremal(2, 2)
    assert (G.n, G.m) == (7, 10)
    assert build_extremal(2, 1) == gen.complete(3)


@pytest.mark.parametrize("k,d", [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_order_recurrence_and_dominating_vertex(k, d):
    G = build_extremal(k, d)
    assert G.n == extremal_order(k, d)
    if k > 1:
        assert G.n == d * extremal_order(k - 1, d) + 1
    assert G.degree(G.n - 1) == G.n - 1


def test_structural_reports():
    r = verify_structural(1, 3)
    assert r.circumference == 2 and r.longest_path_order == 3 and r.ok
    r = verify_structural(2, 2)
    assert r.circumference <= 4 and r.longest_path_order < 8 and r.ok
    r = verify_structural(2, 3)
    assert r.order == 13 and r.circumference <= 4


def test_forced_degree_examples(backend):
    assert check_forced_degree(1, 2, backend=backend).holds
    assert check_forced_degree(2, 2, backend=backend).holds
    assert check_forced_degree(3, 2, backend=backend).holds


def test_cycle_is_a_counterexample(backend):
    result = forced_degree(gen.cycle(7), 2, 2, backend=backend)
    assert not result.holds
    col = result.counterexample
    assert all(sum(col[w] == col[v] for w in gen.cycle(7).neighbours(v)) < 2 for v in range(7))


def test_parallel_search_agrees():
    for kd in [(2, 2), (2, 3), (3, 2)]:
        assert check_forced_degree(*kd, jobs=3).holds
    assert not forced_degree(gen.cycle(9), 2, 2, jobs=3).holds


def test_guards():
    with pytest.raises(InfeasibleError):
        check_forced_degree(5, 5)
    with pytest.raises(InfeasibleError):
        build_extremal(6, 6)
    with pytest.raises(InfeasibleError):
        verify_structural(3, 4)
    with pytest.raises(ValueError):
        build_extremal(0, 2)


def test_forcing_implies_large_components():
    assert min_fragmentation_colours(build_extremal(2, 2), 2) >= 3
