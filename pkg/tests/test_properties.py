"""Invariants checked on generated graphs."""

from hypothesis import given, settings
from hypothesis import strategies as st

from circol import bounds
from circol.colouring import PrecolouredClique, fragment_colour
from circol.connectivity import check_separation, connected_components, find_separation
from circol.cycles import check_cycle, circumference, circumference_subset_dp, longest_cycle
from circol.graph import Graph, contract_edge, from_edge_list, to_edge_list
from circol.verify import mono_degree, monochromatic_components, verify_fragmentation


@st.composite
def graphs(draw, max_n=11):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@st.composite
def graph_with_clique(draw):
    G = draw(graphs())
    kind = draw(st.sampled_from([0, 1, 2] if G.m else [0, 1]))
    colour = st.integers(0, 12)
    if kind == 0:
        C = PrecolouredClique()
    elif kind == 1:
        C = PrecolouredClique((draw(st.integers(0, G.n - 1)),), (draw(colour),))
    else:
        u, v = draw(st.sampled_from(G.edges()))
        a = draw(colour)
        b = draw(st.one_of(st.just(a), colour))
        C = PrecolouredClique((u, v), (a, b))
    return G, C


@given(graphs())
def test_edge_list_round_trip(G):
    assert from_edge_list(to_edge_list(G)) == G


@given(graphs())
def test_circumference_matches_subset_dp(G):
    assert circumference(G) == circumference_subset_dp(G)
    cyc = longest_cycle(G)
    if cyc is not None:
        check_cycle(G, cyc)


@given(graphs())
def test_separation_invariants(G):
    if G.n >= 4:
        sep = find_separation(G)
        if sep is not None:
            assert check_separation(G, sep) == []


@settings(max_examples=150)
@given(graph_with_clique())
def test_colouring_meets_all_rules(case):
    G, C = case
    k = max(2, circumference(G))
    col, _ = fragment_colour(G, k, C)
    report = verify_fragmentation(G, col, k, C.as_dict())
    assert report.ok, report.to_text()


@given(graphs(), st.data())
def test_partition_and_degree_link(G, data):
    col = data.draw(st.lists(st.integers(0, 3), min_size=G.n, max_size=G.n))
    parts = monochromatic_components(G, col)
    assert sum(map(len, parts)) == G.n
    assert sorted(v for p in parts for v in p) == list(range(G.n))
    largest = max(map(len, parts))
    assert max(mono_degree(G, col, v) for v in range(G.n)) <= largest - 1


@given(graphs())
def test_contraction_keeps_simple_graph(G):
    if G.m:
        u, v = G.edges()[0]
        H, idmap = contract_edge(G, u, v)
        assert H.n == G.n - 1 and idmap[u] == idmap[v]
        assert len(connected_components(H)) == len(connected_components(G))


@given(st.integers(2, 2**20))
def test_bound_identities(k):
    assert 1 + bounds.ceil_log2(k + 1) == 2 + bounds.floor_log2(k)
    assert bounds.lower_bound(k) <= bounds.theorem1_bound(k)
    if k != 3:
        assert bounds.h(k) <= bounds.theorem1_bound(k)
