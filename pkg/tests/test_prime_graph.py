import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gkgraph.oracles import spectrum_alternating, spectrum_classical
from gkgraph.prime_graph import (
    MAX_REALIZABILITY_VERTICES,
    OrderSet,
    PrimeGraph,
    divisor_closure,
    export,
    find_3_coclique,
    from_dict,
    graph_from_orders,
    grotzsch_graph,
    mycielski_graph,
    parse_edges,
    relabel_on_primes,
    solvable_realizable,
    three_coloring,
    to_dict,
    two_clique_partition,
)

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)


@st.composite
def graphs(draw, max_vertices=8):
    vs = draw(st.lists(st.sampled_from(PRIMES), unique=True, max_size=max_vertices))
    pairs = list(itertools.combinations(sorted(vs), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return PrimeGraph.from_edges(vs, [p for p, k in zip(pairs, keep) if k])


def _brute_3_colorable(g: PrimeGraph) -> bool:
    vs = g.vertices
    for colors in itertools.product(range(3), repeat=len(vs)):
        c = dict(zip(vs, colors))
        if all(c[a] != c[b] for a, b in g.edges):
            return True
    return False


def _brute_coclique(g: PrimeGraph):
    for t in itertools.combinations(g.vertices, 3):
        if not any(g.adjacent(a, b) for a, b in itertools.combinations(t, 2)):
            return t
    return None


# -- construction ------------------------------------------------------------------------

def test_rejects_non_primes_loops_and_dangling_edges():
    with pytest.raises(ValueError):
        PrimeGraph.from_edges([2, 4])
    with pytest.raises(ValueError):
        PrimeGraph.from_edges([2, 3], [(3, 3)])
    with pytest.raises(ValueError):
        PrimeGraph.from_edges([2, 3], [(2, 5)])


def test_edges_are_unordered():
    assert PrimeGraph.from_edges([2, 3], [(3, 2)]) == PrimeGraph.from_edges([3, 2], [(2, 3)])


# -- graph_from_orders -------------------------------------------------------------------

def test_graph_from_orders_examples():
    a6 = graph_from_orders(spectrum_alternating(6).omega)
    assert a6 == PrimeGraph.from_edges([2, 3, 5])
    s5 = graph_from_orders(spectrum_alternating(5, symmetric=True).omega)
    assert s5 == PrimeGraph.from_edges([2, 3, 5], [(2, 3)])
    assert graph_from_orders(OrderSet(frozenset({1}))) == PrimeGraph(())


@given(st.sets(st.integers(min_value=1, max_value=5000), max_size=12))
def test_graph_from_orders_ignores_divisor_closure(orders):
    orders = set(orders) | {1}
    assert graph_from_orders(orders) == graph_from_orders(divisor_closure(orders))


def test_orderset_requires_one():
    with pytest.raises(ValueError):
        OrderSet(frozenset({2}))
    assert OrderSet.closure([12]).sorted() == [1, 2, 3, 4, 6, 12]


# -- cocliques and partitions ---------------------------------------------------------------

def test_find_3_coclique_examples():
    assert find_3_coclique(PrimeGraph.from_edges([2, 3, 5])) == (2, 3, 5)
    assert find_3_coclique(PrimeGraph.two_cliques([2, 3, 5], [7, 11])) is None
    psl2_11 = spectrum_classical("PSL2", 11)
    assert psl2_11.omega.sorted() == [1, 2, 3, 5, 6, 11]
    assert find_3_coclique(psl2_11.graph) == (2, 5, 11)


def test_two_clique_partition_examples():
    g = PrimeGraph.from_edges([2, 3, 5, 17], [(2, 3), (2, 5), (3, 5)])
    assert two_clique_partition(g) == ({2, 3, 5}, {17})
    assert two_clique_partition(PrimeGraph.from_edges([2, 3, 5])) is None
    k = PrimeGraph.complete([2, 3, 5, 7])
    assert two_clique_partition(k) == ({2, 3, 5, 7}, frozenset())


@settings(max_examples=300)
@given(graphs())
def test_coclique_is_least_and_exact(g):
    assert find_3_coclique(g) == _brute_coclique(g)


@settings(max_examples=300)
@given(graphs())
def test_partition_is_two_cliques_when_found(g):
    part = two_clique_partition(g)
    comp_bipartite = _brute_2_colorable(g.complement())
    assert (part is not None) == comp_bipartite
    if part is not None:
        a, b = part
        assert a | b == set(g.vertices) and not a & b
        assert g.is_clique(a) and g.is_clique(b)
        if g.vertices:
            assert min(g.vertices) in a


def _brute_2_colorable(g):
    for colors in itertools.product(range(2), repeat=len(g.vertices)):
        c = dict(zip(g.vertices, colors))
        if all(c[a] != c[b] for a, b in g.edges):
            return True
    return not g.vertices


@settings(max_examples=200)
@given(graphs())
def test_complement_is_an_involution(g):
    assert g.complement().complement() == g


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_realizability_flags(g):
    rep = solvable_realizable(g)
    assert rep.no_3_coclique == (find_3_coclique(g) is None)
    assert rep.complement_3_colorable == _brute_3_colorable(g.complement())
    if rep.realizable:
        assert rep.no_3_coclique
    if two_clique_partition(g) is not None:
        assert rep.realizable
    if rep.coloring is not None:
        comp = g.complement()
        assert all(rep.coloring[a] != rep.coloring[b] for a, b in comp.edges)
        assert set(rep.coloring.values()) <= {0, 1, 2}


def test_realizability_examples():
    rep = solvable_realizable(PrimeGraph.two_cliques([2, 3], [5, 7]))
    assert rep.realizable and len(set(rep.coloring.values())) <= 2
    a6 = solvable_realizable(PrimeGraph.from_edges([2, 3, 5]))
    assert not a6.realizable and a6.obstruction == (2, 3, 5)
    n, edges = grotzsch_graph()
    grotzsch = solvable_realizable(relabel_on_primes(n, edges).complement())
    assert len(relabel_on_primes(n, edges)) == 11
    assert grotzsch.no_3_coclique and not grotzsch.complement_3_colorable
    assert grotzsch.obstruction == "complement-not-3-colorable"


def test_realizability_vertex_cap():
    vs = relabel_on_primes(MAX_REALIZABILITY_VERTICES + 1, []).vertices
    with pytest.raises(ValueError):
        solvable_realizable(PrimeGraph.complete(vs))


def test_three_coloring_on_mycielski_graphs():
    # M_k has chromatic number k.
    for k, colorable in [(2, True), (3, True), (4, False), (5, False)]:
        n, edges = mycielski_graph(k)
        assert (three_coloring(relabel_on_primes(n, edges)) is not None) == colorable


def test_grotzsch_is_triangle_free_on_eleven_vertices():
    n, edges = grotzsch_graph()
    assert n == 11 and len(edges) == 20
    g = relabel_on_primes(n, edges)
    assert find_3_coclique(g.complement()) is None


# -- serialisation ------------------------------------------------------------------------

def test_export_examples():
    assert export(PrimeGraph(())) == '{"vertices":[],"edges":[]}'
    dot = export(PrimeGraph.from_edges([2, 3], [(2, 3)]), "dot")
    assert dot == "graph G {\n  2;\n  3;\n  2 -- 3;\n}\n"
    s5 = json.loads(export(spectrum_alternating(5, symmetric=True).graph))
    assert s5 == {"vertices": [2, 3, 5], "edges": [[2, 3]]}
    with pytest.raises(ValueError):
        export(PrimeGraph(()), "png")


@settings(max_examples=100)
@given(graphs())
def test_json_round_trip_is_deterministic(g):
    text = export(g)
    assert from_dict(json.loads(text)) == g
    assert export(from_dict(to_dict(g))) == text


def test_parse_edges():
    g = parse_edges("2-3, 5-2", vertices=[7])
    assert g == PrimeGraph.from_edges([2, 3, 5, 7], [(2, 3), (2, 5)])
    assert parse_edges("11") == PrimeGraph.from_edges([11])
