"""Graph container, traversals, motifs, vertex maps, edge-list I/O."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigenmotif import (
    Graph,
    Motif,
    VertexMap,
    build_graph,
    connected_components,
    duplicate_vertex_classes,
    format_edge_list,
    identity_map,
    induced_motif,
    is_bipartite,
    is_connected,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from eigenmotif.families import complete_graph, cycle_graph, path_graph, star_graph


def test_basic_accessors():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.n == 4
    assert g.num_edges == 4
    assert g.degrees == (2, 2, 2, 2)
    assert g.neighbors(1) == (0, 2)
    assert g.has_edge(0, 3) and g.has_edge(3, 0)
    assert not g.has_edge(0, 2)
    assert g.edges() == ((0, 1), (0, 3), (1, 2), (2, 3))


def test_validation():
    with pytest.raises(ValueError):
        Graph(0)
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])  # self-loop


def test_duplicate_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.num_edges == 1


def test_equality_is_structural():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(1, 2), (0, 1)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != Graph(3, [(0, 1)])


def test_is_complete():
    assert complete_graph(4).is_complete()
    assert not cycle_graph(4).is_complete()
    assert complete_graph(1).is_complete()


def test_connected_components():
    g = Graph(6, [(0, 1), (1, 2), (4, 5)])
    comps = connected_components(g)
    assert comps == [[0, 1, 2], [3], [4, 5]]
    assert not is_connected(g)
    assert is_connected(path_graph(5))


@pytest.mark.parametrize("g,expected", [
    (cycle_graph(4), True),
    (cycle_graph(5), False),
    (path_graph(7), True),
    (complete_graph(3), False),
    (star_graph(4), True),
])
def test_is_bipartite(g, expected):
    assert is_bipartite(g) == expected


def test_motif_structure():
    # triangle 0-1-2 with a pendant 3 on vertex 2
    g = build_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    motif = induced_motif(g, (1, 2))
    assert motif.vertices == (1, 2)
    assert motif.internal_edges == ((0, 1),)  # positions within the motif
    assert motif.external_neighbors == ((0,), (0, 3))
    assert motif.host_degrees() == (2, 3)
    assert motif.position(2) == 1


def test_motif_rejects_bad_vertices():
    g = path_graph(4)
    with pytest.raises(ValueError):
        induced_motif(g, (0, 0))
    with pytest.raises(ValueError):
        induced_motif(g, (0, 9))
    with pytest.raises(ValueError):
        induced_motif(g, ())


def test_vertex_map():
    vmap = VertexMap((0, 1, 2), ((3, 4), (5, 6)))
    assert vmap.new_vertices == (3, 4, 5, 6)
    assert vmap.output_size() == 7
    assert identity_map(3).images == (0, 1, 2)
    with pytest.raises(ValueError):
        VertexMap((0, 0, 1), ())  # not injective


def test_duplicate_vertex_classes():
    # two leaves hanging off the same vertex share their neighborhood
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    classes = duplicate_vertex_classes(g)
    assert (1, 2, 3) in classes.classes
    assert classes.multiplicity_bound == 2


def test_duplicate_classes_none_on_path():
    assert duplicate_vertex_classes(path_graph(4)).multiplicity_bound == 0


def test_edge_list_round_trip(tmp_path):
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)])
    path = tmp_path / "g.txt"
    write_edge_list(g, path)
    assert read_edge_list(path) == g


def test_edge_list_format():
    g = build_graph(3, [(0, 2), (0, 1)])
    text = format_edge_list(g)
    lines = text.strip().splitlines()
    assert lines[0] == "3 2"
    assert lines[1:] == ["0 1", "0 2"]


def test_parse_edge_list_comments_and_blanks():
    text = "# a triangle\n3 3\n\n0 1\n1 2\n# middle comment\n0 2\n"
    g = parse_edge_list(text)
    assert g == complete_graph(3)


@pytest.mark.parametrize("text", [
    "", "3\n", "3 2\n0 1\n", "3 1\n0 1\n1 2\n", "2 1\n0 two\n", "2 1\n0 1 2\n",
])
def test_parse_edge_list_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_edge_list(text)


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(possible), max_size=20)) if possible else []
    return Graph(n, edges)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_format_parse_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_components_partition_vertices(g):
    comps = connected_components(g)
    flat = sorted(v for comp in comps for v in comp)
    assert flat == list(range(g.n))
    # no edges between different components
    index = {v: i for i, comp in enumerate(comps) for v in comp}
    for u, v in g.edges():
        assert index[u] == index[v]
