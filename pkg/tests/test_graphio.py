import pytest

from graphsym import GraphParseError, OrientedGraph, UndirectedGraph
from graphsym.graphio import parse_graph_file


def test_parses_undirected_file_with_comments():
    text = """
    # a three-vertex path
    graph 3

    1 2  # first edge
    2 3
    """
    parsed = parse_graph_file(text)
    assert not parsed.directed
    assert parsed.levels is None
    assert isinstance(parsed.graph, UndirectedGraph)
    assert parsed.graph.sorted_edges() == [(1, 2), (2, 3)]


def test_parses_directed_file_with_levels():
    text = "graph 3 d 3 directed\n2 1\n3 1\n3 2\n"
    parsed = parse_graph_file(text)
    assert parsed.directed
    assert parsed.levels == 3
    assert isinstance(parsed.graph, OrientedGraph)
    assert parsed.graph.edges == ((2, 1), (3, 1), (3, 2))


def test_header_flags_in_either_order():
    parsed = parse_graph_file("graph 2 directed d 4\n2 1\n")
    assert parsed.directed and parsed.levels == 4


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("vertices 3\n1 2\n", 1),
        ("graph\n", 1),
        ("graph x\n", 1),
        ("graph 0\n", 1),
        ("graph 3 d\n", 1),
        ("graph 3 d two\n", 1),
        ("graph 3 loud\n", 1),
        ("graph 3\n1 2 3\n", 2),
        ("graph 3\n1 a\n", 2),
        ("graph 3\n2 2\n", 2),
        ("graph 3\n1 4\n", 2),
        ("graph 3\n1 2\n2 1\n", 3),
        ("graph 3\n1 2\n\n# c\n1 2\n", 5),
        ("graph 1 directed\n", 1),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as err:
        parse_graph_file(text)
    assert err.value.line_no == line
    assert f"line {line}:" in str(err.value)


def test_duplicate_pair_message_names_both_lines():
    with pytest.raises(GraphParseError) as err:
        parse_graph_file("graph 3 directed\n1 2\n2 1\n")
    assert "line 2" in str(err.value)
