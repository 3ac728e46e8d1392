import random

import networkx as nx
import pytest

from conftest import to_networkx
from qbnut.canon import canonical_certificate
from qbnut.graphs import (
    BicirculantSpec,
    ParityViolation,
    QuartGraph,
    RangeViolation,
    SpecError,
    build_graph,
    circulant,
    is_bipartite,
    is_connected,
    is_connected_params,
    make_spec,
    normalize_spec,
    parse_spec,
)


def test_make_spec_accepts_canonical():
    assert make_spec("B2", 4, 1, 1, 1) == BicirculantSpec("B2", 4, 1, 1, 1)


@pytest.mark.parametrize("args", [("B1", 5, 1, 1), ("B3", 6, 2, 3)])
def test_parity_errors(args):
    with pytest.raises(ParityViolation):
        make_spec(*args)


@pytest.mark.parametrize(
    "args",
    [("B2", 0, 1, 1, 1), ("B2", 6, 1, 3, 1), ("B2", 6, 2, 1, 1), ("B2", 6, 1, 2, 4), ("B4", 6, 1, 1, 2), ("B3", 6, 3, 1)],
)
def test_range_errors(args):
    with pytest.raises(RangeViolation):
        make_spec(*args)


def test_c_presence_checked():
    with pytest.raises(SpecError):
        make_spec("B2", 6, 1, 2)
    with pytest.raises(SpecError):
        make_spec("B1", 6, 2, 2, 1)


def test_parse_spec_roundtrip():
    spec = parse_spec(" B2( 24 ; 4, 6 ,3 ) ")
    assert spec == BicirculantSpec("B2", 24, 4, 6, 3)
    assert parse_spec(str(spec)) == spec
    with pytest.raises(SpecError):
        parse_spec("B5(4;1,1,1)")
    with pytest.raises(SpecError):
        parse_spec("B2(4;1,1)")


@pytest.mark.parametrize(
    "raw,want",
    [
        (("B3", 6, 5, 2), ("B3", 6, 1, 3)),
        (("B2", 4, 1, 1, 1), ("B2", 4, 1, 1, 1)),
        (("B3", 6, 1, 3), ("B3", 6, 1, 3)),
        (("B2", 10, 7, 1, 9), ("B2", 10, 1, 3, 1)),
        (("B4", 8, 7, 2, 5), ("B4", 8, 2, 5, 7)),
    ],
)
def test_normalize_examples(raw, want):
    spec = BicirculantSpec(*raw)
    norm = normalize_spec(spec)
    assert norm == BicirculantSpec(*want)
    assert canonical_certificate(build_graph(spec)) == canonical_certificate(build_graph(norm))


def test_normalize_rejects_degenerate():
    with pytest.raises(SpecError):
        normalize_spec(BicirculantSpec("B2", 6, 3, 1, 1))  # 3 = -3 mod 6


@pytest.mark.parametrize(
    "text,want",
    [("B2(6;2,2,2)", False), ("B2(6;1,2,3)", True), ("B1(8;2,2)", False)],
)
def test_connectivity_criterion(text, want):
    spec = parse_spec(text)
    assert is_connected_params(spec) is want
    assert is_connected(build_graph(spec)) is want


def test_build_graph_sizes():
    g = build_graph(parse_spec("B2(3;1,1,1)"))
    assert g.n == 6 and len(g.edges()) == 12
    assert all(len(nb) == 4 for nb in g.adjacency)
    g = build_graph(parse_spec("B3(10;1,3)"))
    assert g.n == 20 and len(g.edges()) == 40


@pytest.mark.parametrize("text,want", [("B4(4;1,2,3)", True), ("B2(4;1,1,1)", False), ("B3(10;1,3)", False)])
def test_bipartite(text, want):
    g = build_graph(parse_spec(text))
    assert is_bipartite(g) is want
    assert nx.is_bipartite(to_networkx(g)) is want


def test_vertex_labelling_convention():
    g = build_graph(parse_spec("B2(5;1,2,2)"))
    # x_i = i, y_i = 5 + i; x_i ~ y_{i+r} for r in R = {0, 2}
    assert sorted(g.adjacency[0]) == [1, 4, 5, 7]
    assert sorted(g.adjacency[5]) == [0, 3, 7, 8]


def test_b1_is_prism_product():
    # B1(m;a,b) = I(m/2;a,b) x K2: x_i and x_{i+m/2} are joined, y likewise
    g = to_networkx(build_graph(parse_spec("B1(10;2,4)")))
    i_graph = nx.Graph()
    h = 5
    for i in range(h):
        i_graph.add_edges_from([(("u", i), ("u", (i + 2) % h)), (("v", i), ("v", (i + 4) % h)), (("u", i), ("v", i))])
    assert nx.is_isomorphic(g, nx.cartesian_product(i_graph, nx.complete_graph(2)))


def test_quartgraph_rejects_loops_and_multiedges():
    with pytest.raises(ValueError):
        QuartGraph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        QuartGraph.from_edges(3, [(0, 1), (1, 0)])


def test_circulant_and_permutation():
    g = circulant(8, (1, -1, 2, -2))
    assert nx.is_isomorphic(to_networkx(g), nx.circulant_graph(8, [1, 2]))
    perm = list(range(8))
    random.Random(1).shuffle(perm)
    assert nx.is_isomorphic(to_networkx(g.permuted(perm)), to_networkx(g))
