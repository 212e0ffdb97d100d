import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recolor import Graph, degree_stats, gnp_random_graph, parse_dimacs, write_dimacs
from recolor.graph import DimacsError, DimacsWarning

from conftest import star_graph, triangle


def test_parse_triangle():
    g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3")
    assert g.n == 3
    assert g.m == 3
    assert g.max_degree == 2


def test_parse_dedups_symmetric_duplicates():
    with pytest.warns(DimacsWarning):
        g = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1")
    assert g.n == 2
    assert g.m == 1


def test_parse_endpoint_out_of_range():
    with pytest.raises(DimacsError, match="out of range at line 2"):
        parse_dimacs("p edge 2 1\ne 1 3")


def test_parse_self_loop_rejected():
    with pytest.raises(DimacsError, match="self-loop"):
        parse_dimacs("p edge 2 1\ne 1 1")


def test_parse_missing_p_line():
    with pytest.raises(DimacsError, match="missing 'p'"):
        parse_dimacs("c just a comment")


def test_parse_malformed_token():
    with pytest.raises(DimacsError, match="line 2"):
        parse_dimacs("p edge 2 1\ne 1 x")


def test_parse_comments_ignored():
    g = parse_dimacs("c hello\nc world\np edge 2 1\ne 1 2")
    assert g.m == 1


def test_adjacency_symmetric_and_sorted():
    g = parse_dimacs("p edge 4 4\ne 3 1\ne 1 2\ne 4 2\ne 3 4")
    for u, nbrs in enumerate(g.adjacency):
        assert list(nbrs) == sorted(nbrs)
        assert len(set(nbrs)) == len(nbrs)
        for v in nbrs:
            assert u in g.adjacency[v]
            assert u != v


def test_roundtrip_serialization():
    g = parse_dimacs("p edge 5 4\ne 1 2\ne 2 3\ne 4 5\ne 1 5")
    assert parse_dimacs(write_dimacs(g)) == g


@settings(max_examples=50, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=12),
    edge_bits=st.lists(st.booleans(), min_size=66, max_size=66),
)
def test_roundtrip_random_graphs(n, edge_bits):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [p for p, keep in zip(pairs, edge_bits) if keep]
    g = Graph.from_edges(n, edges)
    again = parse_dimacs(write_dimacs(g))
    assert again == g
    assert again.m == len(edges)


def test_degree_stats_triangle():
    s = degree_stats(triangle())
    assert s.mean == 2.0
    assert s.stddev == 0.0
    assert s.cv == 0.0


def test_degree_stats_star():
    # degrees (3,1,1,1): mean 1.5, population stddev sqrt(3)/2
    s = degree_stats(star_graph(3))
    assert s.mean == pytest.approx(1.5)
    assert s.stddev == pytest.approx(math.sqrt(3) / 2)
    assert s.cv == pytest.approx(100 * math.sqrt(3) / 3, abs=0.05)


def test_degree_stats_edgeless_errors():
    with pytest.raises(ValueError, match="no edges"):
        degree_stats(Graph.from_edges(2, []))


def test_degree_stats_mean_is_2m_over_n(rng):
    g = gnp_random_graph(40, 0.3, rng)
    s = degree_stats(g)
    assert s.mean == pytest.approx(2 * g.m / g.n)


def test_from_edges_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(2, [(1, 1)])


def test_gnp_extremes(rng):
    assert gnp_random_graph(10, 0.0, rng).m == 0
    assert gnp_random_graph(10, 1.0, rng).m == 45
