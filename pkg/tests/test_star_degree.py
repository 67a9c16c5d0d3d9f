import math

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs, random_star, trees
from starb.blocking import blocked_colors
from starb.coloring import is_star_coloring
from starb.errors import OracleTooLarge, PreconditionError
from starb.exact import exact_sb
from starb.families import gen_tree_delta_squared, gen_tree_gap
from starb.graph import Graph, complete, cycle, empty, girth_of_vertex, path, star
from starb.star_degree import (
    blocked_count, classify_blocking_path, decompose, delta_squared_bound,
    m_degree, m_s_degree, on_five_cycle, star_degree_bruteforce,
    star_degree_exhaustive, star_degree_girth7, star_degree_matching,
    star_degrees,
)

# formulas fail off trees; both graphs satisfy the formula preconditions
GIRTH7_OVERCOUNT = (Graph(8, [(0, 7), (1, 6), (2, 3), (2, 5), (2, 6), (3, 7), (4, 5), (4, 7)]), 6)
MATCHING_UNDERCOUNT = (Graph(6, [(0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (2, 4), (3, 5), (4, 5)]), 3)


# -- blocked counts ------------------------------------------------------------

def test_blocked_count_examples():
    assert blocked_count(cycle(5), [1, 4, 2, 3, 4], 0) == 3
    # v3 sees colors 2 and 3 on its neighbors; the 0123 paths v3 v2 v1 v0 and
    # v3 v4 v5 v6 block 4 and 5
    col = [2, 4, 2, 1, 3, 5, 3]
    assert is_star_coloring(path(7), col)
    assert blocked_count(path(7), col, 3) == 4
    assert blocked_count(Graph(1), [1], 0) == 0


# -- oracle ----------------------------------------------------------------------

@pytest.mark.parametrize("t", [3, 4, 5])
def test_star_graph_degrees(t):
    g = star(t)
    assert star_degree_bruteforce(g, 0) == t
    assert all(star_degree_bruteforce(g, v) == 1 for v in range(1, t + 1))


def test_oracle_examples():
    assert star_degree_bruteforce(Graph(1), 0) == 0
    assert star_degrees(path(7)) == [2, 3, 3, 4, 3, 3, 2]
    assert star_degrees(complete(4)) == [3, 3, 3, 3]
    assert star_degrees(cycle(5)) == [3] * 5


def test_oracle_limits():
    with pytest.raises(OracleTooLarge):
        star_degree_bruteforce(star(20), 0, max_ball=10)


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_oracle_matches_exhaustive(g):
    assert star_degrees(g) == star_degree_exhaustive(g)


@given(graphs(max_n=9, p=0.35))
def test_oracle_below_delta_squared(g):
    assert all(d <= g.max_degree ** 2 for d in star_degrees(g))


@given(graphs(max_n=7), st.integers(0, 10**6))
def test_oracle_dominates_every_coloring(g, seed):
    col = random_star(g, seed)
    for v, d in enumerate(star_degrees(g)):
        assert blocked_count(g, col, v) <= d


# -- decomposition ---------------------------------------------------------------

def test_decompose_p7_midpoint():
    d = decompose(path(7), 3)
    assert d.A1 == d.A2 == d.X == frozenset()
    assert d.A3 == {2, 4} and len(d.Y) == 2
    assert d.girth7_value == 4


def test_decompose_star_center():
    d = decompose(star(4), 0)
    assert d.A1 == {1, 2, 3, 4} and not (d.A2 or d.A3 or d.X or d.Y)


@given(graphs(max_n=10, p=0.3))
def test_decomposition_invariants(g):
    for v in g.vertices():
        d = decompose(g, v)
        assert d.A1 | d.A2 | d.A3 == d.N1
        assert not (d.A1 & d.A2 or d.A1 & d.A3 or d.A2 & d.A3)
        assert d.X | d.Y == d.N2 and not (d.X & d.Y)
        assert all(g.adj[x] & d.A2 for x in d.X)
        assert all(g.adj[y] & (d.A2 | d.A3) for y in d.Y)
        assert d.Y1 <= d.Y
        for y, w in d.y1_matching.items():
            assert w in d.N3 and w in g.adj[y]
        assert len(set(d.y1_matching.values())) == len(d.y1_matching)
        if girth_of_vertex(g, v) >= 7:
            # private neighbors exist for every member of a minimum cover
            assert all(d.private_neighbors[u] is not None for u in d.A2 | d.A3)


# -- closed formulas -----------------------------------------------------------------

def test_girth7_formula_examples():
    assert star_degree_girth7(path(7), 3) == 4
    with pytest.raises(PreconditionError):
        star_degree_girth7(path(7), 0)
    with pytest.raises(PreconditionError):
        star_degree_girth7(cycle(6), 0)


@pytest.mark.parametrize("n", [2, 3])
def test_girth7_on_delta_squared_tree(n):
    t = gen_tree_delta_squared(n)
    for c in t.centers:
        assert star_degree_girth7(t.graph, c) == n * n


def test_matching_formula_examples():
    with pytest.raises(PreconditionError):
        star_degree_matching(cycle(5), 0)
    assert on_five_cycle(cycle(5), 2) and not on_five_cycle(cycle(6), 2)
    assert star_degree_matching(path(7), 3) == 4


@given(trees(min_n=3, max_n=12))
def test_formulas_match_oracle_on_trees(g):
    for v in g.vertices():
        if g.degree(v) < 2:
            continue
        oracle = star_degree_bruteforce(g, v)
        assert star_degree_girth7(g, v) == oracle
        if len(decompose(g, v).A2) % 2 == 0:
            assert star_degree_matching(g, v) == oracle
        else:
            # neighbors of a tree vertex are pairwise non-adjacent, so the
            # complement of an odd A2 has no perfect matching
            with pytest.raises(PreconditionError):
                star_degree_matching(g, v)


@given(trees(min_n=3, max_n=12))
def test_formulas_agree_on_even_a2(g):
    for v in g.vertices():
        if g.degree(v) >= 2 and len(decompose(g, v).A2) % 2 == 0:
            assert star_degree_matching(g, v) == star_degree_girth7(g, v)


def test_y1_can_be_smaller_than_y():
    # two Y-vertices whose only distance-3 neighbor is shared
    g = Graph(7, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5), (0, 6)])
    d = decompose(g, 0)
    assert len(d.Y1) < len(d.Y)
    assert star_degree_matching(g, 0) < d.girth7_value
    assert star_degree_matching(g, 0) == star_degree_bruteforce(g, 0)


def test_girth7_counterexample_pinned():
    g, v = GIRTH7_OVERCOUNT
    assert girth_of_vertex(g, v) == math.inf
    assert star_degree_girth7(g, v) == 4
    assert star_degree_bruteforce(g, v) == 3
    assert star_degree_exhaustive(g)[v] == 3


def test_matching_counterexample_pinned():
    g, v = MATCHING_UNDERCOUNT
    assert not on_five_cycle(g, v)
    assert star_degree_matching(g, v) == 3
    assert star_degree_bruteforce(g, v) == 4
    assert star_degree_exhaustive(g)[v] == 4


# -- blocking paths ----------------------------------------------------------------

def test_classify_blocking_path():
    g = path(7)
    assert classify_blocking_path(g, 3, [3, 2, 1, 0]).signature == "0123"
    assert classify_blocking_path(g, 3, [4, 3, 2, 1]).signature == "1012"
    assert classify_blocking_path(g, 3, [0, 1, 2, 3]).signature == "0123"
    c4 = cycle(4)
    cls = classify_blocking_path(c4, 0, [1, 0, 3, 2])
    assert cls.signature == "1012" and cls.counts
    t = Graph(5, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4)])
    assert classify_blocking_path(t, 0, [0, 1, 2, 4]).signature == "0123"
    with pytest.raises(ValueError):
        classify_blocking_path(g, 3, [0, 1, 2])


# -- m_s -----------------------------------------------------------------------------

def test_m_s_examples():
    assert m_s_degree(path(2)) == 2
    assert m_s_degree(complete(4)) == 4
    assert m_s_degree(empty(1)) == 1
    assert m_s_degree(path(4), [5, 5, 1, 0]) == 2
    assert m_s_degree(path(4), [5, 5, 2, 0]) == 3
    assert m_degree(path(8)) == 3


@pytest.mark.parametrize("n", [2, 3])
def test_m_s_gap_trees(n):
    assert m_s_degree(gen_tree_gap(n).graph) == 3 * n + 1


def test_delta_squared_bound_examples():
    assert delta_squared_bound(path(10)) == 5
    assert delta_squared_bound(star(4)) == 17
    assert delta_squared_bound(Graph(1)) == 1


@settings(max_examples=30)
@given(graphs(max_n=7))
def test_m_s_bounds_sb(g):
    ms = m_s_degree(g)
    assert exact_sb(g).value <= ms <= delta_squared_bound(g)
