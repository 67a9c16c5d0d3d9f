import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import graphs, random_star
from starb.coloring import (
    Coloring, ColoringError, canonical_form, cn_closed, cn_open, color_classes,
    find_bicolored_p4, is_proper, is_star_coloring, read_coloring, require_star,
    NotStarColoringError, trivial_coloring, write_coloring,
)
from starb.graph import Graph, complete, cycle, path, star
from starb.families import P23_COLORING

C5 = "1-4-2-3-4"


def p4_by_permutation(g, col):
    """Reference: scan ordered 4-tuples for a bicolored path (not necessarily
    induced; a bicolored P4 in a proper coloring is never chorded)."""
    for a, b, c, d in itertools.permutations(range(g.n), 4):
        if (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
                and col[a] == col[c] and col[b] == col[d] and col[a] != col[b]):
            return True
    return False


def star_forest_ok(g, col):
    """Reference from the forest-of-stars view: every component of every
    two-colored subgraph has at most one vertex of degree >= 2."""
    palette = sorted(set(col))
    for i, j in itertools.combinations(palette, 2):
        keep = [v for v in range(g.n) if col[v] in (i, j)]
        sub = {v: [u for u in g.nbrs[v] if col[u] in (i, j)] for v in keep}
        seen = set()
        for s in keep:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in sub[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if sum(1 for x in comp if len(sub[x]) >= 2) > 1:
                return False
    return True


def test_trivial_examples():
    assert trivial_coloring(complete(3)).palette == [1, 2, 3]
    assert trivial_coloring(path(2)).k == 2


def test_proper_examples():
    assert is_proper(cycle(5), C5)
    assert not is_proper(path(2), [1, 1])
    assert is_proper(cycle(6), trivial_coloring(cycle(6)))


def test_bicolored_p4_examples():
    w = find_bicolored_p4(path(4), "1-2-1-2")
    assert set(w.vertices()) == {0, 1, 2, 3}
    assert find_bicolored_p4(path(4), "1-2-3-1") is None
    assert find_bicolored_p4(cycle(5), C5) is None


def test_star_examples():
    assert is_star_coloring(path(23), P23_COLORING)
    assert not is_star_coloring(cycle(4), "1-2-1-2")
    assert is_star_coloring(cycle(4), trivial_coloring(cycle(4)))


def test_require_star_raises_with_witness():
    with pytest.raises(NotStarColoringError) as exc:
        require_star(cycle(4), "1-2-1-2")
    assert exc.value.witness is not None


def test_length_mismatch():
    with pytest.raises(ColoringError):
        is_proper(path(3), [1, 2])


def test_color_neighborhoods():
    assert cn_open(cycle(5), C5, 0) == {4}
    assert cn_closed(cycle(5), C5, 0) == {1, 4}
    assert cn_open(Graph(1), [1], 0) == frozenset()
    assert cn_open(star(3), [1, 2, 3, 4], 0) == {2, 3, 4}


def test_canonical_form_examples():
    assert str(canonical_form("3-1-3-2")) == "1-2-1-3"
    assert str(canonical_form("1-2-1-3")) == "1-2-1-3"


def test_coloring_io():
    c = Coloring((2, 1, 3))
    assert read_coloring(write_coloring(c)) == c
    assert read_coloring("[1, 2, 1]") == Coloring((1, 2, 1))
    with pytest.raises(ColoringError):
        read_coloring("0 1\n2 1\n")


@given(graphs(max_n=9))
def test_trivial_is_star(g):
    assert is_star_coloring(g, trivial_coloring(g))


@given(graphs(max_n=7), st.data())
def test_star_check_matches_references(g, data):
    k = data.draw(st.integers(1, 4))
    col = data.draw(st.lists(st.integers(1, k), min_size=g.n, max_size=g.n))
    if not is_proper(g, col):
        assert not is_star_coloring(g, col)
        return
    found = find_bicolored_p4(g, col)
    assert (found is not None) == p4_by_permutation(g, col)
    assert (found is None) == star_forest_ok(g, col)
    if found is not None:
        a, b, c, d = found.vertices()
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
        assert col[a] == col[c] and col[b] == col[d]


@given(graphs(max_n=9), st.integers(0, 10**6))
def test_star_implies_proper(g, seed):
    col = random_star(g, seed)
    assert is_star_coloring(g, col) and is_proper(g, col)


@given(graphs(max_n=9), st.integers(0, 10**6), st.permutations(range(1, 10)))
def test_canonical_form_preserves(g, seed, perm):
    col = [perm[x - 1] for x in random_star(g, seed)]
    can = canonical_form(col)
    assert is_star_coloring(g, can)
    assert sorted(color_classes(can).values(), key=sorted) == sorted(color_classes(col).values(), key=sorted)
    assert can.palette == list(range(1, can.k + 1))
    assert canonical_form(can) == can
