import networkx as nx
import pytest

from starb.blocking import is_minimal
from starb.coloring import is_star_coloring
from starb.exact import exact_sb
from starb.families import (
    FAMILY_TAGS, P23_COLORING, family_graph, gap_tree_labels, gen_tree_delta_squared,
    gen_tree_gap, sb_cycle, sb_family, sb_path, verify_witness,
    witness_cycle_coloring, witness_path_coloring,
)
from starb.graph import cycle, girth, is_connected, path
from starb.star_degree import m_s_degree


def is_path_graph(g):
    return is_connected(g) and g.m == g.n - 1 and g.max_degree <= 2


# -- closed forms --------------------------------------------------------------

@pytest.mark.parametrize("n, value", [(1, 1), (3, 2), (4, 3), (7, 3), (8, 4), (22, 4), (23, 5), (40, 5)])
def test_sb_path_table(n, value):
    assert sb_path(n) == value


@pytest.mark.parametrize("n, value", [(3, 3), (5, 4), (7, 3), (9, 4), (20, 5), (21, 4), (23, 4), (24, 5)])
def test_sb_cycle_table(n, value):
    assert sb_cycle(n) == value


def test_sb_cycle_keeps_table_value_at_c8():
    assert sb_cycle(8) == 3
    assert exact_sb(cycle(8)).value == 4


# -- witnesses -------------------------------------------------------------------

def test_printed_witnesses():
    assert str(witness_path_coloring(8)) == "4-3-2-1-2-4-3-4"
    assert str(witness_path_coloring(4)) == "1-2-1-3"
    assert tuple(witness_path_coloring(23)) == P23_COLORING
    assert str(witness_cycle_coloring(9)) == "1-4-1-2-3-2-4-1-3"
    assert str(witness_cycle_coloring(5)) == "1-2-1-3-4"
    assert tuple(witness_cycle_coloring(24)) == P23_COLORING + (5,)


@pytest.mark.parametrize("n", range(1, 61))
def test_path_witnesses(n):
    assert verify_witness(path(n), witness_path_coloring(n), sb_path(n))


@pytest.mark.parametrize("n", [n for n in range(3, 61) if n != 8])
def test_cycle_witnesses(n):
    assert verify_witness(cycle(n), witness_cycle_coloring(n), sb_cycle(n))


def test_c8_table_witness_is_not_the_maximum():
    # the 3-color witness for C_8 is fine; a 4-color one exists as well
    assert verify_witness(cycle(8), witness_cycle_coloring(8), 3)
    assert verify_witness(cycle(8), [1, 2, 1, 3, 1, 4, 2, 4], 4)


@pytest.mark.parametrize("n", range(1, 12))
def test_small_paths_and_cycles_exact(n):
    assert exact_sb(path(n)).value == sb_path(n)
    if n >= 3 and n != 8:
        assert exact_sb(cycle(n)).value == sb_cycle(n)


# -- trees ---------------------------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3])
def test_delta_squared_tree(n):
    t = gen_tree_delta_squared(n)
    g = t.graph
    assert is_connected(g) and g.m == g.n - 1
    assert g.max_degree == n
    assert verify_witness(g, t.witness, n * n + 1)
    assert len(t.centers) == n * n + 1 or n == 1


def test_delta_squared_tree_two_is_a_path():
    g = gen_tree_delta_squared(2).graph
    assert g.n == 35 and is_path_graph(g)


def test_gap_tree_shape():
    lab = gap_tree_labels(2)
    g = gen_tree_gap(2).graph
    assert g.n == len(lab) == 2 + 3 + 2 * (3 + 6)
    assert girth(g) == float("inf") and is_connected(g)
    assert g.degree(lab["y_1"]) == 3 * 2 + 3


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gap_tree_witnesses(n):
    t = gen_tree_gap(n)
    assert verify_witness(t.graph, t.sb_witness, 2 * n + 2)
    assert is_star_coloring(t.graph, t.star3_witness) and t.star3_witness.k == 3


def test_gap_tree_one_exact():
    g = gen_tree_gap(1).graph
    assert exact_sb(g).value == 5
    assert m_s_degree(g) == 5


# -- family dispatch -------------------------------------------------------------

@pytest.mark.parametrize("tag, n, m, value", [
    ("wheel", 6, None, 5),
    ("kbipartite", 4, 7, 8),
    ("fan", 5, None, 4),
    ("ksplit", 3, 2, 4),
    ("complete", 5, None, 5),
    ("kbipartite", 1, 4, 2),
])
def test_family_values(tag, n, m, value):
    res = sb_family(tag, n, m, exact=family_graph(tag, n, m).n <= 9)
    assert res.value == value
    assert res.exact_ok in (True, None)


def test_family_graphs():
    assert nx.is_isomorphic(
        nx.Graph(list(family_graph("wheel", 6).edges)), nx.wheel_graph(6)
    )
    assert family_graph("fan", 5).m == 3 + 4
    with pytest.raises(ValueError):
        family_graph("nope", 3)


@pytest.mark.parametrize("tag", FAMILY_TAGS)
def test_every_tag_dispatches(tag):
    n = {"tdelta": 2, "tgap": 2, "wheel": 5, "fan": 5}.get(tag, 4)
    res = sb_family(tag, n, verify=True)
    assert res.witness_ok in (True, None)
    assert res.to_json()["family"] == tag


def test_star_bipartite_note():
    res = sb_family("kbipartite", 1, 5)
    assert res.value == 2 and res.notes
