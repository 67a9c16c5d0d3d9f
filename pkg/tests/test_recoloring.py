from hypothesis import given, strategies as st

from conftest import graphs, random_star
from starb.blocking import is_minimal
from starb.coloring import canonical_form, is_star_coloring, trivial_coloring
from starb.exact import exact_sb, exact_star_chromatic
from starb.graph import complete, cycle, path
from starb.recoloring import (
    chain_to_trivial, is_recoloring_step, star_recoloring_algorithm,
    star_recoloring_step,
)

C5 = [1, 4, 2, 3, 4]


def test_step_examples():
    assert str(star_recoloring_step(path(3), [1, 2, 3], 3)) == "1-2-1"
    for i in (1, 2, 3, 4):
        assert star_recoloring_step(cycle(5), C5, i) is None
    k4 = complete(4)
    assert all(star_recoloring_step(k4, [1, 2, 3, 4], i) is None for i in range(1, 5))


def test_complete_graph_is_fixed():
    c, trace = star_recoloring_algorithm(complete(5))
    assert c == trivial_coloring(complete(5)) and trace.steps == []


def test_p4_always_three():
    g = path(4)
    assert star_recoloring_algorithm(g)[0].k == 3
    for seed in range(20):
        assert star_recoloring_algorithm(g, "random", seed=seed)[0].k == 3


def test_c5_reaches_four_for_some_order():
    g = cycle(5)
    ks = {star_recoloring_algorithm(g, "random", seed=s)[0].k for s in range(40)}
    assert 4 in ks
    assert ks <= {3, 4}


def test_chain_examples():
    g = path(5)
    triv = trivial_coloring(g)
    assert chain_to_trivial(g, triv) == [triv]
    chain = chain_to_trivial(path(4), [1, 2, 1, 3])
    assert [c.k for c in chain] == [3, 4]
    chain = chain_to_trivial(cycle(5), C5)
    assert len(chain) == 2 and chain[-1].k == 5


def test_trace_steps_are_recoloring_steps():
    g = cycle(9)
    c, trace = star_recoloring_algorithm(g, "random", seed=3)
    cur = trace.initial
    for step in trace.steps:
        nxt = canonical_form(cur.recolored(step.reassignment))
        assert is_recoloring_step(g, cur, cur.recolored(step.reassignment))
        assert nxt.k == step.k
        cur = nxt
    assert cur == c


@given(graphs(max_n=8), st.integers(0, 1000))
def test_output_is_minimal_and_sandwiched(g, seed):
    for policy in ("minindex", "random"):
        c, trace = star_recoloring_algorithm(g, policy, seed=seed)
        assert is_star_coloring(g, c)
        assert is_minimal(g, c)
        assert len(trace.steps) <= max(g.n - 1, 0)
        if g.n <= 6:
            s, _ = exact_star_chromatic(g)
            assert s <= c.k <= exact_sb(g).value


@given(graphs(max_n=8), st.integers(0, 10**6))
def test_chain_to_trivial_is_chain(g, seed):
    col = random_star(g, seed)
    chain = chain_to_trivial(g, col)
    assert chain[-1].k == g.n
    for lower, upper in zip(chain, chain[1:]):
        assert is_star_coloring(g, upper)
        assert is_recoloring_step(g, upper, lower)


def test_is_recoloring_step_rejects():
    g = path(3)
    assert not is_recoloring_step(g, [1, 2, 3], [1, 2, 3])
    assert not is_recoloring_step(g, [1, 2, 3], [1, 1, 3])
    assert not is_recoloring_step(g, [1, 2, 3], [2, 3, 2])
