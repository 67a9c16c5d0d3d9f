import itertools
import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from starb.graph import Graph

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if p is None:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        rng = random.Random(draw(st.integers(0, 2**32 - 1)))
        mask = [rng.random() < p for _ in pairs]
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def trees(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return Graph(n, [(p, i) for i, p in enumerate(parents, start=1)])


def random_star(g, seed):
    """A random star coloring: greedy over a shuffled order, fresh color when
    every existing color would break properness or create a bicolored P4."""
    from starb.coloring import bicolored_p4_at

    rng = random.Random(seed)
    order = list(range(g.n))
    rng.shuffle(order)
    col = [-(u + 1) for u in range(g.n)]
    k = 0
    for v in order:
        choices = list(range(1, k + 1))
        rng.shuffle(choices)
        for x in choices:
            if any(col[u] == x for u in g.nbrs[v]):
                continue
            col[v] = x
            if bicolored_p4_at(g.nbrs, col, v) is None:
                break
            col[v] = -(v + 1)
        else:
            k += 1
            col[v] = k
    return col


# acceptance lines, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
