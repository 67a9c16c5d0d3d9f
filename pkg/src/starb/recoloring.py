"""Star recoloring: descend from the trivial coloring by eliminating classes.

The result of :func:`star_recoloring_algorithm` is always a minimal star
coloring, so its color count lies between the star chromatic number and the
star b-chromatic number. Which minimal coloring is reached depends on the
policy.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .blocking import _class_search
from .coloring import Coloring, canonical_form, is_star_coloring, require_star, trivial_coloring
from .errors import SearchStats
from .graph import Graph

__all__ = [
    "RecoloringStep",
    "RecoloringTrace",
    "star_recoloring_step",
    "star_recoloring_algorithm",
    "chain_to_trivial",
    "is_recoloring_step",
]


@dataclass(frozen=True)
class RecoloringStep:
    eliminated: int
    reassignment: dict[int, int]
    k: int


@dataclass
class RecoloringTrace:
    initial: Coloring
    final: Coloring | None = None
    steps: list[RecoloringStep] = field(default_factory=list)
    nodes: int = 0

    def to_json(self) -> dict:
        return {
            "initial": self.initial.to_json(),
            "final": None if self.final is None else self.final.to_json(),
            "steps": [
                {"eliminated": s.eliminated, "reassignment": {str(v): x for v, x in sorted(s.reassignment.items())}, "k": s.k}
                for s in self.steps
            ],
            "nodes": self.nodes,
        }


def star_recoloring_step(
    g: Graph,
    c,
    i: int,
    *,
    rng: random.Random | None = None,
    stats: SearchStats | None = None,
) -> Coloring | None:
    """Eliminate color ``i``; return the canonical ``(k-1)``-coloring, or
    ``None`` when the class is protected by a star b-vertex."""
    c = require_star(g, c)
    if i not in c.colors:
        raise ValueError(f"color {i} is not used by the coloring")
    col = list(c.colors)
    found = _class_search(g, col, i, c.palette, stats or SearchStats(), rng=rng)
    if found is None:
        return None
    return canonical_form(c.recolored(found))


def star_recoloring_algorithm(
    g: Graph,
    policy: str = "minindex",
    *,
    seed: int | None = None,
    stats: SearchStats | None = None,
) -> tuple[Coloring, RecoloringTrace]:
    """Apply star recoloring steps to the trivial coloring until none applies.

    Parameters
    ----------
    policy : {"minindex", "random"}
        ``"minindex"`` eliminates the lowest eliminable color each round with
        ascending candidate order. ``"random"`` shuffles both the class order
        and the candidate order with ``random.Random(seed)``.
    """
    if policy not in ("minindex", "random"):
        raise ValueError(f"unknown policy {policy!r}")
    rng = random.Random(seed) if policy == "random" else None
    stats = stats or SearchStats()
    c = trivial_coloring(g)
    trace = RecoloringTrace(initial=c)
    while True:
        palette = c.palette
        order = list(palette)
        if rng is not None:
            rng.shuffle(order)
        col = list(c.colors)
        for i in order:
            found = _class_search(g, col, i, palette, stats, rng=rng)
            if found is not None:
                c = canonical_form(c.recolored(found))
                trace.steps.append(RecoloringStep(i, found, c.k))
                break
        else:
            break
    trace.final = c
    trace.nodes = stats.nodes
    return c, trace


def is_recoloring_step(g: Graph, before, after) -> bool:
    """True when ``after`` arises from ``before`` by one star recoloring step:
    exactly one color of ``before`` disappears, only its vertices change, each
    changed vertex avoids its closed color neighborhood in ``before``, and
    both colorings are star colorings."""
    before, after = Coloring(tuple(before)), Coloring(tuple(after))
    if not (is_star_coloring(g, before) and is_star_coloring(g, after)):
        return False
    gone = set(before.palette) - set(after.palette)
    if len(gone) != 1 or not set(after.palette) <= set(before.palette):
        return False
    (i,) = gone
    for v in range(g.n):
        if before[v] != i:
            if after[v] != before[v]:
                return False
        else:
            closed = {before[u] for u in g.nbrs[v]} | {i}
            if after[v] in closed:
                return False
    return True


def chain_to_trivial(g: Graph, c) -> list[Coloring]:
    """Explicit chain from the star coloring ``c`` up to a trivial coloring.

    The vertices are ordered so that the first ``k`` are one representative
    of each color (the lowest id of the class); each further vertex, in
    ascending id, is given a new color ``k+1, k+2, ...``. Every coloring in
    the chain is a star coloring and each one arises from the next by a star
    recoloring step. ``chain[0]`` is ``c`` and ``chain[-1]`` uses ``n``
    colors.
    """
    c = canonical_form(require_star(g, c))
    reps = {}
    for v in range(g.n):
        reps.setdefault(c[v], v)
    rest = [v for v in range(g.n) if v not in set(reps.values())]
    chain = [c]
    col = list(c.colors)
    for step, v in enumerate(rest, start=1):
        col[v] = c.k + step
        chain.append(Coloring(tuple(col)))
    return chain
