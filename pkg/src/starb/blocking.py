"""Blocked and available colors, P4-systems, star b-vertices, minimality.

A color ``j`` is blocked for ``v`` when recoloring ``v`` alone to ``j`` does
not give a star coloring. A whole color class ``V_i`` can be eliminated when
its vertices can be reassigned to the remaining colors so that the result is
again a star coloring; a star coloring is minimal when no class can be.
"""

from __future__ import annotations

import enum
import random
from collections.abc import Callable
from dataclasses import dataclass, field

from .coloring import (
    Coloring,
    P4Witness,
    as_coloring,
    bicolored_p4_at,
    canonical_form,
    require_star,
)
from .errors import SearchStats
from .graph import Graph

__all__ = [
    "ColorStatus",
    "BlockReport",
    "P4System",
    "EliminationResult",
    "MinimalityReport",
    "blocked_colors",
    "available_colors",
    "p4_system",
    "class_eliminable",
    "is_strong_star_b_vertex",
    "is_star_b_vertex",
    "is_star_b_vertex_by_system",
    "is_b_vertex",
    "minimality_report",
    "is_minimal",
]


class ColorStatus(enum.Enum):
    OWN = "own"
    NEIGHBOR = "neighbor-blocked"
    PATH = "path-blocked"
    AVAILABLE = "available"


@dataclass(frozen=True)
class BlockReport:
    vertex: int
    status: dict[int, ColorStatus]
    witnesses: dict[int, P4Witness]

    @property
    def blocked(self) -> frozenset[int]:
        return frozenset(x for x, s in self.status.items() if s is not ColorStatus.AVAILABLE)

    @property
    def available(self) -> frozenset[int]:
        return frozenset(x for x, s in self.status.items() if s is ColorStatus.AVAILABLE)

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "colors": {
                str(x): {"status": s.value, **({"witness": list(self.witnesses[x].vertices())} if x in self.witnesses else {})}
                for x, s in sorted(self.status.items())
            },
            "available": sorted(self.available),
        }


@dataclass(frozen=True)
class P4System:
    color: int
    members: frozenset[int]
    witnesses: dict[tuple[int, int], tuple[int, int, int, int]]


@dataclass(frozen=True)
class EliminationResult:
    """Outcome of trying to remove color ``color`` from a star coloring.

    ``reassignment`` maps every vertex of the class to its new color when the
    class is eliminable; otherwise it is ``None`` and ``witness`` names a star
    b-vertex of the class.
    """

    color: int
    reassignment: dict[int, int] | None
    witness: int | None = None
    nodes: int = 0

    @property
    def feasible(self) -> bool:
        return self.reassignment is not None

    def apply(self, c: Coloring) -> Coloring:
        if self.reassignment is None:
            raise ValueError(f"class {self.color} is not eliminable")
        return as_coloring(c).recolored(self.reassignment)

    def to_json(self) -> dict:
        return {
            "color": self.color,
            "feasible": self.feasible,
            "reassignment": None if self.reassignment is None else {str(v): x for v, x in sorted(self.reassignment.items())},
            "star_b_vertex": self.witness,
            "nodes": self.nodes,
        }


@dataclass
class MinimalityReport:
    minimal: bool
    witnesses: dict[int, int | None] = field(default_factory=dict)
    eliminations: dict[int, EliminationResult] = field(default_factory=dict)

    def __bool__(self):
        return self.minimal


# -- kernels on raw lists -------------------------------------------------------
# ``col`` is a mutable list of colors; ``palette`` the colors in play.


def _available(nbrs, col: list[int], v: int, palette) -> list[int]:
    cv = col[v]
    seen = {col[u] for u in nbrs[v]}
    out = []
    for x in palette:
        if x == cv or x in seen:
            continue
        col[v] = x
        if bicolored_p4_at(nbrs, col, v) is None:
            out.append(x)
    col[v] = cv
    return out


def _reassign(
    nbrs,
    col: list[int],
    order: list[int],
    cands: dict[int, list[int]],
    stats: SearchStats,
    violates: Callable[[list[int], int], bool] | None = None,
) -> dict[int, int] | None:
    """Backtracking over ``order``; each vertex takes one of ``cands[u]``.

    ``col`` must hold distinct placeholder colors on ``order`` vertices; it is
    restored before returning. A tentative assignment is rejected when
    ``violates(col, u)`` is true (default: a bicolored P4 through ``u``).
    """
    if violates is None:
        def violates(col, u):
            return bicolored_p4_at(nbrs, col, u) is not None

    saved = [col[u] for u in order]
    chosen: dict[int, int] = {}

    def rec(pos: int) -> bool:
        if pos == len(order):
            return True
        u = order[pos]
        hold = col[u]
        for x in cands[u]:
            stats.tick()
            col[u] = x
            if not violates(col, u):
                chosen[u] = x
                if rec(pos + 1):
                    return True
                del chosen[u]
        col[u] = hold
        return False

    try:
        found = rec(0)
    finally:
        for u, x in zip(order, saved):
            col[u] = x
    return dict(chosen) if found else None


def _class_search(
    g: Graph,
    col: list[int],
    i: int,
    palette,
    stats: SearchStats,
    pinned: tuple[int, int] | None = None,
    rng: random.Random | None = None,
    violates=None,
) -> dict[int, int] | None:
    """Look for a star reassignment of class ``i``; ``pinned=(v, x)`` forces ``f(v)=x``."""
    nbrs = g.nbrs
    members = [v for v in range(g.n) if col[v] == i]
    rest = [x for x in palette if x != i]
    cands = {u: _available(nbrs, col, u, rest) for u in members}
    if pinned is not None:
        v, x = pinned
        if x not in cands[v]:
            return None
        cands[v] = [x]
    if any(not cs for cs in cands.values()):
        return None
    if rng is not None:
        for cs in cands.values():
            rng.shuffle(cs)
    for u in members:
        col[u] = -(u + 1)
    try:
        return _reassign(nbrs, col, members, cands, stats, violates)
    finally:
        for u in members:
            col[u] = i


def _system_members(g: Graph, col, v: int) -> tuple[frozenset[int], dict]:
    i = col[v]
    nbrs, adj = g.nbrs, g.adj
    seen = {v}
    witnesses = {}
    stack = [v]
    while stack:
        u = stack.pop()
        for a in nbrs[u]:
            for b in nbrs[a]:
                if b == u or b in adj[u]:
                    continue
                for w in nbrs[b]:
                    if w in seen or w == a or col[w] != i or w in adj[u] or w in adj[a]:
                        continue
                    seen.add(w)
                    witnesses[(u, w)] = (u, a, b, w)
                    stack.append(w)
    return frozenset(seen), witnesses


# -- public operations ------------------------------------------------------


def blocked_colors(g: Graph, c, v: int) -> BlockReport:
    """Classify every color of ``c`` for vertex ``v``.

    Path-blocked colors carry the bicolored P4 that recoloring ``v`` would
    create. Raises :class:`~starb.coloring.NotStarColoringError` on non-star
    input.
    """
    c = require_star(g, c)
    col = list(c.colors)
    cv = col[v]
    seen = {col[u] for u in g.nbrs[v]}
    status: dict[int, ColorStatus] = {}
    witnesses: dict[int, P4Witness] = {}
    for x in c.palette:
        if x == cv:
            status[x] = ColorStatus.OWN
        elif x in seen:
            status[x] = ColorStatus.NEIGHBOR
        else:
            col[v] = x
            w = bicolored_p4_at(g.nbrs, col, v)
            col[v] = cv
            if w is None:
                status[x] = ColorStatus.AVAILABLE
            else:
                status[x] = ColorStatus.PATH
                witnesses[x] = w
    return BlockReport(v, status, witnesses)


def available_colors(g: Graph, c, v: int) -> frozenset[int]:
    c = require_star(g, c)
    return frozenset(_available(g.nbrs, list(c.colors), v, c.palette))


def p4_system(g: Graph, c, v: int) -> P4System:
    """Equivalence class of ``v`` under "joined by an induced P4", closed
    reflexively and transitively, within ``v``'s color class."""
    c = require_star(g, c)
    members, witnesses = _system_members(g, c.colors, v)
    return P4System(c[v], members, witnesses)


def class_eliminable(
    g: Graph,
    c,
    i: int,
    *,
    rng: random.Random | None = None,
    stats: SearchStats | None = None,
    find_witness: bool = True,
) -> EliminationResult:
    """Try to reassign every vertex of color ``i`` so that color ``i`` vanishes
    and the coloring stays a star coloring.

    Vertices are tried in ascending id, candidate colors in ascending order
    (shuffled by ``rng`` when given). The first feasible reassignment is
    returned; when there is none, ``witness`` is the first star b-vertex of
    the class.
    """
    c = require_star(g, c)
    if i not in c.colors:
        raise ValueError(f"color {i} is not used by the coloring")
    stats = stats if stats is not None else SearchStats()
    start = stats.nodes
    col = list(c.colors)
    found = _class_search(g, col, i, c.palette, stats, rng=rng)
    witness = None
    if found is None and find_witness:
        for v in range(g.n):
            if col[v] == i and _star_b(g, col, v, c.palette, stats):
                witness = v
                break
    return EliminationResult(i, found, witness, stats.nodes - start)


def is_b_vertex(g: Graph, c, v: int) -> bool:
    c = require_star(g, c)
    return {c[u] for u in g.nbrs[v]} | {c[v]} == set(c.palette)


def is_strong_star_b_vertex(g: Graph, c, v: int) -> bool:
    c = require_star(g, c)
    return not _available(g.nbrs, list(c.colors), v, c.palette)


def _star_b(g: Graph, col: list[int], v: int, palette, stats: SearchStats) -> bool:
    for x in _available(g.nbrs, col, v, palette):
        if _class_search(g, col, col[v], palette, stats, pinned=(v, x)) is not None:
            return False
    return True


def is_star_b_vertex(g: Graph, c, v: int, *, stats: SearchStats | None = None) -> bool:
    """True when no reassignment of ``v``'s class that sends ``v`` to one of
    its available colors yields a star coloring. Strong star b-vertices are
    star b-vertices vacuously."""
    c = require_star(g, c)
    return _star_b(g, list(c.colors), v, c.palette, stats or SearchStats())


def is_star_b_vertex_by_system(g: Graph, c, v: int, *, stats: SearchStats | None = None) -> bool:
    """Stricter reading tied to the P4-system of ``v``.

    Every available color ``x`` of ``v`` must be blocked for the system: every
    reassignment of the class with ``f(v)=x`` creates a bicolored P4 that
    contains at least two vertices of ``v``'s P4-system. Kept for comparison
    with :func:`is_star_b_vertex`; this one implies that one.
    """
    c = require_star(g, c)
    col = list(c.colors)
    members, _ = _system_members(g, col, v)
    stats = stats or SearchStats()

    def violates(col, u):
        w = bicolored_p4_at(g.nbrs, col, u)
        if w is None:
            return False
        if sum(1 for z in w.vertices() if z in members) >= 2:
            return True
        return any(sum(1 for z in p if z in members) >= 2 for p in _all_bicolored_at(g.nbrs, col, u))

    for x in _available(g.nbrs, col, v, c.palette):
        if _class_search(g, col, col[v], c.palette, stats, pinned=(v, x), violates=violates) is not None:
            return False
    return True


def _all_bicolored_at(nbrs, col, v):
    cv = col[v]
    for b in nbrs[v]:
        for x in nbrs[b]:
            if x != v and col[x] == cv:
                for d in nbrs[x]:
                    if d != b and d != v and col[d] == col[b]:
                        yield (v, b, x, d)
    for x in nbrs[v]:
        for d in nbrs[x]:
            if d != v and col[d] == cv:
                for a in nbrs[v]:
                    if a != x and a != d and col[a] == col[x]:
                        yield (a, v, x, d)


def minimality_report(
    g: Graph, c, *, stats: SearchStats | None = None, stop_early: bool = False
) -> MinimalityReport:
    """Try to eliminate every class; record a star b-vertex for each class that
    resists. ``stop_early`` returns at the first eliminable class."""
    c = require_star(g, c)
    stats = stats or SearchStats()
    report = MinimalityReport(True)
    for i in c.palette:
        res = class_eliminable(g, c, i, stats=stats)
        report.eliminations[i] = res
        report.witnesses[i] = res.witness
        if res.feasible:
            report.minimal = False
            if stop_early:
                break
    return report


def is_minimal(g: Graph, c, *, stats: SearchStats | None = None) -> bool:
    """True when no color class of the star coloring ``c`` can be eliminated."""
    return minimality_report(g, c, stats=stats, stop_early=True).minimal


def eliminate_and_canonicalize(c: Coloring, res: EliminationResult) -> Coloring:
    return canonical_form(res.apply(c))
