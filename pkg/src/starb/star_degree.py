"""Star degree of a vertex, its decomposition, and the m_s bound.

The star degree ``d^s(v)`` is the largest number of colors (other than its
own) that can be blocked for ``v`` over all star colorings of the graph.

Locality
--------
Every bicolored P4 through ``v`` lies inside ``ball(v, 3)``, so the blocked
set of ``v`` depends only on the colors there. A star coloring of the ball
extends to the whole graph by giving every outside vertex its own fresh
color, which creates no bicolored P4 and blocks nothing new for ``v``. The
oracle therefore searches colorings of the ball alone.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from .blocking import blocked_colors
from .coloring import bicolored_p4_at
from .errors import OracleTooLarge, PreconditionError, SearchStats
from .graph import Graph, ball, distances_from, girth_of_vertex, induced_subgraph
from .matching import max_bipartite_matching, perfect_matching

__all__ = [
    "BlockingPathClass",
    "StarDegreeDecomposition",
    "blocked_count",
    "classify_blocking_path",
    "star_degree_bruteforce",
    "star_degree_exhaustive",
    "decompose",
    "star_degree_girth7",
    "star_degree_matching",
    "star_degrees",
    "m_s_degree",
    "m_degree",
    "delta_squared_bound",
    "on_five_cycle",
]

COUNTED_SIGNATURES = frozenset({"0123", "0122", "1012"})


@dataclass(frozen=True)
class BlockingPathClass:
    """Distance signature of a P4 through ``v``, read from the end nearer ``v``."""

    signature: str
    path: tuple[int, int, int, int]

    @property
    def effective(self) -> str:
        # a 0121 path closes a C4 and acts like a 1012 path
        return "1012" if self.signature == "0121" else self.signature

    @property
    def counts(self) -> bool:
        return self.effective in COUNTED_SIGNATURES


def classify_blocking_path(g: Graph, v: int, p: Sequence[int]) -> BlockingPathClass:
    p = tuple(p)
    if len(p) != 4 or v not in p:
        raise ValueError("expected a 4-vertex path through v")
    if p.index(v) >= 2:
        p = p[::-1]
    dist = distances_from(g, v)
    return BlockingPathClass("".join(str(dist[x]) for x in p), p)


def blocked_count(g: Graph, c, v: int) -> int:
    """Number of colors other than ``c(v)`` that are blocked for ``v``."""
    return len(blocked_colors(g, c, v).blocked) - 1


# -- brute-force oracle -------------------------------------------------------------


class _Stop(Exception):
    pass


class _BallSearch:
    """Exact maximization of the blocked count over star colorings of a ball.

    Vertices are colored layer by layer (neighbors, then second neighbors,
    then third neighbors) in canonical form with ``v`` holding color 1.
    Reductions, each preserving the maximum:

    * a third-neighbor's color matters only when it repeats a color on
      ``N(v)``, so those vertices choose between the neighbor colors and a
      fresh unique color;
    * a second-neighbor that can end no blocking path (no neighbor at
      distance 2 or 3, and no 1012 path through it) keeps a fresh color;
    * the blocked colors are among the colors on ``N(v)`` and the remaining
      second-neighbors, which bounds every partial coloring;
    * once ``N(v)`` and the second-neighbors are colored, a third-neighbor
      ``c`` can only help by closing a path ``v a b c`` with ``c(c) = c(a)``
      for a second-neighbor ``b`` whose color is not yet blocked, so the
      bound becomes "blocked now + such colors" and ``c`` tries only those
      repeats.
    """

    def __init__(self, g: Graph, v: int, stats: SearchStats):
        region = ball(g, v, 3)
        self.h, self.index = induced_subgraph(g, region)
        h = self.h
        self.v = lv = self.index.index(v)
        dist = distances_from(h, lv)
        layers = [[u for u in range(h.n) if dist[u] == d] for d in range(4)]
        l1, l2, l3 = layers[1], layers[2], layers[3]
        l1set = set(l1)
        adj = h.adj

        def live(x):
            if any(dist[y] in (2, 3) for y in h.nbrs[x]):
                return True
            return any(
                z != w and z not in adj[w]
                for w in h.nbrs[x] if w in l1set for z in l1
            )

        self.l1 = l1
        self.l2set = set(l2)
        active2 = [x for x in l2 if live(x)]
        self.region = l1 + active2
        self.order = self.region + l3
        self.l3set = set(l3)
        self.tries: dict[int, set[int]] = {}
        self.stats = stats
        self.best = -1
        self.best_colors: list[int] | None = None
        self._reset()

    def _reset(self):
        self.col = [-(u + 1) for u in range(self.h.n)]
        self.col[self.v] = 1
        self.counts: dict[int, int] = {}
        self.distinct = 0

    def _blocked(self) -> set[int]:
        col, nb, lv = self.col, self.h.nbrs, self.v
        cn = {col[u] for u in nb[lv]}
        out = set()
        for x, cnt in self.counts.items():
            if cnt == 0 or x == 1:
                continue
            if x in cn:
                out.add(x)
            else:
                col[lv] = x
                if bicolored_p4_at(nb, col, lv) is not None:
                    out.add(x)
                col[lv] = 1
        return out

    def _evaluate(self):
        total = len(self._blocked())
        if total > self.best:
            self.best = total
            self.best_colors = list(self.col)

    def _helpers(self, blocked: set[int]) -> tuple[set[int], dict[int, set[int]]]:
        """Unblocked second-neighbor colors a third-neighbor could still
        block, and for each third-neighbor the repeats worth trying."""
        col, nb, lv = self.col, self.h.nbrs, self.v
        nv = set(nb[lv])
        targets: set[int] = set()
        tries: dict[int, set[int]] = {}
        for b in self.l2set:
            x = col[b]
            if x < 0 or x in blocked:
                continue
            for c in nb[b]:
                if c in self.l3set:
                    for a in nb[b]:
                        if a in nv:
                            tries.setdefault(c, set()).add(col[a])
                            targets.add(x)
        return targets, tries

    def _add(self, x, delta):
        before = self.counts.get(x, 0)
        self.counts[x] = before + delta
        if x != 1:
            if before == 0 and delta > 0:
                self.distinct += 1
            elif before + delta == 0:
                self.distinct -= 1

    def _rec(self, pos: int, used: int, prefer_new, first_only: bool):
        self.stats.tick()
        order, col, nb = self.order, self.col, self.h.nbrs
        nreg = len(self.region)
        if pos == len(order):
            self._evaluate()
            if first_only:
                raise _Stop
            return
        if pos <= nreg and self.distinct + (nreg - pos) <= self.best:
            self.stats.prunes += 1
            return
        if pos == nreg:
            blocked = self._blocked()
            targets, self.tries = self._helpers(blocked)
            if len(blocked) + len(targets) <= self.best:
                self.stats.prunes += 1
                return
        u = order[pos]
        hold = col[u]
        taken = {col[w] for w in nb[u]}
        if pos < nreg:
            cands = [x for x in range(1, used + 1) if x not in taken]
            if prefer_new(u):
                cands = [used + 1] + cands[::-1]
            else:
                cands.append(used + 1)
            for x in cands:
                col[u] = x
                if bicolored_p4_at(nb, col, u) is None:
                    self._add(x, 1)
                    self._rec(pos + 1, max(used, x), prefer_new, first_only)
                    self._add(x, -1)
                col[u] = hold
        else:
            cands = sorted(self.tries.get(u, set()) - taken)
            for x in cands:
                col[u] = x
                if bicolored_p4_at(nb, col, u) is None:
                    self._rec(pos + 1, used, prefer_new, first_only)
                col[u] = hold
            self._rec(pos + 1, used, prefer_new, first_only)

    def run(self) -> int:
        if not self.region:
            return 0
        l1 = set(self.l1)
        strategies = [
            lambda u: True,
            lambda u: u not in l1,
        ]
        for prefer in strategies:
            try:
                self._rec(0, 1, prefer, True)
            except _Stop:
                pass
            self._reset()
        self._rec(0, 1, lambda u: True, False)
        return self.best


def star_degree_bruteforce(
    g: Graph, v: int, *, max_ball: int = 64, budget: int | None = None,
    stats: SearchStats | None = None,
) -> int:
    """Exact star degree of ``v`` by search over colorings of ``ball(v, 3)``.

    Raises
    ------
    OracleTooLarge
        When the ball has more than ``max_ball`` vertices.
    BudgetExhausted
        When more than ``budget`` search nodes are expanded.
    """
    size = len(ball(g, v, 3))
    if size > max_ball:
        raise OracleTooLarge(f"ball(v, 3) has {size} vertices (cap {max_ball})")
    stats = stats if stats is not None else SearchStats(budget=budget)
    return _BallSearch(g, v, stats).run()


def star_degree_exhaustive(g: Graph, *, max_n: int = 10) -> list[int]:
    """Star degree of every vertex by enumerating every star coloring of the
    whole graph (canonical form). Only for tiny graphs; used to validate the
    ball oracle."""
    if g.n > max_n:
        raise OracleTooLarge(f"{g.n} vertices exceeds exhaustive cap {max_n}")
    best = [0] * g.n
    nb = g.nbrs
    col = [-(u + 1) for u in range(g.n)]

    def leaf():
        palette = set(col)
        for v in range(g.n):
            cv = col[v]
            cn = {col[u] for u in nb[v]}
            cnt = 0
            for x in palette:
                if x == cv:
                    continue
                if x in cn:
                    cnt += 1
                    continue
                col[v] = x
                if bicolored_p4_at(nb, col, v) is not None:
                    cnt += 1
                col[v] = cv
            best[v] = max(best[v], cnt)

    def rec(u, used):
        if u == g.n:
            leaf()
            return
        hold = col[u]
        for x in range(1, used + 2):
            if any(col[w] == x for w in nb[u]):
                continue
            col[u] = x
            if bicolored_p4_at(nb, col, u) is None:
                rec(u + 1, max(used, x))
            col[u] = hold

    rec(0, 0)
    return best


# -- decomposition and closed formulas --------------------------------------------


@dataclass(frozen=True)
class StarDegreeDecomposition:
    v: int
    N1: frozenset[int]
    N2: frozenset[int]
    N3: frozenset[int]
    X: frozenset[int]
    Y: frozenset[int]
    A1: frozenset[int]
    A2: frozenset[int]
    A3: frozenset[int]
    Y1: frozenset[int]
    private_neighbors: dict[int, int | None] = field(default_factory=dict)
    y1_matching: dict[int, int] = field(default_factory=dict)

    @property
    def girth7_value(self) -> int:
        return len(self.A1) + len(self.A2) // 2 + len(self.A3) + len(self.X) + len(self.Y)

    @property
    def matching_value(self) -> int:
        return len(self.A1) + len(self.A2) // 2 + len(self.A3) + len(self.X) + len(self.Y1)

    def to_json(self) -> dict:
        return {
            name: sorted(getattr(self, name))
            for name in ("N1", "N2", "N3", "X", "Y", "A1", "A2", "A3", "Y1")
        } | {"v": self.v, "private_neighbors": {str(k): w for k, w in sorted(self.private_neighbors.items())}}


def _min_covers(pool: Sequence[int], targets, adj, base=frozenset()):
    """All minimum-size subsets of ``pool`` that, together with ``base``,
    dominate ``targets``; yielded in lexicographic order."""
    pool = sorted(pool)
    need = [t for t in targets if not (adj[t] & base)]
    for size in range(len(pool) + 1):
        hit = False
        for combo in itertools.combinations(pool, size):
            s = set(combo)
            if all(adj[t] & s for t in need):
                hit = True
                yield frozenset(combo)
        if hit:
            return


def _assemble(g, v, n1, n2, n3, x_set, y_set, a2, a3) -> StarDegreeDecomposition:
    adj = g.adj
    a1 = n1 - a2 - a3
    priv: dict[int, int | None] = {}
    for u in sorted(a2):
        priv[u] = next((x for x in sorted(x_set) if adj[x] & n1 == {u}), None)
    for u in sorted(a3):
        priv[u] = next((y for y in sorted(y_set) if adj[y] & n1 == {u}), None)
    matching = max_bipartite_matching(sorted(y_set), {y: sorted(adj[y] & n3) for y in y_set})
    return StarDegreeDecomposition(
        v, n1, n2, n3, x_set, y_set, a1, a2, a3, frozenset(matching), priv, matching
    )


def _layers(g: Graph, v: int):
    dist = distances_from(g, v)
    n1, n2, n3 = (frozenset(u for u, d in enumerate(dist) if d == k) for k in (1, 2, 3))
    x_set = frozenset(x for x in n2 if not (g.adj[x] & n3))
    return n1, n2, n3, x_set, n2 - x_set


def decompose(g: Graph, v: int, a2: frozenset[int] | None = None) -> StarDegreeDecomposition:
    """Sets ``N2, N3, X, Y, A1, A2, A3, Y1`` around ``v``.

    ``A2`` is the lexicographically smallest minimum subset of ``N(v)``
    dominating ``X`` (unique when the girth of ``v`` is at least 7) unless
    given explicitly; ``A3`` is the lexicographically smallest minimum subset
    of the rest of ``N(v)`` that finishes dominating ``Y``. ``Y1`` is the set
    of ``Y`` vertices covered by a maximum matching into ``N3``.
    """
    n1, n2, n3, x_set, y_set = _layers(g, v)
    if a2 is None:
        a2 = next(_min_covers(n1, x_set, g.adj))
    a3 = next(_min_covers(n1 - a2, y_set, g.adj, base=a2))
    return _assemble(g, v, n1, n2, n3, x_set, y_set, a2, a3)


def star_degree_girth7(g: Graph, v: int) -> int:
    """Closed form for vertices with degree above 1 lying on no cycle shorter
    than 7: ``|A1| + floor(|A2|/2) + |A3| + |X| + |Y|``."""
    if g.degree(v) <= 1:
        raise PreconditionError(f"vertex {v} has degree {g.degree(v)}; the formula needs degree > 1")
    gv = girth_of_vertex(g, v)
    if gv < 7:
        raise PreconditionError(f"vertex {v} lies on a cycle of length {gv} < 7")
    return decompose(g, v).girth7_value


def on_five_cycle(g: Graph, v: int) -> bool:
    """Exact test for a simple cycle of length 5 through ``v``."""
    nb = g.nbrs

    def walk(u, depth, seen):
        if depth == 4:
            return v in g.adj[u]
        return any(walk(w, depth + 1, seen | {w}) for w in nb[u] if w not in seen)

    return walk(v, 0, frozenset({v}))


def matching_decomposition(g: Graph, v: int) -> StarDegreeDecomposition:
    """First minimum ``A2`` (lexicographic) whose complement-induced subgraph
    has a perfect matching, with its decomposition.

    Raises
    ------
    PreconditionError
        When ``v`` lies on a 5-cycle or no minimum ``A2`` admits such a
        matching.
    """
    if on_five_cycle(g, v):
        raise PreconditionError(f"vertex {v} lies on a 5-cycle")
    n1, n2, n3, x_set, y_set = _layers(g, v)
    for a2 in _min_covers(n1, x_set, g.adj):
        if perfect_matching(a2, lambda a, b: b not in g.adj[a]) is not None:
            a3 = next(_min_covers(n1 - a2, y_set, g.adj, base=a2))
            return _assemble(g, v, n1, n2, n3, x_set, y_set, a2, a3)
    raise PreconditionError(f"no minimum A2 for vertex {v} has a perfect matching in the complement")


def star_degree_matching(g: Graph, v: int) -> int:
    """Closed form ``|A1| + |A2|/2 + |A3| + |X| + |Y1|`` for vertices on no
    5-cycle whose ``A2`` has a perfect matching in the complement graph."""
    return matching_decomposition(g, v).matching_value


def star_degrees(g: Graph, method: str = "oracle", **kw) -> list[int]:
    methods: dict[str, Callable[[Graph, int], int]] = {
        "oracle": lambda g, v: star_degree_bruteforce(g, v, **kw),
        "girth7": star_degree_girth7,
        "matching": star_degree_matching,
    }
    if method not in methods:
        raise ValueError(f"unknown star-degree method {method!r}")
    return [methods[method](g, v) for v in g.vertices()]


def _m_index(values: Sequence[int]) -> int:
    ordered = sorted(values, reverse=True)
    best = 0
    for i, d in enumerate(ordered, start=1):
        if i - 1 <= d:
            best = i
    return best


def m_s_degree(g: Graph, degree_source: str | Sequence[int] | Callable[[Graph, int], int] = "oracle") -> int:
    """Largest ``i`` such that the ``i``-th largest star degree is at least
    ``i - 1``.

    ``degree_source`` is a method name accepted by :func:`star_degrees`, a
    callable ``(g, v) -> int``, or precomputed per-vertex values.
    """
    if isinstance(degree_source, str):
        values = star_degrees(g, degree_source)
    elif callable(degree_source):
        values = [degree_source(g, v) for v in g.vertices()]
    else:
        values = list(degree_source)
    return _m_index(values)


def m_degree(g: Graph) -> int:
    """The ordinary m-degree (upper bound for the b-chromatic number)."""
    return _m_index([g.degree(v) for v in g.vertices()])


def delta_squared_bound(g: Graph) -> int:
    return g.max_degree ** 2 + 1

