"""Finite simple undirected graphs on dense integer vertex ids.

A :class:`Graph` is immutable once built. Vertices are ``0..n-1``; external
names are mapped to ids at ingestion (see :func:`read_edge_list` and
:func:`read_dimacs`).
"""

from __future__ import annotations

import hashlib
import math
from collections import deque
from collections.abc import Iterable
from pathlib import Path

__all__ = [
    "Graph",
    "GraphError",
    "from_edge_list",
    "distance",
    "distances_from",
    "ball",
    "girth_of_vertex",
    "girth",
    "join",
    "complement",
    "induced_subgraph",
    "is_complete",
    "is_connected",
    "path",
    "cycle",
    "complete",
    "empty",
    "complete_bipartite",
    "star",
    "read_edge_list",
    "write_edge_list",
    "read_dimacs",
    "read_graph",
    "graph_digest",
]


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, bad endpoints, bad files)."""


class Graph:
    """Immutable finite simple graph with vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Unordered vertex pairs. Duplicates are merged.

    Notes
    -----
    ``adj[v]`` is a frozenset and ``nbrs[v]`` the same neighbors as a sorted
    tuple; search kernels iterate ``nbrs`` for deterministic order.
    """

    __slots__ = ("n", "edges", "adj", "nbrs")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "nbrs", tuple(tuple(sorted(s)) for s in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.nbrs[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.nbrs), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.nbrs), default=0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from vertex pairs.

    Parallel pairs (in either orientation) collapse to one edge. Self-loops and
    endpoints outside ``0..n-1`` raise :class:`GraphError`.
    """
    return Graph(n, pairs)


def distances_from(g: Graph, source: int) -> list[int | None]:
    """BFS hop counts from ``source``; ``None`` marks unreachable vertices."""
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in g.nbrs[u]:
            if dist[w] is None:
                dist[w] = du + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int | None:
    """Length of a shortest ``u``-``v`` path, or ``None`` if ``v`` is unreachable."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    return distances_from(g, u)[v]


def ball(g: Graph, v: int, r: int) -> frozenset[int]:
    """Vertices at distance at most ``r`` from ``v`` (always contains ``v``)."""
    _check_vertex(g, v)
    dist = distances_from(g, v)
    return frozenset(u for u, d in enumerate(dist) if d is not None and d <= r)


def girth_of_vertex(g: Graph, v: int) -> float:
    """Length of a shortest cycle through ``v``; ``math.inf`` if there is none.

    For each edge ``vu`` the shortest cycle using it has length
    ``1 + dist(u, v)`` in the graph with that edge removed.
    """
    _check_vertex(g, v)
    best = math.inf
    for u in g.nbrs[v]:
        # BFS from u avoiding the edge u-v
        dist = {u: 0}
        queue = deque([u])
        found = None
        while queue and found is None:
            a = queue.popleft()
            for b in g.nbrs[a]:
                if a == u and b == v:
                    continue
                if b not in dist:
                    dist[b] = dist[a] + 1
                    if b == v:
                        found = dist[b]
                        break
                    queue.append(b)
        if found is not None:
            best = min(best, found + 1)
    return best


def girth(g: Graph) -> float:
    return min((girth_of_vertex(g, v) for v in g.vertices()), default=math.inf)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    Vertices of ``h`` are shifted by ``g.n``.
    """
    shift = g.n
    edges = list(g.edges)
    edges.extend((u + shift, v + shift) for u, v in h.edges)
    edges.extend((u, w + shift) for u in range(g.n) for w in range(h.n))
    return Graph(g.n + h.n, edges)


def complement(g: Graph) -> Graph:
    return Graph(g.n, ((u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adj[u]))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``s``.

    Returns
    -------
    sub : Graph
        Vertices relabelled ``0..len(s)-1`` in ascending order of original id.
    index_map : list of int
        ``index_map[i]`` is the original id of ``sub`` vertex ``i``.
    """
    index_map = sorted(set(s))
    for v in index_map:
        _check_vertex(g, v)
    local = {v: i for i, v in enumerate(index_map)}
    edges = [
        (local[u], local[w])
        for u in index_map
        for w in g.nbrs[u]
        if w in local and u < w
    ]
    return Graph(len(index_map), edges), index_map


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d is not None for d in distances_from(g, 0))


# -- generators -------------------------------------------------------------


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty(n: int) -> Graph:
    return Graph(n)


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph(p + q, ((u, p + w) for u in range(p) for w in range(q)))


def star(t: int) -> Graph:
    """``K_{1,t}``; vertex 0 is the center."""
    return complete_bipartite(1, t)


# -- file formats -----------------------------------------------------------


def read_edge_list(source: str | Path) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format (0-based ids).

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = [ln.split() for ln in _read_lines(source)]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        pairs = [(int(a), int(b)) for a, b, *_ in lines[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge-list input: {exc}") from exc
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges, found {len(pairs)}")
    return from_edge_list(n, pairs)


def write_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def read_dimacs(source: str | Path) -> Graph:
    """Parse a DIMACS ``.col`` graph (``p edge n m`` / ``e u v``, 1-based)."""
    n = None
    pairs = []
    for ln in _read_lines(source):
        parts = ln.split()
        tag = parts[0]
        if tag == "c":
            continue
        try:
            if tag == "p":
                n = int(parts[2])
            elif tag == "e":
                pairs.append((int(parts[1]) - 1, int(parts[2]) - 1))
        except (ValueError, IndexError) as exc:
            raise GraphError(f"malformed DIMACS line {ln!r}") from exc
    if n is None:
        raise GraphError("DIMACS input has no 'p' line")
    return from_edge_list(n, pairs)


def read_graph(filename: str | Path, fmt: str | None = None) -> Graph:
    """Read a graph file; ``fmt`` is ``"edgelist"``, ``"dimacs"`` or inferred
    from the extension (``.col``/``.dimacs`` mean DIMACS)."""
    filename = Path(filename)
    if fmt is None:
        fmt = "dimacs" if filename.suffix in (".col", ".dimacs") else "edgelist"
    text = filename.read_text()
    if fmt == "dimacs":
        return read_dimacs(text)
    if fmt == "edgelist":
        return read_edge_list(text)
    raise GraphError(f"unknown graph format {fmt!r}")


def graph_digest(g: Graph) -> str:
    """Stable SHA-256 hex digest of the canonical edge-list text."""
    return hashlib.sha256(write_edge_list(g).encode()).hexdigest()


def _read_lines(source: str | Path) -> list[str]:
    text = source.read_text() if isinstance(source, Path) else source
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
