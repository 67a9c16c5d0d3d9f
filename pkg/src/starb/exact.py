"""Exact desk-scale solvers for S_b, S, chi, omega and phi.

All enumerations work on colorings in canonical form (colors numbered by
first occurrence along vertex order), which removes color permutations and
nothing else. Budgets count search-node expansions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .blocking import _class_search, minimality_report
from .coloring import Coloring, bicolored_p4_at, is_star_coloring
from .errors import BudgetExhausted, OracleTooLarge, SearchStats
from .graph import Graph, ball, is_complete, join
from .recoloring import star_recoloring_algorithm
from .star_degree import delta_squared_bound, m_degree, m_s_degree, star_degree_bruteforce

__all__ = [
    "SbCertificate",
    "ChainReport",
    "exact_sb",
    "sb_upper_bounds",
    "naive_sb",
    "exact_star_chromatic",
    "exact_chromatic",
    "clique_number",
    "exact_b_chromatic",
    "verify_chain",
    "sb_join",
    "enumerate_star_colorings",
    "find_minimal_star_coloring",
]


@dataclass
class SbCertificate:
    """A minimal star coloring with ``value`` colors plus its provenance.

    ``witnesses[i]`` is a star b-vertex of class ``i``. ``upper_bounds``
    records the seeds the descent started from.
    """

    value: int
    coloring: Coloring
    witnesses: dict[int, int]
    nodes: int
    prunes: int
    upper_bounds: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "coloring": self.coloring.to_json(),
            "star_b_vertices": {str(i): v for i, v in sorted(self.witnesses.items())},
            "nodes": self.nodes,
            "prunes": self.prunes,
            "upper_bounds": self.upper_bounds,
        }


@dataclass
class ChainReport:
    omega: int
    chi: int
    star: int
    sb: int
    n: int

    @property
    def holds(self) -> bool:
        return self.omega <= self.chi <= self.star <= self.sb <= self.n

    def to_json(self) -> dict:
        return {"omega": self.omega, "chi": self.chi, "S": self.star, "S_b": self.sb, "n": self.n, "holds": self.holds}


def _colorings(g: Graph, k: int, stats: SearchStats, *, star: bool, exact: bool = True):
    """Yield canonical proper (optionally star) colorings with exactly ``k``
    colors (at most ``k`` when ``exact`` is false), as mutable lists."""
    n, nb = g.n, g.nbrs
    col = [-(u + 1) for u in range(n)]

    def rec(u, used):
        if u == n:
            if not exact or used == k:
                yield col
            return
        if exact and used + (n - u) < k:
            stats.prunes += 1
            return
        hold = col[u]
        taken = {col[w] for w in nb[u]}
        for x in range(1, min(used + 1, k) + 1):
            if x in taken:
                continue
            stats.tick()
            col[u] = x
            if not star or bicolored_p4_at(nb, col, u) is None:
                yield from rec(u + 1, max(used, x))
            col[u] = hold

    yield from rec(0, 0)


def enumerate_star_colorings(g: Graph, k: int | None = None):
    """All star colorings in canonical form, optionally with exactly ``k`` colors."""
    stats = SearchStats()
    ks = [k] if k is not None else range(1, g.n + 1)
    for kk in ks:
        for col in _colorings(g, kk, stats, star=True):
            yield Coloring(tuple(col))


def _is_minimal_raw(g: Graph, col: list[int], k: int, stats: SearchStats) -> bool:
    palette = range(1, k + 1)
    sizes = sorted(palette, key=lambda i: col.count(i))
    return all(_class_search(g, col, i, palette, stats) is None for i in sizes)


def find_minimal_star_coloring(g: Graph, k: int, budget: int | None = None, *, stats: SearchStats | None = None) -> Coloring | None:
    """First canonical minimal star coloring with exactly ``k`` colors, or
    ``None`` if there is none."""
    stats = stats if stats is not None else SearchStats(budget=budget)
    for col in _colorings(g, k, stats, star=True):
        if _is_minimal_raw(g, col, k, stats):
            return Coloring(tuple(col))
    return None


def sb_upper_bounds(g: Graph, *, max_ball: int = 14) -> dict[str, int]:
    """Upper bounds on S_b: ``n``, ``Delta^2+1`` and, when every ball of
    radius 3 is small enough for the oracle, ``m_s``."""
    bounds = {"n": g.n, "delta_squared": delta_squared_bound(g)}
    if g.n and all(len(ball(g, v, 3)) <= max_ball for v in g.vertices()):
        try:
            bounds["m_s"] = m_s_degree(g, lambda h, v: star_degree_bruteforce(h, v, max_ball=max_ball))
        except OracleTooLarge:
            pass
    return bounds


def exact_sb(g: Graph, budget: int | None = None, *, use_m_s: bool = True, max_ball: int = 14) -> SbCertificate:
    """Star b-chromatic number with a certificate.

    Descends from ``min(n, Delta^2+1, m_s)`` and returns the first ``k`` for
    which some canonical star ``k``-coloring has no eliminable class.

    Raises
    ------
    BudgetExhausted
        With ``lower`` from the recoloring heuristic and ``upper`` the last
        ``k`` still undecided.
    """
    if g.n == 0:
        return SbCertificate(0, Coloring(()), {}, 0, 0, {"n": 0})
    bounds = sb_upper_bounds(g, max_ball=max_ball) if use_m_s else {"n": g.n, "delta_squared": delta_squared_bound(g)}
    stats = SearchStats(budget=budget)
    top = min(bounds.values())
    k = top
    try:
        for k in range(top, 0, -1):
            c = find_minimal_star_coloring(g, k, stats=stats)
            if c is not None:
                report = minimality_report(g, c)
                return SbCertificate(k, c, dict(report.witnesses), stats.nodes, stats.prunes, bounds)
    except BudgetExhausted as exc:
        lower = star_recoloring_algorithm(g)[0].k
        raise BudgetExhausted(f"S_b search ran out of budget at k={k}", lower=lower, upper=k) from exc
    raise AssertionError("unreachable: the 1-coloring branch always terminates")


def naive_sb(g: Graph, *, max_n: int = 8) -> int:
    """Reference value with no pruning at all.

    Enumerates every set partition of the vertices as a coloring, keeps the
    star colorings, and for every class tries every map of the class into the
    other colors, checking each resulting coloring in full.
    """
    if g.n > max_n:
        raise OracleTooLarge(f"naive reference capped at {max_n} vertices")
    best = 0
    for col in _set_partitions(g.n):
        if not is_star_coloring(g, col):
            continue
        k = max(col)
        if k <= best:
            continue
        minimal = True
        for i in range(1, k + 1):
            members = [v for v in range(g.n) if col[v] == i]
            others = [x for x in range(1, k + 1) if x != i]
            trial = list(col)
            for f in itertools.product(others, repeat=len(members)):
                for v, x in zip(members, f):
                    trial[v] = x
                if is_star_coloring(g, trial):
                    minimal = False
                    break
            if not minimal:
                break
        if minimal:
            best = k
    return best


def _set_partitions(n: int):
    """Restricted growth strings of length ``n`` (values from 1)."""
    col = [0] * n

    def rec(u, used):
        if u == n:
            yield list(col)
            return
        for x in range(1, used + 2):
            col[u] = x
            yield from rec(u + 1, max(used, x))

    yield from rec(0, 0)


def exact_star_chromatic(g: Graph, budget: int | None = None) -> tuple[int, Coloring]:
    """Smallest ``k`` admitting a star ``k``-coloring, with a witness."""
    if g.n == 0:
        return 0, Coloring(())
    stats = SearchStats(budget=budget)
    for k in range(1, g.n + 1):
        for col in _colorings(g, k, stats, star=True, exact=False):
            return k, Coloring(tuple(col))
    raise AssertionError("unreachable: the trivial coloring is a star coloring")


def exact_chromatic(g: Graph, budget: int | None = None) -> int:
    if g.n == 0:
        return 0
    stats = SearchStats(budget=budget)
    for k in range(1, g.n + 1):
        for _ in _colorings(g, k, stats, star=False, exact=False):
            return k
    raise AssertionError("unreachable")


def clique_number(g: Graph) -> int:
    """Maximum clique size by branch and bound over candidate sets."""
    best = 0

    def expand(size, cands):
        nonlocal best
        if not cands:
            best = max(best, size)
            return
        for v in sorted(cands):
            if size + len(cands) <= best:
                return
            expand(size + 1, cands & g.adj[v])
            cands = cands - {v}

    expand(0, frozenset(g.vertices()))
    return best


def exact_b_chromatic(g: Graph, budget: int | None = None) -> int:
    """Largest ``k`` with a proper ``k``-coloring in which every class has a
    vertex seeing all ``k`` colors in its closed neighborhood."""
    if g.n == 0:
        return 0
    stats = SearchStats(budget=budget)
    nb = g.nbrs
    for k in range(m_degree(g), 0, -1):
        for col in _colorings(g, k, stats, star=False):
            full = set(range(1, k + 1))
            have = {col[v] for v in range(g.n) if {col[u] for u in nb[v]} | {col[v]} == full}
            if len(have) == k:
                return k
    raise AssertionError("unreachable")


def verify_chain(g: Graph, budget: int | None = None) -> ChainReport:
    """Compute omega, chi, S, S_b and n; ``report.holds`` tells whether they
    are non-decreasing."""
    return ChainReport(
        clique_number(g),
        exact_chromatic(g, budget),
        exact_star_chromatic(g, budget)[0],
        exact_sb(g, budget).value,
        g.n,
    )


def sb_join(g: Graph, h: Graph, budget: int | None = None, *, cross_check: bool = False, max_join: int = 8) -> int:
    """S_b of the join from the components' values.

    Complete sides add their order; otherwise the value is
    ``max(S_b(G) + n_H, S_b(H) + n_G)``. With ``cross_check`` the join itself
    is solved when it has at most ``max_join`` vertices, and a disagreement
    raises ``AssertionError``.
    """
    g_complete, h_complete = is_complete(g), is_complete(h)
    if g_complete and h_complete:
        value = g.n + h.n
    elif h_complete:
        value = exact_sb(g, budget).value + h.n
    elif g_complete:
        value = exact_sb(h, budget).value + g.n
    else:
        value = max(exact_sb(g, budget).value + h.n, exact_sb(h, budget).value + g.n)
    if cross_check and g.n + h.n <= max_join:
        direct = exact_sb(join(g, h), budget).value
        if direct != value:
            raise AssertionError(f"join formula gives {value}, direct search gives {direct}")
    return value

