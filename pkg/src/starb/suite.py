"""Reproduction suite: one check per acceptance criterion.

Each check returns a :class:`CriterionResult`; ``run_suite`` runs them in
order and ``format_table`` renders the pass/fail table. The ``quick`` tier
shrinks the exhaustive ranges, ``full`` uses the stated ones.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import networkx as nx

from .blocking import (
    available_colors,
    class_eliminable,
    is_minimal,
    is_star_b_vertex,
    is_star_b_vertex_by_system,
    is_strong_star_b_vertex,
    p4_system,
)
from .coloring import Coloring, bicolored_p4_at, is_star_coloring
from .exact import clique_number, exact_b_chromatic, exact_chromatic, exact_sb, exact_star_chromatic, sb_join
from .families import (
    gen_tree_delta_squared,
    gen_tree_gap,
    sb_cycle,
    sb_family,
    sb_path,
    verify_witness,
    witness_cycle_coloring,
    witness_path_coloring,
)
from .graph import Graph, complete, complete_bipartite, cycle, empty, is_complete, join, path
from .star_degree import (
    delta_squared_bound,
    m_s_degree,
    star_degree_bruteforce,
    star_degree_girth7,
    star_degree_matching,
)
from .errors import PreconditionError

__all__ = ["CriterionResult", "CRITERIA", "run_suite", "format_table", "atlas_graphs", "random_star_coloring"]

TIERS = ("quick", "full")


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool = False
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:>2}. {self.title} ({self.checked} checks, {len(self.failures)} failures)"

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "notes": self.notes,
        }


def atlas_graphs(max_n: int, *, connected: bool = False) -> list[Graph]:
    """Every graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_n:
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append(Graph(h.number_of_nodes(), list(h.edges())))
    return out


def _trees(max_n: int) -> list[Graph]:
    out = []
    for n in range(2, max_n + 1):
        for t in nx.nonisomorphic_trees(n):
            out.append(Graph(n, list(t.edges())))
    return out


def _random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return path(2)
    t = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return Graph(n, list(t.edges()))


def _random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_star_coloring(g: Graph, rng: random.Random) -> Coloring:
    """A random star coloring: vertices in random order, each taking a
    uniformly random color among the existing colors that keep the partial
    coloring star, or a new one."""
    col = [-(u + 1) for u in range(g.n)]
    order = list(range(g.n))
    rng.shuffle(order)
    used = 0
    for u in order:
        options = []
        for x in range(1, used + 1):
            if any(col[w] == x for w in g.nbrs[u]):
                continue
            col[u] = x
            if bicolored_p4_at(g.nbrs, col, u) is None:
                options.append(x)
        options.append(used + 1)
        col[u] = rng.choice(options)
        used = max(used, col[u])
    return Coloring(tuple(col))


# -- criteria -------------------------------------------------------------------


def c1_paths(tier: str) -> CriterionResult:
    r = CriterionResult(1, "path table: exact n<=10, witnesses n<=60")
    for n in range(1, 11):
        r.checked += 1
        got = exact_sb(path(n)).value
        if got != sb_path(n):
            r.failures.append(f"P_{n}: exact {got}, table {sb_path(n)}")
    for n in range(11, 61):
        r.checked += 1
        if not verify_witness(path(n), witness_path_coloring(n), sb_path(n)):
            r.failures.append(f"P_{n}: witness does not verify")
        if sb_path(n) > delta_squared_bound(path(n)):
            r.failures.append(f"P_{n}: table value above Delta^2+1")
    return r


def c2_cycles(tier: str) -> CriterionResult:
    r = CriterionResult(2, "cycle table: exact n<=10, witnesses n<=60")
    for n in range(3, 11):
        r.checked += 1
        cert = exact_sb(cycle(n))
        if cert.value != sb_cycle(n):
            r.failures.append(f"C_{n}: exact {cert.value} (witness {cert.coloring}), table {sb_cycle(n)}")
    for n in range(3, 61):
        r.checked += 1
        if not verify_witness(cycle(n), witness_cycle_coloring(n), sb_cycle(n)):
            r.failures.append(f"C_{n}: witness does not verify")
    for n, k in ((20, 5), (23, 4)):
        if witness_cycle_coloring(n).k != k:
            r.failures.append(f"C_{n}: witness has {witness_cycle_coloring(n).k} colors, expected {k}")
    return r


def c3_completeness(tier: str) -> CriterionResult:
    r = CriterionResult(3, "S_b = n iff complete, connected n<=6")
    for g in atlas_graphs(6 if tier == "full" else 5, connected=True):
        r.checked += 1
        full = exact_sb(g).value == g.n
        if full != is_complete(g):
            r.failures.append(f"n={g.n} edges={g.sorted_edges()}: S_b=n is {full}, complete is {is_complete(g)}")
    return r


def c4_characterization(tier: str, seed: int = 0) -> CriterionResult:
    r = CriterionResult(4, "class non-eliminable iff it holds a star b-vertex")
    rng = random.Random(seed)
    colorings = 500 if tier == "full" else 150
    system_gaps = 0
    for _ in range(colorings):
        n = rng.randint(2, 8)
        g = _random_graph(n, rng.uniform(0.2, 0.7), rng)
        c = random_star_coloring(g, rng)
        for i in c.palette:
            r.checked += 1
            stuck = not class_eliminable(g, c, i, find_witness=False).feasible
            members = [v for v in range(n) if c[v] == i]
            has_b = any(is_star_b_vertex(g, c, v) for v in members)
            if stuck != has_b:
                r.failures.append(f"edges={g.sorted_edges()} c={c} class {i}: stuck={stuck} star-b={has_b}")
            if has_b and not any(is_star_b_vertex_by_system(g, c, v) for v in members):
                system_gaps += 1
    r.notes.append(f"{colorings} random star colorings")
    r.notes.append(f"classes protected only under the operational reading (not the P4-system one): {system_gaps}")
    return r


def c5_c5_example(tier: str) -> CriterionResult:
    r = CriterionResult(5, "C_5 with 1-4-2-3-4")
    g, c = cycle(5), Coloring((1, 4, 2, 3, 4))
    checks = {
        "star coloring": is_star_coloring(g, c),
        "minimal": is_minimal(g, c),
        "strong star b-vertices are exactly colors 1, 2, 3": [v for v in range(5) if is_strong_star_b_vertex(g, c, v)] == [0, 2, 3],
        "vertex 1 has available {3}": available_colors(g, c, 1) == {3},
        "vertex 4 has available {2}": available_colors(g, c, 4) == {2},
        "P4-system of vertex 1 is {1, 4}": p4_system(g, c, 1).members == {1, 4},
        "P4-system of vertex 4 is {1, 4}": p4_system(g, c, 4).members == {1, 4},
    }
    for name, ok in checks.items():
        r.checked += 1
        if not ok:
            r.failures.append(name)
    return r


def c6_star_degree(tier: str, seed: int = 0) -> CriterionResult:
    r = CriterionResult(6, "girth7 / matching formulas = oracle on trees n<=12")
    rng = random.Random(seed)
    trees = [_random_tree(rng.randint(2, 12), rng) for _ in range(200)]
    if tier == "full":
        trees += _trees(12)
    matched = 0
    for g in trees:
        for v in g.vertices():
            if g.degree(v) <= 1:
                continue
            r.checked += 1
            oracle = star_degree_bruteforce(g, v)
            formula = star_degree_girth7(g, v)
            if formula != oracle:
                r.failures.append(f"tree {g.sorted_edges()} v={v}: girth7 {formula}, oracle {oracle}")
            try:
                m = star_degree_matching(g, v)
            except PreconditionError:
                continue
            matched += 1
            if m != oracle:
                r.failures.append(f"tree {g.sorted_edges()} v={v}: matching {m}, oracle {oracle}")
    r.notes.append(f"{len(trees)} trees; matching formula applicable at {matched} vertices")
    return r


def c7_bounds(tier: str) -> CriterionResult:
    r = CriterionResult(7, "S_b <= m_s <= Delta^2+1 and omega <= chi <= S <= S_b <= n")
    graphs = atlas_graphs(7 if tier == "full" else 6)
    extra = [path(n) for n in range(2, 11)] + [cycle(n) for n in range(3, 11)]
    for g in graphs + extra:
        r.checked += 1
        sb = exact_sb(g).value
        ms = m_s_degree(g, "oracle") if g.n else 0
        d2 = delta_squared_bound(g)
        if not sb <= ms <= d2:
            r.failures.append(f"edges={g.sorted_edges()}: S_b={sb} m_s={ms} Delta^2+1={d2}")
        if g.n <= 7:
            w, chi, s = clique_number(g), exact_chromatic(g), exact_star_chromatic(g)[0]
            if not w <= chi <= s <= sb <= g.n:
                r.failures.append(f"edges={g.sorted_edges()}: chain {w},{chi},{s},{sb},{g.n}")
    return r


def c8_delta_squared(tier: str) -> CriterionResult:
    r = CriterionResult(8, "Delta^2+1 trees, n = 1, 2, 3")
    for n in (1, 2, 3):
        r.checked += 1
        t = gen_tree_delta_squared(n)
        g = t.graph
        if g.max_degree != n:
            r.failures.append(f"T_{n}: Delta = {g.max_degree}")
        if not verify_witness(g, t.witness, n * n + 1):
            r.failures.append(f"T_{n}: witness does not verify with {n * n + 1} colors")
        if n == 2:
            is_path = g.n == 35 and g.m == 34 and g.max_degree == 2 and nx.is_connected(nx.Graph(list(g.edges)))
            if not is_path or sb_path(35) != 5:
                r.failures.append("T_2 is not P_35 with sb_path(35) = 5")
    return r


def c9_gaps(tier: str) -> CriterionResult:
    r = CriterionResult(9, "gap trees (n = 1, 2, 3) and K_{n,n}")
    for n in (1, 2, 3):
        t = gen_tree_gap(n)
        g = t.graph
        r.checked += 1
        if not verify_witness(g, t.sb_witness, 2 * n + 2):
            r.failures.append(f"T_{n}: sb_witness does not verify with {2 * n + 2} colors")
        r.checked += 1
        ms = m_s_degree(g, lambda h, v: star_degree_bruteforce(h, v, max_ball=g.n))
        if ms != 3 * n + 1:
            r.failures.append(f"T_{n}: oracle m_s = {ms}, expected 3n+1 = {3 * n + 1}")
        r.checked += 1
        if not (is_star_coloring(g, t.star3_witness) and t.star3_witness.k <= 3):
            r.failures.append(f"T_{n}: star3_witness is not a star coloring with <= 3 colors")
        r.notes.append(f"T_{n}: m_s - witness colors = {ms - (2 * n + 2)}, witness colors - 3 = {2 * n - 1}")
        if n == 1:
            r.notes.append(f"T_1: exact S_b = {exact_sb(g).value}")
    for n in range(2, 6):
        r.checked += 1
        phi = exact_b_chromatic(complete_bipartite(n, n))
        sb = sb_family("kbipartite", n, n).value
        if phi != 2 or sb != n + 1:
            r.failures.append(f"K_{{{n},{n}}}: phi={phi} formula S_b={sb}")
    return r


def _small_family(total: int):
    for n in range(1, total):
        yield f"P{n}", path(n)
        yield f"E{n}", empty(n)
        yield f"K{n}", complete(n)
        if n >= 3:
            yield f"C{n}", cycle(n)


def c10_joins(tier: str) -> CriterionResult:
    r = CriterionResult(10, "join formula and wheels / fans / K_{p,q}")
    total = 8 if tier == "full" else 6
    pool = list(_small_family(total))
    for i, (name_g, g) in enumerate(pool):
        for name_h, h in pool[i:]:
            if g.n + h.n > total:
                continue
            r.checked += 1
            formula = sb_join(g, h)
            direct = exact_sb(join(g, h)).value
            if formula != direct:
                r.failures.append(f"{name_g} v {name_h}: formula {formula}, direct {direct}")
    cases = [("wheel", k, None) for k in range(5, 9)] + [("fan", k, None) for k in range(5, 9)]
    cases += [("kbipartite", p, q) for p in range(1, 5) for q in range(p, 5)]
    for tag, n, m in cases:
        r.checked += 1
        res = sb_family(tag, n, m, exact=True)
        if not res.exact_ok:
            r.failures.append(f"{tag} n={n} m={m}: formula {res.value}, exact {res.exact_value}")
        if tag == "kbipartite" and min(n, m) == 1 and 1 + max(n, m) != res.exact_value:
            r.notes.append(f"K_{{{n},{m}}}: 1+max = {1 + max(n, m)} differs from exact {res.exact_value}; the star is K_1 joined with an edgeless graph")
    return r


CRITERIA = {
    1: c1_paths,
    2: c2_cycles,
    3: c3_completeness,
    4: c4_characterization,
    5: c5_c5_example,
    6: c6_star_degree,
    7: c7_bounds,
    8: c8_delta_squared,
    9: c9_gaps,
    10: c10_joins,
}


def run_criterion(number: int, tier: str = "full") -> CriterionResult:
    if tier not in TIERS:
        raise ValueError(f"unknown tier {tier!r}")
    t0 = time.perf_counter()
    res = CRITERIA[number](tier)
    res.passed = not res.failures
    res.seconds = time.perf_counter() - t0
    return res


def run_suite(tier: str = "quick", only=None) -> list[CriterionResult]:
    return [run_criterion(k, tier) for k in sorted(CRITERIA) if only is None or k in only]


def format_table(results) -> str:
    lines = []
    for res in results:
        lines.append(f"{res.line()}  {res.seconds:.1f}s")
        for f in res.failures[:5]:
            lines.append(f"       - {f}")
        if len(res.failures) > 5:
            lines.append(f"       ... {len(res.failures) - 5} more")
        for note in res.notes:
            lines.append(f"       * {note}")
    ok = sum(r.passed for r in results)
    lines.append(f"{ok}/{len(results)} criteria passed")
    return "\n".join(lines)
