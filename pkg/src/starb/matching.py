"""Small exact matching routines used by the star-degree formulas."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Mapping


def max_bipartite_matching(
    left: Iterable[Hashable], adj: Mapping[Hashable, Iterable[Hashable]]
) -> dict:
    """Maximum matching by repeated augmenting paths (Kuhn's algorithm).

    Returns a dict mapping matched left vertices to their right partners.
    """
    match_right: dict = {}

    def augment(u, seen) -> bool:
        for w in adj.get(u, ()):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_right or augment(match_right[w], seen):
                match_right[w] = u
                return True
        return False

    for u in left:
        augment(u, set())
    return {u: w for w, u in match_right.items()}


def perfect_matching(
    vertices: Iterable[Hashable], can_pair: Callable[[Hashable, Hashable], bool]
) -> list[tuple] | None:
    """Exhaustive search for a perfect matching; ``None`` if there is none.

    Pairs the smallest unmatched vertex with every admissible partner in turn,
    which is exact and fine for the handful of vertices it sees here.
    """
    verts = sorted(vertices)
    if len(verts) % 2:
        return None

    def rec(rest: list) -> list[tuple] | None:
        if not rest:
            return []
        a, others = rest[0], rest[1:]
        for j, b in enumerate(others):
            if can_pair(a, b):
                sub = rec(others[:j] + others[j + 1:])
                if sub is not None:
                    return [(a, b)] + sub
        return None

    return rec(verts)
