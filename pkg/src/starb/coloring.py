"""Vertex colorings, properness, and the star condition.

A star coloring is a proper coloring in which no path on four vertices uses
only two colors. Colors are positive integers; search code may temporarily
hold colorings with gaps in the palette or with non-positive placeholder
colors, so the kernels here only compare colors for equality.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

from .graph import Graph

__all__ = [
    "Coloring",
    "ColoringError",
    "ImproperColoringError",
    "NotStarColoringError",
    "P4Witness",
    "as_coloring",
    "trivial_coloring",
    "is_proper",
    "find_bicolored_p4",
    "is_star_coloring",
    "cn_open",
    "cn_closed",
    "canonical_form",
    "color_classes",
    "read_coloring",
    "write_coloring",
]


class ColoringError(ValueError):
    pass


class ImproperColoringError(ColoringError):
    """A monochromatic edge was found where a proper coloring is required."""


class NotStarColoringError(ColoringError):
    """An operation that needs a star coloring received something else."""

    def __init__(self, message: str, witness: P4Witness | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors to vertices ``0..n-1``.

    ``colors[v]`` is the color of ``v``. ``k`` counts distinct colors; the
    palette is gap-free only after :func:`canonical_form`.
    """

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(x) for x in self.colors))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def k(self) -> int:
        return len(set(self.colors))

    @property
    def palette(self) -> list[int]:
        return sorted(set(self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self):
        return len(self.colors)

    def __iter__(self):
        return iter(self.colors)

    def classes(self) -> dict[int, frozenset[int]]:
        return color_classes(self)

    def recolored(self, changes: dict[int, int]) -> Coloring:
        col = list(self.colors)
        for v, c in changes.items():
            col[v] = c
        return Coloring(tuple(col))

    def to_json(self) -> list[int]:
        return list(self.colors)

    def __str__(self):
        return "-".join(map(str, self.colors))


@dataclass(frozen=True)
class P4Witness:
    """A path ``a-b-c-d``; as a bicolored witness ``c(a)=c(c)`` and ``c(b)=c(d)``."""

    a: int
    b: int
    c: int
    d: int

    def vertices(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __contains__(self, v):
        return v in (self.a, self.b, self.c, self.d)


def as_coloring(c: Coloring | Sequence[int] | str) -> Coloring:
    """Accept a :class:`Coloring`, a color sequence, or a dash-separated string
    such as ``"1-4-2-3-4"``."""
    if isinstance(c, Coloring):
        return c
    if isinstance(c, str):
        return Coloring(tuple(int(x) for x in c.replace(",", "-").split("-")))
    return Coloring(tuple(c))


def _checked(g: Graph, c) -> Coloring:
    c = as_coloring(c)
    if len(c) != g.n:
        raise ColoringError(f"coloring has {len(c)} entries for a graph on {g.n} vertices")
    return c


def trivial_coloring(g: Graph) -> Coloring:
    return Coloring(tuple(range(1, g.n + 1)))


def is_proper(g: Graph, c) -> bool:
    col = _checked(g, c).colors
    return all(col[u] != col[v] for u, v in g.edges)


def bicolored_p4_at(nbrs, col, v) -> P4Witness | None:
    """Find a bicolored P4 that contains ``v``.

    ``nbrs`` is a per-vertex neighbor sequence and ``col`` a color sequence,
    assumed proper around ``v``. Used as the incremental check after a single
    vertex changes color.
    """
    cv = col[v]
    # v as an endpoint: v-b-x-d with col[x] == cv, col[d] == col[b]
    for b in nbrs[v]:
        cb = col[b]
        for x in nbrs[b]:
            if x == v or col[x] != cv:
                continue
            for d in nbrs[x]:
                if d != b and col[d] == cb and d != v:
                    return P4Witness(v, b, x, d)
    # v second on the path: a-v-x-d with col[a] == col[x], col[d] == cv
    nv = nbrs[v]
    for x in nv:
        cx = col[x]
        for d in nbrs[x]:
            if d == v or col[d] != cv:
                continue
            for a in nv:
                if a != x and a != d and col[a] == cx:
                    return P4Witness(a, v, x, d)
    return None


def find_bicolored_p4(g: Graph, c) -> P4Witness | None:
    """Exhaustive scan for a two-colored path ``a-b-c-d``.

    Anchors on each middle edge ``b-c`` (both orientations, ascending order)
    and returns the first witness, or ``None`` when ``c`` is a star coloring.

    Raises
    ------
    ImproperColoringError
        If ``c`` is not proper.
    """
    col = _checked(g, c).colors
    if not is_proper(g, col):
        raise ImproperColoringError("find_bicolored_p4 needs a proper coloring")
    nbrs = g.nbrs
    for b, x in g.sorted_edges():
        for mid_b, mid_c in ((b, x), (x, b)):
            cb, cc = col[mid_b], col[mid_c]
            ends_a = [a for a in nbrs[mid_b] if a != mid_c and col[a] == cc]
            if not ends_a:
                continue
            for d in nbrs[mid_c]:
                if d != mid_b and col[d] == cb:
                    for a in ends_a:
                        if a != d:
                            return P4Witness(a, mid_b, mid_c, d)
    return None


def is_star_coloring(g: Graph, c) -> bool:
    c = _checked(g, c)
    return is_proper(g, c) and find_bicolored_p4(g, c) is None


def require_star(g: Graph, c) -> Coloring:
    """Return ``c`` as a :class:`Coloring` or raise :class:`NotStarColoringError`."""
    c = _checked(g, c)
    if not is_proper(g, c):
        raise NotStarColoringError("coloring is not proper")
    w = find_bicolored_p4(g, c)
    if w is not None:
        raise NotStarColoringError(f"bicolored P4 {w.vertices()}", w)
    return c


def cn_open(g: Graph, c, v: int) -> frozenset[int]:
    col = _checked(g, c).colors
    return frozenset(col[u] for u in g.nbrs[v])


def cn_closed(g: Graph, c, v: int) -> frozenset[int]:
    col = _checked(g, c).colors
    return cn_open(g, col, v) | {col[v]}


def canonical_form(c) -> Coloring:
    """Renumber colors ``1, 2, ...`` by first occurrence along vertex order."""
    relabel: dict[int, int] = {}
    out = []
    for x in as_coloring(c).colors:
        if x not in relabel:
            relabel[x] = len(relabel) + 1
        out.append(relabel[x])
    return Coloring(tuple(out))


def color_classes(c) -> dict[int, frozenset[int]]:
    classes: dict[int, set[int]] = {}
    for v, x in enumerate(as_coloring(c).colors):
        classes.setdefault(x, set()).add(v)
    return {x: frozenset(vs) for x, vs in sorted(classes.items())}


def read_coloring(source: str | Path, n: int | None = None) -> Coloring:
    """Parse ``vertex color`` lines (any order) or a JSON array of colors."""
    text = source.read_text() if isinstance(source, Path) else source
    stripped = text.strip()
    if stripped.startswith("["):
        return Coloring(tuple(json.loads(stripped)))
    pairs = {}
    for ln in stripped.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        try:
            v, x = ln.split()[:2]
            pairs[int(v)] = int(x)
        except ValueError as exc:
            raise ColoringError(f"malformed coloring line {ln!r}") from exc
    size = n if n is not None else len(pairs)
    if sorted(pairs) != list(range(size)):
        raise ColoringError("coloring must assign every vertex 0..n-1 exactly once")
    return Coloring(tuple(pairs[v] for v in range(size)))


def write_coloring(c) -> str:
    return "".join(f"{v} {x}\n" for v, x in enumerate(as_coloring(c).colors))
