"""Undirected simple graphs with bitset adjacency, subset-model constructors,
classical invariants, and graph6/DOT I/O."""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .perms import Permutation

__all__ = [
    "Graph",
    "KSubset",
    "Graph6Error",
    "subsets",
    "johnson_general",
    "kneser",
    "petersen_subsets",
    "petersen_classic",
    "edge_count",
    "degree_sequence",
    "is_regular",
    "girth",
    "diameter",
    "is_connected",
    "permute_graph",
    "is_automorphism",
    "graph6_encode",
    "graph6_decode",
    "to_dot",
    "petersen_layout",
]


class Graph6Error(ValueError):
    """Malformed graph6 text."""


@dataclass(frozen=True)
class KSubset:
    """A k-element subset of the 1-based ground set {1..n}."""

    ground: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(self.members))
        if self.ground < 1:
            raise ValueError("ground set size must be positive")
        if any(not 1 <= m <= self.ground for m in self.members):
            raise ValueError(f"members {self.members!r} not within 1..{self.ground}")
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError(f"members must be strictly increasing: {self.members!r}")

    def label(self) -> str:
        return "{" + ",".join(str(m) for m in self.members) + "}"


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the neighbour bitset of v."""

    n: int
    adj: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "adj", tuple(self.adj))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, bits in enumerate(self.adj):
            if bits & ~full:
                raise ValueError(f"adjacency of vertex {v} mentions vertices >= {self.n}")
            if (bits >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if ((self.adj[u] >> v) & 1) != ((self.adj[v] >> u) & 1):
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise ValueError("label count does not match vertex count")
            if len(set(self.labels)) != self.n:
                raise ValueError("labels must be pairwise distinct")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        bits = self.adj[v]
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return tuple(out)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.neighbors(u) if u < v]


def edge_count(g: Graph) -> int:
    return sum(bits.bit_count() for bits in g.adj) // 2


def degree_sequence(g: Graph) -> list[int]:
    return sorted(bits.bit_count() for bits in g.adj)


def is_regular(g: Graph) -> Optional[int]:
    """The common vertex degree, or None if degrees differ (or n = 0)."""
    if g.n == 0:
        return None
    degrees = {bits.bit_count() for bits in g.adj}
    if len(degrees) == 1:
        return degrees.pop()
    return None


def _bfs_distances(g: Graph, start: int, skip_edge: Optional[tuple[int, int]] = None) -> dict[int, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if skip_edge is not None and {x, y} == set(skip_edge):
                continue
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for acyclic graphs.

    Exact by construction: the shortest cycle through an edge {u, v} is
    that edge plus a shortest u-v path avoiding it.
    """
    best: Optional[int] = None
    for u, v in g.edges():
        dist = _bfs_distances(g, u, skip_edge=(u, v))
        if v in dist:
            length = dist[v] + 1
            if best is None or length < best:
                best = length
    return best


def diameter(g: Graph) -> Optional[int]:
    """Maximum eccentricity, or None if the graph is disconnected or empty."""
    if g.n == 0:
        return None
    worst = 0
    for s in range(g.n):
        dist = _bfs_distances(g, s)
        if len(dist) < g.n:
            return None
        worst = max(worst, max(dist.values()))
    return worst


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(_bfs_distances(g, 0)) == g.n


def permute_graph(g: Graph, sigma: Permutation) -> Graph:
    """Relabel g by sigma: {u, v} is an edge iff {sigma(u), sigma(v)} is."""
    if sigma.degree != g.n:
        raise ValueError(f"degree mismatch: permutation {sigma.degree} vs graph {g.n}")
    adj = [0] * g.n
    for u in range(g.n):
        su = sigma(u)
        bits = g.adj[u]
        while bits:
            low = bits & -bits
            adj[su] |= 1 << sigma(low.bit_length() - 1)
            bits ^= low
    labels = None
    if g.labels is not None:
        relocated = [""] * g.n
        for u in range(g.n):
            relocated[sigma(u)] = g.labels[u]
        labels = tuple(relocated)
    return Graph(g.n, tuple(adj), labels)


def is_automorphism(g: Graph, sigma: Permutation) -> bool:
    if sigma.degree != g.n:
        raise ValueError(f"degree mismatch: permutation {sigma.degree} vs graph {g.n}")
    for u in range(g.n):
        target = 0
        bits = g.adj[u]
        while bits:
            low = bits & -bits
            target |= 1 << sigma(low.bit_length() - 1)
            bits ^= low
        if g.adj[sigma(u)] != target:
            return False
    return True


def subsets(n: int, k: int) -> list[KSubset]:
    """All k-subsets of {1..n} in lexicographic order; index = vertex id."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return [KSubset(n, combo) for combo in itertools.combinations(range(1, n + 1), k)]


def _subset_graph(n: int, k: int, wanted_intersection: int) -> Graph:
    verts = subsets(n, k)
    sets = [frozenset(s.members) for s in verts]
    edges = [
        (i, j)
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
        if len(sets[i] & sets[j]) == wanted_intersection
    ]
    return Graph.from_edges(len(verts), edges, labels=[s.label() for s in verts])


def johnson_general(n: int, k: int, t: int) -> Graph:
    """k-subsets of {1..n}, adjacent iff the intersection has size exactly t."""
    if not 0 <= t < k <= n:
        raise ValueError(f"need 0 <= t < k <= n, got n={n}, k={k}, t={t}")
    return _subset_graph(n, k, t)


def kneser(n: int, k: int) -> Graph:
    """k-subsets of {1..n}, adjacent iff disjoint (edgeless when 2k > n)."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return _subset_graph(n, k, 0)


def petersen_subsets() -> Graph:
    """The Petersen graph on the 3-subsets of {1..5}, adjacent iff the
    subsets share exactly one element."""
    return johnson_general(5, 3, 1)


def petersen_classic() -> Graph:
    """The Petersen graph in the standard pentagon-plus-pentagram drawing:
    outer cycle 0..4, inner step-2 cycle on 5..9, spokes i -- i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def graph6_encode(g: Graph) -> str:
    """Standard graph6 (short form, n <= 62)."""
    if g.n > 62:
        raise ValueError("graph6 short form supports at most 62 vertices")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode short-form graph6; raises Graph6Error on malformed input."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 text")
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if not 63 <= first <= 125:
        raise Graph6Error(f"invalid vertex-count character {s[0]!r}")
    n = first - 63
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != math.ceil(nbits / 6):
        raise Graph6Error(f"expected {math.ceil(nbits / 6)} data characters, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"out-of-range character {ch!r}")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


def petersen_layout() -> dict[int, tuple[float, float]]:
    """Pentagon-plus-pentagram coordinates: vertices 0..4 on an outer
    pentagon of radius 2, vertices 5..9 on an inner ring of radius 1,
    vertex 0 at angle 90 degrees, proceeding counterclockwise."""
    layout = {}
    for k in range(5):
        theta = math.radians(90 + 72 * k)
        layout[k] = (2 * math.cos(theta), 2 * math.sin(theta))
        layout[5 + k] = (math.cos(theta), math.sin(theta))
    return layout


def _fmt_coord(x: float) -> str:
    return f"{round(x, 4) + 0.0:.4f}"


def to_dot(g: Graph, layout: Optional[Mapping[int, tuple[float, float]]] = None) -> str:
    """Render as undirected DOT; positions are pinned via ``pos="x,y!"``
    when a layout is given."""
    lines = ["graph {"]
    for v in range(g.n):
        attrs = []
        if g.labels is not None:
            attrs.append(f'label="{g.labels[v]}"')
        if layout is not None:
            x, y = layout[v]
            attrs.append(f'pos="{_fmt_coord(x)},{_fmt_coord(y)}!"')
        if attrs:
            lines.append(f"  {v} [{', '.join(attrs)}];")
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
