"""Automorphism groups, canonical forms, and isomorphism testing for small
graphs via equitable partition refinement with individualization
backtracking, plus an exhaustive brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, edge_count, permute_graph
from .perms import BSGS, CapacityError, Permutation, schreier_sims

__all__ = [
    "OrderedPartition",
    "CanonicalForm",
    "refine",
    "automorphism_group",
    "canonical_form",
    "are_isomorphic",
    "brute_force_automorphisms",
]

#: hard cap for the exhaustive automorphism scan (10! = 3,628,800 candidates)
BRUTE_FORCE_MAX_VERTICES = 10


@dataclass(frozen=True)
class OrderedPartition:
    """An ordered list of disjoint, nonempty, ordered vertex cells."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", tuple(tuple(cell) for cell in self.cells))
        seen: set[int] = set()
        for cell in self.cells:
            if not cell:
                raise ValueError("partition cells must be nonempty")
            for v in cell:
                if v < 0:
                    raise ValueError(f"negative vertex {v}")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in more than one cell")
                seen.add(v)

    @classmethod
    def unit(cls, n: int) -> OrderedPartition:
        if n < 1:
            raise ValueError("partition needs at least one vertex")
        return cls((tuple(range(n)),))

    @classmethod
    def discrete(cls, n: int) -> OrderedPartition:
        if n < 1:
            raise ValueError("partition needs at least one vertex")
        return cls(tuple((v,) for v in range(n)))

    def size(self) -> int:
        return sum(len(cell) for cell in self.cells)

    def is_discrete(self) -> bool:
        return all(len(cell) == 1 for cell in self.cells)


def _check_covers(g: Graph, p: OrderedPartition) -> None:
    flat = sorted(v for cell in p.cells for v in cell)
    if flat != list(range(g.n)):
        raise ValueError("partition does not cover the graph's vertex set exactly")


def _refine_cells(g: Graph, cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Fixpoint of splitting every cell by neighbour counts into every
    splitter cell.  After a split the fragments keep the relative vertex
    order and are emitted with the larger neighbour count first; any fixed
    rule would do, this one is the deterministic contract."""
    changed = True
    while changed:
        changed = False
        for splitter in cells:
            smask = 0
            for v in splitter:
                smask |= 1 << v
            new_cells: list[tuple[int, ...]] = []
            split_here = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                counts = {v: (g.adj[v] & smask).bit_count() for v in cell}
                distinct = sorted(set(counts.values()), reverse=True)
                if len(distinct) == 1:
                    new_cells.append(cell)
                    continue
                for key in distinct:
                    new_cells.append(tuple(v for v in cell if counts[v] == key))
                split_here = True
            if split_here:
                cells = new_cells
                changed = True
                break
    return cells


def refine(g: Graph, p: OrderedPartition) -> OrderedPartition:
    """Coarsest equitable refinement of ``p`` with respect to ``g``:
    afterwards all vertices of a cell have equally many neighbours in
    every cell.  Idempotent, never coarsens, deterministic cell order."""
    _check_covers(g, p)
    return OrderedPartition(tuple(_refine_cells(g, list(p.cells))))


def _cert_bytes(g: Graph, order: list[int]) -> bytes:
    """Upper-triangle adjacency bits of the graph relabelled so that
    ``order[i]`` lands at position i, packed row-major, MSB first, zero
    padded to whole bytes."""
    out = bytearray()
    acc = 0
    nbits = 0
    for i in range(g.n):
        row = g.adj[order[i]]
        for j in range(i + 1, g.n):
            acc = (acc << 1) | ((row >> order[j]) & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)


@dataclass(frozen=True)
class CanonicalForm:
    """A relabelling to canonical positions plus the resulting certificate."""

    relabeling: Permutation
    certificate: bytes

    def text(self) -> str:
        """Stable printed form: ``n=<n>:`` plus lowercase hex of the bits."""
        return f"n={self.relabeling.degree}:{self.certificate.hex()}"


class _IRSearch:
    """One full traversal of the individualization-refinement tree.

    Every discrete partition (leaf) is visited; there is no invariant or
    orbit pruning.  The first leaf serves as the reference labelling:
    any later leaf with the same certificate yields an automorphism, and
    the lexicographically smallest certificate over all leaves is the
    canonical form.
    """

    def __init__(self, g: Graph) -> None:
        if g.n < 1:
            raise ValueError("graph must have at least one vertex")
        self.g = g
        self.gens: list[Permutation] = []
        self.group: Optional[BSGS] = None
        self.first: Optional[tuple[Permutation, bytes]] = None
        self.best: Optional[tuple[Permutation, bytes]] = None

    def run(self) -> tuple[tuple[Permutation, ...], Permutation, bytes]:
        root = _refine_cells(self.g, [tuple(range(self.g.n))])
        self._node(root)
        assert self.best is not None
        return tuple(self.gens), self.best[0], self.best[1]

    def _target_cell(self, cells: list[tuple[int, ...]]) -> Optional[int]:
        # leftmost cell of minimum size among the non-singletons
        best = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
                best = idx
        return best

    def _node(self, cells: list[tuple[int, ...]]) -> None:
        target = self._target_cell(cells)
        if target is None:
            self._leaf(cells)
            return
        for v in cells[target]:
            rest = tuple(u for u in cells[target] if u != v)
            child = cells[:target] + [(v,), rest] + cells[target + 1:]
            self._node(_refine_cells(self.g, child))

    def _leaf(self, cells: list[tuple[int, ...]]) -> None:
        order = [cell[0] for cell in cells]
        cert = _cert_bytes(self.g, order)
        images = [0] * self.g.n
        for pos, v in enumerate(order):
            images[v] = pos
        lab = Permutation(images)
        if self.first is None:
            self.first = (lab, cert)
        elif cert == self.first[1]:
            sigma = lab * self.first[0].inverse()
            if not self._known(sigma):
                self.gens.append(sigma)
                self.group = schreier_sims(self.gens)
        if self.best is None or cert < self.best[1]:
            self.best = (lab, cert)

    def _known(self, sigma: Permutation) -> bool:
        if sigma.is_identity():
            return True
        if self.group is None:
            return False
        return self.group.contains(sigma)


def automorphism_group(g: Graph) -> tuple[Permutation, ...]:
    """A generating set for Aut(g), deterministically ordered.

    Rigid graphs yield ``(identity,)`` so that the result is always a
    valid nonempty generator list.
    """
    gens, _, _ = _IRSearch(g).run()
    if not gens:
        return (Permutation.identity(g.n),)
    return gens


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form of g: the lexicographically smallest upper-triangle
    adjacency bitstring over all leaves of the refinement tree, with a
    relabelling that realizes it."""
    _, lab, cert = _IRSearch(g).run()
    return CanonicalForm(lab, cert)


def are_isomorphic(g1: Graph, g2: Graph) -> Optional[Permutation]:
    """An explicit isomorphism g1 -> g2 (verified before returning), or
    None when the canonical certificates differ."""
    if g1.n != g2.n or edge_count(g1) != edge_count(g2):
        return None
    c1 = canonical_form(g1)
    c2 = canonical_form(g2)
    if c1.certificate != c2.certificate:
        return None
    sigma = c1.relabeling * c2.relabeling.inverse()
    if permute_graph(g1, sigma).adj != g2.adj:
        raise RuntimeError("certificate collision without an isomorphism; this is a bug")
    return sigma


def brute_force_automorphisms(g: Graph) -> list[Permutation]:
    """Every automorphism of g, in lexicographic order of image arrays.

    Tests all g.n! vertex permutations; a partial mapping is abandoned as
    soon as it violates adjacency, which cannot lose solutions.  Guarded
    at 10 vertices (10! = 3,628,800 candidates).
    """
    if g.n > BRUTE_FORCE_MAX_VERTICES:
        raise CapacityError(f"brute force is capped at {BRUTE_FORCE_MAX_VERTICES} vertices")
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    n = g.n
    adj = g.adj
    images = [0] * n
    used = [False] * n
    found: list[Permutation] = []

    def place(i: int) -> None:
        if i == n:
            found.append(Permutation(images))
            return
        row = adj[i]
        for t in range(n):
            if used[t]:
                continue
            ok = True
            for j in range(i):
                if ((row >> j) & 1) != ((adj[t] >> images[j]) & 1):
                    ok = False
                    break
            if ok:
                images[i] = t
                used[t] = True
                place(i + 1)
                used[t] = False
        images[i] = 0

    place(0)
    return found
