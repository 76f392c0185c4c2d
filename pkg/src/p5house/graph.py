"""Immutable simple graphs over integer vertex ids.

Everything downstream (pattern search, decomposition, recomposition checks)
leans on two properties of this class: operations never mutate, and derived
graphs keep the vertex ids of their host.  A round-tripped graph can then be
compared label-for-label, with no isomorphism test in sight.

Adjacency is stored as one bitmask per vertex (vertices are ranked by id), so
connectivity and completeness checks used in the hot paths are integer ops.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

VertexSet = frozenset[int]

__all__ = [
    "Graph",
    "MixedStatus",
    "WitnessMode",
    "SplitCert",
    "VertexSet",
    "split_certificate",
    "find_mixed_witness",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "empty_graph",
]


class MixedStatus(enum.Enum):
    COMPLETE = "complete"
    ANTI_COMPLETE = "anti-complete"
    MIXED = "mixed"


class WitnessMode(enum.Enum):
    CONNECTED_EDGE = "connected-edge"
    ANTI_CONNECTED_NON_EDGE = "anti-connected-non-edge"


@dataclass(frozen=True)
class SplitCert:
    """Witness that a graph is split: a clique and a stable set covering it."""

    clique: VertexSet
    stable: VertexSet


class Graph:
    """A finite, simple, undirected graph with stable integer vertex ids."""

    __slots__ = ("_vs", "_pos", "_masks", "_hash")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        masks = [0] * len(vs)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            try:
                i, j = pos[u], pos[v]
            except KeyError as exc:
                raise ValueError(f"edge ({u}, {v}) uses unknown vertex {exc.args[0]}") from None
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        self._vs = tuple(vs)
        self._pos = pos
        self._masks = tuple(masks)
        self._hash: int | None = None

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._vs)

    @property
    def vertices(self) -> tuple[int, ...]:
        """Vertex ids in ascending order."""
        return self._vs

    @property
    def vertex_set(self) -> VertexSet:
        return frozenset(self._vs)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[self._pos[u]] >> self._pos[v] & 1)

    def neighbors(self, v: int) -> VertexSet:
        return self._set_of(self._masks[self._pos[v]])

    def degree(self, v: int) -> int:
        return self._masks[self._pos[v]].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for i, u in enumerate(self._vs):
            m = self._masks[i] >> (i + 1) << (i + 1)
            while m:
                b = m & -m
                m ^= b
                out.append((u, self._vs[b.bit_length() - 1]))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._masks) // 2

    # -- mask plumbing (ids <-> bit positions) -----------------------------

    def _mask_of(self, xs: Iterable[int]) -> int:
        pos = self._pos
        m = 0
        for v in xs:
            try:
                m |= 1 << pos[v]
            except KeyError:
                raise ValueError(f"vertex {v} is not in this graph") from None
        return m

    def _set_of(self, mask: int) -> VertexSet:
        vs = self._vs
        out = []
        while mask:
            b = mask & -mask
            mask ^= b
            out.append(vs[b.bit_length() - 1])
        return frozenset(out)

    def _adj_mask(self, v: int) -> int:
        return self._masks[self._pos[v]]

    def _full_mask(self) -> int:
        return (1 << len(self._vs)) - 1

    def _components_masks(self, mask: int) -> list[int]:
        """Connected components of the subgraph induced on ``mask``."""
        masks = self._masks
        comps = []
        rest = mask
        while rest:
            start = rest & -rest
            comp = start
            frontier = start
            while frontier:
                grow = 0
                while frontier:
                    b = frontier & -frontier
                    frontier ^= b
                    grow |= masks[b.bit_length() - 1]
                frontier = grow & rest & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    def _anti_components_masks(self, mask: int) -> list[int]:
        masks = self._masks
        comps = []
        rest = mask
        while rest:
            start = rest & -rest
            comp = start
            frontier = start
            while frontier:
                grow = 0
                while frontier:
                    b = frontier & -frontier
                    frontier ^= b
                    grow |= ~masks[b.bit_length() - 1]
                frontier = grow & rest & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    # -- derived graphs ----------------------------------------------------

    def induced(self, xs: Iterable[int]) -> "Graph":
        """Subgraph induced on ``xs``; ids are kept as they are."""
        keep = self._mask_of(xs)
        g = Graph.__new__(Graph)
        vs = tuple(v for v in self._vs if keep >> self._pos[v] & 1)
        pos = {v: i for i, v in enumerate(vs)}
        masks = []
        for v in vs:
            m = self._masks[self._pos[v]] & keep
            out = 0
            while m:
                b = m & -m
                m ^= b
                out |= 1 << pos[self._vs[b.bit_length() - 1]]
            masks.append(out)
        g._vs = vs
        g._pos = pos
        g._masks = tuple(masks)
        g._hash = None
        return g

    def minus(self, xs: Iterable[int]) -> "Graph":
        drop = set(xs)
        return self.induced(v for v in self._vs if v not in drop)

    def complement(self) -> "Graph":
        g = Graph.__new__(Graph)
        full = self._full_mask()
        g._vs = self._vs
        g._pos = self._pos
        g._masks = tuple((full & ~m & ~(1 << i)) for i, m in enumerate(self._masks))
        g._hash = None
        return g

    # -- connectivity ------------------------------------------------------

    def components(self) -> list[VertexSet]:
        """Vertex sets of components, ordered by smallest member id."""
        return [self._set_of(m) for m in self._components_masks(self._full_mask())]

    def anti_components(self) -> list[VertexSet]:
        """Vertex sets of components of the complement, same ordering."""
        return [self._set_of(m) for m in self._anti_components_masks(self._full_mask())]

    def is_connected(self) -> bool:
        return len(self._components_masks(self._full_mask())) == 1

    def is_anti_connected(self) -> bool:
        return len(self._anti_components_masks(self._full_mask())) == 1

    def connected_on(self, xs: Iterable[int]) -> bool:
        return len(self._components_masks(self._mask_of(xs))) == 1

    def anti_connected_on(self, xs: Iterable[int]) -> bool:
        return len(self._anti_components_masks(self._mask_of(xs))) == 1

    # -- completeness and mixing -------------------------------------------

    def is_clique(self, xs: Iterable[int]) -> bool:
        m = self._mask_of(xs)
        rest = m
        while rest:
            b = rest & -rest
            rest ^= b
            if m & ~self._masks[b.bit_length() - 1] & ~b:
                return False
        return True

    def is_stable(self, xs: Iterable[int]) -> bool:
        m = self._mask_of(xs)
        rest = m
        while rest:
            b = rest & -rest
            rest ^= b
            if m & self._masks[b.bit_length() - 1]:
                return False
        return True

    def is_complete_between(self, xs: Iterable[int], ys: Iterable[int]) -> bool:
        """True iff every xs-ys pair (over distinct vertices) is an edge."""
        mx, my = self._mask_of(xs), self._mask_of(ys)
        rest = mx
        while rest:
            b = rest & -rest
            rest ^= b
            if my & ~b & ~self._masks[b.bit_length() - 1]:
                return False
        return True

    def is_anti_complete_between(self, xs: Iterable[int], ys: Iterable[int]) -> bool:
        mx, my = self._mask_of(xs), self._mask_of(ys)
        rest = mx
        while rest:
            b = rest & -rest
            rest ^= b
            if my & self._masks[b.bit_length() - 1]:
                return False
        return True

    def mixed_status(self, v: int, xs: Iterable[int]) -> MixedStatus:
        """Classify v against the nonempty set xs (v must lie outside xs)."""
        m = self._mask_of(xs)
        if not m:
            raise ValueError("mixed_status against an empty set")
        if m >> self._pos[v] & 1:
            raise ValueError(f"vertex {v} belongs to the probed set")
        hit = self._adj_mask(v) & m
        if hit == m:
            return MixedStatus.COMPLETE
        if hit == 0:
            return MixedStatus.ANTI_COMPLETE
        return MixedStatus.MIXED

    def is_mixed(self, v: int, xs: Iterable[int]) -> bool:
        return self.mixed_status(v, xs) is MixedStatus.MIXED

    def is_simplicial(self, v: int) -> bool:
        """True iff the neighborhood of v is a clique."""
        m = self._adj_mask(v)
        rest = m
        while rest:
            b = rest & -rest
            rest ^= b
            if m & ~self._masks[b.bit_length() - 1] & ~b:
                return False
        return True

    def is_anti_simplicial(self, v: int) -> bool:
        """True iff the non-neighbors of v form a stable set."""
        m = self._full_mask() & ~self._adj_mask(v) & ~(1 << self._pos[v])
        rest = m
        while rest:
            b = rest & -rest
            rest ^= b
            if m & self._masks[b.bit_length() - 1]:
                return False
        return True

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vs == other._vs and self._masks == other._masks

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vs, self._masks))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- small builders ----------------------------------------------------------


def path_graph(ids: Iterable[int]) -> Graph:
    seq = list(ids)
    return Graph(seq, list(zip(seq, seq[1:])))


def cycle_graph(ids: Iterable[int]) -> Graph:
    seq = list(ids)
    if len(seq) < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(seq, list(zip(seq, seq[1:])) + [(seq[-1], seq[0])])


def complete_graph(ids: Iterable[int]) -> Graph:
    seq = list(ids)
    return Graph(seq, [(u, v) for i, u in enumerate(seq) for v in seq[i + 1 :]])


def empty_graph(ids: Iterable[int]) -> Graph:
    return Graph(ids)


# -- split graph recognition ---------------------------------------------------


def split_certificate(g: Graph) -> SplitCert | None:
    """Return a clique/stable bipartition of V, or None when no split exists.

    Uses the degree-sequence test: with degrees d1 >= ... >= dn and m the
    largest index with d_m >= m - 1, the graph is split iff
    sum(d_i, i <= m) == m(m-1) + sum(d_i, i > m), in which case any m
    vertices carrying the top m degrees form the clique.  Both sides may be
    empty.  The returned certificate is re-checked against the definition.
    """
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i in range(1, len(order) + 1):
        if degs[i - 1] >= i - 1:
            m = i
        else:
            break
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        return None
    clique = frozenset(order[:m])
    stable = frozenset(order[m:])
    if not g.is_clique(clique) or not g.is_stable(stable):
        raise RuntimeError("degree-sequence split test produced an invalid certificate")
    return SplitCert(clique=clique, stable=stable)


# -- mixed-vertex witnesses ------------------------------------------------------


def find_mixed_witness(
    g: Graph, v: int, xs: Iterable[int], mode: WitnessMode
) -> tuple[int, int]:
    """Return (x1, x2) with x1 a neighbor of v and x2 a non-neighbor, where
    x1x2 is an edge (CONNECTED_EDGE) or a non-edge (ANTI_CONNECTED_NON_EDGE).

    Requires v mixed on xs and the induced subgraph on xs connected
    (respectively anti-connected); under those preconditions such a pair
    always exists.  The lexicographically least pair is returned.
    """
    x = frozenset(xs)
    if g.mixed_status(v, x) is not MixedStatus.MIXED:
        raise ValueError(f"vertex {v} is not mixed on the given set")
    if mode is WitnessMode.CONNECTED_EDGE:
        if not g.connected_on(x):
            raise ValueError("witness requested on a disconnected set")
        want_edge = True
    else:
        if not g.anti_connected_on(x):
            raise ValueError("witness requested on a non-anti-connected set")
        want_edge = False
    nb = sorted(u for u in x if g.has_edge(v, u))
    nnb = sorted(u for u in x if not g.has_edge(v, u))
    for x1 in nb:
        for x2 in nnb:
            if g.has_edge(x1, x2) == want_edge:
                return (x1, x2)
    raise RuntimeError("no witness pair found despite preconditions")
