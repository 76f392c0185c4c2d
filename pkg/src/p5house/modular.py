"""Homogeneous sets, primality, and the substitution operation."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, MixedStatus, VertexSet

__all__ = [
    "HomogeneousSet",
    "is_homogeneous",
    "find_proper_homogeneous_set",
    "substitute",
    "quotient_factor",
]


@dataclass(frozen=True)
class HomogeneousSet:
    """A proper homogeneous set: no outside vertex is mixed on it, and
    2 <= |members| <= |V| - 1."""

    host: Graph
    members: VertexSet

    def validate(self) -> None:
        g, xs = self.host, self.members
        if not 2 <= len(xs) <= g.n - 1:
            raise ValueError("homogeneous set is not proper")
        if not xs <= g.vertex_set:
            raise ValueError("members outside the host graph")
        if not is_homogeneous(g, xs):
            raise ValueError("some outside vertex is mixed on the set")


def is_homogeneous(g: Graph, xs: VertexSet) -> bool:
    return all(
        g.mixed_status(v, xs) is not MixedStatus.MIXED
        for v in g.vertices
        if v not in xs
    )


def _closure(g: Graph, seed: set[int]) -> frozenset[int]:
    """Smallest homogeneous set containing the seed: every vertex mixed on
    the current set is forced into any homogeneous superset."""
    m = g._mask_of(seed)
    full = g._full_mask()
    changed = True
    while changed and m != full:
        changed = False
        rest = full & ~m
        while rest:
            b = rest & -rest
            rest ^= b
            hit = g._masks[b.bit_length() - 1] & m
            if hit != 0 and hit != m:
                m |= b
                changed = True
    return g._set_of(m)


def find_proper_homogeneous_set(g: Graph) -> HomogeneousSet | None:
    """Return a proper homogeneous set, or None iff the graph is prime.

    Seeds every vertex pair, closes each seed under mixed witnesses, and
    keeps the largest proper closure (ties broken by sorted member tuple).
    Any proper homogeneous set works for the decomposition; a large one
    flattens the resulting trees.
    """
    if g.n < 3:
        return None
    best: frozenset[int] | None = None
    vs = g.vertices
    for i, u in enumerate(vs):
        for v in vs[i + 1 :]:
            closed = _closure(g, {u, v})
            if len(closed) > g.n - 1:
                continue
            if (
                best is None
                or len(closed) > len(best)
                or (len(closed) == len(best) and sorted(closed) < sorted(best))
            ):
                best = closed
    if best is None:
        return None
    hs = HomogeneousSet(host=g, members=best)
    hs.validate()
    return hs


def substitute(g1: Graph, g2: Graph, u: int) -> Graph:
    """Substitute g1 for the vertex u of g2.

    The result keeps g1 intact, keeps g2 minus u intact, and wires every
    remaining g2-vertex to all of g1 or none of it according to its
    adjacency with u.  Vertex sets must be disjoint, except that u itself
    may also appear in g1 (the marker convention used by quotient_factor,
    which makes the round trip label-exact).
    """
    if u not in g2:
        raise ValueError(f"substitution site {u} is not a vertex of the outer graph")
    overlap = g1.vertex_set & (g2.vertex_set - {u})
    if overlap:
        raise ValueError(f"vertex ids {sorted(overlap)} appear in both graphs")
    verts = list(g1.vertices) + [v for v in g2.vertices if v != u]
    edges = g1.edges()
    nbrs_u = g2.neighbors(u)
    for a, b in g2.edges():
        if u not in (a, b):
            edges.append((a, b))
    for v in g2.vertices:
        if v == u:
            continue
        if v in nbrs_u:
            edges.extend((v, w) for w in g1.vertices)
    return Graph(verts, edges)


def quotient_factor(g: Graph, h: HomogeneousSet) -> tuple[Graph, Graph, int]:
    """Split g along a proper homogeneous set.

    Returns (child, quotient, marker): child is the subgraph induced on the
    members; quotient is g with the members collapsed onto the least member
    id; substitute(child, quotient, marker) reproduces g exactly.
    """
    if h.host != g:
        raise ValueError("homogeneous set belongs to a different graph")
    h.validate()
    members = h.members
    marker = min(members)
    child = g.induced(members)
    outside = [v for v in g.vertices if v not in members]
    q_edges = [(a, b) for a, b in g.edges() if a not in members and b not in members]
    for v in outside:
        if g.mixed_status(v, members) is MixedStatus.COMPLETE:
            q_edges.append((v, marker))
    quotient = Graph(outside + [marker], q_edges)
    return child, quotient, marker
