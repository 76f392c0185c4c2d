"""Brute-force ground truth: induced-pattern search and class membership.

The five patterns are fixed and tiny, so an exhaustive backtracking search
over vertex tuples is both the simplest and the most trustworthy oracle.
Embeddings are enumerated in ascending lexicographic order, with each
pattern's automorphisms quotiented away by canonical position constraints,
so results are reproducible.  Intended scale is n up to roughly 60.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph

__all__ = [
    "PatternKind",
    "PatternHit",
    "H6Hit",
    "find_induced",
    "contains_induced_using",
    "is_class_member",
    "find_special_h6",
]


class PatternKind(enum.Enum):
    P4 = "P4"
    P5 = "P5"
    HOUSE = "house"
    C5 = "C5"
    H6 = "H6"


# Pattern edge lists on positions 0..k-1.  The house is the complement of the
# four-edge path; H6 is the square 1-4-5-2 with pendants 0 at 1 and 3 at 2.
_PATTERN_EDGES: dict[PatternKind, tuple[tuple[int, int], ...]] = {
    PatternKind.P4: ((0, 1), (1, 2), (2, 3)),
    PatternKind.P5: ((0, 1), (1, 2), (2, 3), (3, 4)),
    PatternKind.HOUSE: ((0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)),
    PatternKind.C5: ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)),
    PatternKind.H6: ((0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (4, 5)),
}

# Canonical "position i gets a smaller vertex than position j" constraints
# that pick one representative per automorphism orbit.
_PATTERN_ORDER: dict[PatternKind, tuple[tuple[int, int], ...]] = {
    PatternKind.P4: ((0, 3),),
    PatternKind.P5: ((0, 4),),
    PatternKind.HOUSE: ((0, 4),),
    PatternKind.C5: ((0, 1), (0, 2), (0, 3), (0, 4), (1, 4)),
    PatternKind.H6: ((0, 3),),
}


def _compile(kind: PatternKind):
    edges = set(_PATTERN_EDGES[kind])
    k = 1 + max(max(e) for e in edges)
    adj_req: list[list[int]] = [[] for _ in range(k)]
    non_req: list[list[int]] = [[] for _ in range(k)]
    for p in range(k):
        for q in range(p):
            if (q, p) in edges or (p, q) in edges:
                adj_req[p].append(q)
            else:
                non_req[p].append(q)
    above: list[list[int]] = [[] for _ in range(k)]
    for i, j in _PATTERN_ORDER[kind]:
        above[j].append(i)
    return k, adj_req, non_req, above


_COMPILED = {kind: _compile(kind) for kind in PatternKind}


@dataclass(frozen=True)
class PatternHit:
    """An induced copy: position i of the pattern sits at embedding[i]."""

    kind: PatternKind
    embedding: tuple[int, ...]


@dataclass(frozen=True)
class H6Hit:
    """A decorated induced H6 (positions named v1..v6 in embedding order).

    The degree-one vertices v1, v4 are simplicial in the host and at least
    one degree-three vertex is anti-simplicial; hits are normalized so that
    v2 carries the anti-simplicial flag.  All flags can be re-derived from
    the host graph.
    """

    embedding: tuple[int, ...]
    v1_simplicial: bool
    v4_simplicial: bool
    v2_anti_simplicial: bool
    v3_anti_simplicial: bool


def _embeddings(
    g: Graph, kind: PatternKind, pin: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield induced embeddings in lexicographic order (one per orbit).

    With ``pin`` set, only embeddings using that vertex are produced; the
    pinned search tries the vertex at every pattern position, so it decides
    existence but may emit duplicates.
    """
    k, adj_req, non_req, above = _COMPILED[kind]
    n = g.n
    if n < k:
        return
    masks = g._masks
    full = (1 << n) - 1
    vs = g.vertices
    pin_bit = 0 if pin is None else 1 << g._pos[pin]

    def search(pin_pos: int | None) -> Iterator[tuple[int, ...]]:
        chosen = [0] * k

        def extend(level: int, used: int) -> Iterator[tuple[int, ...]]:
            if level == k:
                yield tuple(vs[c.bit_length() - 1] for c in chosen)
                return
            cand = full & ~used
            for q in adj_req[level]:
                cand &= masks[chosen[q].bit_length() - 1]
            for q in non_req[level]:
                cand &= ~masks[chosen[q].bit_length() - 1]
            for q in above[level]:
                cand &= ~((chosen[q] << 1) - 1)
            if pin_pos is not None:
                cand &= pin_bit if level == pin_pos else ~pin_bit
            while cand:
                b = cand & -cand
                cand ^= b
                chosen[level] = b
                yield from extend(level + 1, used | b)

        return extend(0, 0)

    if pin is None:
        yield from search(None)
    else:
        for p in range(k):
            yield from search(p)


def find_induced(g: Graph, kind: PatternKind) -> PatternHit | None:
    """First induced copy of the pattern in lexicographic order, or None."""
    for emb in _embeddings(g, kind):
        return PatternHit(kind=kind, embedding=emb)
    return None


def contains_induced_using(g: Graph, kind: PatternKind, v: int) -> bool:
    """True iff some induced copy of the pattern goes through vertex v.

    Used for incremental membership checks when a graph grows by one vertex:
    any new forbidden pattern must pass through the new vertex.
    """
    for _ in _embeddings(g, kind, pin=v):
        return True
    return False


def is_class_member(g: Graph, triple: bool = False) -> bool:
    """Membership test: no induced P5 and no induced house.

    With ``triple`` the pentagon is forbidden as well.
    """
    if find_induced(g, PatternKind.P5) is not None:
        return False
    if find_induced(g, PatternKind.HOUSE) is not None:
        return False
    if triple and find_induced(g, PatternKind.C5) is not None:
        return False
    return True


_H6_SWAP = (3, 2, 1, 0, 5, 4)  # the H6 automorphism exchanging its two halves


def find_special_h6(g: Graph) -> H6Hit | None:
    """Search for an induced H6 whose degree-one vertices are simplicial in g
    and at least one of whose degree-three vertices is anti-simplicial.

    The first qualifying embedding (in enumeration order) is returned,
    normalized so that the anti-simplicial degree-three vertex sits at v2.
    """
    simp = {v: g.is_simplicial(v) for v in g.vertices}
    anti = {v: g.is_anti_simplicial(v) for v in g.vertices}
    for emb in _embeddings(g, PatternKind.H6):
        if not (simp[emb[0]] and simp[emb[3]]):
            continue
        a2, a3 = anti[emb[1]], anti[emb[2]]
        if not (a2 or a3):
            continue
        if not a2:
            emb = tuple(emb[i] for i in _H6_SWAP)
            a2, a3 = a3, a2
        return H6Hit(
            embedding=emb,
            v1_simplicial=True,
            v4_simplicial=True,
            v2_anti_simplicial=a2,
            v3_anti_simplicial=a3,
        )
    return None


def validate_hit(g: Graph, hit: PatternHit) -> bool:
    """Re-check that a hit's embedding induces exactly its pattern."""
    emb = hit.embedding
    k, _, _, _ = _COMPILED[hit.kind]
    if len(emb) != k or len(set(emb)) != k:
        return False
    edges = set(_PATTERN_EDGES[hit.kind])
    for j in range(k):
        for i in range(j):
            want = (i, j) in edges or (j, i) in edges
            if g.has_edge(emb[i], emb[j]) != want:
                return False
    return True


def validate_h6_hit(g: Graph, hit: H6Hit) -> bool:
    """Re-derive an H6Hit's decorations from the host graph."""
    if not validate_hit(g, PatternHit(kind=PatternKind.H6, embedding=hit.embedding)):
        return False
    e = hit.embedding
    if not (g.is_simplicial(e[0]) and g.is_simplicial(e[3])):
        return False
    a2, a3 = g.is_anti_simplicial(e[1]), g.is_anti_simplicial(e[2])
    return a2 == hit.v2_anti_simplicial and a3 == hit.v3_anti_simplicial and a2
