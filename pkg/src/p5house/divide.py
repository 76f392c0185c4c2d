"""Split graph divides and split graph unification.

A divide (A, B, C, L, T) relaxes the homogeneous-set decomposition: the
vertices mixed on A all sit in the clique L, whose outside adjacency is
rigidly controlled.  Factoring along a divide produces a composable pair of
strictly smaller graphs glued along the common split subgraph L ∪ T;
unification is the inverse gluing.  These two operations are the soundness
boundary of the whole grammar, so both ends re-validate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, MixedStatus, VertexSet
from .skewpart import CaseTag, UsableCase

__all__ = [
    "SplitGraphDivide",
    "PairRoles",
    "ComposablePair",
    "DivideInvalid",
    "InvalidPair",
    "build_divide",
    "validate_divide",
    "factor",
    "unify",
]


class DivideInvalid(Exception):
    """The constructed five-tuple violates a divide condition."""


class InvalidPair(Exception):
    """A composable-pair condition fails; carries the first violated one."""

    def __init__(self, bullet: str):
        self.bullet = bullet
        super().__init__(f"composable pair violates: {bullet}")


@dataclass(frozen=True)
class SplitGraphDivide:
    a: VertexSet
    b: VertexSet
    c: VertexSet
    l: VertexSet
    t: VertexSet


@dataclass(frozen=True)
class PairRoles:
    """Role sets of a composable pair plus its two marker vertices.

    marker_c stands in for the missing B ∪ C side inside g1; marker_a for
    the missing A side inside g2.  Recomposition drops both.
    """

    a_set: VertexSet
    b_set: VertexSet
    c_set: VertexSet
    l_set: VertexSet
    t_set: VertexSet
    marker_a: int
    marker_c: int


@dataclass(frozen=True)
class ComposablePair:
    g1: Graph
    g2: Graph
    roles: PairRoles


def validate_divide(g: Graph, d: SplitGraphDivide) -> bool:
    """Check all nine divide conditions; True iff every one holds."""
    parts = [d.a, d.b, d.c, d.l, d.t]
    if sum(len(p) for p in parts) != len(frozenset().union(*parts)):
        return False
    if frozenset().union(*parts) != g.vertex_set:
        return False
    if len(d.a) < 2 or len(d.c) < 2:
        return False
    if not d.l or not g.is_clique(d.l):
        return False
    if not g.is_stable(d.t):
        return False
    if not all(g.mixed_status(v, d.a) is MixedStatus.MIXED for v in d.l):
        return False
    if not g.is_complete_between(d.a, d.b):
        return False
    if not g.is_anti_complete_between(d.a, d.c | d.t):
        return False
    if not g.is_complete_between(d.l, d.b | d.c):
        return False
    if not g.is_anti_complete_between(d.t, d.c):
        return False
    return True


def build_divide(g: Graph, case: UsableCase) -> SplitGraphDivide:
    """Turn a component-side witness into a divide of g.

    With X1 the special component and K1 its mixed clique: A = X1; B = the
    Y-vertices complete to X1; C = the other components, the Y-vertices
    anti-complete to X1, and the leftover stable vertices complete to K1;
    L = K1; T = the leftover stable vertices with a non-neighbor in K1.
    The result is re-validated against all nine divide conditions.
    """
    if case.tag is not CaseTag.CASE3:
        raise ValueError("divides are built from component-side witnesses only")
    d = case.decomposition
    i = case.special_index
    a = d.x_parts[i]
    l = d.k_mixed[i]
    b: set[int] = set()
    c: set[int] = set()
    for v in d.y - l:
        status = g.mixed_status(v, a)
        if status is MixedStatus.COMPLETE:
            b.add(v)
        elif status is MixedStatus.ANTI_COMPLETE:
            c.add(v)
        else:
            raise DivideInvalid(f"vertex {v} outside the mixed clique is mixed on A")
    for j, xj in enumerate(d.x_parts):
        if j != i:
            c |= xj
    t: set[int] = set()
    for v in d.s:
        if g.mixed_status(v, l) is MixedStatus.COMPLETE:
            c.add(v)
        else:
            t.add(v)
    out = SplitGraphDivide(a=a, b=frozenset(b), c=frozenset(c), l=l, t=frozenset(t))
    if not validate_divide(g, out):
        raise DivideInvalid("constructed divide fails validation")
    return out


def _pair_violation(p: ComposablePair) -> str | None:
    """First violated composable-pair condition, or None when valid."""
    r = p.roles
    sets = [r.a_set, r.b_set, r.c_set, r.l_set, r.t_set]
    if sum(len(s) for s in sets) != len(frozenset().union(*sets)):
        return "role sets overlap"
    if not r.a_set:
        return "A side is empty"
    if not r.c_set:
        return "C side is empty"
    if r.marker_a == r.marker_c:
        return "markers coincide"
    if {r.marker_a, r.marker_c} & frozenset().union(*sets):
        return "a marker collides with a role vertex"
    g1, g2 = p.g1, p.g2
    if g1.vertex_set != r.a_set | r.l_set | r.t_set | {r.marker_c}:
        return "g1 vertex set is not A, L, T plus its marker"
    if not g1.is_clique(r.l_set):
        return "L is not a clique in g1"
    if not g1.is_stable(r.t_set):
        return "T is not stable in g1"
    if not g1.is_anti_complete_between(r.a_set, r.t_set):
        return "A is not anti-complete to T in g1"
    if not g1.is_complete_between({r.marker_c}, r.l_set):
        return "g1 marker is not complete to L"
    if not g1.is_anti_complete_between({r.marker_c}, r.a_set | r.t_set):
        return "g1 marker is not anti-complete to A and T"
    if g2.vertex_set != r.b_set | r.c_set | r.l_set | r.t_set | {r.marker_a}:
        return "g2 vertex set is not B, C, L, T plus its marker"
    if g1.induced(r.l_set | r.t_set) != g2.induced(r.l_set | r.t_set):
        return "the two sides disagree on the common split subgraph"
    if not g2.is_anti_complete_between(r.t_set, r.c_set):
        return "T is not anti-complete to C in g2"
    if not g2.is_complete_between(r.l_set, r.b_set | r.c_set):
        return "L is not complete to B and C in g2"
    if not g2.is_complete_between({r.marker_a}, r.b_set):
        return "g2 marker is not complete to B"
    if not g2.is_anti_complete_between({r.marker_a}, r.c_set | r.l_set | r.t_set):
        return "g2 marker is not anti-complete to C, L and T"
    return None


def factor(g: Graph, d: SplitGraphDivide) -> ComposablePair:
    """Split g along a valid divide into its composable pair.

    g1 keeps A, L, T and gains a marker standing in for the contracted C
    side; g2 keeps B, C, L, T and gains a marker standing in for the
    contracted A side.  Both factors are strictly smaller than g.  Marker
    ids are fresh (max id + 1 and + 2) and recorded in the roles.

    Note that g1 is an induced subgraph of g up to the marker, while g2
    need not be: factoring deletes the A-L edges before contracting A.
    """
    if not validate_divide(g, d):
        raise DivideInvalid("factor called with an invalid divide")
    top = max(g.vertices)
    marker_c, marker_a = top + 1, top + 2
    g1_verts = list(d.a | d.l | d.t) + [marker_c]
    g1_edges = [e for e in g.induced(d.a | d.l | d.t).edges()]
    g1_edges += [(marker_c, v) for v in d.l]
    g1 = Graph(g1_verts, g1_edges)
    g2_verts = list(d.b | d.c | d.l | d.t) + [marker_a]
    g2_edges = [e for e in g.induced(d.b | d.c | d.l | d.t).edges()]
    g2_edges += [(marker_a, v) for v in d.b]
    g2 = Graph(g2_verts, g2_edges)
    pair = ComposablePair(
        g1=g1,
        g2=g2,
        roles=PairRoles(
            a_set=d.a, b_set=d.b, c_set=d.c, l_set=d.l, t_set=d.t,
            marker_a=marker_a, marker_c=marker_c,
        ),
    )
    bullet = _pair_violation(pair)
    if bullet is not None:
        raise DivideInvalid(f"factored pair is not composable: {bullet}")
    return pair


def unify(p: ComposablePair) -> Graph:
    """Glue a composable pair along its common split subgraph.

    The result keeps g1 minus its marker and g2 minus its marker, and joins
    A completely to B and not at all to C.  Raises InvalidPair with the
    first violated pair condition.
    """
    bullet = _pair_violation(p)
    if bullet is not None:
        raise InvalidPair(bullet)
    r = p.roles
    verts = r.a_set | r.b_set | r.c_set | r.l_set | r.t_set
    edges = [e for e in p.g1.edges() if r.marker_c not in e]
    edges += [e for e in p.g2.edges() if r.marker_a not in e]
    edges += [(u, v) for u in r.a_set for v in r.b_set]
    # L-T edges appear in both factors; Graph absorbs the duplicates.
    return Graph(verts, edges)
