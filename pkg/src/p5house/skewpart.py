"""Skew-partitions and their six-tuple decompositions.

A skew-partition of G is a pair (X, Y) covering the vertex set with G[X]
disconnected and G[Y] not anti-connected.  For prime, non-split members of
the class, a decorated H6 (found in the graph or its complement) yields such
a partition constructively; maximizing it and classifying the resulting
six-tuple produces the witness the divide construction consumes.

Every constructed partition is definitionally re-validated before being
returned: the constructions here mirror proofs line by line, which makes
them the likeliest place for bugs to hide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, MixedStatus, VertexSet, WitnessMode, find_mixed_witness, split_certificate
from .oracle import H6Hit, validate_h6_hit

__all__ = [
    "SkewPartition",
    "SkewDecomposition",
    "AttachmentClasses",
    "UsableCase",
    "CaseTag",
    "Side",
    "UnclassifiableVertex",
    "ConstructionFailed",
    "NeitherCaseHolds",
    "attachment_classes",
    "skew_from_special_h6",
    "maximize_skew",
    "decompose_skew",
    "classify_usable",
    "lemma_violations",
]


class UnclassifiableVertex(Exception):
    """A vertex attaches to the probe path with a signature the class forbids."""

    def __init__(self, vertex: int, signature: tuple[int, int, int, int]):
        self.vertex = vertex
        self.signature = signature
        super().__init__(f"vertex {vertex} has forbidden attachment signature {signature}")


class ConstructionFailed(Exception):
    """A structure the construction relies on is absent from the input."""


class NeitherCaseHolds(Exception):
    """The decomposition satisfies neither the component-side nor the
    anti-component-side condition set."""


class Side(enum.Enum):
    IN_G = "in-graph"
    IN_COMPLEMENT = "in-complement"


class CaseTag(enum.Enum):
    CASE3 = "components-side"
    CASE4 = "anti-components-side"


@dataclass(frozen=True)
class SkewPartition:
    x: VertexSet
    y: VertexSet

    def validate(self, g: Graph) -> None:
        if not self.x or not self.y:
            raise ValueError("skew-partition sides must be nonempty")
        if self.x & self.y or self.x | self.y != g.vertex_set:
            raise ValueError("skew-partition must partition the vertex set")
        if g.connected_on(self.x):
            raise ValueError("X side must induce a disconnected subgraph")
        if g.anti_connected_on(self.y):
            raise ValueError("Y side must induce a non-anti-connected subgraph")


@dataclass(frozen=True)
class SkewDecomposition:
    """The six-tuple attached to a skew-partition.

    x_parts / y_parts are the vertex sets of the non-trivial components of
    G[X] and non-trivial anti-components of G[Y]; s and k collect the
    leftover trivial ones (a stable set and a clique); s_mixed[j] holds the
    s-vertices mixed on y_parts[j], k_mixed[i] the k-vertices mixed on
    x_parts[i].
    """

    x_parts: tuple[VertexSet, ...]
    y_parts: tuple[VertexSet, ...]
    s: VertexSet
    k: VertexSet
    s_mixed: tuple[VertexSet, ...]
    k_mixed: tuple[VertexSet, ...]

    @property
    def x(self) -> VertexSet:
        return frozenset().union(*self.x_parts, self.s)

    @property
    def y(self) -> VertexSet:
        return frozenset().union(*self.y_parts, self.k)


@dataclass(frozen=True)
class AttachmentClasses:
    """How vertices outside an induced three-edge path a-b-c-d attach to it.

    clone_x holds the clones of path vertex x; a_set is anti-complete to the
    path, b_set complete to {b, c} and anti-complete to {a, d}, c_set
    complete to all four.  Together with the path these cover the graph.
    """

    path: tuple[int, int, int, int]
    clone_a: VertexSet
    clone_b: VertexSet
    clone_c: VertexSet
    clone_d: VertexSet
    a_set: VertexSet
    b_set: VertexSet
    c_set: VertexSet


@dataclass(frozen=True)
class UsableCase:
    tag: CaseTag
    decomposition: SkewDecomposition
    special_index: int


# Signature of a vertex against (a, b, c, d) -> its class.  The five
# signatures missing from this table cannot occur in a class member.
_SIGNATURES = {
    (0, 0, 0, 0): "a_set",
    (0, 1, 0, 0): "clone_a",
    (1, 1, 0, 0): "clone_a",
    (1, 0, 1, 0): "clone_b",
    (1, 1, 1, 0): "clone_b",
    (0, 1, 0, 1): "clone_c",
    (0, 1, 1, 1): "clone_c",
    (0, 0, 1, 0): "clone_d",
    (0, 0, 1, 1): "clone_d",
    (0, 1, 1, 0): "b_set",
    (1, 1, 1, 1): "c_set",
}


def attachment_classes(g: Graph, a: int, b: int, c: int, d: int) -> AttachmentClasses:
    """Partition the rest of the graph by attachment to the induced path
    a-b-c-d.  Raises UnclassifiableVertex when a vertex carries one of the
    signatures that cannot occur in a class member; callers use that as a
    cheap membership refutation."""
    path = (a, b, c, d)
    if len(set(path)) != 4:
        raise ValueError("path vertices must be distinct")
    want = {(a, b): True, (b, c): True, (c, d): True, (a, c): False, (a, d): False, (b, d): False}
    for (u, v), adj in want.items():
        if g.has_edge(u, v) != adj:
            raise ValueError(f"{a}-{b}-{c}-{d} is not an induced three-edge path")
    buckets: dict[str, set[int]] = {name: set() for name in
                                    ("clone_a", "clone_b", "clone_c", "clone_d",
                                     "a_set", "b_set", "c_set")}
    for v in g.vertices:
        if v in path:
            continue
        sig = tuple(int(g.has_edge(v, p)) for p in path)
        name = _SIGNATURES.get(sig)
        if name is None:
            raise UnclassifiableVertex(v, sig)
        buckets[name].add(v)
    return AttachmentClasses(path=path, **{k: frozenset(vs) for k, vs in buckets.items()})


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise ConstructionFailed(what)


def _construct_on(work: Graph, hit: H6Hit) -> SkewPartition:
    """Core construction: ``hit`` lives in complement(work); build a
    skew-partition (X, Y) of ``work`` whose X side has at least two
    non-trivial components."""
    host = work.complement()
    _require(validate_h6_hit(host, hit), "stale or invalid decorated H6 hit")
    e = hit.embedding
    # Translate the decorated H6 of the complement into the probe structure
    # inside the working graph: an induced path a-b-c-d, a pair of clones
    # b', c' of its middle vertices, a simplicial, and b, c anti-simplicial.
    a, b, c, d = e[1], e[3], e[0], e[2]
    bp, cp = e[5], e[4]
    _require(work.is_simplicial(a), "path start is not simplicial")
    _require(work.is_anti_simplicial(b) and work.is_anti_simplicial(c),
             "path middle is not anti-simplicial")
    _require(not work.has_edge(bp, cp), "clone pair is adjacent")
    try:
        ac = attachment_classes(work, a, b, c, d)
    except (ValueError, UnclassifiableVertex) as exc:
        raise ConstructionFailed(f"attachment analysis failed: {exc}") from exc
    _require(bp in ac.clone_b and cp in ac.clone_c, "clone pair not in its classes")
    _require(work.is_clique(ac.c_set | ac.clone_b | {b}),
             "neighborhood of the simplicial path start is not a clique")
    _require(work.is_stable(ac.a_set | ac.clone_a | ac.clone_d | {a, d}),
             "path-end side is not a stable set")
    # b1: the b-clone with fewest neighbors among the c-clones (ties: least
    # id); N: those neighbors, necessarily complete to the other b-clones.
    b1 = min(ac.clone_b, key=lambda v: (len(work.neighbors(v) & ac.clone_c), v))
    n_set = work.neighbors(b1) & ac.clone_c
    _require(work.is_complete_between(n_set, ac.clone_b - {b1}),
             "minimal clone neighborhood is not complete to the clone class")
    y = ac.c_set | n_set | (ac.clone_b - {b1}) | {b, c}
    x = work.vertex_set - y
    _require(x == ac.a_set | ac.b_set | ac.clone_a | ac.clone_d
             | (ac.clone_c - n_set) | {a, d, b1},
             "partition does not match its intended composition")
    _require(bool(ac.clone_c - n_set), "no clone of c escapes the minimal neighborhood")
    sp = SkewPartition(x=x, y=y)
    try:
        sp.validate(work)
    except ValueError as exc:
        raise ConstructionFailed(f"constructed partition invalid: {exc}") from exc
    nontrivial = [m for m in work._components_masks(work._mask_of(x)) if m.bit_count() >= 2]
    _require(len(nontrivial) >= 2, "X side lacks two non-trivial components")
    return sp


def skew_from_special_h6(g: Graph, hit: H6Hit, side: Side) -> SkewPartition:
    """Build a skew-partition of g from a decorated H6 hit.

    side=IN_COMPLEMENT: the hit lives in complement(g); the construction
    runs directly on g and the returned partition has at least two
    non-trivial components on its X side.

    side=IN_G: the hit lives in g itself; the same construction runs on
    complement(g) (the graph whose complement holds the hit) and the sides
    are swapped on the way back, so the returned partition of g has at
    least two non-trivial anti-components on its Y side.

    The graph must be prime and not split; splitness is rejected here,
    primality is the caller's obligation.
    """
    if split_certificate(g) is not None:
        raise ValueError("split graphs admit no such skew-partition")
    if side is Side.IN_COMPLEMENT:
        return _construct_on(g, hit)
    inner = _construct_on(g.complement(), hit)
    sp = SkewPartition(x=inner.y, y=inner.x)
    sp.validate(g)
    return sp


def maximize_skew(g: Graph, sp: SkewPartition) -> SkewPartition:
    """Grow the X side greedily until no single vertex can move over.

    Candidates are scanned in ascending id; a vertex moves from Y to X iff
    the result is still a skew-partition whose X side keeps at least two
    non-trivial components.  The scan restarts after each accepted move.
    """
    sp.validate(g)
    x_mask = g._mask_of(sp.x)
    if sum(1 for m in g._components_masks(x_mask) if m.bit_count() >= 2) < 2:
        raise ValueError("X side must already have two non-trivial components")
    y_mask = g._mask_of(sp.y)
    moved = True
    while moved:
        moved = False
        cand = y_mask
        while cand:
            b = cand & -cand
            cand ^= b
            ny = y_mask & ~b
            if ny == 0 or len(g._anti_components_masks(ny)) == 1:
                continue
            nx = x_mask | b
            if sum(1 for m in g._components_masks(nx) if m.bit_count() >= 2) < 2:
                continue
            x_mask, y_mask = nx, ny
            moved = True
            break
    out = SkewPartition(x=g._set_of(x_mask), y=g._set_of(y_mask))
    out.validate(g)
    return out


def decompose_skew(g: Graph, sp: SkewPartition) -> SkewDecomposition:
    """Compute the six-tuple of a skew-partition, literally by definition."""
    sp.validate(g)
    x_masks = g._components_masks(g._mask_of(sp.x))
    y_masks = g._anti_components_masks(g._mask_of(sp.y))
    x_parts = tuple(g._set_of(m) for m in x_masks if m.bit_count() >= 2)
    y_parts = tuple(g._set_of(m) for m in y_masks if m.bit_count() >= 2)
    s = sp.x - frozenset().union(frozenset(), *x_parts)
    k = sp.y - frozenset().union(frozenset(), *y_parts)
    if not g.is_stable(s):
        raise RuntimeError("trivial-component leftovers are not a stable set")
    if not g.is_clique(k):
        raise RuntimeError("trivial-anti-component leftovers are not a clique")
    s_mixed = tuple(frozenset(v for v in s if g.is_mixed(v, yj)) for yj in y_parts)
    k_mixed = tuple(frozenset(v for v in k if g.is_mixed(v, xi)) for xi in x_parts)
    return SkewDecomposition(
        x_parts=x_parts, y_parts=y_parts, s=s, k=k, s_mixed=s_mixed, k_mixed=k_mixed
    )


def _case3_conditions(g: Graph, d: SkewDecomposition) -> int | None:
    """Check the component-side condition set; return the least index whose
    mixed-clique is complete to the other components, or None."""
    m = len(d.x_parts)
    if m < 1:
        return None
    seen: set[int] = set()
    for ki in d.k_mixed:
        if not ki or seen & ki:
            return None
        seen |= ki
    x, y = d.x, d.y
    for xi, ki in zip(d.x_parts, d.k_mixed):
        for v in y - ki:
            if g.is_mixed(v, xi):
                return None
    for xi in d.x_parts:
        others = (g.vertex_set - xi) - d.s
        anti = sum(1 for v in others if g.mixed_status(v, xi) is MixedStatus.ANTI_COMPLETE)
        if anti < 2:
            return None
    for i, xi in enumerate(d.x_parts):
        rest = (x - xi) - d.s
        if g.is_complete_between(d.k_mixed[i], rest):
            return i
    return None


def _case4_conditions(g: Graph, d: SkewDecomposition) -> int | None:
    """Dual of the component-side check, on the anti-component side."""
    n = len(d.y_parts)
    if n < 1:
        return None
    seen: set[int] = set()
    for sj in d.s_mixed:
        if not sj or seen & sj:
            return None
        seen |= sj
    x, y = d.x, d.y
    for yj, sj in zip(d.y_parts, d.s_mixed):
        for v in x - sj:
            if g.is_mixed(v, yj):
                return None
    for yj in d.y_parts:
        others = (g.vertex_set - yj) - d.k
        comp = sum(1 for v in others if g.mixed_status(v, yj) is MixedStatus.COMPLETE)
        if comp < 2:
            return None
    for j, yj in enumerate(d.y_parts):
        rest = (y - yj) - d.k
        if g.is_anti_complete_between(d.s_mixed[j], rest):
            return j
    return None


def classify_usable(g: Graph, d: SkewDecomposition) -> UsableCase:
    """Decide which condition set the six-tuple satisfies.

    The component-side case wins ties; special_index is the least part
    index realizing the completeness (resp. anti-completeness) condition.
    Raises NeitherCaseHolds when neither set of five conditions checks out.
    """
    i = _case3_conditions(g, d)
    if i is not None:
        return UsableCase(tag=CaseTag.CASE3, decomposition=d, special_index=i)
    j = _case4_conditions(g, d)
    if j is not None:
        return UsableCase(tag=CaseTag.CASE4, decomposition=d, special_index=j)
    raise NeitherCaseHolds(
        f"decomposition with {len(d.x_parts)} components / {len(d.y_parts)} "
        "anti-components satisfies neither condition set"
    )


# -- lemma suite -------------------------------------------------------------


def usable_satisfies_a(g: Graph, d: SkewDecomposition) -> bool:
    """Usability, component flavor: two non-trivial components, disjoint
    mixed families, and every Y-vertex has a neighbor in every component."""
    if len(d.x_parts) < 2:
        return False
    if not _families_disjoint(d):
        return False
    return all(
        any(g.has_edge(v, u) for u in xi) for v in d.y for xi in d.x_parts
    )


def usable_satisfies_b(g: Graph, d: SkewDecomposition) -> bool:
    if len(d.y_parts) < 2:
        return False
    if not _families_disjoint(d):
        return False
    return all(
        any(not g.has_edge(v, u) for u in yj) for v in d.x for yj in d.y_parts
    )


def _families_disjoint(d: SkewDecomposition) -> bool:
    seen: set[int] = set()
    for sj in d.s_mixed:
        if seen & sj:
            return False
        seen |= sj
    seen = set()
    for ki in d.k_mixed:
        if seen & ki:
            return False
        seen |= ki
    return True


def lemma_violations(g: Graph, d: SkewDecomposition) -> list[str]:
    """Check every applicable skew-partition lemma against a six-tuple that
    arose from a prime class member; returns human-readable violations.

    Covered: single-part mixing (no vertex of one side is mixed on more than
    one non-trivial part of the other), mixed-witness existence and its
    adjacency contract, the dichotomy lemmas on (component, anti-component)
    pairs bridged by an outside vertex, cross-side non-mixing for usable
    partitions, and the non-empty/anti-complete structure of the mixed
    families when the partition is usable.
    """
    out: list[str] = []
    x, y = d.x, d.y

    # No vertex mixed on two parts of the opposite side.
    for v in x:
        hits = [j for j, yj in enumerate(d.y_parts) if g.is_mixed(v, yj)]
        if len(hits) > 1:
            out.append(f"vertex {v} of X mixed on anti-components {hits}")
    for v in y:
        hits = [i for i, xi in enumerate(d.x_parts) if g.is_mixed(v, xi)]
        if len(hits) > 1:
            out.append(f"vertex {v} of Y mixed on components {hits}")

    # Mixed witnesses exist and satisfy their contracts.
    for xi in d.x_parts:
        for v in g.vertices:
            if v in xi or not g.is_mixed(v, xi):
                continue
            x1, x2 = find_mixed_witness(g, v, xi, WitnessMode.CONNECTED_EDGE)
            if not (g.has_edge(v, x1) and not g.has_edge(v, x2) and g.has_edge(x1, x2)):
                out.append(f"bad connected-edge witness ({x1}, {x2}) for {v}")
    for yj in d.y_parts:
        for v in g.vertices:
            if v in yj or not g.is_mixed(v, yj):
                continue
            y1, y2 = find_mixed_witness(g, v, yj, WitnessMode.ANTI_CONNECTED_NON_EDGE)
            if not (g.has_edge(v, y1) and not g.has_edge(v, y2) and not g.has_edge(y1, y2)):
                out.append(f"bad anti-connected witness ({y1}, {y2}) for {v}")

    # Dichotomy lemmas on bridged (component, anti-component) pairs.
    for xi in d.x_parts:
        for yj in d.y_parts:
            bridge = [
                v
                for v in g.vertices
                if v not in xi and v not in yj
                and g.mixed_status(v, yj) is MixedStatus.COMPLETE
                and g.mixed_status(v, xi) is MixedStatus.ANTI_COMPLETE
            ]
            if not bridge:
                continue
            out.extend(_dichotomy_violations(g, xi, yj))

    a_ok = usable_satisfies_a(g, d)
    b_ok = usable_satisfies_b(g, d)
    if a_ok:
        for u in frozenset().union(frozenset(), *d.x_parts):
            for j, yj in enumerate(d.y_parts):
                if g.is_mixed(u, yj):
                    out.append(f"component vertex {u} mixed on anti-component {j}")
        if d.y_parts:
            if not all(d.s_mixed):
                out.append("usable component-side partition with an empty mixed family")
            if not any(
                g.is_anti_complete_between(sj, (y - yj) - d.k)
                for sj, yj in zip(d.s_mixed, d.y_parts)
            ):
                out.append("no mixed family is anti-complete to the other anti-components")
    if b_ok:
        for u in frozenset().union(frozenset(), *d.y_parts):
            for i, xi in enumerate(d.x_parts):
                if g.is_mixed(u, xi):
                    out.append(f"anti-component vertex {u} mixed on component {i}")
        if d.x_parts:
            if not all(d.k_mixed):
                out.append("usable anti-component-side partition with an empty mixed family")
            if not any(
                g.is_complete_between(ki, (x - xi) - d.s)
                for ki, xi in zip(d.k_mixed, d.x_parts)
            ):
                out.append("no mixed family is complete to the other components")
    return out


def _dichotomy_violations(g: Graph, xs: VertexSet, ys: VertexSet) -> list[str]:
    """The two dichotomy lemmas for a connected X, anti-connected Y, and some
    outside vertex complete to Y and anti-complete to X."""
    out: list[str] = []
    for yv in ys:
        for yv2 in ys:
            if yv >= yv2 or g.has_edge(yv, yv2):
                continue
            if any(g.has_edge(u, yv) and not g.has_edge(u, yv2) for u in xs):
                if not g.is_complete_between({yv}, xs):
                    out.append(f"split vertex {yv} not complete to the component")
                if not g.is_anti_complete_between({yv2}, xs):
                    out.append(f"split vertex {yv2} not anti-complete to the component")
            if any(g.has_edge(u, yv2) and not g.has_edge(u, yv) for u in xs):
                if not g.is_complete_between({yv2}, xs):
                    out.append(f"split vertex {yv2} not complete to the component")
                if not g.is_anti_complete_between({yv}, xs):
                    out.append(f"split vertex {yv} not anti-complete to the component")
    for xv in xs:
        if g.is_mixed(xv, ys):
            hit = ys & g.neighbors(xv)
            miss = ys - hit
            if not g.is_complete_between(xs - {xv}, hit) or not g.is_anti_complete_between(
                xs - {xv}, miss
            ):
                out.append(f"component does not follow the split of its mixed vertex {xv}")
    for yv in ys:
        if g.is_mixed(yv, xs):
            hit = xs & g.neighbors(yv)
            miss = xs - hit
            if not g.is_complete_between(ys - {yv}, hit) or not g.is_anti_complete_between(
                ys - {yv}, miss
            ):
                out.append(f"anti-component does not follow the split of its mixed vertex {yv}")
    return out
