"""Recursive structure trees for class members.

decompose() rewrites a graph with no induced P5 and no induced house into a
tree whose leaves are split graphs and pentagons and whose internal nodes
are substitutions, split graph unifications, or split graph unifications in
the complement.  recompose() inverts it label-exactly; verify_tree() checks
every obligation a tree carries.

Branch order: split leaf, pentagon leaf, substitution, unification.  The
last branch only ever fires on prime, non-split, pentagon-free graphs, where
a decorated H6 is guaranteed to exist in the graph or its complement; its
absence (or any downstream construction failure) is a loud internal error,
never a silent fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graph import Graph, SplitCert, split_certificate
from .modular import find_proper_homogeneous_set, is_homogeneous, quotient_factor, substitute
from .oracle import PatternHit, PatternKind, find_induced, find_special_h6
from .skewpart import (
    CaseTag,
    ConstructionFailed,
    NeitherCaseHolds,
    SkewPartition,
    Side,
    classify_usable,
    decompose_skew,
    lemma_violations,
    maximize_skew,
    skew_from_special_h6,
    usable_satisfies_a,
)
from .divide import ComposablePair, InvalidPair, PairRoles, build_divide, factor, unify

__all__ = [
    "DecompTree",
    "SplitLeaf",
    "PentagonLeaf",
    "Subst",
    "Sgu",
    "CoSgu",
    "NotClassMember",
    "InternalStructureError",
    "MalformedTree",
    "TreeReport",
    "decompose",
    "recompose",
    "verify_tree",
    "tree_stats",
]


class NotClassMember(Exception):
    """The input contains a forbidden induced pattern; carries the witness."""

    def __init__(self, hit: PatternHit):
        self.hit = hit
        super().__init__(
            f"not a class member: induced {hit.kind.value} at {hit.embedding}"
        )


class InternalStructureError(Exception):
    """A structure guaranteed for verified class members failed to appear.

    This cannot happen on correct inputs; it is surfaced loudly because it
    would mean either a corrupted input slipped past the oracle or a bug in
    a construction."""


class MalformedTree(Exception):
    def __init__(self, path: str, reason: str):
        self.path = path
        super().__init__(f"malformed tree at {path}: {reason}")


@dataclass(frozen=True)
class SplitLeaf:
    graph: Graph
    cert: SplitCert


@dataclass(frozen=True)
class PentagonLeaf:
    graph: Graph
    cycle: tuple[int, int, int, int, int]


@dataclass(frozen=True)
class Subst:
    quotient: "DecompTree"
    child: "DecompTree"
    marker: int


@dataclass(frozen=True)
class Sgu:
    part1: "DecompTree"
    part2: "DecompTree"
    roles: PairRoles


@dataclass(frozen=True)
class CoSgu:
    """Split graph unification carried out in the complement: the node's
    graph is the complement of the unification of its parts."""

    part1: "DecompTree"
    part2: "DecompTree"
    roles: PairRoles


DecompTree = Union[SplitLeaf, PentagonLeaf, Subst, Sgu, CoSgu]


def _refutation(g: Graph, triple: bool) -> PatternHit | None:
    for kind in (PatternKind.P5, PatternKind.HOUSE) + (
        (PatternKind.C5,) if triple else ()
    ):
        hit = find_induced(g, kind)
        if hit is not None:
            return hit
    return None


def _pentagon_cycle(g: Graph) -> tuple[int, ...] | None:
    """Cyclic order when g is a pentagon (5 vertices, connected, 2-regular),
    starting at the least id and moving toward its smaller neighbor."""
    if g.n != 5 or any(g.degree(v) != 2 for v in g.vertices) or not g.is_connected():
        return None
    start = g.vertices[0]
    order = [start]
    prev = None
    cur = start
    for _ in range(4):
        nxt = min(v for v in g.neighbors(cur) if v != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def _notify(observer, method: str, *args) -> None:
    if observer is not None:
        fn = getattr(observer, method, None)
        if fn is not None:
            fn(*args)


def _run_pipeline(work: Graph, hit, observer) -> tuple[bool, ComposablePair]:
    """Run the skew-partition pipeline on ``work`` (whose complement holds
    the decorated hit).  Returns (flipped, pair) where ``flipped`` records a
    final swap back to the complement of ``work``, or raises
    ConstructionFailed for the caller to try the other side."""
    sp = skew_from_special_h6(work, hit, side=Side.IN_COMPLEMENT)
    sp = maximize_skew(work, sp)
    d = decompose_skew(work, sp)
    if not usable_satisfies_a(work, d):
        raise InternalStructureError("maximized skew-partition of a prime member is not usable")
    try:
        case = classify_usable(work, d)
    except NeitherCaseHolds as exc:
        raise InternalStructureError(str(exc)) from exc
    bad = lemma_violations(work, d)
    if bad:
        raise InternalStructureError("; ".join(bad))
    _notify(observer, "on_skew_decomposition", work, sp, d, case)
    flipped = False
    if case.tag is CaseTag.CASE4:
        # The anti-component-side witness of a graph is the component-side
        # witness of its complement under the swapped partition.
        work = work.complement()
        sp = SkewPartition(x=sp.y, y=sp.x)
        d = decompose_skew(work, sp)
        try:
            case = classify_usable(work, d)
        except NeitherCaseHolds as exc:
            raise InternalStructureError(
                f"swapped witness lost its component-side conditions: {exc}"
            ) from exc
        if case.tag is not CaseTag.CASE3:
            raise InternalStructureError("swapped witness classified wrong side")
        bad = lemma_violations(work, d)
        if bad:
            raise InternalStructureError("; ".join(bad))
        _notify(observer, "on_skew_decomposition", work, sp, d, case)
        flipped = True
    divide = build_divide(work, case)
    pair = factor(work, divide)
    _notify(observer, "on_factor", work, divide, pair)
    return flipped, pair


def _unification_step(g: Graph, observer) -> tuple[bool, ComposablePair]:
    """Find the composable pair of a prime, non-split, pentagon-free member.

    Tries the decorated H6 of g first (pipeline in the complement), then the
    one of the complement (pipeline in g), returning (co, pair) where ``co``
    says the pair factors the complement of g."""
    attempts = []
    hit = find_special_h6(g)
    if hit is not None:
        attempts.append((True, g.complement(), hit))
    co_hit = find_special_h6(g.complement())
    if co_hit is not None:
        attempts.append((False, g, co_hit))
    if not attempts:
        raise InternalStructureError(
            "no decorated H6 in a prime non-split member or its complement"
        )
    failure: Exception | None = None
    for work_is_complement, work, work_hit in attempts:
        try:
            flipped, pair = _run_pipeline(work, work_hit, observer)
        except ConstructionFailed as exc:
            failure = exc
            continue
        co = work_is_complement != flipped
        return co, pair
    raise InternalStructureError(f"both construction sides failed: {failure}")


def _assert_factors_free(pair: ComposablePair) -> None:
    for part in (pair.g1, pair.g2):
        for kind in (PatternKind.P5, PatternKind.HOUSE, PatternKind.C5):
            hit = find_induced(part, kind)
            if hit is not None:
                raise InternalStructureError(
                    f"factor of a member contains an induced {kind.value} "
                    f"at {hit.embedding}"
                )


def _expand(g: Graph, observer):
    """One decomposition step: either a finished leaf or an internal node
    descriptor with the child graphs still to process."""
    cert = split_certificate(g)
    if cert is not None:
        return SplitLeaf(graph=g, cert=cert), ()
    cycle = _pentagon_cycle(g)
    if cycle is not None:
        return PentagonLeaf(graph=g, cycle=cycle), ()
    hs = find_proper_homogeneous_set(g)
    if hs is not None:
        child, quotient, marker = quotient_factor(g, hs)
        return ("subst", marker), (quotient, child)
    co, pair = _unification_step(g, observer)
    _assert_factors_free(pair)
    kind = "cosgu" if co else "sgu"
    return (kind, pair.roles), (pair.g1, pair.g2)


def decompose(g: Graph, triple: bool = False, observer=None) -> DecompTree:
    """Decompose a class member into a structure tree.

    Membership is checked up front (NotClassMember carries the refuting
    pattern); with ``triple`` the pentagon is also forbidden, which makes
    pentagon leaves impossible.  The optional observer receives
    on_skew_decomposition(work, sp, d, case) and on_factor(work, divide,
    pair) callbacks as the pipeline runs.

    The recursion is driven by an explicit work stack, so deep trees stay
    clear of interpreter recursion limits.
    """
    hit = _refutation(g, triple)
    if hit is not None:
        raise NotClassMember(hit)
    work: list[tuple] = [("expand", g)]
    done: list[DecompTree] = []
    while work:
        task = work.pop()
        if task[0] == "expand":
            node, child_graphs = _expand(task[1], observer)
            if not child_graphs:
                done.append(node)
            else:
                for cg in child_graphs:
                    if cg.n >= task[1].n:
                        raise InternalStructureError("child graph failed to shrink")
                work.append(("assemble", node, len(child_graphs)))
                for cg in reversed(child_graphs):
                    work.append(("expand", cg))
        else:
            _, descriptor, n_children = task
            children = done[-n_children:]
            del done[-n_children:]
            kind, payload = descriptor
            if kind == "subst":
                done.append(Subst(quotient=children[0], child=children[1], marker=payload))
            elif kind == "sgu":
                done.append(Sgu(part1=children[0], part2=children[1], roles=payload))
            else:
                done.append(CoSgu(part1=children[0], part2=children[1], roles=payload))
    (root,) = done
    return root


def recompose(t: DecompTree, _path: str = "root") -> Graph:
    """Rebuild the graph a tree stands for, label-exactly.

    Leaves are taken as-is (their certificates are verify_tree's business);
    internal nodes apply substitution, unification, or complemented
    unification.  Structural problems raise MalformedTree with the node
    path."""
    if isinstance(t, (SplitLeaf, PentagonLeaf)):
        return t.graph
    if isinstance(t, Subst):
        quotient = recompose(t.quotient, _path + ".quotient")
        child = recompose(t.child, _path + ".child")
        if t.marker not in quotient:
            raise MalformedTree(_path, f"marker {t.marker} missing from quotient")
        try:
            return substitute(child, quotient, t.marker)
        except ValueError as exc:
            raise MalformedTree(_path, str(exc)) from exc
    if isinstance(t, (Sgu, CoSgu)):
        g1 = recompose(t.part1, _path + ".part1")
        g2 = recompose(t.part2, _path + ".part2")
        pair = ComposablePair(g1=g1, g2=g2, roles=t.roles)
        try:
            glued = unify(pair)
        except Exception as exc:
            raise MalformedTree(_path, str(exc)) from exc
        return glued.complement() if isinstance(t, CoSgu) else glued
    raise MalformedTree(_path, f"unknown node type {type(t).__name__}")


@dataclass
class TreeReport:
    ok: bool
    failures: list[tuple[str, str]]
    depth: int
    leaf_counts: dict[str, int]


def tree_stats(t: DecompTree) -> tuple[int, dict[str, int]]:
    """(depth, leaf counts by kind); a lone leaf has depth 0."""
    counts = {"split": 0, "pentagon": 0}
    def walk(node, depth) -> int:
        if isinstance(node, SplitLeaf):
            counts["split"] += 1
            return depth
        if isinstance(node, PentagonLeaf):
            counts["pentagon"] += 1
            return depth
        if isinstance(node, Subst):
            kids = (node.quotient, node.child)
        else:
            kids = (node.part1, node.part2)
        return max(walk(k, depth + 1) for k in kids)
    return walk(t, 0), counts


def verify_tree(t: DecompTree, g: Graph) -> TreeReport:
    """Re-check every obligation of a tree against its claimed graph.

    Verifies the recomposition equals g label-exactly, every split leaf's
    certificate, every pentagon leaf's cyclic order, every substitution
    node's proper homogeneous set, every unification node's pair conditions,
    and strict shrinking at internal nodes.  Failures are report entries
    (path, message); nothing raises.
    """
    failures: list[tuple[str, str]] = []

    def check(node, path: str) -> Graph | None:
        if isinstance(node, SplitLeaf):
            gr, cert = node.graph, node.cert
            if cert.clique | cert.stable != gr.vertex_set or cert.clique & cert.stable:
                failures.append((path, "certificate does not partition the leaf"))
            elif not gr.is_clique(cert.clique) or not gr.is_stable(cert.stable):
                failures.append((path, "certificate sides are not clique/stable"))
            return gr
        if isinstance(node, PentagonLeaf):
            gr = node.graph
            cyc = node.cycle
            ok = (
                gr.n == 5
                and set(cyc) == set(gr.vertex_set)
                and len(cyc) == 5
                and all(gr.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))
                and gr.edge_count == 5
            )
            if not ok:
                failures.append((path, "leaf is not the claimed pentagon"))
            return gr
        if isinstance(node, Subst):
            gq = check(node.quotient, path + ".quotient")
            gc = check(node.child, path + ".child")
            if gq is None or gc is None:
                return None
            try:
                composed = substitute(gc, gq, node.marker)
            except ValueError as exc:
                failures.append((path, f"substitution impossible: {exc}"))
                return None
            if not 2 <= gc.n <= composed.n - 1:
                failures.append((path, "substituted set is not proper"))
            elif not is_homogeneous(composed, gc.vertex_set):
                failures.append((path, "substituted set is not homogeneous"))
            if gq.n >= composed.n or gc.n >= composed.n:
                failures.append((path, "children fail to shrink"))
            return composed
        if isinstance(node, (Sgu, CoSgu)):
            g1 = check(node.part1, path + ".part1")
            g2 = check(node.part2, path + ".part2")
            if g1 is None or g2 is None:
                return None
            pair = ComposablePair(g1=g1, g2=g2, roles=node.roles)
            try:
                glued = unify(pair)
            except InvalidPair as exc:
                failures.append((path, str(exc)))
                return None
            composed = glued.complement() if isinstance(node, CoSgu) else glued
            if g1.n >= composed.n or g2.n >= composed.n:
                failures.append((path, "children fail to shrink"))
            return composed
        failures.append((path, f"unknown node type {type(node).__name__}"))
        return None

    rebuilt = check(t, "root")
    if rebuilt is not None and rebuilt != g:
        failures.append(("root", "recomposition does not match the input graph"))
    depth, leaf_counts = tree_stats(t)
    return TreeReport(ok=not failures, failures=failures, depth=depth, leaf_counts=leaf_counts)
