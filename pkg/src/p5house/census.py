"""Exhaustive sweeps over all labeled graphs on few vertices.

The sweep is the equivalence check between the grammar and the oracle:
every member must decompose, verify, and recompose label-exactly, and every
non-member must be rejected with a witness.  Membership of (n+1)-vertex
extensions is decided incrementally (a new forbidden pattern must pass
through the new vertex), which keeps seven-vertex sweeps affordable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from .graph import Graph, split_certificate
from .oracle import PatternKind, contains_induced_using, find_induced, is_class_member
from .modular import find_proper_homogeneous_set
from .decomposer import NotClassMember, decompose, recompose, verify_tree

__all__ = ["SweepRow", "SweepResult", "pair_table", "labeled_graphs", "graph_from_pair_mask", "run_sweep", "member_masks"]


def pair_table(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 column order; bit k of an edge mask is pair k."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_pair_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    pairs = pairs if pairs is not None else pair_table(n)
    edges = []
    while mask:
        b = mask & -mask
        mask ^= b
        edges.append(pairs[b.bit_length() - 1])
    return Graph(range(n), edges)


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs on vertices 0..n-1."""
    pairs = pair_table(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_pair_mask(n, mask, pairs)


@dataclass
class SweepRow:
    n: int
    total: int = 0
    members: int = 0
    split_members: int = 0
    prime_members: int = 0
    pentagon_members: int = 0
    mismatches: list[str] = field(default_factory=list)


@dataclass
class SweepResult:
    rows: list[SweepRow]

    @property
    def mismatch_count(self) -> int:
        return sum(len(r.mismatches) for r in self.rows)


def run_sweep(
    max_n: int,
    triple: bool = False,
    observer=None,
    on_member: Callable[[Graph, object], None] | None = None,
) -> SweepResult:
    """Check grammar/oracle equivalence over all labeled graphs up to max_n.

    Per graph: the oracle decides membership; members must decompose (with
    the given observer), pass verify_tree, and recompose label-exactly;
    non-members must raise NotClassMember.  In triple mode no pentagon leaf
    may appear.  Returns per-n counts plus mismatch descriptions.
    """
    rows = []
    for n in range(max_n + 1):
        row = SweepRow(n=n)
        for g in labeled_graphs(n):
            row.total += 1
            member = is_class_member(g, triple=triple)
            if not member:
                try:
                    decompose(g, triple=triple, observer=observer)
                except NotClassMember:
                    pass
                else:
                    row.mismatches.append(f"n={n}: decompose accepted a non-member {g.edges()}")
                continue
            row.members += 1
            if split_certificate(g) is not None:
                row.split_members += 1
            if find_proper_homogeneous_set(g) is None:
                row.prime_members += 1
            if find_induced(g, PatternKind.C5) is not None:
                row.pentagon_members += 1
            try:
                tree = decompose(g, triple=triple, observer=observer)
            except Exception as exc:
                row.mismatches.append(f"n={n}: decompose failed on member {g.edges()}: {exc}")
                continue
            report = verify_tree(tree, g)
            if not report.ok:
                row.mismatches.append(f"n={n}: verify failed on {g.edges()}: {report.failures[:1]}")
                continue
            if recompose(tree) != g:
                row.mismatches.append(f"n={n}: recomposition mismatch on {g.edges()}")
                continue
            if triple and report.leaf_counts.get("pentagon"):
                row.mismatches.append(f"n={n}: pentagon leaf in triple mode on {g.edges()}")
                continue
            if on_member is not None:
                on_member(g, tree)
        rows.append(row)
    return SweepResult(rows=rows)


def member_masks(n: int) -> list[int]:
    """Edge masks of the n-vertex class members (pentagon allowed)."""
    pairs = pair_table(n)
    out = []
    for mask in range(1 << len(pairs)):
        if is_class_member(graph_from_pair_mask(n, mask, pairs)):
            out.append(mask)
    return out


def extend_members(n: int, base_masks: list[int]) -> Iterator[Graph]:
    """All (n+1)-vertex members, derived from the n-vertex member masks.

    Every member on n+1 vertices restricts to a member on the first n, so
    attaching the new vertex to each base member in all 2^n ways and
    checking only patterns through the new vertex covers the class exactly.
    """
    pairs = pair_table(n + 1)
    new_vertex = n
    for base in base_masks:
        for att in range(1 << n):
            mask = base | att << (n * (n - 1) // 2)
            g = graph_from_pair_mask(n + 1, mask, pairs)
            if contains_induced_using(g, PatternKind.P5, new_vertex):
                continue
            if contains_induced_using(g, PatternKind.HOUSE, new_vertex):
                continue
            yield g
